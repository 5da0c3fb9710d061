//! Machine verification of the identities the engine implements. Each
//! submodule produces [`report::IdentityReport`] cells: seeded, exact
//! (rational-arithmetic) comparisons of independent evaluation routes, with
//! counterexample witnesses carrying the full variable assignment and both
//! sides whenever a comparison fails.

pub mod commutation;
pub mod correspondence;
pub mod identities;
pub mod prop51;
pub mod report;
pub mod structural;
pub mod suite;

pub use commutation::{verify_commutation, verify_commutation_by_label, Relation, RelationSizes};
pub use correspondence::{verify_correspondence, Correspondence};
pub use identities::{
    verify_consistency_triangle, verify_duality, verify_guo_sun, verify_q_deformed,
    verify_rectangular, verify_rectangular_symbolic, BetaMode,
};
pub use prop51::verify_prop51;
pub use report::{FailureWitness, IdentityReport, Verdict};
pub use structural::{
    verify_five_vertex_table, verify_ice_rule, verify_vacuum_actions, verify_yang_baxter,
};
pub use suite::{run_suite, SuiteReport};
