//! Shared error type for the whole engine.
//!
//! Every fallible operation in this crate returns [`Error`]. Variants are
//! split into two families: *validation* errors mean the caller handed us
//! parameters that violate a documented precondition, while *computation*
//! errors mean a run hit a singular configuration (division by zero, a
//! coincident-variable determinant, an exhausted sampler) that well-formed
//! parameters can still trigger. The CLI maps the two families to distinct
//! exit codes.

use thiserror::Error;

/// Alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact division by a zero scalar.
    #[error("division by zero")]
    DivisionByZero,

    /// The seeded sampler could not satisfy the constraint set within its
    /// draw budget.
    #[error("constraint set unsatisfiable after {0} draws")]
    ConstraintUnsatisfiable(usize),

    /// A polynomial or constraint mentions a variable the evaluation point
    /// does not assign.
    #[error("no assignment for variable `{0}`")]
    UnboundVariable(String),

    /// A partition does not fit on the requested chain.
    #[error("partition does not fit: first part {part} needs chain length >= {needed}, have {chain_len}")]
    BoxOverflow {
        part: usize,
        needed: usize,
        chain_len: usize,
    },

    /// A partition violates the width bound required by an identity
    /// (first part larger than the rectangle allows).
    #[error(
        "partition profile violates the identity hypothesis: first part {first} exceeds {bound}"
    )]
    ProfileViolation { first: usize, bound: usize },

    /// The rational change of variables is singular at the given value.
    #[error("variable map singular at {0}")]
    SingularMap(String),

    /// Variables required to be pairwise distinct coincide.
    #[error("coincident values in a list required to be pairwise distinct")]
    CoincidentVariables,

    /// A factorial power asked for more alphabet entries than supplied.
    #[error("factorial alphabet too short: need {needed} entries, have {have}")]
    AlphabetTooShort { needed: usize, have: usize },

    /// A symbolic expansion would involve more variables than the
    /// supported budget.
    #[error("symbolic expansion budget exceeded: {vars} variables, limit {limit}")]
    BudgetExceeded { vars: usize, limit: usize },

    /// An exact polynomial division left a nonzero remainder.
    #[error("inexact polynomial division")]
    InexactDivision,

    /// An operation defined only away from q = 0 received q = 0.
    #[error("q must be nonzero for this operation")]
    ZeroQ,

    /// Malformed input that no other variant describes.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Stable machine-readable name for diagnostics (the variant name as
    /// written, so scripts can match on it).
    pub fn name(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::ConstraintUnsatisfiable(_) => "ConstraintUnsatisfiable",
            Error::UnboundVariable(_) => "UnboundVariable",
            Error::BoxOverflow { .. } => "BoxOverflow",
            Error::ProfileViolation { .. } => "ProfileViolation",
            Error::SingularMap(_) => "SingularMap",
            Error::CoincidentVariables => "CoincidentVariables",
            Error::AlphabetTooShort { .. } => "AlphabetTooShort",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::InexactDivision => "InexactDivision",
            Error::ZeroQ => "ZeroQ",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }

    /// True when the error reports parameters that violate a documented
    /// precondition, as opposed to a computation that hit a singular point.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::ConstraintUnsatisfiable(_)
                | Error::BoxOverflow { .. }
                | Error::ProfileViolation { .. }
                | Error::AlphabetTooShort { .. }
                | Error::BudgetExceeded { .. }
                | Error::ZeroQ
                | Error::InvalidInput(_)
        )
    }
}
