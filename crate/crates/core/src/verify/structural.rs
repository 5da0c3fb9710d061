//! Structural checks on the vertex weights themselves: the braid relation,
//! particle-number conservation, the degenerate weight table, and the
//! closed-form operator actions on reference states. These underpin every
//! other identity — if one of them broke, the route comparisons would fail
//! for reasons unrelated to the statements under test.

use crate::combinatorics::k_subsets;
use crate::error::Result;
use crate::lattice::{
    apply_barred, apply_monodromy, five_vertex_entry, r_entry, yang_baxter_holds, Element, RMatrix,
    SpinState,
};
use crate::point::{numbered, sample_point, Constraint};
use crate::scalar::Scalar;
use crate::verify::commutation::check_states;
use crate::verify::report::{assignment, point_seed, IdentityReport, ReportBuilder};

/// The braid relation for the weight matrix, at sampled generic `q` and at
/// the `q = 0` degeneration of the same spectral parameters.
pub fn verify_yang_baxter(points: usize, seed: u64) -> Result<IdentityReport> {
    let variables = ["u", "v", "w", "q"].map(String::from);
    let mut builder = ReportBuilder::new("yang-baxter").param("q", "sampled and 0");
    for index in 0..points {
        let point = sample_point(point_seed(seed, index), &variables, &[])?;
        let u = point.require("u")?;
        let v = point.require("v")?;
        let w = point.require("w")?;
        let q = point.require("q")?;
        builder.check_with(
            yang_baxter_holds(u, v, w, q),
            || assignment(&point, &[]),
            || "braid relation violated".to_string(),
            || "braid relation".to_string(),
        );
        builder.check_with(
            yang_baxter_holds(u, v, w, &Scalar::zero()),
            || assignment(&point, &[("q", "0".to_string())]),
            || "braid relation violated".to_string(),
            || "braid relation".to_string(),
        );
    }
    Ok(builder.finish())
}

/// Particle-number conservation: every occupation-changing weight is zero,
/// for the generic matrix and the degenerate one.
pub fn verify_ice_rule(points: usize, seed: u64) -> Result<IdentityReport> {
    let variables = ["u", "w", "q"].map(String::from);
    let mut builder = ReportBuilder::new("ice-rule").param("q", "sampled and 0");
    for index in 0..points {
        let point = sample_point(point_seed(seed, index), &variables, &[])?;
        let u = point.require("u")?;
        let w = point.require("w")?;
        let q = point.require("q")?;
        builder.check_with(
            RMatrix::new(u, w, q).ice_rule_holds(),
            || assignment(&point, &[("matrix", "generic".to_string())]),
            || "occupation-changing weight nonzero".to_string(),
            || "conserving".to_string(),
        );
        builder.check_with(
            RMatrix::five_vertex(u, w).ice_rule_holds(),
            || assignment(&point, &[("matrix", "degenerate".to_string())]),
            || "occupation-changing weight nonzero".to_string(),
            || "conserving".to_string(),
        );
    }
    Ok(builder.finish())
}

/// The independently tabulated degenerate weights agree with the generic
/// weights at `q = 0`, across all sixteen index combinations.
pub fn verify_five_vertex_table(points: usize, seed: u64) -> Result<IdentityReport> {
    let variables = ["u", "w"].map(String::from);
    let zero = Scalar::zero();
    let mut builder = ReportBuilder::new("five-vertex-table").param("q", "0");
    for index in 0..points {
        let point = sample_point(point_seed(seed, index), &variables, &[])?;
        let u = point.require("u")?;
        let w = point.require("w")?;
        for a_out in 0..2u8 {
            for b_out in 0..2u8 {
                for a_in in 0..2u8 {
                    for b_in in 0..2u8 {
                        let table = five_vertex_entry(u, w, a_out, b_out, a_in, b_in);
                        let generic = r_entry(u, w, &zero, a_out, b_out, a_in, b_in);
                        builder.check_scalars(
                            || {
                                assignment(
                                    &point,
                                    &[("entry", format!("{a_out}{b_out}{a_in}{b_in}"))],
                                )
                            },
                            &table,
                            &generic,
                        );
                    }
                }
            }
        }
    }
    Ok(builder.finish())
}

/// Closed-form operator actions on the reference states: the preserving row
/// operator rescales the empty chain at any `q`; the barred preserving
/// operator rescales the fully occupied chain; and the frozen overlap of
/// barred creation operators is a plain power product.
pub fn verify_vacuum_actions(points: usize, seed: u64) -> Result<IdentityReport> {
    let n = 3;
    let mut variables = numbered("u", n);
    variables.extend(numbered("w", n));
    variables.push("q".to_string());
    let constraints = vec![
        Constraint::Avoid("q".to_string(), Scalar::zero()),
        Constraint::Avoid("q".to_string(), Scalar::one()),
    ];
    let zero = Scalar::zero();
    let mut builder = ReportBuilder::new("vacuum-action").param("n", n);
    for index in 0..points {
        let point = sample_point(point_seed(seed, index), &variables, &constraints)?;
        let u = point.values("u", n)?;
        let w = point.values("w", n)?;
        let q = point.require("q")?;

        // Preserving row operator on the empty chain, generic q.
        let vacuum = SpinState::vacuum(n);
        let acted = apply_monodromy(Element::D, &u[0], &w, q, &vacuum);
        let eigenvalue = w
            .iter()
            .fold(Scalar::one(), |acc, w_i| &acc * &(&u[0] - w_i));
        let expected = vacuum.scale(&eigenvalue);
        check_states(
            &mut builder,
            &point,
            &[("check", "row-vacuum".to_string())],
            &acted,
            &expected,
        );

        // Barred preserving operator on the fully occupied chain.
        let full = SpinState::full(n);
        let acted = apply_barred(Element::A, &w[0], &u, &zero, &full);
        let eigenvalue = u
            .iter()
            .fold(Scalar::one(), |acc, u_i| &acc * &(u_i - &w[0]));
        let expected = full.scale(&eigenvalue);
        check_states(
            &mut builder,
            &point,
            &[("check", "barred-vacuum".to_string())],
            &acted,
            &expected,
        );

        // Frozen overlap: k barred creation operators between the fully
        // occupied ket and the k-depleted bra give ∏ u_j^k regardless of
        // which site parameters act.
        for k in 1..n {
            let bra_mask = ((1u64 << n) - 1) ^ ((1u64 << k) - 1);
            let overlap_value = u
                .iter()
                .fold(Scalar::one(), |acc, u_j| &acc * &u_j.powu(k as u32));
            for subset in k_subsets(n, k) {
                let mut state = SpinState::full(n);
                for &j in &subset.chosen {
                    state = apply_barred(Element::C, &w[j - 1], &u, &zero, &state);
                }
                let amplitude = state.amplitude(bra_mask);
                let label = subset
                    .chosen
                    .iter()
                    .map(|j| j.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                builder.check_scalars(
                    || {
                        assignment(
                            &point,
                            &[
                                ("check", "frozen-overlap".to_string()),
                                ("k", k.to_string()),
                                ("S", label.clone()),
                            ],
                        )
                    },
                    &amplitude,
                    &overlap_value,
                );
            }
        }
    }
    Ok(builder.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_structural_cells_pass() {
        assert!(verify_yang_baxter(5, 3).unwrap().is_verified());
        assert!(verify_ice_rule(3, 5).unwrap().is_verified());
        assert!(verify_five_vertex_table(3, 7).unwrap().is_verified());
        assert!(verify_vacuum_actions(3, 11).unwrap().is_verified());
    }

    #[test]
    fn yang_baxter_counts_both_regimes() {
        let report = verify_yang_baxter(4, 13).unwrap();
        assert_eq!(report.points, 8);
    }
}
