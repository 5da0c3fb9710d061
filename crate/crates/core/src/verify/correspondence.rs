//! Cross-route correspondences: each check pins two independent evaluation
//! routes for the same quantity against each other — lattice wavefunctions,
//! permutation sums, polynomial evaluations with the `∏ u_j^L` prefactor,
//! and operator-string overlaps.
//!
//! Row parameters map to polynomial variables by `z = (u − 1)/u` and site
//! parameters by `α = 1 − w`; under that change the `q = 0` wavefunction
//! becomes a factorial Grothendieck polynomial at `β = −1` up to the
//! prefactor, and the generic-`q` wavefunction matches the permutation sum.

use crate::combinatorics::{
    build_mu, k_subsets, partitions_in_box, positions_from_partition, variable_map, MapDirection,
    Partition, PositionVector,
};
use crate::error::{Error, Result};
use crate::grothendieck::{grothendieck_det, FactorialAlphabet};
use crate::lattice::{
    apply_barred, apply_monodromy, barred_wavefunction, monodromy_element, wavefunction, Element,
    SpinOperator, SpinState,
};
use crate::point::{numbered, sample_point, Constraint};
use crate::scalar::Scalar;
use crate::symfunc::{f_bar_sum, f_sum};
use crate::verify::identities::{partition_label, positions_label, rectangle};
use crate::verify::report::{assignment, point_seed, IdentityReport, ReportBuilder};

/// Largest number of row parameters a correspondence check accepts.
const MAX_ROWS: usize = 4;
/// Largest chain length a correspondence check accepts.
const MAX_CHAIN: usize = 8;

/// One two-route (or three-route) correspondence, named by its role.
/// [`Correspondence::label`] gives the stable external token used by the
/// command-line interface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Correspondence {
    /// Wavefunction equals the permutation sum, generic `q`, any positions.
    RowString,
    /// `q = 0` wavefunction equals `∏ u_j^L` times the polynomial.
    RowToPolynomial,
    /// The widened partition's wavefunction equals `∏ u_j^L` times the
    /// widened polynomial.
    WidenedToPolynomial,
    /// Creation-string overlaps equal `∏ u_j^m` times polynomials on the
    /// chosen row subset.
    OverlapToPolynomial,
    /// The rectangular wavefunction equals both the column-operator overlap
    /// and the rectangular polynomial.
    RectangularFreezing,
    /// Wavefunction equals the permutation sum at the widened positions,
    /// generic `q`.
    DeformedRowString,
    /// Barred wavefunction equals the barred permutation sum.
    BarredString,
    /// Overlaps of a thinned creation string equal wavefunctions with the
    /// removed rows dropped.
    RowRemoval,
}

impl Correspondence {
    pub const ALL: [Correspondence; 8] = [
        Correspondence::RowString,
        Correspondence::RowToPolynomial,
        Correspondence::WidenedToPolynomial,
        Correspondence::OverlapToPolynomial,
        Correspondence::RectangularFreezing,
        Correspondence::DeformedRowString,
        Correspondence::BarredString,
        Correspondence::RowRemoval,
    ];

    /// The stable external token for this correspondence.
    pub fn label(self) -> &'static str {
        match self {
            Correspondence::RowString => "2.10",
            Correspondence::RowToPolynomial => "2.12",
            Correspondence::WidenedToPolynomial => "3.1",
            Correspondence::OverlapToPolynomial => "3.13",
            Correspondence::RectangularFreezing => "4.3",
            Correspondence::DeformedRowString => "5.1",
            Correspondence::BarredString => "5.4",
            Correspondence::RowRemoval => "5.16",
        }
    }

    pub fn from_label(label: &str) -> Result<Correspondence> {
        Correspondence::ALL
            .into_iter()
            .find(|c| c.label() == label)
            .ok_or_else(|| Error::InvalidInput(format!("unknown correspondence `{label}`")))
    }
}

fn check_budget(rows: usize, chain: usize) -> Result<()> {
    if rows > MAX_ROWS || chain > MAX_CHAIN {
        return Err(Error::InvalidInput(format!(
            "correspondence budget: need rows <= {MAX_ROWS} and chain <= {MAX_CHAIN}, \
             got rows={rows}, chain={chain}"
        )));
    }
    Ok(())
}

fn z_values(u: &[Scalar]) -> Result<Vec<Scalar>> {
    u.iter()
        .map(|value| variable_map(MapDirection::UToZ, value))
        .collect()
}

fn alpha_values(w: &[Scalar]) -> Result<Vec<Scalar>> {
    w.iter()
        .map(|value| variable_map(MapDirection::WToAlpha, value))
        .collect()
}

fn power_product(values: &[Scalar], exponent: usize) -> Scalar {
    values.iter().fold(Scalar::one(), |acc, value| {
        &acc * &value.powu(exponent as u32)
    })
}

fn subset_label(chosen: &[usize]) -> String {
    if chosen.is_empty() {
        "-".to_string()
    } else {
        chosen
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// The sweep targets: the given partition padded to `rows` rows, or every
/// partition with `rows` rows fitting in a `rows × width` box.
fn partition_targets(
    lambda: Option<&Partition>,
    rows: usize,
    width: usize,
) -> Result<Vec<Partition>> {
    match lambda {
        Some(lambda) => Ok(vec![lambda.padded(rows)?]),
        None => Ok(partitions_in_box(rows, width)),
    }
}

fn lambda_param(lambda: Option<&Partition>) -> String {
    lambda.map_or_else(|| "box-sweep".to_string(), partition_label)
}

/// Dispatches one correspondence check. The meaning of `n`, `m`, `k`
/// follows the underlying statement: `n` counts row parameters, `m` is the
/// chain length (`2.10`, `2.12`, `3.13`, `5.16`) or the site-parameter
/// count before widening (`3.1`, `4.3`, `5.1`), and `k` is the frozen-row
/// split where one exists (`2.10` and `2.12` ignore it). Correspondences
/// tied to a fixed shape reject an explicit partition.
pub fn verify_correspondence(
    which: Correspondence,
    n: usize,
    m: usize,
    k: usize,
    lambda: Option<&Partition>,
    points: usize,
    seed: u64,
) -> Result<IdentityReport> {
    let reject_lambda = || -> Result<()> {
        if lambda.is_some() {
            return Err(Error::InvalidInput(format!(
                "correspondence {} determines its positions; drop the partition argument",
                which.label()
            )));
        }
        Ok(())
    };
    match which {
        Correspondence::RowString => row_string(n, m, lambda, points, seed),
        Correspondence::RowToPolynomial => row_to_polynomial(n, m, lambda, points, seed),
        Correspondence::WidenedToPolynomial => widened_to_polynomial(n, m, k, lambda, points, seed),
        Correspondence::OverlapToPolynomial => overlap_to_polynomial(n, m, k, lambda, points, seed),
        Correspondence::RectangularFreezing => {
            reject_lambda()?;
            rectangular_freezing(n, m, k, points, seed)
        }
        Correspondence::DeformedRowString => deformed_row_string(n, m, k, lambda, points, seed),
        Correspondence::BarredString => {
            reject_lambda()?;
            barred_string(n, k, points, seed)
        }
        Correspondence::RowRemoval => {
            reject_lambda()?;
            row_removal(n, m, k, points, seed)
        }
    }
}

/// Wavefunction vs permutation sum on an `m`-site chain at generic `q`,
/// for the positions of each target partition.
fn row_string(
    n: usize,
    chain: usize,
    lambda: Option<&Partition>,
    points: usize,
    seed: u64,
) -> Result<IdentityReport> {
    if n == 0 || n > chain {
        return Err(Error::InvalidInput(format!(
            "need 1 <= n <= chain: n={n}, chain={chain}"
        )));
    }
    check_budget(n, chain)?;
    let targets = partition_targets(lambda, n, chain - n)?;
    let u_names = numbered("u", n);
    let mut variables = u_names.clone();
    variables.extend(numbered("w", chain));
    variables.push("q".to_string());
    let constraints = vec![
        Constraint::Distinct(u_names),
        Constraint::Avoid("q".to_string(), Scalar::zero()),
        Constraint::Avoid("q".to_string(), Scalar::one()),
    ];
    let mut builder = ReportBuilder::new("correspondence:2.10")
        .param("n", n)
        .param("m", chain)
        .param("lambda", lambda_param(lambda))
        .param("q", "sampled");
    for index in 0..points {
        let point = sample_point(point_seed(seed, index), &variables, &constraints)?;
        let u = point.values("u", n)?;
        let w = point.values("w", chain)?;
        let q = point.require("q")?.clone();
        for target in &targets {
            let x = positions_from_partition(target, chain)?;
            let lhs = wavefunction(&u, &w, &x, &q)?;
            let rhs = f_sum(&u, &w, &x, &q)?;
            builder.check_scalars(
                || assignment(&point, &[("x", positions_label(&x))]),
                &lhs,
                &rhs,
            );
        }
    }
    Ok(builder.finish())
}

/// `q = 0` wavefunction vs `∏ u_j^L` times the determinant evaluation, for
/// the positions of each target partition.
fn row_to_polynomial(
    n: usize,
    chain: usize,
    lambda: Option<&Partition>,
    points: usize,
    seed: u64,
) -> Result<IdentityReport> {
    if n == 0 || n > chain {
        return Err(Error::InvalidInput(format!(
            "need 1 <= n <= chain: n={n}, chain={chain}"
        )));
    }
    check_budget(n, chain)?;
    let targets = partition_targets(lambda, n, chain - n)?;
    let u_names = numbered("u", n);
    let mut variables = u_names.clone();
    variables.extend(numbered("w", chain));
    let constraints = vec![Constraint::Distinct(u_names)];
    let q = Scalar::zero();
    let minus_one = -Scalar::one();
    let mut builder = ReportBuilder::new("correspondence:2.12")
        .param("n", n)
        .param("m", chain)
        .param("lambda", lambda_param(lambda))
        .param("q", "0");
    for index in 0..points {
        let point = sample_point(point_seed(seed, index), &variables, &constraints)?;
        let u = point.values("u", n)?;
        let w = point.values("w", chain)?;
        let z = z_values(&u)?;
        let alphabet = FactorialAlphabet::new(alpha_values(&w)?, minus_one.clone());
        let prefactor = power_product(&u, chain);
        for target in &targets {
            let x = positions_from_partition(target, chain)?;
            let lhs = wavefunction(&u, &w, &x, &q)?;
            let rhs = &prefactor * &grothendieck_det(target, &z, &alphabet)?;
            builder.check_scalars(
                || assignment(&point, &[("x", positions_label(&x))]),
                &lhs,
                &rhs,
            );
        }
    }
    Ok(builder.finish())
}

/// `q = 0` wavefunction at the widened positions vs `∏ u_j^L` times the
/// widened partition's polynomial, on the chain of `m + n − k` sites.
fn widened_to_polynomial(
    n: usize,
    m: usize,
    k: usize,
    lambda: Option<&Partition>,
    points: usize,
    seed: u64,
) -> Result<IdentityReport> {
    if n == 0 || k > n.min(m) {
        return Err(Error::InvalidInput(format!(
            "need k <= min(n, m) and n >= 1: k={k}, n={n}, m={m}"
        )));
    }
    let chain = m + n - k;
    check_budget(n, chain)?;
    let targets = partition_targets(lambda, k, m - k)?;
    let u_names = numbered("u", n);
    let mut variables = u_names.clone();
    variables.extend(numbered("w", chain));
    let constraints = vec![Constraint::Distinct(u_names)];
    let q = Scalar::zero();
    let minus_one = -Scalar::one();
    let mut builder = ReportBuilder::new("correspondence:3.1")
        .param("n", n)
        .param("m", m)
        .param("k", k)
        .param("lambda", lambda_param(lambda))
        .param("q", "0");
    for index in 0..points {
        let point = sample_point(point_seed(seed, index), &variables, &constraints)?;
        let u = point.values("u", n)?;
        let w = point.values("w", chain)?;
        let z = z_values(&u)?;
        let alphabet = FactorialAlphabet::new(alpha_values(&w)?, minus_one.clone());
        let prefactor = power_product(&u, chain);
        for target in &targets {
            let mu = build_mu(target, m, n)?;
            let x = positions_from_partition(&mu, chain)?;
            let lhs = wavefunction(&u, &w, &x, &q)?;
            let rhs = &prefactor * &grothendieck_det(&mu, &z, &alphabet)?;
            builder.check_scalars(
                || {
                    assignment(
                        &point,
                        &[
                            ("lambda", partition_label(target)),
                            ("x", positions_label(&x)),
                        ],
                    )
                },
                &lhs,
                &rhs,
            );
        }
    }
    Ok(builder.finish())
}

/// Creation-string overlaps vs `∏_{i∈S} u_i^m` times the polynomial on the
/// chosen row subset, for every `k`-subset `S` of the `n` rows.
fn overlap_to_polynomial(
    n: usize,
    m: usize,
    k: usize,
    lambda: Option<&Partition>,
    points: usize,
    seed: u64,
) -> Result<IdentityReport> {
    if n == 0 || k > n.min(m) {
        return Err(Error::InvalidInput(format!(
            "need k <= min(n, m) and n >= 1: k={k}, n={n}, m={m}"
        )));
    }
    check_budget(n, m)?;
    let targets = partition_targets(lambda, k, m - k)?;
    let u_names = numbered("u", n);
    let mut variables = u_names.clone();
    variables.extend(numbered("w", m));
    let constraints = vec![Constraint::Distinct(u_names)];
    let q = Scalar::zero();
    let minus_one = -Scalar::one();
    let mut builder = ReportBuilder::new("correspondence:3.13")
        .param("n", n)
        .param("m", m)
        .param("k", k)
        .param("lambda", lambda_param(lambda))
        .param("q", "0");
    for index in 0..points {
        let point = sample_point(point_seed(seed, index), &variables, &constraints)?;
        let u = point.values("u", n)?;
        let w = point.values("w", m)?;
        let z = z_values(&u)?;
        let alphabet = FactorialAlphabet::new(alpha_values(&w)?, minus_one.clone());
        for subset in k_subsets(n, k) {
            let mut state = SpinState::vacuum(m);
            for &i in &subset.chosen {
                state = apply_monodromy(Element::B, &u[i - 1], &w, &q, &state);
            }
            let z_subset: Vec<Scalar> = subset.chosen.iter().map(|&i| z[i - 1].clone()).collect();
            let u_subset: Vec<Scalar> = subset.chosen.iter().map(|&i| u[i - 1].clone()).collect();
            let prefactor = power_product(&u_subset, m);
            for target in &targets {
                let x = positions_from_partition(target, m)?;
                let lhs = state.amplitude(x.bitmask());
                let rhs = &prefactor * &grothendieck_det(target, &z_subset, &alphabet)?;
                builder.check_scalars(
                    || {
                        assignment(
                            &point,
                            &[
                                ("S", subset_label(&subset.chosen)),
                                ("lambda", partition_label(target)),
                            ],
                        )
                    },
                    &lhs,
                    &rhs,
                );
            }
        }
    }
    Ok(builder.finish())
}

/// Three routes to the rectangular value: the row wavefunction at the
/// frozen positions, the barred column overlap with its `∏ u_j^{n−k}`
/// prefactor, and `∏ u_j^L` times the rectangular polynomial.
fn rectangular_freezing(
    n: usize,
    m: usize,
    k: usize,
    points: usize,
    seed: u64,
) -> Result<IdentityReport> {
    if n == 0 || k > n.min(m) {
        return Err(Error::InvalidInput(format!(
            "need k <= min(n, m) and n >= 1: k={k}, n={n}, m={m}"
        )));
    }
    let chain = m + n - k;
    check_budget(n, chain)?;
    let mut positions: Vec<usize> = (1..=k).collect();
    positions.extend(m + 1..=chain);
    let x = PositionVector::new(positions, chain)?;
    let shape = rectangle(n, m, k);
    let bra_mask = ((1u64 << n) - 1) ^ ((1u64 << k) - 1);
    let u_names = numbered("u", n);
    let mut variables = u_names.clone();
    variables.extend(numbered("w", chain));
    let constraints = vec![Constraint::Distinct(u_names)];
    let q = Scalar::zero();
    let minus_one = -Scalar::one();
    let mut builder = ReportBuilder::new("correspondence:4.3")
        .param("n", n)
        .param("m", m)
        .param("k", k)
        .param("q", "0");
    for index in 0..points {
        let point = sample_point(point_seed(seed, index), &variables, &constraints)?;
        let u = point.values("u", n)?;
        let w = point.values("w", chain)?;
        let z = z_values(&u)?;
        let alphabet = FactorialAlphabet::new(alpha_values(&w)?, minus_one.clone());
        let polynomial = &power_product(&u, chain) * &grothendieck_det(&shape, &z, &alphabet)?;

        let lattice = wavefunction(&u, &w, &x, &q)?;
        builder.check_scalars(
            || assignment(&point, &[("route", "lattice".to_string())]),
            &lattice,
            &polynomial,
        );

        let mut state = SpinState::full(n);
        for w_j in &w[..k] {
            state = apply_barred(Element::C, w_j, &u, &q, &state);
        }
        for w_j in &w[k..m] {
            state = apply_barred(Element::A, w_j, &u, &q, &state);
        }
        let columns = &power_product(&u, n - k) * &state.amplitude(bra_mask);
        builder.check_scalars(
            || assignment(&point, &[("route", "columns".to_string())]),
            &columns,
            &polynomial,
        );
    }
    Ok(builder.finish())
}

/// Wavefunction vs permutation sum at the widened positions, generic `q`.
fn deformed_row_string(
    n: usize,
    m: usize,
    k: usize,
    lambda: Option<&Partition>,
    points: usize,
    seed: u64,
) -> Result<IdentityReport> {
    if n == 0 || k > n.min(m) {
        return Err(Error::InvalidInput(format!(
            "need k <= min(n, m) and n >= 1: k={k}, n={n}, m={m}"
        )));
    }
    let chain = m + n - k;
    check_budget(n, chain)?;
    let targets = partition_targets(lambda, k, m - k)?;
    let u_names = numbered("u", n);
    let mut variables = u_names.clone();
    variables.extend(numbered("w", chain));
    variables.push("q".to_string());
    let constraints = vec![
        Constraint::Distinct(u_names),
        Constraint::Avoid("q".to_string(), Scalar::zero()),
        Constraint::Avoid("q".to_string(), Scalar::one()),
    ];
    let mut builder = ReportBuilder::new("correspondence:5.1")
        .param("n", n)
        .param("m", m)
        .param("k", k)
        .param("lambda", lambda_param(lambda))
        .param("q", "sampled");
    for index in 0..points {
        let point = sample_point(point_seed(seed, index), &variables, &constraints)?;
        let u = point.values("u", n)?;
        let w = point.values("w", chain)?;
        let q = point.require("q")?.clone();
        for target in &targets {
            let mu = build_mu(target, m, n)?;
            let x = positions_from_partition(&mu, chain)?;
            let lhs = wavefunction(&u, &w, &x, &q)?;
            let rhs = f_sum(&u, &w, &x, &q)?;
            builder.check_scalars(
                || {
                    assignment(
                        &point,
                        &[
                            ("lambda", partition_label(target)),
                            ("x", positions_label(&x)),
                        ],
                    )
                },
                &lhs,
                &rhs,
            );
        }
    }
    Ok(builder.finish())
}

/// Barred wavefunction vs barred permutation sum, for every row vector `y`
/// with `n − k` entries.
fn barred_string(n: usize, k: usize, points: usize, seed: u64) -> Result<IdentityReport> {
    if n == 0 || k >= n {
        return Err(Error::InvalidInput(format!(
            "need 0 <= k < n so at least one preserved row exists: k={k}, n={n}"
        )));
    }
    let r = n - k;
    check_budget(n, r)?;
    let w_names = numbered("w", r);
    let mut variables = numbered("u", n);
    variables.extend(w_names.iter().cloned());
    variables.push("q".to_string());
    let constraints = vec![
        Constraint::Distinct(w_names),
        Constraint::Avoid("q".to_string(), Scalar::zero()),
        Constraint::Avoid("q".to_string(), Scalar::one()),
    ];
    let mut builder = ReportBuilder::new("correspondence:5.4")
        .param("n", n)
        .param("k", k)
        .param("q", "sampled");
    for index in 0..points {
        let point = sample_point(point_seed(seed, index), &variables, &constraints)?;
        let u = point.values("u", n)?;
        let w = point.values("w", r)?;
        let q = point.require("q")?.clone();
        for subset in k_subsets(n, r) {
            let y = PositionVector::new(subset.chosen.clone(), n)?;
            let lhs = barred_wavefunction(&w, &u, &y, &q)?;
            let rhs = f_bar_sum(&w, &u, &y, &q)?;
            builder.check_scalars(
                || assignment(&point, &[("y", positions_label(&y))]),
                &lhs,
                &rhs,
            );
        }
    }
    Ok(builder.finish())
}

/// Overlaps of a thinned creation string (operators composed first, then
/// applied) vs the wavefunction evaluated on the surviving rows, for every
/// removal set and every bra position vector.
fn row_removal(n: usize, m: usize, k: usize, points: usize, seed: u64) -> Result<IdentityReport> {
    if k > n.min(m) {
        return Err(Error::InvalidInput(format!(
            "need k <= min(n, m): k={k}, n={n}, m={m}"
        )));
    }
    check_budget(n, m)?;
    let u_names = numbered("u", n);
    let mut variables = u_names.clone();
    variables.extend(numbered("w", m));
    variables.push("q".to_string());
    let constraints = vec![
        Constraint::Distinct(u_names),
        Constraint::Avoid("q".to_string(), Scalar::zero()),
        Constraint::Avoid("q".to_string(), Scalar::one()),
    ];
    let mut builder = ReportBuilder::new("correspondence:5.16")
        .param("n", n)
        .param("m", m)
        .param("k", k)
        .param("q", "sampled");
    for index in 0..points {
        let point = sample_point(point_seed(seed, index), &variables, &constraints)?;
        let u = point.values("u", n)?;
        let w = point.values("w", m)?;
        let q = point.require("q")?.clone();
        for removal in k_subsets(n, n - k) {
            let survivors = &removal.complement;
            let mut op = SpinOperator::identity(m);
            for &i in survivors {
                op = monodromy_element(Element::B, &u[i - 1], &w, &q).compose(&op);
            }
            let state = op.apply(&SpinState::vacuum(m));
            let u_survivors: Vec<Scalar> = survivors.iter().map(|&i| u[i - 1].clone()).collect();
            for x_subset in k_subsets(m, k) {
                let x = PositionVector::new(x_subset.chosen.clone(), m)?;
                let lhs = state.amplitude(x.bitmask());
                let rhs = wavefunction(&u_survivors, &w, &x, &q)?;
                builder.check_scalars(
                    || {
                        assignment(
                            &point,
                            &[
                                ("removed", subset_label(&removal.chosen)),
                                ("x", positions_label(&x)),
                            ],
                        )
                    },
                    &lhs,
                    &rhs,
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
    fn labels_round_trip() {
        for c in Correspondence::ALL {
            assert_eq!(Correspondence::from_label(c.label()).unwrap(), c);
        }
        assert!(Correspondence::from_label("1.1").is_err());
    }

    #[test]
    fn row_string_sweep_holds() {
        let report =
            verify_correspondence(Correspondence::RowString, 2, 4, 0, None, 2, 11).unwrap();
        assert!(report.is_verified(), "{report:?}");
        assert_eq!(report.points, 2 * partitions_in_box(2, 2).len());
    }

    #[test]
    fn row_to_polynomial_sweep_holds() {
        let report =
            verify_correspondence(Correspondence::RowToPolynomial, 2, 4, 0, None, 2, 13).unwrap();
        assert!(report.is_verified(), "{report:?}");
    }

    #[test]
    fn empty_partition_gives_unit_polynomial() {
        let empty = Partition::empty();
        let report = verify_correspondence(
            Correspondence::RowToPolynomial,
            2,
            3,
            0,
            Some(&empty),
            3,
            17,
        )
        .unwrap();
        assert!(report.is_verified(), "{report:?}");
    }

    #[test]
    fn widened_and_overlap_routes_hold() {
        let lambda = Partition::new(vec![1]).unwrap();
        let report = verify_correspondence(
            Correspondence::WidenedToPolynomial,
            2,
            2,
            1,
            Some(&lambda),
            2,
            19,
        )
        .unwrap();
        assert!(report.is_verified(), "{report:?}");
        let report =
            verify_correspondence(Correspondence::OverlapToPolynomial, 3, 3, 1, None, 2, 23)
                .unwrap();
        assert!(report.is_verified(), "{report:?}");
    }

    #[test]
    fn rectangular_freezing_holds() {
        for (n, m, k) in [(2, 2, 1), (2, 3, 2), (3, 2, 1)] {
            let report =
                verify_correspondence(Correspondence::RectangularFreezing, n, m, k, None, 2, 29)
                    .unwrap();
            assert!(report.is_verified(), "({n},{m},{k}): {report:?}");
        }
    }

    #[test]
    fn deformed_row_string_holds() {
        let report =
            verify_correspondence(Correspondence::DeformedRowString, 2, 2, 1, None, 2, 31).unwrap();
        assert!(report.is_verified(), "{report:?}");
    }

    #[test]
    fn barred_string_holds() {
        for (n, k) in [(2, 1), (3, 1), (3, 2)] {
            let report =
                verify_correspondence(Correspondence::BarredString, n, 0, k, None, 2, 37).unwrap();
            assert!(report.is_verified(), "({n},{k}): {report:?}");
        }
    }

    #[test]
    fn row_removal_holds() {
        let report =
            verify_correspondence(Correspondence::RowRemoval, 3, 2, 1, None, 2, 41).unwrap();
        assert!(report.is_verified(), "{report:?}");
    }

    #[test]
    fn shape_bound_correspondences_reject_partitions() {
        let lambda = Partition::new(vec![1]).unwrap();
        for which in [
            Correspondence::RectangularFreezing,
            Correspondence::BarredString,
            Correspondence::RowRemoval,
        ] {
            let err = verify_correspondence(which, 2, 2, 1, Some(&lambda), 1, 1).unwrap_err();
            assert!(matches!(err, Error::InvalidInput(_)), "{which:?}: {err:?}");
        }
    }

    #[test]
    fn oversize_chain_is_rejected() {
        let err =
            verify_correspondence(Correspondence::RowString, 3, 9, 0, None, 1, 1).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }
}
