//! The headline polynomial identities: the subset-expansion identity for
//! widened partitions, the rectangular-shape identity, the duality formula
//! relating the two expansion directions, and the q-deformed expansion.
//!
//! Every verifier here compares sides computed by independent code paths
//! (determinant route, subset sums, permutation sums, lattice transfer) at
//! exactly sampled rational points, and the q-deformed verifier additionally
//! cross-checks its left side against the lattice route.

use crate::combinatorics::{build_mu, index_tuples, k_subsets, Partition, PositionVector};
use crate::error::{Error, Result};
use crate::grothendieck::{
    factorial_power, grothendieck_det, grothendieck_symbolic, oplus, BetaSpec, FactorialAlphabet,
};
use crate::lattice::wavefunction;
use crate::point::{numbered, sample_point, Constraint, EvaluationPoint};
use crate::poly::MultiPoly;
use crate::scalar::Scalar;
use crate::symfunc::{f_bar_sum, f_sum};
use crate::verify::report::{assignment, point_seed, IdentityReport, ReportBuilder};

/// How the deformation parameter of the polynomial family is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaMode {
    /// The lattice regime; all identities hold here.
    MinusOne,
    /// Sampled per point; only the subset-expansion identity is stated for
    /// general values.
    Sampled,
}

/// Human-readable label for a partition parameter.
pub fn partition_label(partition: &Partition) -> String {
    if partition.is_empty() {
        "-".to_string()
    } else {
        partition
            .parts()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Human-readable label for a position-vector parameter.
pub fn positions_label(x: &PositionVector) -> String {
    if x.is_empty() {
        "-".to_string()
    } else {
        x.positions()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn beta_label(mode: BetaMode) -> &'static str {
    match mode {
        BetaMode::MinusOne => "-1",
        BetaMode::Sampled => "sampled",
    }
}

/// The subset expansion of the widened polynomial: for each `k`-subset `S`
/// of the variable indices, the polynomial on the chosen variables times
/// `∏_{i∈S} (1+βz_i)^{n−k} ∏_{j∉S} [z_j|α]^m / ∏_{i∈S, j∉S} (z_j − z_i)`.
fn subset_expansion(
    lambda: &Partition,
    z: &[Scalar],
    alphabet: &FactorialAlphabet,
    m: usize,
    k: usize,
) -> Result<Scalar> {
    let n = z.len();
    let beta = alphabet.beta().clone();
    let mut total = Scalar::zero();
    for split in k_subsets(n, k) {
        let z_chosen: Vec<Scalar> = split.chosen.iter().map(|&i| z[i - 1].clone()).collect();
        let mut term = grothendieck_det(lambda, &z_chosen, alphabet)?;
        for &i in &split.chosen {
            term *= &(Scalar::one() + &(&beta * &z[i - 1])).powu((n - k) as u32);
        }
        for &j in &split.complement {
            term *= &factorial_power(&z[j - 1], alphabet, m)?;
        }
        for &i in &split.chosen {
            for &j in &split.complement {
                term = term.checked_div(&(&z[j - 1] - &z[i - 1]))?;
            }
        }
        total += &term;
    }
    Ok(total)
}

/// The factorial-variable expansion of the rectangular polynomial: for each
/// `k`-subset `S` of `{1, …, m}`,
/// `∏_{i∈S} (1−α_i)^{m−k} ∏_{j∉S} ∏_i (z_i ⊕ α_j) / ∏_{i∈S, j∉S} (α_j − α_i)`
/// in the `β = −1` regime.
fn factorial_expansion(z: &[Scalar], alphas: &[Scalar], k: usize) -> Result<Scalar> {
    let m = alphas.len();
    let minus_one = -Scalar::one();
    let one = Scalar::one();
    let mut total = Scalar::zero();
    for split in k_subsets(m, k) {
        let mut term = Scalar::one();
        for &i in &split.chosen {
            term *= &(&one - &alphas[i - 1]).powu((m - k) as u32);
        }
        for &j in &split.complement {
            for zi in z {
                term *= &oplus(zi, &alphas[j - 1], &minus_one);
            }
        }
        for &i in &split.chosen {
            for &j in &split.complement {
                term = term.checked_div(&(&alphas[j - 1] - &alphas[i - 1]))?;
            }
        }
        total += &term;
    }
    Ok(total)
}

/// The rectangular partition `((m−k)^{n−k}, 0^k)` with exactly `n` rows.
pub(crate) fn rectangle(n: usize, m: usize, k: usize) -> Partition {
    let mut parts = vec![m - k; n - k];
    parts.resize(n, 0);
    Partition::new(parts).expect("weakly decreasing by construction")
}

fn sample_symmetric_point(
    seed: u64,
    index: usize,
    n: usize,
    alphabet_len: usize,
    distinct_alpha: usize,
    extra_vars: &[&str],
    extra_constraints: &[Constraint],
) -> Result<EvaluationPoint> {
    let z_names = numbered("z", n);
    let a_names = numbered("a", alphabet_len);
    let mut variables = z_names.clone();
    variables.extend(a_names.iter().cloned());
    for name in extra_vars {
        variables.push((*name).to_string());
    }
    let mut constraints = vec![Constraint::Distinct(z_names)];
    if distinct_alpha > 1 {
        constraints.push(Constraint::Distinct(a_names[..distinct_alpha].to_vec()));
    }
    constraints.extend_from_slice(extra_constraints);
    sample_point(point_seed(seed, index), &variables, &constraints)
}

/// Verifies the widened-partition subset identity
/// `G_μ(z|α) = Σ_S G_λ(z_S|α) ∏_{i∈S}(1+βz_i)^{n−k} ∏_{j∉S}[z_j|α]^m / ∏(z_j−z_i)`
/// for `μ = ((m−k)^{n−k}, λ)`, with the left side on the determinant route.
pub fn verify_guo_sun(
    n: usize,
    m: usize,
    k: usize,
    lambda: &Partition,
    points: usize,
    seed: u64,
    beta: BetaMode,
) -> Result<IdentityReport> {
    if n == 0 || k == 0 || k > n.min(m) {
        return Err(Error::InvalidInput(format!(
            "need 1 <= k <= min(n, m): k={k}, n={n}, m={m}"
        )));
    }
    let lambda_k = lambda.padded(k)?;
    let mu = build_mu(&lambda_k, m, n)?;
    let alphabet_len = m.max(n + m - k - 1);
    let mut builder = ReportBuilder::new("guo-sun")
        .param("n", n)
        .param("m", m)
        .param("k", k)
        .param("lambda", partition_label(&lambda_k))
        .param("beta", beta_label(beta));
    let extra_vars: &[&str] = match beta {
        BetaMode::MinusOne => &[],
        BetaMode::Sampled => &["beta"],
    };
    for index in 0..points {
        let point = sample_symmetric_point(seed, index, n, alphabet_len, 0, extra_vars, &[])?;
        let z = point.values("z", n)?;
        let alphas = point.values("a", alphabet_len)?;
        let beta_value = match beta {
            BetaMode::MinusOne => -Scalar::one(),
            BetaMode::Sampled => point.require("beta")?.clone(),
        };
        let alphabet = FactorialAlphabet::new(alphas, beta_value);
        let lhs = grothendieck_det(&mu, &z, &alphabet)?;
        let rhs = subset_expansion(&lambda_k, &z, &alphabet, m, k)?;
        builder.check_scalars(|| assignment(&point, &[]), &lhs, &rhs);
    }
    Ok(builder.finish())
}

/// Verifies the rectangular-shape identity: the determinant route for
/// `((m−k)^{n−k}, 0^k)` against the factorial-variable expansion, at
/// `β = −1`.
pub fn verify_rectangular(
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
    let lambda = rectangle(n, m, k);
    let alphabet_len = m.max(m - k + n - 1);
    let mut builder = ReportBuilder::new("rectangular")
        .param("n", n)
        .param("m", m)
        .param("k", k)
        .param("beta", "-1")
        .param("mode", "numeric");
    for index in 0..points {
        let point = sample_symmetric_point(seed, index, n, alphabet_len, m, &[], &[])?;
        let z = point.values("z", n)?;
        let alphas = point.values("a", alphabet_len)?;
        let alphabet = FactorialAlphabet::new(alphas.clone(), -Scalar::one());
        let lhs = grothendieck_det(&lambda, &z, &alphabet)?;
        let rhs = factorial_expansion(&z, &alphas[..m], k)?;
        builder.check_scalars(|| assignment(&point, &[]), &lhs, &rhs);
    }
    Ok(builder.finish())
}

/// Verifies the rectangular-shape identity as a polynomial statement: both
/// sides are expanded over `z_1..z_n, α_1..α_M` with denominators cleared,
/// and compared coefficient-wise.
pub fn verify_rectangular_symbolic(n: usize, m: usize, k: usize) -> Result<IdentityReport> {
    if n == 0 || k > n.min(m) {
        return Err(Error::InvalidInput(format!(
            "need k <= min(n, m) and n >= 1: k={k}, n={n}, m={m}"
        )));
    }
    let lambda = rectangle(n, m, k);
    let alphabet_len = m.max(m - k + n - 1);
    let minus_one = -Scalar::one();
    let lhs_poly = grothendieck_symbolic(&lambda, n, alphabet_len, &BetaSpec::Fixed(minus_one))?;

    let mut names = numbered("z", n);
    names.extend(numbered("a", alphabet_len));
    let var = |name: &str| MultiPoly::var(&names, name).expect("name in list");
    let alpha_var = |i: usize| var(&format!("a{i}"));
    let z_var = |i: usize| var(&format!("z{i}"));
    let one = MultiPoly::constant(&names, Scalar::one());
    // z ⊕ α at β = −1, as a polynomial.
    let oplus_poly = |i: usize, j: usize| {
        let zi = z_var(i);
        let aj = alpha_var(j);
        zi.add(&aj).sub(&zi.mul(&aj))
    };
    // Ordered difference products clearing the subset denominators.
    let vandermonde_of = |indices: &[usize]| {
        let mut product = one.clone();
        for (pos, &i) in indices.iter().enumerate() {
            for &j in &indices[pos + 1..] {
                product = product.mul(&alpha_var(j).sub(&alpha_var(i)));
            }
        }
        product
    };
    let full_vandermonde = vandermonde_of(&(1..=m).collect::<Vec<_>>());

    let mut rhs_cleared = MultiPoly::zero(&names);
    for split in k_subsets(m, k) {
        let mut term = vandermonde_of(&split.chosen).mul(&vandermonde_of(&split.complement));
        let inversions = split
            .chosen
            .iter()
            .flat_map(|&i| split.complement.iter().map(move |&j| (i, j)))
            .filter(|&(i, j)| j < i)
            .count();
        if inversions % 2 == 1 {
            term = term.neg();
        }
        for &i in &split.chosen {
            term = term.mul(&one.sub(&alpha_var(i)).pow((m - k) as u32));
        }
        for &j in &split.complement {
            for i in 1..=n {
                term = term.mul(&oplus_poly(i, j));
            }
        }
        rhs_cleared = rhs_cleared.add(&term);
    }
    let lhs_cleared = lhs_poly.mul(&full_vandermonde);

    let mut builder = ReportBuilder::new("rectangular")
        .param("n", n)
        .param("m", m)
        .param("k", k)
        .param("beta", "-1")
        .param("mode", "symbolic");
    builder.check_with(
        lhs_cleared == rhs_cleared,
        || {
            let mut map = std::collections::BTreeMap::new();
            map.insert(
                "comparison".to_string(),
                "coefficient-wise, denominators cleared".to_string(),
            );
            map
        },
        || lhs_cleared.to_string(),
        || rhs_cleared.to_string(),
    );
    Ok(builder.finish())
}

/// Verifies the duality formula: the symmetric-variable expansion over
/// `k`-subsets of `{1..n}` equals the factorial-variable expansion over
/// `k`-subsets of `{1..m}`, at `β = −1`.
pub fn verify_duality(
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
    let minus_one = -Scalar::one();
    let one = Scalar::one();
    let mut builder = ReportBuilder::new("duality")
        .param("n", n)
        .param("m", m)
        .param("k", k)
        .param("beta", "-1");
    for index in 0..points {
        let point = sample_symmetric_point(seed, index, n, m, m, &[], &[])?;
        let z = point.values("z", n)?;
        let alphas = point.values("a", m)?;
        // Symmetric-variable side.
        let mut lhs = Scalar::zero();
        for split in k_subsets(n, k) {
            let mut term = Scalar::one();
            for &i in &split.chosen {
                term *= &(&one - &z[i - 1]).powu((n - k) as u32);
            }
            for &j in &split.complement {
                for alpha in &alphas {
                    term *= &oplus(&z[j - 1], alpha, &minus_one);
                }
            }
            for &i in &split.chosen {
                for &j in &split.complement {
                    term = term.checked_div(&(&z[j - 1] - &z[i - 1]))?;
                }
            }
            lhs += &term;
        }
        let rhs = factorial_expansion(&z, &alphas, k)?;
        builder.check_scalars(|| assignment(&point, &[]), &lhs, &rhs);
    }
    Ok(builder.finish())
}

/// The nested expansion side of the q-deformed identity: sum over row
/// vectors `y` and index tuples `a` of the coefficient block times the
/// barred function times the row function with the `a`-indexed rows removed.
fn deformed_expansion(
    u: &[Scalar],
    w: &[Scalar],
    m: usize,
    x: &PositionVector,
    q: &Scalar,
) -> Result<Scalar> {
    let n = u.len();
    let r = n - x.len();
    let w_sites = &w[m..];
    let mut total = Scalar::zero();
    for split in k_subsets(n, r) {
        let y = PositionVector::new(split.chosen.clone(), n)?;
        let barred = f_bar_sum(w_sites, u, &y, q)?;
        if barred.is_zero() {
            continue;
        }
        let ys = y.positions();
        for tuple in index_tuples(ys) {
            let mut coeff = Scalar::one();
            for (j, &aj) in tuple.iter().enumerate() {
                let ua = &u[aj - 1];
                for wi in &w[..m] {
                    coeff *= &(ua - wi);
                }
                for b in 1..ys[j] {
                    if tuple[..j].contains(&b) {
                        continue;
                    }
                    coeff *= &(ua - &(q * &u[b - 1]));
                }
                for b in 1..=ys[j] {
                    if tuple[..=j].contains(&b) {
                        continue;
                    }
                    coeff = coeff.checked_div(&(ua - &u[b - 1]))?;
                }
            }
            let remaining: Vec<Scalar> = (1..=n)
                .filter(|i| !tuple.contains(i))
                .map(|i| u[i - 1].clone())
                .collect();
            let rest = f_sum(&remaining, &w[..m], x, q)?;
            total += &(&(coeff * &barred) * &rest);
        }
    }
    Ok(total)
}

/// Verifies the q-deformed expansion: the row function at the widened
/// position vector equals the nested sum over row vectors and index tuples.
/// The left side is additionally cross-checked against the lattice route.
pub fn verify_q_deformed(
    n: usize,
    m: usize,
    k: usize,
    x: &PositionVector,
    points: usize,
    seed: u64,
) -> Result<IdentityReport> {
    if k > n || x.len() != k || x.chain_len() != m {
        return Err(Error::InvalidInput(format!(
            "need a length-{k} position vector on 1..={m} with k <= n={n}"
        )));
    }
    let r = n - k;
    let chain = m + r;
    let mut wide = x.positions().to_vec();
    wide.extend(m + 1..=m + r);
    let x_wide = PositionVector::new(wide, chain)?;

    let u_names = numbered("u", n);
    let w_names = numbered("w", chain);
    let mut variables = u_names.clone();
    variables.extend(w_names.iter().cloned());
    variables.push("q".to_string());
    let mut constraints = vec![
        Constraint::Distinct(u_names),
        Constraint::Avoid("q".to_string(), Scalar::zero()),
        Constraint::Avoid("q".to_string(), Scalar::one()),
    ];
    if r > 1 {
        constraints.push(Constraint::Distinct(w_names[m..].to_vec()));
    }

    let mut builder = ReportBuilder::new("q-deformed")
        .param("n", n)
        .param("m", m)
        .param("k", k)
        .param("x", positions_label(x));
    for index in 0..points {
        let point = sample_point(point_seed(seed, index), &variables, &constraints)?;
        let u = point.values("u", n)?;
        let w = point.values("w", chain)?;
        let q = point.require("q")?.clone();
        let lhs = f_sum(&u, &w, &x_wide, &q)?;
        let lattice = wavefunction(&u, &w, &x_wide, &q)?;
        builder.check_scalars(
            || assignment(&point, &[("route", "lattice".to_string())]),
            &lhs,
            &lattice,
        );
        let rhs = deformed_expansion(&u, &w, m, x, &q)?;
        builder.check_scalars(
            || assignment(&point, &[("route", "nested-sum".to_string())]),
            &lhs,
            &rhs,
        );
    }
    Ok(builder.finish())
}

/// Verifies that the three routes to the rectangular value agree pairwise:
/// the determinant route, the symmetric-variable expansion (the widened
/// identity at the empty partition), and the factorial-variable expansion.
/// The duality formula is exactly the statement that the two expansions
/// agree, so this triangle cross-checks it by composition.
pub fn verify_consistency_triangle(
    n: usize,
    m: usize,
    k: usize,
    points: usize,
    seed: u64,
) -> Result<IdentityReport> {
    if n == 0 || k == 0 || k > n.min(m) {
        return Err(Error::InvalidInput(format!(
            "need 1 <= k <= min(n, m): k={k}, n={n}, m={m}"
        )));
    }
    let zeros = Partition::new(vec![0; k]).expect("zero partition");
    let lambda = rectangle(n, m, k);
    let alphabet_len = m.max(m - k + n - 1);
    let mut builder = ReportBuilder::new("consistency-triangle")
        .param("n", n)
        .param("m", m)
        .param("k", k)
        .param("beta", "-1");
    for index in 0..points {
        let point = sample_symmetric_point(seed, index, n, alphabet_len, m, &[], &[])?;
        let z = point.values("z", n)?;
        let alphas = point.values("a", alphabet_len)?;
        let alphabet = FactorialAlphabet::new(alphas.clone(), -Scalar::one());
        let det = grothendieck_det(&lambda, &z, &alphabet)?;
        let symmetric_side = subset_expansion(&zeros, &z, &alphabet, m, k)?;
        let factorial_side = factorial_expansion(&z, &alphas[..m], k)?;
        builder.check_scalars(
            || assignment(&point, &[("route", "symmetric-expansion".to_string())]),
            &det,
            &symmetric_side,
        );
        builder.check_scalars(
            || assignment(&point, &[("route", "factorial-expansion".to_string())]),
            &det,
            &factorial_side,
        );
    }
    Ok(builder.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn guo_sun_small_cells_verify() {
        for (n, m, k, lambda) in [
            (2, 2, 1, part(&[1])),
            (2, 2, 1, part(&[0])),
            (3, 2, 2, part(&[0, 0])),
            (2, 3, 1, part(&[2])),
            (3, 3, 2, part(&[1, 1])),
        ] {
            let report = verify_guo_sun(n, m, k, &lambda, 4, 11, BetaMode::MinusOne).unwrap();
            assert!(report.is_verified(), "cell ({n},{m},{k}): {report:?}");
            assert_eq!(report.points, 4);
        }
    }

    #[test]
    fn guo_sun_holds_for_general_beta() {
        let report = verify_guo_sun(2, 3, 2, &part(&[1, 0]), 4, 5, BetaMode::Sampled).unwrap();
        assert!(report.is_verified(), "{report:?}");
    }

    #[test]
    fn guo_sun_rejects_wide_partition() {
        let err = verify_guo_sun(2, 2, 1, &part(&[2]), 3, 0, BetaMode::MinusOne).unwrap_err();
        assert_eq!(err, Error::ProfileViolation { first: 2, bound: 1 });
    }

    #[test]
    fn guo_sun_rejects_zero_k() {
        assert!(matches!(
            verify_guo_sun(2, 2, 0, &Partition::empty(), 3, 0, BetaMode::MinusOne),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn rectangular_cells_verify() {
        for (n, m, k) in [(2, 2, 1), (3, 2, 1), (2, 3, 2), (3, 3, 3), (1, 2, 0)] {
            let report = verify_rectangular(n, m, k, 4, 3).unwrap();
            assert!(report.is_verified(), "cell ({n},{m},{k}): {report:?}");
        }
    }

    #[test]
    fn rectangular_symbolic_matches_coefficientwise() {
        let report = verify_rectangular_symbolic(2, 2, 1).unwrap();
        assert!(report.is_verified(), "{report:?}");
        let report = verify_rectangular_symbolic(2, 3, 1).unwrap();
        assert!(report.is_verified(), "{report:?}");
    }

    #[test]
    fn duality_cells_verify() {
        for (n, m, k) in [(2, 2, 1), (3, 2, 2), (2, 3, 1), (3, 3, 2)] {
            let report = verify_duality(n, m, k, 4, 7).unwrap();
            assert!(report.is_verified(), "cell ({n},{m},{k}): {report:?}");
        }
    }

    #[test]
    fn q_deformed_cells_verify() {
        let x = PositionVector::new(vec![1], 2).unwrap();
        let report = verify_q_deformed(2, 2, 1, &x, 3, 9).unwrap();
        assert!(report.is_verified(), "{report:?}");
        // Both sides collapse to the same row function when no row is frozen.
        let x = PositionVector::new(vec![1, 2], 2).unwrap();
        let report = verify_q_deformed(2, 2, 2, &x, 2, 9).unwrap();
        assert!(report.is_verified(), "{report:?}");
    }

    #[test]
    fn consistency_triangle_verifies() {
        let report = verify_consistency_triangle(2, 2, 1, 4, 13).unwrap();
        assert!(report.is_verified(), "{report:?}");
        let report = verify_consistency_triangle(3, 3, 2, 3, 13).unwrap();
        assert!(report.is_verified(), "{report:?}");
    }

    #[test]
    fn reports_are_deterministic() {
        let a = verify_duality(2, 2, 1, 3, 42).unwrap();
        let b = verify_duality(2, 2, 1, 3, 42).unwrap();
        assert_eq!(a, b);
        let c = verify_duality(2, 2, 1, 3, 43).unwrap();
        assert_eq!(a.verdict, c.verdict);
    }
}
