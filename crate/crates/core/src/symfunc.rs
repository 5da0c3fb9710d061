//! Permutation-sum symmetric functions: the third, lattice-free route to
//! the wavefunction values.
//!
//! Two families live here. [`f_sum`] expands the amplitude of a string of
//! creation rows over all orderings of the row parameters; it matches
//! [`crate::lattice::wavefunction`] exactly. [`f_bar_sum`] does the same for
//! the overlap that drives the column decomposition, summing over orderings
//! of the *site* parameters; it matches [`crate::lattice::barred_wavefunction`].
//! Both are alternating sums of products of linear factors with difference
//! denominators, so the row family needs pairwise-distinct row parameters
//! and the barred family pairwise-distinct site parameters.

use itertools::Itertools;

use crate::combinatorics::PositionVector;
use crate::error::{Error, Result};
use crate::grothendieck::require_distinct;
use crate::scalar::Scalar;

/// The row-family symmetric function.
///
/// For row parameters `u = (u_1, …, u_n)`, site parameters
/// `w = (w_1, …, w_L)` and occupied positions `x_1 < … < x_n`, this is
///
/// ```text
///   ∏_j (1−q) u_j · Σ_{σ ∈ S_n} ∏_j [ ∏_{i < x_j} (u_{σ(j)} − w_i)
///                                    · ∏_{i > x_j} (u_{σ(j)} − q w_i) ]
///                   · ∏_{i<j} (q u_{σ(i)} − u_{σ(j)}) / (u_{σ(i)} − u_{σ(j)})
/// ```
///
/// The `(1−q) u` prefactor is independent of the ordering and is hoisted out
/// of the sum. Requires the `u_j` pairwise distinct.
pub fn f_sum(u: &[Scalar], w: &[Scalar], x: &PositionVector, q: &Scalar) -> Result<Scalar> {
    if x.chain_len() != w.len() {
        return Err(Error::InvalidInput(format!(
            "positions live on a chain of {} sites but {} site parameters given",
            x.chain_len(),
            w.len()
        )));
    }
    if x.len() != u.len() {
        return Err(Error::InvalidInput(format!(
            "{} positions but {} row parameters",
            x.len(),
            u.len()
        )));
    }
    require_distinct(u)?;
    let n = u.len();
    let sites = w.len();
    let one_minus_q = Scalar::one() - q;

    let mut prefactor = Scalar::one();
    for uj in u {
        prefactor *= &(&one_minus_q * uj);
    }

    // site_block[p][j]: the factor a row with parameter u_p contributes when
    // it ends at the j-th occupied position.
    let positions = x.positions();
    let mut site_block = vec![vec![Scalar::one(); n]; n];
    for (p, up) in u.iter().enumerate() {
        for (j, &xj) in positions.iter().enumerate() {
            let mut factor = Scalar::one();
            for wi in &w[..xj - 1] {
                factor *= &(up - wi);
            }
            for wi in &w[xj..sites] {
                factor *= &(up - &(q * wi));
            }
            site_block[p][j] = factor;
        }
    }

    let mut total = Scalar::zero();
    for perm in (0..n).permutations(n) {
        let mut term = Scalar::one();
        for (j, &p) in perm.iter().enumerate() {
            term *= &site_block[p][j];
        }
        for i in 0..n {
            for j in i + 1..n {
                let numer = &(q * &u[perm[i]]) - &u[perm[j]];
                let denom = &u[perm[i]] - &u[perm[j]];
                term = (term * numer).checked_div(&denom)?;
            }
        }
        total += &term;
    }
    Ok(prefactor * total)
}

/// The barred-family symmetric function.
///
/// For site parameters `w = (w_1, …, w_r)`, row parameters
/// `u = (u_1, …, u_n)` and creation rows `y_1 < … < y_r` (positions on the
/// row index line `1..=n`), this is
///
/// ```text
///   ∏_j (1−q) u_{y_j} · Σ_{σ ∈ S_r} ∏_j [ ∏_{i > y_j} q (u_i − w_{σ(j)})
///                                        · ∏_{i < y_j} (u_i − q w_{σ(j)}) ]
///                      · ∏_{i<j} (q w_{σ(i)} − w_{σ(j)}) / (q (w_{σ(i)} − w_{σ(j)}))
/// ```
///
/// Requires the `w_j` pairwise distinct, and `q ≠ 0` whenever two or more
/// sites participate (the cross ratio divides by `q`); with at most one site
/// no division by `q` occurs and `q = 0` is accepted.
pub fn f_bar_sum(
    w_sites: &[Scalar],
    u: &[Scalar],
    y: &PositionVector,
    q: &Scalar,
) -> Result<Scalar> {
    if y.chain_len() != u.len() {
        return Err(Error::InvalidInput(format!(
            "row labels run over 1..={} but {} row parameters given",
            y.chain_len(),
            u.len()
        )));
    }
    if y.len() != w_sites.len() {
        return Err(Error::InvalidInput(format!(
            "{} creation rows for a chain of {} sites",
            y.len(),
            w_sites.len()
        )));
    }
    require_distinct(w_sites)?;
    let r = w_sites.len();
    if r >= 2 && q.is_zero() {
        return Err(Error::ZeroQ);
    }
    let n = u.len();
    let one_minus_q = Scalar::one() - q;

    let rows = y.positions();
    let mut prefactor = Scalar::one();
    for &yj in rows {
        prefactor *= &(&one_minus_q * &u[yj - 1]);
    }

    // row_block[s][j]: the factor site parameter w_s contributes when paired
    // with the j-th creation row.
    let mut row_block = vec![vec![Scalar::one(); r]; r];
    for (s, ws) in w_sites.iter().enumerate() {
        for (j, &yj) in rows.iter().enumerate() {
            let mut factor = Scalar::one();
            for ui in &u[yj..n] {
                factor *= &(q * &(ui - ws));
            }
            for ui in &u[..yj - 1] {
                factor *= &(ui - &(q * ws));
            }
            row_block[s][j] = factor;
        }
    }

    let mut total = Scalar::zero();
    for perm in (0..r).permutations(r) {
        let mut term = Scalar::one();
        for (j, &s) in perm.iter().enumerate() {
            term *= &row_block[s][j];
        }
        for i in 0..r {
            for j in i + 1..r {
                let numer = &(q * &w_sites[perm[i]]) - &w_sites[perm[j]];
                let denom = q * &(&w_sites[perm[i]] - &w_sites[perm[j]]);
                term = (term * numer).checked_div(&denom)?;
            }
        }
        total += &term;
    }
    Ok(prefactor * total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{barred_wavefunction, wavefunction};

    fn s(n: i64, d: i64) -> Scalar {
        Scalar::from_fraction(n, d).unwrap()
    }

    #[test]
    fn single_row_single_site() {
        let u = [s(3, 2)];
        let w = [s(1, 5)];
        let x = PositionVector::new(vec![1], 1).unwrap();
        let q = s(1, 3);
        // One creation row ending on the only site: the hoisted prefactor is
        // the whole value.
        let expected = (Scalar::one() - &q) * &u[0];
        assert_eq!(f_sum(&u, &w, &x, &q).unwrap(), expected);
    }

    #[test]
    fn empty_string_is_one() {
        let x = PositionVector::new(vec![], 3).unwrap();
        let w = [s(1, 5), s(1, 7), s(1, 11)];
        assert_eq!(f_sum(&[], &w, &x, &s(1, 3)).unwrap(), Scalar::one());
    }

    #[test]
    fn matches_lattice_route() {
        let u = [s(3, 2), s(5, 7)];
        let w = [s(1, 5), s(1, 7), s(2, 9)];
        let x = PositionVector::new(vec![1, 3], 3).unwrap();
        for q in [Scalar::zero(), s(1, 3), s(-2, 5)] {
            let direct = wavefunction(&u, &w, &x, &q).unwrap();
            let summed = f_sum(&u, &w, &x, &q).unwrap();
            assert_eq!(summed, direct);
        }
    }

    #[test]
    fn symmetric_in_row_parameters() {
        let w = [s(1, 5), s(1, 7), s(2, 9), s(3, 11)];
        let x = PositionVector::new(vec![2, 4], 4).unwrap();
        let q = s(2, 7);
        let forward = f_sum(&[s(3, 2), s(5, 7)], &w, &x, &q).unwrap();
        let swapped = f_sum(&[s(5, 7), s(3, 2)], &w, &x, &q).unwrap();
        assert_eq!(forward, swapped);
    }

    #[test]
    fn coincident_rows_rejected() {
        let u = [s(3, 2), s(3, 2)];
        let w = [s(1, 5), s(1, 7)];
        let x = PositionVector::new(vec![1, 2], 2).unwrap();
        assert_eq!(
            f_sum(&u, &w, &x, &Scalar::zero()),
            Err(Error::CoincidentVariables)
        );
    }

    #[test]
    fn length_mismatches_rejected() {
        let u = [s(3, 2)];
        let w = [s(1, 5), s(1, 7)];
        let x = PositionVector::new(vec![1], 1).unwrap();
        assert!(matches!(
            f_sum(&u, &w, &x, &Scalar::zero()),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn barred_base_case_closed_form() {
        // One site, creation row at the top: (1−q) u_n ∏_{j<n} (u_j − q w).
        let u = [s(3, 2), s(5, 7), s(9, 4)];
        let w = [s(1, 5)];
        let y = PositionVector::new(vec![3], 3).unwrap();
        let q = s(1, 3);
        let expected =
            (Scalar::one() - &q) * &u[2] * &(&u[0] - &(&q * &w[0])) * &(&u[1] - &(&q * &w[0]));
        assert_eq!(f_bar_sum(&w, &u, &y, &q).unwrap(), expected);
        assert_eq!(barred_wavefunction(&w, &u, &y, &q).unwrap(), expected);
    }

    #[test]
    fn barred_empty_is_one() {
        let y = PositionVector::new(vec![], 2).unwrap();
        let u = [s(3, 2), s(5, 7)];
        assert_eq!(f_bar_sum(&[], &u, &y, &s(1, 3)).unwrap(), Scalar::one());
    }

    #[test]
    fn barred_matches_lattice_route() {
        let w = [s(1, 5), s(2, 7)];
        let u = [s(3, 2), s(5, 7), s(9, 4)];
        let q = s(2, 7);
        for rows in [vec![1, 2], vec![1, 3], vec![2, 3]] {
            let y = PositionVector::new(rows, 3).unwrap();
            let summed = f_bar_sum(&w, &u, &y, &q).unwrap();
            let direct = barred_wavefunction(&w, &u, &y, &q).unwrap();
            assert_eq!(summed, direct);
        }
    }

    #[test]
    fn barred_symmetric_in_site_parameters() {
        let u = [s(3, 2), s(5, 7), s(9, 4)];
        let y = PositionVector::new(vec![1, 3], 3).unwrap();
        let q = s(2, 7);
        let forward = f_bar_sum(&[s(1, 5), s(2, 7)], &u, &y, &q).unwrap();
        let swapped = f_bar_sum(&[s(2, 7), s(1, 5)], &u, &y, &q).unwrap();
        assert_eq!(forward, swapped);
    }

    #[test]
    fn barred_needs_nonzero_q_for_two_sites() {
        let w = [s(1, 5), s(2, 7)];
        let u = [s(3, 2), s(5, 7), s(9, 4)];
        let y = PositionVector::new(vec![1, 3], 3).unwrap();
        assert_eq!(f_bar_sum(&w, &u, &y, &Scalar::zero()), Err(Error::ZeroQ));
        // A single site never divides by q, so q = 0 stays legal there.
        let y1 = PositionVector::new(vec![3], 3).unwrap();
        assert!(f_bar_sum(&w[..1], &u, &y1, &Scalar::zero()).is_ok());
    }

    #[test]
    fn barred_coincident_sites_rejected() {
        let w = [s(1, 5), s(1, 5)];
        let u = [s(3, 2), s(5, 7), s(9, 4)];
        let y = PositionVector::new(vec![1, 3], 3).unwrap();
        assert_eq!(
            f_bar_sum(&w, &u, &y, &s(1, 3)),
            Err(Error::CoincidentVariables)
        );
    }
}
