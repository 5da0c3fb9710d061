//! Factorial Grothendieck polynomials by the ratio-of-determinants route.
//!
//! For variables `z_1..z_n`, a deformation parameter `β`, and a factorial
//! alphabet `α`, the polynomial attached to a partition `λ` with at most `n`
//! rows is
//!
//! ```text
//!   G_λ(z|α) = det[ [z_i|α]^(λ_j + n − j) · (1 + β z_i)^(j−1) ] / ∏_{i<j} (z_i − z_j)
//! ```
//!
//! where `[z|α]^j = ∏_{l=1}^j (z ⊕ α_l)` and `z ⊕ α = z + α + β z α`. At
//! `β = 0` and `α ≡ 0` this degenerates to the classical Schur bialternant.
//!
//! Two evaluation routes are provided: a numeric one (exact rational Gaussian
//! elimination at a point, cheap) and a symbolic one (Leibniz expansion over
//! a small variable budget followed by exact division by the Vandermonde
//! product, used for coefficient-level checks). They share nothing beyond the
//! scalar and polynomial primitives, so agreement between them is evidence,
//! not tautology.

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::point::numbered;
use crate::poly::MultiPoly;
use crate::scalar::Scalar;

/// Variable budget for the symbolic route.
pub const SYMBOLIC_VAR_LIMIT: usize = 8;

/// A factorial alphabet `α_1, α_2, …` together with the deformation `β`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorialAlphabet {
    alphas: Vec<Scalar>,
    beta: Scalar,
}

impl FactorialAlphabet {
    pub fn new(alphas: Vec<Scalar>, beta: Scalar) -> Self {
        FactorialAlphabet { alphas, beta }
    }

    /// The all-zero alphabet of a given length (Schur-type degeneration when
    /// `beta` is zero as well).
    pub fn zeros(len: usize, beta: Scalar) -> Self {
        FactorialAlphabet {
            alphas: vec![Scalar::zero(); len],
            beta,
        }
    }

    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    pub fn beta(&self) -> &Scalar {
        &self.beta
    }

    pub fn alphas(&self) -> &[Scalar] {
        &self.alphas
    }

    /// One-based access.
    pub fn alpha(&self, l: usize) -> Result<&Scalar> {
        if l == 0 || l > self.alphas.len() {
            return Err(Error::AlphabetTooShort {
                needed: l,
                have: self.alphas.len(),
            });
        }
        Ok(&self.alphas[l - 1])
    }
}

/// The deformed addition `z ⊕ α = z + α + β z α`.
pub fn oplus(z: &Scalar, alpha: &Scalar, beta: &Scalar) -> Scalar {
    z + alpha + &(&(beta * z) * alpha)
}

/// The factorial power `[z|α]^j = ∏_{l=1}^j (z ⊕ α_l)`; `j = 0` gives 1.
pub fn factorial_power(z: &Scalar, alphabet: &FactorialAlphabet, j: usize) -> Result<Scalar> {
    if j > alphabet.len() {
        return Err(Error::AlphabetTooShort {
            needed: j,
            have: alphabet.len(),
        });
    }
    let mut acc = Scalar::one();
    for l in 1..=j {
        acc *= &oplus(z, &alphabet.alphas[l - 1], &alphabet.beta);
    }
    Ok(acc)
}

/// Exact determinant by fraction-free-enough Gaussian elimination (rational
/// arithmetic, so ordinary elimination is already exact).
fn det_scalar(mut m: Vec<Vec<Scalar>>) -> Result<Scalar> {
    let n = m.len();
    let mut det = Scalar::one();
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !m[r][col].is_zero()) {
            Some(r) => r,
            None => return Ok(Scalar::zero()),
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for row in col + 1..n {
            if m[row][col].is_zero() {
                continue;
            }
            let factor = m[row][col].checked_div(&pivot)?;
            let (pivoted, rest) = m.split_at_mut(row);
            for (entry, source) in rest[0][col..].iter_mut().zip(&pivoted[col][col..]) {
                let delta = &factor * source;
                *entry = &*entry - &delta;
            }
        }
    }
    Ok(det)
}

/// The Vandermonde product `∏_{i<j} (z_i − z_j)`.
fn vandermonde(z: &[Scalar]) -> Scalar {
    let mut acc = Scalar::one();
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            acc *= &(&z[i] - &z[j]);
        }
    }
    acc
}

/// Rejects any list with two equal entries; evaluation formulas with
/// difference denominators call this before dividing.
pub fn require_distinct(values: &[Scalar]) -> Result<()> {
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] == values[j] {
                return Err(Error::CoincidentVariables);
            }
        }
    }
    Ok(())
}

/// Evaluates `G_λ(z|α)` exactly at a point.
///
/// Requires as many `z`-values as `λ` has rows (pad `λ` with zeros to choose
/// the variable count), pairwise distinct `z`, and an alphabet of length at
/// least `λ_1 + n − 1`.
pub fn grothendieck_det(
    lambda: &Partition,
    z: &[Scalar],
    alphabet: &FactorialAlphabet,
) -> Result<Scalar> {
    let n = lambda.len();
    if z.len() != n {
        return Err(Error::InvalidInput(format!(
            "{} z-values for a partition with {} rows",
            z.len(),
            n
        )));
    }
    if n == 0 {
        return Ok(Scalar::one());
    }
    require_distinct(z)?;
    let needed = lambda.first() + n - 1;
    if alphabet.len() < needed {
        return Err(Error::AlphabetTooShort {
            needed,
            have: alphabet.len(),
        });
    }
    let beta = alphabet.beta();
    let mut matrix = Vec::with_capacity(n);
    for zi in z {
        let one_plus = &Scalar::one() + &(beta * zi);
        let row: Vec<Scalar> = (1..=n)
            .map(|j| {
                let exponent = lambda.parts()[j - 1] + n - j;
                Ok(&factorial_power(zi, alphabet, exponent)? * &one_plus.powu((j - 1) as u32))
            })
            .collect::<Result<_>>()?;
        matrix.push(row);
    }
    det_scalar(matrix)?.checked_div(&vandermonde(z))
}

/// How the symbolic route treats `β`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BetaSpec {
    Fixed(Scalar),
    Symbolic,
}

/// Leibniz determinant of a small polynomial matrix.
fn det_poly(m: &[Vec<MultiPoly>], vars: &[String]) -> MultiPoly {
    let n = m.len();
    let mut total = MultiPoly::zero(vars);
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let mut term = MultiPoly::constant(vars, Scalar::one());
        for (row, &col) in perm.iter().enumerate() {
            term = term.mul(&m[row][col]);
        }
        if inversions % 2 == 1 {
            term = term.neg();
        }
        total = total.add(&term);
        // next_permutation in lexicographic order
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| perm[i] < perm[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    total
}

/// Expands `G_λ` as a polynomial in `z1..zn`, `a1..aM`, and (optionally)
/// `beta`, by expanding the determinant and dividing out the Vandermonde
/// product exactly.
///
/// The total variable count is capped at [`SYMBOLIC_VAR_LIMIT`]. The
/// division cannot leave a remainder (the determinant is alternating in the
/// `z`-block); if it ever did, that would be an internal bug surfaced as
/// [`Error::InexactDivision`].
pub fn grothendieck_symbolic(
    lambda: &Partition,
    n: usize,
    alphabet_len: usize,
    beta: &BetaSpec,
) -> Result<MultiPoly> {
    let lambda = lambda.padded(n)?;
    let needed = lambda.first() + n.saturating_sub(1);
    if alphabet_len < needed {
        return Err(Error::AlphabetTooShort {
            needed,
            have: alphabet_len,
        });
    }
    let symbolic_beta = matches!(beta, BetaSpec::Symbolic);
    let var_count = n + alphabet_len + usize::from(symbolic_beta);
    if var_count > SYMBOLIC_VAR_LIMIT {
        return Err(Error::BudgetExceeded {
            vars: var_count,
            limit: SYMBOLIC_VAR_LIMIT,
        });
    }
    let mut vars = numbered("z", n);
    vars.extend(numbered("a", alphabet_len));
    if symbolic_beta {
        vars.push("beta".to_owned());
    }
    if n == 0 {
        return Ok(MultiPoly::constant(&vars, Scalar::one()));
    }
    let beta_poly = match beta {
        BetaSpec::Fixed(b) => MultiPoly::constant(&vars, b.clone()),
        BetaSpec::Symbolic => MultiPoly::var(&vars, "beta")?,
    };
    let one = MultiPoly::constant(&vars, Scalar::one());
    // [z_i|a]^e as a polynomial.
    let factorial_pow = |i: usize, e: usize| -> Result<MultiPoly> {
        let zi = MultiPoly::var(&vars, &format!("z{i}"))?;
        let mut acc = one.clone();
        for l in 1..=e {
            let al = MultiPoly::var(&vars, &format!("a{l}"))?;
            let prod = zi.add(&al).add(&beta_poly.mul(&zi).mul(&al));
            acc = acc.mul(&prod);
        }
        Ok(acc)
    };
    let mut matrix = Vec::with_capacity(n);
    for i in 1..=n {
        let zi = MultiPoly::var(&vars, &format!("z{i}"))?;
        let one_plus = one.add(&beta_poly.mul(&zi));
        let mut row = Vec::with_capacity(n);
        for j in 1..=n {
            let exponent = lambda.parts()[j - 1] + n - j;
            row.push(factorial_pow(i, exponent)?.mul(&one_plus.pow((j - 1) as u32)));
        }
        matrix.push(row);
    }
    let mut result = det_poly(&matrix, &vars);
    for i in 1..=n {
        for j in i + 1..=n {
            result = result.divide_exact_by_diff(&format!("z{i}"), &format!("z{j}"))?;
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::EvaluationPoint;

    fn s(n: i64, d: i64) -> Scalar {
        Scalar::from_fraction(n, d).unwrap()
    }

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn alphabet(alphas: &[(i64, i64)], beta: (i64, i64)) -> FactorialAlphabet {
        FactorialAlphabet::new(
            alphas.iter().map(|&(p, q)| s(p, q)).collect(),
            s(beta.0, beta.1),
        )
    }

    #[test]
    fn deformed_addition() {
        // 2/1 ⊕ 3/1 at β = 1/2 is 2 + 3 + 3 = 8.
        assert_eq!(oplus(&s(2, 1), &s(3, 1), &s(1, 2)), s(8, 1));
        // β = −1 gives 1 − (1−z)(1−α).
        assert_eq!(oplus(&s(1, 2), &s(1, 3), &s(-1, 1)), s(2, 3));
        assert_eq!(oplus(&s(1, 2), &Scalar::zero(), &s(-1, 1)), s(1, 2));
    }

    #[test]
    fn factorial_power_values() {
        let ab = alphabet(&[(1, 5), (1, 7)], (-1, 1));
        // [z|α]^2 at z = 1/2: (1/2 ⊕ 1/5)(1/2 ⊕ 1/7) = (3/5)(4/7) = 12/35.
        assert_eq!(factorial_power(&s(1, 2), &ab, 2).unwrap(), s(12, 35));
        assert_eq!(factorial_power(&s(1, 2), &ab, 0).unwrap(), Scalar::one());
        assert_eq!(
            factorial_power(&s(1, 2), &ab, 3),
            Err(Error::AlphabetTooShort { needed: 3, have: 2 })
        );
    }

    #[test]
    fn zero_partition_is_one() {
        for n in 1..=4usize {
            let lam = part(&vec![0; n]);
            let z: Vec<Scalar> = (1..=n as i64).map(|i| s(i, i + 1)).collect();
            let ab = alphabet(&[(1, 3), (1, 4), (2, 5), (3, 7)], (2, 3));
            assert_eq!(grothendieck_det(&lam, &z, &ab).unwrap(), Scalar::one());
        }
        assert_eq!(
            grothendieck_det(&Partition::empty(), &[], &alphabet(&[], (0, 1))).unwrap(),
            Scalar::one()
        );
    }

    #[test]
    fn worked_two_variable_value() {
        // λ = (1,0), β = −1, z = (1/2, 1/3), α = (1/5, 1/7): the closed form
        // (α1α2−α1−α2+1)(z1+z2−z1z2) + α1+α2−α1α2 takes the value 27/35.
        let lam = part(&[1, 0]);
        let z = [s(1, 2), s(1, 3)];
        let ab = alphabet(&[(1, 5), (1, 7)], (-1, 1));
        assert_eq!(grothendieck_det(&lam, &z, &ab).unwrap(), s(27, 35));
    }

    #[test]
    fn coincident_z_rejected() {
        let lam = part(&[1, 0]);
        let z = [s(1, 2), s(1, 2)];
        let ab = alphabet(&[(1, 5), (1, 7)], (-1, 1));
        assert_eq!(
            grothendieck_det(&lam, &z, &ab),
            Err(Error::CoincidentVariables)
        );
    }

    #[test]
    fn alphabet_length_enforced() {
        let lam = part(&[2, 1]);
        let z = [s(1, 2), s(1, 3)];
        let ab = alphabet(&[(1, 5), (1, 7)], (-1, 1));
        // Needs λ1 + n − 1 = 3 entries.
        assert_eq!(
            grothendieck_det(&lam, &z, &ab),
            Err(Error::AlphabetTooShort { needed: 3, have: 2 })
        );
    }

    #[test]
    fn symmetric_in_z() {
        let lam = part(&[2, 1, 0]);
        let ab = alphabet(&[(1, 5), (1, 7), (2, 9), (3, 11)], (1, 3));
        let z = [s(1, 2), s(2, 3), s(4, 5)];
        let base = grothendieck_det(&lam, &z, &ab).unwrap();
        let orders = [
            [0usize, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for order in orders {
            let perm: Vec<Scalar> = order.iter().map(|&i| z[i].clone()).collect();
            assert_eq!(grothendieck_det(&lam, &perm, &ab).unwrap(), base);
        }
    }

    #[test]
    fn symbolic_matches_worked_expansion() {
        let p = grothendieck_symbolic(&part(&[1]), 2, 2, &BetaSpec::Fixed(s(-1, 1))).unwrap();
        // Build (a1a2−a1−a2+1)(z1+z2−z1z2) + a1+a2−a1a2 directly.
        let vars = p.vars().to_vec();
        let v = |name: &str| MultiPoly::var(&vars, name).unwrap();
        let one = MultiPoly::constant(&vars, Scalar::one());
        let left = v("a1").mul(&v("a2")).sub(&v("a1")).sub(&v("a2")).add(&one);
        let mid = v("z1").add(&v("z2")).sub(&v("z1").mul(&v("z2")));
        let expect = left
            .mul(&mid)
            .add(&v("a1"))
            .add(&v("a2"))
            .sub(&v("a1").mul(&v("a2")));
        assert_eq!(p, expect);
    }

    #[test]
    fn symbolic_single_box_with_symbolic_beta() {
        // One variable, one row: G_(1) = z1 ⊕ a1 = z1 + a1 + beta*z1*a1.
        let p = grothendieck_symbolic(&part(&[1]), 1, 1, &BetaSpec::Symbolic).unwrap();
        let vars = p.vars().to_vec();
        let v = |name: &str| MultiPoly::var(&vars, name).unwrap();
        let expect = v("z1")
            .add(&v("a1"))
            .add(&v("beta").mul(&v("z1")).mul(&v("a1")));
        assert_eq!(p, expect);
    }

    #[test]
    fn symbolic_budget() {
        assert_eq!(
            grothendieck_symbolic(&part(&[2, 1]), 3, 5, &BetaSpec::Symbolic),
            Err(Error::BudgetExceeded { vars: 9, limit: 8 })
        );
    }

    #[test]
    fn symbolic_agrees_with_numeric() {
        let lam = part(&[2, 1]);
        let p = grothendieck_symbolic(&lam, 2, 3, &BetaSpec::Fixed(s(1, 2))).unwrap();
        let z = [s(1, 3), s(2, 7)];
        let ab = alphabet(&[(1, 2), (3, 5), (4, 9)], (1, 2));
        let mut pt = EvaluationPoint::from_pairs([("z1", z[0].clone()), ("z2", z[1].clone())]);
        for (i, a) in ab.alphas().iter().enumerate() {
            pt.insert(format!("a{}", i + 1), a.clone());
        }
        assert_eq!(
            p.eval(&pt).unwrap(),
            grothendieck_det(&lam.padded(2).unwrap(), &z, &ab).unwrap()
        );
    }

    #[test]
    fn schur_degeneration_small() {
        // β = 0, α ≡ 0: compare with the bialternant with plain powers for
        // λ = (2,1) in two variables: s_{(2,1)} = z1*z2*(z1+z2).
        let lam = part(&[2, 1]);
        let z = [s(2, 3), s(3, 5)];
        let ab = FactorialAlphabet::zeros(3, Scalar::zero());
        let got = grothendieck_det(&lam, &z, &ab).unwrap();
        let expect = &(&z[0] * &z[1]) * &(&z[0] + &z[1]);
        assert_eq!(got, expect);
    }
}
