//! Sparse multivariate polynomials over [`Scalar`].
//!
//! Built for small symbolic checks (at most a handful of variables), not for
//! heavy computer algebra: terms live in a `BTreeMap` keyed by exponent
//! vector, so every polynomial has one canonical form and `Display` output is
//! stable. Two polynomials over different variable lists are compared and
//! combined by aligning onto the union list first.
//!
//! Two less common operations matter here. `divide_exact_by_diff` divides by
//! a difference of variables and insists on a zero remainder — that is how
//! alternating determinants become polynomials after dividing out a
//! Vandermonde product. `interpolate_univariate` reconstructs exact
//! coefficients from point values, which is how degree claims about rational
//! expressions get certified without symbolic expansion.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::point::EvaluationPoint;
use crate::scalar::Scalar;

/// A polynomial in a fixed, ordered list of variables.
#[derive(Debug, Clone, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl MultiPoly {
    /// The zero polynomial over the given variables.
    pub fn zero(vars: &[String]) -> Self {
        debug_assert!(unique(vars), "duplicate variable names");
        MultiPoly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    /// A constant polynomial.
    pub fn constant(vars: &[String], value: Scalar) -> Self {
        let mut p = MultiPoly::zero(vars);
        if !value.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], value);
        }
        p
    }

    /// The polynomial `name`, which must be one of `vars`.
    pub fn var(vars: &[String], name: &str) -> Result<Self> {
        let mut p = MultiPoly::zero(vars);
        let idx = p
            .vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnboundVariable(name.to_owned()))?;
        let mut exps = vec![0; p.vars.len()];
        exps[idx] = 1;
        p.terms.insert(exps, Scalar::one());
        Ok(p)
    }

    /// A single term `coeff * vars^exps`.
    pub fn monomial(vars: &[String], exps: &[u32], coeff: Scalar) -> Self {
        debug_assert_eq!(vars.len(), exps.len());
        let mut p = MultiPoly::zero(vars);
        if !coeff.is_zero() {
            p.terms.insert(exps.to_vec(), coeff);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates terms in ascending exponent-vector order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Scalar)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Degree in one variable, or `None` for the zero polynomial.
    pub fn degree_in(&self, name: &str) -> Result<Option<u32>> {
        let idx = self.var_index(name)?;
        Ok(self.terms.keys().map(|e| e[idx]).max())
    }

    fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnboundVariable(name.to_owned()))
    }

    /// Re-expresses the polynomial over a variable list that contains every
    /// variable of `self`.
    fn remap(&self, vars: &[String]) -> Self {
        if self.vars == vars {
            return self.clone();
        }
        let positions: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                vars.iter()
                    .position(|t| t == v)
                    .expect("target list misses a variable")
            })
            .collect();
        let mut out = MultiPoly::zero(vars);
        for (exps, coeff) in &self.terms {
            let mut new_exps = vec![0; vars.len()];
            for (old_idx, e) in exps.iter().enumerate() {
                new_exps[positions[old_idx]] = *e;
            }
            out.terms.insert(new_exps, coeff.clone());
        }
        out
    }

    /// Puts both polynomials over the union variable list (`self`'s order,
    /// then the new names from `other` in its order).
    fn aligned(&self, other: &MultiPoly) -> (MultiPoly, MultiPoly) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let mut union = self.vars.clone();
        for v in &other.vars {
            if !union.contains(v) {
                union.push(v.clone());
            }
        }
        (self.remap(&union), other.remap(&union))
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let (mut a, b) = self.aligned(other);
        for (exps, coeff) in b.terms {
            let entry = a.terms.entry(exps).or_insert_with(Scalar::zero);
            *entry += &coeff;
        }
        a.terms.retain(|_, c| !c.is_zero());
        a
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = self.clone();
        for coeff in out.terms.values_mut() {
            *coeff = -&*coeff;
        }
        out
    }

    pub fn scale(&self, factor: &Scalar) -> MultiPoly {
        if factor.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        let mut out = self.clone();
        for coeff in out.terms.values_mut() {
            *coeff *= factor;
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let (a, b) = self.aligned(other);
        let mut out = MultiPoly::zero(&a.vars);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = out.terms.entry(exps).or_insert_with(Scalar::zero);
                *entry += &(ca * cb);
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut acc = MultiPoly::constant(&self.vars, Scalar::one());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact evaluation; every variable must be assigned in `pt`.
    pub fn eval(&self, pt: &EvaluationPoint) -> Result<Scalar> {
        let values: Vec<&Scalar> = self
            .vars
            .iter()
            .map(|v| pt.require(v))
            .collect::<Result<_>>()?;
        let mut total = Scalar::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (idx, e) in exps.iter().enumerate() {
                if *e > 0 {
                    term *= &values[idx].powu(*e);
                }
            }
            total += &term;
        }
        Ok(total)
    }

    /// Coefficients of the powers of `name`: index `i` holds the coefficient
    /// of `name^i`, expressed over the same variable list with the `name`
    /// exponent zeroed.
    pub fn coeffs_in(&self, name: &str) -> Result<Vec<MultiPoly>> {
        let idx = self.var_index(name)?;
        let degree = match self.terms.keys().map(|e| e[idx]).max() {
            Some(d) => d as usize,
            None => return Ok(vec![MultiPoly::zero(&self.vars)]),
        };
        let mut out = vec![MultiPoly::zero(&self.vars); degree + 1];
        for (exps, coeff) in &self.terms {
            let mut stripped = exps.clone();
            let power = stripped[idx] as usize;
            stripped[idx] = 0;
            out[power].terms.insert(stripped, coeff.clone());
        }
        Ok(out)
    }

    /// Divides exactly by `hi - lo` (both variables of `self`); fails with
    /// [`Error::InexactDivision`] when the remainder is nonzero.
    ///
    /// Synthetic division in the variable `hi` at the "root" `lo`: the
    /// remainder is the substitution `hi := lo`, so exactness says the
    /// polynomial vanishes on the diagonal — the defining property of an
    /// alternating numerator.
    pub fn divide_exact_by_diff(&self, hi: &str, lo: &str) -> Result<MultiPoly> {
        if hi == lo {
            return Err(Error::InvalidInput(format!(
                "cannot divide by `{hi} - {lo}`"
            )));
        }
        let hi_idx = self.var_index(hi)?;
        let lo_poly = MultiPoly::var(&self.vars, lo)?;
        let coeffs = self.coeffs_in(hi)?;
        let degree = coeffs.len() - 1;
        if degree == 0 {
            return if self.is_zero() {
                Ok(MultiPoly::zero(&self.vars))
            } else {
                Err(Error::InexactDivision)
            };
        }
        // Horner pass: q_{d-1} = c_d, q_{i-1} = c_i + lo * q_i, r = c_0 + lo * q_0.
        let mut quotient_coeffs = vec![MultiPoly::zero(&self.vars); degree];
        quotient_coeffs[degree - 1] = coeffs[degree].clone();
        for i in (1..degree).rev() {
            quotient_coeffs[i - 1] = coeffs[i].add(&lo_poly.mul(&quotient_coeffs[i]));
        }
        let remainder = coeffs[0].add(&lo_poly.mul(&quotient_coeffs[0]));
        if !remainder.is_zero() {
            return Err(Error::InexactDivision);
        }
        let mut out = MultiPoly::zero(&self.vars);
        for (power, part) in quotient_coeffs.iter().enumerate() {
            for (exps, coeff) in &part.terms {
                let mut shifted = exps.clone();
                shifted[hi_idx] += power as u32;
                out.terms.insert(shifted, coeff.clone());
            }
        }
        Ok(out)
    }
}

fn unique(vars: &[String]) -> bool {
    let mut seen = vars.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == vars.len()
}

impl PartialEq for MultiPoly {
    /// Equality up to variable alignment: `z1 + 0*w` equals `z1`.
    fn eq(&self, other: &MultiPoly) -> bool {
        let (a, b) = self.aligned(other);
        a.terms == b.terms
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in self.terms.iter().rev() {
            let negative = coeff.is_negative();
            let magnitude = if negative { -coeff } else { coeff.clone() };
            let mut factors: Vec<String> = Vec::new();
            for (idx, e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars[idx].clone()),
                    _ => factors.push(format!("{}^{}", self.vars[idx], e)),
                }
            }
            let body = if factors.is_empty() {
                magnitude.to_string()
            } else if magnitude.is_one() {
                factors.join("*")
            } else {
                format!("{}*{}", magnitude, factors.join("*"))
            };
            if first {
                if negative {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
                first = false;
            } else if negative {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

/// The three polynomial ring operations, tagged for dispatching callers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(p: &MultiPoly, q: &MultiPoly, op: PolyOp) -> MultiPoly {
    match op {
        PolyOp::Add => p.add(q),
        PolyOp::Sub => p.sub(q),
        PolyOp::Mul => p.mul(q),
    }
}

pub fn poly_equal(p: &MultiPoly, q: &MultiPoly) -> bool {
    p == q
}

/// Recovers the exact coefficients (ascending degree) of the unique
/// polynomial of degree `< samples.len()` through the given `(x, value)`
/// samples. Returns an empty vector for the zero polynomial; repeated nodes
/// fail with [`Error::CoincidentVariables`].
pub fn interpolate_univariate(samples: &[(Scalar, Scalar)]) -> Result<Vec<Scalar>> {
    for (i, (xi, _)) in samples.iter().enumerate() {
        for (xj, _) in &samples[..i] {
            if xi == xj {
                return Err(Error::CoincidentVariables);
            }
        }
    }
    if samples.is_empty() {
        return Ok(Vec::new());
    }
    // Newton's divided differences.
    let n = samples.len();
    let mut table: Vec<Scalar> = samples.iter().map(|(_, y)| y.clone()).collect();
    let mut newton = vec![table[0].clone()];
    for level in 1..n {
        for i in (level..n).rev() {
            let dx = &samples[i].0 - &samples[i - level].0;
            table[i] = (&table[i] - &table[i - 1]).checked_div(&dx)?;
        }
        newton.push(table[level].clone());
    }
    // Expand sum_k newton[k] * prod_{j<k} (x - x_j) into monomial coefficients.
    let mut coeffs: Vec<Scalar> = Vec::new();
    for k in (0..n).rev() {
        // coeffs := coeffs * (x - x_k) + newton[k]
        let mut next = vec![Scalar::zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= &(c * &samples[k].0);
        }
        if next.is_empty() {
            next.push(Scalar::zero());
        }
        next[0] += &newton[k];
        coeffs = next;
    }
    while coeffs.last().is_some_and(Scalar::is_zero) {
        coeffs.pop();
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::numbered;

    fn s(n: i64, d: i64) -> Scalar {
        Scalar::from_fraction(n, d).unwrap()
    }

    fn zvars(n: usize) -> Vec<String> {
        numbered("z", n)
    }

    #[test]
    fn arithmetic_and_normal_form() {
        let vars = zvars(2);
        let z1 = MultiPoly::var(&vars, "z1").unwrap();
        let z2 = MultiPoly::var(&vars, "z2").unwrap();
        let p = z1.add(&z2);
        let q = p.mul(&z1.sub(&z2));
        let expect = z1.pow(2).sub(&z2.pow(2));
        assert_eq!(q, expect);
        assert!(q.sub(&expect).is_zero());
        assert_eq!(q.num_terms(), 2);
    }

    #[test]
    fn alignment_across_variable_lists() {
        let a = MultiPoly::var(&zvars(1), "z1").unwrap();
        let b = MultiPoly::var(&["w1".to_owned()], "w1").unwrap();
        let sum = a.add(&b);
        assert_eq!(sum.vars(), &["z1".to_owned(), "w1".to_owned()]);
        let same = MultiPoly::var(sum.vars(), "z1")
            .unwrap()
            .add(&MultiPoly::var(sum.vars(), "w1").unwrap());
        assert!(poly_equal(&sum, &same));
        // Padding with an unused variable does not break equality.
        assert_eq!(a, a.remap(&["z1".to_owned(), "extra".to_owned()]));
    }

    #[test]
    fn evaluation_matches_by_hand() {
        let vars = zvars(2);
        let z1 = MultiPoly::var(&vars, "z1").unwrap();
        let z2 = MultiPoly::var(&vars, "z2").unwrap();
        // 3*z1^2*z2 - 1/2
        let p = z1
            .pow(2)
            .mul(&z2)
            .scale(&Scalar::from_int(3))
            .add(&MultiPoly::constant(&vars, s(-1, 2)));
        let pt = EvaluationPoint::from_pairs([("z1", s(1, 2)), ("z2", s(2, 3))]);
        assert_eq!(p.eval(&pt).unwrap(), s(0, 1));
        let missing = EvaluationPoint::from_pairs([("z1", s(1, 2))]);
        assert!(matches!(
            p.eval(&missing),
            Err(Error::UnboundVariable(v)) if v == "z2"
        ));
    }

    #[test]
    fn division_by_variable_difference() {
        let vars = zvars(3);
        let z1 = MultiPoly::var(&vars, "z1").unwrap();
        let z2 = MultiPoly::var(&vars, "z2").unwrap();
        let z3 = MultiPoly::var(&vars, "z3").unwrap();
        let p = z1.pow(3).sub(&z2.pow(3));
        let q = p.divide_exact_by_diff("z1", "z2").unwrap();
        let expect = z1.pow(2).add(&z1.mul(&z2)).add(&z2.pow(2));
        assert_eq!(q, expect);
        // (z1 - z2)(z1 - z3)(z2 - z3) divided back out in stages.
        let prod = z1.sub(&z2).mul(&z1.sub(&z3)).mul(&z2.sub(&z3));
        let step = prod
            .divide_exact_by_diff("z1", "z2")
            .unwrap()
            .divide_exact_by_diff("z1", "z3")
            .unwrap()
            .divide_exact_by_diff("z2", "z3")
            .unwrap();
        assert_eq!(step, MultiPoly::constant(&vars, Scalar::one()));
        // Non-alternating input leaves a remainder.
        assert_eq!(
            z1.pow(2).add(&z2).divide_exact_by_diff("z1", "z2"),
            Err(Error::InexactDivision)
        );
    }

    #[test]
    fn display_is_canonical() {
        let vars = zvars(2);
        let z1 = MultiPoly::var(&vars, "z1").unwrap();
        let z2 = MultiPoly::var(&vars, "z2").unwrap();
        let p = z1
            .pow(2)
            .scale(&s(-1, 1))
            .add(&z1.mul(&z2).scale(&s(3, 2)))
            .add(&MultiPoly::constant(&vars, Scalar::one()));
        assert_eq!(p.to_string(), "-z1^2 + 3/2*z1*z2 + 1");
        assert_eq!(MultiPoly::zero(&vars).to_string(), "0");
    }

    #[test]
    fn interpolation_recovers_coefficients() {
        // 2x^3 - x + 1/3 through 5 nodes.
        let poly = |x: &Scalar| &(&x.powu(3) * &Scalar::from_int(2)) - &(x - &s(1, 3));
        let samples: Vec<(Scalar, Scalar)> = (0..5)
            .map(|i| {
                let x = s(i, 2);
                let y = poly(&x);
                (x, y)
            })
            .collect();
        let coeffs = interpolate_univariate(&samples).unwrap();
        assert_eq!(coeffs, vec![s(1, 3), s(-1, 1), s(0, 1), s(2, 1)]);
        // Zero polynomial gives an empty coefficient list.
        let zeros: Vec<(Scalar, Scalar)> = (1..4).map(|i| (s(i, 1), Scalar::zero())).collect();
        assert!(interpolate_univariate(&zeros).unwrap().is_empty());
        // Repeated node is an error.
        let dup = vec![(s(1, 1), s(1, 1)), (s(1, 1), s(2, 1))];
        assert_eq!(
            interpolate_univariate(&dup),
            Err(Error::CoincidentVariables)
        );
    }
}
