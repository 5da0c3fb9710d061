//! Seeded evaluation points.
//!
//! Identity verification in this crate means: sample an assignment for every
//! variable from a fixed rational pool, check the claimed equality exactly,
//! repeat. This module owns the sampling. Draws come from a counter-based
//! ChaCha stream so a `(seed, variables, constraints)` triple always yields
//! the same point, on every platform; constraints are enforced by whole-point
//! rejection so the accepted assignment is independent of constraint order.
//!
//! The default pool is `{ p/q : 1 <= p, q <= 97 }` — strictly positive and
//! bounded away from zero, which keeps generic denominators like `z_i - z_j`
//! nonzero unless two variables actually collide (and collisions are exactly
//! what [`Constraint::Distinct`] rejects).

use std::collections::BTreeMap;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Largest numerator/denominator drawn by the sampler.
pub const POOL_BOUND: u64 = 97;

/// Rejection budget for one `sample_point` call.
pub const DRAW_BUDGET: usize = 10_000;

/// A predicate an assignment must satisfy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constraint {
    /// The listed variables are pairwise distinct.
    Distinct(Vec<String>),
    /// Each listed variable is nonzero.
    Nonzero(Vec<String>),
    /// The two variables differ.
    NotEqual(String, String),
    /// The variable avoids one fixed value.
    Avoid(String, Scalar),
}

impl Constraint {
    /// All variables the constraint mentions.
    fn variables(&self) -> Vec<&str> {
        match self {
            Constraint::Distinct(vs) | Constraint::Nonzero(vs) => {
                vs.iter().map(String::as_str).collect()
            }
            Constraint::NotEqual(a, b) => vec![a, b],
            Constraint::Avoid(v, _) => vec![v],
        }
    }

    fn holds(&self, assignment: &BTreeMap<String, Scalar>) -> Result<bool> {
        let get = |name: &str| {
            assignment
                .get(name)
                .ok_or_else(|| Error::UnboundVariable(name.to_owned()))
        };
        Ok(match self {
            Constraint::Distinct(vs) => {
                let mut seen: Vec<&Scalar> = Vec::with_capacity(vs.len());
                for v in vs {
                    let value = get(v)?;
                    if seen.contains(&value) {
                        return Ok(false);
                    }
                    seen.push(value);
                }
                true
            }
            Constraint::Nonzero(vs) => {
                for v in vs {
                    if get(v)?.is_zero() {
                        return Ok(false);
                    }
                }
                true
            }
            Constraint::NotEqual(a, b) => get(a)? != get(b)?,
            Constraint::Avoid(v, value) => get(v)? != value,
        })
    }
}

/// An exact assignment of scalars to named variables, together with the
/// constraints it was checked against.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EvaluationPoint {
    assignments: BTreeMap<String, Scalar>,
    constraints: Vec<Constraint>,
}

impl EvaluationPoint {
    /// Wraps an explicit assignment, verifying every constraint.
    pub fn new(
        assignments: BTreeMap<String, Scalar>,
        constraints: Vec<Constraint>,
    ) -> Result<Self> {
        let point = EvaluationPoint {
            assignments,
            constraints,
        };
        for c in &point.constraints {
            if !c.holds(&point.assignments)? {
                return Err(Error::CoincidentVariables);
            }
        }
        Ok(point)
    }

    /// Convenience constructor from `(name, value)` pairs, no constraints.
    pub fn from_pairs<I, S>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (S, Scalar)>,
        S: Into<String>,
    {
        EvaluationPoint {
            assignments: pairs.into_iter().map(|(k, v)| (k.into(), v)).collect(),
            constraints: Vec::new(),
        }
    }

    pub fn get(&self, name: &str) -> Option<&Scalar> {
        self.assignments.get(name)
    }

    pub fn require(&self, name: &str) -> Result<&Scalar> {
        self.get(name)
            .ok_or_else(|| Error::UnboundVariable(name.to_owned()))
    }

    /// Values for a numbered family, e.g. `values("z", 3)` -> `[z1, z2, z3]`.
    pub fn values(&self, prefix: &str, count: usize) -> Result<Vec<Scalar>> {
        (1..=count)
            .map(|i| self.require(&format!("{prefix}{i}")).cloned())
            .collect()
    }

    pub fn assignments(&self) -> &BTreeMap<String, Scalar> {
        &self.assignments
    }

    pub fn insert(&mut self, name: impl Into<String>, value: Scalar) {
        self.assignments.insert(name.into(), value);
    }

    /// The assignment rendered as strings, for failure witnesses.
    pub fn rendered(&self) -> BTreeMap<String, String> {
        self.assignments
            .iter()
            .map(|(k, v)| (k.clone(), v.to_string()))
            .collect()
    }
}

/// Standard variable list `prefix1..prefixN`.
pub fn numbered(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

fn draw(rng: &mut ChaCha8Rng) -> Scalar {
    let p = 1 + (rng.next_u64() % POOL_BOUND) as i64;
    let q = 1 + (rng.next_u64() % POOL_BOUND) as i64;
    Scalar::from_fraction(p, q).expect("pool denominator is positive")
}

/// Draws one assignment for `variables` satisfying all `constraints`.
///
/// Deterministic in `(seed, variables, constraints)`. Rejection sampling over
/// whole assignments, so acceptance does not depend on variable order. Fails
/// with [`Error::ConstraintUnsatisfiable`] after [`DRAW_BUDGET`] rejections,
/// and with [`Error::UnboundVariable`] if a constraint mentions a variable
/// outside `variables`.
pub fn sample_point(
    seed: u64,
    variables: &[String],
    constraints: &[Constraint],
) -> Result<EvaluationPoint> {
    for c in constraints {
        for v in c.variables() {
            if !variables.iter().any(|have| have == v) {
                return Err(Error::UnboundVariable(v.to_owned()));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..DRAW_BUDGET {
        let assignments: BTreeMap<String, Scalar> = variables
            .iter()
            .map(|v| (v.clone(), draw(&mut rng)))
            .collect();
        let mut ok = true;
        for c in constraints {
            if !c.holds(&assignments)? {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(EvaluationPoint {
                assignments,
                constraints: constraints.to_vec(),
            });
        }
    }
    Err(Error::ConstraintUnsatisfiable(DRAW_BUDGET))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_fixed_inputs() {
        let vars = numbered("u", 4);
        let cons = vec![Constraint::Distinct(vars.clone())];
        let a = sample_point(1, &vars, &cons).unwrap();
        let b = sample_point(1, &vars, &cons).unwrap();
        assert_eq!(a, b);
        let c = sample_point(2, &vars, &cons).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn constraints_hold_on_sampled_points() {
        let vars = numbered("u", 3);
        let cons = vec![
            Constraint::Distinct(vars.clone()),
            Constraint::Nonzero(vars.clone()),
            Constraint::Avoid("u1".into(), Scalar::one()),
        ];
        for seed in 0..50 {
            let pt = sample_point(seed, &vars, &cons).unwrap();
            let u = pt.values("u", 3).unwrap();
            assert_ne!(u[0], u[1]);
            assert_ne!(u[0], u[2]);
            assert_ne!(u[1], u[2]);
            assert!(u.iter().all(|x| !x.is_zero()));
            assert_ne!(u[0], Scalar::one());
        }
    }

    #[test]
    fn contradictory_constraint_exhausts_budget() {
        let vars = vec!["x".to_owned()];
        let cons = vec![Constraint::NotEqual("x".into(), "x".into())];
        assert_eq!(
            sample_point(1, &vars, &cons),
            Err(Error::ConstraintUnsatisfiable(DRAW_BUDGET))
        );
    }

    #[test]
    fn constraint_on_unknown_variable_is_rejected() {
        let vars = numbered("z", 2);
        let cons = vec![Constraint::Nonzero(vec!["w1".into()])];
        assert_eq!(
            sample_point(1, &vars, &cons),
            Err(Error::UnboundVariable("w1".into()))
        );
    }

    #[test]
    fn explicit_point_checks_constraints() {
        let mut m = BTreeMap::new();
        m.insert("z1".to_owned(), Scalar::from_int(2));
        m.insert("z2".to_owned(), Scalar::from_int(2));
        let err = EvaluationPoint::new(
            m,
            vec![Constraint::Distinct(vec!["z1".into(), "z2".into()])],
        );
        assert_eq!(err, Err(Error::CoincidentVariables));
    }

    #[test]
    fn pool_values_in_range() {
        let vars = numbered("x", 8);
        let pt = sample_point(9, &vars, &[]).unwrap();
        let lo = Scalar::from_fraction(1, POOL_BOUND as i64).unwrap();
        let hi = Scalar::from_int(POOL_BOUND as i64);
        for v in pt.assignments().values() {
            assert!(*v >= lo && *v <= hi);
        }
    }
}
