//! The uniqueness certificate for the barred wavefunction: the four
//! characterizing properties (degree bound, site symmetry, recursions, and
//! the one-site base case), each run against *both* the lattice route and
//! the permutation-sum route. Together the four clauses pin the function
//! uniquely, so the two routes agreeing clause-by-clause re-derives their
//! equality by the standard partition-function argument.

use itertools::Itertools;

use crate::combinatorics::{k_subsets, PositionVector};
use crate::error::{Error, Result};
use crate::lattice::barred_wavefunction;
use crate::point::{numbered, sample_point, Constraint};
use crate::poly::interpolate_univariate;
use crate::scalar::Scalar;
use crate::symfunc::f_bar_sum;
use crate::verify::identities::positions_label;
use crate::verify::report::{assignment, point_seed, IdentityReport, ReportBuilder};

/// Largest number of rows the certificate accepts.
const MAX_ROWS: usize = 4;
/// Base points sampled for the non-interpolation clauses.
const BASE_POINTS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Route {
    Lattice,
    PermutationSum,
}

impl Route {
    const BOTH: [Route; 2] = [Route::Lattice, Route::PermutationSum];

    fn name(self) -> &'static str {
        match self {
            Route::Lattice => "lattice",
            Route::PermutationSum => "permutation-sum",
        }
    }

    fn eval(
        self,
        w_sites: &[Scalar],
        u: &[Scalar],
        y: &PositionVector,
        q: &Scalar,
    ) -> Result<Scalar> {
        match self {
            Route::Lattice => barred_wavefunction(w_sites, u, y, q),
            Route::PermutationSum => f_bar_sum(w_sites, u, y, q),
        }
    }
}

fn replace_last(values: &[Scalar], value: Scalar) -> Vec<Scalar> {
    let mut out = values.to_vec();
    *out.last_mut().expect("nonempty list") = value;
    out
}

fn eval_coeffs(coeffs: &[Scalar], at: &Scalar) -> Scalar {
    coeffs
        .iter()
        .rev()
        .fold(Scalar::zero(), |acc, c| &(&acc * at) + c)
}

fn row_vectors(n: usize, r: usize) -> Vec<PositionVector> {
    k_subsets(n, r)
        .into_iter()
        .map(|s| PositionVector::new(s.chosen, n).expect("ascending subset"))
        .collect()
}

/// Runs the four-clause certificate for `n` rows with `n − k` creation
/// rows. `m` only offsets the site-parameter indexing in the source
/// derivation and is recorded verbatim.
pub fn verify_prop51(n: usize, k: usize, m: usize, seed: u64) -> Result<IdentityReport> {
    if n == 0 || k >= n {
        return Err(Error::InvalidInput(format!(
            "need n >= 1 and k < n so at least one creation row exists: n={n}, k={k}"
        )));
    }
    if n > MAX_ROWS {
        return Err(Error::InvalidInput(format!(
            "certificate budget: need n <= {MAX_ROWS}, got n={n}"
        )));
    }
    let r = n - k;
    let w_names = numbered("w", r);
    let mut variables = numbered("u", n);
    variables.extend(w_names.iter().cloned());
    variables.push("q".to_string());
    let constraints = vec![
        Constraint::Distinct(w_names),
        Constraint::Avoid("q".to_string(), Scalar::zero()),
        Constraint::Avoid("q".to_string(), Scalar::one()),
    ];

    let top_rows = row_vectors(n - 1, r - 1)
        .into_iter()
        .map(|y| {
            let mut positions = y.positions().to_vec();
            positions.push(n);
            PositionVector::new(positions, n).expect("ascending with n appended")
        })
        .collect::<Vec<_>>();
    let free_rows = if r < n {
        row_vectors(n - 1, r)
            .into_iter()
            .map(|y| PositionVector::new(y.positions().to_vec(), n).expect("fits wider chain"))
            .collect::<Vec<_>>()
    } else {
        Vec::new()
    };

    let mut builder = ReportBuilder::new("prop51")
        .param("n", n)
        .param("k", k)
        .param("m", m)
        .param("q", "sampled");

    for index in 0..BASE_POINTS {
        let point = sample_point(point_seed(seed, index), &variables, &constraints)?;
        let u = point.values("u", n)?;
        let w = point.values("w", r)?;
        let q = point.require("q")?.clone();
        let un_name = format!("u{n}");

        // Clause 1: with the top row a creation row, the value is a
        // polynomial of degree exactly r in the top row parameter.
        // Certificate: interpolate at r + 2 nodes, confirm the recovered
        // degree, and confirm the interpolant predicts a holdout node.
        for y in &top_rows {
            for route in Route::BOTH {
                let nodes: Vec<(Scalar, Scalar)> = (1..=r as i64 + 2)
                    .map(|t| {
                        let node = Scalar::from_int(t);
                        route
                            .eval(&w, &replace_last(&u, node.clone()), y, &q)
                            .map(|value| (node, value))
                    })
                    .collect::<Result<_>>()?;
                let coeffs = interpolate_univariate(&nodes)?;
                let degree = coeffs.len().saturating_sub(1);
                builder.check_with(
                    coeffs.len() == r + 1,
                    || {
                        assignment(
                            &point,
                            &[
                                ("clause", "degree".to_string()),
                                ("route", route.name().to_string()),
                                ("y", positions_label(y)),
                            ],
                        )
                    },
                    || format!("degree {degree}"),
                    || format!("degree {r}"),
                );
                let holdout = Scalar::from_int(r as i64 + 3);
                let predicted = eval_coeffs(&coeffs, &holdout);
                let actual = route.eval(&w, &replace_last(&u, holdout.clone()), y, &q)?;
                builder.check_scalars(
                    || {
                        assignment(
                            &point,
                            &[
                                ("clause", "degree-holdout".to_string()),
                                ("route", route.name().to_string()),
                                ("y", positions_label(y)),
                                (un_name.as_str(), holdout.to_string()),
                            ],
                        )
                    },
                    &predicted,
                    &actual,
                );
            }
        }

        // Clause 2: symmetry under permuting the site parameters.
        for y in top_rows.iter().chain(free_rows.iter()) {
            for route in Route::BOTH {
                let base = route.eval(&w, &u, y, &q)?;
                for perm in (0..r).permutations(r) {
                    if perm.iter().enumerate().all(|(i, &p)| i == p) {
                        continue;
                    }
                    let shuffled: Vec<Scalar> = perm.iter().map(|&p| w[p].clone()).collect();
                    let value = route.eval(&shuffled, &u, y, &q)?;
                    let label = perm.iter().map(|p| (p + 1).to_string()).join(",");
                    builder.check_scalars(
                        || {
                            assignment(
                                &point,
                                &[
                                    ("clause", "symmetry".to_string()),
                                    ("route", route.name().to_string()),
                                    ("y", positions_label(y)),
                                    ("perm", label.clone()),
                                ],
                            )
                        },
                        &value,
                        &base,
                    );
                }
            }
        }

        // Clause 3, creation top row: the value vanishes at u_n = 0, and
        // freezing u_n to the last site parameter peels off one row and one
        // site as an explicit factor.
        for y in &top_rows {
            let sub_y = PositionVector::new(y.positions()[..r - 1].to_vec(), n - 1)?;
            for route in Route::BOTH {
                let at_zero = route.eval(&w, &replace_last(&u, Scalar::zero()), y, &q)?;
                builder.check_with(
                    at_zero.is_zero(),
                    || {
                        assignment(
                            &point,
                            &[
                                ("clause", "vanish-at-zero".to_string()),
                                ("route", route.name().to_string()),
                                ("y", positions_label(y)),
                                (un_name.as_str(), "0".to_string()),
                            ],
                        )
                    },
                    || at_zero.to_string(),
                    || Scalar::zero().to_string(),
                );

                let w_last = w[r - 1].clone();
                let frozen = route.eval(&w, &replace_last(&u, w_last.clone()), y, &q)?;
                let mut factor = &(&Scalar::one() - &q) * &w_last;
                for w_j in &w[..r - 1] {
                    factor *= &(&w_last - &(&q * w_j));
                }
                for u_j in &u[..n - 1] {
                    factor *= &(u_j - &(&q * &w_last));
                }
                let smaller = route.eval(&w[..r - 1], &u[..n - 1], &sub_y, &q)?;
                let peeled = &factor * &smaller;
                builder.check_scalars(
                    || {
                        assignment(
                            &point,
                            &[
                                ("clause", "freeze-at-site".to_string()),
                                ("route", route.name().to_string()),
                                ("y", positions_label(y)),
                                (un_name.as_str(), w_last.to_string()),
                            ],
                        )
                    },
                    &frozen,
                    &peeled,
                );
            }
        }

        // Clause 3, preserved top row: the top row factors out of the
        // wavefunction entirely.
        for y in &free_rows {
            let sub_y = PositionVector::new(y.positions().to_vec(), n - 1)?;
            for route in Route::BOTH {
                let full = route.eval(&w, &u, y, &q)?;
                let mut factor = Scalar::one();
                for w_j in &w {
                    factor *= &(&q * &(&u[n - 1] - w_j));
                }
                let smaller = route.eval(&w, &u[..n - 1], &sub_y, &q)?;
                let stripped = &factor * &smaller;
                builder.check_scalars(
                    || {
                        assignment(
                            &point,
                            &[
                                ("clause", "strip-row".to_string()),
                                ("route", route.name().to_string()),
                                ("y", positions_label(y)),
                            ],
                        )
                    },
                    &full,
                    &stripped,
                );
            }
        }

        // Clause 4: the one-site base case has a closed product form.
        let base_y = PositionVector::new(vec![n], n)?;
        let base_w = [w[0].clone()];
        let mut closed = &(&Scalar::one() - &q) * &u[n - 1];
        for u_j in &u[..n - 1] {
            closed *= &(u_j - &(&q * &w[0]));
        }
        for route in Route::BOTH {
            let value = route.eval(&base_w, &u, &base_y, &q)?;
            builder.check_scalars(
                || {
                    assignment(
                        &point,
                        &[
                            ("clause", "base".to_string()),
                            ("route", route.name().to_string()),
                            ("y", positions_label(&base_y)),
                        ],
                    )
                },
                &value,
                &closed,
            );
        }
    }
    Ok(builder.finish())
}
