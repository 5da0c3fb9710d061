//! End-to-end agreement of the three evaluation routes.
//!
//! The determinant formula, the lattice wavefunction, and the permutation
//! sum are implemented in separate modules that share nothing beyond scalars
//! and polynomials, so their agreement on a common value is real evidence.
//! This file drives all three through the public API the way a caller would,
//! plus two independent oracles: a worked example frozen by hand, and a
//! semistandard-tableau enumeration for the Schur specialization.

use fgp_core::combinatorics::{
    partitions_in_box, positions_from_partition, variable_map, MapDirection, Partition,
};
use fgp_core::grothendieck::{
    grothendieck_det, grothendieck_symbolic, oplus, BetaSpec, FactorialAlphabet,
};
use fgp_core::lattice::wavefunction;
use fgp_core::point::{numbered, sample_point, Constraint};
use fgp_core::poly::MultiPoly;
use fgp_core::symfunc::f_sum;
use fgp_core::Scalar;

fn s(num: i64, den: i64) -> Scalar {
    Scalar::from_fraction(num, den).unwrap()
}

fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Samples distinct `z1..zn` (all avoiding 1, where the chain map is
/// singular) and a free alphabet `a1..aM`.
fn sample_z_alpha(seed: u64, n: usize, alphabet_len: usize) -> (Vec<Scalar>, Vec<Scalar>) {
    let z_names = numbered("z", n);
    let mut variables = z_names.clone();
    variables.extend(numbered("a", alphabet_len));
    let mut constraints = vec![Constraint::Distinct(z_names.clone())];
    for name in &z_names {
        constraints.push(Constraint::Avoid(name.clone(), Scalar::one()));
    }
    let point = sample_point(seed, &variables, &constraints).unwrap();
    (
        point.values("z", n).unwrap(),
        point.values("a", alphabet_len).unwrap(),
    )
}

/// Evaluates `G_λ(z|α)` at `β = −1` by all three routes and insists they
/// agree: determinant ratio, six-vertex wavefunction at `q = 0` divided by
/// `∏ u_j^L`, and the permutation sum under the same normalization.
fn assert_three_routes_agree(lambda: &Partition, chain: usize, z: &[Scalar], alphas: &[Scalar]) {
    let n = lambda.len();
    let alphabet = FactorialAlphabet::new(alphas.to_vec(), -Scalar::one());
    let det = grothendieck_det(lambda, z, &alphabet).unwrap();

    let u: Vec<Scalar> = z
        .iter()
        .map(|value| variable_map(MapDirection::ZToU, value).unwrap())
        .collect();
    let w: Vec<Scalar> = alphas[..chain]
        .iter()
        .map(|value| variable_map(MapDirection::AlphaToW, value).unwrap())
        .collect();
    let x = positions_from_partition(lambda, chain).unwrap();
    let q = Scalar::zero();
    let scale = u
        .iter()
        .fold(Scalar::one(), |acc, uj| &acc * &uj.powu(chain as u32));

    let lattice = wavefunction(&u, &w, &x, &q).unwrap();
    assert_eq!(
        lattice,
        &scale * &det,
        "lattice route disagrees for λ = {:?} with {n} rows",
        lambda.parts()
    );

    let permutation_sum = f_sum(&u, &w, &x, &q).unwrap();
    assert_eq!(
        permutation_sum,
        &scale * &det,
        "permutation-sum route disagrees for λ = {:?} with {n} rows",
        lambda.parts()
    );
}

#[test]
fn three_routes_agree_on_every_shape_in_the_box() {
    let n = 3;
    let chain = 6;
    for lambda in partitions_in_box(n, 3) {
        for index in 0..2u64 {
            let (z, alphas) = sample_z_alpha(41 + index, n, chain);
            assert_three_routes_agree(&lambda, chain, &z, &alphas);
        }
    }
}

#[test]
fn three_routes_agree_for_two_rows_on_a_short_chain() {
    for lambda in partitions_in_box(2, 2) {
        let (z, alphas) = sample_z_alpha(7, 2, 4);
        assert_three_routes_agree(&lambda, 4, &z, &alphas);
    }
}

/// The single-box polynomial for two variables at `β = −1`, written out by
/// hand:
///
/// ```text
/// G_(1,0) = (1−α1)(1−α2)(z1 + z2 − z1 z2) + α1 + α2 − α1 α2
/// ```
///
/// At `z = (1/2, 1/3)`, `α = (1/5, 1/7)` the pieces are `(4/5)(6/7) = 24/35`,
/// `z1 + z2 − z1 z2 = 2/3`, and `α1 + α2 − α1 α2 = 11/35`, so the value is
/// `16/35 + 11/35 = 27/35`.
#[test]
fn worked_example_value_is_frozen() {
    let z = [s(1, 2), s(1, 3)];
    let alphas = vec![s(1, 5), s(1, 7)];
    let alphabet = FactorialAlphabet::new(alphas.clone(), -Scalar::one());
    let expected = s(27, 35);

    let det = grothendieck_det(&part(&[1, 0]), &z, &alphabet).unwrap();
    assert_eq!(det, expected);

    // The closed form evaluated directly.
    let one = Scalar::one();
    let envelope = &(&one - &alphas[0]) * &(&one - &alphas[1]);
    let z_part = &(&z[0] + &z[1]) - &(&z[0] * &z[1]);
    let alpha_part = &(&alphas[0] + &alphas[1]) - &(&alphas[0] * &alphas[1]);
    assert_eq!(&(&envelope * &z_part) + &alpha_part, expected);
}

#[test]
fn worked_example_polynomial_matches_closed_form() {
    let expanded = grothendieck_symbolic(&part(&[1, 0]), 2, 2, &BetaSpec::Fixed(s(-1, 1))).unwrap();

    let vars: Vec<String> = ["z1", "z2", "a1", "a2"]
        .iter()
        .map(|v| (*v).to_string())
        .collect();
    let var = |name: &str| MultiPoly::var(&vars, name).unwrap();
    let one = MultiPoly::constant(&vars, Scalar::one());
    let envelope = one.sub(&var("a1")).mul(&one.sub(&var("a2")));
    let z_part = var("z1").add(&var("z2")).sub(&var("z1").mul(&var("z2")));
    let alpha_part = var("a1").add(&var("a2")).sub(&var("a1").mul(&var("a2")));
    let closed_form = envelope.mul(&z_part).add(&alpha_part);

    assert_eq!(expanded, closed_form);
    assert_eq!(expanded.num_terms(), 15);

    // The same value as the numeric route at the frozen point.
    let point = fgp_core::point::EvaluationPoint::from_pairs([
        ("z1", s(1, 2)),
        ("z2", s(1, 3)),
        ("a1", s(1, 5)),
        ("a2", s(1, 7)),
    ]);
    assert_eq!(expanded.eval(&point).unwrap(), s(27, 35));
}

#[test]
fn empty_partition_is_the_constant_one() {
    for n in 1..=4 {
        let (z, _) = sample_z_alpha(13, n, 0);
        for beta in [Scalar::zero(), s(-1, 1), s(2, 3)] {
            let alphabet = FactorialAlphabet::zeros(n, beta);
            let lambda = part(&vec![0; n]);
            assert_eq!(
                grothendieck_det(&lambda, &z, &alphabet).unwrap(),
                Scalar::one()
            );
        }
    }
    let symbolic = grothendieck_symbolic(&part(&[0, 0]), 2, 1, &BetaSpec::Symbolic).unwrap();
    assert_eq!(symbolic.to_string(), "1");
}

#[test]
fn single_row_single_variable_is_a_factorial_power() {
    // G_(k)(z1|α) = [z1|α]^k = ∏_{l=1}^k (z1 ⊕ α_l) for one variable.
    let (z, alphas) = sample_z_alpha(29, 1, 4);
    let beta = s(2, 5);
    let alphabet = FactorialAlphabet::new(alphas.clone(), beta.clone());
    for k in 0..=4usize {
        let expected = alphas[..k]
            .iter()
            .fold(Scalar::one(), |acc, al| &acc * &oplus(&z[0], al, &beta));
        assert_eq!(
            grothendieck_det(&part(&[k]), &z, &alphabet).unwrap(),
            expected
        );
    }
}

/// Counts each semistandard tableau of shape `lambda` with entries in
/// `1..=n` once, weighted by `∏ z_entry`. Rows weakly increase, columns
/// strictly increase. This is the combinatorial definition of the Schur
/// polynomial — no determinants anywhere — so it is an independent oracle
/// for the `β = 0`, `α ≡ 0` specialization.
fn schur_by_tableaux(lambda: &Partition, z: &[Scalar]) -> Scalar {
    let shape: Vec<usize> = lambda.parts().iter().copied().filter(|&p| p > 0).collect();
    let n = z.len();
    let mut total = Scalar::zero();
    let mut rows: Vec<Vec<usize>> = Vec::new();

    fn fill(
        shape: &[usize],
        n: usize,
        z: &[Scalar],
        rows: &mut Vec<Vec<usize>>,
        total: &mut Scalar,
    ) {
        let r = rows.len();
        if r == shape.len() {
            let mut weight = Scalar::one();
            for row in rows.iter() {
                for &entry in row {
                    weight *= &z[entry - 1];
                }
            }
            *total += &weight;
            return;
        }
        let len = shape[r];
        let mut row = vec![0usize; len];
        fn extend(
            shape: &[usize],
            n: usize,
            z: &[Scalar],
            rows: &mut Vec<Vec<usize>>,
            row: &mut Vec<usize>,
            col: usize,
            total: &mut Scalar,
        ) {
            if col == row.len() {
                rows.push(row.clone());
                fill(shape, n, z, rows, total);
                rows.pop();
                return;
            }
            let r = rows.len();
            let mut lo = if col > 0 { row[col - 1] } else { 1 };
            if r > 0 {
                lo = lo.max(rows[r - 1][col] + 1);
            }
            for entry in lo..=n {
                row[col] = entry;
                extend(shape, n, z, rows, row, col + 1, total);
            }
        }
        extend(shape, n, z, rows, &mut row, 0, total);
    }

    if shape.is_empty() {
        return Scalar::one();
    }
    fill(&shape, n, z, &mut rows, &mut total);
    total
}

#[test]
fn schur_specialization_matches_tableau_enumeration() {
    let n = 3;
    let alphabet = FactorialAlphabet::zeros(5, Scalar::zero());
    for lambda in partitions_in_box(n, 3) {
        for index in 0..2u64 {
            let (z, _) = sample_z_alpha(57 + index, n, 0);
            let det = grothendieck_det(&lambda, &z, &alphabet).unwrap();
            let tableaux = schur_by_tableaux(&lambda, &z);
            assert_eq!(
                det,
                tableaux,
                "Schur oracle disagrees for λ = {:?}",
                lambda.parts()
            );
        }
    }
}

#[test]
fn schur_hook_shape_in_two_variables_by_hand() {
    // s_(2,1)(z1, z2) = z1^2 z2 + z1 z2^2: two tableaux, 11/2 and 12/2.
    let z = [s(2, 1), s(3, 1)];
    let alphabet = FactorialAlphabet::zeros(3, Scalar::zero());
    let value = grothendieck_det(&part(&[2, 1]), &z, &alphabet).unwrap();
    assert_eq!(value, s(4 * 3 + 2 * 9, 1));
}
