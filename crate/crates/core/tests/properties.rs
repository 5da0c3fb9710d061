//! Property-based checks of the algebraic substrate.
//!
//! Everything downstream (determinants, lattice weights, permutation sums)
//! leans on a handful of exact primitives; these proptests pin the laws the
//! rest of the crate silently assumes.

use proptest::prelude::*;

use fgp_core::combinatorics::{partition_from_positions, positions_from_partition, Partition};
use fgp_core::grothendieck::{grothendieck_det, oplus, FactorialAlphabet};
use fgp_core::poly::interpolate_univariate;
use fgp_core::Scalar;

fn rational() -> impl Strategy<Value = Scalar> {
    (-40i64..=40, 1i64..=12).prop_map(|(num, den)| Scalar::from_fraction(num, den).unwrap())
}

fn partition_in_box(rows: usize, cols: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=cols, 1..=rows).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn horner(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    coeffs
        .iter()
        .rev()
        .fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
}

proptest! {
    #[test]
    fn scalar_ring_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Scalar::zero());
    }

    #[test]
    fn scalar_inverses_cancel(a in rational()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
        prop_assert_eq!(a.checked_div(&a).unwrap(), Scalar::one());
    }

    #[test]
    fn scalar_text_round_trips(a in rational()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<Scalar>().unwrap(), a);
    }

    /// `z ⊕ α = z + α + β z α` is a commutative, associative group law for
    /// any fixed `β`; the factorial powers rely on both without saying so.
    #[test]
    fn deformed_addition_is_commutative_and_associative(
        x in rational(),
        y in rational(),
        t in rational(),
        beta in rational(),
    ) {
        prop_assert_eq!(oplus(&x, &y, &beta), oplus(&y, &x, &beta));
        prop_assert_eq!(
            oplus(&oplus(&x, &y, &beta), &t, &beta),
            oplus(&x, &oplus(&y, &t, &beta), &beta)
        );
        prop_assert_eq!(oplus(&x, &Scalar::zero(), &beta), x);
    }

    #[test]
    fn partition_positions_round_trip(
        lambda in partition_in_box(4, 5),
        slack in 0usize..=3,
    ) {
        let chain = lambda.first() + lambda.len() + slack;
        let x = positions_from_partition(&lambda, chain).unwrap();
        prop_assert_eq!(x.len(), lambda.len());
        prop_assert_eq!(x.chain_len(), chain);
        prop_assert_eq!(partition_from_positions(&x), lambda);
    }

    #[test]
    fn interpolation_recovers_polynomials(
        ints in prop::collection::vec(-9i64..=9, 0..=5),
    ) {
        let coeffs: Vec<Scalar> = ints.iter().map(|&c| Scalar::from_int(c)).collect();
        let samples: Vec<(Scalar, Scalar)> = (0..=coeffs.len() as i64)
            .map(|i| {
                let x = Scalar::from_fraction(i, 2).unwrap();
                let y = horner(&coeffs, &x);
                (x, y)
            })
            .collect();
        let recovered = interpolate_univariate(&samples).unwrap();
        let mut trimmed = coeffs;
        while trimmed.last().is_some_and(Scalar::is_zero) {
            trimmed.pop();
        }
        prop_assert_eq!(recovered, trimmed);
    }

    /// `G_λ(z|α)` is a symmetric function of `z`: the determinant ratio
    /// must not notice a permutation of the variables.
    #[test]
    fn grothendieck_is_symmetric_in_z(
        lambda in partition_in_box(3, 3),
        raw in prop::collection::vec((1i64..=30, 1i64..=7), 6),
        beta in rational(),
    ) {
        let lambda = lambda.padded(3).unwrap();
        let z: Vec<Scalar> = raw[..3]
            .iter()
            .map(|&(num, den)| Scalar::from_fraction(num, den).unwrap())
            .collect();
        prop_assume!(z[0] != z[1] && z[0] != z[2] && z[1] != z[2]);
        let alphas: Vec<Scalar> = raw[1..]
            .iter()
            .map(|&(num, den)| Scalar::from_fraction(num, den + 7).unwrap())
            .collect();
        let alphabet = FactorialAlphabet::new(alphas, beta);

        let base = grothendieck_det(&lambda, &z, &alphabet).unwrap();
        let swapped = vec![z[1].clone(), z[0].clone(), z[2].clone()];
        let cycled = vec![z[2].clone(), z[0].clone(), z[1].clone()];
        prop_assert_eq!(grothendieck_det(&lambda, &swapped, &alphabet).unwrap(), base.clone());
        prop_assert_eq!(grothendieck_det(&lambda, &cycled, &alphabet).unwrap(), base);
    }
}
