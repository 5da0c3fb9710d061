//! Partitions, particle positions, and subset bookkeeping.
//!
//! The lattice picture and the polynomial picture are glued together by one
//! bijection: a partition `λ = (λ1 >= … >= λn >= 0)` with `λ1 + n <= L`
//! corresponds to the strictly increasing position vector
//! `x_i = λ_{n−i+1} + i` on a chain of `L` sites. This module owns that
//! bijection, the widening construction that turns a short partition into
//! the taller one appearing in the subset-sum identities, the enumeration of
//! `k`-subsets used by those sums, and the rational changes of variables
//! between the two coordinate systems the identities are stated in.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Longest chain representable by the `u64` basis masks used in the lattice
/// module; far beyond the verification budget.
pub const MAX_CHAIN_LEN: usize = 60;

/// A weakly decreasing sequence of nonnegative parts with explicit length
/// (trailing zeros are significant: `(1,0)` has two rows, `(1)` has one).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidInput(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of rows, counting explicit zeros.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The first (largest) part; zero for the empty partition.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Extends with trailing zeros to exactly `n` rows.
    pub fn padded(&self, n: usize) -> Result<Self> {
        if n < self.parts.len() {
            return Err(Error::InvalidInput(format!(
                "cannot pad {} rows down to {n}",
                self.parts.len()
            )));
        }
        let mut parts = self.parts.clone();
        parts.resize(n, 0);
        Ok(Partition { parts })
    }
}

/// Strictly increasing particle positions `1 <= x_1 < … < x_n <= L` on a
/// chain of `L` sites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionVector {
    positions: Vec<usize>,
    chain_len: usize,
}

impl PositionVector {
    pub fn new(positions: Vec<usize>, chain_len: usize) -> Result<Self> {
        if chain_len > MAX_CHAIN_LEN {
            return Err(Error::InvalidInput(format!(
                "chain length {chain_len} exceeds supported maximum {MAX_CHAIN_LEN}"
            )));
        }
        if positions.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::InvalidInput(format!(
                "positions not strictly increasing: {positions:?}"
            )));
        }
        if positions.first().is_some_and(|&p| p == 0)
            || positions.last().is_some_and(|&p| p > chain_len)
        {
            return Err(Error::InvalidInput(format!(
                "positions {positions:?} outside 1..={chain_len}"
            )));
        }
        Ok(PositionVector {
            positions,
            chain_len,
        })
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn chain_len(&self) -> usize {
        self.chain_len
    }

    /// Occupation bitmask: bit `i-1` set iff site `i` holds a particle.
    pub fn bitmask(&self) -> u64 {
        self.positions.iter().map(|p| 1u64 << (p - 1)).sum()
    }
}

/// An ordered split of `{1, …, n}` into a chosen `k`-subset and its
/// complement, both ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetSplit {
    pub chosen: Vec<usize>,
    pub complement: Vec<usize>,
}

/// Particle positions of a partition on a chain of `L` sites.
pub fn positions_from_partition(lambda: &Partition, chain_len: usize) -> Result<PositionVector> {
    let n = lambda.len();
    let needed = lambda.first() + n;
    if needed > chain_len {
        return Err(Error::BoxOverflow {
            part: lambda.first(),
            needed,
            chain_len,
        });
    }
    let positions = (1..=n)
        .map(|i| lambda.parts()[n - i] + i)
        .collect::<Vec<_>>();
    PositionVector::new(positions, chain_len)
}

/// Inverse of [`positions_from_partition`].
pub fn partition_from_positions(x: &PositionVector) -> Partition {
    let n = x.len();
    let parts = (1..=n)
        .map(|j| x.positions()[n - j] - (n - j + 1))
        .collect::<Vec<_>>();
    Partition { parts }
}

/// Widens `λ` (at most `k = λ.len()` rows, first part at most `m − k`) to
/// the `n`-row partition `((m−k)^{n−k}, λ1, …, λk)`.
pub fn build_mu(lambda: &Partition, m: usize, n: usize) -> Result<Partition> {
    let k = lambda.len();
    if k > n || k > m {
        return Err(Error::InvalidInput(format!(
            "need k <= min(n, m): k={k}, n={n}, m={m}"
        )));
    }
    let bound = m - k;
    if lambda.first() > bound {
        return Err(Error::ProfileViolation {
            first: lambda.first(),
            bound,
        });
    }
    let mut parts = vec![bound; n - k];
    parts.extend_from_slice(lambda.parts());
    Ok(Partition { parts })
}

/// All `k`-subsets of `{1, …, n}` with their complements, in lexicographic
/// order of the chosen subset. Empty when `k > n`.
pub fn k_subsets(n: usize, k: usize) -> Vec<SubsetSplit> {
    (1..=n)
        .combinations(k)
        .map(|chosen| {
            let complement = (1..=n).filter(|i| !chosen.contains(i)).collect();
            SubsetSplit { chosen, complement }
        })
        .collect()
}

/// All ordered tuples `(a_1, …, a_r)` of pairwise-distinct indices with
/// `1 ≤ a_j ≤ bounds[j-1]`, in lexicographic order. One empty tuple when
/// `bounds` is empty.
pub fn index_tuples(bounds: &[usize]) -> Vec<Vec<usize>> {
    fn extend(bounds: &[usize], prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == bounds.len() {
            out.push(prefix.clone());
            return;
        }
        for a in 1..=bounds[prefix.len()] {
            if prefix.contains(&a) {
                continue;
            }
            prefix.push(a);
            extend(bounds, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(bounds, &mut Vec::new(), &mut out);
    out
}

/// All partitions with exactly `rows` rows (zeros allowed) and parts at most
/// `cols`, ascending in lexicographic order of the part vector.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    fn extend(prefix: &mut Vec<usize>, rows: usize, bound: usize, out: &mut Vec<Partition>) {
        if prefix.len() == rows {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in 0..=bound {
            prefix.push(part);
            extend(prefix, rows, part, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    extend(&mut prefix, rows, cols, &mut out);
    out.sort();
    out
}

/// The rational changes of variables connecting the polynomial coordinates
/// `(z, α)` to the lattice coordinates `(u, w)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapDirection {
    /// `u = 1 / (1 − z)`, singular at `z = 1`.
    ZToU,
    /// `z = (u − 1) / u`, singular at `u = 0`.
    UToZ,
    /// `w = 1 − α`, total.
    AlphaToW,
    /// `α = 1 − w`, total.
    WToAlpha,
}

pub fn variable_map(direction: MapDirection, value: &Scalar) -> Result<Scalar> {
    let one = Scalar::one();
    match direction {
        MapDirection::ZToU => one
            .checked_div(&(&one - value))
            .map_err(|_| Error::SingularMap(value.to_string())),
        MapDirection::UToZ => (value - &one)
            .checked_div(value)
            .map_err(|_| Error::SingularMap(value.to_string())),
        MapDirection::AlphaToW | MapDirection::WToAlpha => Ok(&one - value),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![3, 2, 2, 0]).is_ok());
        assert!(Partition::new(vec![2, 3]).is_err());
        assert_eq!(part(&[]).first(), 0);
        assert_eq!(part(&[4, 1]).first(), 4);
        assert_eq!(part(&[1]).padded(3).unwrap(), part(&[1, 0, 0]));
        assert!(part(&[1, 0]).padded(1).is_err());
    }

    #[test]
    fn positions_of_known_shapes() {
        // Five particles on eight sites.
        let x = positions_from_partition(&part(&[3, 2, 1, 1, 1]), 8).unwrap();
        assert_eq!(x.positions(), &[2, 3, 4, 6, 8]);
        let x = positions_from_partition(&part(&[3, 3, 3, 2, 1]), 8).unwrap();
        assert_eq!(x.positions(), &[2, 4, 6, 7, 8]);
        // Empty rows pack to the left edge.
        let x = positions_from_partition(&part(&[0, 0]), 4).unwrap();
        assert_eq!(x.positions(), &[1, 2]);
        assert_eq!(x.bitmask(), 0b11);
        // Chain too short.
        assert_eq!(
            positions_from_partition(&part(&[3, 1]), 4),
            Err(Error::BoxOverflow {
                part: 3,
                needed: 5,
                chain_len: 4
            })
        );
    }

    #[test]
    fn position_round_trip() {
        let lam = part(&[3, 2, 1, 1, 1]);
        let x = positions_from_partition(&lam, 9).unwrap();
        assert_eq!(partition_from_positions(&x), lam);
    }

    #[test]
    fn widening_profile() {
        assert_eq!(
            build_mu(&part(&[2, 1]), 5, 5).unwrap(),
            part(&[3, 3, 3, 2, 1])
        );
        assert_eq!(build_mu(&part(&[]), 3, 2).unwrap(), part(&[3, 3]));
        // First part too wide for the mandated rectangle.
        assert_eq!(
            build_mu(&part(&[4, 1]), 5, 5),
            Err(Error::ProfileViolation { first: 4, bound: 3 })
        );
        assert!(build_mu(&part(&[1, 1, 1]), 2, 5).is_err());
    }

    #[test]
    fn widened_positions_split_into_two_runs() {
        // The widened shape occupies the first k slots at λ-shifted
        // positions and then one contiguous run m+1, …, m+n−k.
        for (lam, m, n) in [
            (part(&[2, 1]), 5, 5),
            (part(&[1]), 3, 4),
            (part(&[]), 2, 3),
            (part(&[3, 3, 1]), 6, 4),
        ] {
            let k = lam.len();
            let mu = build_mu(&lam, m, n).unwrap();
            let x = positions_from_partition(&mu, m + n - k).unwrap();
            let mut expect: Vec<usize> = (1..=k).map(|i| lam.parts()[k - i] + i).collect();
            expect.extend(m + 1..=m + n - k);
            assert_eq!(x.positions(), expect.as_slice());
        }
    }

    #[test]
    fn subset_enumeration() {
        let splits = k_subsets(4, 2);
        assert_eq!(splits.len(), 6);
        assert_eq!(splits[0].chosen, vec![1, 2]);
        assert_eq!(splits[0].complement, vec![3, 4]);
        assert_eq!(splits[5].chosen, vec![3, 4]);
        assert_eq!(splits[5].complement, vec![1, 2]);
        // Lexicographic in the chosen subset.
        for pair in splits.windows(2) {
            assert!(pair[0].chosen < pair[1].chosen);
        }
        assert_eq!(k_subsets(3, 0).len(), 1);
        assert!(k_subsets(3, 0)[0].chosen.is_empty());
        assert_eq!(k_subsets(3, 3)[0].complement, Vec::<usize>::new());
        assert!(k_subsets(2, 3).is_empty());
    }

    #[test]
    fn box_enumeration() {
        let all = partitions_in_box(2, 2);
        assert_eq!(
            all,
            vec![
                part(&[0, 0]),
                part(&[1, 0]),
                part(&[1, 1]),
                part(&[2, 0]),
                part(&[2, 1]),
                part(&[2, 2]),
            ]
        );
        assert_eq!(partitions_in_box(3, 3).len(), 20);
        assert_eq!(partitions_in_box(0, 5), vec![Partition::empty()]);
    }

    #[test]
    fn variable_maps_invert() {
        let z = Scalar::from_fraction(3, 7).unwrap();
        let u = variable_map(MapDirection::ZToU, &z).unwrap();
        assert_eq!(u, Scalar::from_fraction(7, 4).unwrap());
        assert_eq!(variable_map(MapDirection::UToZ, &u).unwrap(), z);
        let alpha = Scalar::from_fraction(2, 5).unwrap();
        let w = variable_map(MapDirection::AlphaToW, &alpha).unwrap();
        assert_eq!(w, Scalar::from_fraction(3, 5).unwrap());
        assert_eq!(variable_map(MapDirection::WToAlpha, &w).unwrap(), alpha);
        assert_eq!(
            variable_map(MapDirection::ZToU, &Scalar::one()),
            Err(Error::SingularMap("1".to_owned()))
        );
        assert_eq!(
            variable_map(MapDirection::UToZ, &Scalar::zero()),
            Err(Error::SingularMap("0".to_owned()))
        );
    }
}
