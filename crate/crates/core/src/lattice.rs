//! Five- and six-vertex lattice models on a finite chain.
//!
//! States of a chain of `L` two-level sites are stored sparsely over `u64`
//! occupation masks (bit `i−1` is site `i`). The six-vertex `R`-matrix acts
//! on an ordered pair of two-level spaces; its matrix elements
//! `⟨a' b' | R(u, w) | a b⟩` vanish unless `a + b = a' + b'` (the ice rule)
//! and the six surviving weights are
//!
//! ```text
//!   ⟨00|00⟩ = u − q w     ⟨01|01⟩ = q (u − w)   ⟨01|10⟩ = (1 − q) u
//!   ⟨10|01⟩ = (1 − q) w   ⟨10|10⟩ = u − w       ⟨11|11⟩ = u − q w
//! ```
//!
//! with the first index of each pair living in the first slot. Setting
//! `q = 0` degenerates to the five-vertex model (one weight vanishes).
//!
//! A row of the lattice is the monodromy matrix: an auxiliary two-level wire
//! threaded through all `L` sites, `R` acting at site 1 first. Its four
//! matrix elements between auxiliary states are the operators `A`, `B`, `C`,
//! `D` on the chain; `B = ⟨0|T|1⟩` adds one particle, `D = ⟨1|T|1⟩`
//! preserves the particle number. Wavefunctions are overlaps of products of
//! `B`'s on the empty chain with a fixed particle configuration.
//!
//! The same `R`-matrix also builds a *barred* family: thread a wire with
//! spectral parameter `w` through a chain whose slot `i` carries its own
//! parameter `u_i`, the slot now sitting in the first `R` slot. The
//! resulting `A̅`, `B̅`, `C̅`, `D̅` act on the chain of `u`-slots and drive the
//! dual (column-direction) expansions; their reference state is the fully
//! occupied chain.

use std::collections::BTreeMap;

use crate::combinatorics::{PositionVector, MAX_CHAIN_LEN};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// One `R`-matrix with its spectral parameters fixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMatrix {
    /// `entries[2*a_out + b_out][2*a_in + b_in]`.
    entries: [[Scalar; 4]; 4],
}

/// Matrix element `⟨a_out b_out | R(u, w) | a_in b_in⟩` of the six-vertex
/// `R`-matrix.
pub fn r_entry(
    u: &Scalar,
    w: &Scalar,
    q: &Scalar,
    a_out: u8,
    b_out: u8,
    a_in: u8,
    b_in: u8,
) -> Scalar {
    match (a_out, b_out, a_in, b_in) {
        (0, 0, 0, 0) | (1, 1, 1, 1) => u - &(q * w),
        (0, 1, 0, 1) => q * &(u - w),
        (0, 1, 1, 0) => &(&Scalar::one() - q) * u,
        (1, 0, 0, 1) => &(&Scalar::one() - q) * w,
        (1, 0, 1, 0) => u - w,
        _ => Scalar::zero(),
    }
}

/// Matrix element of the five-vertex `R`-matrix (independent table, not a
/// substitution into [`r_entry`]; a test pins the two together at `q = 0`).
pub fn five_vertex_entry(
    u: &Scalar,
    w: &Scalar,
    a_out: u8,
    b_out: u8,
    a_in: u8,
    b_in: u8,
) -> Scalar {
    match (a_out, b_out, a_in, b_in) {
        (0, 0, 0, 0) | (1, 1, 1, 1) => u.clone(),
        (0, 1, 0, 1) => Scalar::zero(),
        (0, 1, 1, 0) => u.clone(),
        (1, 0, 0, 1) => w.clone(),
        (1, 0, 1, 0) => u - w,
        _ => Scalar::zero(),
    }
}

impl RMatrix {
    /// The six-vertex matrix with weights at `(u, w, q)`.
    pub fn new(u: &Scalar, w: &Scalar, q: &Scalar) -> Self {
        let mut entries: [[Scalar; 4]; 4] = Default::default();
        for a_out in 0..2u8 {
            for b_out in 0..2u8 {
                for a_in in 0..2u8 {
                    for b_in in 0..2u8 {
                        entries[(2 * a_out + b_out) as usize][(2 * a_in + b_in) as usize] =
                            r_entry(u, w, q, a_out, b_out, a_in, b_in);
                    }
                }
            }
        }
        RMatrix { entries }
    }

    /// The five-vertex matrix at `(u, w)`.
    pub fn five_vertex(u: &Scalar, w: &Scalar) -> Self {
        let mut entries: [[Scalar; 4]; 4] = Default::default();
        for a_out in 0..2u8 {
            for b_out in 0..2u8 {
                for a_in in 0..2u8 {
                    for b_in in 0..2u8 {
                        entries[(2 * a_out + b_out) as usize][(2 * a_in + b_in) as usize] =
                            five_vertex_entry(u, w, a_out, b_out, a_in, b_in);
                    }
                }
            }
        }
        RMatrix { entries }
    }

    pub fn entry(&self, a_out: u8, b_out: u8, a_in: u8, b_in: u8) -> &Scalar {
        &self.entries[(2 * a_out + b_out) as usize][(2 * a_in + b_in) as usize]
    }

    /// True when every entry that changes the total occupation is zero.
    pub fn ice_rule_holds(&self) -> bool {
        for a_out in 0..2u8 {
            for b_out in 0..2u8 {
                for a_in in 0..2u8 {
                    for b_in in 0..2u8 {
                        if a_out + b_out != a_in + b_in
                            && !self.entry(a_out, b_out, a_in, b_in).is_zero()
                        {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Checks `R_ab(u,v) R_ac(u,w) R_bc(v,w) = R_bc(v,w) R_ac(u,w) R_ab(u,v)`
/// exactly on the full eight-dimensional space.
pub fn yang_baxter_holds(u: &Scalar, v: &Scalar, w: &Scalar, q: &Scalar) -> bool {
    // Basis index 4a + 2b + c for the three spaces (a, b, c).
    let bit = |state: usize, pos: u32| ((state >> pos) & 1) as u8;
    let embed = |r: &RMatrix, hi: u32, lo: u32| -> Vec<Vec<Scalar>> {
        let spectator: Vec<u32> = (0..3).filter(|p| *p != hi && *p != lo).collect();
        let mut m = vec![vec![Scalar::zero(); 8]; 8];
        for (out, row) in m.iter_mut().enumerate() {
            for (inp, entry) in row.iter_mut().enumerate() {
                if spectator.iter().any(|&p| bit(inp, p) != bit(out, p)) {
                    continue;
                }
                *entry = r
                    .entry(bit(out, hi), bit(out, lo), bit(inp, hi), bit(inp, lo))
                    .clone();
            }
        }
        m
    };
    let matmul = |x: &Vec<Vec<Scalar>>, y: &Vec<Vec<Scalar>>| -> Vec<Vec<Scalar>> {
        let mut m = vec![vec![Scalar::zero(); 8]; 8];
        for i in 0..8 {
            for k in 0..8 {
                if x[i][k].is_zero() {
                    continue;
                }
                for j in 0..8 {
                    if y[k][j].is_zero() {
                        continue;
                    }
                    let add = &x[i][k] * &y[k][j];
                    m[i][j] = &m[i][j] + &add;
                }
            }
        }
        m
    };
    // Space positions: a = 2, b = 1, c = 0.
    let r_ab = embed(&RMatrix::new(u, v, q), 2, 1);
    let r_ac = embed(&RMatrix::new(u, w, q), 2, 0);
    let r_bc = embed(&RMatrix::new(v, w, q), 1, 0);
    let lhs = matmul(&r_ab, &matmul(&r_ac, &r_bc));
    let rhs = matmul(&r_bc, &matmul(&r_ac, &r_ab));
    lhs == rhs
}

/// A sparse vector over occupation masks of a fixed-length chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinState {
    len: usize,
    amps: BTreeMap<u64, Scalar>,
}

impl SpinState {
    fn check_len(len: usize) {
        assert!(len <= MAX_CHAIN_LEN, "chain length {len} too large");
    }

    /// The empty chain state `|0…0⟩`.
    pub fn vacuum(len: usize) -> Self {
        Self::basis(0, len)
    }

    /// The fully occupied state `|1…1⟩`.
    pub fn full(len: usize) -> Self {
        Self::check_len(len);
        let mask = if len == 0 { 0 } else { (1u64 << len) - 1 };
        Self::basis(mask, len)
    }

    /// A single basis state.
    pub fn basis(mask: u64, len: usize) -> Self {
        Self::check_len(len);
        assert!(
            len == MAX_CHAIN_LEN || mask < (1u64 << len),
            "mask outside chain"
        );
        let mut amps = BTreeMap::new();
        amps.insert(mask, Scalar::one());
        SpinState { len, amps }
    }

    pub fn zero(len: usize) -> Self {
        Self::check_len(len);
        SpinState {
            len,
            amps: BTreeMap::new(),
        }
    }

    pub fn chain_len(&self) -> usize {
        self.len
    }

    pub fn amplitude(&self, mask: u64) -> Scalar {
        self.amps.get(&mask).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (&u64, &Scalar)> {
        self.amps.iter()
    }

    pub fn add(&self, other: &SpinState) -> SpinState {
        assert_eq!(self.len, other.len, "chain length mismatch");
        let mut amps = self.amps.clone();
        for (mask, amp) in &other.amps {
            let entry = amps.entry(*mask).or_insert_with(Scalar::zero);
            *entry += amp;
        }
        amps.retain(|_, a| !a.is_zero());
        SpinState {
            len: self.len,
            amps,
        }
    }

    pub fn sub(&self, other: &SpinState) -> SpinState {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, factor: &Scalar) -> SpinState {
        if factor.is_zero() {
            return SpinState::zero(self.len);
        }
        let mut out = self.clone();
        for amp in out.amps.values_mut() {
            *amp *= factor;
        }
        out
    }
}

/// A sparse linear operator over occupation masks, stored column-wise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinOperator {
    len: usize,
    /// `cols[input][output]` is the matrix element `⟨output|O|input⟩`.
    cols: BTreeMap<u64, BTreeMap<u64, Scalar>>,
}

impl SpinOperator {
    pub fn zero(len: usize) -> Self {
        SpinState::check_len(len);
        SpinOperator {
            len,
            cols: BTreeMap::new(),
        }
    }

    pub fn identity(len: usize) -> Self {
        SpinState::check_len(len);
        let mut cols = BTreeMap::new();
        for mask in 0..(1u64 << len) {
            let mut col = BTreeMap::new();
            col.insert(mask, Scalar::one());
            cols.insert(mask, col);
        }
        SpinOperator { len, cols }
    }

    pub fn chain_len(&self) -> usize {
        self.len
    }

    pub fn is_zero(&self) -> bool {
        self.cols.is_empty()
    }

    fn from_cols(len: usize, mut cols: BTreeMap<u64, BTreeMap<u64, Scalar>>) -> Self {
        for col in cols.values_mut() {
            col.retain(|_, a| !a.is_zero());
        }
        cols.retain(|_, col| !col.is_empty());
        SpinOperator { len, cols }
    }

    pub fn apply(&self, state: &SpinState) -> SpinState {
        assert_eq!(self.len, state.len, "chain length mismatch");
        let mut amps: BTreeMap<u64, Scalar> = BTreeMap::new();
        for (mask, amp) in &state.amps {
            if let Some(col) = self.cols.get(mask) {
                for (out, coeff) in col {
                    let entry = amps.entry(*out).or_insert_with(Scalar::zero);
                    *entry += &(amp * coeff);
                }
            }
        }
        amps.retain(|_, a| !a.is_zero());
        SpinState {
            len: self.len,
            amps,
        }
    }

    /// Operator product `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &SpinOperator) -> SpinOperator {
        assert_eq!(self.len, other.len, "chain length mismatch");
        let mut cols = BTreeMap::new();
        for (input, col) in &other.cols {
            let mut out_col: BTreeMap<u64, Scalar> = BTreeMap::new();
            for (mid, coeff) in col {
                if let Some(self_col) = self.cols.get(mid) {
                    for (out, c2) in self_col {
                        let entry = out_col.entry(*out).or_insert_with(Scalar::zero);
                        *entry += &(coeff * c2);
                    }
                }
            }
            cols.insert(*input, out_col);
        }
        SpinOperator::from_cols(self.len, cols)
    }

    pub fn add(&self, other: &SpinOperator) -> SpinOperator {
        assert_eq!(self.len, other.len, "chain length mismatch");
        let mut cols = self.cols.clone();
        for (input, col) in &other.cols {
            let target = cols.entry(*input).or_default();
            for (out, coeff) in col {
                let entry = target.entry(*out).or_insert_with(Scalar::zero);
                *entry += coeff;
            }
        }
        SpinOperator::from_cols(self.len, cols)
    }

    pub fn sub(&self, other: &SpinOperator) -> SpinOperator {
        self.add(&other.scale(&-Scalar::one()))
    }

    /// The matrix element `⟨output|O|input⟩` (zero when absent).
    pub fn coeff(&self, input: u64, output: u64) -> Scalar {
        self.cols
            .get(&input)
            .and_then(|col| col.get(&output))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// All nonzero matrix elements as `(input, output, value)`, in order.
    pub fn entries(&self) -> impl Iterator<Item = (u64, u64, &Scalar)> + '_ {
        self.cols
            .iter()
            .flat_map(|(input, col)| col.iter().map(move |(out, value)| (*input, *out, value)))
    }

    pub fn scale(&self, factor: &Scalar) -> SpinOperator {
        if factor.is_zero() {
            return SpinOperator::zero(self.len);
        }
        let mut out = self.clone();
        for col in out.cols.values_mut() {
            for coeff in col.values_mut() {
                *coeff *= factor;
            }
        }
        out
    }
}

/// The four matrix elements of a monodromy row between auxiliary states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Element {
    /// `⟨0|T|0⟩`: particle-number preserving.
    A,
    /// `⟨0|T|1⟩`: adds one particle.
    B,
    /// `⟨1|T|0⟩`: removes one particle.
    C,
    /// `⟨1|T|1⟩`: particle-number preserving.
    D,
}

impl Element {
    /// `(wire_in, wire_out)` of the auxiliary wire.
    fn wire(self) -> (u8, u8) {
        match self {
            Element::A => (0, 0),
            Element::B => (1, 0),
            Element::C => (0, 1),
            Element::D => (1, 1),
        }
    }
}

/// Threads the auxiliary wire of a direct monodromy row through one input
/// configuration; returns the output column. The wire sits in the first `R`
/// slot, sites are visited in order `1..=L` with parameters `w[i-1]`.
fn thread_row(
    elem: Element,
    u: &Scalar,
    w: &[Scalar],
    q: &Scalar,
    input: u64,
) -> BTreeMap<u64, Scalar> {
    let (wire_in, wire_out) = elem.wire();
    let mut frontier: BTreeMap<(u8, u64), Scalar> = BTreeMap::new();
    frontier.insert((wire_in, 0), Scalar::one());
    for (i, wi) in w.iter().enumerate() {
        let site_in = ((input >> i) & 1) as u8;
        let mut next: BTreeMap<(u8, u64), Scalar> = BTreeMap::new();
        for ((wire, out), amp) in &frontier {
            for wire_next in 0..2u8 {
                for site_out in 0..2u8 {
                    let coeff = r_entry(u, wi, q, wire_next, site_out, *wire, site_in);
                    if coeff.is_zero() {
                        continue;
                    }
                    let key = (wire_next, out | (u64::from(site_out) << i));
                    let entry = next.entry(key).or_insert_with(Scalar::zero);
                    *entry += &(amp * &coeff);
                }
            }
        }
        frontier = next;
    }
    frontier
        .into_iter()
        .filter_map(|((wire, out), amp)| (wire == wire_out && !amp.is_zero()).then_some((out, amp)))
        .collect()
}

/// Threads the contracted wire of a barred row through one input
/// configuration of the `u`-chain; the chain slot sits in the first `R`
/// slot, slots are visited in order `1..=n` with parameters `u[i-1]`.
fn thread_column(
    elem: Element,
    w: &Scalar,
    u: &[Scalar],
    q: &Scalar,
    input: u64,
) -> BTreeMap<u64, Scalar> {
    let (wire_in, wire_out) = elem.wire();
    let mut frontier: BTreeMap<(u8, u64), Scalar> = BTreeMap::new();
    frontier.insert((wire_in, 0), Scalar::one());
    for (i, ui) in u.iter().enumerate() {
        let site_in = ((input >> i) & 1) as u8;
        let mut next: BTreeMap<(u8, u64), Scalar> = BTreeMap::new();
        for ((wire, out), amp) in &frontier {
            for wire_next in 0..2u8 {
                for site_out in 0..2u8 {
                    let coeff = r_entry(ui, w, q, site_out, wire_next, site_in, *wire);
                    if coeff.is_zero() {
                        continue;
                    }
                    let key = (wire_next, out | (u64::from(site_out) << i));
                    let entry = next.entry(key).or_insert_with(Scalar::zero);
                    *entry += &(amp * &coeff);
                }
            }
        }
        frontier = next;
    }
    frontier
        .into_iter()
        .filter_map(|((wire, out), amp)| (wire == wire_out && !amp.is_zero()).then_some((out, amp)))
        .collect()
}

/// Builds one monodromy element `A(u)`, `B(u)`, `C(u)`, or `D(u)` as an
/// operator on the chain with site parameters `w`.
pub fn monodromy_element(elem: Element, u: &Scalar, w: &[Scalar], q: &Scalar) -> SpinOperator {
    let len = w.len();
    SpinState::check_len(len);
    let mut cols = BTreeMap::new();
    for input in 0..(1u64 << len) {
        let col = thread_row(elem, u, w, q, input);
        if !col.is_empty() {
            cols.insert(input, col);
        }
    }
    SpinOperator::from_cols(len, cols)
}

/// Applies one monodromy element to a state without materializing the whole
/// operator.
pub fn apply_monodromy(
    elem: Element,
    u: &Scalar,
    w: &[Scalar],
    q: &Scalar,
    state: &SpinState,
) -> SpinState {
    assert_eq!(state.chain_len(), w.len(), "chain length mismatch");
    let mut amps: BTreeMap<u64, Scalar> = BTreeMap::new();
    for (mask, amp) in &state.amps {
        for (out, coeff) in thread_row(elem, u, w, q, *mask) {
            let entry = amps.entry(out).or_insert_with(Scalar::zero);
            *entry += &(amp * &coeff);
        }
    }
    amps.retain(|_, a| !a.is_zero());
    SpinState {
        len: state.len,
        amps,
    }
}

/// Builds one barred element `A̅(w)`, `B̅(w)`, `C̅(w)`, or `D̅(w)` as an
/// operator on the chain of `u`-slots.
pub fn barred_monodromy_element(
    elem: Element,
    w: &Scalar,
    u: &[Scalar],
    q: &Scalar,
) -> SpinOperator {
    let len = u.len();
    SpinState::check_len(len);
    let mut cols = BTreeMap::new();
    for input in 0..(1u64 << len) {
        let col = thread_column(elem, w, u, q, input);
        if !col.is_empty() {
            cols.insert(input, col);
        }
    }
    SpinOperator::from_cols(len, cols)
}

/// Applies one barred element to a state of the `u`-chain.
pub fn apply_barred(
    elem: Element,
    w: &Scalar,
    u: &[Scalar],
    q: &Scalar,
    state: &SpinState,
) -> SpinState {
    assert_eq!(state.chain_len(), u.len(), "chain length mismatch");
    let mut amps: BTreeMap<u64, Scalar> = BTreeMap::new();
    for (mask, amp) in &state.amps {
        for (out, coeff) in thread_column(elem, w, u, q, *mask) {
            let entry = amps.entry(out).or_insert_with(Scalar::zero);
            *entry += &(amp * &coeff);
        }
    }
    amps.retain(|_, a| !a.is_zero());
    SpinState {
        len: state.len,
        amps,
    }
}

/// The `n`-particle wavefunction: amplitude of the configuration `x` in
/// `B(u_n) ⋯ B(u_1) |0…0⟩` on the chain with site parameters `w`.
pub fn wavefunction(u: &[Scalar], w: &[Scalar], x: &PositionVector, q: &Scalar) -> Result<Scalar> {
    if x.chain_len() != w.len() {
        return Err(Error::InvalidInput(format!(
            "positions live on a chain of {} sites but {} site parameters given",
            x.chain_len(),
            w.len()
        )));
    }
    if x.len() != u.len() {
        return Err(Error::InvalidInput(format!(
            "{} particles but {} row parameters",
            x.len(),
            u.len()
        )));
    }
    let mut state = SpinState::vacuum(w.len());
    for ui in u {
        state = apply_monodromy(Element::B, ui, w, q, &state);
    }
    Ok(state.amplitude(x.bitmask()))
}

/// The barred wavefunction driving the column decomposition: on a chain of
/// `w_sites.len()` sites, apply rows `1..=n` bottom-to-top — row `i` is
/// `B(u_i)` when `i` appears in `y`, otherwise `A(u_i)` — to the empty
/// chain and take the amplitude of the fully occupied configuration.
///
/// `y` lists the `B`-rows as positions on the "chain" of row indices, so
/// `y.chain_len()` must be `u.len()` and `y.len()` must equal the number of
/// sites.
pub fn barred_wavefunction(
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
    let sites = w_sites.len();
    let mut state = SpinState::vacuum(sites);
    for (i, ui) in u.iter().enumerate() {
        let elem = if y.positions().contains(&(i + 1)) {
            Element::B
        } else {
            Element::A
        };
        state = apply_monodromy(elem, ui, w_sites, q, &state);
    }
    let full = if sites == 0 { 0 } else { (1u64 << sites) - 1 };
    Ok(state.amplitude(full))
}
