//! Entry-exact verification of the operator algebra: the pairwise exchange
//! and commutation rules for the row family (`B`, `D`), the barred family
//! (`A̅`, `C̅`), their multi-operator block-exchange forms, and the two
//! vacuum expansion rules used by the q-deformed derivation.
//!
//! Operator relations are materialized as sparse matrices on a finite chain
//! and compared element-wise; state relations are applied to the vacuum and
//! compared amplitude-wise. The five-vertex and barred relations hold in the
//! `q = 0` degeneration, the deformed ones at generic nonzero `q`; the
//! verifier fixes or samples `q` accordingly.

use crate::combinatorics::{index_tuples, k_subsets};
use crate::error::{Error, Result};
use crate::lattice::{
    apply_monodromy, barred_monodromy_element, monodromy_element, Element, SpinOperator, SpinState,
};
use crate::point::{numbered, sample_point, Constraint, EvaluationPoint};
use crate::scalar::Scalar;
use crate::verify::report::{assignment, point_seed, IdentityReport, ReportBuilder};

/// One operator relation, named by its role. [`Relation::label`] gives the
/// stable external token used by the command-line interface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `D(u1)B(u2)` exchanged into `B D` terms, five-vertex degeneration.
    FiveVertexExchange,
    /// `D(u1)B(u2) = D(u2)B(u1)`, five-vertex degeneration.
    FiveVertexSwap,
    /// `[B(u1), B(u2)] = 0`, five-vertex degeneration.
    FiveVertexCreationCommute,
    /// `[D(u1), D(u2)] = 0`, five-vertex degeneration.
    FiveVertexPreservingCommute,
    /// Block exchange `∏D ∏B = Σ_S (coeff) ∏B ∏D`, five-vertex degeneration.
    FiveVertexMultiExchange,
    /// `A̅(w1)C̅(w2)` exchanged into `C̅ A̅` terms.
    BarredExchange,
    /// `A̅(w1)C̅(w2) = A̅(w2)C̅(w1)`.
    BarredSwap,
    /// `[A̅(w1), A̅(w2)] = 0`.
    BarredPreservingCommute,
    /// `[C̅(w1), C̅(w2)] = 0`.
    BarredCreationCommute,
    /// Block exchange `∏A̅ ∏C̅ = Σ_S (coeff) ∏C̅ ∏A̅`.
    BarredMultiExchange,
    /// `D(u1)B(u2)` exchanged into `B D` terms at generic `q`.
    DeformedExchange,
    /// `[B(u1), B(u2)] = 0` at generic `q`.
    DeformedCreationCommute,
    /// `D B⋯B |Ω⟩` expanded over which row the `D` trades places with.
    DeformedVacuumExchange,
    /// The nested expansion of an interleaved `B`/`D` string on the vacuum.
    DeformedNestedExchange,
}

/// Size parameters for one relation check. `chain_len` is the number of
/// quantum sites, `ops` the number of spectral parameters, and `split` the
/// block size for the multi-operator and nested relations (ignored by the
/// pairwise ones).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RelationSizes {
    pub chain_len: usize,
    pub ops: usize,
    pub split: usize,
}

impl Relation {
    pub const ALL: [Relation; 14] = [
        Relation::FiveVertexExchange,
        Relation::FiveVertexSwap,
        Relation::FiveVertexCreationCommute,
        Relation::FiveVertexPreservingCommute,
        Relation::FiveVertexMultiExchange,
        Relation::BarredExchange,
        Relation::BarredSwap,
        Relation::BarredPreservingCommute,
        Relation::BarredCreationCommute,
        Relation::BarredMultiExchange,
        Relation::DeformedExchange,
        Relation::DeformedCreationCommute,
        Relation::DeformedVacuumExchange,
        Relation::DeformedNestedExchange,
    ];

    /// The stable external token for this relation.
    pub fn label(self) -> &'static str {
        match self {
            Relation::FiveVertexExchange => "3.4",
            Relation::FiveVertexSwap => "3.5",
            Relation::FiveVertexCreationCommute => "3.6",
            Relation::FiveVertexPreservingCommute => "3.7",
            Relation::FiveVertexMultiExchange => "3.8",
            Relation::BarredExchange => "4.6",
            Relation::BarredSwap => "4.7",
            Relation::BarredPreservingCommute => "4.8",
            Relation::BarredCreationCommute => "4.9",
            Relation::BarredMultiExchange => "4.10",
            Relation::DeformedExchange => "5.11",
            Relation::DeformedCreationCommute => "5.12",
            Relation::DeformedVacuumExchange => "5.14",
            Relation::DeformedNestedExchange => "5.15",
        }
    }

    pub fn from_label(label: &str) -> Result<Relation> {
        Relation::ALL
            .into_iter()
            .find(|rel| rel.label() == label)
            .ok_or_else(|| Error::InvalidInput(format!("unknown commutation relation `{label}`")))
    }

    /// True for the relations stated at generic `q`; the rest are verified
    /// in the `q = 0` degeneration.
    pub fn is_deformed(self) -> bool {
        matches!(
            self,
            Relation::DeformedExchange
                | Relation::DeformedCreationCommute
                | Relation::DeformedVacuumExchange
                | Relation::DeformedNestedExchange
        )
    }

    /// True for the relations exchanging barred operators (whose spectral
    /// parameters are site-type and whose chain carries row parameters).
    pub fn is_barred(self) -> bool {
        matches!(
            self,
            Relation::BarredExchange
                | Relation::BarredSwap
                | Relation::BarredPreservingCommute
                | Relation::BarredCreationCommute
                | Relation::BarredMultiExchange
        )
    }

    /// A small in-budget default size for this relation.
    pub fn default_sizes(self) -> RelationSizes {
        match self {
            Relation::FiveVertexMultiExchange
            | Relation::BarredMultiExchange
            | Relation::DeformedNestedExchange => RelationSizes {
                chain_len: 3,
                ops: 3,
                split: 1,
            },
            Relation::DeformedVacuumExchange => RelationSizes {
                chain_len: 3,
                ops: 3,
                split: 0,
            },
            _ => RelationSizes {
                chain_len: 3,
                ops: 2,
                split: 0,
            },
        }
    }
}

/// Composes operators so that `ops[0]` acts first.
fn string_product(len: usize, ops: &[SpinOperator]) -> SpinOperator {
    ops.iter()
        .fold(SpinOperator::identity(len), |acc, op| op.compose(&acc))
}

/// Applies `elems[i]` with parameter `params[i]` to the vacuum, in order.
fn string_on_vacuum(
    elems: &[Element],
    params: &[Scalar],
    sites: &[Scalar],
    q: &Scalar,
) -> SpinState {
    let mut state = SpinState::vacuum(sites.len());
    for (elem, value) in elems.iter().zip(params) {
        state = apply_monodromy(*elem, value, sites, q, &state);
    }
    state
}

fn first_operator_difference(lhs: &SpinOperator, rhs: &SpinOperator) -> (String, String, String) {
    let delta = lhs.sub(rhs);
    let first = delta
        .entries()
        .next()
        .map(|(input, output, _)| (input, output));
    match first {
        Some((input, output)) => (
            format!("entry input={input:#b} output={output:#b}"),
            lhs.coeff(input, output).to_string(),
            rhs.coeff(input, output).to_string(),
        ),
        None => (
            "no differing entry".to_string(),
            String::new(),
            String::new(),
        ),
    }
}

fn first_state_difference(lhs: &SpinState, rhs: &SpinState) -> (String, String, String) {
    let delta = lhs.sub(rhs);
    let first = delta.support().next().map(|(mask, _)| *mask);
    match first {
        Some(mask) => (
            format!("amplitude at mask={mask:#b}"),
            lhs.amplitude(mask).to_string(),
            rhs.amplitude(mask).to_string(),
        ),
        None => (
            "no differing amplitude".to_string(),
            String::new(),
            String::new(),
        ),
    }
}

fn check_operators(
    builder: &mut ReportBuilder,
    point: &EvaluationPoint,
    extras: &[(&str, String)],
    lhs: &SpinOperator,
    rhs: &SpinOperator,
) {
    if lhs == rhs {
        builder.pass();
    } else {
        let (location, left, right) = first_operator_difference(lhs, rhs);
        let mut map = assignment(point, extras);
        map.insert("difference".to_string(), location);
        builder.fail(map, left, right);
    }
}

pub(crate) fn check_states(
    builder: &mut ReportBuilder,
    point: &EvaluationPoint,
    extras: &[(&str, String)],
    lhs: &SpinState,
    rhs: &SpinState,
) {
    if lhs == rhs {
        builder.pass();
    } else {
        let (location, left, right) = first_state_difference(lhs, rhs);
        let mut map = assignment(point, extras);
        map.insert("difference".to_string(), location);
        builder.fail(map, left, right);
    }
}

/// Verifies one operator relation entry-exactly at `points` sampled points.
pub fn verify_commutation(
    relation: Relation,
    sizes: RelationSizes,
    points: usize,
    seed: u64,
) -> Result<IdentityReport> {
    let RelationSizes {
        chain_len,
        ops,
        split,
    } = sizes;
    let pairwise = !matches!(
        relation,
        Relation::FiveVertexMultiExchange
            | Relation::BarredMultiExchange
            | Relation::DeformedVacuumExchange
            | Relation::DeformedNestedExchange
    );
    if pairwise && ops != 2 {
        return Err(Error::InvalidInput(format!(
            "relation {} takes exactly two spectral parameters, got {ops}",
            relation.label()
        )));
    }
    if !pairwise && (ops == 0 || split > ops) {
        return Err(Error::InvalidInput(format!(
            "relation {} needs ops >= 1 and split <= ops, got ops={ops}, split={split}",
            relation.label()
        )));
    }

    // The barred family exchanges site-type parameters over a chain of row
    // parameters; the row family the other way around.
    let (spectral_prefix, chain_prefix) = if relation.is_barred() {
        ("w", "u")
    } else {
        ("u", "w")
    };
    let spectral_names = numbered(spectral_prefix, ops);
    let chain_names = numbered(chain_prefix, chain_len);
    let mut variables = spectral_names.clone();
    variables.extend(chain_names.iter().cloned());
    let mut constraints = vec![Constraint::Distinct(spectral_names)];
    if relation.is_deformed() {
        variables.push("q".to_string());
        constraints.push(Constraint::Avoid("q".to_string(), Scalar::zero()));
        constraints.push(Constraint::Avoid("q".to_string(), Scalar::one()));
    }

    let mut builder = ReportBuilder::new(format!("commutation:{}", relation.label()))
        .param("relation", relation.label())
        .param("chain", chain_len)
        .param("ops", ops)
        .param(
            "q",
            if relation.is_deformed() {
                "sampled"
            } else {
                "0"
            },
        );
    if !pairwise && relation != Relation::DeformedVacuumExchange {
        builder = builder.param("split", split);
    }

    for index in 0..points {
        let point = sample_point(point_seed(seed, index), &variables, &constraints)?;
        let spectral = point.values(spectral_prefix, ops)?;
        let chain = point.values(chain_prefix, chain_len)?;
        let q = if relation.is_deformed() {
            point.require("q")?.clone()
        } else {
            Scalar::zero()
        };
        run_relation(relation, &mut builder, &point, &spectral, &chain, split, &q)?;
    }
    Ok(builder.finish())
}

fn run_relation(
    relation: Relation,
    builder: &mut ReportBuilder,
    point: &EvaluationPoint,
    spectral: &[Scalar],
    chain: &[Scalar],
    split: usize,
    q: &Scalar,
) -> Result<()> {
    let len = chain.len();
    let row = |elem: Element, value: &Scalar| monodromy_element(elem, value, chain, q);
    let barred = |elem: Element, value: &Scalar| barred_monodromy_element(elem, value, chain, q);
    match relation {
        Relation::FiveVertexExchange | Relation::DeformedExchange => {
            // D(u1)B(u2) = (u1−qu2)/(u1−u2)·B(u2)D(u1) + (q−1)u2/(u1−u2)·B(u1)D(u2);
            // the five-vertex form is the q = 0 specialization.
            let (u1, u2) = (&spectral[0], &spectral[1]);
            let gap = u1 - u2;
            let keep = (u1 - &(q * u2)).checked_div(&gap)?;
            let trade = (&(q - &Scalar::one()) * u2).checked_div(&gap)?;
            let lhs = row(Element::D, u1).compose(&row(Element::B, u2));
            let rhs = row(Element::B, u2)
                .compose(&row(Element::D, u1))
                .scale(&keep)
                .add(
                    &row(Element::B, u1)
                        .compose(&row(Element::D, u2))
                        .scale(&trade),
                );
            check_operators(builder, point, &[], &lhs, &rhs);
        }
        Relation::FiveVertexSwap => {
            let (u1, u2) = (&spectral[0], &spectral[1]);
            let lhs = row(Element::D, u1).compose(&row(Element::B, u2));
            let rhs = row(Element::D, u2).compose(&row(Element::B, u1));
            check_operators(builder, point, &[], &lhs, &rhs);
        }
        Relation::FiveVertexCreationCommute | Relation::DeformedCreationCommute => {
            let (u1, u2) = (&spectral[0], &spectral[1]);
            let lhs = row(Element::B, u1).compose(&row(Element::B, u2));
            let rhs = row(Element::B, u2).compose(&row(Element::B, u1));
            check_operators(builder, point, &[], &lhs, &rhs);
        }
        Relation::FiveVertexPreservingCommute => {
            let (u1, u2) = (&spectral[0], &spectral[1]);
            let lhs = row(Element::D, u1).compose(&row(Element::D, u2));
            let rhs = row(Element::D, u2).compose(&row(Element::D, u1));
            check_operators(builder, point, &[], &lhs, &rhs);
        }
        Relation::FiveVertexMultiExchange => {
            // ∏_{j>k} D(u_j) ∏_{j≤k} B(u_j)
            //   = Σ_S ∏_{i∈S, j∉S} u_j/(u_j−u_i) ∏_{i∈S} B(u_i) ∏_{j∉S} D(u_j).
            let n = spectral.len();
            let k = split;
            let mut factors: Vec<SpinOperator> = Vec::new();
            for u in &spectral[..k] {
                factors.push(row(Element::B, u));
            }
            for u in &spectral[k..] {
                factors.push(row(Element::D, u));
            }
            let lhs = string_product(len, &factors);
            let mut rhs = SpinOperator::zero(len);
            for subset in k_subsets(n, k) {
                let mut coeff = Scalar::one();
                for &i in &subset.chosen {
                    for &j in &subset.complement {
                        let uj = &spectral[j - 1];
                        coeff *= &uj.checked_div(&(uj - &spectral[i - 1]))?;
                    }
                }
                let mut factors: Vec<SpinOperator> = Vec::new();
                for &j in &subset.complement {
                    factors.push(row(Element::D, &spectral[j - 1]));
                }
                for &i in &subset.chosen {
                    factors.push(row(Element::B, &spectral[i - 1]));
                }
                rhs = rhs.add(&string_product(len, &factors).scale(&coeff));
            }
            check_operators(builder, point, &[], &lhs, &rhs);
        }
        Relation::BarredExchange => {
            // A̅(w1)C̅(w2) = w2/(w2−w1)·C̅(w2)A̅(w1) − w1/(w2−w1)·C̅(w1)A̅(w2).
            let (w1, w2) = (&spectral[0], &spectral[1]);
            let gap = w2 - w1;
            let keep = w2.checked_div(&gap)?;
            let trade = -w1.checked_div(&gap)?;
            let lhs = barred(Element::A, w1).compose(&barred(Element::C, w2));
            let rhs = barred(Element::C, w2)
                .compose(&barred(Element::A, w1))
                .scale(&keep)
                .add(
                    &barred(Element::C, w1)
                        .compose(&barred(Element::A, w2))
                        .scale(&trade),
                );
            check_operators(builder, point, &[], &lhs, &rhs);
        }
        Relation::BarredSwap => {
            let (w1, w2) = (&spectral[0], &spectral[1]);
            let lhs = barred(Element::A, w1).compose(&barred(Element::C, w2));
            let rhs = barred(Element::A, w2).compose(&barred(Element::C, w1));
            check_operators(builder, point, &[], &lhs, &rhs);
        }
        Relation::BarredPreservingCommute => {
            let (w1, w2) = (&spectral[0], &spectral[1]);
            let lhs = barred(Element::A, w1).compose(&barred(Element::A, w2));
            let rhs = barred(Element::A, w2).compose(&barred(Element::A, w1));
            check_operators(builder, point, &[], &lhs, &rhs);
        }
        Relation::BarredCreationCommute => {
            let (w1, w2) = (&spectral[0], &spectral[1]);
            let lhs = barred(Element::C, w1).compose(&barred(Element::C, w2));
            let rhs = barred(Element::C, w2).compose(&barred(Element::C, w1));
            check_operators(builder, point, &[], &lhs, &rhs);
        }
        Relation::BarredMultiExchange => {
            // ∏_{j>k} A̅(w_j) ∏_{j≤k} C̅(w_j)
            //   = Σ_S ∏_{i∈S, j∉S} w_i/(w_i−w_j) ∏_{j∈S} C̅(w_j) ∏_{j∉S} A̅(w_j).
            let m = spectral.len();
            let k = split;
            let mut factors: Vec<SpinOperator> = Vec::new();
            for w in &spectral[..k] {
                factors.push(barred(Element::C, w));
            }
            for w in &spectral[k..] {
                factors.push(barred(Element::A, w));
            }
            let lhs = string_product(len, &factors);
            let mut rhs = SpinOperator::zero(len);
            for subset in k_subsets(m, k) {
                let mut coeff = Scalar::one();
                for &i in &subset.chosen {
                    let wi = &spectral[i - 1];
                    for &j in &subset.complement {
                        coeff *= &wi.checked_div(&(wi - &spectral[j - 1]))?;
                    }
                }
                let mut factors: Vec<SpinOperator> = Vec::new();
                for &j in &subset.complement {
                    factors.push(barred(Element::A, &spectral[j - 1]));
                }
                for &i in &subset.chosen {
                    factors.push(barred(Element::C, &spectral[i - 1]));
                }
                rhs = rhs.add(&string_product(len, &factors).scale(&coeff));
            }
            check_operators(builder, point, &[], &lhs, &rhs);
        }
        Relation::DeformedVacuumExchange => {
            // D(u_{ℓ+1}) B(u_ℓ)⋯B(u_1)|Ω⟩ = Σ_c ∏_i (u_c − w_i)
            //   · ∏_{j≤ℓ} (u_c − q u_j) / ∏_{j≠c} (u_c − u_j)
            //   · ∏_{j≠c} B(u_j)|Ω⟩.
            let total = spectral.len();
            let mut elems = vec![Element::B; total - 1];
            elems.push(Element::D);
            let lhs = string_on_vacuum(&elems, spectral, chain, q);
            let mut rhs = SpinState::zero(len);
            for c in 1..=total {
                let uc = &spectral[c - 1];
                let mut coeff = Scalar::one();
                for wi in chain {
                    coeff *= &(uc - wi);
                }
                for uj in &spectral[..total - 1] {
                    coeff *= &(uc - &(q * uj));
                }
                for (j, uj) in spectral.iter().enumerate() {
                    if j + 1 != c {
                        coeff = coeff.checked_div(&(uc - uj))?;
                    }
                }
                let others: Vec<Scalar> = spectral
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| j + 1 != c)
                    .map(|(_, u)| u.clone())
                    .collect();
                let state = string_on_vacuum(&vec![Element::B; others.len()], &others, chain, q);
                rhs = rhs.add(&state.scale(&coeff));
            }
            check_states(builder, point, &[], &lhs, &rhs);
        }
        Relation::DeformedNestedExchange => {
            // For every row vector y: the interleaved B/D string on the
            // vacuum equals the sum over index tuples a of the coefficient
            // block times the B string with the a-indexed rows removed.
            let n = spectral.len();
            let r = n - split;
            for subset in k_subsets(n, r) {
                let ys = &subset.chosen;
                let elems: Vec<Element> = (1..=n)
                    .map(|i| {
                        if ys.contains(&i) {
                            Element::D
                        } else {
                            Element::B
                        }
                    })
                    .collect();
                let lhs = string_on_vacuum(&elems, spectral, chain, q);
                let mut rhs = SpinState::zero(len);
                for tuple in index_tuples(ys) {
                    let mut coeff = Scalar::one();
                    for (j, &aj) in tuple.iter().enumerate() {
                        let ua = &spectral[aj - 1];
                        for wi in chain {
                            coeff *= &(ua - wi);
                        }
                        for b in 1..ys[j] {
                            if tuple[..j].contains(&b) {
                                continue;
                            }
                            coeff *= &(ua - &(q * &spectral[b - 1]));
                        }
                        for b in 1..=ys[j] {
                            if tuple[..=j].contains(&b) {
                                continue;
                            }
                            coeff = coeff.checked_div(&(ua - &spectral[b - 1]))?;
                        }
                    }
                    let others: Vec<Scalar> = (1..=n)
                        .filter(|i| !tuple.contains(i))
                        .map(|i| spectral[i - 1].clone())
                        .collect();
                    let state =
                        string_on_vacuum(&vec![Element::B; others.len()], &others, chain, q);
                    rhs = rhs.add(&state.scale(&coeff));
                }
                let label = ys
                    .iter()
                    .map(|y| y.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                check_states(builder, point, &[("y", label)], &lhs, &rhs);
            }
        }
    }
    Ok(())
}

/// Convenience map from external token to a verified report at default
/// sizes.
pub fn verify_commutation_by_label(
    label: &str,
    sizes: Option<RelationSizes>,
    points: usize,
    seed: u64,
) -> Result<IdentityReport> {
    let relation = Relation::from_label(label)?;
    let sizes = sizes.unwrap_or_else(|| relation.default_sizes());
    verify_commutation(relation, sizes, points, seed)
}
