//! Report types shared by every verifier.
//!
//! A verifier runs one identity over a parameter cell, performs some number
//! of exact comparisons ("points"), and returns an [`IdentityReport`]. A
//! report is verified only when at least one comparison ran and none failed;
//! every failed comparison is kept as a [`FailureWitness`] carrying the full
//! variable assignment and both side values, so a discrepancy can be
//! reproduced from the report alone.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::point::EvaluationPoint;
use crate::scalar::Scalar;

/// Outcome of one verification cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    VerifiedAtAllPoints,
    Failed,
}

/// One failed comparison: the sampled assignment and both side values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureWitness {
    pub assignment: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
}

/// The outcome of verifying one identity over one parameter cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub points: usize,
    pub failures: Vec<FailureWitness>,
    pub verdict: Verdict,
}

impl IdentityReport {
    pub fn is_verified(&self) -> bool {
        self.verdict == Verdict::VerifiedAtAllPoints
    }
}

/// Accumulates comparisons for one cell and freezes them into a report.
#[derive(Debug, Clone)]
pub struct ReportBuilder {
    identity: String,
    params: BTreeMap<String, String>,
    points: usize,
    failures: Vec<FailureWitness>,
}

impl ReportBuilder {
    pub fn new(identity: impl Into<String>) -> Self {
        ReportBuilder {
            identity: identity.into(),
            params: BTreeMap::new(),
            points: 0,
            failures: Vec::new(),
        }
    }

    /// Records a cell parameter (builder style).
    pub fn param(mut self, key: &str, value: impl std::fmt::Display) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    /// Records one comparison that succeeded.
    pub fn pass(&mut self) {
        self.points += 1;
    }

    /// Records one comparison that failed, with its witness.
    pub fn fail(
        &mut self,
        assignment: BTreeMap<String, String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) {
        self.points += 1;
        self.failures.push(FailureWitness {
            assignment,
            lhs: lhs.into(),
            rhs: rhs.into(),
        });
    }

    /// Compares two exact values; witnesses are rendered only on mismatch.
    pub fn check_scalars(
        &mut self,
        assignment: impl FnOnce() -> BTreeMap<String, String>,
        lhs: &Scalar,
        rhs: &Scalar,
    ) {
        if lhs == rhs {
            self.pass();
        } else {
            self.fail(assignment(), lhs.to_string(), rhs.to_string());
        }
    }

    /// A comparison already decided by the caller; descriptions are built
    /// only on mismatch.
    pub fn check_with(
        &mut self,
        ok: bool,
        assignment: impl FnOnce() -> BTreeMap<String, String>,
        lhs: impl FnOnce() -> String,
        rhs: impl FnOnce() -> String,
    ) {
        if ok {
            self.pass();
        } else {
            self.fail(assignment(), lhs(), rhs());
        }
    }

    /// Freezes the cell. A report verifies only if at least one comparison
    /// ran and all of them matched.
    pub fn finish(self) -> IdentityReport {
        let verdict = if self.points >= 1 && self.failures.is_empty() {
            Verdict::VerifiedAtAllPoints
        } else {
            Verdict::Failed
        };
        IdentityReport {
            identity: self.identity,
            params: self.params,
            points: self.points,
            failures: self.failures,
            verdict,
        }
    }
}

/// Renders an evaluation point plus extra labels into a witness assignment.
pub fn assignment(point: &EvaluationPoint, extras: &[(&str, String)]) -> BTreeMap<String, String> {
    let mut map = point.rendered();
    for (key, value) in extras {
        map.insert((*key).to_string(), value.clone());
    }
    map
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn fnv_fold(mut hash: u64, bytes: &[u8]) -> u64 {
    for byte in bytes {
        hash ^= u64::from(*byte);
        hash = hash.wrapping_mul(FNV_PRIME);
    }
    hash
}

/// Derives the sampling seed for one suite cell from the base seed, the
/// identity id, and the cell parameters. Stable across runs and platforms.
pub fn cell_seed(base: u64, identity: &str, params: &BTreeMap<String, String>) -> u64 {
    let mut hash = fnv_fold(FNV_OFFSET, &base.to_le_bytes());
    hash = fnv_fold(hash, identity.as_bytes());
    for (key, value) in params {
        hash = fnv_fold(hash, key.as_bytes());
        hash = fnv_fold(hash, b"=");
        hash = fnv_fold(hash, value.as_bytes());
        hash = fnv_fold(hash, b";");
    }
    hash
}

/// Derives the sampling seed for the `index`-th point of a cell.
pub fn point_seed(seed: u64, index: usize) -> u64 {
    let mut hash = fnv_fold(FNV_OFFSET, &seed.to_le_bytes());
    hash = fnv_fold(hash, &(index as u64).to_le_bytes());
    hash
}
