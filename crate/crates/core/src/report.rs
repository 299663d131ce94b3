//! Structured outcomes shared by the verifiers.

use alloc::string::String;
use alloc::vec::Vec;

/// One labeled residual comparison inside a report.
///
/// A check without a threshold is informational: its residual is recorded
/// (normality of an input, say) but it never gates the verdict.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Check {
    pub label: String,
    pub residual: f64,
    pub threshold: Option<f64>,
}

impl Check {
    pub fn passes(&self) -> bool {
        match self.threshold {
            Some(t) => self.residual <= t,
            None => true,
        }
    }

    pub fn is_informational(&self) -> bool {
        self.threshold.is_none()
    }
}

/// Outcome of a verifier: pass/fail per identity with residual norms, plus an
/// optional witness naming the first failing pair of tuple indices (1-based).
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct VerdictReport {
    pub pass: bool,
    pub checks: Vec<Check>,
    pub witness: Option<(usize, usize)>,
}

impl VerdictReport {
    /// Worst ratio of residual to threshold across gated checks; 0 for an
    /// empty report. Handy for diagnostics and margin assertions.
    pub fn worst_ratio(&self) -> f64 {
        self.checks
            .iter()
            .filter_map(|c| {
                let t = c.threshold?;
                if t > 0.0 {
                    Some(c.residual / t)
                } else if c.residual > 0.0 {
                    Some(f64::INFINITY)
                } else {
                    Some(0.0)
                }
            })
            .fold(0.0, f64::max)
    }
}

/// Builder collecting checks together with the tuple pair each one belongs
/// to. The witness is the lexicographically first failing pair, computed
/// after all checks so the outcome does not depend on evaluation order.
#[derive(Debug, Default)]
pub(crate) struct ReportBuilder {
    checks: Vec<Check>,
    pairs: Vec<Option<(usize, usize)>>,
}

impl ReportBuilder {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn push(&mut self, label: String, residual: f64, threshold: f64) {
        self.push_pair(label, residual, threshold, None);
    }

    /// Informational check: recorded but never gating.
    pub(crate) fn push_info(&mut self, label: String, residual: f64) {
        self.checks.push(Check {
            label,
            residual,
            threshold: None,
        });
        self.pairs.push(None);
    }

    pub(crate) fn push_pair(
        &mut self,
        label: String,
        residual: f64,
        threshold: f64,
        pair: Option<(usize, usize)>,
    ) {
        self.checks.push(Check {
            label,
            residual,
            threshold: Some(threshold),
        });
        self.pairs.push(pair);
    }

    pub(crate) fn finish(self) -> VerdictReport {
        let witness = self
            .checks
            .iter()
            .zip(&self.pairs)
            .filter(|(check, pair)| !check.passes() && pair.is_some())
            .filter_map(|(_, pair)| *pair)
            .min();
        let pass = self.checks.iter().all(Check::passes);
        VerdictReport {
            pass,
            checks: self.checks,
            witness,
        }
    }
}

/// Verdict of the pseudoinverse-equality classifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum TupleVerdict {
    DoublyCommuting,
    NotDoublyCommuting,
}

/// Outcome of classifying a tuple from the pseudoinverse equalities of its
/// swapped products, cross-checked against the direct commutation test.
///
/// `verdict` follows `evidence` alone. When the two reports disagree the
/// `discrepancy` flag is raised and never silently reconciled.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ClassificationResult {
    pub verdict: TupleVerdict,
    /// Pseudoinverse-equality checks over all ordered pairs.
    pub evidence: VerdictReport,
    /// Direct doubly-commuting test of the same tuple.
    pub cross_check: VerdictReport,
    pub discrepancy: bool,
}

/// Paired verdicts showing that a tuple and its entrywise pseudoinverse
/// tuple agree on double commutativity. `agrees` compares the two `pass`
/// fields; both full reports are retained.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DaggerEquivalence {
    pub agrees: bool,
    pub base: VerdictReport,
    pub daggered: VerdictReport,
}
