//! Commutators and doubly-commuting predicates for pairs and tuples.
//!
//! A tuple `(a_1, ..., a_n)` is doubly commuting when `a_i a_j = a_j a_i`
//! and `a_i a_j* = a_j* a_i` for all `i != j`; equivalently, every pair of
//! distinct entries is a doubly commuting pair. The predicates here are
//! tolerance-aware: commutation residuals are normalized by the product of
//! the operand norms so verdicts cannot flip under scalar rescaling.
//!
//! [`TupleSpec`] additionally carries a permutation and per-entry marks
//! (plain, adjoint, dagger, dagger-adjoint). Double commutativity is
//! invariant under all of these transforms, which the property suites
//! exercise; the dagger marks are resolved through the Moore-Penrose
//! inverse, freshly per verification call so tolerance changes never see a
//! stale pseudoinverse.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, ToleranceConfig};
use crate::pinv::moore_penrose;
use crate::report::{DaggerEquivalence, ReportBuilder, VerdictReport};

/// Per-entry transform applied when a tuple is resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum Mark {
    Plain,
    Adjoint,
    Dagger,
    DaggerAdjoint,
}

impl Mark {
    /// Compose a pseudoinverse on top of this mark. Since `(a+)+ = a` and
    /// `(a*)+ = (a+)*`, daggering toggles plain <-> dagger and
    /// adjoint <-> dagger-adjoint.
    pub fn daggered(self) -> Mark {
        match self {
            Mark::Plain => Mark::Dagger,
            Mark::Adjoint => Mark::DaggerAdjoint,
            Mark::Dagger => Mark::Plain,
            Mark::DaggerAdjoint => Mark::Adjoint,
        }
    }

    fn apply(self, a: &ComplexMatrix, tol: &ToleranceConfig) -> Result<ComplexMatrix> {
        match self {
            Mark::Plain => Ok(a.clone()),
            Mark::Adjoint => Ok(a.adjoint()),
            Mark::Dagger => moore_penrose(a, tol),
            Mark::DaggerAdjoint => Ok(moore_penrose(a, tol)?.adjoint()),
        }
    }
}

/// An ordered tuple of equal-dimension square matrices with per-entry marks
/// and a permutation. The resolved entry in slot `j` is
/// `mark_j(entries[perm[j]])`.
#[derive(Debug, Clone, PartialEq)]
pub struct TupleSpec {
    entries: Vec<ComplexMatrix>,
    marks: Vec<Mark>,
    perm: Vec<usize>,
}

impl TupleSpec {
    /// Plain tuple: identity permutation, all marks plain.
    pub fn new(entries: Vec<ComplexMatrix>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidTuple("tuple must not be empty"));
        }
        let dim = entries[0].rows();
        for e in &entries {
            if !e.is_square() {
                return Err(Error::InvalidTuple("entries must be square"));
            }
            if e.rows() != dim {
                return Err(Error::InvalidTuple("entries must share one dimension"));
            }
        }
        let n = entries.len();
        Ok(Self {
            entries,
            marks: vec![Mark::Plain; n],
            perm: (0..n).collect(),
        })
    }

    /// Replace the marks; length must match the tuple.
    pub fn with_marks(mut self, marks: Vec<Mark>) -> Result<Self> {
        if marks.len() != self.entries.len() {
            return Err(Error::InvalidTuple("marks length mismatch"));
        }
        self.marks = marks;
        Ok(self)
    }

    /// Replace the permutation, given 0-based; must be a bijection on
    /// `0..len`.
    pub fn with_perm(mut self, perm: Vec<usize>) -> Result<Self> {
        if perm.len() != self.entries.len() {
            return Err(Error::InvalidTuple("permutation length mismatch"));
        }
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || seen[p] {
                return Err(Error::InvalidTuple("permutation is not a bijection"));
            }
            seen[p] = true;
        }
        self.perm = perm;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Shared dimension of the square entries.
    pub fn dim(&self) -> usize {
        self.entries[0].rows()
    }

    pub fn entries(&self) -> &[ComplexMatrix] {
        &self.entries
    }

    pub fn marks(&self) -> &[Mark] {
        &self.marks
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// The same tuple with every mark composed with a dagger.
    pub fn daggered(&self) -> Self {
        Self {
            entries: self.entries.clone(),
            marks: self.marks.iter().map(|m| m.daggered()).collect(),
            perm: self.perm.clone(),
        }
    }
}

/// `AB - BA` for square matrices of equal dimension.
pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if a.shape() != b.shape() {
        return Err(Error::DimensionMismatch {
            left: a.shape(),
            right: b.shape(),
        });
    }
    Ok(&a.multiply(b)? - &b.multiply(a)?)
}

/// Residuals of the defining pair conditions, normalized by
/// `||A||_F * ||B||_F` with the absolute floor of the tolerance config.
fn pair_residuals(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    tol: &ToleranceConfig,
) -> Result<(f64, f64)> {
    let scale = a.frobenius_norm() * b.frobenius_norm();
    let plain = tol.rel_residual(commutator(a, b)?.frobenius_norm(), scale);
    let star = tol.rel_residual(commutator(a, &b.adjoint())?.frobenius_norm(), scale);
    Ok((plain, star))
}

/// Test `AB = BA` and `AB* = B*A` within tolerance. The two residuals are
/// reported with labels `[A, B]` and `[A, B*]`.
pub fn is_doubly_commuting_pair(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    tol: &ToleranceConfig,
) -> Result<VerdictReport> {
    let (plain, star) = pair_residuals(a, b, tol)?;
    let mut builder = ReportBuilder::new();
    builder.push_pair("[a1, a2]".into(), plain, tol.eq_rel, Some((1, 2)));
    builder.push_pair("[a1, a2*]".into(), star, tol.eq_rel, Some((1, 2)));
    Ok(builder.finish())
}

/// Apply permutation and marks: slot `j` receives
/// `mark_j(entries[perm[j]])`. Dagger marks go through [`moore_penrose`],
/// computed fresh on every call.
pub fn resolve_tuple(t: &TupleSpec, tol: &ToleranceConfig) -> Result<Vec<ComplexMatrix>> {
    t.perm()
        .iter()
        .zip(t.marks())
        .map(|(&src, mark)| mark.apply(&t.entries()[src], tol))
        .collect()
}

/// Test every unordered pair of distinct resolved entries. The witness is
/// the lexicographically first failing pair (1-based), chosen after all
/// pairs are evaluated so it does not depend on evaluation order. A
/// singleton tuple passes vacuously.
pub fn is_doubly_commuting_tuple(t: &TupleSpec, tol: &ToleranceConfig) -> Result<VerdictReport> {
    let resolved = resolve_tuple(t, tol)?;
    check_resolved_tuple(&resolved, tol)
}

/// The pairwise grid over already-resolved entries; shared with the laws
/// verifiers so they can reuse entries they have resolved once.
pub(crate) fn check_resolved_tuple(
    resolved: &[ComplexMatrix],
    tol: &ToleranceConfig,
) -> Result<VerdictReport> {
    let mut builder = ReportBuilder::new();
    for i in 0..resolved.len() {
        for j in i + 1..resolved.len() {
            let (plain, star) = pair_residuals(&resolved[i], &resolved[j], tol)?;
            let pair = Some((i + 1, j + 1));
            builder.push_pair(
                format!("[a{}, a{}]", i + 1, j + 1),
                plain,
                tol.eq_rel,
                pair,
            );
            builder.push_pair(
                format!("[a{}, a{}*]", i + 1, j + 1),
                star,
                tol.eq_rel,
                pair,
            );
        }
    }
    Ok(builder.finish())
}

/// A tuple is doubly commuting exactly when its entrywise pseudoinverse
/// tuple is. Evaluates both sides and reports whether the verdicts agree.
pub fn dagger_tuple_equivalence(t: &TupleSpec, tol: &ToleranceConfig) -> Result<DaggerEquivalence> {
    let base = is_doubly_commuting_tuple(t, tol)?;
    let daggered = is_doubly_commuting_tuple(&t.daggered(), tol)?;
    Ok(DaggerEquivalence {
        agrees: base.pass == daggered.pass,
        base,
        daggered,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn e12() -> ComplexMatrix {
        ComplexMatrix::unit(2, 2, 0, 1)
    }

    fn e21() -> ComplexMatrix {
        ComplexMatrix::unit(2, 2, 1, 0)
    }

    #[test]
    fn commutator_basics() {
        let a = ComplexMatrix::new(2, 2, vec![c(1.0, 1.0), c(2.0, 0.0), c(0.0, -1.0), c(3.0, 0.5)])
            .unwrap();
        assert_eq!(commutator(&a, &a).unwrap().frobenius_norm(), 0.0);
        let id = ComplexMatrix::identity(2);
        assert_eq!(commutator(&id, &a).unwrap().frobenius_norm(), 0.0);
        // [E12, E21] = E11 - E22 = diag(1, -1), by matrix-unit arithmetic.
        let expected = ComplexMatrix::diag(&[c(1.0, 0.0), c(-1.0, 0.0)]);
        assert_eq!(commutator(&e12(), &e21()).unwrap(), expected);
    }

    #[test]
    fn commutator_error_paths() {
        let rect = ComplexMatrix::zeros(2, 3);
        assert!(matches!(
            commutator(&rect, &rect),
            Err(Error::NotSquare { .. })
        ));
        let a = ComplexMatrix::zeros(2, 2);
        let b = ComplexMatrix::zeros(3, 3);
        assert!(matches!(
            commutator(&a, &b),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn normal_element_pairs_with_itself() {
        let tol = ToleranceConfig::default();
        let normal = ComplexMatrix::diag(&[c(1.0, 2.0), c(-3.0, 0.0)]);
        assert!(is_doubly_commuting_pair(&normal, &normal, &tol)
            .unwrap()
            .pass);
    }

    #[test]
    fn diagonal_pairs_commute() {
        let tol = ToleranceConfig::default();
        let a = ComplexMatrix::diag(&[c(1.0, 0.0), c(2.0, 0.0)]);
        let b = ComplexMatrix::diag(&[c(3.0, 0.0), c(4.0, 0.0)]);
        assert!(is_doubly_commuting_pair(&a, &b, &tol).unwrap().pass);
    }

    #[test]
    fn matrix_units_fail_with_witness() {
        let tol = ToleranceConfig::default();
        let report = is_doubly_commuting_pair(&e12(), &e21(), &tol).unwrap();
        assert!(!report.pass);
        assert_eq!(report.witness, Some((1, 2)));
        // The plain commutator is the failing check; the starred one holds
        // since E21* = E12.
        assert!(report.checks[0].residual > 0.5);
        assert!(report.checks[1].residual <= tol.eq_rel);
    }

    #[test]
    fn pair_verdict_is_symmetric() {
        let tol = ToleranceConfig::default();
        let ab = is_doubly_commuting_pair(&e12(), &e21(), &tol).unwrap();
        let ba = is_doubly_commuting_pair(&e21(), &e12(), &tol).unwrap();
        assert_eq!(ab.pass, ba.pass);
    }

    #[test]
    fn singleton_tuple_passes_vacuously() {
        let tol = ToleranceConfig::default();
        let t = TupleSpec::new(vec![e12()]).unwrap();
        let report = is_doubly_commuting_tuple(&t, &tol).unwrap();
        assert!(report.pass);
        assert!(report.checks.is_empty());
    }

    #[test]
    fn tuple_with_noncommuting_block_names_the_pair() {
        let tol = ToleranceConfig::default();
        let t = TupleSpec::new(vec![e12(), e21(), ComplexMatrix::identity(2)]).unwrap();
        let report = is_doubly_commuting_tuple(&t, &tol).unwrap();
        assert!(!report.pass);
        assert_eq!(report.witness, Some((1, 2)));
    }

    #[test]
    fn resolve_identity_returns_entries() {
        let tol = ToleranceConfig::default();
        let a = ComplexMatrix::diag(&[c(1.0, 0.0), c(2.0, 0.0)]);
        let b = ComplexMatrix::diag(&[c(3.0, 0.0), c(4.0, 0.0)]);
        let t = TupleSpec::new(vec![a.clone(), b.clone()]).unwrap();
        let resolved = resolve_tuple(&t, &tol).unwrap();
        assert_eq!(resolved, vec![a, b]);
    }

    #[test]
    fn resolve_applies_swap_and_marks() {
        // Swap permutation with marks (adjoint, plain) sends (A, B) to
        // (B*, A).
        let tol = ToleranceConfig::default();
        let a = ComplexMatrix::new(2, 2, vec![c(1.0, 1.0), c(0.0, 0.0), c(2.0, 0.0), c(0.0, -1.0)])
            .unwrap();
        let b = ComplexMatrix::new(2, 2, vec![c(0.0, 1.0), c(1.0, 0.0), c(0.0, 0.0), c(3.0, 0.0)])
            .unwrap();
        let t = TupleSpec::new(vec![a.clone(), b.clone()])
            .unwrap()
            .with_perm(vec![1, 0])
            .unwrap()
            .with_marks(vec![Mark::Adjoint, Mark::Plain])
            .unwrap();
        let resolved = resolve_tuple(&t, &tol).unwrap();
        assert_eq!(resolved[0], b.adjoint());
        assert_eq!(resolved[1], a);
    }

    #[test]
    fn resolve_dagger_marks_on_diagonals() {
        let tol = ToleranceConfig::default();
        let a = ComplexMatrix::diag(&[c(2.0, 0.0), c(0.0, 0.0)]);
        let b = ComplexMatrix::diag(&[c(0.0, 0.0), c(3.0, 0.0)]);
        let t = TupleSpec::new(vec![a, b])
            .unwrap()
            .with_marks(vec![Mark::Dagger, Mark::Dagger])
            .unwrap();
        let resolved = resolve_tuple(&t, &tol).unwrap();
        let ea = ComplexMatrix::diag(&[c(0.5, 0.0), c(0.0, 0.0)]);
        let eb = ComplexMatrix::diag(&[c(0.0, 0.0), c(1.0 / 3.0, 0.0)]);
        assert!(resolved[0].distance(&ea).unwrap() < 1e-14);
        assert!(resolved[1].distance(&eb).unwrap() < 1e-14);
    }

    #[test]
    fn mark_daggering_toggles() {
        assert_eq!(Mark::Plain.daggered(), Mark::Dagger);
        assert_eq!(Mark::Dagger.daggered(), Mark::Plain);
        assert_eq!(Mark::Adjoint.daggered(), Mark::DaggerAdjoint);
        assert_eq!(Mark::DaggerAdjoint.daggered(), Mark::Adjoint);
    }

    #[test]
    fn dagger_equivalence_agrees_on_both_kinds() {
        let tol = ToleranceConfig::default();
        let commuting = TupleSpec::new(vec![
            ComplexMatrix::diag(&[c(1.0, 0.0), c(2.0, 0.0)]),
            ComplexMatrix::diag(&[c(3.0, 0.0), c(0.0, 0.0)]),
        ])
        .unwrap();
        let eq = dagger_tuple_equivalence(&commuting, &tol).unwrap();
        assert!(eq.agrees);
        assert!(eq.base.pass && eq.daggered.pass);

        // Daggers of matrix units are matrix units (E12+ = E21), still
        // non-commuting: both sides fail, verdicts agree.
        let units = TupleSpec::new(vec![e12(), e21()]).unwrap();
        let eq = dagger_tuple_equivalence(&units, &tol).unwrap();
        assert!(eq.agrees);
        assert!(!eq.base.pass && !eq.daggered.pass);
    }

    #[test]
    fn tuple_validation_errors() {
        assert!(matches!(
            TupleSpec::new(vec![]),
            Err(Error::InvalidTuple(_))
        ));
        assert!(matches!(
            TupleSpec::new(vec![ComplexMatrix::zeros(2, 3)]),
            Err(Error::InvalidTuple(_))
        ));
        assert!(matches!(
            TupleSpec::new(vec![ComplexMatrix::zeros(2, 2), ComplexMatrix::zeros(3, 3)]),
            Err(Error::InvalidTuple(_))
        ));
        let t = TupleSpec::new(vec![ComplexMatrix::identity(2), ComplexMatrix::identity(2)]);
        assert!(matches!(
            t.clone().unwrap().with_perm(vec![0, 0]),
            Err(Error::InvalidTuple(_))
        ));
        assert!(matches!(
            t.unwrap().with_marks(vec![Mark::Plain]),
            Err(Error::InvalidTuple(_))
        ));
    }
}
