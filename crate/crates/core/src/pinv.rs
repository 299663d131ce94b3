//! Moore-Penrose inverse and verifiers for its defining equations.
//!
//! The pseudoinverse is built from the SVD by inverting the singular values
//! above the rank cutoff: `A+ = V diag(1/sigma_i on the kept part, else 0) U*`.
//! Rank is decided exactly once, here; the verifiers never re-derive it.
//!
//! `B` is the Moore-Penrose inverse of `A` exactly when the four Penrose
//! equations hold: `ABA = A`, `BAB = B`, and both `BA` and `AB` are
//! self-adjoint. In a C*-algebra this `B` is unique, which is what the
//! verifier-based suites lean on.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, ToleranceConfig};
use crate::report::{ReportBuilder, VerdictReport};
use crate::svd::{numerical_rank, svd};

/// Residuals of the four Penrose equations, each a relative Frobenius norm
/// with an absolute floor when the denominator vanishes.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PenroseReport {
    /// `||ABA - A|| / ||A||`
    pub r1: f64,
    /// `||BAB - B|| / ||B||`
    pub r2: f64,
    /// `||(BA)* - BA|| / ||BA||`
    pub r3: f64,
    /// `||(AB)* - AB|| / ||AB||`
    pub r4: f64,
    /// All four residuals within `eq_rel`.
    pub pass: bool,
}

impl PenroseReport {
    pub fn residuals(&self) -> [f64; 4] {
        [self.r1, self.r2, self.r3, self.r4]
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals().into_iter().fold(0.0, f64::max)
    }
}

/// The Moore-Penrose inverse, shape `cols x rows`. The zero matrix maps to
/// the zero matrix of transposed shape.
pub fn moore_penrose(a: &ComplexMatrix, tol: &ToleranceConfig) -> Result<ComplexMatrix> {
    let f = svd(a)?;
    let rank = numerical_rank(&f, tol);
    // A+ = sum_{k < rank} sigma_k^{-1} v_k u_k*
    let inv_sigma: Vec<f64> = f.sigma[..rank].iter().map(|&s| 1.0 / s).collect();
    Ok(ComplexMatrix::from_fn(a.cols(), a.rows(), |i, j| {
        (0..rank)
            .map(|k| f.v.get(i, k) * inv_sigma[k] * f.u.get(j, k).conj())
            .sum()
    }))
}

/// Evaluate the four Penrose equations for a candidate inverse `b` of `a`.
/// `b` must have the transposed shape of `a`.
pub fn verify_penrose(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    tol: &ToleranceConfig,
) -> Result<PenroseReport> {
    if b.shape() != (a.cols(), a.rows()) {
        return Err(Error::DimensionMismatch {
            left: a.shape(),
            right: b.shape(),
        });
    }
    let ab = a.multiply(b)?;
    let ba = b.multiply(a)?;
    let aba = ab.multiply(a)?;
    let bab = ba.multiply(b)?;

    let r1 = tol.rel_residual(aba.distance(a)?, a.frobenius_norm());
    let r2 = tol.rel_residual(bab.distance(b)?, b.frobenius_norm());
    let r3 = tol.rel_residual(ba.adjoint().distance(&ba)?, ba.frobenius_norm());
    let r4 = tol.rel_residual(ab.adjoint().distance(&ab)?, ab.frobenius_norm());
    let pass = [r1, r2, r3, r4].iter().all(|&r| r <= tol.eq_rel);
    Ok(PenroseReport {
        r1,
        r2,
        r3,
        r4,
        pass,
    })
}

/// Check `(A*)+ = (A+)*`: taking adjoints commutes with taking
/// pseudoinverses.
pub fn pinv_adjoint_identity(a: &ComplexMatrix, tol: &ToleranceConfig) -> Result<VerdictReport> {
    let left = moore_penrose(&a.adjoint(), tol)?;
    let right = moore_penrose(a, tol)?.adjoint();
    let residual = tol.rel_residual(
        left.distance(&right)?,
        left.frobenius_norm().max(right.frobenius_norm()),
    );
    let mut builder = ReportBuilder::new();
    builder.push("pinv(A*) = pinv(A)*".into(), residual, tol.eq_rel);
    Ok(builder.finish())
}

/// Check `(A+)+ = A`: the pseudoinverse is an involution.
pub fn pinv_involution_identity(a: &ComplexMatrix, tol: &ToleranceConfig) -> Result<VerdictReport> {
    let once = moore_penrose(a, tol)?;
    let twice = moore_penrose(&once, tol)?;
    let residual = tol.rel_residual(
        twice.distance(a)?,
        a.frobenius_norm().max(twice.frobenius_norm()),
    );
    let mut builder = ReportBuilder::new();
    builder.push("pinv(pinv(A)) = A".into(), residual, tol.eq_rel);
    Ok(builder.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn diagonal_reciprocal_on_support() {
        let tol = ToleranceConfig::default();
        let a = ComplexMatrix::diag(&[c(2.0, 0.0), c(0.0, 0.0)]);
        let p = moore_penrose(&a, &tol).unwrap();
        let expected = ComplexMatrix::diag(&[c(0.5, 0.0), c(0.0, 0.0)]);
        assert!(p.distance(&expected).unwrap() < 1e-14);
    }

    #[test]
    fn identity_is_self_inverse() {
        let tol = ToleranceConfig::default();
        let a = ComplexMatrix::identity(4);
        let p = moore_penrose(&a, &tol).unwrap();
        assert!(p.distance(&a).unwrap() < 1e-13);
    }

    #[test]
    fn rank_one_formula() {
        // A = u v* with u = e1, v = (1,1): A+ = v u* / (|u|^2 |v|^2), and the
        // four Penrose equations hold for it by direct multiplication.
        let tol = ToleranceConfig::default();
        let a = ComplexMatrix::from_real(2, 2, &[1.0, 1.0, 0.0, 0.0]).unwrap();
        let p = moore_penrose(&a, &tol).unwrap();
        let expected = ComplexMatrix::from_real(2, 2, &[0.5, 0.0, 0.5, 0.0]).unwrap();
        assert!(p.distance(&expected).unwrap() < 1e-14);

        let apa = &(&a * &expected) * &a;
        assert!(apa.distance(&a).unwrap() < 1e-15);
        let pap = &(&expected * &a) * &expected;
        assert!(pap.distance(&expected).unwrap() < 1e-15);
        let pa = &expected * &a;
        assert!(pa.adjoint().distance(&pa).unwrap() < 1e-15);
        let ap = &a * &expected;
        assert!(ap.adjoint().distance(&ap).unwrap() < 1e-15);
    }

    #[test]
    fn zero_matrix_maps_to_transposed_zero() {
        let tol = ToleranceConfig::default();
        let p = moore_penrose(&ComplexMatrix::zeros(3, 2), &tol).unwrap();
        assert_eq!(p.shape(), (2, 3));
        assert_eq!(p.frobenius_norm(), 0.0);
    }

    #[test]
    fn verify_penrose_identity_case() {
        let tol = ToleranceConfig::default();
        let id = ComplexMatrix::identity(2);
        let report = verify_penrose(&id, &id, &tol).unwrap();
        assert!(report.pass);
        assert_eq!(report.residuals(), [0.0; 4]);
    }

    #[test]
    fn verify_penrose_detects_wrong_candidate() {
        // B = diag(1,1) against A = diag(1,0): BAB = diag(1,0) != B, so the
        // second equation fails while the others hold.
        let tol = ToleranceConfig::default();
        let a = ComplexMatrix::diag(&[c(1.0, 0.0), c(0.0, 0.0)]);
        let b = ComplexMatrix::identity(2);
        let report = verify_penrose(&a, &b, &tol).unwrap();
        assert!(!report.pass);
        assert!(report.r2 > 0.5);
        assert!(report.r1 <= tol.eq_rel);
    }

    #[test]
    fn verify_penrose_rejects_wrong_shape() {
        let tol = ToleranceConfig::default();
        let a = ComplexMatrix::zeros(3, 2);
        assert!(matches!(
            verify_penrose(&a, &ComplexMatrix::zeros(3, 2), &tol),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn zero_matrix_penrose_report_passes() {
        let tol = ToleranceConfig::default();
        let a = ComplexMatrix::zeros(3, 3);
        let b = moore_penrose(&a, &tol).unwrap();
        let report = verify_penrose(&a, &b, &tol).unwrap();
        assert!(report.pass);
        assert_eq!(report.max_residual(), 0.0);
    }

    #[test]
    fn adjoint_identity_on_simple_inputs() {
        let tol = ToleranceConfig::default();
        assert!(pinv_adjoint_identity(&ComplexMatrix::identity(2), &tol)
            .unwrap()
            .pass);
        let hermitian = ComplexMatrix::new(
            2,
            2,
            vec![c(2.0, 0.0), c(1.0, -1.0), c(1.0, 1.0), c(3.0, 0.0)],
        )
        .unwrap();
        assert!(pinv_adjoint_identity(&hermitian, &tol).unwrap().pass);
    }

    #[test]
    fn involution_identity_on_simple_inputs() {
        let tol = ToleranceConfig::default();
        assert!(pinv_involution_identity(&ComplexMatrix::zeros(3, 3), &tol)
            .unwrap()
            .pass);
        let a = ComplexMatrix::diag(&[c(2.0, 0.0), c(0.0, 0.0)]);
        assert!(pinv_involution_identity(&a, &tol).unwrap().pass);
    }
}
