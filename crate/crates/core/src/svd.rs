//! Singular value decomposition by one-sided Jacobi, plus numerical rank.
//!
//! The factorization exposes the range and kernel orthogonal complements of
//! an operator, which is what makes "regular element" (closed range)
//! numerically meaningful: the rank cutoff of [`numerical_rank`] decides
//! which singular directions belong to the invertible part.
//!
//! One-sided Jacobi orthogonalizes the columns of the working matrix by
//! plane rotations, accumulating them into `V`; it is simple, accurate for
//! small singular values, and deterministic for a fixed input since the
//! sweep order is fixed. See Demmel & Veselic, "Jacobi's method is more
//! accurate than QR" (UT-CS-89-88).

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // f64 math comes from the trait in no_std builds
use num_traits::Float;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, ToleranceConfig};

/// Hard cap on Jacobi sweeps; exceeding it signals pathological input.
const MAX_SWEEPS: usize = 64;

/// Full singular value decomposition `A = U diag(sigma) V*` with square
/// unitary `U` (rows x rows) and `V` (cols x cols); `sigma` is nonincreasing
/// with length `min(rows, cols)`.
///
/// Singular vectors carry an arbitrary phase; consumers must only use
/// phase-invariant combinations (projectors, pseudoinverses).
#[derive(Debug, Clone, PartialEq)]
pub struct SvdFactors {
    pub u: ComplexMatrix,
    pub sigma: Vec<f64>,
    pub v: ComplexMatrix,
}

impl SvdFactors {
    /// Row count of the decomposed matrix.
    pub fn rows(&self) -> usize {
        self.u.rows()
    }

    /// Column count of the decomposed matrix.
    pub fn cols(&self) -> usize {
        self.v.rows()
    }

    /// `U diag(sigma) V*`, the matrix the factors represent.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let (m, n) = (self.rows(), self.cols());
        ComplexMatrix::from_fn(m, n, |i, j| {
            self.sigma
                .iter()
                .enumerate()
                .map(|(k, &s)| self.u.get(i, k) * s * self.v.get(j, k).conj())
                .sum()
        })
    }
}

/// Decompose any rectangular matrix. Errors with
/// [`Error::ConvergenceFailure`] if the sweep cap is exceeded or the input
/// contains non-finite values (which defeat the rotation criterion).
pub fn svd(a: &ComplexMatrix) -> Result<SvdFactors> {
    if !a
        .data()
        .iter()
        .all(|z| z.re.is_finite() && z.im.is_finite())
    {
        return Err(Error::ConvergenceFailure { sweeps: 0 });
    }
    if a.rows() >= a.cols() {
        svd_tall(a)
    } else {
        // A = (A*)* : decompose the tall adjoint and swap the factors.
        let f = svd_tall(&a.adjoint())?;
        Ok(SvdFactors {
            u: f.v,
            sigma: f.sigma,
            v: f.u,
        })
    }
}

/// Count of singular values above the relative cutoff
/// `rank_rel * sigma_max * max(rows, cols)`; zero for the zero matrix.
pub fn numerical_rank(f: &SvdFactors, tol: &ToleranceConfig) -> usize {
    let sigma_max = f.sigma.first().copied().unwrap_or(0.0);
    let cutoff = tol.rank_rel * sigma_max * f.rows().max(f.cols()) as f64;
    f.sigma.iter().filter(|&&s| s > cutoff).count()
}

/// Columns of a matrix as owned vectors, the working representation for the
/// rotation sweeps.
fn to_columns(a: &ComplexMatrix) -> Vec<Vec<Complex64>> {
    (0..a.cols())
        .map(|j| (0..a.rows()).map(|i| a.get(i, j)).collect())
        .collect()
}

fn from_columns(cols: &[Vec<Complex64>]) -> ComplexMatrix {
    ComplexMatrix::from_fn(cols[0].len(), cols.len(), |i, j| cols[j][i])
}

fn dot_conj(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    x.iter().zip(y).map(|(a, b)| a.conj() * b).sum()
}

fn norm_sqr(x: &[Complex64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum()
}

/// One-sided Jacobi on a tall (rows >= cols) matrix.
fn svd_tall(a: &ComplexMatrix) -> Result<SvdFactors> {
    let (m, n) = a.shape();
    let mut w = to_columns(a);
    let mut v: Vec<Vec<Complex64>> = (0..n)
        .map(|j| {
            let mut col = vec![Complex64::new(0.0, 0.0); n];
            col[j] = Complex64::new(1.0, 0.0);
            col
        })
        .collect();

    let eps = f64::EPSILON;
    // Inner products of orthogonalized columns carry rounding noise on the
    // order of eps * sqrt(m) relative to the norm product, so the pair
    // criterion must sit above that or graded matrices never settle.
    let tol_sqr = eps * eps * 16.0 * m as f64;
    // Columns whose norm is at the roundoff floor of the whole matrix hold
    // no information; rotating them against real columns only churns noise.
    let zero_floor = norm_sqr(a.data()) * eps * eps;
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n {
                let app = norm_sqr(&w[p]);
                let aqq = norm_sqr(&w[q]);
                if app <= zero_floor || aqq <= zero_floor {
                    continue;
                }
                let apq = dot_conj(&w[p], &w[q]);
                let r = apq.norm();
                if r * r <= tol_sqr * app * aqq {
                    continue;
                }
                rotated = true;

                // Phase-align column q so the 2x2 Gram block becomes real,
                // then apply the classic real rotation that annihilates it.
                let conj_phase = apq.conj() / r;
                let zeta = (aqq - app) / (2.0 * r);
                let t = if zeta >= 0.0 {
                    1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
                } else {
                    -1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
                };
                let cs = 1.0 / (1.0 + t * t).sqrt();
                let sn = cs * t;

                let (wp, wq) = split_pair(&mut w, p, q);
                rotate(wp, wq, cs, sn, conj_phase);
                let (vp, vq) = split_pair(&mut v, p, q);
                rotate(vp, vq, cs, sn, conj_phase);
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::ConvergenceFailure { sweeps: MAX_SWEEPS });
    }

    // Singular values and descending order (stable on ties).
    let sig: Vec<f64> = w.iter().map(|col| norm_sqr(col).sqrt()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| sig[j].partial_cmp(&sig[i]).unwrap().then(i.cmp(&j)));
    let sigma: Vec<f64> = order.iter().map(|&k| sig[k]).collect();
    let v_cols: Vec<Vec<Complex64>> = order.iter().map(|&k| v[k].clone()).collect();

    // Left factor: normalized nonzero working columns, completed to a full
    // orthonormal basis. Directions of columns whose norm is at roundoff
    // level are unreliable and get replaced by completion vectors.
    let trust_cut = sigma.first().copied().unwrap_or(0.0) * eps * 16.0 * m.max(n) as f64;
    let mut u_cols: Vec<Vec<Complex64>> = Vec::with_capacity(m);
    let mut fill_at: Vec<usize> = Vec::new();
    for (slot, &k) in order.iter().enumerate() {
        if sigma[slot] > trust_cut {
            let inv = 1.0 / sigma[slot];
            u_cols.push(w[k].iter().map(|&z| z * inv).collect());
        } else {
            fill_at.push(slot);
            u_cols.push(Vec::new());
        }
    }
    for slot in n..m {
        fill_at.push(slot);
        u_cols.push(Vec::new());
    }
    complete_basis(&mut u_cols, &fill_at, m);

    Ok(SvdFactors {
        u: from_columns(&u_cols),
        sigma,
        v: from_columns(&v_cols),
    })
}

/// Two disjoint mutable column references.
fn split_pair(
    cols: &mut [Vec<Complex64>],
    p: usize,
    q: usize,
) -> (&mut Vec<Complex64>, &mut Vec<Complex64>) {
    debug_assert!(p < q);
    let (head, tail) = cols.split_at_mut(q);
    (&mut head[p], &mut tail[0])
}

/// Apply the plane rotation to a column pair: q is phase-aligned first.
fn rotate(p: &mut [Complex64], q: &mut [Complex64], cs: f64, sn: f64, conj_phase: Complex64) {
    for (zp, zq) in p.iter_mut().zip(q.iter_mut()) {
        let a = *zp;
        let b = *zq * conj_phase;
        *zp = a * cs - b * sn;
        *zq = a * sn + b * cs;
    }
}

/// Fill the empty slots of `cols` with orthonormal vectors completing the
/// existing ones to a basis of C^m. Candidates are the standard basis
/// vectors with the span of accepted columns projected out; each round takes
/// the candidate of largest remaining norm (first index on ties), which is
/// bounded below by 1/sqrt(m) and keeps the construction deterministic.
fn complete_basis(cols: &mut [Vec<Complex64>], fill_at: &[usize], m: usize) {
    if fill_at.is_empty() {
        return;
    }
    let mut residuals: Vec<Vec<Complex64>> = (0..m)
        .map(|i| {
            let mut e = vec![Complex64::new(0.0, 0.0); m];
            e[i] = Complex64::new(1.0, 0.0);
            e
        })
        .collect();
    let mut used = vec![false; m];
    let project_out = |basis: &[Complex64], vecs: &mut [Vec<Complex64>], used: &[bool]| {
        for (i, r) in vecs.iter_mut().enumerate() {
            if used[i] {
                continue;
            }
            let coef = dot_conj(basis, r);
            for (rz, bz) in r.iter_mut().zip(basis) {
                *rz -= coef * bz;
            }
        }
    };
    for col in cols.iter().filter(|c| !c.is_empty()) {
        project_out(col, &mut residuals, &used);
    }
    for &slot in fill_at {
        let (best, _) = residuals
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .map(|(i, r)| (i, norm_sqr(r)))
            .fold((usize::MAX, -1.0), |acc, cur| {
                if cur.1 > acc.1 {
                    cur
                } else {
                    acc
                }
            });
        used[best] = true;
        // One re-orthogonalization pass against every accepted column keeps
        // the completed basis orthonormal to machine precision.
        let mut vec_new = residuals[best].clone();
        for col in cols.iter().filter(|c| !c.is_empty()) {
            let coef = dot_conj(col, &vec_new);
            for (vz, cz) in vec_new.iter_mut().zip(col) {
                *vz -= coef * cz;
            }
        }
        let norm = norm_sqr(&vec_new).sqrt();
        for z in vec_new.iter_mut() {
            *z /= norm;
        }
        project_out(&vec_new, &mut residuals, &used);
        cols[slot] = vec_new;
    }
}
