//! Shared helpers for the integration suites: proptest strategies for dense
//! complex matrices and an independent Hermitian eigensolver used as an
//! oracle against the SVD-based paths.
#![allow(dead_code)]

use num_complex::Complex64;
use pinvlaw_core::{ComplexMatrix, ToleranceConfig};
use proptest::prelude::*;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn bits(m: &ComplexMatrix) -> Vec<(u64, u64)> {
    m.data()
        .iter()
        .map(|z| (z.re.to_bits(), z.im.to_bits()))
        .collect()
}

pub fn complex_entry() -> impl Strategy<Value = Complex64> {
    ((-10.0..10.0f64), (-10.0..10.0f64)).prop_map(|(re, im)| Complex64::new(re, im))
}

pub fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = ComplexMatrix> {
    proptest::collection::vec(complex_entry(), rows * cols)
        .prop_map(move |data| ComplexMatrix::new(rows, cols, data).unwrap())
}

pub fn any_matrix(max_dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, cdim)| matrix(r, cdim))
}

pub fn square_matrix(max_dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    (1..=max_dim).prop_flat_map(|n| matrix(n, n))
}

/// Two matrices of one random square shape.
pub fn square_pair(max_dim: usize) -> impl Strategy<Value = (ComplexMatrix, ComplexMatrix)> {
    (1..=max_dim).prop_flat_map(|n| (matrix(n, n), matrix(n, n)))
}

/// Eigendecomposition of a Hermitian matrix by classical two-sided Jacobi
/// rotations. Fully independent of the one-sided SVD kernel in the library:
/// it diagonalizes the matrix itself rather than orthogonalizing columns.
///
/// Returns eigenvalues in descending order with matching eigenvector
/// columns. Panics if the input is not square or the rotation sweeps fail
/// to converge (does not happen for finite Hermitian input).
pub fn hermitian_eigen(h: &ComplexMatrix) -> (Vec<f64>, ComplexMatrix) {
    assert!(h.is_square(), "eigensolver oracle needs a square matrix");
    let n = h.rows();
    let scale = h.frobenius_norm();
    let mut a = h.clone();
    let mut v = ComplexMatrix::identity(n);

    let off = |a: &ComplexMatrix| -> f64 {
        let mut sum = 0.0;
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    sum += a.get(p, q).norm_sqr();
                }
            }
        }
        sum.sqrt()
    };

    let mut converged = scale == 0.0;
    for _sweep in 0..200 {
        if off(&a) <= 1e-14 * scale {
            converged = true;
            break;
        }
        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n {
                let hpq = a.get(p, q);
                let r = hpq.norm();
                if r <= 1e-18 * scale {
                    continue;
                }
                // Phase-align the off-diagonal entry, then rotate through the
                // angle that annihilates it: t solves t^2 - 2*zeta*t - 1 = 0.
                let phase = hpq / r;
                let alpha = a.get(p, p).re;
                let beta = a.get(q, q).re;
                let zeta = (beta - alpha) / (2.0 * r);
                let t = if zeta >= 0.0 {
                    -1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
                } else {
                    1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
                };
                let cs = 1.0 / (1.0 + t * t).sqrt();
                let sn = cs * t;
                let conj_phase = phase.conj();
                let j = ComplexMatrix::from_fn(n, n, |row, col| {
                    if (row, col) == (p, p) {
                        c(cs, 0.0)
                    } else if (row, col) == (p, q) {
                        c(-sn, 0.0)
                    } else if (row, col) == (q, p) {
                        conj_phase * sn
                    } else if (row, col) == (q, q) {
                        conj_phase * cs
                    } else if row == col {
                        c(1.0, 0.0)
                    } else {
                        c(0.0, 0.0)
                    }
                });
                a = j.adjoint().multiply(&a).unwrap().multiply(&j).unwrap();
                v = v.multiply(&j).unwrap();
            }
        }
    }
    assert!(converged, "Hermitian Jacobi oracle did not converge");

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a.get(j, j)
            .re
            .partial_cmp(&a.get(i, i).re)
            .unwrap()
            .then(i.cmp(&j))
    });
    let values: Vec<f64> = order.iter().map(|&k| a.get(k, k).re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, k| v.get(i, order[k]));
    (values, vectors)
}

/// Independent Moore-Penrose candidate through the normal equations:
/// `A+ = (A*A)+ A*`, with `(A*A)+` built from the Hermitian eigensolver
/// above. Never touches the library's SVD.
pub fn pinv_via_normal_equations(a: &ComplexMatrix, tol: &ToleranceConfig) -> ComplexMatrix {
    let adj = a.adjoint();
    let gram = adj.multiply(a).unwrap();
    let (lambda, vectors) = hermitian_eigen(&gram);
    let lambda_max = lambda.first().copied().unwrap_or(0.0).max(0.0);
    // The rank cutoff rule applied to the Gram's own spectrum: eigenvalue
    // noise scales with eps * lambda_max, so a sigma-style cutoff squared
    // would sit below the noise floor and keep junk modes.
    let cut = tol.rank_rel * lambda_max * a.rows().max(a.cols()) as f64;
    let n = a.cols();
    let gram_pinv = ComplexMatrix::from_fn(n, n, |i, j| {
        lambda
            .iter()
            .enumerate()
            .filter(|(_, &l)| l > cut)
            .map(|(k, &l)| vectors.get(i, k) * (1.0 / l) * vectors.get(j, k).conj())
            .sum()
    });
    gram_pinv.multiply(&adj).unwrap()
}

/// Normalized generalized inverse from an arbitrary one: `c = b a b`
/// satisfies both `a = a c a` and `c = c a c`. Test helper only.
pub fn normalized_inverse(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    b.multiply(a).unwrap().multiply(b).unwrap()
}
