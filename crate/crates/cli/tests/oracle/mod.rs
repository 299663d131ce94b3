//! Independent Moore-Penrose candidate for the uniqueness suite: the
//! normal-equations formula `A+ = (A*A)+ A*` with the Gram pseudoinverse
//! built from a classical two-sided Jacobi eigensolver. No code path here
//! touches the library's one-sided SVD.
#![allow(dead_code)]

use pinvlaw_core::{Complex64, ComplexMatrix, ToleranceConfig};

/// Eigendecomposition of a Hermitian matrix; eigenvalues descending with
/// matching eigenvector columns.
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
                        Complex64::new(cs, 0.0)
                    } else if (row, col) == (p, q) {
                        Complex64::new(-sn, 0.0)
                    } else if (row, col) == (q, p) {
                        conj_phase * sn
                    } else if (row, col) == (q, q) {
                        conj_phase * cs
                    } else if row == col {
                        Complex64::new(1.0, 0.0)
                    } else {
                        Complex64::new(0.0, 0.0)
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

pub fn pinv_via_normal_equations(a: &ComplexMatrix, tol: &ToleranceConfig) -> ComplexMatrix {
    let adj = a.adjoint();
    let gram = adj.multiply(a).unwrap();
    let (lambda, vectors) = hermitian_eigen(&gram);
    let lambda_max = lambda.first().copied().unwrap_or(0.0).max(0.0);
    // Rank cutoff applied to the Gram's own spectrum; eigenvalue noise
    // scales with eps * lambda_max.
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
