//! Seeded, deterministic generators of structured matrices and tuples.
//!
//! Every generator is a pure function of its parameters and a [`Seed`],
//! driven by ChaCha8 (via `rand_chacha`), so identical inputs reproduce
//! identical output within one build. Spectra are kept inside `[0.1, 10]`,
//! well separated from the rank cutoff, so that regularity of the generated
//! instances is numerically unambiguous.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // f64 math comes from the trait in no_std builds
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::commute::TupleSpec;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Seed for the project PRNG (ChaCha8 keyed by this 64-bit value).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Seed(pub u64);

/// Largest embedded dimension [`tensor_embed`] accepts.
pub const TENSOR_DIM_CAP: usize = 256;

const UNITARY_RETRIES: usize = 3;

fn rng_for(seed: Seed) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.0)
}

fn gauss(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Modulus log-uniform in `[0.1, 10]` with uniform phase.
fn annulus_sample(rng: &mut ChaCha8Rng) -> Complex64 {
    let exponent: f64 = rng.gen_range(-1.0..1.0);
    let modulus = 10.0_f64.powf(exponent);
    let theta: f64 = rng.gen_range(0.0..core::f64::consts::TAU);
    Complex64::new(modulus * theta.cos(), modulus * theta.sin())
}

/// Orthonormalize `count` seeded Gaussian columns of length `dim` by
/// modified Gram-Schmidt with a second projection pass.
fn orthonormal_columns(
    rng: &mut ChaCha8Rng,
    dim: usize,
    count: usize,
) -> core::result::Result<Vec<Vec<Complex64>>, ()> {
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(count);
    for _ in 0..count {
        let mut v: Vec<Complex64> = (0..dim).map(|_| gauss(rng)).collect();
        for _ in 0..2 {
            for u in &cols {
                let coef: Complex64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (vz, uz) in v.iter_mut().zip(u) {
                    *vz -= coef * uz;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-8 {
            return Err(());
        }
        for z in v.iter_mut() {
            *z /= norm;
        }
        cols.push(v);
    }
    Ok(cols)
}

fn columns_to_matrix(cols: &[Vec<Complex64>], rows: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols.len(), |i, j| cols[j][i])
}

/// Haar-ish random unitary: a seeded complex Gaussian matrix orthonormalized
/// column by column. Retries internally on the astronomically unlikely
/// degenerate sample.
pub fn random_unitary(dim: usize, seed: Seed) -> Result<ComplexMatrix> {
    assert!(dim >= 1, "dimension must be positive");
    let mut rng = rng_for(seed);
    for _ in 0..UNITARY_RETRIES {
        if let Ok(cols) = orthonormal_columns(&mut rng, dim, dim) {
            return Ok(columns_to_matrix(&cols, dim));
        }
    }
    Err(Error::DegenerateSample)
}

/// Matrix of the requested shape and exact numerical rank, with nonzero
/// singular values log-uniform in `[0.1, 10]`.
pub fn random_fixed_rank(rows: usize, cols: usize, rank: usize, seed: Seed) -> Result<ComplexMatrix> {
    assert!(rows >= 1 && cols >= 1, "dimensions must be positive");
    let max_rank = rows.min(cols);
    if rank > max_rank {
        return Err(Error::RankOutOfRange {
            requested: rank,
            max: max_rank,
        });
    }
    if rank == 0 {
        return Ok(ComplexMatrix::zeros(rows, cols));
    }
    let mut rng = rng_for(seed);
    for _ in 0..UNITARY_RETRIES {
        let left = match orthonormal_columns(&mut rng, rows, rank) {
            Ok(cols) => cols,
            Err(()) => continue,
        };
        let right = match orthonormal_columns(&mut rng, cols, rank) {
            Ok(cols) => cols,
            Err(()) => continue,
        };
        let sigma: Vec<f64> = (0..rank)
            .map(|_| 10.0_f64.powf(rng.gen_range(-1.0..1.0)))
            .collect();
        // A = sum_k sigma_k u_k v_k*
        return Ok(ComplexMatrix::from_fn(rows, cols, |i, j| {
            (0..rank)
                .map(|k| left[k][i] * sigma[k] * right[k][j].conj())
                .sum()
        }));
    }
    Err(Error::DegenerateSample)
}

/// Embed square factors `A_1, ..., A_n` on separate tensor legs:
/// entry `i` is `I (x) ... (x) A_i (x) ... (x) I` on the product space.
/// Distinct entries then commute and star-commute by construction, so the
/// resulting tuple is doubly commuting.
pub fn tensor_embed(factors: &[ComplexMatrix]) -> Result<TupleSpec> {
    if factors.is_empty() || factors.len() > 4 {
        return Err(Error::SizeCap {
            dim: factors.len(),
            cap: 4,
        });
    }
    let mut total = 1usize;
    for f in factors {
        if !f.is_square() {
            return Err(Error::NotSquare {
                rows: f.rows(),
                cols: f.cols(),
            });
        }
        if f.rows() > 4 {
            return Err(Error::SizeCap {
                dim: f.rows(),
                cap: 4,
            });
        }
        total *= f.rows();
    }
    if total > TENSOR_DIM_CAP {
        return Err(Error::SizeCap {
            dim: total,
            cap: TENSOR_DIM_CAP,
        });
    }
    let entries = factors
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let pre: usize = factors[..i].iter().map(|g| g.rows()).product();
            let post: usize = factors[i + 1..].iter().map(|g| g.rows()).product();
            ComplexMatrix::identity(pre)
                .kron(f)
                .kron(&ComplexMatrix::identity(post))
        })
        .collect();
    TupleSpec::new(entries)
}

/// Commuting tuple of normal matrices: one seeded unitary `U` conjugating
/// seeded diagonals, `(U D_1 U*, ..., U D_n U*)`. Diagonal entries are zero
/// with probability 1/4 (rank deficiency is where pseudoinverse laws earn
/// their keep) and otherwise drawn from the `[0.1, 10]` annulus.
pub fn commuting_normals(dim: usize, count: usize, seed: Seed) -> Result<TupleSpec> {
    assert!(dim >= 1 && count >= 1, "dimension and count must be positive");
    let mut rng = rng_for(seed);
    let mut basis = None;
    for _ in 0..UNITARY_RETRIES {
        if let Ok(cols) = orthonormal_columns(&mut rng, dim, dim) {
            basis = Some(columns_to_matrix(&cols, dim));
            break;
        }
    }
    let basis = basis.ok_or(Error::DegenerateSample)?;
    let adjoint = basis.adjoint();
    let entries = (0..count)
        .map(|_| {
            let diag: Vec<Complex64> = (0..dim)
                .map(|_| {
                    if rng.gen_range(0.0..1.0) < 0.25 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        annulus_sample(&mut rng)
                    }
                })
                .collect();
            &(&basis * &ComplexMatrix::diag(&diag)) * &adjoint
        })
        .collect();
    TupleSpec::new(entries)
}

/// The canonical non-commuting pair: matrix units `(E12, E21)` embedded in
/// the top-left block of a `dim x dim` space. Guaranteed to fail the
/// doubly-commuting test.
pub fn noncommuting_witness(dim: usize) -> Result<TupleSpec> {
    if dim < 2 {
        return Err(Error::InvalidTuple("witness needs dimension >= 2"));
    }
    TupleSpec::new(vec![
        ComplexMatrix::unit(dim, dim, 0, 1),
        ComplexMatrix::unit(dim, dim, 1, 0),
    ])
}
