//! Dense row-major complex matrices and tolerance-aware predicates.
//!
//! A [`ComplexMatrix`] models an element of a C*-algebra (square) or a
//! Hilbert-space operator (rectangular). The involution is the conjugate
//! transpose. All equality throughout the crate is the Frobenius metric of
//! [`ComplexMatrix::approx_eq`] with the mixed absolute/relative threshold
//! carried by [`ToleranceConfig`].

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
#[allow(unused_imports)] // f64 math comes from the trait in no_std builds
use num_traits::Float;

use crate::error::{Error, Result};

/// Rank cutoff rule and equality tolerances governing every approximate
/// predicate in the crate.
///
/// Defaults are tuned for double-precision entries at desk-scale dimensions
/// (<= 64): two orders of magnitude above unit-roundoff accumulation.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ToleranceConfig {
    /// Relative singular-value cutoff deciding numerical rank.
    pub rank_rel: f64,
    /// Relative equality tolerance.
    pub eq_rel: f64,
    /// Absolute equality floor, also the denominator floor for relative
    /// residuals.
    pub eq_abs: f64,
}

impl ToleranceConfig {
    /// Validating constructor: all three strictly positive, `rank_rel < 1`.
    pub fn new(rank_rel: f64, eq_rel: f64, eq_abs: f64) -> Result<Self> {
        if !(rank_rel > 0.0 && eq_rel > 0.0 && eq_abs > 0.0) {
            return Err(Error::InvalidConstruction("tolerances must be positive"));
        }
        if rank_rel >= 1.0 {
            return Err(Error::InvalidConstruction("rank_rel must be below 1"));
        }
        Ok(Self {
            rank_rel,
            eq_rel,
            eq_abs,
        })
    }

    /// Equality threshold for values of the given norm scale:
    /// `eq_abs + eq_rel * scale`.
    pub fn eq_threshold(&self, scale: f64) -> f64 {
        self.eq_abs + self.eq_rel * scale
    }

    /// Relative residual with an absolute floor: `num / den` when the
    /// denominator is meaningful, the raw numerator otherwise. Keeps zero
    /// matrices out of 0/0 territory.
    pub fn rel_residual(&self, num: f64, den: f64) -> f64 {
        if den > self.eq_abs {
            num / den
        } else {
            num
        }
    }
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            rank_rel: 1e-10,
            eq_rel: 1e-9,
            eq_abs: 1e-12,
        }
    }
}

/// Dense row-major complex matrix. Immutable after construction; all
/// operations return fresh values.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Build from row-major data. Rejects empty shapes, length mismatches,
    /// and non-finite entries.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidConstruction("dimensions must be positive"));
        }
        if data.len() != rows * cols {
            return Err(Error::InvalidConstruction("data length != rows * cols"));
        }
        if !data.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::InvalidConstruction("entries must be finite"));
        }
        Ok(Self { rows, cols, data })
    }

    /// Build entrywise from a closure. Panics on zero dimensions or a
    /// non-finite produced entry.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        assert!(rows > 0 && cols > 0, "dimensions must be positive");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self::new(rows, cols, data).expect("from_fn produced a non-finite entry")
    }

    /// Convenience constructor from real entries.
    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidConstruction("data length != rows * cols"));
        }
        Self::new(
            rows,
            cols,
            entries.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| Complex64::new(0.0, 0.0))
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, dim, |i, j| {
            Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0)
        })
    }

    /// Square diagonal matrix from the given entries.
    pub fn diag(entries: &[Complex64]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                entries[i]
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    /// Matrix unit `E_ij`: a single 1 in position `(i, j)`.
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Self {
        assert!(i < rows && j < cols, "unit position out of range");
        Self::from_fn(rows, cols, |r, c| {
            Complex64::new(if (r, c) == (i, j) { 1.0 } else { 0.0 }, 0.0)
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    /// Row-major entry slice.
    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    /// Conjugate transpose, the involution of the algebra. Exact: the real
    /// parts are copied bitwise and the imaginary parts negated, so applying
    /// it twice reproduces the input bit for bit.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    /// Checked matrix product.
    pub fn multiply(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let (m, k, n) = (self.rows, self.cols, rhs.cols);
        let mut out = vec![Complex64::new(0.0, 0.0); m * n];
        for i in 0..m {
            for p in 0..k {
                let a = self.data[i * k + p];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                let row = &rhs.data[p * n..(p + 1) * n];
                let dst = &mut out[i * n..(i + 1) * n];
                for j in 0..n {
                    dst[j] += a * row[j];
                }
            }
        }
        Ok(Self {
            rows: m,
            cols: n,
            data: out,
        })
    }

    /// Entrywise scaling.
    pub fn scale(&self, z: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&w| w * z).collect(),
        }
    }

    /// Square matrix raised to a nonnegative power; exponent 0 yields the
    /// identity (the algebra is unital). Left-to-right multiplication for
    /// reproducible residuals.
    pub fn pow(&self, exponent: u32) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = Self::identity(self.rows);
        for _ in 0..exponent {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// Kronecker product `self (x) rhs`.
    pub fn kron(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            self.get(i / rhs.rows, j / rhs.cols) * rhs.get(i % rhs.rows, j % rhs.cols)
        })
    }

    /// Frobenius norm `sqrt(sum |a_ij|^2)`.
    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Frobenius distance to another matrix of the same shape, without
    /// materializing the difference.
    pub fn distance(&self, other: &Self) -> Result<f64> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                left: self.shape(),
                right: other.shape(),
            });
        }
        let sum: f64 = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum();
        Ok(sum.sqrt())
    }

    /// Approximate equality in the Frobenius metric:
    /// `||A - B||_F <= eq_abs + eq_rel * max(||A||_F, ||B||_F)`.
    ///
    /// Symmetric and reflexive; not transitive (two chains of near-equalities
    /// can drift past the threshold), so never use it to deduplicate.
    pub fn approx_eq(&self, other: &Self, tol: &ToleranceConfig) -> Result<bool> {
        let dist = self.distance(other)?;
        let scale = self.frobenius_norm().max(other.frobenius_norm());
        Ok(dist <= tol.eq_threshold(scale))
    }

    /// `A = A*` within tolerance. Requires square.
    pub fn is_hermitian(&self, tol: &ToleranceConfig) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        self.approx_eq(&self.adjoint(), tol)
    }

    /// `A A* = A* A` within tolerance, i.e. the element is normal. Requires
    /// square. Every Hermitian and every unitary matrix is normal.
    pub fn is_normal(&self, tol: &ToleranceConfig) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let adj = self.adjoint();
        let left = self.multiply(&adj)?;
        let right = adj.multiply(self)?;
        left.approx_eq(&right, tol)
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in addition");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in subtraction");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn neg(self) -> ComplexMatrix {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

/// Unchecked product for internal call sites with validated shapes.
impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.multiply(rhs).expect("shape mismatch in product")
    }
}
