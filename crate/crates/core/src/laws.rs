//! Verifiers for the pseudoinverse laws of doubly commuting tuples.
//!
//! The centerpiece is the reverse-order law: for a doubly commuting tuple of
//! regular elements,
//!
//! ```text
//! (a_1 a_2 ... a_n)+  =  a_n+ ... a_1+  =  a_1+ ... a_n+,
//! ```
//!
//! together with its converse ([`classify_tuple`]): if for all `i != j` the
//! products satisfy `(a_i a_j)+ = (a_j a_i)+` and `(a_i* a_j)+ = (a_j a_i*)+`,
//! the tuple is doubly commuting. The power laws extend this to commuting
//! normal elements, whose plain commutativity upgrades to double
//! commutativity (Fuglede-Putnam) and whose powers satisfy
//! `(b^n)+ = (b+)^n`.
//!
//! Every verifier computes both sides of its identities numerically and
//! reports labeled residuals; nothing is assumed from the hypotheses.

use alloc::format;
use alloc::vec::Vec;

use crate::commute::{check_resolved_tuple, resolve_tuple, TupleSpec};
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, ToleranceConfig};
use crate::pinv::moore_penrose;
use crate::report::{ClassificationResult, ReportBuilder, TupleVerdict, VerdictReport};

/// Product identities compound roundoff across repeated multiplications and
/// pseudoinverses, so their thresholds are this factor above `eq_rel`
/// (1e-8 at the default configuration).
pub const PRODUCT_TOL_FACTOR: f64 = 10.0;

/// Exponents aligned with a tuple, one nonnegative power per entry.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PowerSpec {
    exponents: Vec<u32>,
}

impl PowerSpec {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self { exponents }
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }
}

fn product_threshold(tol: &ToleranceConfig) -> f64 {
    tol.eq_rel * PRODUCT_TOL_FACTOR
}

/// Frobenius-level roundoff floor for a chain product whose factor norms
/// multiply to `factor_scale`. A product that is exactly zero in the algebra
/// emerges from floating-point multiplication as cancellation junk at this
/// scale; its pseudoinverse would amplify the junk unboundedly, so product
/// verifiers treat anything at the floor as zero. Genuine nonzero products
/// in a doubly commuting tuple sit many orders above it (their norm is at
/// least the largest surviving spectral product).
fn product_noise_floor(dim: usize, factor_scale: f64) -> f64 {
    16.0 * dim as f64 * f64::EPSILON * factor_scale
}

fn flush_product(p: ComplexMatrix, floor: f64) -> ComplexMatrix {
    if p.frobenius_norm() <= floor {
        ComplexMatrix::zeros(p.rows(), p.cols())
    } else {
        p
    }
}

/// Pseudoinverse of a chain product, with the zero-flush applied first.
fn pinv_of_product(
    p: ComplexMatrix,
    factor_scale: f64,
    tol: &ToleranceConfig,
) -> Result<ComplexMatrix> {
    let floor = product_noise_floor(p.rows().max(p.cols()), factor_scale);
    if p.frobenius_norm() <= floor {
        Ok(ComplexMatrix::zeros(p.cols(), p.rows()))
    } else {
        moore_penrose(&p, tol)
    }
}

fn norm_product(entries: &[ComplexMatrix]) -> f64 {
    entries.iter().map(ComplexMatrix::frobenius_norm).product()
}

/// Relative distance between two equal-shaped matrices, floored per config.
fn eq_residual(x: &ComplexMatrix, y: &ComplexMatrix, tol: &ToleranceConfig) -> Result<f64> {
    Ok(tol.rel_residual(
        x.distance(y)?,
        x.frobenius_norm().max(y.frobenius_norm()),
    ))
}

/// Strict left-to-right product, for reproducible residuals.
fn product(entries: &[ComplexMatrix]) -> Result<ComplexMatrix> {
    let (first, rest) = entries
        .split_first()
        .ok_or(Error::InvalidTuple("product of an empty tuple"))?;
    let mut acc = first.clone();
    for e in rest {
        acc = acc.multiply(e)?;
    }
    Ok(acc)
}

fn commutation_residual(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    tol: &ToleranceConfig,
) -> Result<f64> {
    let scale = a.frobenius_norm() * b.frobenius_norm();
    Ok(tol.rel_residual(
        (&a.multiply(b)? - &b.multiply(a)?).frobenius_norm(),
        scale,
    ))
}

/// Verify the three-way reverse-order identity on the resolved tuple: the
/// pseudoinverse of the product against the reversed product of entry
/// pseudoinverses, and the reversed against the forward product. Intended
/// for doubly commuting inputs but callable on any; the verifier never
/// assumes the law.
pub fn reverse_order_law(t: &TupleSpec, tol: &ToleranceConfig) -> Result<VerdictReport> {
    let resolved = resolve_tuple(t, tol)?;
    let dim = resolved[0].rows();
    let pinv_prod = pinv_of_product(product(&resolved)?, norm_product(&resolved), tol)?;
    let daggers: Vec<ComplexMatrix> = resolved
        .iter()
        .map(|e| moore_penrose(e, tol))
        .collect::<Result<_>>()?;
    let dagger_floor = product_noise_floor(dim, norm_product(&daggers));
    let reversed_order: Vec<ComplexMatrix> = daggers.iter().rev().cloned().collect();
    let reversed = flush_product(product(&reversed_order)?, dagger_floor);
    let forward = flush_product(product(&daggers)?, dagger_floor);

    let thr = product_threshold(tol);
    let mut builder = ReportBuilder::new();
    builder.push(
        "(a1...an)† = an†...a1†".into(),
        eq_residual(&pinv_prod, &reversed, tol)?,
        thr,
    );
    builder.push(
        "an†...a1† = a1†...an†".into(),
        eq_residual(&reversed, &forward, tol)?,
        thr,
    );
    Ok(builder.finish())
}

/// Classify a tuple from the pseudoinverse equalities of its swapped
/// products: `(a_i a_j)+ = (a_j a_i)+` and `(a_i* a_j)+ = (a_j a_i*)+` over
/// all ordered pairs `i != j`. The verdict follows these equalities alone;
/// the direct doubly-commuting test runs as a cross-check, and any verdict
/// disagreement raises the discrepancy flag.
///
/// Regularity of the mixed products is part of the abstract hypothesis; in
/// the matrix model every matrix is regular, so only the equalities are
/// checked.
pub fn classify_tuple(t: &TupleSpec, tol: &ToleranceConfig) -> Result<ClassificationResult> {
    if t.len() < 2 {
        return Err(Error::InvalidTuple(
            "classification needs at least two entries",
        ));
    }
    let resolved = resolve_tuple(t, tol)?;
    let thr = product_threshold(tol);
    let mut builder = ReportBuilder::new();
    for i in 0..resolved.len() {
        for j in i + 1..resolved.len() {
            let (a, b) = (&resolved[i], &resolved[j]);
            let pair = Some((i + 1, j + 1));
            let scale = a.frobenius_norm() * b.frobenius_norm();
            // Plain products: the (i,j) and (j,i) instances coincide, so one
            // comparison covers both orders.
            let pinv_ab = pinv_of_product(a.multiply(b)?, scale, tol)?;
            let pinv_ba = pinv_of_product(b.multiply(a)?, scale, tol)?;
            builder.push_pair(
                format!("(a{i1} a{j1})† = (a{j1} a{i1})†", i1 = i + 1, j1 = j + 1),
                eq_residual(&pinv_ab, &pinv_ba, tol)?,
                thr,
                pair,
            );
            // Starred products, both orders.
            let a_star = a.adjoint();
            let b_star = b.adjoint();
            let left_ij = pinv_of_product(a_star.multiply(b)?, scale, tol)?;
            let right_ij = pinv_of_product(b.multiply(&a_star)?, scale, tol)?;
            builder.push_pair(
                format!("(a{i1}* a{j1})† = (a{j1} a{i1}*)†", i1 = i + 1, j1 = j + 1),
                eq_residual(&left_ij, &right_ij, tol)?,
                thr,
                pair,
            );
            let left_ji = pinv_of_product(b_star.multiply(a)?, scale, tol)?;
            let right_ji = pinv_of_product(a.multiply(&b_star)?, scale, tol)?;
            builder.push_pair(
                format!("(a{j1}* a{i1})† = (a{i1} a{j1}*)†", i1 = i + 1, j1 = j + 1),
                eq_residual(&left_ji, &right_ji, tol)?,
                thr,
                pair,
            );
        }
    }
    let evidence = builder.finish();
    let cross_check = check_resolved_tuple(&resolved, tol)?;
    let verdict = if evidence.pass {
        TupleVerdict::DoublyCommuting
    } else {
        TupleVerdict::NotDoublyCommuting
    };
    let discrepancy = evidence.pass != cross_check.pass;
    Ok(ClassificationResult {
        verdict,
        evidence,
        cross_check,
        discrepancy,
    })
}

/// The sixteen pseudoinverse product identities of a doubly commuting pair
/// `(a, b)`: four chains of the shape `(ab)+ = b+a+ = a+b+ = (ba)+` (one per
/// adjoint pattern) plus the adjoint-transport consequences
/// `(ba)+ = ((a*b*)+)*` and their starred twins. Meaningful when the pair
/// doubly commutes; on other inputs the failures are the point.
pub fn product_identity_family(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    tol: &ToleranceConfig,
) -> Result<VerdictReport> {
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
    let a_star = a.adjoint();
    let b_star = b.adjoint();
    let a_dag = moore_penrose(a, tol)?;
    let b_dag = moore_penrose(b, tol)?;
    let a_dag_star = a_dag.adjoint();
    let b_dag_star = b_dag.adjoint();

    let scale = a.frobenius_norm() * b.frobenius_norm();
    let pinv = |x: &ComplexMatrix, y: &ComplexMatrix| -> Result<ComplexMatrix> {
        pinv_of_product(x.multiply(y)?, scale, tol)
    };
    let pinv_ab = pinv(a, b)?;
    let pinv_ba = pinv(b, a)?;
    let pinv_asb = pinv(&a_star, b)?;
    let pinv_bas = pinv(b, &a_star)?;
    let pinv_abs = pinv(a, &b_star)?;
    let pinv_bsa = pinv(&b_star, a)?;
    let pinv_asbs = pinv(&a_star, &b_star)?;
    let pinv_bsas = pinv(&b_star, &a_star)?;

    let dag_floor = product_noise_floor(
        a.rows(),
        a_dag.frobenius_norm() * b_dag.frobenius_norm(),
    );
    let dag_prod = |x: &ComplexMatrix, y: &ComplexMatrix| -> Result<ComplexMatrix> {
        Ok(flush_product(x.multiply(y)?, dag_floor))
    };

    let thr = product_threshold(tol);
    let mut builder = ReportBuilder::new();
    let mut chain = |labels: [&str; 3], terms: [&ComplexMatrix; 4]| -> Result<()> {
        for (k, label) in labels.iter().enumerate() {
            builder.push(
                (*label).into(),
                eq_residual(terms[k], terms[k + 1], tol)?,
                thr,
            );
        }
        Ok(())
    };

    chain(
        ["(ab)† = b†a†", "b†a† = a†b†", "a†b† = (ba)†"],
        [
            &pinv_ab,
            &dag_prod(&b_dag, &a_dag)?,
            &dag_prod(&a_dag, &b_dag)?,
            &pinv_ba,
        ],
    )?;
    chain(
        ["(a*b)† = b†(a†)*", "b†(a†)* = (a†)*b†", "(a†)*b† = (ba*)†"],
        [
            &pinv_asb,
            &dag_prod(&b_dag, &a_dag_star)?,
            &dag_prod(&a_dag_star, &b_dag)?,
            &pinv_bas,
        ],
    )?;
    chain(
        ["(ab*)† = (b†)*a†", "(b†)*a† = a†(b†)*", "a†(b†)* = (b*a)†"],
        [
            &pinv_abs,
            &dag_prod(&b_dag_star, &a_dag)?,
            &dag_prod(&a_dag, &b_dag_star)?,
            &pinv_bsa,
        ],
    )?;
    chain(
        [
            "(a*b*)† = (b†)*(a†)*",
            "(b†)*(a†)* = (a†)*(b†)*",
            "(a†)*(b†)* = (b*a*)†",
        ],
        [
            &pinv_asbs,
            &dag_prod(&b_dag_star, &a_dag_star)?,
            &dag_prod(&a_dag_star, &b_dag_star)?,
            &pinv_bsas,
        ],
    )?;

    // Adjoint transport: the plain and starred chains are each other's
    // adjoints, closing the equality web.
    builder.push(
        "(ba)† = ((a*b*)†)*".into(),
        eq_residual(&pinv_ba, &pinv_asbs.adjoint(), tol)?,
        thr,
    );
    builder.push(
        "((a*b*)†)* = ((b*a*)†)*".into(),
        eq_residual(&pinv_asbs.adjoint(), &pinv_bsas.adjoint(), tol)?,
        thr,
    );
    builder.push(
        "(ba*)† = ((ab*)†)*".into(),
        eq_residual(&pinv_bas, &pinv_abs.adjoint(), tol)?,
        thr,
    );
    builder.push(
        "((ab*)†)* = ((b*a)†)*".into(),
        eq_residual(&pinv_abs.adjoint(), &pinv_bsa.adjoint(), tol)?,
        thr,
    );

    Ok(builder.finish())
}

/// Check `(b^n)+ = (b+)^n` for a positive exponent. The identity is
/// guaranteed for regular normal `b`; normality of the input is recorded as
/// an informational check so a failure names the missing hypothesis.
pub fn normal_power_law(
    b: &ComplexMatrix,
    n: u32,
    tol: &ToleranceConfig,
) -> Result<VerdictReport> {
    assert!(n >= 1, "exponent must be positive");
    if !b.is_square() {
        return Err(Error::NotSquare {
            rows: b.rows(),
            cols: b.cols(),
        });
    }
    let mut builder = ReportBuilder::new();
    builder.push_info("b is normal".into(), normality_residual(b, tol)?);
    let lhs = moore_penrose(&b.pow(n)?, tol)?;
    let rhs = moore_penrose(b, tol)?.pow(n)?;
    builder.push(
        format!("(b^{n})† = (b†)^{n}"),
        eq_residual(&lhs, &rhs, tol)?,
        product_threshold(tol),
    );
    Ok(builder.finish())
}

fn normality_residual(a: &ComplexMatrix, tol: &ToleranceConfig) -> Result<f64> {
    let adj = a.adjoint();
    let scale = a.frobenius_norm() * a.frobenius_norm();
    Ok(tol.rel_residual(
        (&a.multiply(&adj)? - &adj.multiply(a)?).frobenius_norm(),
        scale,
    ))
}

/// Product-of-powers pseudoinverse law for a commuting tuple of regular
/// normal elements: `(prod a_i^{m_i})+ = prod (a_i+)^{m_i}`.
///
/// Three gated stages, each fully reported: (1) the plain-commuting normal
/// tuple star-commutes (the Fuglede-Putnam upgrade), (2) the power tuple is
/// doubly commuting, (3) the displayed identity holds. Normality and plain
/// commutativity of the inputs are recorded as informational preconditions;
/// their failure is not fatal, the stages still run.
pub fn commuting_normals_power_law(
    t: &TupleSpec,
    powers: &PowerSpec,
    tol: &ToleranceConfig,
) -> Result<VerdictReport> {
    let resolved = resolve_tuple(t, tol)?;
    power_law_on_resolved(&resolved, powers, tol)
}

/// The power law after arbitrary tuple transforms: the permutation and
/// adjoint/dagger marks are resolved first, then slot `j` is raised to
/// `exponents[j]`. Coincides with [`commuting_normals_power_law`] on plain
/// tuples since both resolve before checking.
pub fn transformed_power_law(
    t: &TupleSpec,
    powers: &PowerSpec,
    tol: &ToleranceConfig,
) -> Result<VerdictReport> {
    commuting_normals_power_law(t, powers, tol)
}

fn power_law_on_resolved(
    resolved: &[ComplexMatrix],
    powers: &PowerSpec,
    tol: &ToleranceConfig,
) -> Result<VerdictReport> {
    if powers.len() != resolved.len() {
        return Err(Error::InvalidTuple("exponents length mismatch"));
    }
    let n = resolved.len();
    let mut builder = ReportBuilder::new();

    for (i, e) in resolved.iter().enumerate() {
        builder.push_info(
            format!("precondition: a{} normal", i + 1),
            normality_residual(e, tol)?,
        );
    }
    for i in 0..n {
        for j in i + 1..n {
            builder.push_info(
                format!("precondition: [a{}, a{}]", i + 1, j + 1),
                commutation_residual(&resolved[i], &resolved[j], tol)?,
            );
        }
    }

    // Stage 1: commuting normals star-commute.
    for i in 0..n {
        for j in i + 1..n {
            let pair = Some((i + 1, j + 1));
            builder.push_pair(
                format!("star upgrade: [a{}, a{}*]", i + 1, j + 1),
                commutation_residual(&resolved[i], &resolved[j].adjoint(), tol)?,
                tol.eq_rel,
                pair,
            );
        }
    }

    // Stage 2: the power tuple is doubly commuting. Exponent 0 resolves to
    // the identity, which commutes with everything.
    let powered: Vec<ComplexMatrix> = resolved
        .iter()
        .zip(powers.exponents())
        .map(|(e, &m)| e.pow(m))
        .collect::<Result<_>>()?;
    for i in 0..n {
        for j in i + 1..n {
            let pair = Some((i + 1, j + 1));
            let (mi, mj) = (powers.exponents()[i], powers.exponents()[j]);
            builder.push_pair(
                format!("powers: [a{}^{mi}, a{}^{mj}]", i + 1, j + 1),
                commutation_residual(&powered[i], &powered[j], tol)?,
                tol.eq_rel,
                pair,
            );
            builder.push_pair(
                format!("powers: [a{}^{mi}, (a{}^{mj})*]", i + 1, j + 1),
                commutation_residual(&powered[i], &powered[j].adjoint(), tol)?,
                tol.eq_rel,
                pair,
            );
        }
    }

    // Stage 3: the product-of-powers identity.
    let lhs = pinv_of_product(product(&powered)?, norm_product(&powered), tol)?;
    let dagger_powers: Vec<ComplexMatrix> = resolved
        .iter()
        .zip(powers.exponents())
        .map(|(e, &m)| moore_penrose(e, tol)?.pow(m))
        .collect::<Result<_>>()?;
    let rhs = flush_product(
        product(&dagger_powers)?,
        product_noise_floor(resolved[0].rows(), norm_product(&dagger_powers)),
    );
    builder.push(
        "(∏ ai^mi)† = ∏ (ai†)^mi".into(),
        eq_residual(&lhs, &rhs, tol)?,
        product_threshold(tol),
    );

    Ok(builder.finish())
}
