//! Command implementations. Each returns the verdict exit code on success;
//! failures carry their own exit class (2 usage/parse, 3 numeric).

use std::fs;
use std::path::{Path, PathBuf};

use pinvlaw_core::gen::{
    commuting_normals, noncommuting_witness, random_fixed_rank, random_unitary, tensor_embed, Seed,
};
use pinvlaw_core::{
    classify_tuple, is_doubly_commuting_tuple, moore_penrose, reverse_order_law,
    transformed_power_law, verify_penrose, ComplexMatrix, PenroseReport, ToleranceConfig,
    TupleVerdict, VerdictReport,
};
use serde::Serialize;

use crate::format::{MatrixFile, TupleFile};
use crate::{CliError, GenKind};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;
pub const EXIT_DISCREPANCY: i32 = 4;

/// Machine-readable document written when `--report` is given.
#[derive(Serialize)]
struct ReportDoc<'a> {
    command: &'a str,
    exit_code: i32,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    penrose: Option<&'a PenroseReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<&'a VerdictReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    discrepancy: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    evidence: Option<&'a VerdictReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cross_check: Option<&'a VerdictReport>,
}

impl<'a> ReportDoc<'a> {
    fn new(command: &'a str, exit_code: i32, pass: bool) -> Self {
        Self {
            command,
            exit_code,
            pass,
            penrose: None,
            report: None,
            verdict: None,
            discrepancy: None,
            evidence: None,
            cross_check: None,
        }
    }

    fn write(&self, path: &Option<PathBuf>) -> Result<(), CliError> {
        if let Some(path) = path {
            let body = serde_json::to_string_pretty(self)
                .map_err(|e| CliError::usage(format!("cannot serialize report: {e}")))?;
            fs::write(path, body + "\n")
                .map_err(|e| CliError::usage(format!("cannot write report: {e}")))?;
        }
        Ok(())
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::usage(format!("cannot parse {}: {e}", path.display())))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let body = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::usage(format!("cannot serialize output: {e}")))?;
    fs::write(path, body + "\n")
        .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
    Ok(())
}

fn print_report(report: &VerdictReport, tol: &ToleranceConfig) {
    for check in &report.checks {
        match check.threshold {
            Some(threshold) => println!(
                "{}  {}  residual={:.3e}  threshold={:.3e}",
                if check.residual <= threshold {
                    "PASS"
                } else {
                    "FAIL"
                },
                check.label,
                check.residual,
                threshold
            ),
            None => println!(
                "INFO  {}  residual={:.3e}{}",
                check.label,
                check.residual,
                if check.residual > tol.eq_rel {
                    "  (warning: hypothesis violated)"
                } else {
                    ""
                }
            ),
        }
    }
    if let Some((i, j)) = report.witness {
        println!("witness: ({i}, {j})");
    }
}

pub fn cmd_pinv(
    input: &Path,
    output: &Path,
    tol: &ToleranceConfig,
    report_path: &Option<PathBuf>,
) -> Result<i32, CliError> {
    let file: MatrixFile = read_json(input)?;
    let a = file.to_matrix()?;
    let pinv = moore_penrose(&a, tol)?;
    let penrose = verify_penrose(&a, &pinv, tol)?;
    write_json(output, &MatrixFile::from_matrix(&pinv))?;
    println!(
        "penrose residuals: r1={:.3e} r2={:.3e} r3={:.3e} r4={:.3e}",
        penrose.r1, penrose.r2, penrose.r3, penrose.r4
    );
    println!("penrose pass: {}", penrose.pass);
    let mut doc = ReportDoc::new("pinv", EXIT_PASS, penrose.pass);
    doc.penrose = Some(&penrose);
    doc.write(report_path)?;
    Ok(EXIT_PASS)
}

pub fn cmd_check(
    input: &Path,
    tol: &ToleranceConfig,
    report_path: &Option<PathBuf>,
) -> Result<i32, CliError> {
    let file: TupleFile = read_json(input)?;
    let (tuple, _) = file.to_tuple()?;
    let report = is_doubly_commuting_tuple(&tuple, tol)?;
    print_report(&report, tol);
    println!(
        "verdict: {}",
        if report.pass {
            "doubly commuting"
        } else {
            "not doubly commuting"
        }
    );
    let code = if report.pass { EXIT_PASS } else { EXIT_FAIL };
    let mut doc = ReportDoc::new("check", code, report.pass);
    doc.report = Some(&report);
    doc.write(report_path)?;
    Ok(code)
}

pub fn cmd_verify_rol(
    input: &Path,
    tol: &ToleranceConfig,
    report_path: &Option<PathBuf>,
) -> Result<i32, CliError> {
    let file: TupleFile = read_json(input)?;
    let (tuple, _) = file.to_tuple()?;
    let report = reverse_order_law(&tuple, tol)?;
    print_report(&report, tol);
    println!(
        "reverse-order law: {}",
        if report.pass { "holds" } else { "violated" }
    );
    let code = if report.pass { EXIT_PASS } else { EXIT_FAIL };
    let mut doc = ReportDoc::new("verify-rol", code, report.pass);
    doc.report = Some(&report);
    doc.write(report_path)?;
    Ok(code)
}

pub fn cmd_classify(
    input: &Path,
    tol: &ToleranceConfig,
    report_path: &Option<PathBuf>,
) -> Result<i32, CliError> {
    let file: TupleFile = read_json(input)?;
    let (tuple, _) = file.to_tuple()?;
    let result = classify_tuple(&tuple, tol)?;
    println!("evidence (pseudoinverse equalities of swapped products):");
    print_report(&result.evidence, tol);
    println!("cross-check (direct commutation test):");
    print_report(&result.cross_check, tol);
    let verdict_name = match result.verdict {
        TupleVerdict::DoublyCommuting => "doubly commuting",
        TupleVerdict::NotDoublyCommuting => "not doubly commuting",
    };
    println!("verdict: {verdict_name}");
    if result.discrepancy {
        println!("DISCREPANCY: evidence and cross-check disagree");
    }
    let code = if result.discrepancy {
        EXIT_DISCREPANCY
    } else if result.verdict == TupleVerdict::DoublyCommuting {
        EXIT_PASS
    } else {
        EXIT_FAIL
    };
    let mut doc = ReportDoc::new("classify", code, result.evidence.pass);
    doc.verdict = Some(verdict_name);
    doc.discrepancy = Some(result.discrepancy);
    doc.evidence = Some(&result.evidence);
    doc.cross_check = Some(&result.cross_check);
    doc.write(report_path)?;
    Ok(code)
}

pub fn cmd_powers(
    input: &Path,
    tol: &ToleranceConfig,
    report_path: &Option<PathBuf>,
) -> Result<i32, CliError> {
    let file: TupleFile = read_json(input)?;
    let (tuple, powers) = file.to_tuple()?;
    let powers =
        powers.ok_or_else(|| CliError::usage("tuple file must carry exponents".to_string()))?;
    let report = transformed_power_law(&tuple, &powers, tol)?;
    print_report(&report, tol);
    println!(
        "product-of-powers law: {}",
        if report.pass { "holds" } else { "violated" }
    );
    let code = if report.pass { EXIT_PASS } else { EXIT_FAIL };
    let mut doc = ReportDoc::new("powers", code, report.pass);
    doc.report = Some(&report);
    doc.write(report_path)?;
    Ok(code)
}

pub fn cmd_gen(kind: &GenKind, out: &Path) -> Result<i32, CliError> {
    match kind {
        GenKind::Unitary { dim, seed } => {
            require(*dim >= 1, "dimension must be positive")?;
            let u = random_unitary(*dim, Seed(*seed))?;
            write_json(out, &MatrixFile::from_matrix(&u))?;
        }
        GenKind::FixedRank {
            rows,
            cols,
            rank,
            seed,
        } => {
            require(*rows >= 1 && *cols >= 1, "dimensions must be positive")?;
            let a = random_fixed_rank(*rows, *cols, *rank, Seed(*seed))?;
            write_json(out, &MatrixFile::from_matrix(&a))?;
        }
        GenKind::TensorDc { dims, seed } => {
            require(
                !dims.is_empty() && dims.len() <= 4,
                "between 1 and 4 factor dimensions required",
            )?;
            let factors = dims
                .iter()
                .enumerate()
                .map(|(i, &d)| {
                    require(d >= 1, "factor dimensions must be positive")?;
                    // Half the factors drop one rank so the embedded tuple
                    // exercises genuine pseudoinverse truncation.
                    let rank = if d > 1 && (seed + i as u64).is_multiple_of(2) {
                        d - 1
                    } else {
                        d
                    };
                    random_fixed_rank(d, d, rank, Seed(seed.wrapping_mul(131).wrapping_add(i as u64)))
                        .map_err(CliError::from)
                })
                .collect::<Result<Vec<ComplexMatrix>, _>>()?;
            let tuple = tensor_embed(&factors)?;
            write_json(out, &TupleFile::from_tuple(&tuple))?;
        }
        GenKind::CommutingNormals {
            dim,
            count,
            exponents,
            seed,
        } => {
            require(*dim >= 1 && *count >= 1, "dimension and count must be positive")?;
            if let Some(exps) = exponents {
                require(
                    exps.len() == *count,
                    "exponents length must match the entry count",
                )?;
            }
            let tuple = commuting_normals(*dim, *count, Seed(*seed))?;
            let mut file = TupleFile::from_tuple(&tuple);
            file.exponents = exponents.clone();
            write_json(out, &file)?;
        }
        GenKind::Witness { dim } => {
            let tuple = noncommuting_witness(*dim)?;
            write_json(out, &TupleFile::from_tuple(&tuple))?;
        }
    }
    println!("wrote {}", out.display());
    Ok(EXIT_PASS)
}

fn require(cond: bool, message: &str) -> Result<(), CliError> {
    if cond {
        Ok(())
    } else {
        Err(CliError::usage(message.to_string()))
    }
}
