//! File formats: matrices and tuples as JSON documents.
//!
//! A matrix file carries `rows`, `cols`, and row-major `data` as `[re, im]`
//! pairs. A tuple file carries `entries` (matrix objects) plus optional
//! `marks` (strings from plain/adjoint/dagger/dagger_adjoint), a 1-based
//! `perm`, and nonnegative `exponents`. Numbers round-trip losslessly:
//! serialization emits the shortest decimal that parses back to the same
//! double (at most 17 significant digits).

use pinvlaw_core::{Complex64, ComplexMatrix, Mark, PowerSpec, TupleSpec};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<[f64; 2]>,
}

impl MatrixFile {
    pub fn from_matrix(m: &ComplexMatrix) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            data: m.data().iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix, CliError> {
        let data = self
            .data
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect();
        ComplexMatrix::new(self.rows, self.cols, data).map_err(CliError::from)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TupleFile {
    pub entries: Vec<MatrixFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub marks: Option<Vec<String>>,
    /// 1-based permutation of the entries.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perm: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponents: Option<Vec<u32>>,
}

fn mark_from_str(s: &str) -> Result<Mark, CliError> {
    match s {
        "plain" => Ok(Mark::Plain),
        "adjoint" => Ok(Mark::Adjoint),
        "dagger" => Ok(Mark::Dagger),
        "dagger_adjoint" => Ok(Mark::DaggerAdjoint),
        other => Err(CliError::usage(format!(
            "unknown mark {other:?}; expected plain, adjoint, dagger, or dagger_adjoint"
        ))),
    }
}

impl TupleFile {
    pub fn from_tuple(t: &TupleSpec) -> Self {
        let marks: Vec<String> = t
            .marks()
            .iter()
            .map(|m| {
                match m {
                    Mark::Plain => "plain",
                    Mark::Adjoint => "adjoint",
                    Mark::Dagger => "dagger",
                    Mark::DaggerAdjoint => "dagger_adjoint",
                }
                .to_string()
            })
            .collect();
        let identity_perm = t.perm().iter().enumerate().all(|(i, &p)| i == p);
        let all_plain = t.marks().iter().all(|&m| m == Mark::Plain);
        Self {
            entries: t.entries().iter().map(MatrixFile::from_matrix).collect(),
            marks: if all_plain { None } else { Some(marks) },
            perm: if identity_perm {
                None
            } else {
                Some(t.perm().iter().map(|&p| p + 1).collect())
            },
            exponents: None,
        }
    }

    pub fn to_tuple(&self) -> Result<(TupleSpec, Option<PowerSpec>), CliError> {
        let entries = self
            .entries
            .iter()
            .map(MatrixFile::to_matrix)
            .collect::<Result<Vec<_>, _>>()?;
        let mut tuple = TupleSpec::new(entries)?;
        if let Some(marks) = &self.marks {
            let marks = marks
                .iter()
                .map(|s| mark_from_str(s))
                .collect::<Result<Vec<_>, _>>()?;
            tuple = tuple.with_marks(marks)?;
        }
        if let Some(perm) = &self.perm {
            if perm.contains(&0) {
                return Err(CliError::usage("perm indices are 1-based".to_string()));
            }
            tuple = tuple.with_perm(perm.iter().map(|&p| p - 1).collect())?;
        }
        let powers = self.exponents.clone().map(PowerSpec::new);
        Ok((tuple, powers))
    }
}
