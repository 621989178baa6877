//! JSON file formats for states, groups, charges and channels.
//!
//! Complex numbers are `[re, im]` pairs and matrices are row-major lists of
//! rows.

use std::fs;
use std::path::Path;

use frameness_core::channel::KrausChannel;
use frameness_core::group::{ChargeGrading, FiniteGroupRep};
use frameness_core::linalg::{c, CMatrix, CVector};
use frameness_core::operator::{DensityOperator, PureState};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

pub type Complex = [f64; 2];
pub type MatrixRows = Vec<Vec<Complex>>;

pub fn matrix_to_rows(m: &CMatrix) -> MatrixRows {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
        .collect()
}

pub fn rows_to_matrix(rows: &MatrixRows, dim: usize, what: &str) -> CliResult<CMatrix> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(CliError::Validation(format!("{what}: expected a {dim}x{dim} matrix")));
    }
    Ok(CMatrix::from_fn(dim, dim, |i, j| c(rows[i][j][0], rows[i][j][1])))
}

/// `{"dim", "matrix"}` for a density operator or `{"dim", "amplitudes"}` for a
/// pure state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StateFile {
    Density { dim: usize, matrix: MatrixRows },
    Pure { dim: usize, amplitudes: Vec<Complex> },
}

impl StateFile {
    pub fn from_density(rho: &DensityOperator) -> Self {
        StateFile::Density { dim: rho.dim(), matrix: matrix_to_rows(rho.matrix()) }
    }

    pub fn from_pure(psi: &PureState) -> Self {
        StateFile::Pure {
            dim: psi.dim(),
            amplitudes: psi.amplitudes().iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn to_density(&self) -> CliResult<DensityOperator> {
        match self {
            StateFile::Density { dim, matrix } => Ok(DensityOperator::new(rows_to_matrix(matrix, *dim, "state")?)?),
            StateFile::Pure { dim, amplitudes } => {
                if amplitudes.len() != *dim {
                    return Err(CliError::Validation(format!(
                        "state: {} amplitudes for dim {dim}",
                        amplitudes.len()
                    )));
                }
                let v = CVector::from_iterator(*dim, amplitudes.iter().map(|a| c(a[0], a[1])));
                Ok(PureState::new(v)?.projector())
            }
        }
    }
}

/// `{"order", "table", "unitaries"}`; `table[a][b]` is the index of `a·b`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiniteGroupFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub unitaries: Vec<MatrixRows>,
}

impl FiniteGroupFile {
    pub fn from_rep(rep: &FiniteGroupRep) -> Self {
        Self {
            order: rep.order(),
            table: rep.table().to_vec(),
            unitaries: rep.unitaries().iter().map(matrix_to_rows).collect(),
        }
    }

    /// Builds the representation and runs the full group-axiom validation.
    pub fn to_rep(&self) -> CliResult<FiniteGroupRep> {
        if self.table.len() != self.order || self.unitaries.len() != self.order {
            return Err(CliError::Validation(format!(
                "group: order {} but {} table rows and {} unitaries",
                self.order,
                self.table.len(),
                self.unitaries.len()
            )));
        }
        let dim = self.unitaries.first().map_or(0, |u| u.len());
        let unitaries = self
            .unitaries
            .iter()
            .enumerate()
            .map(|(k, u)| rows_to_matrix(u, dim, &format!("group unitary {k}")))
            .collect::<CliResult<Vec<_>>>()?;
        Ok(FiniteGroupRep::validated(self.table.clone(), unitaries)?)
    }
}

/// `{"dim", "charges"}`: the diagonal of the number operator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChargesFile {
    pub dim: usize,
    pub charges: Vec<i64>,
}

impl ChargesFile {
    pub fn to_grading(&self) -> CliResult<ChargeGrading> {
        if self.charges.len() != self.dim {
            return Err(CliError::Validation(format!(
                "charges: {} entries for dim {}",
                self.charges.len(),
                self.dim
            )));
        }
        Ok(ChargeGrading::from_signed(&self.charges)?)
    }
}

/// `{"dim", "kraus"}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChannelFile {
    pub dim: usize,
    pub kraus: Vec<MatrixRows>,
}

impl ChannelFile {
    pub fn from_channel(ch: &KrausChannel) -> Self {
        Self { dim: ch.dim(), kraus: ch.kraus().iter().map(matrix_to_rows).collect() }
    }

    pub fn to_channel(&self) -> CliResult<KrausChannel> {
        let ops = self
            .kraus
            .iter()
            .enumerate()
            .map(|(k, m)| rows_to_matrix(m, self.dim, &format!("Kraus operator {k}")))
            .collect::<CliResult<Vec<_>>>()?;
        Ok(KrausChannel::new(ops)?)
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))
}

pub fn load_state(path: &Path) -> CliResult<DensityOperator> {
    read_json::<StateFile>(path)?.to_density()
}

pub fn load_group(path: &Path) -> CliResult<FiniteGroupRep> {
    read_json::<FiniteGroupFile>(path)?.to_rep()
}

pub fn load_charges(path: &Path) -> CliResult<ChargeGrading> {
    read_json::<ChargesFile>(path)?.to_grading()
}

pub fn load_channel(path: &Path) -> CliResult<KrausChannel> {
    read_json::<ChannelFile>(path)?.to_channel()
}
