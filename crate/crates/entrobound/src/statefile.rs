//! State-file ingestion: spectra or Hermitian density matrices as JSON.
//!
//! A state file is a single self-describing object carrying exactly one of
//!
//! ```json
//! { "spectrum": [0.5, 0.3, 0.2] }
//! { "matrix": { "re": [[...], ...], "im": [[...], ...] } }
//! ```
//!
//! Matrix entries are row-major; `im` may be omitted for real symmetric
//! matrices. A matrix must be Hermitian within [`HERM_TOL`], positive
//! semidefinite within [`CLAMP_TOL`] after eigendecomposition, and have unit
//! trace within [`NORM_TOL`].

use std::fs;
use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use crate::eigen::{hermitian_eigenvalues, EigenError};
use crate::spectrum::{Spectrum, SpectrumError};
use crate::{CLAMP_TOL, HERM_TOL, NORM_TOL};

#[derive(Debug, Error)]
pub enum StateFileError {
    #[error("cannot read state file: {0}")]
    Io(#[from] std::io::Error),

    #[error("cannot parse state file: {0}")]
    Parse(#[from] serde_json::Error),

    #[error("state file must contain exactly one of 'spectrum' or 'matrix'")]
    AmbiguousContents,

    #[error("matrix is not square ({0} rows)")]
    NotSquare(usize),

    #[error("matrix is not Hermitian: |A - A^dagger| = {0:e} at ({1}, {2})")]
    NotHermitian(f64, usize, usize),

    #[error("matrix is not positive semidefinite: eigenvalue {0}")]
    NotPsd(f64),

    #[error("matrix trace {0} is not 1 within {NORM_TOL:e}")]
    NotNormalized(f64),

    #[error(transparent)]
    Eigen(#[from] EigenError),

    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    #[serde(default)]
    pub spectrum: Option<Vec<f64>>,
    #[serde(default)]
    pub matrix: Option<MatrixData>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixData {
    pub re: Vec<Vec<f64>>,
    #[serde(default)]
    pub im: Option<Vec<Vec<f64>>>,
}

/// Parse a state file from its JSON text and reduce it to a spectrum.
pub fn ingest_str(text: &str) -> Result<Spectrum, StateFileError> {
    let file: StateFile = serde_json::from_str(text)?;
    match (file.spectrum, file.matrix) {
        (Some(values), None) => Ok(Spectrum::new(&values)?),
        (None, Some(matrix)) => spectrum_from_matrix(&matrix),
        _ => Err(StateFileError::AmbiguousContents),
    }
}

/// Read and ingest a state file from disk.
pub fn ingest(path: impl AsRef<Path>) -> Result<Spectrum, StateFileError> {
    ingest_str(&fs::read_to_string(path)?)
}

fn spectrum_from_matrix(matrix: &MatrixData) -> Result<Spectrum, StateFileError> {
    let n = matrix.re.len();
    if n == 0 || matrix.re.iter().any(|row| row.len() != n) {
        return Err(StateFileError::NotSquare(n));
    }
    let zeros = vec![vec![0.0; n]; n];
    let im = match &matrix.im {
        Some(im) => {
            if im.len() != n || im.iter().any(|row| row.len() != n) {
                return Err(StateFileError::NotSquare(im.len()));
            }
            im
        }
        None => &zeros,
    };

    // Hermiticity: re symmetric, im antisymmetric (zero diagonal).
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        for j in 0..n {
            let re_gap = (matrix.re[i][j] - matrix.re[j][i]).abs();
            if re_gap > HERM_TOL {
                return Err(StateFileError::NotHermitian(re_gap, i, j));
            }
            let im_gap = (im[i][j] + im[j][i]).abs();
            if im_gap > HERM_TOL {
                return Err(StateFileError::NotHermitian(im_gap, i, j));
            }
        }
    }

    let trace: f64 = (0..n).map(|i| matrix.re[i][i]).sum();
    if (trace - 1.0).abs() > NORM_TOL {
        return Err(StateFileError::NotNormalized(trace));
    }

    let mut eigenvalues = hermitian_eigenvalues(&matrix.re, im)?;
    for v in &mut eigenvalues {
        if *v < -CLAMP_TOL {
            return Err(StateFileError::NotPsd(*v));
        }
        *v = v.max(0.0);
    }
    // The eigensolver conserves the trace to rounding; renormalize the dust
    // so the spectrum constructor's invariant is exact.
    let sum: f64 = eigenvalues.iter().sum();
    if sum > 0.0 {
        for v in &mut eigenvalues {
            *v /= sum;
        }
    }
    Ok(Spectrum::new(&eigenvalues)?)
}
