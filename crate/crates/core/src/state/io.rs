use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::DensityMatrix;
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, SystemLayout};

/// On-disk state description:
/// `{"labels": [...], "dims": [...], "matrix_re": [[...]], "matrix_im": [[...]]}`.
///
/// `matrix_im` may be omitted for real matrices. Unknown top-level keys are ignored.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    pub labels: Vec<String>,
    pub dims: Vec<usize>,
    pub matrix_re: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix_im: Option<Vec<Vec<f64>>>,
}

impl StateFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("state file: {e}")))
    }

    pub fn from_density_matrix(rho: &DensityMatrix) -> Self {
        let m = rho.matrix();
        let n = m.rows();
        let part =
            |f: fn(&Complex64) -> f64| (0..n).map(|r| m.row(r).iter().map(f).collect()).collect();
        StateFile {
            labels: rho.layout().labels().to_vec(),
            dims: rho.layout().dims().to_vec(),
            matrix_re: part(|z| z.re),
            matrix_im: Some(part(|z| z.im)),
        }
    }

    pub fn to_density_matrix(&self) -> Result<DensityMatrix> {
        let layout = SystemLayout::new(self.labels.iter().cloned(), self.dims.clone())?;
        let dim = layout.total_dim();
        check_shape("matrix_re", &self.matrix_re, dim)?;
        if let Some(im) = &self.matrix_im {
            check_shape("matrix_im", im, dim)?;
        }
        let mut data = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                let im = self.matrix_im.as_ref().map_or(0.0, |m| m[r][c]);
                data.push(Complex64::new(self.matrix_re[r][c], im));
            }
        }
        let matrix = ComplexMatrix::from_row_major(dim, dim, data)?;
        DensityMatrix::new(layout, matrix)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("state file serialization is infallible")
    }
}

fn check_shape(name: &str, rows: &[Vec<f64>], dim: usize) -> Result<()> {
    if rows.len() != dim {
        return Err(Error::Parse(format!(
            "{name} has {} rows, layout dimension is {dim}",
            rows.len()
        )));
    }
    if let Some((i, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != dim) {
        return Err(Error::Parse(format!(
            "{name} row {i} has {} entries, layout dimension is {dim}",
            row.len()
        )));
    }
    Ok(())
}

impl DensityMatrix {
    /// Parses and fully validates a JSON state file.
    pub fn from_json_str(text: &str) -> Result<Self> {
        StateFile::parse(text)?.to_density_matrix()
    }

    pub fn to_json(&self) -> String {
        StateFile::from_density_matrix(self).to_json()
    }
}
