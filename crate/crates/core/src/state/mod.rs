//! Validated density matrices and the state families used by the bounds.

mod families;
mod io;
pub mod rng;

pub use families::{
    bell_phi_plus, ghz, ghz4_theta, random_mixed, random_pure, werner3, StateFamily,
};
pub use io::StateFile;

use crate::error::{Error, Result};
use crate::linalg::{self, hermitian_eigenvalues, ComplexMatrix, SystemLayout, HERMITIAN_TOL};

/// Tolerance on `|tr ρ − 1|`.
pub const TRACE_TOL: f64 = 1e-9;
/// Smallest admissible eigenvalue.
pub const POSITIVITY_TOL: f64 = 1e-9;

/// A Hermitian, positive semidefinite, unit-trace operator over a labeled layout.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    layout: SystemLayout,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates hermiticity, unit trace and positivity.
    pub fn new(layout: SystemLayout, matrix: ComplexMatrix) -> Result<Self> {
        let dim = layout.total_dim();
        if !matrix.is_square() || matrix.rows() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: matrix.rows(),
            });
        }
        let deviation = matrix.hermitian_deviation();
        if !deviation.is_finite() || deviation > HERMITIAN_TOL {
            return Err(Error::InvalidState(format!(
                "hermiticity violated: max |rho - rho^dagger| = {deviation:e} exceeds {HERMITIAN_TOL:e}"
            )));
        }
        let trace = matrix.trace().re;
        if (trace - 1.0).abs() > TRACE_TOL {
            return Err(Error::InvalidState(format!(
                "trace is {trace}, expected 1 within {TRACE_TOL:e}"
            )));
        }
        let min = hermitian_eigenvalues(&matrix, HERMITIAN_TOL)?
            .last()
            .copied()
            .unwrap_or(0.0);
        if min < -POSITIVITY_TOL {
            return Err(Error::InvalidState(format!(
                "positivity violated: smallest eigenvalue {min:e} is below -{POSITIVITY_TOL:e}"
            )));
        }
        Ok(Self { layout, matrix })
    }

    /// For operations known to map density matrices to density matrices.
    pub(crate) fn from_trusted(layout: SystemLayout, matrix: ComplexMatrix) -> Self {
        debug_assert_eq!(layout.total_dim(), matrix.rows());
        Self { layout, matrix }
    }

    /// Pure state from an (unnormalized, nonzero) state vector.
    pub fn from_state_vector(
        layout: SystemLayout,
        amplitudes: &[num_complex::Complex64],
    ) -> Result<Self> {
        if amplitudes.len() != layout.total_dim() {
            return Err(Error::DimensionMismatch {
                expected: layout.total_dim(),
                found: amplitudes.len(),
            });
        }
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::InvalidState("state vector has zero norm".into()));
        }
        let unit: Vec<_> = amplitudes.iter().map(|a| a / norm).collect();
        Ok(Self::from_trusted(layout, ComplexMatrix::outer(&unit)))
    }

    pub fn maximally_mixed(layout: SystemLayout) -> Self {
        let dim = layout.total_dim();
        Self::from_trusted(
            layout,
            ComplexMatrix::identity(dim).scale_real(1.0 / dim as f64),
        )
    }

    pub fn layout(&self) -> &SystemLayout {
        &self.layout
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn into_parts(self) -> (SystemLayout, ComplexMatrix) {
        (self.layout, self.matrix)
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    /// `tr(ρ²)`.
    pub fn purity(&self) -> f64 {
        self.matrix.trace_of_product(&self.matrix).re
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        hermitian_eigenvalues(&self.matrix, HERMITIAN_TOL)
    }

    /// Reduced state on `keep`, in layout order.
    pub fn reduce(&self, keep: &[&str]) -> Result<DensityMatrix> {
        let layout = self.layout.restrict(keep)?;
        if layout.len() == self.layout.len() {
            return Ok(self.clone());
        }
        let matrix = linalg::partial_trace(&self.matrix, &self.layout, keep)?;
        Ok(Self::from_trusted(layout, matrix))
    }

    /// Same operator with subsystems renamed; dims unchanged.
    pub fn relabel<S: Into<String>>(
        &self,
        labels: impl IntoIterator<Item = S>,
    ) -> Result<DensityMatrix> {
        let layout = SystemLayout::new(labels, self.layout.dims().to_vec())?;
        Ok(Self::from_trusted(layout, self.matrix.clone()))
    }

    /// `(I ⊗ U ⊗ I) ρ (I ⊗ U ⊗ I)^dagger` with `U` on `target`. `U` must be unitary.
    pub fn conjugate_local(&self, target: &str, unitary: &ComplexMatrix) -> Result<DensityMatrix> {
        let d = self.layout.dim_of(target)?;
        if unitary.rows() != d || !unitary.is_square() {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: unitary.rows(),
            });
        }
        let gram = &unitary.adjoint() * unitary;
        if gram.max_abs_diff(&ComplexMatrix::identity(d)) > 1e-9 {
            return Err(Error::InvalidBasis("local operator is not unitary".into()));
        }
        let left = linalg::apply_local_left(&self.matrix, &self.layout, target, unitary)?;
        let both = linalg::apply_local_right(&left, &self.layout, target, &unitary.adjoint())?;
        Ok(Self::from_trusted(self.layout.clone(), both))
    }

    /// Tensor product `self ⊗ other`; labels must not collide.
    pub fn tensor(&self, other: &DensityMatrix) -> Result<DensityMatrix> {
        let labels = self
            .layout
            .labels()
            .iter()
            .chain(other.layout.labels())
            .cloned();
        let dims = [self.layout.dims(), other.layout.dims()].concat();
        let layout = SystemLayout::new(labels, dims)?;
        Ok(Self::from_trusted(
            layout,
            linalg::kron(&self.matrix, &other.matrix),
        ))
    }
}

#[cfg(test)]
mod tests {
    use num_complex::Complex64;

    use super::*;

    fn ab() -> SystemLayout {
        SystemLayout::qubits(["A", "B"]).unwrap()
    }

    #[test]
    fn validation_names_the_violated_invariant() {
        let half = ComplexMatrix::identity(4).scale_real(0.2);
        let err = DensityMatrix::new(ab(), half).unwrap_err().to_string();
        assert!(err.contains("trace"), "{err}");

        let mut skew = ComplexMatrix::identity(4).scale_real(0.25);
        skew[(0, 1)] = Complex64::new(0.1, 0.0);
        let err = DensityMatrix::new(ab(), skew).unwrap_err().to_string();
        assert!(err.contains("hermiticity"), "{err}");

        let negative = ComplexMatrix::from_real_diagonal(&[1.5, -0.5, 0.0, 0.0]);
        let err = DensityMatrix::new(ab(), negative).unwrap_err().to_string();
        assert!(err.contains("positivity"), "{err}");

        assert!(matches!(
            DensityMatrix::new(ab(), ComplexMatrix::identity(2).scale_real(0.5)),
            Err(Error::DimensionMismatch {
                expected: 4,
                found: 2
            })
        ));
    }

    #[test]
    fn accepts_round_off_sized_defects() {
        let mut m = ComplexMatrix::from_real_diagonal(&[1.0 + 1e-11, -1e-11, 0.0, 0.0]);
        m[(2, 3)] = Complex64::new(0.0, 1e-12);
        assert!(DensityMatrix::new(ab(), m).is_ok());
    }

    #[test]
    fn reduce_and_tensor() {
        let a = DensityMatrix::new(
            SystemLayout::qubits(["A"]).unwrap(),
            ComplexMatrix::from_real_diagonal(&[0.25, 0.75]),
        )
        .unwrap();
        let b = DensityMatrix::maximally_mixed(SystemLayout::qubits(["B"]).unwrap());
        let ab = a.tensor(&b).unwrap();
        assert_eq!(ab.layout().labels(), ["A", "B"]);
        assert!(ab.reduce(&["A"]).unwrap().matrix().max_abs_diff(a.matrix()) < 1e-15);
        assert!(ab.reduce(&["A", "B"]).unwrap() == ab);
        assert!(a.tensor(&a).is_err());
        assert!((ab.purity() - (0.25f64.powi(2) + 0.75f64.powi(2)) / 2.0).abs() < 1e-15);
    }
}
