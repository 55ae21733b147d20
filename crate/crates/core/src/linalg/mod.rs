//! Dense complex linear algebra over labeled tensor products.

mod eigen;
mod layout;
mod matrix;

pub use eigen::{hermitian_eigensystem, hermitian_eigenvalues, Eigensystem, HERMITIAN_TOL};
pub use layout::{apply_local_left, apply_local_right, partial_trace, SystemLayout};
pub use matrix::{kron, kron_vec, ComplexMatrix, ONE, ZERO};
