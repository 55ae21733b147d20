//! Entropic uncertainty bounds for multiple measurements on multipartite
//! qubit states.
//!
//! The crate is layered bottom-up:
//!
//! - [`linalg`]: dense complex matrices, Kronecker products, partial traces
//!   and a Jacobi Hermitian eigensolver over labeled big-endian layouts.
//! - [`state`]: validated [`DensityMatrix`] values, the Bell/GHZ/Werner
//!   families, seeded random states and the JSON state-file format.
//! - [`measure`]: projective measurements given by eigenbases, dephasing,
//!   outcome statistics, overlaps and the MUB predicate.
//! - [`entropy`]: von Neumann, Shannon, conditional and measured conditional
//!   entropies and Holevo quantities, all in bits.
//! - [`bounds`]: the bipartite, tripartite and N-observable uncertainty
//!   bounds, key-rate bounds, and randomized certification.
//!
//! ```
//! use eurbound::bounds::geur_report;
//! use eurbound::measure::{MeasurementAssignment, Pauli, ProjectiveMeasurement};
//! use eurbound::state::ghz4_theta;
//!
//! let pairs = [(Pauli::X, "B"), (Pauli::Y, "C"), (Pauli::Z, "D")]
//!     .into_iter()
//!     .map(|(p, l)| (ProjectiveMeasurement::pauli(p), l.to_string()))
//!     .collect();
//! let assignment = MeasurementAssignment::new("A", pairs)?;
//! let report = geur_report(&ghz4_theta(std::f64::consts::FRAC_PI_4)?, &assignment)?;
//! assert_eq!(report.b_mu, 1.5);
//! assert!((report.lhs_total - 2.0).abs() < 1e-9);
//! # Ok::<(), eurbound::Error>(())
//! ```

pub mod bounds;
pub mod entropy;
pub mod error;
pub mod linalg;
pub mod measure;
pub mod state;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, SystemLayout};
pub use measure::{MeasurementAssignment, Pauli, ProjectiveMeasurement};
pub use state::DensityMatrix;
