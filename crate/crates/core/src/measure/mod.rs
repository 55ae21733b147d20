//! Projective measurements, quantum–classical states and outcome statistics.

mod basis;
mod ops;
mod spec;

pub use basis::{is_mub_pair, max_overlap, Pauli, ProjectiveMeasurement, BASIS_TOL};
pub use ops::{
    bilateral_distribution, outcome_distribution, post_measurement_state, JointTable,
    MeasurementAssignment, DISTRIBUTION_TOL, NEGATIVE_PROB_TOL,
};
pub use spec::{parse_observables, parse_pairing, MeasurementSpec};
