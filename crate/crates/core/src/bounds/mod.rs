//! Uncertainty and key-rate bounds, and randomized certification of the
//! inequalities they assert.

mod certify;
mod reports;

pub use certify::{
    certify, certify_with, BasisMode, CertifyOptions, CertifyScenario, CertifySummary,
    VIOLATION_TOL,
};
pub use reports::{
    berta_bound, geur_report, key_rate_report, q_mu, theorem1_report, EurReport, EurScenario,
    GeurReport, KeyRateReport,
};

use crate::entropy::{holevo, measured_conditional_entropy, von_neumann};
use crate::error::Result;
use crate::measure::ProjectiveMeasurement;
use crate::state::DensityMatrix;

/// A report is `tight` when its slack is at most this.
pub const TIGHT_TOL: f64 = 1e-9;

/// S(A) plus the per-pair S(O_i|B_i) and I(O_i:B_i) shared by every bound.
struct PairEvaluation {
    s_a: f64,
    lhs_terms: Vec<f64>,
    holevo_terms: Vec<f64>,
}

impl PairEvaluation {
    fn compute(
        rho: &DensityMatrix,
        target: &str,
        pairs: &[(&ProjectiveMeasurement, &str)],
    ) -> Result<Self> {
        let s_a = von_neumann(&rho.reduce(&[target])?)?;
        let mut lhs_terms = Vec::with_capacity(pairs.len());
        let mut holevo_terms = Vec::with_capacity(pairs.len());
        for &(m, memory) in pairs {
            lhs_terms.push(measured_conditional_entropy(rho, m, target, memory)?);
            holevo_terms.push(holevo(rho, m, target, memory)?);
        }
        Ok(Self {
            s_a,
            lhs_terms,
            holevo_terms,
        })
    }
}
