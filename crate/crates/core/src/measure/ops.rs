use serde::Serialize;

use super::basis::ProjectiveMeasurement;
use crate::error::{Error, Result};
use crate::linalg::{apply_local_left, apply_local_right, kron_vec, ComplexMatrix};
use crate::state::DensityMatrix;

/// Probabilities in `[-NEGATIVE_PROB_TOL, 0)` are round-off and clamp to 0.
pub const NEGATIVE_PROB_TOL: f64 = 1e-9;
/// Allowed deviation of a distribution's total from 1.
pub const DISTRIBUTION_TOL: f64 = 1e-9;

fn check_target(rho: &DensityMatrix, m: &ProjectiveMeasurement, target: &str) -> Result<()> {
    let d = rho.layout().dim_of(target)?;
    if d != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: m.dim(),
        });
    }
    Ok(())
}

pub(crate) fn clamp_probability(p: f64) -> Result<f64> {
    if p < -NEGATIVE_PROB_TOL || !p.is_finite() {
        return Err(Error::NotADistribution(format!(
            "probability {p:e} is negative beyond round-off"
        )));
    }
    Ok(p.max(0.0))
}

/// Σ_i (|φ_i⟩⟨φ_i| ⊗ I) ρ (|φ_i⟩⟨φ_i| ⊗ I), the projector acting on `target`.
pub fn post_measurement_state(
    rho: &DensityMatrix,
    m: &ProjectiveMeasurement,
    target: &str,
) -> Result<DensityMatrix> {
    check_target(rho, m, target)?;
    let layout = rho.layout();
    let mut out = ComplexMatrix::zeros(rho.dim(), rho.dim());
    for i in 0..m.dim() {
        let p = m.projector(i);
        let right = apply_local_right(rho.matrix(), layout, target, &p)?;
        out = &out + &apply_local_left(&right, layout, target, &p)?;
    }
    out.symmetrize();
    Ok(DensityMatrix::from_trusted(layout.clone(), out))
}

/// p_i = tr[(|φ_i⟩⟨φ_i| ⊗ I) ρ].
pub fn outcome_distribution(
    rho: &DensityMatrix,
    m: &ProjectiveMeasurement,
    target: &str,
) -> Result<Vec<f64>> {
    check_target(rho, m, target)?;
    let local = rho.reduce(&[target])?;
    let probs = m
        .basis()
        .iter()
        .map(|v| clamp_probability(local.matrix().expectation(v).re))
        .collect::<Result<Vec<_>>>()?;
    check_total(probs.iter().sum())?;
    Ok(probs)
}

fn check_total(total: f64) -> Result<()> {
    if (total - 1.0).abs() > DISTRIBUTION_TOL {
        return Err(Error::NotADistribution(format!(
            "probabilities sum to {total}"
        )));
    }
    Ok(())
}

/// Joint outcome probabilities of two local measurements; rows index the
/// outcomes of the first measurement, columns those of the second.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JointTable {
    rows: Vec<Vec<f64>>,
}

impl JointTable {
    /// Validates nonnegativity (clamping round-off) and unit total.
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let width = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || width == 0 || rows.iter().any(|r| r.len() != width) {
            return Err(Error::NotADistribution(
                "joint table must be a nonempty rectangle".into(),
            ));
        }
        let rows = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(clamp_probability)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        check_total(rows.iter().flatten().sum())?;
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.rows[i][j]
    }

    pub fn row_marginal(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn column_marginal(&self) -> Vec<f64> {
        (0..self.rows[0].len())
            .map(|j| self.rows.iter().map(|r| r[j]).sum())
            .collect()
    }

    pub fn flattened(&self) -> Vec<f64> {
        self.rows.iter().flatten().copied().collect()
    }
}

/// p_ij = tr[(Π_i ⊗ Π_j ⊗ I) ρ] with `m1` on `t1` and `m2` on `t2`.
pub fn bilateral_distribution(
    rho: &DensityMatrix,
    m1: &ProjectiveMeasurement,
    t1: &str,
    m2: &ProjectiveMeasurement,
    t2: &str,
) -> Result<JointTable> {
    if t1 == t2 {
        return Err(Error::InvalidArity(format!(
            "bilateral measurement needs two distinct sites, got `{t1}` twice"
        )));
    }
    check_target(rho, m1, t1)?;
    check_target(rho, m2, t2)?;
    let pair = rho.reduce(&[t1, t2])?;
    let first_is_t1 = pair.layout().labels()[0] == t1;
    let rows = m1
        .basis()
        .iter()
        .map(|a| {
            m2.basis()
                .iter()
                .map(|b| {
                    let v = if first_is_t1 {
                        kron_vec(a, b)
                    } else {
                        kron_vec(b, a)
                    };
                    pair.matrix().expectation(&v).re
                })
                .collect()
        })
        .collect();
    JointTable::new(rows)
}

/// The (Ô_i, B_i) pairing of measurements on `target` with memory subsystems.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementAssignment {
    target: String,
    pairs: Vec<(ProjectiveMeasurement, String)>,
}

impl MeasurementAssignment {
    /// Checks that memory labels are distinct from each other and from `target`.
    pub fn new(
        target: impl Into<String>,
        pairs: Vec<(ProjectiveMeasurement, String)>,
    ) -> Result<Self> {
        let target = target.into();
        for (i, (_, mem)) in pairs.iter().enumerate() {
            if *mem == target {
                return Err(Error::InvalidArity(format!(
                    "memory `{mem}` coincides with the measured subsystem"
                )));
            }
            if pairs[..i].iter().any(|(_, other)| other == mem) {
                return Err(Error::DuplicateLabel(mem.clone()));
            }
        }
        Ok(Self { target, pairs })
    }

    pub fn target(&self) -> &str {
        &self.target
    }

    pub fn pairs(&self) -> &[(ProjectiveMeasurement, String)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Every label exists in the state's layout and every measurement fits the target.
    pub fn validate_against(&self, rho: &DensityMatrix) -> Result<()> {
        let layout = rho.layout();
        let d = layout.dim_of(&self.target)?;
        for (m, mem) in &self.pairs {
            layout.position(mem)?;
            if m.dim() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: m.dim(),
                });
            }
        }
        Ok(())
    }
}
