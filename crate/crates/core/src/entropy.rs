//! Entropy functionals, all in bits.
//!
//! Eigenvalues and probabilities below `ZERO_CLAMP` count as exact zeros
//! (0·log 0 = 0); eigenvalues below `-POSITIVITY_TOL` are rejected.

use crate::error::{Error, Result};
use crate::linalg::apply_local_left;
use crate::measure::{
    outcome_distribution, post_measurement_state, JointTable, ProjectiveMeasurement,
};
use crate::state::{DensityMatrix, POSITIVITY_TOL};

pub const ZERO_CLAMP: f64 = 1e-12;

fn xlog2x_sum(values: impl IntoIterator<Item = f64>) -> Result<f64> {
    let mut h = 0.0;
    for v in values {
        if v < -POSITIVITY_TOL {
            return Err(Error::NegativeEigenvalue(v));
        }
        if v > ZERO_CLAMP {
            h -= v * v.log2();
        }
    }
    Ok(h)
}

/// S(ρ) = −Σ λ log₂ λ.
pub fn von_neumann(rho: &DensityMatrix) -> Result<f64> {
    xlog2x_sum(rho.eigenvalues()?)
}

/// H(p) = −Σ p log₂ p.
pub fn shannon(p: &[f64]) -> Result<f64> {
    if p.is_empty() {
        return Err(Error::NotADistribution("empty distribution".into()));
    }
    if let Some(bad) = p.iter().find(|&&x| !x.is_finite() || x < -POSITIVITY_TOL) {
        return Err(Error::NotADistribution(format!(
            "entry {bad} is negative or not finite"
        )));
    }
    let total: f64 = p.iter().sum();
    if (total - 1.0).abs() > crate::measure::DISTRIBUTION_TOL {
        return Err(Error::NotADistribution(format!("entries sum to {total}")));
    }
    xlog2x_sum(p.iter().copied())
}

/// S(X|Y) = S(ρ_XY) − S(ρ_Y), conditioning on the labels in `condition_on`.
pub fn conditional_entropy(rho: &DensityMatrix, condition_on: &[&str]) -> Result<f64> {
    let remainder = rho.layout().complement(condition_on)?;
    if remainder.is_empty() {
        return Err(Error::EmptyRemainder);
    }
    if condition_on.is_empty() {
        return von_neumann(rho);
    }
    Ok(von_neumann(rho)? - von_neumann(&rho.reduce(condition_on)?)?)
}

/// S(A:B) = S(A) + S(B) − S(AB) for disjoint label sets.
pub fn mutual_information(rho: &DensityMatrix, a: &[&str], b: &[&str]) -> Result<f64> {
    if let Some(l) = a.iter().find(|l| b.contains(l)) {
        return Err(Error::DuplicateLabel(l.to_string()));
    }
    let ab: Vec<&str> = a.iter().chain(b).copied().collect();
    Ok(
        von_neumann(&rho.reduce(a)?)? + von_neumann(&rho.reduce(b)?)?
            - von_neumann(&rho.reduce(&ab)?)?,
    )
}

fn memory_set<'a>(target: &'a str, memory: &[&'a str]) -> Result<Vec<&'a str>> {
    if memory.is_empty() {
        return Err(Error::InvalidArity(
            "memory must name at least one subsystem".into(),
        ));
    }
    if memory.contains(&target) {
        return Err(Error::InvalidArity(format!(
            "memory includes the measured subsystem `{target}`"
        )));
    }
    Ok(std::iter::once(target)
        .chain(memory.iter().copied())
        .collect())
}

/// S(R̂|B) for a single memory subsystem.
pub fn measured_conditional_entropy(
    rho: &DensityMatrix,
    m: &ProjectiveMeasurement,
    target: &str,
    memory: &str,
) -> Result<f64> {
    measured_conditional_entropy_given(rho, m, target, &[memory])
}

/// S(R̂|M) = S(ρ_{R̂M}) − S(ρ_M) where ρ_{R̂M} is the dephased state of
/// `target` ∪ `memory`.
pub fn measured_conditional_entropy_given(
    rho: &DensityMatrix,
    m: &ProjectiveMeasurement,
    target: &str,
    memory: &[&str],
) -> Result<f64> {
    let keep = memory_set(target, memory)?;
    let pair = rho.reduce(&keep)?;
    let post = post_measurement_state(&pair, m, target)?;
    Ok(von_neumann(&post)? - von_neumann(&pair.reduce(memory)?)?)
}

/// Holevo quantity I(R̂:B) for a single memory subsystem.
pub fn holevo(
    rho: &DensityMatrix,
    m: &ProjectiveMeasurement,
    target: &str,
    memory: &str,
) -> Result<f64> {
    holevo_given(rho, m, target, &[memory])
}

/// I(R̂:M) as the Holevo χ of the ensemble {p_i, ρ_M^i} that outcome i of
/// `m` on `target` steers onto `memory`: χ = S(Σ p_i ρ_M^i) − Σ p_i S(ρ_M^i).
pub fn holevo_given(
    rho: &DensityMatrix,
    m: &ProjectiveMeasurement,
    target: &str,
    memory: &[&str],
) -> Result<f64> {
    let keep = memory_set(target, memory)?;
    let pair = rho.reduce(&keep)?;
    let probs = outcome_distribution(&pair, m, target)?;
    let memory_state = pair.reduce(memory)?;
    let mut conditional = 0.0;
    for (i, &p) in probs.iter().enumerate() {
        if p <= ZERO_CLAMP {
            continue;
        }
        let branch = apply_local_left(pair.matrix(), pair.layout(), target, &m.projector(i))?;
        let steered = crate::linalg::partial_trace(&branch, pair.layout(), memory)?;
        let mut steered = steered.scale_real(1.0 / p);
        steered.symmetrize();
        let steered = DensityMatrix::from_trusted(memory_state.layout().clone(), steered);
        conditional += p * von_neumann(&steered)?;
    }
    Ok(von_neumann(&memory_state)? - conditional)
}

/// H(rows | columns) = H(joint) − H(column marginal).
pub fn classical_conditional_entropy(table: &JointTable) -> Result<f64> {
    Ok(shannon(&table.flattened())? - shannon(&table.column_marginal())?)
}
