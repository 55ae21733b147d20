use serde::Serialize;

use super::{PairEvaluation, TIGHT_TOL};
use crate::entropy::{
    classical_conditional_entropy, conditional_entropy, measured_conditional_entropy, von_neumann,
};
use crate::error::{Error, Result};
use crate::measure::{
    bilateral_distribution, max_overlap, MeasurementAssignment, ProjectiveMeasurement,
};
use crate::state::DensityMatrix;

/// q_MU = −log₂ c(R;K).
pub fn q_mu(r: &ProjectiveMeasurement, k: &ProjectiveMeasurement) -> Result<f64> {
    Ok(-max_overlap(r, k)?.log2())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EurScenario {
    /// S(R|B) + S(K|B) ≥ q_MU + S(A|B) on a bipartite state.
    Berta,
    /// S(R|B) + S(K|C) ≥ q_MU + max{0, Δ} on a tripartite state.
    Tripartite,
}

/// Two-observable uncertainty report.
///
/// For `Tripartite`, `rb_bound = q_mu` and `new_bound = q_mu + max(0, delta)`
/// with Δ = S(A) − [I(R:B) + I(K:C)]. For `Berta` there is a single bound:
/// `delta` holds S(A|B), which enters unclamped, and `rb_bound == new_bound`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EurReport {
    pub scenario: EurScenario,
    pub target: String,
    pub observables: Vec<String>,
    pub memories: Vec<String>,
    pub lhs_terms: Vec<f64>,
    pub lhs_total: f64,
    pub q_mu: f64,
    pub s_a: f64,
    pub holevo_terms: Vec<f64>,
    pub delta: f64,
    pub rb_bound: f64,
    pub new_bound: f64,
    pub slack_new: f64,
    pub slack_rb: f64,
    pub tight: bool,
}

/// N-observable report: Σ S(O_i|B_i) ≥ B_MU + max{0, Δ_N}.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeurReport {
    pub n: usize,
    pub target: String,
    pub observables: Vec<String>,
    pub memories: Vec<String>,
    /// c(O_i; O_j); the diagonal is 1.
    pub overlap_matrix: Vec<Vec<f64>>,
    pub b_mu: f64,
    pub s_a: f64,
    pub holevo_terms: Vec<f64>,
    pub delta_n: f64,
    pub lhs_terms: Vec<f64>,
    pub lhs_total: f64,
    pub rb_bound: f64,
    pub new_bound: f64,
    pub slack_new: f64,
    pub slack_rb: f64,
    pub tight: bool,
}

/// Secret-key-rate lower bounds for Alice/Bob with eavesdropper Eve.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KeyRateReport {
    pub alice: String,
    pub bob: String,
    pub eve: String,
    pub observables: Vec<String>,
    pub q_mu: f64,
    pub s_a: f64,
    /// I(R:B) and I(K:E).
    pub holevo_terms: Vec<f64>,
    pub delta: f64,
    pub s_r_given_b: f64,
    pub s_k_given_b: f64,
    pub s_r_given_rprime: f64,
    pub s_k_given_kprime: f64,
    /// q_MU − S(R|B) − S(K|B).
    pub k_old_unilateral: f64,
    /// q_MU − S(R|R') − S(K|K').
    pub k_old_bilateral: f64,
    pub k_new_unilateral: f64,
    pub k_new_bilateral: f64,
    pub improvement: f64,
}

fn require_subsystems(rho: &DensityMatrix, count: usize, what: &str) -> Result<()> {
    let found = rho.layout().len();
    if found != count {
        return Err(Error::InvalidArity(format!(
            "{what} layout required, found {found} subsystem{}",
            if found == 1 { "" } else { "s" }
        )));
    }
    Ok(())
}

fn require_distinct(labels: &[&str]) -> Result<()> {
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(Error::DuplicateLabel(l.to_string()));
        }
    }
    Ok(())
}

/// Berta et al.'s memory-assisted bound on a bipartite state; the first
/// layout label is measured and the second is the memory.
pub fn berta_bound(
    rho_ab: &DensityMatrix,
    r: &ProjectiveMeasurement,
    k: &ProjectiveMeasurement,
) -> Result<EurReport> {
    require_subsystems(rho_ab, 2, "bipartite")?;
    let labels = rho_ab.layout().labels();
    let (target, memory) = (labels[0].as_str(), labels[1].as_str());
    let q = q_mu(r, k)?;
    let lhs_terms = vec![
        measured_conditional_entropy(rho_ab, r, target, memory)?,
        measured_conditional_entropy(rho_ab, k, target, memory)?,
    ];
    let lhs_total = lhs_terms.iter().sum::<f64>();
    let s_a_given_b = conditional_entropy(rho_ab, &[memory])?;
    let bound = q + s_a_given_b;
    let slack = lhs_total - bound;
    Ok(EurReport {
        scenario: EurScenario::Berta,
        target: target.to_string(),
        observables: vec![r.name().to_string(), k.name().to_string()],
        memories: vec![memory.to_string(); 2],
        lhs_terms,
        lhs_total,
        q_mu: q,
        s_a: von_neumann(&rho_ab.reduce(&[target])?)?,
        holevo_terms: Vec::new(),
        delta: s_a_given_b,
        rb_bound: bound,
        new_bound: bound,
        slack_new: slack,
        slack_rb: slack,
        tight: slack <= TIGHT_TOL,
    })
}

/// Improved tripartite bound S(R|B) + S(K|C) ≥ q_MU + max{0, Δ}.
pub fn theorem1_report(
    rho_abc: &DensityMatrix,
    r: &ProjectiveMeasurement,
    memory_r: &str,
    k: &ProjectiveMeasurement,
    memory_k: &str,
    target: &str,
) -> Result<EurReport> {
    require_subsystems(rho_abc, 3, "tripartite")?;
    require_distinct(&[target, memory_r, memory_k])?;
    let q = q_mu(r, k)?;
    let eval = PairEvaluation::compute(rho_abc, target, &[(r, memory_r), (k, memory_k)])?;
    let delta = eval.s_a - eval.holevo_terms.iter().sum::<f64>();
    let lhs_total = eval.lhs_terms.iter().sum::<f64>();
    let new_bound = q + delta.max(0.0);
    let slack_new = lhs_total - new_bound;
    Ok(EurReport {
        scenario: EurScenario::Tripartite,
        target: target.to_string(),
        observables: vec![r.name().to_string(), k.name().to_string()],
        memories: vec![memory_r.to_string(), memory_k.to_string()],
        lhs_terms: eval.lhs_terms,
        lhs_total,
        q_mu: q,
        s_a: eval.s_a,
        holevo_terms: eval.holevo_terms,
        delta,
        rb_bound: q,
        new_bound,
        slack_new,
        slack_rb: lhs_total - q,
        tight: slack_new <= TIGHT_TOL,
    })
}

/// Generalized N-observable bound Σ S(O_i|B_i) ≥ B_MU + max{0, Δ_N} with
/// B_MU = −Σ_{i<j} log₂ c(O_i;O_j) / (N − 1) and Δ_N = (N/2) S(A) − Σ I(O_i:B_i).
pub fn geur_report(rho: &DensityMatrix, assignment: &MeasurementAssignment) -> Result<GeurReport> {
    let n = assignment.len();
    if n < 2 {
        return Err(Error::InvalidArity(format!(
            "at least two measurements are required, got {n}"
        )));
    }
    assignment.validate_against(rho)?;
    let pairs: Vec<(&ProjectiveMeasurement, &str)> = assignment
        .pairs()
        .iter()
        .map(|(m, l)| (m, l.as_str()))
        .collect();

    let mut overlap_matrix = vec![vec![1.0; n]; n];
    let mut log_sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            let c = max_overlap(pairs[i].0, pairs[j].0)?;
            overlap_matrix[i][j] = c;
            overlap_matrix[j][i] = c;
            log_sum += c.log2();
        }
    }
    let b_mu = -log_sum / (n - 1) as f64;

    let eval = PairEvaluation::compute(rho, assignment.target(), &pairs)?;
    let delta_n = (n as f64 / 2.0) * eval.s_a - eval.holevo_terms.iter().sum::<f64>();
    let lhs_total = eval.lhs_terms.iter().sum::<f64>();
    let new_bound = b_mu + delta_n.max(0.0);
    let slack_new = lhs_total - new_bound;
    Ok(GeurReport {
        n,
        target: assignment.target().to_string(),
        observables: pairs.iter().map(|(m, _)| m.name().to_string()).collect(),
        memories: pairs.iter().map(|(_, l)| l.to_string()).collect(),
        overlap_matrix,
        b_mu,
        s_a: eval.s_a,
        holevo_terms: eval.holevo_terms,
        delta_n,
        lhs_terms: eval.lhs_terms,
        lhs_total,
        rb_bound: b_mu,
        new_bound,
        slack_new,
        slack_rb: lhs_total - b_mu,
        tight: slack_new <= TIGHT_TOL,
    })
}

/// Key-rate bounds: Δ pairs R with Bob's memory and K with Eve's.
pub fn key_rate_report(
    rho_abe: &DensityMatrix,
    r: &ProjectiveMeasurement,
    k: &ProjectiveMeasurement,
    alice: &str,
    bob: &str,
    eve: &str,
) -> Result<KeyRateReport> {
    require_subsystems(rho_abe, 3, "tripartite")?;
    require_distinct(&[alice, bob, eve])?;
    let q = q_mu(r, k)?;
    let eval = PairEvaluation::compute(rho_abe, alice, &[(r, bob), (k, eve)])?;
    let delta = eval.s_a - eval.holevo_terms.iter().sum::<f64>();
    let gain = delta.max(0.0);

    let s_r_given_b = eval.lhs_terms[0];
    let s_k_given_b = measured_conditional_entropy(rho_abe, k, alice, bob)?;
    let s_r_given_rprime =
        classical_conditional_entropy(&bilateral_distribution(rho_abe, r, alice, r, bob)?)?;
    let s_k_given_kprime =
        classical_conditional_entropy(&bilateral_distribution(rho_abe, k, alice, k, bob)?)?;

    let k_old_unilateral = q - s_r_given_b - s_k_given_b;
    let k_old_bilateral = q - s_r_given_rprime - s_k_given_kprime;
    let k_new_bilateral = k_old_bilateral + gain;
    Ok(KeyRateReport {
        alice: alice.to_string(),
        bob: bob.to_string(),
        eve: eve.to_string(),
        observables: vec![r.name().to_string(), k.name().to_string()],
        q_mu: q,
        s_a: eval.s_a,
        holevo_terms: eval.holevo_terms,
        delta,
        s_r_given_b,
        s_k_given_b,
        s_r_given_rprime,
        s_k_given_kprime,
        k_old_unilateral,
        k_old_bilateral,
        k_new_unilateral: k_old_unilateral + gain,
        k_new_bilateral,
        improvement: k_new_bilateral - k_old_bilateral,
    })
}
