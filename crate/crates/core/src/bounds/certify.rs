use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::reports::{berta_bound, geur_report, key_rate_report, theorem1_report};
use crate::error::{Error, Result};
use crate::measure::{MeasurementAssignment, Pauli, ProjectiveMeasurement};
use crate::state::random_mixed;
use crate::state::rng::{derive_seed, GaussianSource};

/// A slack below `-VIOLATION_TOL` counts as a violated inequality.
pub const VIOLATION_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertifyScenario {
    /// Improved tripartite bound on random 3-qubit states.
    Theorem1,
    /// Three-observable bound on random states of 4 or more qubits.
    Theorem2N3,
    /// Memory-assisted bipartite bound on random 2-qubit states.
    Berta,
    /// New key-rate bounds dominate the old ones, and bilateral conditional
    /// entropies dominate the unilateral ones.
    KeyRateOrdering,
}

impl CertifyScenario {
    pub fn name(self) -> &'static str {
        match self {
            CertifyScenario::Theorem1 => "theorem1",
            CertifyScenario::Theorem2N3 => "theorem2-n3",
            CertifyScenario::Berta => "berta",
            CertifyScenario::KeyRateOrdering => "key-rate-ordering",
        }
    }

    pub fn default_qubits(self) -> usize {
        match self {
            CertifyScenario::Berta => 2,
            CertifyScenario::Theorem1 | CertifyScenario::KeyRateOrdering => 3,
            CertifyScenario::Theorem2N3 => 4,
        }
    }

    fn check_qubits(self, n: usize) -> Result<()> {
        let ok = match self {
            CertifyScenario::Theorem2N3 => (4..=8).contains(&n),
            other => n == other.default_qubits(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArity(format!(
                "scenario {} cannot run on {n} qubits",
                self.name()
            )))
        }
    }
}

impl fmt::Display for CertifyScenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CertifyScenario {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "theorem1" => Ok(CertifyScenario::Theorem1),
            "theorem2-n3" | "theorem2" => Ok(CertifyScenario::Theorem2N3),
            "berta" => Ok(CertifyScenario::Berta),
            "key-rate-ordering" | "keyrate" | "key-rate" => Ok(CertifyScenario::KeyRateOrdering),
            other => Err(Error::Parse(format!(
                "unknown certification scenario `{other}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisMode {
    /// Distinct Pauli observables.
    Paulis,
    /// Haar-random qubit bases.
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertifyOptions {
    pub bases: BasisMode,
    pub parallel: bool,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self {
            bases: BasisMode::Paulis,
            parallel: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertifySummary {
    pub scenario: CertifyScenario,
    pub bases: BasisMode,
    pub trials: usize,
    pub n_qubits: usize,
    pub seed: u64,
    pub violations: usize,
    /// Smallest lhs − bound over all trials.
    pub min_slack: f64,
    pub worst_trial: usize,
    /// Smallest new-bound minus old-bound gap over all trials.
    pub min_bound_gap: f64,
    pub passed: bool,
}

impl fmt::Display for CertifySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "scenario: {}", self.scenario)?;
        writeln!(
            f,
            "bases: {}",
            match self.bases {
                BasisMode::Paulis => "paulis",
                BasisMode::Random => "random",
            }
        )?;
        writeln!(f, "qubits: {}", self.n_qubits)?;
        writeln!(f, "seed: {}", self.seed)?;
        writeln!(f, "trials: {}", self.trials)?;
        writeln!(f, "min_slack: {:.12e}", self.min_slack)?;
        writeln!(f, "worst_trial: {}", self.worst_trial)?;
        writeln!(f, "min_bound_gap: {:.12e}", self.min_bound_gap)?;
        writeln!(f, "violations: {}", self.violations)?;
        write!(f, "result: {}", if self.passed { "PASS" } else { "FAIL" })
    }
}

struct TrialOutcome {
    slack: f64,
    bound_gap: f64,
}

/// Fuzzes the scenario's inequality on `trials` random states with Pauli
/// observables, using the scenario's natural qubit count when `n_qubits` is 0.
pub fn certify(
    trials: usize,
    n_qubits: usize,
    seed: u64,
    scenario: CertifyScenario,
) -> Result<CertifySummary> {
    certify_with(trials, n_qubits, seed, scenario, CertifyOptions::default())
}

/// Each trial depends only on `(seed, trial index)`, so the summary is
/// identical whether or not trials run in parallel.
pub fn certify_with(
    trials: usize,
    n_qubits: usize,
    seed: u64,
    scenario: CertifyScenario,
    options: CertifyOptions,
) -> Result<CertifySummary> {
    if trials == 0 {
        return Err(Error::InvalidArity("at least one trial is required".into()));
    }
    let n_qubits = if n_qubits == 0 {
        scenario.default_qubits()
    } else {
        n_qubits
    };
    scenario.check_qubits(n_qubits)?;

    let run = |t: usize| {
        run_trial(
            scenario,
            n_qubits,
            derive_seed(seed, t as u64),
            options.bases,
        )
    };
    let outcomes: Vec<TrialOutcome> = if options.parallel {
        (0..trials)
            .into_par_iter()
            .map(run)
            .collect::<Result<_>>()?
    } else {
        (0..trials).map(run).collect::<Result<_>>()?
    };

    let mut min_slack = f64::INFINITY;
    let mut worst_trial = 0;
    let mut min_bound_gap = f64::INFINITY;
    let mut violations = 0;
    for (t, o) in outcomes.iter().enumerate() {
        if o.slack < min_slack {
            min_slack = o.slack;
            worst_trial = t;
        }
        min_bound_gap = min_bound_gap.min(o.bound_gap);
        if o.slack < -VIOLATION_TOL || o.bound_gap < -VIOLATION_TOL {
            violations += 1;
        }
    }
    Ok(CertifySummary {
        scenario,
        bases: options.bases,
        trials,
        n_qubits,
        seed,
        violations,
        min_slack,
        worst_trial,
        min_bound_gap,
        passed: violations == 0,
    })
}

fn draw_measurements(
    g: &mut GaussianSource,
    count: usize,
    bases: BasisMode,
) -> Vec<ProjectiveMeasurement> {
    match bases {
        BasisMode::Random => (0..count)
            .map(|_| ProjectiveMeasurement::random_qubit(g.next_u64()))
            .collect(),
        BasisMode::Paulis => {
            let mut pool = Pauli::ALL.to_vec();
            (0..count)
                .map(|_| ProjectiveMeasurement::pauli(pool.remove(g.below(pool.len()))))
                .collect()
        }
    }
}

fn run_trial(
    scenario: CertifyScenario,
    n_qubits: usize,
    trial_seed: u64,
    bases: BasisMode,
) -> Result<TrialOutcome> {
    let mut g = GaussianSource::new(trial_seed);
    let rank = 1 + g.below(1 << n_qubits);
    let rho = random_mixed(n_qubits, rank, g.next_u64())?;
    match scenario {
        CertifyScenario::Theorem1 => {
            let m = draw_measurements(&mut g, 2, bases);
            let report = theorem1_report(&rho, &m[0], "B", &m[1], "C", "A")?;
            Ok(TrialOutcome {
                slack: report.slack_new,
                bound_gap: report.new_bound - report.rb_bound,
            })
        }
        CertifyScenario::Theorem2N3 => {
            let m = draw_measurements(&mut g, 3, bases);
            let pairs = m
                .into_iter()
                .zip(["B", "C", "D"])
                .map(|(m, l)| (m, l.to_string()))
                .collect();
            let report = geur_report(&rho, &MeasurementAssignment::new("A", pairs)?)?;
            Ok(TrialOutcome {
                slack: report.slack_new,
                bound_gap: report.new_bound - report.rb_bound,
            })
        }
        CertifyScenario::Berta => {
            let m = draw_measurements(&mut g, 2, bases);
            let report = berta_bound(&rho, &m[0], &m[1])?;
            Ok(TrialOutcome {
                slack: report.slack_new,
                bound_gap: 0.0,
            })
        }
        CertifyScenario::KeyRateOrdering => {
            let m = draw_measurements(&mut g, 2, bases);
            let r = key_rate_report(&rho, &m[0], &m[1], "A", "B", "C")?;
            let slack = [
                r.k_new_unilateral - r.k_old_unilateral,
                r.k_new_bilateral - r.k_old_bilateral,
                r.s_r_given_rprime - r.s_r_given_b,
                r.s_k_given_kprime - r.s_k_given_b,
            ]
            .into_iter()
            .fold(f64::INFINITY, f64::min);
            Ok(TrialOutcome {
                slack,
                bound_gap: r.improvement,
            })
        }
    }
}
