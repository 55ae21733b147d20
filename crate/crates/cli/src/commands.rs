use std::io::Write;
use std::path::Path;

use serde::Serialize;

use eurbound::bounds::{
    berta_bound, certify_with, geur_report, key_rate_report, theorem1_report, BasisMode,
    CertifyOptions, CertifyScenario,
};
use eurbound::measure::parse_pairing;
use eurbound::state::{bell_phi_plus, ghz, ghz4_theta, random_mixed, random_pure, werner3};
use eurbound::DensityMatrix;

use crate::args::{
    BoundArgs, BoundScenario, CertifyArgs, CertifyScenarioArg, FamilyArg, Fig3Args, Fig4Args,
    StateArgs,
};
use crate::output::{emit, parse_real, CliError, EXIT_OK, EXIT_VIOLATION};
use crate::sweep::{
    fig3_rows, fig4_rows, observable_pair, pairing_assignment, render_fig3, render_fig4,
    resolve_spec, SweepConfig, P_DOMAIN, THETA_DOMAIN,
};

const PAULI_ORDER: [&str; 3] = ["X", "Y", "Z"];

pub fn fig3_sweep(args: &Fig3Args, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let cfg = SweepConfig {
        grid_start: parse_real(&args.start)?,
        grid_end: parse_real(&args.end)?,
        grid_points: args.points,
        output_path: args.output.out.clone(),
        format: args.output.format,
    };
    let grid = cfg.grid(THETA_DOMAIN, "theta")?;
    let assignment = pairing_assignment("A", &args.pairing)?;
    let rows = fig3_rows(&grid, &assignment)?;
    emit(
        cfg.output_path.as_deref(),
        &render_fig3(&rows, cfg.format),
        stdout,
    )?;
    Ok(EXIT_OK)
}

pub fn fig4_sweep(args: &Fig4Args, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let cfg = SweepConfig {
        grid_start: parse_real(&args.start)?,
        grid_end: parse_real(&args.end)?,
        grid_points: args.points,
        output_path: args.output.out.clone(),
        format: args.output.format,
    };
    let grid = cfg.grid(P_DOMAIN, "p")?;
    let (r, k) = observable_pair(&args.observables)?;
    let rows = fig4_rows(&grid, &r, &k)?;
    emit(
        cfg.output_path.as_deref(),
        &render_fig4(&rows, cfg.format),
        stdout,
    )?;
    Ok(EXIT_OK)
}

/// Reads and validates a state file: I/O failures exit 3, anything else 2.
pub fn read_state(path: &Path) -> Result<DensityMatrix, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read state file {}: {e}", path.display())))?;
    DensityMatrix::from_json_str(&text)
        .map_err(|e| CliError::Usage(format!("invalid state file {}: {e}", path.display())))
}

#[derive(Serialize)]
struct Versioned<'a, T> {
    schema: &'a str,
    #[serde(flatten)]
    report: T,
}

fn versioned<T: Serialize>(schema: &str, report: T) -> String {
    let mut s =
        serde_json::to_string_pretty(&Versioned { schema, report }).expect("reports serialize");
    s.push('\n');
    s
}

fn require_subsystems(rho: &DensityMatrix, n: usize, what: &str) -> Result<(), CliError> {
    let found = rho.layout().len();
    if found == n {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "{what} layout required, found {found} subsystems"
        )))
    }
}

pub fn bound(args: &BoundArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let rho = read_state(&args.state)?;
    let labels: Vec<String> = rho.layout().labels().to_vec();
    let target = args.target.clone().unwrap_or_else(|| labels[0].clone());
    if !labels.contains(&target) {
        return Err(CliError::Usage(format!(
            "target `{target}` is not a layout label"
        )));
    }
    let others: Vec<&str> = labels
        .iter()
        .map(String::as_str)
        .filter(|l| *l != target)
        .collect();

    let json = match args.scenario {
        BoundScenario::Berta => {
            require_subsystems(&rho, 2, "bipartite")?;
            if target != labels[0] {
                return Err(CliError::Usage(
                    "berta measures the first layout label".into(),
                ));
            }
            let (r, k) = observable_pair(args.observables.as_deref().unwrap_or("X,Z"))?;
            versioned("eurbound.eur-report/v1", berta_bound(&rho, &r, &k)?)
        }
        BoundScenario::Theorem1 => {
            require_subsystems(&rho, 3, "tripartite")?;
            let pairing = args
                .pairing
                .clone()
                .unwrap_or_else(|| format!("X:{},Z:{}", others[0], others[1]));
            let pairs = parse_pairing(&pairing)?;
            if pairs.len() != 2 {
                return Err(CliError::Usage(format!(
                    "theorem1 takes two OBS:LABEL pairs, got {}",
                    pairs.len()
                )));
            }
            let r = resolve_spec(&pairs[0].0)?;
            let k = resolve_spec(&pairs[1].0)?;
            let report = theorem1_report(&rho, &r, &pairs[0].1, &k, &pairs[1].1, &target)?;
            versioned("eurbound.eur-report/v1", report)
        }
        BoundScenario::Theorem2 => {
            let pairing = match &args.pairing {
                Some(p) => p.clone(),
                None => {
                    if others.len() > PAULI_ORDER.len() {
                        return Err(CliError::Usage(format!(
                            "no default pairing for {} memories; pass --pairing",
                            others.len()
                        )));
                    }
                    others
                        .iter()
                        .zip(PAULI_ORDER)
                        .map(|(l, o)| format!("{o}:{l}"))
                        .collect::<Vec<_>>()
                        .join(",")
                }
            };
            let assignment = pairing_assignment(&target, &pairing)?;
            versioned("eurbound.geur-report/v1", geur_report(&rho, &assignment)?)
        }
        BoundScenario::KeyRate => {
            require_subsystems(&rho, 3, "tripartite")?;
            let parties: Vec<String> = match &args.parties {
                Some(p) => p.split(',').map(|s| s.trim().to_string()).collect(),
                None => labels.clone(),
            };
            if parties.len() != 3 {
                return Err(CliError::Usage(format!(
                    "--parties takes three labels, got {}",
                    parties.len()
                )));
            }
            let (r, k) = observable_pair(args.observables.as_deref().unwrap_or("Y,Z"))?;
            let report = key_rate_report(&rho, &r, &k, &parties[0], &parties[1], &parties[2])?;
            versioned("eurbound.key-rate-report/v1", report)
        }
    };
    emit(None, &json, stdout)?;
    Ok(EXIT_OK)
}

pub fn certify(args: &CertifyArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let scenario = match args.scenario {
        CertifyScenarioArg::Theorem1 => CertifyScenario::Theorem1,
        CertifyScenarioArg::Theorem2N3 => CertifyScenario::Theorem2N3,
        CertifyScenarioArg::Berta => CertifyScenario::Berta,
        CertifyScenarioArg::KeyRateOrdering => CertifyScenario::KeyRateOrdering,
    };
    let options = CertifyOptions {
        bases: if args.random_bases {
            BasisMode::Random
        } else {
            BasisMode::Paulis
        },
        parallel: !args.serial,
    };
    let summary = certify_with(
        args.trials,
        args.qubits.unwrap_or(0),
        args.seed,
        scenario,
        options,
    )?;
    emit(None, &format!("{summary}\n"), stdout)?;
    Ok(if summary.passed {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

pub fn state(args: &StateArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let rho = match args.family {
        FamilyArg::Bell => bell_phi_plus(),
        FamilyArg::Ghz => ghz(args.qubits)?,
        FamilyArg::Ghz4Theta => ghz4_theta(parse_real(&args.theta)?)?,
        FamilyArg::Werner3 => werner3(args.p)?,
        FamilyArg::RandomPure => random_pure(args.qubits, args.seed)?,
        FamilyArg::RandomMixed => random_mixed(args.qubits, args.rank, args.seed)?,
    };
    let mut json = rho.to_json();
    if !json.ends_with('\n') {
        json.push('\n');
    }
    emit(None, &json, stdout)?;
    Ok(EXIT_OK)
}
