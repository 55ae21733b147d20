//! The θ sweep over GHZ⁴(θ) and the p sweep over three-qubit Werner states.

use std::f64::consts::FRAC_PI_2;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::Serialize;

use eurbound::bounds::{geur_report, key_rate_report};
use eurbound::measure::{
    parse_observables, parse_pairing, MeasurementAssignment, MeasurementSpec, ProjectiveMeasurement,
};
use eurbound::state::{ghz4_theta, werner3};

use crate::args::Format;
use crate::output::{fmt9, CliError};

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub grid_start: f64,
    pub grid_end: f64,
    pub grid_points: usize,
    pub output_path: Option<PathBuf>,
    pub format: Format,
}

impl SweepConfig {
    /// Inclusive linear grid; checks `points ≥ 2` and `start < end` inside `domain`.
    pub fn grid(&self, domain: (f64, f64), name: &str) -> Result<Vec<f64>, CliError> {
        let (lo, hi) = domain;
        if self.grid_points < 2 {
            return Err(CliError::Usage(format!(
                "--points must be at least 2, got {}",
                self.grid_points
            )));
        }
        if self.grid_start.partial_cmp(&self.grid_end) != Some(std::cmp::Ordering::Less) {
            return Err(CliError::Usage(format!(
                "grid start {} must be below grid end {}",
                self.grid_start, self.grid_end
            )));
        }
        if self.grid_start < lo || self.grid_end > hi {
            return Err(CliError::Usage(format!(
                "{name} grid [{}, {}] leaves the domain [{lo}, {hi}]",
                self.grid_start, self.grid_end
            )));
        }
        let last = self.grid_points - 1;
        Ok((0..self.grid_points)
            .map(|i| {
                if i == last {
                    self.grid_end
                } else {
                    self.grid_start + (self.grid_end - self.grid_start) * i as f64 / last as f64
                }
            })
            .collect())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Fig3Row {
    pub theta: f64,
    pub lhs_total: f64,
    pub b_mu: f64,
    pub delta3_raw: f64,
    pub delta3_clamped: f64,
    pub new_bound: f64,
    pub rb_bound: f64,
    pub slack_new: f64,
    pub slack_rb: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Fig4Row {
    pub p: f64,
    pub q_mu: f64,
    pub delta_raw: f64,
    pub k_old_bilateral: f64,
    pub k_new_bilateral: f64,
    pub improvement: f64,
}

pub const FIG3_COLUMNS: [&str; 9] = [
    "theta",
    "lhs_total",
    "b_mu",
    "delta3_raw",
    "delta3_clamped",
    "new_bound",
    "rb_bound",
    "slack_new",
    "slack_rb",
];

pub const FIG4_COLUMNS: [&str; 6] = [
    "p",
    "q_mu",
    "delta_raw",
    "k_old_bilateral",
    "k_new_bilateral",
    "improvement",
];

/// Resolves a measurement selector; an unreadable basis file is an I/O error.
pub fn resolve_spec(spec: &MeasurementSpec) -> Result<ProjectiveMeasurement, CliError> {
    match spec {
        MeasurementSpec::Pauli(_) => Ok(spec.resolve()?),
        MeasurementSpec::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                CliError::Io(format!("cannot read basis file {}: {e}", path.display()))
            })?;
            Ok(ProjectiveMeasurement::from_json_str(&text)?)
        }
    }
}

/// Resolves an `OBS:LABEL,...` pairing into an assignment measured on `target`.
pub fn pairing_assignment(target: &str, pairing: &str) -> Result<MeasurementAssignment, CliError> {
    let pairs = parse_pairing(pairing)?
        .into_iter()
        .map(|(spec, label)| Ok((resolve_spec(&spec)?, label)))
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(MeasurementAssignment::new(target, pairs)?)
}

pub fn observable_pair(
    list: &str,
) -> Result<(ProjectiveMeasurement, ProjectiveMeasurement), CliError> {
    let specs = parse_observables(list)?;
    if specs.len() != 2 {
        return Err(CliError::Usage(format!(
            "expected two observables R,K, got {}",
            specs.len()
        )));
    }
    Ok((resolve_spec(&specs[0])?, resolve_spec(&specs[1])?))
}

pub fn fig3_rows(
    grid: &[f64],
    assignment: &MeasurementAssignment,
) -> Result<Vec<Fig3Row>, CliError> {
    grid.par_iter()
        .map(|&theta| {
            let r = geur_report(&ghz4_theta(theta)?, assignment)?;
            Ok(Fig3Row {
                theta,
                lhs_total: r.lhs_total,
                b_mu: r.b_mu,
                delta3_raw: r.delta_n,
                delta3_clamped: r.delta_n.max(0.0),
                new_bound: r.new_bound,
                rb_bound: r.rb_bound,
                slack_new: r.slack_new,
                slack_rb: r.slack_rb,
            })
        })
        .collect()
}

pub fn fig4_rows(
    grid: &[f64],
    r: &ProjectiveMeasurement,
    k: &ProjectiveMeasurement,
) -> Result<Vec<Fig4Row>, CliError> {
    grid.par_iter()
        .map(|&p| {
            let rep = key_rate_report(&werner3(p)?, r, k, "A", "B", "D")?;
            Ok(Fig4Row {
                p,
                q_mu: rep.q_mu,
                delta_raw: rep.delta,
                k_old_bilateral: rep.k_old_bilateral,
                k_new_bilateral: rep.k_new_bilateral,
                improvement: rep.improvement,
            })
        })
        .collect()
}

pub const THETA_DOMAIN: (f64, f64) = (0.0, FRAC_PI_2);
pub const P_DOMAIN: (f64, f64) = (0.0, 1.0);

fn csv(columns: &[&str], rows: impl Iterator<Item = Vec<f64>>) -> String {
    let mut out = columns.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.into_iter().map(fmt9).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct SweepDocument<'a, R> {
    schema: &'static str,
    columns: &'a [&'a str],
    rows: &'a [R],
}

pub fn render_fig3(rows: &[Fig3Row], format: Format) -> String {
    match format {
        Format::Csv => csv(
            &FIG3_COLUMNS,
            rows.iter().map(|r| {
                vec![
                    r.theta,
                    r.lhs_total,
                    r.b_mu,
                    r.delta3_raw,
                    r.delta3_clamped,
                    r.new_bound,
                    r.rb_bound,
                    r.slack_new,
                    r.slack_rb,
                ]
            }),
        ),
        Format::Json => json(&SweepDocument {
            schema: "eurbound.fig3-sweep/v1",
            columns: &FIG3_COLUMNS,
            rows,
        }),
    }
}

pub fn render_fig4(rows: &[Fig4Row], format: Format) -> String {
    match format {
        Format::Csv => csv(
            &FIG4_COLUMNS,
            rows.iter().map(|r| {
                vec![
                    r.p,
                    r.q_mu,
                    r.delta_raw,
                    r.k_old_bilateral,
                    r.k_new_bilateral,
                    r.improvement,
                ]
            }),
        ),
        Format::Json => json(&SweepDocument {
            schema: "eurbound.fig4-sweep/v1",
            columns: &FIG4_COLUMNS,
            rows,
        }),
    }
}

fn json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("sweep documents serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(start: f64, end: f64, points: usize) -> SweepConfig {
        SweepConfig {
            grid_start: start,
            grid_end: end,
            grid_points: points,
            output_path: None,
            format: Format::Csv,
        }
    }

    #[test]
    fn grid_is_inclusive() {
        let g = cfg(0.0, 1.0, 11).grid(P_DOMAIN, "p").unwrap();
        assert_eq!(g.len(), 11);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[10], 1.0);
        assert!((g[3] - 0.3).abs() < 1e-15);
        let t = cfg(0.0, FRAC_PI_2, 9).grid(THETA_DOMAIN, "theta").unwrap();
        assert_eq!(t[8], FRAC_PI_2);
    }

    #[test]
    fn grid_validation() {
        assert!(cfg(0.0, 1.0, 1).grid(P_DOMAIN, "p").is_err());
        assert!(cfg(0.5, 0.5, 3).grid(P_DOMAIN, "p").is_err());
        assert!(cfg(0.0, 1.5, 3).grid(P_DOMAIN, "p").is_err());
        assert!(cfg(-0.1, 1.0, 3).grid(P_DOMAIN, "p").is_err());
        assert!(cfg(f64::NAN, 1.0, 3).grid(P_DOMAIN, "p").is_err());
    }

    #[test]
    fn csv_rows_are_self_consistent() {
        let grid = cfg(0.0, FRAC_PI_2, 9).grid(THETA_DOMAIN, "theta").unwrap();
        let rows = fig3_rows(&grid, &pairing_assignment("A", "X:B,Y:C,Z:D").unwrap()).unwrap();
        let text = render_fig3(&rows, Format::Csv);
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), FIG3_COLUMNS.join(","));
        for line in lines {
            let v: Vec<f64> = line.split(',').map(|x| x.parse().unwrap()).collect();
            assert_eq!(v.len(), 9);
            assert!((v[1] - v[5] - v[7]).abs() <= 2e-9, "{line}");
            assert!((v[1] - v[6] - v[8]).abs() <= 2e-9, "{line}");
        }
    }

    #[test]
    fn pairing_errors() {
        assert!(pairing_assignment("A", "X:B").is_err());
        assert!(pairing_assignment("A", "X:B,Y:B").is_err());
        assert!(pairing_assignment("A", "X:A,Y:B").is_err());
        assert!(observable_pair("X,Y,Z").is_err());
    }
}
