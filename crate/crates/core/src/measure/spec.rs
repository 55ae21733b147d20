//! Textual measurement selectors used in configuration and on the command line.

use std::path::PathBuf;
use std::str::FromStr;

use super::basis::{Pauli, ProjectiveMeasurement};
use crate::error::{Error, Result};

/// A measurement named either by Pauli letter or by a JSON basis file path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MeasurementSpec {
    Pauli(Pauli),
    File(PathBuf),
}

impl MeasurementSpec {
    /// Resolves to a concrete basis, reading the file for `File` specs.
    pub fn resolve(&self) -> Result<ProjectiveMeasurement> {
        match self {
            MeasurementSpec::Pauli(p) => Ok(ProjectiveMeasurement::pauli(*p)),
            MeasurementSpec::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    Error::Parse(format!("cannot read basis file {}: {e}", path.display()))
                })?;
                ProjectiveMeasurement::from_json_str(&text)
            }
        }
    }
}

impl FromStr for MeasurementSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.ends_with(".json") {
            Ok(MeasurementSpec::File(PathBuf::from(s)))
        } else {
            s.parse().map(MeasurementSpec::Pauli)
        }
    }
}

/// Parses `"X:B,Y:C,Z:D"` into (measurement, memory label) pairs.
pub fn parse_pairing(s: &str) -> Result<Vec<(MeasurementSpec, String)>> {
    let pairs = s
        .split(',')
        .map(|item| {
            let (meas, mem) = item.rsplit_once(':').ok_or_else(|| {
                Error::Parse(format!(
                    "pairing item `{item}` is not of the form OBS:LABEL"
                ))
            })?;
            let mem = mem.trim();
            if mem.is_empty() {
                return Err(Error::Parse(format!(
                    "pairing item `{item}` has an empty memory label"
                )));
            }
            Ok((meas.parse()?, mem.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    if pairs.len() < 2 {
        return Err(Error::Parse(
            "pairing needs at least two OBS:LABEL items".into(),
        ));
    }
    Ok(pairs)
}

/// Parses a comma-separated observable list such as `"Y,Z"`.
pub fn parse_observables(s: &str) -> Result<Vec<MeasurementSpec>> {
    s.split(',').map(str::parse).collect()
}
