use std::io::Write;
use std::path::Path;

use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, bad configuration, or an input that fails validation.
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl From<eurbound::Error> for CliError {
    fn from(e: eurbound::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Fixed 9-decimal rendering with `.` as separator; negative zero prints as zero.
pub fn fmt9(v: f64) -> String {
    let s = format!("{v:.9}");
    if s.trim_start_matches('-')
        .chars()
        .all(|c| c == '0' || c == '.')
    {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

/// Parses a real number, also accepting multiples of π such as `pi/2`,
/// `3pi/8`, `-pi` or `0.25*pi`.
pub fn parse_real(text: &str) -> Result<f64, CliError> {
    let t = text.trim().to_ascii_lowercase().replace(' ', "");
    let bad = || CliError::Usage(format!("cannot parse `{text}` as a number"));
    let Some((coef, rest)) = t.split_once("pi") else {
        return t.parse::<f64>().map_err(|_| bad());
    };
    let coef = coef.strip_suffix('*').unwrap_or(coef);
    let coef = match coef {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().map_err(|_| bad())?,
    };
    let div = match rest {
        "" => 1.0,
        r => r
            .strip_prefix('/')
            .ok_or_else(bad)?
            .parse::<f64>()
            .map_err(|_| bad())?,
    };
    let v = coef * std::f64::consts::PI / div;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(bad())
    }
}

/// Writes `contents` to `path` via a temporary file in the same directory
/// followed by a rename, or to `stdout` when no path is given.
pub fn emit(path: Option<&Path>, contents: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    let Some(path) = path else {
        return stdout
            .write_all(contents.as_bytes())
            .map_err(|e| CliError::Io(format!("cannot write to standard output: {e}")));
    };
    let io_err = |e: std::io::Error| CliError::Io(format!("cannot write {}: {e}", path.display()));
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(contents.as_bytes()).map_err(io_err)?;
    tmp.as_file().sync_all().map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;

    #[test]
    fn nine_decimals() {
        assert_eq!(fmt9(2.0), "2.000000000");
        assert_eq!(fmt9(-1e-17), "0.000000000");
        assert_eq!(fmt9(-0.5), "-0.500000000");
        assert_eq!(fmt9(0.1234567894), "0.123456789");
    }

    #[test]
    fn pi_expressions() {
        assert_eq!(parse_real("pi/2").unwrap(), PI / 2.0);
        assert_eq!(parse_real("3pi/8").unwrap(), 3.0 * PI / 8.0);
        assert_eq!(parse_real("0.25*pi").unwrap(), 0.25 * PI);
        assert_eq!(parse_real("-PI").unwrap(), -PI);
        assert_eq!(parse_real("0.3").unwrap(), 0.3);
        for bad in ["", "pie", "pi/", "x", "pi/0", "2pi3"] {
            assert!(parse_real(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn atomic_write_replaces_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.csv");
        std::fs::write(&path, "old").unwrap();
        emit(Some(&path), "new", &mut Vec::new()).unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "new");
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
        let missing = dir.path().join("no/such/dir/out.csv");
        assert_eq!(
            emit(Some(&missing), "x", &mut Vec::new())
                .unwrap_err()
                .exit_code(),
            EXIT_IO
        );
    }
}
