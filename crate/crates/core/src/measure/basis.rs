use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::state::rng::GaussianSource;

/// Tolerance for unit norm and pairwise orthogonality of basis vectors.
pub const BASIS_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pauli {
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

    pub fn name(self) -> &'static str {
        match self {
            Pauli::X => "X",
            Pauli::Y => "Y",
            Pauli::Z => "Z",
        }
    }
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pauli {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "X" | "x" => Ok(Pauli::X),
            "Y" | "y" => Ok(Pauli::Y),
            "Z" | "z" => Ok(Pauli::Z),
            other => Err(Error::Parse(format!(
                "unknown Pauli observable `{other}` (expected X, Y or Z)"
            ))),
        }
    }
}

/// A nondegenerate observable, represented by its orthonormal eigenbasis.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectiveMeasurement {
    name: String,
    basis: Vec<Vec<Complex64>>,
}

impl ProjectiveMeasurement {
    /// Validates that `basis` is a complete orthonormal set.
    pub fn new(name: impl Into<String>, basis: Vec<Vec<Complex64>>) -> Result<Self> {
        let dim = basis.len();
        if dim < 2 {
            return Err(Error::InvalidBasis(format!(
                "need at least 2 basis vectors, got {dim}"
            )));
        }
        for (i, v) in basis.iter().enumerate() {
            if v.len() != dim {
                return Err(Error::InvalidBasis(format!(
                    "vector {i} has length {}, expected {dim}",
                    v.len()
                )));
            }
            if v.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(Error::NonFinite);
            }
        }
        for i in 0..dim {
            for j in i..dim {
                let ip = inner(&basis[i], &basis[j]);
                let expected = if i == j { 1.0 } else { 0.0 };
                if (ip - Complex64::new(expected, 0.0)).norm() > BASIS_TOL {
                    let what = if i == j {
                        "not unit-norm"
                    } else {
                        "not orthogonal"
                    };
                    return Err(Error::InvalidBasis(format!(
                        "vectors {i} and {j} are {what}: <v{i}|v{j}> = {ip}"
                    )));
                }
            }
        }
        Ok(Self {
            name: name.into(),
            basis,
        })
    }

    /// Basis given by the columns of a unitary matrix.
    pub fn from_unitary(name: impl Into<String>, u: &ComplexMatrix) -> Result<Self> {
        if !u.is_square() {
            return Err(Error::InvalidBasis("unitary must be square".into()));
        }
        Self::new(name, (0..u.cols()).map(|c| u.column(c)).collect())
    }

    pub fn pauli(which: Pauli) -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let c = Complex64::new;
        let basis = match which {
            Pauli::Z => vec![
                vec![c(1.0, 0.0), c(0.0, 0.0)],
                vec![c(0.0, 0.0), c(1.0, 0.0)],
            ],
            Pauli::X => vec![vec![c(h, 0.0), c(h, 0.0)], vec![c(h, 0.0), c(-h, 0.0)]],
            Pauli::Y => vec![vec![c(h, 0.0), c(0.0, h)], vec![c(h, 0.0), c(0.0, -h)]],
        };
        Self {
            name: which.name().to_string(),
            basis,
        }
    }

    /// Qubit basis {cos α|0⟩ + sin α|1⟩, −sin α|0⟩ + cos α|1⟩}.
    pub fn real_rotation(alpha: f64) -> Self {
        let (s, co) = alpha.sin_cos();
        let c = |x: f64| Complex64::new(x, 0.0);
        Self {
            name: format!("R({alpha})"),
            basis: vec![vec![c(co), c(s)], vec![c(-s), c(co)]],
        }
    }

    /// Qubit basis {|ψ⟩, |ψ⊥⟩} from a Gaussian-sampled |ψ⟩; Haar distributed.
    pub fn random_qubit(seed: u64) -> Self {
        let mut g = GaussianSource::new(seed);
        let (a, b) = (g.complex_gaussian(), g.complex_gaussian());
        let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
        let (a, b) = (a / norm, b / norm);
        Self {
            name: format!("random({seed})"),
            basis: vec![vec![a, b], vec![-b.conj(), a.conj()]],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Complex64>] {
        &self.basis
    }

    pub fn vector(&self, i: usize) -> &[Complex64] {
        &self.basis[i]
    }

    /// |φ_i⟩⟨φ_i|.
    pub fn projector(&self, i: usize) -> ComplexMatrix {
        ComplexMatrix::outer(&self.basis[i])
    }

    /// Unitary whose columns are the basis vectors.
    pub fn unitary(&self) -> ComplexMatrix {
        let d = self.dim();
        ComplexMatrix::from_fn(d, d, |r, c| self.basis[c][r])
    }

    /// Parses `{"name": ..., "re": [[...]], "im": [[...]]}`; the columns of
    /// the (re + i·im) matrix are the basis vectors.
    pub fn from_json_str(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct UnitaryFile {
            #[serde(default)]
            name: Option<String>,
            re: Vec<Vec<f64>>,
            #[serde(default)]
            im: Option<Vec<Vec<f64>>>,
        }
        let file: UnitaryFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("basis file: {e}")))?;
        let d = file.re.len();
        let shape_ok = |m: &Vec<Vec<f64>>| m.len() == d && m.iter().all(|r| r.len() == d);
        if !shape_ok(&file.re) || file.im.as_ref().is_some_and(|im| !shape_ok(im)) {
            return Err(Error::Parse(
                "basis file: re/im must be square matrices of equal size".into(),
            ));
        }
        let u = ComplexMatrix::from_fn(d, d, |r, c| {
            Complex64::new(file.re[r][c], file.im.as_ref().map_or(0.0, |im| im[r][c]))
        });
        Self::from_unitary(file.name.unwrap_or_else(|| "custom".into()), &u)
    }
}

pub(crate) fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// |⟨a|b⟩|² / (⟨a|a⟩⟨b|b⟩). Normalizing by the computed norms makes the
/// common 1/√d amplitude round-off cancel, so qubit MUB overlaps come out as
/// exactly 1/2.
fn squared_overlap(a: &[Complex64], b: &[Complex64]) -> f64 {
    inner(a, b).norm_sqr() / (inner(a, a).re * inner(b, b).re)
}

fn check_dims(r: &ProjectiveMeasurement, k: &ProjectiveMeasurement) -> Result<()> {
    if r.dim() != k.dim() {
        return Err(Error::DimensionMismatch {
            expected: r.dim(),
            found: k.dim(),
        });
    }
    Ok(())
}

/// c(R;K) = max_{i,j} |⟨φ_i|ϕ_j⟩|².
pub fn max_overlap(r: &ProjectiveMeasurement, k: &ProjectiveMeasurement) -> Result<f64> {
    check_dims(r, k)?;
    let mut best: f64 = 0.0;
    for a in r.basis() {
        for b in k.basis() {
            best = best.max(squared_overlap(a, b));
        }
    }
    Ok(best)
}

/// True iff every squared overlap equals 1/d within `tol`.
pub fn is_mub_pair(r: &ProjectiveMeasurement, k: &ProjectiveMeasurement, tol: f64) -> Result<bool> {
    check_dims(r, k)?;
    let target = 1.0 / r.dim() as f64;
    Ok(r.basis().iter().all(|a| {
        k.basis()
            .iter()
            .all(|b| (squared_overlap(a, b) - target).abs() <= tol)
    }))
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_PI_8, PI};

    use proptest::prelude::*;

    use super::*;

    #[test]
    fn pauli_bases() {
        for p in Pauli::ALL {
            let m = ProjectiveMeasurement::pauli(p);
            assert!(ProjectiveMeasurement::new(p.name(), m.basis().to_vec()).is_ok());
        }
        let z = ProjectiveMeasurement::pauli(Pauli::Z);
        assert_eq!(z.unitary(), ComplexMatrix::identity(2));
        let y = ProjectiveMeasurement::pauli(Pauli::Y);
        assert!(
            (y.vector(0)[1] - Complex64::new(0.0, std::f64::consts::FRAC_1_SQRT_2)).norm() < 1e-15
        );
        assert_eq!("y".parse::<Pauli>().unwrap(), Pauli::Y);
        assert!("W".parse::<Pauli>().is_err());
    }

    #[test]
    fn overlaps_and_mub() {
        let [x, y, z] = Pauli::ALL.map(ProjectiveMeasurement::pauli);
        assert_eq!(max_overlap(&x, &z).unwrap(), 0.5);
        assert_eq!(max_overlap(&x, &y).unwrap(), 0.5);
        assert_eq!(max_overlap(&y, &z).unwrap(), 0.5);
        assert!((max_overlap(&z, &z).unwrap() - 1.0).abs() < 1e-15);
        assert!(is_mub_pair(&x, &z, 1e-12).unwrap());
        assert!(is_mub_pair(&x, &y, 1e-12).unwrap());
        assert!(is_mub_pair(&y, &z, 1e-12).unwrap());
        assert!(!is_mub_pair(&z, &z, 1e-12).unwrap());
    }

    #[test]
    fn rotated_basis_overlap() {
        let z = ProjectiveMeasurement::pauli(Pauli::Z);
        for alpha in [0.0, 0.1, FRAC_PI_8, 0.9, 2.0, PI] {
            let r = ProjectiveMeasurement::real_rotation(alpha);
            let expected = alpha.cos().powi(2).max(alpha.sin().powi(2));
            assert!((max_overlap(&z, &r).unwrap() - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn dimension_mismatch() {
        let z = ProjectiveMeasurement::pauli(Pauli::Z);
        let q = ProjectiveMeasurement::from_unitary("I3", &ComplexMatrix::identity(3)).unwrap();
        assert!(matches!(
            max_overlap(&z, &q),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(is_mub_pair(&z, &q, 1e-9).is_err());
    }

    #[test]
    fn rejects_bad_bases() {
        let c = |re: f64| Complex64::new(re, 0.0);
        assert!(
            ProjectiveMeasurement::new("n", vec![vec![c(1.0), c(0.0)], vec![c(1.0), c(0.0)]])
                .is_err()
        );
        assert!(
            ProjectiveMeasurement::new("n", vec![vec![c(2.0), c(0.0)], vec![c(0.0), c(1.0)]])
                .is_err()
        );
        assert!(ProjectiveMeasurement::new("n", vec![vec![c(1.0), c(0.0)]]).is_err());
        assert!(ProjectiveMeasurement::new("n", vec![vec![c(1.0)], vec![c(0.0), c(1.0)]]).is_err());
    }

    #[test]
    fn basis_json() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let text = format!(r#"{{"name":"H","re":[[{h},{h}],[{h},-{h}]]}}"#);
        let m = ProjectiveMeasurement::from_json_str(&text).unwrap();
        assert_eq!(m.name(), "H");
        assert!(
            (max_overlap(&m, &ProjectiveMeasurement::pauli(Pauli::X)).unwrap() - 1.0).abs() < 1e-12
        );
        assert!(ProjectiveMeasurement::from_json_str(r#"{"re":[[1,1],[0,1]]}"#).is_err());
        assert!(ProjectiveMeasurement::from_json_str(r#"{"re":[[1,0],[0]]}"#).is_err());
    }

    proptest! {
        #[test]
        fn overlap_symmetric_phase_invariant_and_at_least_half(s1 in any::<u64>(), s2 in any::<u64>(), phase in 0.0..std::f64::consts::TAU) {
            let r = ProjectiveMeasurement::random_qubit(s1);
            let k = ProjectiveMeasurement::random_qubit(s2);
            let c_rk = max_overlap(&r, &k).unwrap();
            prop_assert!((c_rk - max_overlap(&k, &r).unwrap()).abs() < 1e-12);
            prop_assert!((0.5 - 1e-12..=1.0 + 1e-12).contains(&c_rk));
            let e = Complex64::from_polar(1.0, phase);
            let phased = ProjectiveMeasurement::new("p", r.basis().iter().map(|v| v.iter().map(|z| z * e).collect()).collect()).unwrap();
            prop_assert!((max_overlap(&phased, &k).unwrap() - c_rk).abs() < 1e-12);
        }
    }
}
