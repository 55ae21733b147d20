use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::rng::GaussianSource;
use super::DensityMatrix;
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, SystemLayout, ZERO};

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// |Φ⁺⟩⟨Φ⁺| on {A, B}.
pub fn bell_phi_plus() -> DensityMatrix {
    ghz(2).expect("n = 2 is valid")
}

/// (|0…0⟩ + |1…1⟩)/√2 on qubits labeled A, B, C, ...
pub fn ghz(n: usize) -> Result<DensityMatrix> {
    if n < 2 {
        return Err(Error::InvalidArity(format!(
            "GHZ state needs at least 2 qubits, got {n}"
        )));
    }
    let layout = SystemLayout::lettered_qubits(n)?;
    cat_state(layout, FRAC_1_SQRT_2, FRAC_1_SQRT_2)
}

/// cosθ|0000⟩ + sinθ|1111⟩ on {A, B, C, D}, θ ∈ [0, π/2].
pub fn ghz4_theta(theta: f64) -> Result<DensityMatrix> {
    if !(0.0..=FRAC_PI_2).contains(&theta) {
        return Err(Error::Domain {
            name: "theta",
            value: theta,
            domain: "[0, pi/2]",
        });
    }
    let layout = SystemLayout::qubits(["A", "B", "C", "D"])?;
    cat_state(layout, theta.cos(), theta.sin())
}

fn cat_state(layout: SystemLayout, zeros: f64, ones: f64) -> Result<DensityMatrix> {
    let dim = layout.total_dim();
    let mut psi = vec![ZERO; dim];
    psi[0] = real(zeros);
    psi[dim - 1] = real(ones);
    Ok(DensityMatrix::from_trusted(
        layout,
        ComplexMatrix::outer(&psi),
    ))
}

/// p|GHZ³⟩⟨GHZ³| + (1 − p) I₈/8 on {A, B, D}.
pub fn werner3(p: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain {
            name: "p",
            value: p,
            domain: "[0, 1]",
        });
    }
    let layout = SystemLayout::qubits(["A", "B", "D"])?;
    let mut m = ComplexMatrix::identity(8).scale_real((1.0 - p) / 8.0);
    for (r, c) in [(0, 0), (0, 7), (7, 0), (7, 7)] {
        m[(r, c)] += real(p / 2.0);
    }
    Ok(DensityMatrix::from_trusted(layout, m))
}

/// Haar-random pure state: a normalized vector of i.i.d. complex Gaussians.
pub fn random_pure(n: usize, seed: u64) -> Result<DensityMatrix> {
    if n < 1 {
        return Err(Error::InvalidArity(
            "random state needs at least 1 qubit".into(),
        ));
    }
    let layout = SystemLayout::lettered_qubits(n)?;
    let mut g = GaussianSource::new(seed);
    let psi: Vec<Complex64> = (0..layout.total_dim())
        .map(|_| g.complex_gaussian())
        .collect();
    DensityMatrix::from_state_vector(layout, &psi)
}

/// ρ = GG†/tr(GG†) with G a 2ⁿ × rank matrix of i.i.d. complex Gaussians.
pub fn random_mixed(n: usize, rank: usize, seed: u64) -> Result<DensityMatrix> {
    if n < 1 {
        return Err(Error::InvalidArity(
            "random state needs at least 1 qubit".into(),
        ));
    }
    let layout = SystemLayout::lettered_qubits(n)?;
    let dim = layout.total_dim();
    if rank < 1 || rank > dim {
        return Err(Error::Rank { rank, max: dim });
    }
    let mut g = GaussianSource::new(seed);
    let gm = ComplexMatrix::from_fn(dim, rank, |_, _| g.complex_gaussian());
    let mut rho = &gm * &gm.adjoint();
    rho.symmetrize();
    let tr = rho.trace().re;
    Ok(DensityMatrix::from_trusted(
        layout,
        rho.scale_real(1.0 / tr),
    ))
}

/// Serializable description of one of the supported state families.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum StateFamily {
    Bell,
    Ghz {
        n_qubits: usize,
    },
    GhzTheta {
        theta: f64,
    },
    Werner3 {
        p: f64,
    },
    RandomPure {
        n_qubits: usize,
        seed: u64,
    },
    RandomMixed {
        n_qubits: usize,
        rank: usize,
        seed: u64,
    },
}

impl StateFamily {
    pub fn build(&self) -> Result<DensityMatrix> {
        match *self {
            StateFamily::Bell => Ok(bell_phi_plus()),
            StateFamily::Ghz { n_qubits } => ghz(n_qubits),
            StateFamily::GhzTheta { theta } => ghz4_theta(theta),
            StateFamily::Werner3 { p } => werner3(p),
            StateFamily::RandomPure { n_qubits, seed } => random_pure(n_qubits, seed),
            StateFamily::RandomMixed {
                n_qubits,
                rank,
                seed,
            } => random_mixed(n_qubits, rank, seed),
        }
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_PI_4, FRAC_PI_6, PI};

    use super::*;
    use crate::state::TRACE_TOL;

    fn revalidate(rho: &DensityMatrix) {
        DensityMatrix::new(rho.layout().clone(), rho.matrix().clone())
            .expect("factory output must validate");
    }

    #[test]
    fn bell_state_entries() {
        let rho = bell_phi_plus();
        revalidate(&rho);
        assert!((rho.trace() - 1.0).abs() < TRACE_TOL);
        assert!((rho.matrix()[(0, 3)] - real(0.5)).norm() < 1e-15);
        let a = rho.reduce(&["A"]).unwrap();
        assert!(
            a.matrix()
                .max_abs_diff(&ComplexMatrix::identity(2).scale_real(0.5))
                < 1e-15
        );
    }

    #[test]
    fn ghz_family() {
        assert_eq!(ghz(2).unwrap(), bell_phi_plus());
        assert!(matches!(ghz(1), Err(Error::InvalidArity(_))));
        let g3 = ghz(3).unwrap();
        assert!((g3.purity() - 1.0).abs() < 1e-12);
        let g4 = ghz(4).unwrap();
        for l in ["A", "B", "C", "D"] {
            let m = g4.reduce(&[l]).unwrap();
            assert!(
                m.matrix()
                    .max_abs_diff(&ComplexMatrix::identity(2).scale_real(0.5))
                    < 1e-15
            );
        }
    }

    #[test]
    fn ghz4_theta_cases() {
        assert!(
            ghz4_theta(FRAC_PI_4)
                .unwrap()
                .matrix()
                .max_abs_diff(ghz(4).unwrap().matrix())
                < 1e-15
        );
        let zero = ghz4_theta(0.0).unwrap();
        assert!(
            zero.matrix()
                .max_abs_diff(&ComplexMatrix::from_fn(16, 16, |r, c| real(
                    if r == 0 && c == 0 { 1.0 } else { 0.0 }
                )))
                < 1e-15
        );
        let a = ghz4_theta(FRAC_PI_6).unwrap().reduce(&["A"]).unwrap();
        assert!(
            a.matrix()
                .max_abs_diff(&ComplexMatrix::from_real_diagonal(&[0.75, 0.25]))
                < 1e-12
        );
        assert!(ghz4_theta(-1e-3).is_err());
        assert!(ghz4_theta(PI).is_err());
        assert!(ghz4_theta(f64::NAN).is_err());
    }

    #[test]
    fn ghz4_theta_marginal_spectrum_on_grid() {
        for i in 0..50 {
            let theta = FRAC_PI_2 * i as f64 / 49.0;
            let ev = ghz4_theta(theta)
                .unwrap()
                .reduce(&["A"])
                .unwrap()
                .eigenvalues()
                .unwrap();
            let (c2, s2) = (theta.cos().powi(2), theta.sin().powi(2));
            assert!((ev[0] - c2.max(s2)).abs() < 1e-9);
            assert!((ev[1] - c2.min(s2)).abs() < 1e-9);
        }
    }

    #[test]
    fn werner_family() {
        let w1 = werner3(1.0).unwrap();
        assert!(w1.matrix().max_abs_diff(ghz(3).unwrap().matrix()) < 1e-15);
        assert_eq!(w1.layout().labels(), ["A", "B", "D"]);
        let w0 = werner3(0.0).unwrap();
        assert!(
            w0.matrix()
                .max_abs_diff(&ComplexMatrix::identity(8).scale_real(0.125))
                < 1e-15
        );
        let ev = werner3(0.5).unwrap().eigenvalues().unwrap();
        assert!((ev[0] - 9.0 / 16.0).abs() < 1e-12);
        assert!(ev[1..].iter().all(|&l| (l - 1.0 / 16.0).abs() < 1e-12));
        assert!(werner3(1.01).is_err());
    }

    #[test]
    fn werner_is_affine_in_p() {
        for &(p1, p2) in &[(0.0, 1.0), (0.1, 0.7), (0.33, 0.34)] {
            let mid = werner3((p1 + p2) / 2.0).unwrap();
            let avg =
                (werner3(p1).unwrap().matrix() + werner3(p2).unwrap().matrix()).scale_real(0.5);
            assert!(mid.matrix().max_abs_diff(&avg) < 1e-12);
        }
    }

    #[test]
    fn random_pure_properties() {
        let a = random_pure(3, 11).unwrap();
        revalidate(&a);
        assert!((a.purity() - 1.0).abs() < 1e-9);
        assert_eq!(a, random_pure(3, 11).unwrap());
        assert_ne!(a, random_pure(3, 12).unwrap());
    }

    #[test]
    fn random_pure_marginal_mean_is_maximally_mixed() {
        let samples = 10_000;
        let mut acc = ComplexMatrix::zeros(2, 2);
        for seed in 0..samples {
            acc = &acc
                + random_pure(2, seed)
                    .unwrap()
                    .reduce(&["A"])
                    .unwrap()
                    .matrix();
        }
        let mean = acc.scale_real(1.0 / samples as f64);
        assert!(
            mean.max_abs_diff(&ComplexMatrix::identity(2).scale_real(0.5)) < 0.02,
            "{mean:?}"
        );
    }

    #[test]
    fn random_mixed_properties() {
        assert!((random_mixed(2, 1, 5).unwrap().purity() - 1.0).abs() < 1e-9);
        for seed in 0..20 {
            revalidate(&random_mixed(3, 1 + (seed as usize % 8), seed).unwrap());
        }
        for seed in 0..100 {
            let ev = random_mixed(2, 4, seed).unwrap().eigenvalues().unwrap();
            assert!(*ev.last().unwrap() > 1e-12);
        }
        assert_eq!(random_mixed(2, 0, 1), Err(Error::Rank { rank: 0, max: 4 }));
        assert_eq!(random_mixed(2, 5, 1), Err(Error::Rank { rank: 5, max: 4 }));
    }

    #[test]
    fn family_spec_round_trips_through_json() {
        let spec = StateFamily::RandomMixed {
            n_qubits: 3,
            rank: 2,
            seed: 9,
        };
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(serde_json::from_str::<StateFamily>(&text).unwrap(), spec);
        assert_eq!(spec.build().unwrap(), random_mixed(3, 2, 9).unwrap());
        assert!(StateFamily::GhzTheta { theta: 2.0 }.build().is_err());
    }
}
