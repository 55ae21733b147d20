//! Hermitian eigendecomposition by the cyclic complex Jacobi method.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary, then annihilates the (now real) pivot with a plane rotation. At
//! the dimensions used here (≤ 32) a handful of sweeps reaches machine
//! precision.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Default tolerance on `max |m - m^dagger|`.
pub const HERMITIAN_TOL: f64 = 1e-9;

const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone)]
pub struct Eigensystem {
    /// Eigenvalues, descending.
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors stored as columns, in the order of `values`.
    pub vectors: ComplexMatrix,
}

impl Eigensystem {
    pub fn vector(&self, i: usize) -> Vec<Complex64> {
        self.vectors.column(i)
    }

    /// `V diag(λ) V^dagger`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.values.len();
        ComplexMatrix::from_fn(n, n, |r, c| {
            (0..n)
                .map(|k| self.vectors[(r, k)] * self.values[k] * self.vectors[(c, k)].conj())
                .sum()
        })
    }
}

/// Eigenvalues (descending) and orthonormal eigenvectors of a Hermitian matrix.
pub fn hermitian_eigensystem(m: &ComplexMatrix, tol: f64) -> Result<Eigensystem> {
    let (values, vectors) = jacobi(m, tol, true)?;
    let vectors = vectors.expect("vectors requested");
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
    let n = values.len();
    let sorted = ComplexMatrix::from_fn(n, n, |r, c| vectors[(r, order[c])]);
    Ok(Eigensystem {
        values: order.iter().map(|&i| values[i]).collect(),
        vectors: sorted,
    })
}

/// Eigenvalues only, descending. Skips eigenvector accumulation.
pub fn hermitian_eigenvalues(m: &ComplexMatrix, tol: f64) -> Result<Vec<f64>> {
    let (mut values, _) = jacobi(m, tol, false)?;
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

fn jacobi(
    m: &ComplexMatrix,
    tol: f64,
    want_vectors: bool,
) -> Result<(Vec<f64>, Option<ComplexMatrix>)> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: m.cols(),
        });
    }
    let deviation = m.hermitian_deviation();
    if deviation > tol || !deviation.is_finite() {
        return Err(Error::NotHermitian { deviation, tol });
    }
    let n = m.rows();
    let mut a = m.clone();
    a.symmetrize();
    let mut v = want_vectors.then(|| ComplexMatrix::identity(n));

    let scale = a
        .as_slice()
        .iter()
        .map(|z| z.norm_sqr())
        .sum::<f64>()
        .sqrt();
    let threshold = (f64::EPSILON * scale).powi(2) * 1e-2;

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[(p, q)].norm_sqr())
            .sum();
        if off <= threshold || scale == 0.0 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let magnitude = apq.norm();
                if magnitude == 0.0 || magnitude * magnitude <= threshold / (n * n) as f64 {
                    continue;
                }
                let phase = apq / magnitude;
                let theta = 0.5 * (2.0 * magnitude).atan2(a[(q, q)].re - a[(p, p)].re);
                let (s, c) = theta.sin_cos();
                // U restricted to (p, q): [[c, s], [-s e^{-iφ}, c e^{-iφ}]]
                let u_qp = -phase.conj() * s;
                let u_qq = phase.conj() * c;
                rotate_columns(&mut a, p, q, c, s, u_qp, u_qq);
                // rows: A <- U^dagger A
                for k in 0..n {
                    let x = a[(p, k)];
                    let y = a[(q, k)];
                    a[(p, k)] = x * c + y * u_qp.conj();
                    a[(q, k)] = x * s + y * u_qq.conj();
                }
                a[(p, q)] = Complex64::new(0.0, 0.0);
                a[(q, p)] = Complex64::new(0.0, 0.0);
                if let Some(v) = v.as_mut() {
                    rotate_columns(v, p, q, c, s, u_qp, u_qq);
                }
            }
        }
    }
    Ok(((0..n).map(|i| a[(i, i)].re).collect(), v))
}

fn rotate_columns(
    m: &mut ComplexMatrix,
    p: usize,
    q: usize,
    c: f64,
    s: f64,
    u_qp: Complex64,
    u_qq: Complex64,
) {
    for k in 0..m.rows() {
        let x = m[(k, p)];
        let y = m[(k, q)];
        m[(k, p)] = x * c + y * u_qp;
        m[(k, q)] = x * s + y * u_qq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::{ONE, ZERO};

    fn assert_orthonormal(v: &ComplexMatrix, tol: f64) {
        let gram = &v.adjoint() * v;
        assert!(
            gram.max_abs_diff(&ComplexMatrix::identity(v.cols())) < tol,
            "{gram:?}"
        );
    }

    #[test]
    fn diagonal_input_sorted_descending() {
        let m = ComplexMatrix::from_real_diagonal(&[0.3, 0.7]);
        let es = hermitian_eigensystem(&m, HERMITIAN_TOL).unwrap();
        assert_eq!(es.values, vec![0.7, 0.3]);
        assert!(es.reconstruct().max_abs_diff(&m) < 1e-15);
    }

    #[test]
    fn pauli_x_spectrum() {
        let x = ComplexMatrix::from_row_major(2, 2, vec![ZERO, ONE, ONE, ZERO]).unwrap();
        let es = hermitian_eigensystem(&x, HERMITIAN_TOL).unwrap();
        assert!((es.values[0] - 1.0).abs() < 1e-15);
        assert!((es.values[1] + 1.0).abs() < 1e-15);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let plus = es.vector(0);
        // up to a global phase, |+> has equal-magnitude, equal-phase entries
        assert!((plus[0].norm() - h).abs() < 1e-12);
        assert!((plus[0] - plus[1]).norm() < 1e-12);
        let minus = es.vector(1);
        assert!((minus[0] + minus[1]).norm() < 1e-12);
    }

    #[test]
    fn complex_hermitian_reconstruction() {
        let n = 6;
        let m = ComplexMatrix::from_fn(n, n, |r, c| {
            let (lo, hi) = (r.min(c) as f64, r.max(c) as f64);
            let im = if r == c {
                0.0
            } else if r < c {
                0.3 * hi - lo
            } else {
                -(0.3 * hi - lo)
            };
            Complex64::new((lo + 1.0) / (hi + 2.0), im)
        });
        let es = hermitian_eigensystem(&m, HERMITIAN_TOL).unwrap();
        assert!(es.reconstruct().max_abs_diff(&m) < 1e-9 * n as f64);
        assert_orthonormal(&es.vectors, 1e-9);
        let sum: f64 = es.values.iter().sum();
        assert!((sum - m.trace().re).abs() < 1e-9);
        assert!(es.values.windows(2).all(|w| w[0] >= w[1]));
        let only = hermitian_eigenvalues(&m, HERMITIAN_TOL).unwrap();
        for (a, b) in only.iter().zip(&es.values) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn degenerate_spectrum() {
        let m = ComplexMatrix::identity(4).scale_real(0.25);
        let es = hermitian_eigensystem(&m, HERMITIAN_TOL).unwrap();
        assert!(es.values.iter().all(|&l| (l - 0.25).abs() < 1e-15));
        assert_orthonormal(&es.vectors, 1e-15);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::from_row_major(2, 2, vec![ZERO, ONE, ZERO, ZERO]).unwrap();
        assert!(matches!(
            hermitian_eigensystem(&m, HERMITIAN_TOL),
            Err(Error::NotHermitian { .. })
        ));
        let tiny =
            ComplexMatrix::from_row_major(2, 2, vec![ZERO, Complex64::new(1e-12, 0.0), ZERO, ZERO])
                .unwrap();
        assert!(hermitian_eigensystem(&tiny, HERMITIAN_TOL).is_ok());
        assert!(hermitian_eigensystem(&ComplexMatrix::zeros(2, 3), HERMITIAN_TOL).is_err());
    }
}
