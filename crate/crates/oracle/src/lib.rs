//! Brute-force reference computations for tests.
//!
//! Everything here is deliberately naive and shares no code with the
//! `eurbound` crate: operators are built as explicit full-size matrices via
//! nalgebra Kronecker products, partial traces are explicit digit loops, and
//! spectra come from nalgebra's Hermitian eigensolver. Qubits are addressed
//! by position, with position 0 the most significant basis digit.

use nalgebra::{Complex, DMatrix, DVector};

pub type C = Complex<f64>;
pub type Mat = DMatrix<C>;

pub fn c(re: f64, im: f64) -> C {
    Complex::new(re, im)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pauli {
    X,
    Y,
    Z,
}

/// Eigenbasis of a Pauli operator as two column vectors.
pub fn pauli_basis(p: Pauli) -> [DVector<C>; 2] {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    match p {
        Pauli::Z => [
            DVector::from_vec(vec![c(1.0, 0.0), c(0.0, 0.0)]),
            DVector::from_vec(vec![c(0.0, 0.0), c(1.0, 0.0)]),
        ],
        Pauli::X => [
            DVector::from_vec(vec![c(h, 0.0), c(h, 0.0)]),
            DVector::from_vec(vec![c(h, 0.0), c(-h, 0.0)]),
        ],
        Pauli::Y => [
            DVector::from_vec(vec![c(h, 0.0), c(0.0, h)]),
            DVector::from_vec(vec![c(h, 0.0), c(0.0, -h)]),
        ],
    }
}

pub fn outer(v: &DVector<C>) -> Mat {
    v * v.adjoint()
}

pub fn identity(dim: usize) -> Mat {
    Mat::identity(dim, dim)
}

/// `op` placed at qubit `pos` of an `n`-qubit register.
pub fn embed(op: &Mat, pos: usize, n: usize) -> Mat {
    let mut out = Mat::identity(1, 1);
    for q in 0..n {
        let factor = if q == pos { op.clone() } else { identity(2) };
        out = out.kronecker(&factor);
    }
    out
}

fn bit(index: usize, pos: usize, n: usize) -> usize {
    (index >> (n - 1 - pos)) & 1
}

/// Reduced state on the qubits in `keep` (ascending positions).
pub fn partial_trace(rho: &Mat, n: usize, keep: &[usize]) -> Mat {
    let mut keep = keep.to_vec();
    keep.sort_unstable();
    let k = keep.len();
    let mut out = Mat::zeros(1 << k, 1 << k);
    for i in 0..(1usize << n) {
        for j in 0..(1usize << n) {
            let traced_equal = (0..n)
                .filter(|q| !keep.contains(q))
                .all(|q| bit(i, q, n) == bit(j, q, n));
            if !traced_equal {
                continue;
            }
            let ri = keep.iter().fold(0, |acc, &q| (acc << 1) | bit(i, q, n));
            let rj = keep.iter().fold(0, |acc, &q| (acc << 1) | bit(j, q, n));
            out[(ri, rj)] += rho[(i, j)];
        }
    }
    out
}

pub fn eigenvalues(rho: &Mat) -> Vec<f64> {
    let mut v: Vec<f64> = rho
        .clone()
        .symmetric_eigenvalues()
        .iter()
        .copied()
        .collect();
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

pub fn entropy(rho: &Mat) -> f64 {
    eigenvalues(rho)
        .into_iter()
        .filter(|&l| l > 1e-14)
        .map(|l| -l * l.log2())
        .sum()
}

pub fn binary_entropy(p: f64) -> f64 {
    [p, 1.0 - p]
        .into_iter()
        .filter(|&x| x > 0.0)
        .map(|x| -x * x.log2())
        .sum()
}

/// Σ_i (P_i ⊗ I) ρ (P_i ⊗ I) with the projectors built as full matrices.
pub fn dephase(rho: &Mat, n: usize, pos: usize, basis: &[DVector<C>; 2]) -> Mat {
    let mut out = Mat::zeros(rho.nrows(), rho.ncols());
    for v in basis {
        let p = embed(&outer(v), pos, n);
        out += &p * rho * &p;
    }
    out
}

/// S(O|M) = S(ρ_{O M}) − S(ρ_M) for measurement of `basis` on qubit `target`
/// with memory qubit `memory`, computed on the full register.
pub fn measured_conditional_entropy(
    rho: &Mat,
    n: usize,
    basis: &[DVector<C>; 2],
    target: usize,
    memory: usize,
) -> f64 {
    let post = dephase(rho, n, target, basis);
    let joint = partial_trace(&post, n, &[target, memory]);
    let mem = partial_trace(rho, n, &[memory]);
    entropy(&joint) - entropy(&mem)
}

/// I(O:M) = S(ρ_O) + S(ρ_M) − S(ρ_{O M}) on the dephased state.
pub fn holevo(rho: &Mat, n: usize, basis: &[DVector<C>; 2], target: usize, memory: usize) -> f64 {
    let post = dephase(rho, n, target, basis);
    let o = partial_trace(&post, n, &[target]);
    let m = partial_trace(&post, n, &[memory]);
    let om = partial_trace(&post, n, &[target, memory]);
    entropy(&o) + entropy(&m) - entropy(&om)
}

pub fn state_vector(amplitudes: &[(usize, C)], dim: usize) -> DVector<C> {
    let mut v = DVector::zeros(dim);
    for &(i, a) in amplitudes {
        v[i] += a;
    }
    v
}

/// cosθ|0000⟩ + sinθ|1111⟩ as a density matrix.
pub fn ghz4_theta(theta: f64) -> Mat {
    outer(&state_vector(
        &[(0, c(theta.cos(), 0.0)), (15, c(theta.sin(), 0.0))],
        16,
    ))
}

/// p|GHZ³⟩⟨GHZ³| + (1−p) I/8.
pub fn werner3(p: f64) -> Mat {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let ghz = outer(&state_vector(&[(0, c(h, 0.0)), (7, c(h, 0.0))], 8));
    ghz * c(p, 0.0) + identity(8) * c((1.0 - p) / 8.0, 0.0)
}

/// Δ₃ = (3/2)S(A) − [I(R:B) + I(K:C) + I(Q:D)] on a 4-qubit state with A at position 0.
pub fn delta3(rho: &Mat, r: Pauli, k: Pauli, q: Pauli) -> f64 {
    let s_a = entropy(&partial_trace(rho, 4, &[0]));
    1.5 * s_a
        - holevo(rho, 4, &pauli_basis(r), 0, 1)
        - holevo(rho, 4, &pauli_basis(k), 0, 2)
        - holevo(rho, 4, &pauli_basis(q), 0, 3)
}

/// S(R|B) + S(K|C) + S(Q|D) on a 4-qubit state.
pub fn lhs3(rho: &Mat, r: Pauli, k: Pauli, q: Pauli) -> f64 {
    measured_conditional_entropy(rho, 4, &pauli_basis(r), 0, 1)
        + measured_conditional_entropy(rho, 4, &pauli_basis(k), 0, 2)
        + measured_conditional_entropy(rho, 4, &pauli_basis(q), 0, 3)
}

/// Joint outcome probabilities p_ij = tr[(P_i ⊗ P_j ⊗ I) ρ] for qubits `a`, `b`.
pub fn joint_table(
    rho: &Mat,
    n: usize,
    basis_a: &[DVector<C>; 2],
    a: usize,
    basis_b: &[DVector<C>; 2],
    b: usize,
) -> [[f64; 2]; 2] {
    let mut t = [[0.0; 2]; 2];
    for (i, va) in basis_a.iter().enumerate() {
        for (j, vb) in basis_b.iter().enumerate() {
            let op = embed(&outer(va), a, n) * embed(&outer(vb), b, n);
            t[i][j] = (op * rho).trace().re;
        }
    }
    t
}

/// H(rows | columns) of a 2×2 joint table.
pub fn table_conditional_entropy(t: &[[f64; 2]; 2]) -> f64 {
    let h = |xs: &[f64]| -> f64 {
        xs.iter()
            .filter(|&&x| x > 0.0)
            .map(|&x| -x * x.log2())
            .sum()
    };
    let joint = h(&[t[0][0], t[0][1], t[1][0], t[1][1]]);
    let cols = h(&[t[0][0] + t[1][0], t[0][1] + t[1][1]]);
    joint - cols
}

/// Key-rate quantities of a 3-qubit state with Alice=0, Bob=1, Eve=2,
/// returning (Δ, old bilateral bound, new bilateral bound).
pub fn key_rate_bilateral(rho: &Mat, r: Pauli, k: Pauli) -> (f64, f64, f64) {
    let (br, bk) = (pauli_basis(r), pauli_basis(k));
    let q_mu = 1.0;
    let s_a = entropy(&partial_trace(rho, 3, &[0]));
    let delta = s_a - holevo(rho, 3, &br, 0, 1) - holevo(rho, 3, &bk, 0, 2);
    let s_rr = table_conditional_entropy(&joint_table(rho, 3, &br, 0, &br, 1));
    let s_kk = table_conditional_entropy(&joint_table(rho, 3, &bk, 0, &bk, 1));
    let old = q_mu - s_rr - s_kk;
    (delta, old, old + delta.max(0.0))
}
