use serde::{Deserialize, Serialize};

use super::matrix::{ComplexMatrix, ZERO};
use crate::error::{Error, Result};

/// Labeled tensor-product structure of a composite Hilbert space.
///
/// Label index 0 is the leftmost tensor factor and the most significant digit
/// of a computational-basis index (big-endian).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemLayout {
    labels: Vec<String>,
    dims: Vec<usize>,
}

impl SystemLayout {
    pub fn new<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        dims: Vec<usize>,
    ) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::InvalidLayout(
                "at least one subsystem is required".into(),
            ));
        }
        if labels.len() != dims.len() {
            return Err(Error::InvalidLayout(format!(
                "{} labels but {} dims",
                labels.len(),
                dims.len()
            )));
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::InvalidLayout("empty subsystem label".into()));
            }
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        if let Some(&d) = dims.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidLayout(format!(
                "local dimension {d} is below 2"
            )));
        }
        dims.iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d))
            .ok_or_else(|| Error::InvalidLayout("total dimension overflows".into()))?;
        Ok(Self { labels, dims })
    }

    /// `n` qubits labeled by the given names.
    pub fn qubits<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let dims = vec![2; labels.len()];
        Self::new(labels, dims)
    }

    /// `n` qubits labeled A, B, C, ... (Z, then Q26, Q27, ...).
    pub fn lettered_qubits(n: usize) -> Result<Self> {
        Self::qubits((0..n).map(|i| {
            if i < 26 {
                char::from(b'A' + i as u8).to_string()
            } else {
                format!("Q{i}")
            }
        }))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn position(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn dim_of(&self, label: &str) -> Result<usize> {
        Ok(self.dims[self.position(label)?])
    }

    pub fn contains(&self, label: &str) -> bool {
        self.labels.iter().any(|l| l == label)
    }

    /// Positions of `keep` in layout order, deduplicated.
    fn kept_positions(&self, keep: &[&str]) -> Result<Vec<usize>> {
        if keep.is_empty() {
            return Err(Error::InvalidLayout(
                "kept label set must be nonempty".into(),
            ));
        }
        let mut mask = vec![false; self.len()];
        for l in keep {
            mask[self.position(l)?] = true;
        }
        Ok((0..self.len()).filter(|&i| mask[i]).collect())
    }

    /// Layout of the kept subsystems, in layout order.
    pub fn restrict(&self, keep: &[&str]) -> Result<SystemLayout> {
        let pos = self.kept_positions(keep)?;
        Ok(SystemLayout {
            labels: pos.iter().map(|&i| self.labels[i].clone()).collect(),
            dims: pos.iter().map(|&i| self.dims[i]).collect(),
        })
    }

    /// Labels not in `keep`, in layout order.
    pub fn complement(&self, keep: &[&str]) -> Result<Vec<&str>> {
        for l in keep {
            self.position(l)?;
        }
        Ok(self
            .labels
            .iter()
            .filter(|l| !keep.contains(&l.as_str()))
            .map(String::as_str)
            .collect())
    }

    /// Place value of each factor in the flattened basis index.
    fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.len()];
        for i in (0..self.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * self.dims[i + 1];
        }
        strides
    }

    /// Flattened offsets contributed by every joint configuration of the
    /// given positions, enumerated big-endian over those positions.
    fn offsets(&self, positions: &[usize]) -> Vec<usize> {
        let strides = self.strides();
        let mut offsets = vec![0usize];
        for &p in positions {
            let mut next = Vec::with_capacity(offsets.len() * self.dims[p]);
            for &o in &offsets {
                for digit in 0..self.dims[p] {
                    next.push(o + digit * strides[p]);
                }
            }
            offsets = next;
        }
        offsets
    }
}

fn check_square(rho: &ComplexMatrix, layout: &SystemLayout) -> Result<()> {
    let dim = layout.total_dim();
    if !rho.is_square() || rho.rows() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: if rho.is_square() {
                rho.rows()
            } else {
                rho.rows().max(rho.cols())
            },
        });
    }
    Ok(())
}

/// Traces out every subsystem not in `keep`. The result is ordered by layout
/// order of the kept labels, regardless of the order in `keep`.
pub fn partial_trace(
    rho: &ComplexMatrix,
    layout: &SystemLayout,
    keep: &[&str],
) -> Result<ComplexMatrix> {
    check_square(rho, layout)?;
    let kept = layout.kept_positions(keep)?;
    let traced: Vec<usize> = (0..layout.len()).filter(|i| !kept.contains(i)).collect();
    let kept_off = layout.offsets(&kept);
    let traced_off = layout.offsets(&traced);
    let n = kept_off.len();
    let mut out = ComplexMatrix::zeros(n, n);
    for (a, &ka) in kept_off.iter().enumerate() {
        for (b, &kb) in kept_off.iter().enumerate() {
            let mut acc = ZERO;
            for &t in &traced_off {
                acc += rho[(ka + t, kb + t)];
            }
            out[(a, b)] = acc;
        }
    }
    Ok(out)
}

/// Computes `(I ⊗ op ⊗ I) · m` with `op` acting on the factor `target`.
pub fn apply_local_left(
    m: &ComplexMatrix,
    layout: &SystemLayout,
    target: &str,
    op: &ComplexMatrix,
) -> Result<ComplexMatrix> {
    let (site, rest) = local_split(m, layout, target, op)?;
    let d = site.len();
    let mut out = ComplexMatrix::zeros(m.rows(), m.cols());
    let mut column = vec![ZERO; d];
    for &r in &rest {
        for c in 0..m.cols() {
            for (k, &s) in site.iter().enumerate() {
                column[k] = m[(r + s, c)];
            }
            for (i, &si) in site.iter().enumerate() {
                let mut acc = ZERO;
                for (k, x) in column.iter().enumerate() {
                    acc += op[(i, k)] * x;
                }
                out[(r + si, c)] = acc;
            }
        }
    }
    Ok(out)
}

/// Computes `m · (I ⊗ op ⊗ I)` with `op` acting on the factor `target`.
pub fn apply_local_right(
    m: &ComplexMatrix,
    layout: &SystemLayout,
    target: &str,
    op: &ComplexMatrix,
) -> Result<ComplexMatrix> {
    let (site, rest) = local_split(m, layout, target, op)?;
    let d = site.len();
    let mut out = ComplexMatrix::zeros(m.rows(), m.cols());
    let mut row = vec![ZERO; d];
    for r in 0..m.rows() {
        for &c in &rest {
            for (k, &s) in site.iter().enumerate() {
                row[k] = m[(r, c + s)];
            }
            for (j, &sj) in site.iter().enumerate() {
                let mut acc = ZERO;
                for (k, x) in row.iter().enumerate() {
                    acc += x * op[(k, j)];
                }
                out[(r, c + sj)] = acc;
            }
        }
    }
    Ok(out)
}

fn local_split(
    m: &ComplexMatrix,
    layout: &SystemLayout,
    target: &str,
    op: &ComplexMatrix,
) -> Result<(Vec<usize>, Vec<usize>)> {
    check_square(m, layout)?;
    let pos = layout.position(target)?;
    let d = layout.dims()[pos];
    if op.rows() != d || op.cols() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: op.rows(),
        });
    }
    let rest: Vec<usize> = (0..layout.len()).filter(|&i| i != pos).collect();
    Ok((layout.offsets(&[pos]), layout.offsets(&rest)))
}

#[cfg(test)]
mod tests {
    use num_complex::Complex64;

    use super::*;
    use crate::linalg::kron;

    fn abc() -> SystemLayout {
        SystemLayout::qubits(["A", "B", "C"]).unwrap()
    }

    #[test]
    fn layout_validation() {
        assert!(matches!(
            SystemLayout::qubits(["A", "A"]),
            Err(Error::DuplicateLabel(l)) if l == "A"
        ));
        assert!(SystemLayout::new(["A"], vec![1]).is_err());
        assert!(SystemLayout::new(["A", "B"], vec![2]).is_err());
        assert_eq!(abc().total_dim(), 8);
        assert_eq!(
            SystemLayout::new(["A", "B"], vec![2, 3])
                .unwrap()
                .total_dim(),
            6
        );
    }

    #[test]
    fn restrict_keeps_layout_order() {
        let l = abc().restrict(&["C", "A"]).unwrap();
        assert_eq!(l.labels(), ["A", "C"]);
        assert_eq!(abc().complement(&["B"]).unwrap(), vec!["A", "C"]);
        assert!(abc().restrict(&[]).is_err());
        assert_eq!(abc().restrict(&["Z"]), Err(Error::UnknownLabel("Z".into())));
    }

    #[test]
    fn bell_marginal_is_maximally_mixed() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let v = [h, 0.0, 0.0, h].map(|x| Complex64::new(x, 0.0));
        let rho = ComplexMatrix::outer(&v);
        let layout = SystemLayout::qubits(["A", "B"]).unwrap();
        let a = partial_trace(&rho, &layout, &["A"]).unwrap();
        assert!(a.max_abs_diff(&ComplexMatrix::identity(2).scale_real(0.5)) < 1e-15);
    }

    #[test]
    fn product_marginals_on_mixed_dims() {
        let a = ComplexMatrix::from_real_diagonal(&[0.2, 0.8]);
        let b = ComplexMatrix::from_real_diagonal(&[0.5, 0.3, 0.2]);
        let layout = SystemLayout::new(["A", "B"], vec![2, 3]).unwrap();
        let ab = kron(&a, &b);
        assert!(
            partial_trace(&ab, &layout, &["B"])
                .unwrap()
                .max_abs_diff(&b)
                < 1e-15
        );
        assert!(
            partial_trace(&ab, &layout, &["A"])
                .unwrap()
                .max_abs_diff(&a)
                < 1e-15
        );
        assert!(
            partial_trace(&ab, &layout, &["B", "A"])
                .unwrap()
                .max_abs_diff(&ab)
                < 1e-15
        );
    }

    #[test]
    fn partial_trace_errors() {
        let layout = abc();
        let wrong = ComplexMatrix::identity(4);
        assert!(matches!(
            partial_trace(&wrong, &layout, &["A"]),
            Err(Error::DimensionMismatch {
                expected: 8,
                found: 4
            })
        ));
        let ok = ComplexMatrix::identity(8);
        assert_eq!(
            partial_trace(&ok, &layout, &["D"]),
            Err(Error::UnknownLabel("D".into()))
        );
    }

    #[test]
    fn local_application_matches_explicit_embedding() {
        let layout = abc();
        let rho = ComplexMatrix::from_fn(8, 8, |r, c| {
            Complex64::new((r * 8 + c) as f64, (r as f64) - (c as f64))
        });
        let op =
            ComplexMatrix::from_fn(2, 2, |r, c| Complex64::new(r as f64 + 1.0, c as f64 - 0.5));
        let i2 = ComplexMatrix::identity(2);
        let embedded = kron(&kron(&i2, &op), &i2);
        let left = apply_local_left(&rho, &layout, "B", &op).unwrap();
        let right = apply_local_right(&rho, &layout, "B", &op).unwrap();
        assert!(left.max_abs_diff(&(&embedded * &rho)) < 1e-12);
        assert!(right.max_abs_diff(&(&rho * &embedded)) < 1e-12);
    }
}
