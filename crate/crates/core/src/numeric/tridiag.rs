//! Symmetric tridiagonal eigenproblems: Sturm-sequence bisection for the
//! lowest eigenvalues and inverse iteration for their eigenvectors.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalMatrix {
    diagonal: Vec<f64>,
    off_diagonal: Vec<f64>,
}

impl TridiagonalMatrix {
    pub fn new(diagonal: Vec<f64>, off_diagonal: Vec<f64>) -> Result<Self> {
        if diagonal.is_empty() || off_diagonal.len() + 1 != diagonal.len() {
            return Err(Error::InvalidGrid(format!(
                "tridiagonal shape mismatch: {} diagonal, {} off-diagonal entries",
                diagonal.len(),
                off_diagonal.len()
            )));
        }
        Ok(Self {
            diagonal,
            off_diagonal,
        })
    }

    pub fn dim(&self) -> usize {
        self.diagonal.len()
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.diagonal
    }

    pub fn off_diagonal(&self) -> &[f64] {
        &self.off_diagonal
    }

    /// Gershgorin interval containing the whole spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.dim();
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for i in 0..n {
            let left = if i > 0 {
                self.off_diagonal[i - 1].abs()
            } else {
                0.0
            };
            let right = if i + 1 < n {
                self.off_diagonal[i].abs()
            } else {
                0.0
            };
            lo = lo.min(self.diagonal[i] - left - right);
            hi = hi.max(self.diagonal[i] + left + right);
        }
        (lo, hi)
    }

    /// `y = T x`
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut y = self.diagonal[i] * x[i];
                if i > 0 {
                    y += self.off_diagonal[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    y += self.off_diagonal[i] * x[i + 1];
                }
                y
            })
            .collect()
    }

    /// Number of eigenvalues strictly below `shift`: the count of negative
    /// pivots in the `LDLᵀ` factorization of `T - shift·I`.
    pub fn sturm_count(&self, shift: f64) -> usize {
        let pivmin = f64::MIN_POSITIVE
            * self
                .off_diagonal
                .iter()
                .fold(1.0f64, |acc, e| acc.max(e * e));
        let mut count = 0;
        let mut q = 1.0;
        for i in 0..self.dim() {
            let coupling = if i > 0 {
                self.off_diagonal[i - 1].powi(2) / q
            } else {
                0.0
            };
            q = self.diagonal[i] - shift - coupling;
            if q.abs() < pivmin {
                q = -pivmin;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }
}

/// Bisection stops once the bracket is this narrow relative to `max(1, |λ|)`.
pub const BISECTION_TOLERANCE: f64 = 1e-12;

/// The `k` smallest eigenvalues in ascending order.
pub fn tridiagonal_eigenvalues(m: &TridiagonalMatrix, k: usize) -> Result<Vec<f64>> {
    if k == 0 || k > m.dim() {
        return Err(Error::TooManyEigenvalues {
            requested: k,
            size: m.dim(),
        });
    }
    let (g_lo, g_hi) = m.gershgorin();
    let pad = 1e-12 * g_lo.abs().max(g_hi.abs()).max(1.0);
    let (g_lo, g_hi) = (g_lo - pad, g_hi + pad);

    let mut values = Vec::with_capacity(k);
    let mut lo = g_lo;
    for j in 0..k {
        // λ_j ∈ [lo, hi) while sturm_count(lo) ≤ j < sturm_count(hi)
        let mut hi = g_hi;
        loop {
            let mid = 0.5 * (lo + hi);
            if hi - lo <= BISECTION_TOLERANCE * mid.abs().max(1.0) || mid <= lo || mid >= hi {
                values.push(mid);
                break;
            }
            if m.sturm_count(mid) <= j {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo = values[j] - BISECTION_TOLERANCE * values[j].abs().max(1.0);
        if lo < g_lo || m.sturm_count(lo) > j + 1 {
            lo = g_lo;
        }
    }
    Ok(values)
}

/// LU factors of a tridiagonal matrix with partial pivoting (`dgttrf` layout).
struct TridiagonalLu {
    lower: Vec<f64>,
    diag: Vec<f64>,
    upper: Vec<f64>,
    upper2: Vec<f64>,
    swapped: Vec<bool>,
}

impl TridiagonalLu {
    fn factor(m: &TridiagonalMatrix, shift: f64) -> Self {
        let n = m.dim();
        let mut lower = m.off_diagonal.clone();
        let mut diag: Vec<f64> = m.diagonal.iter().map(|d| d - shift).collect();
        let mut upper = m.off_diagonal.clone();
        let mut upper2 = vec![0.0; n.saturating_sub(2)];
        let mut swapped = vec![false; n.saturating_sub(1)];

        for i in 0..n.saturating_sub(1) {
            if diag[i].abs() >= lower[i].abs() {
                if diag[i] != 0.0 {
                    let fact = lower[i] / diag[i];
                    lower[i] = fact;
                    diag[i + 1] -= fact * upper[i];
                }
            } else {
                let fact = diag[i] / lower[i];
                diag[i] = lower[i];
                lower[i] = fact;
                let temp = upper[i];
                upper[i] = diag[i + 1];
                diag[i + 1] = temp - fact * diag[i + 1];
                if i + 2 < n {
                    upper2[i] = upper[i + 1];
                    upper[i + 1] *= -fact;
                }
                swapped[i] = true;
            }
        }

        let scale = m
            .diagonal
            .iter()
            .chain(&m.off_diagonal)
            .fold(0.0f64, |a, v| a.max(v.abs()));
        let floor = f64::EPSILON * scale.max(f64::MIN_POSITIVE);
        for d in &mut diag {
            if d.abs() < floor {
                *d = if *d < 0.0 { -floor } else { floor };
            }
        }
        Self {
            lower,
            diag,
            upper,
            upper2,
            swapped,
        }
    }

    fn solve(&self, b: &mut [f64]) {
        let n = self.diag.len();
        for i in 0..n.saturating_sub(1) {
            if self.swapped[i] {
                let temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - self.lower[i] * b[i];
            } else {
                b[i + 1] -= self.lower[i] * b[i];
            }
        }
        b[n - 1] /= self.diag[n - 1];
        if n > 1 {
            b[n - 2] = (b[n - 2] - self.upper[n - 2] * b[n - 1]) / self.diag[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            b[i] = (b[i] - self.upper[i] * b[i + 1] - self.upper2[i] * b[i + 2]) / self.diag[i];
        }
    }
}

pub const INVERSE_ITERATION_CAP: usize = 50;

/// Eigenvector for the eigenvalue nearest `shift`, unit Euclidean norm,
/// sign chosen so the first non-negligible component is positive.
pub fn inverse_iteration(m: &TridiagonalMatrix, shift: f64) -> Vec<f64> {
    let n = m.dim();
    let lu = TridiagonalLu::factor(m, shift);
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    for _ in 0..INVERSE_ITERATION_CAP {
        let mut y = x.clone();
        lu.solve(&mut y);
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        y.iter_mut().for_each(|v| *v /= norm);
        let overlap: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        x = y;
        if (1.0 - overlap.abs()) < 1e-14 {
            break;
        }
    }
    let peak = x.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    if let Some(first) = x.iter().find(|v| v.abs() > 1e-8 * peak) {
        if *first < 0.0 {
            x.iter_mut().for_each(|v| *v = -*v);
        }
    }
    x
}
