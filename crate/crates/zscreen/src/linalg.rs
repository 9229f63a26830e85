//! Small dense linear algebra for the statistic kernels: Gaussian
//! elimination with partial pivoting on row-major square systems.

use thiserror::Error;

#[derive(Debug, Error)]
#[error("singular matrix: pivot below threshold at elimination step {step}")]
pub struct SingularMatrix {
    pub step: usize,
}

/// Solves `a x = b` for square `a` (row-major, `n` x `n`).
///
/// A pivot smaller than 1e-12 times the largest column norm of the original
/// matrix is treated as singular.
pub fn solve(a: &[f64], n: usize, b: &[f64]) -> Result<Vec<f64>, SingularMatrix> {
    debug_assert_eq!(a.len(), n * n);
    debug_assert_eq!(b.len(), n);

    let mut m = a.to_vec();
    let mut x = b.to_vec();

    let mut max_col_norm = 0.0f64;
    for j in 0..n {
        let norm = (0..n).map(|i| m[i * n + j] * m[i * n + j]).sum::<f64>().sqrt();
        max_col_norm = max_col_norm.max(norm);
    }
    let threshold = 1e-12 * max_col_norm;

    for k in 0..n {
        let mut pivot_row = k;
        let mut pivot_abs = m[k * n + k].abs();
        for i in (k + 1)..n {
            let v = m[i * n + k].abs();
            if v > pivot_abs {
                pivot_abs = v;
                pivot_row = i;
            }
        }
        if pivot_abs <= threshold || !pivot_abs.is_finite() {
            return Err(SingularMatrix { step: k + 1 });
        }
        if pivot_row != k {
            for j in 0..n {
                m.swap(k * n + j, pivot_row * n + j);
            }
            x.swap(k, pivot_row);
        }
        let pivot = m[k * n + k];
        for i in (k + 1)..n {
            let factor = m[i * n + k] / pivot;
            if factor == 0.0 {
                continue;
            }
            for j in k..n {
                m[i * n + j] -= factor * m[k * n + j];
            }
            x[i] -= factor * x[k];
        }
    }

    for k in (0..n).rev() {
        let mut acc = x[k];
        for j in (k + 1)..n {
            acc -= m[k * n + j] * x[j];
        }
        x[k] = acc / m[k * n + k];
    }
    Ok(x)
}

/// Computes `m^T m` for row-major `m` (`rows` x `cols`), returning a
/// `cols` x `cols` row-major matrix.
pub fn gram(m: &[f64], rows: usize, cols: usize) -> Vec<f64> {
    debug_assert_eq!(m.len(), rows * cols);
    let mut g = vec![0.0; cols * cols];
    for i in 0..rows {
        let row = &m[i * cols..(i + 1) * cols];
        for a in 0..cols {
            for b in a..cols {
                g[a * cols + b] += row[a] * row[b];
            }
        }
    }
    for a in 0..cols {
        for b in 0..a {
            g[a * cols + b] = g[b * cols + a];
        }
    }
    g
}

/// Computes `m^T v` for row-major `m` (`rows` x `cols`).
pub fn mat_t_vec(m: &[f64], rows: usize, cols: usize, v: &[f64]) -> Vec<f64> {
    debug_assert_eq!(m.len(), rows * cols);
    debug_assert_eq!(v.len(), rows);
    let mut out = vec![0.0; cols];
    for i in 0..rows {
        for j in 0..cols {
            out[j] += m[i * cols + j] * v[i];
        }
    }
    out
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
