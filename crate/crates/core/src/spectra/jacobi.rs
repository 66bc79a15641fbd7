//! Cyclic Jacobi eigensolver for small real symmetric matrices.
//!
//! Used only where an eigenvector is needed (relocation hypotheses); every
//! decision about indices goes through the exact routines.

use crate::error::{Error, Result};
use crate::graph::SignedCompleteGraph;

pub const OFF_DIAGONAL_TOLERANCE: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone)]
pub struct FloatSpectrum {
    /// Descending.
    pub eigenvalues: Vec<f64>,
    /// `eigenvectors[k]` is the unit eigenvector for `eigenvalues[k]`.
    pub eigenvectors: Vec<Vec<f64>>,
    /// `max |A x - λ x|` over all pairs.
    pub residual: f64,
}

fn off_norm(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i][j] * a[i][j];
            }
        }
    }
    s.sqrt()
}

pub fn symmetric_eigen(matrix: &[Vec<f64>]) -> Result<FloatSpectrum> {
    let n = matrix.len();
    let mut a: Vec<Vec<f64>> = matrix.to_vec();
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    let mut sweeps = 0;
    while off_norm(&a) >= OFF_DIAGONAL_TOLERANCE {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NumericFailure {
                sweeps,
                off_norm: off_norm(&a),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for row in v.iter_mut() {
                    let (vp, vq) = (row[p], row[q]);
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j][j].total_cmp(&a[i][i]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[i][i]).collect();
    let eigenvectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&i| (0..n).map(|r| v[r][i]).collect())
        .collect();
    let residual = eigenvalues
        .iter()
        .zip(&eigenvectors)
        .map(|(&lambda, x)| {
            (0..n)
                .map(|r| {
                    let ax: f64 = (0..n).map(|c| matrix[r][c] * x[c]).sum();
                    (ax - lambda * x[r]).abs()
                })
                .fold(0.0, f64::max)
        })
        .fold(0.0, f64::max);
    Ok(FloatSpectrum {
        eigenvalues,
        eigenvectors,
        residual,
    })
}

pub fn numeric_spectrum(g: &SignedCompleteGraph) -> Result<FloatSpectrum> {
    let a: Vec<Vec<f64>> = g
        .adjacency_matrix()
        .into_iter()
        .map(|row| row.into_iter().map(|x| x as f64).collect())
        .collect();
    symmetric_eigen(&a)
}
