//! Brute-force numeric verification: a cyclic Jacobi eigensolver for
//! dense symmetric matrices and an exact-vs-numeric spectrum diff.

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::spectrum::Spectrum;

pub const DEFAULT_OFFDIAG_TOL: f64 = 1e-12;
pub const DEFAULT_COMPARE_TOL: f64 = 1e-8;
const MAX_SWEEPS: usize = 100;

/// All eigenvalues of a symmetric matrix, ascending, via cyclic Jacobi
/// rotations. The matrix is pre-scaled by its largest absolute entry and
/// sweeps stop once the off-diagonal Frobenius mass of the scaled matrix
/// drops below `tol`.
pub fn symmetric_eigenvalues(matrix: &SquareMatrix, tol: f64) -> Result<Vec<f64>> {
    let mut a = matrix.to_f64();
    let n = matrix.order();
    if n <= 1 {
        return Ok(a.first().map(|row| row[0]).into_iter().collect());
    }
    let scale = a
        .iter()
        .flatten()
        .fold(0.0f64, |acc, &x| acc.max(x.abs()));
    if scale > 0.0 {
        for row in a.iter_mut() {
            for x in row.iter_mut() {
                *x /= scale;
            }
        }
    }

    let off = |a: &Vec<Vec<f64>>| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i][j] * a[i][j];
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    while off(&a) > tol {
        if sweeps >= MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps });
        }
        sweeps += 1;
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // rotate rows/columns p and q
                for i in 0..n {
                    let aip = a[i][p];
                    let aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for i in 0..n {
                    let api = a[p][i];
                    let aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
            }
        }
    }

    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i][i] * scale).collect();
    eigenvalues.sort_by(|x, y| x.partial_cmp(y).unwrap());
    Ok(eigenvalues)
}

/// Elementwise comparison of an exact spectrum against numeric
/// eigenvalues, both taken in ascending order.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub pass: bool,
    pub worst_deviation: f64,
    pub first_mismatch: Option<usize>,
}

pub fn compare_spectra(exact: &Spectrum, numeric: &[f64], tol: f64) -> Result<ComparisonReport> {
    let exact_values = exact.expand_f64();
    if exact_values.len() != numeric.len() {
        return Err(Error::CountMismatch {
            expected: exact_values.len(),
            got: numeric.len(),
        });
    }
    let mut worst = 0.0f64;
    let mut first_mismatch = None;
    for (i, (e, v)) in exact_values.iter().zip(numeric).enumerate() {
        let dev = (e - v).abs();
        worst = worst.max(dev);
        if dev > tol && first_mismatch.is_none() {
            first_mismatch = Some(i);
        }
    }
    Ok(ComparisonReport {
        pass: first_mismatch.is_none(),
        worst_deviation: worst,
        first_mismatch,
    })
}
