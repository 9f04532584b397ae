//! Cyclic Jacobi eigenvalue iteration for small dense symmetric matrices.

use crate::{Error, Result};

/// Eigenvalues of a real symmetric matrix, ascending. Plane rotations are
/// applied in sweeps until the off-diagonal mass drops below `tol`.
pub fn symmetric_eigenvalues(a: &[Vec<f64>], tol: f64) -> Result<Vec<f64>> {
    let n = a.len();
    for row in a {
        if row.len() != n {
            return Err(Error::Numeric("matrix is not square".into()));
        }
    }
    for p in 0..n {
        for q in p + 1..n {
            if (a[p][q] - a[q][p]).abs() > 1e-12 * (1.0 + a[p][q].abs()) {
                return Err(Error::Numeric(format!(
                    "matrix is not symmetric at ({p},{q})"
                )));
            }
        }
    }
    let mut m: Vec<Vec<f64>> = a.to_vec();
    const MAX_SWEEPS: usize = 100;
    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += m[p][q] * m[p][q];
            }
        }
        if off.sqrt() < tol {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if m[p][q].abs() < f64::MIN_POSITIVE {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[k][p];
                    let mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[p][k];
                    let mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
        }
    }
    let mut eigs: Vec<f64> = (0..n).map(|k| m[k][k]).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).unwrap());
    Ok(eigs)
}
