//! Floating-point spectral oracles. Nothing here feeds an exact identity
//! check; these only cross-examine exact results.

use num::{BigInt, ToPrimitive};

use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, RatMatrix};

pub const DEFAULT_JACOBI_TOL: f64 = 1e-12;
pub const MAX_JACOBI_SWEEPS: usize = 100;

/// How the Perron value was obtained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PerronEstimate {
    /// All row sums agree, which pins the Perron root exactly.
    EqualRowSums(f64),
    Iterated {
        value: f64,
        iterations: usize,
    },
}

impl PerronEstimate {
    pub fn value(&self) -> f64 {
        match *self {
            PerronEstimate::EqualRowSums(v) => v,
            PerronEstimate::Iterated { value, .. } => value,
        }
    }
}

/// Common row sum of a matrix, when every row sums to the same value.
pub fn common_row_sum(m: &IntMatrix) -> Option<BigInt> {
    let sums = m.row_sums();
    let first = sums.first()?.clone();
    sums.iter().all(|s| *s == first).then_some(first)
}

/// Perron root of a nonnegative matrix whose digraph is strongly connected.
///
/// Equal row sums return that sum exactly. Otherwise iterates
/// `v <- M v / |M v|_inf` until successive growth factors agree within `tol`.
pub fn power_iteration(m: &IntMatrix, tol: f64, max_iter: usize) -> Result<PerronEstimate> {
    let n = m.ensure_square()?;
    if let Some(s) = common_row_sum(m) {
        return Ok(PerronEstimate::EqualRowSums(s.to_f64().unwrap_or(f64::INFINITY)));
    }
    let dense: Vec<f64> = m.entries().iter().map(|x| x.to_f64().unwrap_or(0.0)).collect();
    let mut v = vec![1.0; n];
    let mut prev = f64::NAN;
    for it in 1..=max_iter {
        let mut w = vec![0.0; n];
        for i in 0..n {
            let row = &dense[i * n..(i + 1) * n];
            w[i] = row.iter().zip(&v).map(|(a, b)| a * b).sum();
        }
        let norm = w.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
        if norm == 0.0 {
            return Ok(PerronEstimate::Iterated {
                value: 0.0,
                iterations: it,
            });
        }
        for (vi, wi) in v.iter_mut().zip(&w) {
            *vi = wi / norm;
        }
        if (norm - prev).abs() <= tol * norm.max(1.0) {
            return Ok(PerronEstimate::Iterated {
                value: norm,
                iterations: it,
            });
        }
        prev = norm;
    }
    Err(Error::NonConvergence(max_iter))
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
pub fn jacobi_eigen(m: &RatMatrix, tol: f64) -> Result<Vec<f64>> {
    let n = m.ensure_square()?;
    for i in 0..n {
        for j in i + 1..n {
            if m[(i, j)] != m[(j, i)] {
                return Err(Error::Asymmetric);
            }
        }
    }
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|i| m.row(i).iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect())
        .collect();
    let scale = a
        .iter()
        .flatten()
        .fold(0.0f64, |acc, x| acc.max(x.abs()))
        .max(1.0);
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
    while off(&a) > tol * scale {
        if sweeps == MAX_JACOBI_SWEEPS {
            return Err(Error::SweepCapExceeded(MAX_JACOBI_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < f64::MIN_POSITIVE {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(|x, y| x.total_cmp(y));
    Ok(eig)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::int;

    #[test]
    fn scalar_and_swap() {
        let one = IntMatrix::from_i64_rows(&[&[2]]);
        assert_eq!(power_iteration(&one, 1e-12, 100).unwrap().value(), 2.0);
        let swap = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            power_iteration(&swap, 1e-12, 100).unwrap(),
            PerronEstimate::EqualRowSums(1.0)
        );
    }

    #[test]
    fn iterates_unequal_rows() {
        // Perron root of [[2,1],[1,1]] is (3+sqrt5)/2
        let m = IntMatrix::from_i64_rows(&[&[2, 1], &[1, 1]]);
        let est = power_iteration(&m, 1e-13, 1000).unwrap();
        assert!(matches!(est, PerronEstimate::Iterated { .. }));
        assert!((est.value() - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-9);
    }

    #[test]
    fn periodic_unequal_rows_do_not_converge() {
        // bipartite with unequal degrees: ratio oscillates
        let m = IntMatrix::from_i64_rows(&[&[0, 2], &[1, 0]]);
        assert_eq!(power_iteration(&m, 1e-12, 50), Err(Error::NonConvergence(50)));
    }

    #[test]
    fn jacobi_diag_and_c4() {
        let d = RatMatrix::from_fn(3, 3, |i, j| if i == j { int(i as i64 + 1) } else { int(0) });
        assert_eq!(jacobi_eigen(&d, DEFAULT_JACOBI_TOL).unwrap(), vec![1.0, 2.0, 3.0]);
        let c4 = RatMatrix::from_fn(4, 4, |i, j| {
            if (i + 1) % 4 == j || (j + 1) % 4 == i {
                int(1)
            } else {
                int(0)
            }
        });
        let e = jacobi_eigen(&c4, DEFAULT_JACOBI_TOL).unwrap();
        for (got, want) in e.iter().zip([-2.0, 0.0, 0.0, 2.0]) {
            assert!((got - want).abs() < 1e-10, "{e:?}");
        }
    }

    #[test]
    fn jacobi_rejects_asymmetric() {
        let m = RatMatrix::from_fn(2, 2, |i, j| int((i * 2 + j) as i64));
        assert_eq!(jacobi_eigen(&m, DEFAULT_JACOBI_TOL), Err(Error::Asymmetric));
    }
}
