//! Exact determinants, inverses and characteristic polynomials.

use num::integer::Integer;
use num::{BigInt, One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, Matrix, RatMatrix, Rational, Scalar};
use crate::poly::{interpolate, interpolation_nodes, Poly};

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn det_int(m: &IntMatrix) -> Result<BigInt> {
    let n = m.ensure_square()?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap(k, p);
            sign = !sign;
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                // exact by Sylvester's identity
                let v = pivot * &row[j] - &lead * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign { -d } else { d })
}

/// Exact determinant of a rational matrix.
///
/// Each row is scaled by the lcm of its denominators, the resulting integer
/// matrix goes through Bareiss elimination, and the row factors are divided
/// back out.
pub fn det_exact(m: &RatMatrix) -> Result<Rational> {
    let n = m.ensure_square()?;
    let mut scale = BigInt::one();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let lcm = m.row(i).iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        rows.push(
            m.row(i)
                .iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect::<Vec<_>>(),
        );
        scale *= lcm;
    }
    let im = IntMatrix::from_rows(rows)?;
    Ok(Rational::new(det_int(&im)?, scale))
}

/// Exact inverse by Gauss-Jordan elimination over the rationals.
pub fn inverse_exact(m: &RatMatrix) -> Result<RatMatrix> {
    let n = m.ensure_square()?;
    let mut a: Vec<Vec<Rational>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !a[i][col].is_zero()).ok_or(Error::Singular)?;
        a.swap(col, p);
        inv.swap(col, p);
        let piv = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &piv;
            inv[col][j] /= &piv;
        }
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for j in 0..n {
                if !a[col][j].is_zero() {
                    let t = &f * &a[col][j];
                    a[i][j] -= t;
                }
                if !inv[col][j].is_zero() {
                    let t = &f * &inv[col][j];
                    inv[i][j] -= t;
                }
            }
        }
    }
    RatMatrix::from_rows(inv)
}

/// `det(lambda I - m)`, interpolated from Bareiss determinants at the nodes
/// `0, 1, -1, 2, -2, ...`.
pub fn char_poly(m: &IntMatrix) -> Result<Poly> {
    let n = m.ensure_square()?;
    let nodes = interpolation_nodes(n + 1);
    let values: Vec<Result<(Rational, Rational)>> = nodes
        .par_iter()
        .map(|x| {
            let shifted = IntMatrix::from_fn(n, n, |i, j| {
                let e = -m[(i, j)].clone();
                if i == j {
                    e + x
                } else {
                    e
                }
            });
            let d = det_int(&shifted)?;
            Ok((Rational::from_integer(x.clone()), Rational::from_integer(d)))
        })
        .collect();
    let points = values.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(interpolate(&points))
}

/// `det(I - u m)` as a polynomial in `u`: the reversed characteristic polynomial.
pub fn det_one_minus_u(m: &IntMatrix) -> Result<Poly> {
    let n = m.ensure_square()?;
    Ok(char_poly(m)?.reversed(n))
}

/// `det(m0 + u m1 + u^2 m2)` as an exact polynomial of degree at most `2s`.
pub fn det_poly_matrix(m0: &RatMatrix, m1: &RatMatrix, m2: &RatMatrix) -> Result<Poly> {
    let s = m0.ensure_square()?;
    for other in [m1, m2] {
        if other.rows() != s || other.cols() != s {
            return Err(Error::DimensionMismatch(format!(
                "matrix pencil terms must all be {s}x{s}, got {}x{}",
                other.rows(),
                other.cols()
            )));
        }
    }
    let nodes = interpolation_nodes(2 * s + 1);
    let values: Vec<Result<(Rational, Rational)>> = nodes
        .par_iter()
        .map(|x| {
            let u = Rational::from_integer(x.clone());
            let u2 = &u * &u;
            let at = RatMatrix::from_fn(s, s, |i, j| &m0[(i, j)] + &u * &m1[(i, j)] + &u2 * &m2[(i, j)]);
            Ok((u, det_exact(&at)?))
        })
        .collect();
    let points = values.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(interpolate(&points))
}

/// Entrywise sum of scaled matrices, `sum c_i M_i`.
pub fn linear_combination<T: Scalar>(terms: &[(T, &Matrix<T>)]) -> Result<Matrix<T>> {
    let (first_c, first) = terms
        .first()
        .ok_or_else(|| Error::DimensionMismatch("empty combination".into()))?;
    let mut acc = first.scale(first_c);
    for (c, m) in &terms[1..] {
        acc = acc.try_add(&m.scale(c))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{int, rat};

    /// Cofactor expansion along the first row.
    fn cofactor_det(m: &RatMatrix) -> Rational {
        let n = m.rows();
        if n == 0 {
            return Rational::one();
        }
        let mut acc = Rational::zero();
        for j in 0..n {
            let minor = RatMatrix::from_fn(n - 1, n - 1, |r, c| {
                m[(r + 1, if c < j { c } else { c + 1 })].clone()
            });
            let term = &m[(0, j)] * cofactor_det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn identity_and_two_by_two() {
        assert_eq!(det_exact(&RatMatrix::identity(3)).unwrap(), int(1));
        let m = RatMatrix::from_rows(vec![vec![rat(1, 2), int(1)], vec![int(1), rat(1, 2)]]).unwrap();
        assert_eq!(det_exact(&m).unwrap(), rat(-3, 4));
        assert_eq!(det_exact(&RatMatrix::zeros(0, 0)).unwrap(), int(1));
    }

    #[test]
    fn non_square_rejected() {
        assert!(matches!(
            det_exact(&RatMatrix::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
        assert!(char_poly(&IntMatrix::zeros(3, 2)).is_err());
    }

    #[test]
    fn bareiss_needs_pivoting() {
        let m = IntMatrix::from_i64_rows(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        assert_eq!(det_int(&m).unwrap(), BigInt::from(-2));
        assert_eq!(det_int(&IntMatrix::zeros(2, 2)).unwrap(), BigInt::zero());
    }

    #[test]
    fn char_poly_small_cases() {
        assert_eq!(
            char_poly(&IntMatrix::zeros(2, 2)).unwrap(),
            Poly::from_ints(&[0, 0, 1])
        );
        let swap = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(char_poly(&swap).unwrap(), Poly::from_ints(&[-1, 0, 1]));
        assert_eq!(char_poly(&IntMatrix::zeros(0, 0)).unwrap(), Poly::one());
    }

    #[test]
    fn pencil_small_cases() {
        let i2 = RatMatrix::identity(2);
        let z2 = RatMatrix::zeros(2, 2);
        assert_eq!(det_poly_matrix(&i2, &z2, &z2).unwrap(), Poly::one());
        let i1 = RatMatrix::identity(1);
        let m1 = RatMatrix::from_rows(vec![vec![int(-1)]]).unwrap();
        let m2 = RatMatrix::zeros(1, 1);
        assert_eq!(det_poly_matrix(&i1, &m1, &m2).unwrap(), Poly::from_ints(&[1, -1]));
        assert!(det_poly_matrix(&i2, &i1, &z2).is_err());
    }

    #[test]
    fn inverse_cases() {
        assert_eq!(
            inverse_exact(&RatMatrix::identity(3)).unwrap(),
            RatMatrix::identity(3)
        );
        let d = RatMatrix::from_rows(vec![vec![int(2), int(0)], vec![int(0), int(4)]]).unwrap();
        let expect = RatMatrix::from_rows(vec![vec![rat(1, 2), int(0)], vec![int(0), rat(1, 4)]]).unwrap();
        assert_eq!(inverse_exact(&d).unwrap(), expect);
        let s = RatMatrix::from_rows(vec![vec![int(1), int(1)], vec![int(1), int(1)]]).unwrap();
        assert_eq!(inverse_exact(&s), Err(Error::Singular));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn rat_matrix(max: usize) -> impl Strategy<Value = RatMatrix> {
            (1..=max).prop_flat_map(|n| {
                proptest::collection::vec((-6i64..=6, 1i64..=4), n * n).prop_map(move |v| {
                    RatMatrix::from_fn(n, n, |i, j| {
                        let (a, b) = v[i * n + j];
                        rat(a, b)
                    })
                })
            })
        }

        fn int_matrix(max: usize) -> impl Strategy<Value = IntMatrix> {
            (1..=max).prop_flat_map(|n| {
                proptest::collection::vec(-3i64..=3, n * n)
                    .prop_map(move |v| IntMatrix::from_fn(n, n, |i, j| BigInt::from(v[i * n + j])))
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn bareiss_matches_cofactor(m in rat_matrix(4)) {
                prop_assert_eq!(det_exact(&m).unwrap(), cofactor_det(&m));
            }

            #[test]
            fn char_poly_matches_pointwise_det(m in int_matrix(5), x in -7i64..=7) {
                let n = m.rows();
                let p = char_poly(&m).unwrap();
                let shifted = &IntMatrix::identity(n).scale(&BigInt::from(x)) - &m;
                prop_assert_eq!(p.eval(&int(x)), Rational::from_integer(det_int(&shifted).unwrap()));
            }

            #[test]
            fn pencil_matches_pointwise_det(
                a in rat_matrix(3),
                seed in proptest::collection::vec((-5i64..=5, 1i64..=5), 5),
            ) {
                let n = a.rows();
                let b = RatMatrix::from_fn(n, n, |i, j| int(((i + 2 * j) % 3) as i64 - 1));
                let c = RatMatrix::from_fn(n, n, |i, j| rat((i * j) as i64 + 1, 2));
                let p = det_poly_matrix(&a, &b, &c).unwrap();
                for (num, den) in seed {
                    let u = rat(num, den);
                    let at = RatMatrix::from_fn(n, n, |i, j| &a[(i, j)] + &u * &b[(i, j)] + &u * &u * &c[(i, j)]);
                    prop_assert_eq!(p.eval(&u), det_exact(&at).unwrap());
                }
            }

            #[test]
            fn inverse_is_two_sided(m in rat_matrix(4)) {
                if let Ok(inv) = inverse_exact(&m) {
                    let n = m.rows();
                    prop_assert_eq!(&inv * &m, RatMatrix::identity(n));
                    prop_assert_eq!(&m * &inv, RatMatrix::identity(n));
                } else {
                    prop_assert!(det_exact(&m).unwrap().is_zero());
                }
            }
        }
    }
}
