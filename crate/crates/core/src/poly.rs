//! Univariate polynomials over the rationals, doubling as truncated power
//! series.
//!
//! A [`Poly`] without a truncation order is an ordinary polynomial whose
//! leading coefficient is nonzero (or which is zero). With a truncation order
//! `n` it stands for a power series known modulo `u^(n+1)`; coefficients above
//! `n` are never stored.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, Complex, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Rational;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
    truncation: Option<usize>,
}

impl Poly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Self {
            coeffs,
            truncation: None,
        };
        p.normalize();
        p
    }

    /// A power series known modulo `u^(order+1)`.
    pub fn series(coeffs: Vec<Rational>, order: usize) -> Self {
        let mut p = Self {
            coeffs,
            truncation: Some(order),
        };
        p.normalize();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * u^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `u - r`
    pub fn linear_root(r: Rational) -> Self {
        Self::new(vec![-r, Rational::one()])
    }

    fn normalize(&mut self) {
        if let Some(order) = self.truncation {
            self.coeffs.truncate(order + 1);
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Drops the truncation marker, treating the stored coefficients as a polynomial.
    pub fn into_polynomial(mut self) -> Self {
        self.truncation = None;
        self
    }

    /// Reduces modulo `u^(order+1)` and marks the result as a series.
    pub fn truncate(&self, order: usize) -> Self {
        let order = self.truncation.map_or(order, |t| t.min(order));
        Self::series(self.coeffs.clone(), order)
    }

    fn combine_truncation(a: Option<usize>, b: Option<usize>) -> Option<usize> {
        match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, None) => x,
            (None, y) => y,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            truncation: self.truncation,
        }
        .normalized()
    }

    fn normalized(mut self) -> Self {
        self.normalize();
        self
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = match self.truncation {
            Some(t) => Self::one().truncate(t),
            None => Self::one(),
        };
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation at an exact point.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_complex(&self, z: Complex<f64>) -> Complex<f64> {
        self.coeffs.iter().rev().fold(Complex::new(0.0, 0.0), |acc, c| {
            acc * z + Complex::new(c.to_f64().unwrap_or(f64::NAN), 0.0)
        })
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
            .collect();
        Self {
            coeffs,
            truncation: self.truncation.map(|t| t.saturating_sub(1)),
        }
        .normalized()
    }

    /// Formal antiderivative with zero constant term.
    pub fn integral(&self) -> Self {
        let mut coeffs = vec![Rational::zero()];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / Rational::from_integer(BigInt::from(k + 1)));
        }
        Self {
            coeffs,
            truncation: self.truncation.map(|t| t + 1),
        }
        .normalized()
    }

    /// Polynomial long division. Errors on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let lead = divisor.leading().ok_or(Error::Singular)?.clone();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone().into_polynomial()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Exact quotient, `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Number of times `(u - r)` divides the polynomial. The zero polynomial
    /// reports `usize::MAX`.
    pub fn root_multiplicity(&self, r: &Rational) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let factor = Poly::linear_root(r.clone());
        let mut p = self.clone().into_polynomial();
        let mut count = 0;
        while let Some(q) = p.exact_div(&factor) {
            p = q;
            count += 1;
        }
        count
    }

    /// `u^len * p(1/u)` for a polynomial of degree at most `len`.
    pub fn reversed(&self, len: usize) -> Poly {
        let mut coeffs = vec![Rational::zero(); len + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            assert!(k <= len, "reversal length below degree");
            coeffs[len - k] = c.clone();
        }
        Poly::new(coeffs)
    }

    /// Ascending coefficients separated by spaces (`p/q`, or `p` for integers).
    pub fn to_text(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn to_json_coeffs(&self) -> Vec<JsonCoeff> {
        self.coeffs
            .iter()
            .map(|c| JsonCoeff {
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect()
    }

    pub fn from_json_coeffs(coeffs: &[JsonCoeff]) -> std::result::Result<Poly, String> {
        coeffs
            .iter()
            .map(|c| {
                let num = BigInt::from_str(&c.num).map_err(|e| e.to_string())?;
                let den = BigInt::from_str(&c.den).map_err(|e| e.to_string())?;
                if den.is_zero() || den.is_negative() {
                    return Err(format!("denominator must be positive, got {den}"));
                }
                Ok(Rational::new(num, den))
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Poly::new)
    }
}

/// JSON form of a single coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonCoeff {
    pub num: String,
    pub den: String,
}

impl FromStr for Poly {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        s.split_whitespace()
            .map(|tok| Rational::from_str(tok).map_err(|_| format!("bad coefficient {tok:?}")))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Poly::new)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.truncation {
            Some(t) => write!(f, "Poly[{}] mod u^{}", self.to_text(), t + 1),
            None => write!(f, "Poly[{}]", self.to_text()),
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Poly {
            coeffs,
            truncation: Poly::combine_truncation(self.truncation, rhs.truncation),
        }
        .normalized()
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            truncation: self.truncation,
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly {
                coeffs: Vec::new(),
                truncation: Poly::combine_truncation(self.truncation, rhs.truncation),
            };
        }
        let truncation = Poly::combine_truncation(self.truncation, rhs.truncation);
        let mut len = self.coeffs.len() + rhs.coeffs.len() - 1;
        if let Some(t) = truncation {
            len = len.min(t + 1);
        }
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Poly { coeffs, truncation }.normalized()
    }
}

/// Free-function spellings of the arithmetic, matching the series API.
pub fn poly_add(a: &Poly, b: &Poly) -> Poly {
    a + b
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    a * b
}

pub fn poly_pow(a: &Poly, exp: u32) -> Poly {
    a.pow(exp)
}

pub fn poly_eval(a: &Poly, x: &Rational) -> Rational {
    a.eval(x)
}

fn require_constant(p: &Poly, expected: &Rational, what: &'static str) -> Result<()> {
    if &p.coeff(0) == expected {
        Ok(())
    } else {
        Err(Error::ConstantTerm(what))
    }
}

/// Multiplicative inverse modulo `u^(order+1)`; requires constant term 1.
pub fn series_invert(p: &Poly, order: usize) -> Result<Poly> {
    require_constant(p, &Rational::one(), "series_invert needs constant term 1")?;
    let mut inv = vec![Rational::zero(); order + 1];
    inv[0] = Rational::one();
    for n in 1..=order {
        let mut acc = Rational::zero();
        for k in 1..=n {
            let pk = p.coeff(k);
            if !pk.is_zero() {
                acc += pk * &inv[n - k];
            }
        }
        inv[n] = -acc;
    }
    Ok(Poly::series(inv, order))
}

/// Formal logarithm modulo `u^(order+1)`; requires constant term 1.
pub fn series_log(p: &Poly, order: usize) -> Result<Poly> {
    require_constant(p, &Rational::one(), "series_log needs constant term 1")?;
    let inv = series_invert(p, order)?;
    let dlog = &p.truncate(order).derivative() * &inv;
    Ok(dlog.integral().truncate(order))
}

/// Formal exponential modulo `u^(order+1)`; requires constant term 0.
///
/// Uses `e' = f' e`, i.e. `n e_n = sum_{k=1..n} k f_k e_{n-k}`.
pub fn series_exp(p: &Poly, order: usize) -> Result<Poly> {
    require_constant(p, &Rational::zero(), "series_exp needs constant term 0")?;
    let mut e = vec![Rational::zero(); order + 1];
    e[0] = Rational::one();
    for n in 1..=order {
        let mut acc = Rational::zero();
        for k in 1..=n {
            let fk = p.coeff(k);
            if !fk.is_zero() {
                acc += Rational::from_integer(BigInt::from(k)) * fk * &e[n - k];
            }
        }
        e[n] = acc / Rational::from_integer(BigInt::from(n));
    }
    Ok(Poly::series(e, order))
}

/// Newton-form interpolation through `(x_i, y_i)` with distinct nodes.
pub fn interpolate(points: &[(Rational, Rational)]) -> Poly {
    let n = points.len();
    let mut dd: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &points[i].0 - &points[i - level].0;
            dd[i] = num / den;
        }
    }
    let mut result = Poly::zero();
    for i in (0..n).rev() {
        result = &(&result * &Poly::linear_root(points[i].0.clone())) + &Poly::constant(dd[i].clone());
    }
    result
}

/// Interpolation nodes `0, 1, -1, 2, -2, ...`.
pub fn interpolation_nodes(count: usize) -> Vec<BigInt> {
    (0..count)
        .map(|i| {
            let h = i64::try_from(i.div_ceil(2)).expect("node index fits i64");
            BigInt::from(if i % 2 == 1 { h } else { -h })
        })
        .collect()
}
