//! Ihara and cube-support zeta reciprocals, their determinant expressions,
//! and the spectra and poles of `(U^3)^+` on regular graphs.

use num::{BigInt, Complex, One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{char_poly, det_exact, det_one_minus_u, det_poly_matrix};
use crate::matrix::{int, positive_support, IntMatrix, RatMatrix, Rational};
use crate::numeric::{common_row_sum, jacobi_eigen, power_iteration, DEFAULT_JACOBI_TOL};
use crate::operators::{adjacency_matrix, cube_support, degree_matrix, OperatorBundle};
use crate::poly::Poly;
use crate::report::{assess, compare_polys, Location, Mismatch, Requirement, VerificationReport};

/// Sample points used by [`check_general_expression`] unless more are asked for.
pub const DEFAULT_SAMPLE_COUNT: usize = 3;

const POWER_ITERATION_TOL: f64 = 1e-12;
const POWER_ITERATION_CAP: usize = 100_000;

/// `det(I - u(B - J0))`.
pub fn ihara_edge_form(g: &Graph) -> Result<Poly> {
    let arcs = crate::graph::build_arc_table(g);
    let t = &crate::operators::arc_adjacency(&arcs) - &crate::operators::inverse_pairs(&arcs);
    det_one_minus_u(&t)
}

/// `(1 - u^2)^(r-1) det(I - uA + u^2(D - I))` with `r = m - n + 1`.
pub fn ihara_bass_form(g: &Graph) -> Result<Poly> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let a = adjacency_matrix(g).to_rational();
    let d = degree_matrix(g).to_rational();
    let core = det_poly_matrix(&RatMatrix::identity(n), &-&a, &(&d - &RatMatrix::identity(n)))?;
    let exponent = g.edge_count() as i64 - n as i64;
    let factor = Poly::from_ints(&[1, 0, -1]);
    if exponent >= 0 {
        Ok(&core * &factor.pow(exponent as u32))
    } else {
        core.exact_div(&factor.pow((-exponent) as u32))
            .ok_or_else(|| Error::PreconditionUnmet("vertex determinant not divisible by 1 - u^2".into()))
    }
}

/// Compares `lhs` with `base^exponent * rhs`, clearing a negative exponent
/// onto the left side so that no division is needed.
fn compare_with_power(lhs: &Poly, base: &Poly, exponent: i64, rhs: &Poly) -> Vec<Mismatch> {
    let power = base.pow(exponent.unsigned_abs() as u32);
    if exponent >= 0 {
        compare_polys(lhs, &(&power * rhs))
    } else {
        compare_polys(&(lhs * &power), rhs)
    }
}

fn excess(g: &Graph) -> i64 {
    g.edge_count() as i64 - g.vertex_count() as i64
}

fn require_regular(g: &Graph) -> Result<usize> {
    g.stats()
        .regular_degree
        .ok_or_else(|| Error::PreconditionUnmet("graph is not regular".into()))
}

/// Edge form against the vertex (three-term) determinant.
pub fn check_bass(g: &Graph) -> Result<VerificationReport> {
    let pre = assess(&g.stats(), &[Requirement::Connected]);
    let mismatches = compare_polys(&ihara_edge_form(g)?, &ihara_bass_form(g)?);
    Ok(VerificationReport::new("bass", pre, mismatches))
}

/// `det(I - u U^+)` against the edge form.
pub fn check_grover_edge_form(g: &Graph) -> Result<VerificationReport> {
    let ops = OperatorBundle::new(g)?;
    let pre = assess(&g.stats(), &[Requirement::MinDegreeAtLeast(2)]);
    let lhs = det_one_minus_u(&positive_support(&ops.u))?;
    Ok(VerificationReport::new(
        "grover-edge-form",
        pre,
        compare_polys(&lhs, &ihara_edge_form(g)?),
    ))
}

/// `det(I - u (U^3)^+)`.
pub fn z3_reciprocal(g: &Graph) -> Result<Poly> {
    det_one_minus_u(&cube_support(g)?)
}

/// The `n x n` pencil `(I, -(A^3 - (3k-4)A), A^4 - k^2 A^2 + c I)` with
/// `c = 2(k-1)(k^2-2k+2)`.
fn cube_pencil(a: &IntMatrix, k: usize) -> (RatMatrix, RatMatrix, RatMatrix) {
    let n = a.rows();
    let k = k as i64;
    let a = a.to_rational();
    let a2 = &a * &a;
    let a3 = &a2 * &a;
    let a4 = &a3 * &a;
    let id = RatMatrix::identity(n);
    let m1 = -&(&a3 - &a.scale(&int(3 * k - 4)));
    let c = 2 * (k - 1) * (k * k - 2 * k + 2);
    let m2 = &(&a4 - &a2.scale(&int(k * k))) + &id.scale(&int(c));
    (id, m1, m2)
}

/// `(1 - 4u^2)^(m-n)` times the determinant of the regular cube pencil.
pub fn z3_closed_regular(g: &Graph) -> Result<Poly> {
    let stats = g.stats();
    let pre = assess(
        &stats,
        &[Requirement::RegularAbove(2), Requirement::GirthAbove(4)],
    );
    if !pre.met {
        return Err(Error::PreconditionUnmet(pre.detail));
    }
    let k = stats.regular_degree.unwrap_or_default();
    let (m0, m1, m2) = cube_pencil(&adjacency_matrix(g), k);
    let core = det_poly_matrix(&m0, &m1, &m2)?;
    Ok(&core * &Poly::from_ints(&[1, 0, -4]).pow(excess(g) as u32))
}

/// Regular closed form against `det(I - u (U^3)^+)`.
pub fn check_regular_closed_form(g: &Graph) -> Result<VerificationReport> {
    let k = require_regular(g)?;
    let pre = assess(
        &g.stats(),
        &[Requirement::RegularAbove(2), Requirement::GirthAbove(4)],
    );
    let (m0, m1, m2) = cube_pencil(&adjacency_matrix(g), k);
    let core = det_poly_matrix(&m0, &m1, &m2)?;
    let base = Poly::from_ints(&[1, 0, -4]);
    let mismatches = compare_with_power(&z3_reciprocal(g)?, &base, excess(g), &core);
    Ok(VerificationReport::new("regular-closed-form", pre, mismatches))
}

/// `char((U^3)^+) = (x^2 - 4)^(m-n) det(Q2 - x (A^3 - (3k-4)A) + x^2 I)`.
pub fn check_cube_char_poly(g: &Graph) -> Result<VerificationReport> {
    let k = require_regular(g)?;
    let pre = assess(
        &g.stats(),
        &[Requirement::RegularAbove(2), Requirement::GirthAbove(4)],
    );
    let (id, m1, m2) = cube_pencil(&adjacency_matrix(g), k);
    let core = det_poly_matrix(&m2, &m1, &id)?;
    let lhs = char_poly(&cube_support(g)?)?;
    let mismatches = compare_with_power(&lhs, &Poly::from_ints(&[-4, 0, 1]), excess(g), &core);
    Ok(VerificationReport::new("cube-char-poly", pre, mismatches))
}

/// `char(U^+) = (x^2 - 1)^(m-n) det((k-1)I - xA + x^2 I)`.
pub fn check_support_char_poly(g: &Graph) -> Result<VerificationReport> {
    let k = require_regular(g)?;
    let ops = OperatorBundle::new(g)?;
    let pre = assess(
        &g.stats(),
        &[Requirement::Regular, Requirement::MinDegreeAtLeast(2)],
    );
    let n = g.vertex_count();
    let id = RatMatrix::identity(n);
    let core = det_poly_matrix(&id.scale(&int(k as i64 - 1)), &-&ops.a.to_rational(), &id)?;
    let lhs = char_poly(&positive_support(&ops.u))?;
    let mismatches = compare_with_power(&lhs, &Poly::from_ints(&[-1, 0, 1]), excess(g), &core);
    Ok(VerificationReport::new("support-char-poly", pre, mismatches))
}

/// `char((U^2)^+) = (x - 2)^(2(m-n)) det(A^2 + (k-2)^2 I - x(A^2 - (2k-4)I) + x^2 I)`.
pub fn check_square_support_char_poly(g: &Graph) -> Result<VerificationReport> {
    let k = require_regular(g)? as i64;
    let ops = OperatorBundle::new(g)?;
    let pre = assess(&g.stats(), &[Requirement::RegularAbove(2)]);
    let n = g.vertex_count();
    let id = RatMatrix::identity(n);
    let a = ops.a.to_rational();
    let a2 = &a * &a;
    let m0 = &a2 + &id.scale(&int((k - 2) * (k - 2)));
    let m1 = -&(&a2 - &id.scale(&int(2 * k - 4)));
    let core = det_poly_matrix(&m0, &m1, &id)?;
    let lhs = char_poly(&positive_support(&(&ops.u * &ops.u)))?;
    let mismatches = compare_with_power(&lhs, &Poly::from_ints(&[-2, 1]), 2 * excess(g), &core);
    Ok(VerificationReport::new(
        "square-support-char-poly",
        pre,
        mismatches,
    ))
}

/// Evaluates the vertex-level expression for `det(I - u (U^3)^+)` on a graph
/// with minimum degree above 2 and girth above 4, at a rational point `u`.
///
/// With `S = A^3 - (D-2I)A - AD` the value is
/// `(1-4u^2)^(m-2n) det(M + u^2 X W^-1 Y) det(W)` where
/// `M = I + u(D-2I)A - 2u^2(A^2 - 2D + 2I)`,
/// `X = (D-I)A^2 - D^2 + 2D - 2uS`,
/// `W = I - uS + 2u^2((D-I)A^2 - D^2 + 2D - 2I)` and
/// `Y = A^2 - 2u(D-2I)A - 2D`.
///
/// The product is evaluated as `det [[M, uX], [-uY, W]]`, which needs no
/// inverse of `W`. Returns [`Error::Singular`] only at `u = +-1/2` when
/// `m < 2n`.
pub fn z3_general_eval(g: &Graph, u: &Rational) -> Result<Rational> {
    let pre = assess(
        &g.stats(),
        &[Requirement::MinDegreeAbove(2), Requirement::GirthAbove(4)],
    );
    if !pre.met {
        return Err(Error::PreconditionUnmet(pre.detail));
    }
    general_expression(g, u)
}

fn general_expression(g: &Graph, u: &Rational) -> Result<Rational> {
    let n = g.vertex_count();
    let id = RatMatrix::identity(n);
    let a = adjacency_matrix(g).to_rational();
    let d = degree_matrix(g).to_rational();
    let two = int(2);
    let u2 = u * u;

    let a2 = &a * &a;
    let a3 = &a2 * &a;
    let d_2 = &d - &id.scale(&two);
    let d_1 = &d - &id;
    let s = &(&a3 - &(&d_2 * &a)) - &(&a * &d);
    let q = &(&(&d_1 * &a2) - &(&d * &d)) + &d.scale(&two);

    let m =
        &(&id + &(&d_2 * &a).scale(u)) - &(&(&a2 - &d.scale(&two)) + &id.scale(&two)).scale(&(&two * &u2));
    let x = &q - &s.scale(&(&two * u));
    let w = &(&id - &s.scale(u)) + &(&q - &id.scale(&two)).scale(&(&two * &u2));
    let y = &(&a2 - &(&d_2 * &a).scale(&(&two * u))) - &d.scale(&two);

    // det(W) det(M + u^2 X W^-1 Y) as one block determinant, so that points
    // where W alone is singular still evaluate.
    let block = RatMatrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
        (true, true) => m[(i, j)].clone(),
        (true, false) => &x[(i, j - n)] * u,
        (false, true) => -(&y[(i - n, j)] * u),
        (false, false) => w[(i - n, j - n)].clone(),
    });
    let base = Rational::one() - int(4) * &u2;
    let exponent = g.edge_count() as i64 - 2 * n as i64;
    if base.is_zero() && exponent < 0 {
        return Err(Error::Singular);
    }
    let mut factor = Rational::one();
    for _ in 0..exponent.unsigned_abs() {
        factor *= &base;
    }
    if exponent < 0 {
        factor = factor.recip();
    }
    Ok(factor * det_exact(&block)?)
}

/// Rational sample points `1/7, 1/11, 1/13, 1/17, ...` (reciprocals of primes
/// from 7 on).
pub fn sample_points() -> impl Iterator<Item = Rational> {
    (7u64..)
        .filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0))
        .map(|p| Rational::new(BigInt::one(), BigInt::from(p)))
}

/// Compares the vertex-level expression with `det(I - u (U^3)^+)` at `count`
/// sample points. Points where the expression is undefined are skipped.
/// With `count > 2m` the comparison amounts to polynomial equality.
pub fn check_general_expression(g: &Graph, count: usize) -> Result<VerificationReport> {
    let pre = assess(
        &g.stats(),
        &[Requirement::MinDegreeAbove(2), Requirement::GirthAbove(4)],
    );
    let z3 = z3_reciprocal(g)?;
    let mut mismatches = Vec::new();
    let mut used = 0;
    for u in sample_points().take(4 * count + 16) {
        if used == count {
            break;
        }
        let value = match general_expression(g, &u) {
            Err(Error::Singular) => continue,
            other => other?,
        };
        used += 1;
        let expected = z3.eval(&u);
        if value != expected {
            mismatches.push(Mismatch {
                location: Location::Sample { u: u.to_string() },
                lhs: value.to_string(),
                rhs: expected.to_string(),
            });
        }
    }
    if used < count {
        return Err(Error::Singular);
    }
    Ok(VerificationReport::new("general-expression", pre, mismatches))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<Complex<f64>> for ComplexValue {
    fn from(z: Complex<f64>) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl ComplexValue {
    pub fn to_complex(self) -> Complex<f64> {
        Complex::new(self.re, self.im)
    }
}

/// The two eigenvalues of `(U^3)^+` attached to one adjacency eigenvalue.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DerivedPair {
    pub adjacency_eigenvalue: f64,
    pub roots: [ComplexValue; 2],
    /// Present when both roots are rational.
    pub exact_roots: Option<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrivialEigenvalue {
    pub value: i64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Pole {
    pub value: ComplexValue,
    pub exact: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub regular_degree: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub adjacency_eigenvalues: Vec<f64>,
    pub derived_pairs: Vec<DerivedPair>,
    pub trivial_eigenvalues: Vec<TrivialEigenvalue>,
    /// Reciprocals of the nonzero eigenvalues, in eigenvalue order.
    pub poles: Vec<Pole>,
    pub spectral_radius: f64,
    pub spectral_radius_exact: Option<String>,
    pub radius_of_convergence: f64,
    pub radius_of_convergence_exact: Option<String>,
    /// `1/(k^3 + k - 1)`, the value claimed in the literature, kept for comparison.
    #[serde(rename = "paper_radius_claim")]
    pub claimed_radius: f64,
    #[serde(rename = "paper_radius_claim_exact")]
    pub claimed_radius_exact: String,
}

impl SpectrumReport {
    /// All `2m` eigenvalues: the derived pairs, then `2` and `-2`.
    pub fn eigenvalues(&self) -> Vec<Complex<f64>> {
        let mut out: Vec<Complex<f64>> = self
            .derived_pairs
            .iter()
            .flat_map(|p| p.roots.iter().map(|r| r.to_complex()))
            .collect();
        for t in &self.trivial_eigenvalues {
            out.extend(std::iter::repeat_n(
                Complex::new(t.value as f64, 0.0),
                t.multiplicity,
            ));
        }
        out
    }
}

/// Coefficients `(b, c)` of `x^2 - b x + c` for the adjacency eigenvalue `l`.
fn pair_coefficients(k: f64, l: f64) -> (f64, f64) {
    let b = l * (l * l - 3.0 * k + 4.0);
    let c = l.powi(4) - k * k * l * l + 2.0 * (k - 1.0) * (k * k - 2.0 * k + 2.0);
    (b, c)
}

fn quadratic_roots(b: f64, c: f64) -> [Complex<f64>; 2] {
    let disc = b * b - 4.0 * c;
    if disc >= 0.0 {
        let s = disc.sqrt();
        [Complex::new((b + s) / 2.0, 0.0), Complex::new((b - s) / 2.0, 0.0)]
    } else {
        let s = (-disc).sqrt();
        [Complex::new(b / 2.0, s / 2.0), Complex::new(b / 2.0, -s / 2.0)]
    }
}

fn float_pole(z: Complex<f64>) -> Option<Pole> {
    (z.norm() > 0.0).then(|| Pole {
        value: z.inv().into(),
        exact: None,
    })
}

fn exact_pole(r: &Rational) -> Option<Pole> {
    (!r.is_zero()).then(|| {
        let inv = r.recip();
        Pole {
            value: ComplexValue {
                re: inv.to_f64().unwrap_or(f64::NAN),
                im: 0.0,
            },
            exact: Some(inv.to_string()),
        }
    })
}

/// Eigenvalues and poles of `(U^3)^+` on a `k`-regular graph from the
/// adjacency spectrum: each `l` yields the roots of
/// `x^2 - l(l^2 - 3k + 4) x + l^4 - k^2 l^2 + 2(k-1)(k^2-2k+2)`, and `+-2`
/// each appear `m - n` times.
pub fn spectra_from_adjacency(k: usize, adjacency_eigs: &[f64], n: usize, m: usize) -> SpectrumReport {
    let kf = k as f64;
    let derived_pairs: Vec<DerivedPair> = adjacency_eigs
        .iter()
        .map(|&l| {
            let (b, c) = pair_coefficients(kf, l);
            DerivedPair {
                adjacency_eigenvalue: l,
                roots: quadratic_roots(b, c).map(ComplexValue::from),
                exact_roots: None,
            }
        })
        .collect();
    let trivial = m.saturating_sub(n);
    let trivial_eigenvalues = vec![
        TrivialEigenvalue {
            value: 2,
            multiplicity: trivial,
        },
        TrivialEigenvalue {
            value: -2,
            multiplicity: trivial,
        },
    ];
    let mut poles: Vec<Pole> = derived_pairs
        .iter()
        .flat_map(|p| p.roots.iter().filter_map(|r| float_pole(r.to_complex())))
        .collect();
    for value in [2, -2] {
        let pole = exact_pole(&int(value)).expect("nonzero");
        poles.extend(std::iter::repeat_n(pole, trivial));
    }
    let spectral_radius = derived_pairs
        .iter()
        .flat_map(|p| p.roots.iter().map(|r| r.to_complex().norm()))
        .chain((trivial > 0).then_some(2.0))
        .fold(0.0f64, f64::max);
    let claim = k * k * k + k - 1;
    SpectrumReport {
        regular_degree: k,
        vertex_count: n,
        edge_count: m,
        adjacency_eigenvalues: adjacency_eigs.to_vec(),
        derived_pairs,
        trivial_eigenvalues,
        poles,
        spectral_radius,
        spectral_radius_exact: None,
        radius_of_convergence: 1.0 / spectral_radius,
        radius_of_convergence_exact: None,
        claimed_radius: 1.0 / claim as f64,
        claimed_radius_exact: format!("1/{claim}"),
    }
}

/// Rational roots of the pair quadratic when `l` is an integer eigenvalue
/// of `A` and the discriminant is a perfect square.
fn exact_pair(k: i64, adjacency_char: &Poly, l: f64) -> Option<[Rational; 2]> {
    let r = l.round();
    if (l - r).abs() > 1e-6 {
        return None;
    }
    let r = BigInt::from(r as i64);
    if !adjacency_char.eval(&Rational::from_integer(r.clone())).is_zero() {
        return None;
    }
    let k = BigInt::from(k);
    let r2 = &r * &r;
    let b: BigInt = &r * (&r2 - BigInt::from(3) * &k + 4);
    let c: BigInt =
        &r2 * &r2 - &k * &k * &r2 + BigInt::from(2) * (&k - 1) * (&k * &k - BigInt::from(2) * &k + 2);
    let disc: BigInt = &b * &b - BigInt::from(4) * c;
    if disc.is_negative() {
        return None;
    }
    let s = disc.sqrt();
    if &s * &s != disc {
        return None;
    }
    let two = BigInt::from(2);
    Some([Rational::new(&b + &s, two.clone()), Rational::new(&b - &s, two)])
}

/// Full spectral report of `(U^3)^+`: adjacency spectrum by Jacobi rotations,
/// derived eigenvalues (exact when rational), poles, and the Perron value.
pub fn compute_spectrum_report(g: &Graph) -> Result<SpectrumReport> {
    let stats = g.stats();
    let pre = assess(
        &stats,
        &[Requirement::RegularAbove(2), Requirement::GirthAbove(4)],
    );
    if !pre.met {
        return Err(Error::PreconditionUnmet(pre.detail));
    }
    let k = stats.regular_degree.unwrap_or_default();
    let a = adjacency_matrix(g);
    let eigs = jacobi_eigen(&a.to_rational(), DEFAULT_JACOBI_TOL)?;
    let mut report = spectra_from_adjacency(k, &eigs, g.vertex_count(), g.edge_count());

    let adjacency_char = char_poly(&a)?;
    let mut poles = Vec::with_capacity(report.poles.len());
    for pair in &mut report.derived_pairs {
        match exact_pair(k as i64, &adjacency_char, pair.adjacency_eigenvalue) {
            Some(exact) => {
                pair.roots = exact.clone().map(|r| ComplexValue {
                    re: r.to_f64().unwrap_or(f64::NAN),
                    im: 0.0,
                });
                poles.extend(exact.iter().filter_map(exact_pole));
                pair.exact_roots = Some(exact.map(|r| r.to_string()));
            }
            None => poles.extend(pair.roots.iter().filter_map(|r| float_pole(r.to_complex()))),
        }
    }
    let trivial = report.trivial_eigenvalues[0].multiplicity;
    for value in [2, -2] {
        let pole = exact_pole(&int(value)).expect("nonzero");
        poles.extend(std::iter::repeat_n(pole, trivial));
    }
    report.poles = poles;

    let cube = cube_support(g)?;
    report.spectral_radius = power_iteration(&cube, POWER_ITERATION_TOL, POWER_ITERATION_CAP)?.value();
    report.radius_of_convergence = 1.0 / report.spectral_radius;
    if let Some(s) = common_row_sum(&cube) {
        report.radius_of_convergence_exact = Some(Rational::new(BigInt::one(), s.clone()).to_string());
        report.spectral_radius_exact = Some(s.to_string());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{self, Family};
    use crate::matrix::rat;

    fn fixture(f: Family) -> Graph {
        generators::generate(&f).unwrap()
    }

    #[test]
    fn cycle_zeta() {
        let c3 = fixture(Family::Cycle(3));
        let expected = Poly::from_ints(&[1, 0, 0, -2, 0, 0, 1]);
        assert_eq!(ihara_edge_form(&c3).unwrap(), expected);
        assert_eq!(ihara_bass_form(&c3).unwrap(), expected);
        assert_eq!(ihara_edge_form(&c3).unwrap().eval(&rat(1, 2)), rat(49, 64));
        let c5 = fixture(Family::Cycle(5));
        assert_eq!(
            ihara_bass_form(&c5).unwrap(),
            Poly::from_ints(&[1, 0, 0, 0, 0, -2, 0, 0, 0, 0, 1])
        );
    }

    #[test]
    fn trees_have_trivial_zeta() {
        let p3 = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(ihara_edge_form(&p3).unwrap(), Poly::one());
        assert_eq!(ihara_bass_form(&p3).unwrap(), Poly::one());
    }

    #[test]
    fn bass_needs_connected() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(ihara_bass_form(&g), Err(Error::Disconnected));
    }

    #[test]
    fn k4_forms_agree() {
        let k4 = fixture(Family::Complete(4));
        let edge = ihara_edge_form(&k4).unwrap();
        assert_eq!(edge.degree(), Some(12));
        assert!(check_bass(&k4).unwrap().passes());
        assert!(check_grover_edge_form(&k4).unwrap().passes());
        assert!(check_support_char_poly(&k4).unwrap().passes());
        assert!(check_square_support_char_poly(&k4).unwrap().passes());
    }

    #[test]
    fn cycle_degenerate_identities() {
        let c5 = fixture(Family::Cycle(5));
        let r = check_support_char_poly(&c5).unwrap();
        assert!(r.passes(), "{r:?}");
        assert!(check_grover_edge_form(&c5).unwrap().passes());
    }

    #[test]
    fn closed_form_requires_preconditions() {
        let k4 = fixture(Family::Complete(4));
        assert!(matches!(z3_closed_regular(&k4), Err(Error::PreconditionUnmet(_))));
        assert!(matches!(
            z3_general_eval(&k4, &rat(1, 7)),
            Err(Error::PreconditionUnmet(_))
        ));
        let irregular = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(check_cube_char_poly(&irregular).is_err());
    }

    #[test]
    fn petersen_general_expression_at_zero() {
        let p = fixture(Family::Petersen);
        assert_eq!(z3_general_eval(&p, &Rational::zero()).unwrap(), Rational::one());
    }

    #[test]
    fn pair_roots_for_cubic_graphs() {
        let report = spectra_from_adjacency(3, &[3.0, 1.0, -2.0], 3, 4);
        let roots: Vec<[ComplexValue; 2]> = report.derived_pairs.iter().map(|p| p.roots).collect();
        let close =
            |z: ComplexValue, re: f64, im: f64| (z.re - re).abs() < 1e-12 && (z.im - im).abs() < 1e-12;
        assert!(close(roots[0][0], 10.0, 0.0) && close(roots[0][1], 2.0, 0.0));
        let r8 = 8f64.sqrt();
        assert!(close(roots[1][0], -2.0, r8) && close(roots[1][1], -2.0, -r8));
        // x^2 - 2x + 0
        assert!(close(roots[2][0], 2.0, 0.0) && close(roots[2][1], 0.0, 0.0));
        assert_eq!(report.eigenvalues().len(), 8);
        assert_eq!(report.claimed_radius_exact, "1/29");
    }

    #[test]
    fn sample_points_are_prime_reciprocals() {
        let pts: Vec<Rational> = sample_points().take(4).collect();
        assert_eq!(pts, vec![rat(1, 7), rat(1, 11), rat(1, 13), rat(1, 17)]);
    }
}
