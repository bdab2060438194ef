//! Closed-walk counting and prime cycle classes on the digraph of a 0/1
//! matrix, plus the Euler-product and exponential checks built on them.

use num::{BigInt, One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{build_arc_table, ArcTable, Graph};
use crate::linalg::det_one_minus_u;
use crate::matrix::{IntMatrix, Rational};
use crate::operators::cube_support;
use crate::poly::{series_exp, Poly};
use crate::report::{
    assess, compare_polys, Location, Mismatch, Preconditions, Requirement, VerificationReport,
};

pub const DEFAULT_MAX_LEN: usize = 8;
/// Beyond this length the class count is impractical on anything but tiny inputs.
pub const HARD_MAX_LEN: usize = 12;

/// A closed walk up to rotation, stored as its least rotation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CycleClass {
    pub length: usize,
    pub rep: Vec<usize>,
    pub is_prime: bool,
}

impl CycleClass {
    pub fn from_walk(walk: &[usize]) -> Self {
        let len = walk.len();
        let mut best = 0;
        for r in 1..len {
            if rotation_cmp(walk, r, best).is_lt() {
                best = r;
            }
        }
        let rep: Vec<usize> = (0..len).map(|i| walk[(best + i) % len]).collect();
        let is_prime = (1..len).all(|r| rotation_cmp(&rep, r, 0).is_ne());
        Self {
            length: len,
            rep,
            is_prime,
        }
    }
}

fn rotation_cmp(walk: &[usize], a: usize, b: usize) -> std::cmp::Ordering {
    let len = walk.len();
    (0..len)
        .map(|i| walk[(a + i) % len].cmp(&walk[(b + i) % len]))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
}

/// True when `walk` is strictly below each of its proper rotations, i.e. it
/// is the representative of a prime class.
fn is_prime_representative(walk: &[usize]) -> bool {
    (1..walk.len()).all(|r| rotation_cmp(walk, r, 0).is_gt())
}

/// `N_k = tr(M^k)` for `k = 1..=max_k`.
pub fn trace_counts(m: &IntMatrix, max_k: usize) -> Result<Vec<BigInt>> {
    let n = m.ensure_square()?;
    let mut power = IntMatrix::identity(n);
    let mut out = Vec::with_capacity(max_k);
    for _ in 0..max_k {
        power = m.try_mul(&power)?;
        out.push(power.trace());
    }
    Ok(out)
}

fn support_adjacency(m: &IntMatrix) -> Result<Vec<Vec<usize>>> {
    let n = m.ensure_square()?;
    let mut adj = vec![Vec::new(); n];
    for (i, j, x) in m.iter_indexed() {
        if x.is_one() {
            adj[i].push(j);
        } else if !x.is_zero() {
            return Err(Error::NotSupportMatrix {
                row: i,
                col: j,
                value: x.to_string(),
            });
        }
    }
    Ok(adj)
}

/// Calls `visit` on the representative of every prime class of length at
/// most `max_len` whose least vertex is `start`.
fn walk_classes(adj: &[Vec<usize>], start: usize, max_len: usize, visit: &mut impl FnMut(&[usize])) {
    fn go(
        adj: &[Vec<usize>],
        start: usize,
        max_len: usize,
        path: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        let last = *path.last().expect("path starts non-empty");
        for &next in &adj[last] {
            if next == start && is_prime_representative(path) {
                visit(path);
            }
            if next >= start && path.len() < max_len {
                path.push(next);
                go(adj, start, max_len, path, visit);
                path.pop();
            }
        }
    }
    let mut path = Vec::with_capacity(max_len);
    path.push(start);
    go(adj, start, max_len, &mut path, visit);
}

/// Prime class counts by length, `counts[l - 1]` for length `l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeClassCounts {
    pub max_len: usize,
    pub counts: Vec<u64>,
}

impl PrimeClassCounts {
    pub fn count(&self, len: usize) -> u64 {
        self.counts.get(len.wrapping_sub(1)).copied().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeClassSet {
    pub max_len: usize,
    /// Sorted by length, then representative.
    pub classes: Vec<CycleClass>,
}

impl PrimeClassSet {
    pub fn counts(&self) -> PrimeClassCounts {
        let mut counts = vec![0; self.max_len];
        for c in &self.classes {
            counts[c.length - 1] += 1;
        }
        PrimeClassCounts {
            max_len: self.max_len,
            counts,
        }
    }
}

/// Every prime class of closed walks of length at most `max_len` in the
/// digraph of a 0/1 matrix.
pub fn enumerate_prime_classes(m: &IntMatrix, max_len: usize) -> Result<PrimeClassSet> {
    let adj = support_adjacency(m)?;
    let mut classes: Vec<CycleClass> = (0..adj.len())
        .into_par_iter()
        .flat_map_iter(|s| {
            let mut found = Vec::new();
            walk_classes(&adj, s, max_len, &mut |w| {
                found.push(CycleClass {
                    length: w.len(),
                    rep: w.to_vec(),
                    is_prime: true,
                })
            });
            found
        })
        .collect();
    classes.sort_by(|a, b| (a.length, &a.rep).cmp(&(b.length, &b.rep)));
    Ok(PrimeClassSet { max_len, classes })
}

/// Class counts without storing the classes.
pub fn count_prime_classes(m: &IntMatrix, max_len: usize) -> Result<PrimeClassCounts> {
    let adj = support_adjacency(m)?;
    let counts = (0..adj.len())
        .into_par_iter()
        .map(|s| {
            let mut counts = vec![0u64; max_len];
            walk_classes(&adj, s, max_len, &mut |w| counts[w.len() - 1] += 1);
            counts
        })
        .reduce(
            || vec![0u64; max_len],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(PrimeClassCounts { max_len, counts })
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `prod (1 - u^l)^(count_l)` over class lengths, as a series of the given order.
pub fn euler_product_series(counts: &PrimeClassCounts, order: usize) -> Result<Poly> {
    if order > counts.max_len {
        return Err(Error::IncompleteClasses {
            available: counts.max_len,
            requested: order,
        });
    }
    let mut acc = Poly::series(vec![Rational::one()], order);
    for len in 1..=order {
        let c = counts.count(len);
        if c == 0 {
            continue;
        }
        let mut coeffs = vec![Rational::zero(); order + 1];
        for j in 0..=(order / len) as u64 {
            let b = binomial(c, j);
            coeffs[len * j as usize] = Rational::from_integer(if j % 2 == 0 { b } else { -b });
        }
        acc = &acc * &Poly::series(coeffs, order);
    }
    Ok(acc)
}

pub fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Prime class counts predicted from traces: `(1/l) sum_{d | l} mu(l/d) N_d`.
pub fn mobius_class_counts(traces: &[BigInt]) -> Vec<BigInt> {
    (1..=traces.len() as u64)
        .map(|l| {
            let total = (1..=l).filter(|d| l % d == 0).fold(BigInt::zero(), |acc, d| {
                acc + mobius(l / d) * &traces[d as usize - 1]
            });
            total / l
        })
        .collect()
}

fn unconditional() -> Preconditions {
    Preconditions {
        met: true,
        detail: "none".into(),
    }
}

/// `-sum_{k <= order} N_k/k u^k` as a series.
fn negated_log_series(traces: &[BigInt], order: usize) -> Poly {
    let mut coeffs = vec![Rational::zero(); order + 1];
    for (i, n) in traces.iter().enumerate().take(order) {
        coeffs[i + 1] = -Rational::new(n.clone(), BigInt::from(i + 1));
    }
    Poly::series(coeffs, order)
}

/// `exp(-sum N_k/k u^k) = det(I - uM)` modulo `u^(order+1)`.
pub fn exp_expression_check(m: &IntMatrix, order: usize) -> Result<VerificationReport> {
    let traces = trace_counts(m, order)?;
    let lhs = series_exp(&negated_log_series(&traces, order), order)?;
    let rhs = det_one_minus_u(m)?.truncate(order);
    Ok(VerificationReport::new(
        "exp",
        unconditional(),
        compare_polys(&lhs, &rhs),
    ))
}

/// Three-way agreement modulo `u^(order+1)` of `det(I - uM)`, the exponential
/// of the trace series, and the Euler product over enumerated prime classes.
pub fn euler_product_check(m: &IntMatrix, order: usize) -> Result<VerificationReport> {
    let counts = count_prime_classes(m, order)?;
    let euler = euler_product_series(&counts, order)?;
    let det = det_one_minus_u(m)?.truncate(order);
    let traces = trace_counts(m, order)?;
    let exp = series_exp(&negated_log_series(&traces, order), order)?;
    let mut mismatches = compare_polys(&euler, &det);
    mismatches.extend(compare_polys(&euler, &exp));
    Ok(VerificationReport::new("euler", unconditional(), mismatches))
}

/// Enumerated class counts against the Moebius inversion of the traces.
pub fn mobius_check(m: &IntMatrix, max_len: usize) -> Result<VerificationReport> {
    let counts = count_prime_classes(m, max_len)?;
    let predicted = mobius_class_counts(&trace_counts(m, max_len)?);
    let mismatches = predicted
        .iter()
        .enumerate()
        .filter(|(i, p)| p.to_u64() != Some(counts.counts[*i]) || p.is_negative())
        .map(|(i, p)| Mismatch {
            location: Location::Coefficient { degree: i + 1 },
            lhs: counts.counts[i].to_string(),
            rhs: p.to_string(),
        })
        .collect();
    Ok(VerificationReport::new("mobius", unconditional(), mismatches))
}

/// How consecutive arcs `a, b` of a walk in the cube-support digraph are
/// realised in the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThreeStep {
    /// A reduced path `b, x, y, a` of four arcs exists.
    Arc,
    /// `a` is followed by `b` without backtracking.
    Backtracking,
}

pub struct ThreeStepRules {
    arcs: ArcTable,
    out: Vec<Vec<usize>>,
}

impl ThreeStepRules {
    pub fn new(g: &Graph) -> Self {
        let arcs = build_arc_table(g);
        let out = arcs.out_arcs(g.vertex_count());
        Self { arcs, out }
    }

    fn successors(&self, e: usize) -> impl Iterator<Item = usize> + '_ {
        let inv = self.arcs.inverse(e);
        self.out[self.arcs.terminus(e)]
            .iter()
            .copied()
            .filter(move |&f| f != inv)
    }

    pub fn classify(&self, a: usize, b: usize) -> Option<ThreeStep> {
        let reaches_a = self
            .successors(b)
            .any(|x| self.successors(x).any(|y| self.successors(y).any(|z| z == a)));
        if reaches_a {
            Some(ThreeStep::Arc)
        } else if self.successors(a).any(|f| f == b) {
            Some(ThreeStep::Backtracking)
        } else {
            None
        }
    }

    /// Step kinds around a closed walk, or the index of the first step that
    /// is neither kind.
    pub fn lift_walk(&self, walk: &[usize]) -> std::result::Result<Vec<ThreeStep>, usize> {
        (0..walk.len())
            .map(|i| self.classify(walk[i], walk[(i + 1) % walk.len()]).ok_or(i))
            .collect()
    }
}

/// The cube-support digraph has an arc `a -> b` exactly when `a, b` is a
/// 3-arc or 3-backtracking step in the graph.
pub fn check_lift(g: &Graph) -> Result<VerificationReport> {
    let pre = assess(
        &g.stats(),
        &[Requirement::MinDegreeAbove(2), Requirement::GirthAbove(4)],
    );
    let cube = cube_support(g)?;
    let rules = ThreeStepRules::new(g);
    let mismatches = cube
        .iter_indexed()
        .filter_map(|(a, b, x)| {
            let step = rules.classify(a, b);
            (x.is_one() != step.is_some()).then(|| Mismatch {
                location: Location::Entry { row: a, col: b },
                lhs: x.to_string(),
                rhs: step.map_or("none".into(), |s| format!("{s:?}")),
            })
        })
        .collect();
    Ok(VerificationReport::new("lift", pre, mismatches))
}
