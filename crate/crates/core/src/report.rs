use serde::Serialize;

use crate::graph::GraphStats;
use crate::matrix::{IntMatrix, Matrix, Scalar};
use crate::poly::Poly;

/// Where two sides of an identity disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Location {
    Entry { row: usize, col: usize },
    Coefficient { degree: usize },
    Sample { u: String },
    Dimension,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub location: Location,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Preconditions {
    pub met: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub preconditions_met: bool,
    pub preconditions: String,
    pub identity_holds: bool,
    pub mismatches: Vec<Mismatch>,
}

impl VerificationReport {
    pub fn new(theorem: &str, pre: Preconditions, mismatches: Vec<Mismatch>) -> Self {
        Self {
            theorem: theorem.to_string(),
            preconditions_met: pre.met,
            preconditions: pre.detail,
            identity_holds: mismatches.is_empty(),
            mismatches,
        }
    }

    /// Holds only when the preconditions are met as well.
    pub fn passes(&self) -> bool {
        self.preconditions_met && self.identity_holds
    }
}

pub fn compare_matrices<T: Scalar>(lhs: &Matrix<T>, rhs: &Matrix<T>) -> Vec<Mismatch> {
    if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
        return vec![Mismatch {
            location: Location::Dimension,
            lhs: format!("{}x{}", lhs.rows(), lhs.cols()),
            rhs: format!("{}x{}", rhs.rows(), rhs.cols()),
        }];
    }
    lhs.iter_indexed()
        .filter(|&(i, j, x)| *x != rhs[(i, j)])
        .map(|(i, j, x)| Mismatch {
            location: Location::Entry { row: i, col: j },
            lhs: x.to_string(),
            rhs: rhs[(i, j)].to_string(),
        })
        .collect()
}

pub fn compare_int(lhs: &IntMatrix, rhs: &IntMatrix) -> Vec<Mismatch> {
    compare_matrices(lhs, rhs)
}

pub fn compare_polys(lhs: &Poly, rhs: &Poly) -> Vec<Mismatch> {
    let len = lhs.coeffs().len().max(rhs.coeffs().len());
    (0..len)
        .filter_map(|d| {
            let (a, b) = (lhs.coeff(d), rhs.coeff(d));
            (a != b).then(|| Mismatch {
                location: Location::Coefficient { degree: d },
                lhs: a.to_string(),
                rhs: b.to_string(),
            })
        })
        .collect()
}

/// A hypothesis on the input graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Requirement {
    MinDegreeAtLeast(usize),
    MinDegreeAbove(usize),
    RegularAbove(usize),
    Regular,
    GirthAbove(usize),
    Connected,
}

impl Requirement {
    fn evaluate(self, stats: &GraphStats) -> (bool, String) {
        let girth = stats.girth.map_or("inf".to_string(), |g| g.to_string());
        let degree = stats
            .regular_degree
            .map_or("irregular".to_string(), |k| format!("{k}-regular"));
        match self {
            Requirement::MinDegreeAtLeast(d) => (
                stats.min_degree >= d,
                format!("min degree {} >= {d}", stats.min_degree),
            ),
            Requirement::MinDegreeAbove(d) => (
                stats.min_degree > d,
                format!("min degree {} > {d}", stats.min_degree),
            ),
            Requirement::RegularAbove(d) => (
                stats.regular_degree.is_some_and(|k| k > d),
                format!("{degree} with k > {d}"),
            ),
            Requirement::Regular => (stats.is_regular(), degree),
            Requirement::GirthAbove(b) => (stats.girth_exceeds(b), format!("girth {girth} > {b}")),
            Requirement::Connected => (stats.connected, "connected".to_string()),
        }
    }
}

pub fn assess(stats: &GraphStats, requirements: &[Requirement]) -> Preconditions {
    let mut met = true;
    let parts: Vec<String> = requirements
        .iter()
        .map(|r| {
            let (ok, text) = r.evaluate(stats);
            met &= ok;
            format!("{text}: {}", if ok { "yes" } else { "no" })
        })
        .collect();
    Preconditions {
        met,
        detail: if parts.is_empty() {
            "none".to_string()
        } else {
            parts.join("; ")
        },
    }
}
