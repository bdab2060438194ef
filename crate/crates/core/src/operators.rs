//! Arc-level operators of a graph and exact checks of the support identities
//! relating the Grover matrix `U`, its powers, and the edge matrix `B - J0`.

use num::{BigInt, One, Zero};

use crate::error::{Error, Result};
use crate::graph::{build_arc_table, ArcTable, Graph};
use crate::matrix::{positive_support, IntMatrix, RatMatrix, Rational};
use crate::report::{assess, compare_int, Mismatch, Requirement, VerificationReport};

/// Every arc- and vertex-level matrix of a graph. Arcs follow the
/// [`ArcTable`] order.
#[derive(Debug, Clone)]
pub struct OperatorBundle {
    pub arcs: ArcTable,
    /// Grover transition matrix, `2m x 2m`.
    pub u: RatMatrix,
    /// `B[e][f] = 1` iff `t(e) = o(f)`.
    pub b: IntMatrix,
    /// `J0[e][f] = 1` iff `f` is the inverse of `e`.
    pub j0: IntMatrix,
    /// `K[v][e] = 1` iff `t(e) = v`.
    pub k: IntMatrix,
    /// `L[v][e] = 1` iff `o(e) = v`.
    pub l: IntMatrix,
    pub a: IntMatrix,
    pub d: IntMatrix,
}

impl OperatorBundle {
    pub fn new(g: &Graph) -> Result<Self> {
        let arcs = build_arc_table(g);
        let u = grover_matrix(g, &arcs)?;
        Ok(Self {
            b: arc_adjacency(&arcs),
            j0: inverse_pairs(&arcs),
            k: terminus_incidence(g.vertex_count(), &arcs),
            l: origin_incidence(g.vertex_count(), &arcs),
            a: adjacency_matrix(g),
            d: degree_matrix(g),
            arcs,
            u,
        })
    }

    /// `B - J0`, the non-backtracking edge matrix.
    pub fn edge_matrix(&self) -> IntMatrix {
        &self.b - &self.j0
    }
}

fn indicator(flag: bool) -> BigInt {
    if flag {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

pub fn arc_adjacency(arcs: &ArcTable) -> IntMatrix {
    let s = arcs.arc_count();
    IntMatrix::from_fn(s, s, |e, f| indicator(arcs.terminus(e) == arcs.origin(f)))
}

pub fn inverse_pairs(arcs: &ArcTable) -> IntMatrix {
    let s = arcs.arc_count();
    IntMatrix::from_fn(s, s, |e, f| indicator(arcs.inverse(e) == f))
}

pub fn terminus_incidence(n: usize, arcs: &ArcTable) -> IntMatrix {
    IntMatrix::from_fn(n, arcs.arc_count(), |v, e| indicator(arcs.terminus(e) == v))
}

pub fn origin_incidence(n: usize, arcs: &ArcTable) -> IntMatrix {
    IntMatrix::from_fn(n, arcs.arc_count(), |v, e| indicator(arcs.origin(e) == v))
}

/// Vertex adjacency; a loop adds 2 to its diagonal entry.
pub fn adjacency_matrix(g: &Graph) -> IntMatrix {
    let n = g.vertex_count();
    let mut a = IntMatrix::zeros(n, n);
    for &(u, v) in g.edges() {
        a[(u, v)] += 1;
        a[(v, u)] += 1;
    }
    a
}

pub fn degree_matrix(g: &Graph) -> IntMatrix {
    let degrees = g.degrees();
    let n = degrees.len();
    IntMatrix::from_fn(n, n, |i, j| {
        if i == j {
            BigInt::from(degrees[i])
        } else {
            BigInt::zero()
        }
    })
}

/// `U[e][f] = 2/d(t(f)) - [f = e^-1]` when `t(f) = o(e)`, zero otherwise.
pub fn grover_matrix(g: &Graph, arcs: &ArcTable) -> Result<RatMatrix> {
    let degrees = g.degrees();
    if let Some(v) = degrees.iter().position(|&d| d == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let s = arcs.arc_count();
    Ok(RatMatrix::from_fn(s, s, |e, f| {
        if arcs.terminus(f) != arcs.origin(e) {
            return Rational::zero();
        }
        let w = Rational::new(BigInt::from(2), BigInt::from(degrees[arcs.terminus(f)]));
        if f == arcs.inverse(e) {
            w - Rational::one()
        } else {
            w
        }
    }))
}

/// `(U^3)^+` taken from the exact cube `(U U) U`.
pub fn cube_support(g: &Graph) -> Result<IntMatrix> {
    let ops = OperatorBundle::new(g)?;
    Ok(positive_support(&cube(&ops.u)))
}

fn cube(u: &RatMatrix) -> RatMatrix {
    &(u * u) * u
}

/// Verifies `B - J0 = (U^T)^+`.
pub fn check_ren(g: &Graph) -> Result<VerificationReport> {
    let ops = OperatorBundle::new(g)?;
    let pre = assess(&g.stats(), &[Requirement::MinDegreeAtLeast(2)]);
    let lhs = ops.edge_matrix();
    let rhs = positive_support(&ops.u.transpose());
    Ok(VerificationReport::new("ren", pre, compare_int(&lhs, &rhs)))
}

/// Verifies `(U^2)^+ = (U^+)^2 + I`.
pub fn check_godsil_guo(g: &Graph) -> Result<VerificationReport> {
    let ops = OperatorBundle::new(g)?;
    let pre = assess(&g.stats(), &[Requirement::RegularAbove(2)]);
    let lhs = positive_support(&(&ops.u * &ops.u));
    let up = positive_support(&ops.u);
    let rhs = &(&up * &up) + &IntMatrix::identity(up.rows());
    Ok(VerificationReport::new(
        "godsil-guo",
        pre,
        compare_int(&lhs, &rhs),
    ))
}

/// Verifies `(U^3)^+ = (U^+)^3 + (U^+)^T`.
pub fn check_cube_structure(g: &Graph) -> Result<VerificationReport> {
    let ops = OperatorBundle::new(g)?;
    let pre = assess(
        &g.stats(),
        &[Requirement::MinDegreeAbove(2), Requirement::GirthAbove(4)],
    );
    let lhs = positive_support(&cube(&ops.u));
    let up = positive_support(&ops.u);
    let rhs = &(&(&up * &up) * &up) + &up.transpose();
    Ok(VerificationReport::new("cube", pre, compare_int(&lhs, &rhs)))
}

/// Verifies the incidence identities `L K^T = K L^T = A`, `L L^T = K K^T = D`,
/// `K^T L = B`, `L = K J0` and `K = L J0`. These hold on every graph.
pub fn check_incidence_identities(g: &Graph) -> Result<VerificationReport> {
    let arcs = build_arc_table(g);
    let n = g.vertex_count();
    let (k, l) = (terminus_incidence(n, &arcs), origin_incidence(n, &arcs));
    let (a, d) = (adjacency_matrix(g), degree_matrix(g));
    let (b, j0) = (arc_adjacency(&arcs), inverse_pairs(&arcs));
    let (kt, lt) = (k.transpose(), l.transpose());
    let pairs = [
        (&l * &kt, a.clone()),
        (&k * &lt, a),
        (&l * &lt, d.clone()),
        (&k * &kt, d),
        (&kt * &l, b),
        (&k * &j0, l.clone()),
        (&l * &j0, k),
    ];
    let mismatches: Vec<Mismatch> = pairs
        .iter()
        .flat_map(|(lhs, rhs)| compare_int(lhs, rhs))
        .collect();
    Ok(VerificationReport::new(
        "incidence",
        assess(&g.stats(), &[]),
        mismatches,
    ))
}

/// The eight words of `(T + P)^3` with `T = B - J0` and `P = J0`.
#[derive(Debug, Clone)]
pub struct CubeDecomposition {
    pub terms: Vec<(&'static str, IntMatrix)>,
}

impl CubeDecomposition {
    pub fn term(&self, name: &str) -> Option<&IntMatrix> {
        self.terms.iter().find(|(n, _)| *n == name).map(|(_, m)| m)
    }

    pub fn sum(&self) -> IntMatrix {
        let size = self.terms[0].1.rows();
        self.terms
            .iter()
            .fold(IntMatrix::zeros(size, size), |acc, (_, m)| &acc + m)
    }
}

pub fn decompose_cube(g: &Graph) -> CubeDecomposition {
    let arcs = build_arc_table(g);
    let p = inverse_pairs(&arcs);
    let t = &arc_adjacency(&arcs) - &p;
    let (tt, tp, pt, pp) = (&t * &t, &t * &p, &p * &t, &p * &p);
    CubeDecomposition {
        terms: vec![
            ("TTT", &tt * &t),
            ("TTP", &tt * &p),
            ("TPT", &tp * &t),
            ("PTT", &pt * &t),
            ("TPP", &tp * &p),
            ("PPT", &pp * &t),
            ("PTP", &pt * &p),
            ("PPP", &pp * &p),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{self, Family};
    use crate::matrix::{int, rat};

    fn fixture(f: Family) -> Graph {
        generators::generate(&f).unwrap()
    }

    #[test]
    fn grover_entries_for_small_degrees() {
        let c3 = fixture(Family::Cycle(3));
        let u = grover_matrix(&c3, &build_arc_table(&c3)).unwrap();
        assert!(u.entries().iter().all(|x| *x == int(0) || *x == int(1)));
        // arc 0 is 0->1; arc 3 is 2->0, which feeds into it
        assert_eq!(u[(0, 3)], int(1));
        assert_eq!(u[(0, 1)], int(0));

        let k4 = fixture(Family::Complete(4));
        let u = grover_matrix(&k4, &build_arc_table(&k4)).unwrap();
        for x in u.entries() {
            assert!(*x == int(0) || *x == rat(2, 3) || *x == rat(-1, 3), "{x}");
        }

        let p2 = Graph::new(2, vec![(0, 1)]).unwrap();
        let u = grover_matrix(&p2, &build_arc_table(&p2)).unwrap();
        assert_eq!(u, RatMatrix::from_fn(2, 2, |i, j| int((i != j) as i64)));
    }

    #[test]
    fn isolated_vertex_is_rejected() {
        let g = Graph::new(3, vec![(0, 1)]).unwrap();
        assert_eq!(OperatorBundle::new(&g).unwrap_err(), Error::IsolatedVertex(2));
    }

    #[test]
    fn support_of_u_is_transposed_edge_matrix() {
        for f in [Family::Complete(4), Family::Petersen, Family::Cycle(5)] {
            let ops = OperatorBundle::new(&fixture(f)).unwrap();
            let expected = &ops.b.transpose() - &ops.j0;
            assert_eq!(positive_support(&ops.u), expected);
        }
    }

    #[test]
    fn structure_checks_on_named_graphs() {
        let c5 = fixture(Family::Cycle(5));
        let k4 = fixture(Family::Complete(4));
        let petersen = fixture(Family::Petersen);
        assert!(check_ren(&c5).unwrap().passes());
        assert!(check_ren(&petersen).unwrap().passes());
        assert!(check_godsil_guo(&k4).unwrap().passes());
        assert!(check_godsil_guo(&petersen).unwrap().passes());
        assert!(check_cube_structure(&petersen).unwrap().passes());

        let p2 = Graph::new(2, vec![(0, 1)]).unwrap();
        let ren = check_ren(&p2).unwrap();
        assert!(!ren.preconditions_met);
        // U of P2 is the swap, whose transpose support is J0, while B - J0 = 0
        assert!(!ren.identity_holds);
    }

    #[test]
    fn cube_support_row_sums() {
        for f in [Family::Petersen, Family::Heawood] {
            let m = cube_support(&fixture(f)).unwrap();
            assert!(m.row_sums().iter().all(|s| *s == BigInt::from(10)));
        }
    }

    #[test]
    fn decomposition_on_petersen() {
        let g = fixture(Family::Petersen);
        let dec = decompose_cube(&g);
        let b = arc_adjacency(&build_arc_table(&g));
        assert_eq!(dec.sum(), &(&b * &b) * &b);

        let ttt = dec.term("TTT").unwrap();
        let ptp = dec.term("PTP").unwrap();
        assert!(ttt
            .iter_indexed()
            .all(|(i, j, x)| x.is_zero() || ptp[(i, j)].is_zero()));
        let ops = OperatorBundle::new(&g).unwrap();
        let ut = ops.u.transpose();
        assert_eq!(positive_support(&(ttt + ptp)), positive_support(&cube(&ut)));
    }
}
