// McGee graph with one chord between vertices at distance 4: minimum degree 3,
// girth 5, degrees 3 and 4. The cube support identity needs regularity here.

use grover_zeta::generators;
use grover_zeta::linalg::det_one_minus_u;
use grover_zeta::matrix::{positive_support, rat};
use grover_zeta::operators::{check_cube_structure, OperatorBundle};
use grover_zeta::report::Location;
use grover_zeta::zeta::{check_general_expression, z3_general_eval, z3_reciprocal};
use grover_zeta::Graph;

fn chorded_mcgee() -> Graph {
    let g = generators::generate(&generators::Family::McGee).unwrap();
    let mut edges = g.edges().to_vec();
    edges.push((0, 6));
    Graph::new(g.vertex_count(), edges).unwrap()
}

#[test]
fn fixture_meets_degree_and_girth_bounds() {
    let s = chorded_mcgee().stats();
    assert_eq!(s.min_degree, 3);
    assert_eq!(s.girth, Some(5));
    assert_eq!(s.regular_degree, None);
}

#[test]
fn cube_support_identity_fails_despite_bounds() {
    let g = chorded_mcgee();
    let r = check_cube_structure(&g).unwrap();
    assert!(r.preconditions_met);
    assert!(!r.identity_holds);
    assert_eq!(r.mismatches.len(), 36);

    let ops = OperatorBundle::new(&g).unwrap();
    let arc = |o, t| {
        (0..ops.arcs.arc_count())
            .find(|&a| ops.arcs.origin(a) == o && ops.arcs.terminus(a) == t)
            .unwrap()
    };
    let (e, f) = (arc(1, 0), arc(2, 1));
    let cube = &(&ops.u * &ops.u) * &ops.u;
    assert_eq!(cube[(e, f)], rat(1, 27));
    assert!(r
        .mismatches
        .iter()
        .any(|m| m.location == Location::Entry { row: e, col: f } && m.lhs == "1" && m.rhs == "0"));
}

#[test]
fn general_expression_tracks_structural_matrix() {
    let g = chorded_mcgee();
    let ops = OperatorBundle::new(&g).unwrap();
    let up = positive_support(&ops.u);
    let structural = &(&(&up * &up) * &up) + &up.transpose();
    let expected = det_one_minus_u(&structural).unwrap();
    let z3 = z3_reciprocal(&g).unwrap();
    assert_ne!(expected, z3);
    for p in [7, 11, 13] {
        let u = rat(1, p);
        let value = z3_general_eval(&g, &u).unwrap();
        assert_eq!(value, expected.eval(&u));
        assert_ne!(value, z3.eval(&u));
    }
    let r = check_general_expression(&g, 3).unwrap();
    assert!(r.preconditions_met && !r.identity_holds);
}
