use multint::approx::approx_clique_t;
use multint::gadgets::{build_q, grid, rep_co_q_unit2interval, rep_co_q_unit3track, QParams};
use multint::graph::{complement, GadgetRole, Graph, VertexLabel, Weights};
use multint::representation::{
    intersection_graph, is_unit, restrict_representation, verify_representation, Piece,
    Representation,
};
use multint::solvers::{max_weight_clique_bruteforce, OracleLimit};
use multint::Error;

fn g(role: GadgetRole, i: usize) -> VertexLabel {
    VertexLabel::Gadget(role, i)
}

#[test]
fn grid_examples() {
    assert_eq!(
        grid(2, 2).unwrap(),
        Graph::from_original_edges(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap()
    );
    assert_eq!(
        grid(1, 3).unwrap(),
        Graph::from_original_edges(3, &[(1, 2), (2, 3)]).unwrap()
    );
    let g33 = grid(3, 3).unwrap();
    assert_eq!((g33.n(), g33.m()), (9, 12));
    assert!(matches!(grid(0, 3), Err(Error::InvalidParameter(_))));
}

#[test]
fn q_one_one_edges() {
    use GadgetRole::*;
    let q = build_q(&QParams::new(1, 1)).unwrap();
    assert_eq!(q.n(), 11);
    let mut expected = vec![
        (g(Xo, 1), g(A, 1)),
        (g(Xo, 1), g(A, 2)),
        (g(Xo, 2), g(B, 1)),
        (g(Xe, 1), g(A, 1)),
        (g(Xe, 1), g(B, 1)),
        (g(Xe, 1), g(B, 2)),
        (g(A, 1), g(C, 1)),
        (g(C, 1), g(D, 1)),
        (g(D, 1), g(B, 2)),
        (g(A, 2), g(C, 2)),
        (g(C, 2), g(D, 2)),
    ];
    for e in expected.iter_mut() {
        if e.0 > e.1 {
            std::mem::swap(&mut e.0, &mut e.1);
        }
    }
    expected.sort();
    let edges: Vec<(VertexLabel, VertexLabel)> = q.edges().collect();
    assert_eq!(edges, expected);
}

#[test]
fn q_sizes_and_degrees() {
    for w in 1..=4 {
        for l in 1..=4 {
            let p = QParams::new(w, l);
            let q = build_q(&p).unwrap();
            assert_eq!(q.n(), w * (2 * l + 1) + 8 * w * l);
            assert_eq!(p.spacing(), q.n() as i64);
            assert!((0..q.n()).all(|i| q.degree(i) <= 4));
        }
    }
    assert_eq!(build_q(&QParams::new(2, 1)).unwrap().n(), 22);
    assert!(matches!(
        build_q(&QParams::new(0, 1)),
        Err(Error::InvalidParameter(_))
    ));
}

#[test]
fn q_representations_with_explicit_spacing() {
    let p = QParams::new(1, 1).with_spacing(11);
    let target = complement(&build_q(&p).unwrap());
    let r2 = rep_co_q_unit2interval(&p).unwrap();
    assert!(verify_representation(&r2, &target).unwrap().ok);
    assert_eq!(is_unit(&r2), Some(66));
    let r3 = rep_co_q_unit3track(&p).unwrap();
    assert!(verify_representation(&r3, &target).unwrap().ok);
    assert_eq!(is_unit(&r3), Some(44));
}

#[test]
fn q_representations_for_all_small_parameters() {
    for w in 1..=4 {
        for l in 1..=4 {
            let p = QParams::new(w, l);
            let target = complement(&build_q(&p).unwrap());
            let n = p.spacing();
            let r2 = rep_co_q_unit2interval(&p).unwrap();
            let rep2 = verify_representation(&r2, &target).unwrap();
            assert!(rep2.ok, "2-interval w={w} l={l}: {rep2:?}");
            assert_eq!(is_unit(&r2), Some(6 * n));
            let r3 = rep_co_q_unit3track(&p).unwrap();
            let rep3 = verify_representation(&r3, &target).unwrap();
            assert!(rep3.ok, "3-track w={w} l={l}: {rep3:?}");
            assert_eq!(is_unit(&r3), Some(4 * n));
        }
    }
}

#[test]
fn three_track_gadget_accepts_negative_coordinates() {
    let p = QParams::new(3, 2);
    let r3 = rep_co_q_unit3track(&p).unwrap();
    let target = complement(&build_q(&p).unwrap());
    assert!(verify_representation(&r3, &target).unwrap().ok);
    let shifted = r3.translated(-10 * p.spacing());
    assert!(shifted
        .pieces()
        .values()
        .flatten()
        .any(|piece| piece.lo < 0));
    assert!(verify_representation(&shifted, &target).unwrap().ok);
}

#[test]
fn perturbing_an_xe_interval_is_detected() {
    let p = QParams::new(1, 1);
    let target = complement(&build_q(&p).unwrap());
    let rep = rep_co_q_unit2interval(&p).unwrap();
    let mut pieces = rep.pieces().clone();
    let xe = pieces.get_mut(&g(GadgetRole::Xe, 1)).unwrap();
    for piece in xe.iter_mut() {
        *piece = Piece::new(piece.lo - 1000, piece.hi - 1000, piece.site);
    }
    let moved = Representation::new(rep.kind(), rep.t(), vec![], pieces).unwrap();
    let report = verify_representation(&moved, &target).unwrap();
    assert!(!report.ok);
    assert!(report
        .missing_edges
        .iter()
        .any(|(u, v)| u == &g(GadgetRole::Xe, 1) || v == &g(GadgetRole::Xe, 1)));
}

#[test]
fn restricted_gadget_representation_stays_valid() {
    let p = QParams::new(2, 2);
    let rep = rep_co_q_unit3track(&p).unwrap();
    let keep: Vec<VertexLabel> = rep.labels().step_by(3).cloned().collect();
    let sub = restrict_representation(&rep, &keep).unwrap();
    let target =
        multint::graph::induced_subgraph(&complement(&build_q(&p).unwrap()), &keep).unwrap();
    assert!(verify_representation(&sub, &target).unwrap().ok);
}

#[test]
fn gadget_clique_approximation_is_within_factor_t() {
    let p = QParams::new(1, 1);
    let rep = rep_co_q_unit2interval(&p).unwrap();
    let graph = intersection_graph(&rep);
    let w = Weights::uniform(&graph);
    let best = max_weight_clique_bruteforce(&graph, &w, OracleLimit::default())
        .unwrap()
        .weight;
    let got = approx_clique_t(&rep, &w).unwrap().weight;
    assert!(2 * got >= best && got <= best);
}
