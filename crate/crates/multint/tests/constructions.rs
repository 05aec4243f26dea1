use multint::constructions::{
    k5_unit_2circular_track, rep_co_subd2_2circulartrack,
    rep_co_subd2_2circulartrack_with_circumference, rep_co_subd2_3track,
    rep_co_subd2_unit2circular, rep_co_subd2_unit3interval, rep_co_subd2_unit4track,
    rep_co_subd4_2interval, Constructor,
};
use multint::corpus::{all_graphs, random_graph, rng};
use multint::graph::{build_graph, complement, subdivide, Graph, VertexLabel};
use multint::io::rep_to_json;
use multint::representation::{
    intersection_graph, is_unit, restrict_representation, verify_representation, RepKind,
};
use multint::Error;
use rand::Rng;

fn piece(rep: &multint::representation::Representation, label: &str, i: usize) -> (i64, i64) {
    let p = &rep
        .pieces_of(&label.parse::<VertexLabel>().unwrap())
        .unwrap()[i];
    (p.lo, p.hi)
}

fn single_edge() -> Graph {
    Graph::from_original_edges(2, &[(1, 2)]).unwrap()
}

fn triangle() -> Graph {
    Graph::from_original_edges(3, &[(1, 2), (1, 3), (2, 3)]).unwrap()
}

#[test]
fn four_subdivision_two_interval_single_edge_coordinates() {
    let rep = rep_co_subd4_2interval(&single_edge()).unwrap();
    assert_eq!(rep.kind(), RepKind::Interval);
    assert_eq!(rep.t(), 2);
    let expected = [
        ("a1", 0, (0, 0)),
        ("x1", 0, (1, 3)),
        ("b1", 0, (1, 2)),
        ("c1", 0, (3, 5)),
        ("d1", 0, (6, 10)),
        ("a1", 1, (4, 8)),
        ("b1", 1, (9, 11)),
        ("x1", 1, (10, 12)),
        ("x2", 1, (11, 13)),
        ("c1", 1, (12, 13)),
        ("d1", 1, (14, 14)),
    ];
    for (label, i, want) in expected {
        assert_eq!(piece(&rep, label, i), want, "{label} piece {i}");
    }
}

#[test]
fn unit_three_interval_single_edge_coordinates() {
    let rep = rep_co_subd2_unit3interval(&single_edge()).unwrap();
    let expected = [
        ("b1", 0, (1, 2)),
        ("a1", 0, (3, 4)),
        ("x1", 0, (5, 6)),
        ("x2", 0, (6, 7)),
        ("b1", 1, (8, 9)),
        ("x1", 1, (9, 10)),
        ("x2", 1, (10, 11)),
        ("a1", 1, (11, 12)),
        ("b1", 2, (13, 14)),
        ("a1", 2, (15, 16)),
        ("x1", 2, (17, 18)),
        ("x2", 2, (17, 18)),
    ];
    for (label, i, want) in expected {
        assert_eq!(piece(&rep, label, i), want, "{label} piece {i}");
    }
    assert_eq!(is_unit(&rep), Some(1));
}

#[test]
fn three_track_single_edge_coordinates() {
    let rep = rep_co_subd2_3track(&single_edge()).unwrap();
    assert_eq!(rep.kind(), RepKind::Track);
    let expected = [
        ("a1", 0, (0, 1)),
        ("x1", 0, (2, 4)),
        ("x2", 0, (3, 5)),
        ("b1", 0, (6, 7)),
        ("x1", 1, (0, 1)),
        ("x2", 1, (0, 2)),
        ("a1", 1, (2, 3)),
        ("b1", 1, (4, 5)),
        ("a1", 2, (0, 1)),
        ("b1", 2, (2, 3)),
        ("x1", 2, (3, 5)),
        ("x2", 2, (4, 5)),
    ];
    for (label, i, want) in expected {
        assert_eq!(piece(&rep, label, i), want, "{label} piece {i}");
    }
}

#[test]
fn unit_four_track_single_edge() {
    let e = single_edge();
    let rep = rep_co_subd2_unit4track(&e).unwrap();
    assert_eq!((rep.kind(), rep.t(), rep.len()), (RepKind::Track, 4, 4));
    assert_eq!(is_unit(&rep), Some(1));
    assert!(
        verify_representation(&rep, &complement(&subdivide(&e, 2).unwrap()))
            .unwrap()
            .ok
    );
}

#[test]
fn unit_two_circular_single_edge() {
    let e = single_edge();
    let rep = rep_co_subd2_unit2circular(&e).unwrap();
    assert_eq!(rep.kind(), RepKind::CircularInterval);
    assert_eq!(rep.circumferences(), &[12]);
    assert_eq!(is_unit(&rep), Some(1));
    assert!(
        verify_representation(&rep, &complement(&subdivide(&e, 2).unwrap()))
            .unwrap()
            .ok
    );
}

#[test]
fn two_circular_track_single_edge() {
    let e = single_edge();
    let rep = rep_co_subd2_2circulartrack(&e).unwrap();
    assert_eq!(rep.kind(), RepKind::CircularTrack);
    assert_eq!(rep.circumferences(), &[7, 7]);
    assert!(
        verify_representation(&rep, &complement(&subdivide(&e, 2).unwrap()))
            .unwrap()
            .ok
    );
}

#[test]
fn two_circular_track_circumference_override() {
    let k3 = triangle();
    let target = complement(&subdivide(&k3, 2).unwrap());
    for l in [11, 12, 20, 57] {
        let rep = rep_co_subd2_2circulartrack_with_circumference(&k3, l).unwrap();
        assert_eq!(rep.circumferences(), &[l, l]);
        assert!(
            verify_representation(&rep, &target).unwrap().ok,
            "circumference {l}"
        );
    }
    assert!(matches!(
        rep_co_subd2_2circulartrack_with_circumference(&k3, 10),
        Err(Error::CircumferenceTooSmall { .. })
    ));
}

#[test]
fn every_constructor_realizes_the_triangle_target() {
    let k3 = triangle();
    for c in Constructor::ALL {
        let rep = c.build(&k3).unwrap();
        let report = verify_representation(&rep, &c.target(&k3).unwrap()).unwrap();
        assert!(report.ok, "{} failed: {:?}", c.id(), report);
    }
}

#[test]
fn every_constructor_on_all_graphs_up_to_five_vertices() {
    for n in 2..=5 {
        for g in all_graphs(n) {
            for c in Constructor::ALL {
                let rep = c.build(&g).unwrap();
                let report = verify_representation(&rep, &c.target(&g).unwrap()).unwrap();
                assert!(
                    report.ok,
                    "{} failed on {:?}",
                    c.id(),
                    g.edges().collect::<Vec<_>>()
                );
            }
        }
    }
}

#[test]
fn unit_constructors_report_m_squared() {
    let mut r = rng(41);
    for _ in 0..60 {
        let n = r.random_range(2..=8);
        let p = r.random_range(0.1..0.9);
        let g = random_graph(&mut r, n, p);
        if g.m() == 0 {
            continue;
        }
        let m2 = (g.m() * g.m()) as i64;
        assert_eq!(is_unit(&rep_co_subd2_unit3interval(&g).unwrap()), Some(m2));
        assert_eq!(is_unit(&rep_co_subd2_unit4track(&g).unwrap()), Some(m2));
        let circ = rep_co_subd2_unit2circular(&g).unwrap();
        assert_eq!(is_unit(&circ), Some(m2));
        assert_eq!(circ.circumferences(), &[6 * m2 + 2 * g.m() as i64 + 4]);
    }
}

#[test]
fn constructors_reject_edgeless_graphs() {
    let g = Graph::from_original_edges(3, &[]).unwrap();
    for c in Constructor::ALL {
        assert!(
            matches!(c.build(&g), Err(Error::EmptyEdgeSet)),
            "{}",
            c.id()
        );
    }
}

#[test]
fn constructors_reject_non_original_vertices() {
    let s = subdivide(&single_edge(), 2).unwrap();
    assert!(matches!(
        rep_co_subd2_3track(&s),
        Err(Error::NotOriginalGraph(_))
    ));
}

#[test]
fn constructors_accept_sparse_label_sets() {
    let x = VertexLabel::Original;
    let g = build_graph(vec![x(3), x(7), x(10)], vec![(x(3), x(10)), (x(7), x(10))]).unwrap();
    for c in Constructor::ALL {
        let rep = c.build(&g).unwrap();
        assert!(
            verify_representation(&rep, &c.target(&g).unwrap())
                .unwrap()
                .ok,
            "{}",
            c.id()
        );
    }
}

#[test]
fn construction_output_is_deterministic() {
    let mut r = rng(43);
    let g = random_graph(&mut r, 7, 0.4);
    for c in Constructor::ALL {
        assert_eq!(
            rep_to_json(&c.build(&g).unwrap()),
            rep_to_json(&c.build(&g).unwrap())
        );
    }
}

#[test]
fn restricted_constructions_stay_valid() {
    let k3 = triangle();
    let rep = rep_co_subd2_unit3interval(&k3).unwrap();
    let keep: Vec<VertexLabel> = ["x1", "a1", "b2", "a3", "x3"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let sub = restrict_representation(&rep, &keep).unwrap();
    let target = multint::graph::induced_subgraph(&intersection_graph(&rep), &keep).unwrap();
    assert!(verify_representation(&sub, &target).unwrap().ok);
}

#[test]
fn k5_fixture_has_two_five_cycles() {
    let rep = k5_unit_2circular_track();
    let k5 = Graph::from_original_edges(
        5,
        &[
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 5),
        ],
    )
    .unwrap();
    assert_eq!(intersection_graph(&rep), k5);
    assert!(is_unit(&rep).is_some());
    for circle in 1..=2 {
        let g = intersection_graph(&rep.project_site(circle).unwrap());
        assert_eq!(g.m(), 5);
        assert!((0..5).all(|i| g.degree(i) == 2) && g.is_connected());
    }
}
