use std::collections::BTreeMap;

use multint::constructions::{
    rep_co_subd2_3track, rep_co_subd2_unit3interval, rep_co_subd4_2interval,
};
use multint::graph::{complement, induced_subgraph, subdivide, Graph, VertexLabel};
use multint::representation::{
    intersection_graph, is_unit, pieces_intersect, restrict_representation, verify_representation,
    Piece, RepKind, Representation,
};
use multint::Error;

fn x(i: usize) -> VertexLabel {
    VertexLabel::Original(i)
}

type PieceList = Vec<(usize, Vec<(i64, i64, usize)>)>;

fn linear(kind: RepKind, t: usize, pieces: PieceList) -> Representation {
    let map: BTreeMap<VertexLabel, Vec<Piece>> = pieces
        .into_iter()
        .map(|(v, ps)| {
            (
                x(v),
                ps.into_iter()
                    .map(|(lo, hi, s)| Piece::new(lo, hi, s))
                    .collect(),
            )
        })
        .collect();
    Representation::new(kind, t, vec![], map).unwrap()
}

#[test]
fn touching_intervals_intersect() {
    let a = Piece::new(0, 2, 1);
    let b = Piece::new(2, 4, 1);
    assert!(pieces_intersect(&a, &b, RepKind::Interval, 0));
    assert!(!pieces_intersect(
        &Piece::new(0, 1, 1),
        &Piece::new(2, 4, 1),
        RepKind::Interval,
        0
    ));
}

#[test]
fn pieces_on_different_tracks_never_meet() {
    let a = Piece::new(0, 1, 1);
    let b = Piece::new(0, 1, 2);
    assert!(!pieces_intersect(&a, &b, RepKind::Track, 0));
    assert!(!pieces_intersect(&a, &b, RepKind::CircularTrack, 10));
}

#[test]
fn wrapping_arcs_intersect_across_the_origin() {
    let a = Piece::new(8, 2, 1);
    let b = Piece::new(1, 3, 1);
    assert!(pieces_intersect(&a, &b, RepKind::CircularInterval, 10));
    assert!(pieces_intersect(&b, &a, RepKind::CircularInterval, 10));
    assert!(!pieces_intersect(
        &a,
        &Piece::new(3, 7, 1),
        RepKind::CircularInterval,
        10
    ));
    assert!(pieces_intersect(
        &a,
        &Piece::new(9, 0, 1),
        RepKind::CircularInterval,
        10
    ));
    assert!(pieces_intersect(
        &Piece::new(5, 5, 1),
        &Piece::new(3, 7, 1),
        RepKind::CircularInterval,
        10
    ));
}

#[test]
fn intersection_graph_of_three_intervals() {
    let rep = linear(
        RepKind::Interval,
        1,
        vec![
            (1, vec![(0, 2, 1)]),
            (2, vec![(1, 3, 1)]),
            (3, vec![(4, 5, 1)]),
        ],
    );
    let g = intersection_graph(&rep);
    assert_eq!(g, Graph::from_original_edges(3, &[(1, 2)]).unwrap());
}

#[test]
fn two_track_pieces_compare_only_on_their_own_track() {
    let rep = linear(
        RepKind::Track,
        2,
        vec![
            (1, vec![(0, 1, 1), (5, 6, 2)]),
            (2, vec![(5, 6, 1), (0, 1, 2)]),
        ],
    );
    assert_eq!(intersection_graph(&rep).m(), 0);
}

#[test]
fn single_edge_four_subdivision_realizes_co_p6() {
    let e = Graph::from_original_edges(2, &[(1, 2)]).unwrap();
    let rep = rep_co_subd4_2interval(&e).unwrap();
    let target = complement(&subdivide(&e, 4).unwrap());
    assert_eq!(intersection_graph(&rep), target);
}

#[test]
fn verification_reports_perturbations() {
    let k3 = Graph::from_original_edges(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
    let target = complement(&subdivide(&k3, 2).unwrap());
    let rep = rep_co_subd2_3track(&k3).unwrap();
    let report = verify_representation(&rep, &target).unwrap();
    assert!(report.ok);
    assert!(report.missing_edges.is_empty() && report.extra_edges.is_empty());

    let mut pieces = rep.pieces().clone();
    let first = pieces.get_mut(&x(1)).unwrap();
    first[0] = Piece::new(first[0].lo + 100, first[0].hi + 100, first[0].site);
    let moved =
        Representation::new(rep.kind(), rep.t(), rep.circumferences().to_vec(), pieces).unwrap();
    let report = verify_representation(&moved, &target).unwrap();
    assert!(!report.ok);
    assert!(!report.missing_edges.is_empty());
}

#[test]
fn empty_representation_verifies_against_empty_graph() {
    let rep = Representation::new(RepKind::Interval, 2, vec![], BTreeMap::new()).unwrap();
    let g = Graph::from_original_edges(0, &[]).unwrap();
    assert!(verify_representation(&rep, &g).unwrap().ok);
}

#[test]
fn verification_rejects_label_mismatch() {
    let rep = linear(RepKind::Interval, 1, vec![(1, vec![(0, 1, 1)])]);
    let g = Graph::from_original_edges(2, &[]).unwrap();
    assert!(matches!(
        verify_representation(&rep, &g),
        Err(Error::LabelSetMismatch { .. })
    ));
}

#[test]
fn unit_length_detection() {
    let k3 = Graph::from_original_edges(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
    assert_eq!(is_unit(&rep_co_subd2_unit3interval(&k3).unwrap()), Some(9));
    let rep = linear(
        RepKind::Interval,
        1,
        vec![(1, vec![(0, 1, 1)]), (2, vec![(0, 2, 1)])],
    );
    assert_eq!(is_unit(&rep), None);
    let mut arcs = BTreeMap::new();
    arcs.insert(x(1), vec![Piece::new(8, 1, 1)]);
    arcs.insert(x(2), vec![Piece::new(3, 6, 1)]);
    let circ = Representation::new(RepKind::CircularInterval, 1, vec![10], arcs).unwrap();
    assert_eq!(is_unit(&circ), Some(3));
}

#[test]
fn invalid_representations_are_rejected() {
    let mut bad = BTreeMap::new();
    bad.insert(x(1), vec![Piece::new(3, 1, 1)]);
    assert!(matches!(
        Representation::new(RepKind::Interval, 1, vec![], bad),
        Err(Error::InvalidRepresentation(_))
    ));
    let mut wrong_track = BTreeMap::new();
    wrong_track.insert(x(1), vec![Piece::new(0, 1, 2), Piece::new(0, 1, 1)]);
    assert!(Representation::new(RepKind::Track, 2, vec![], wrong_track).is_err());
    let mut off_circle = BTreeMap::new();
    off_circle.insert(x(1), vec![Piece::new(0, 12, 1)]);
    assert!(Representation::new(RepKind::CircularInterval, 1, vec![10], off_circle).is_err());
    let mut wrong_count = BTreeMap::new();
    wrong_count.insert(x(1), vec![Piece::new(0, 1, 1)]);
    assert!(Representation::new(RepKind::Interval, 2, vec![], wrong_count).is_err());
}

#[test]
fn restriction_examples() {
    let k3 = Graph::from_original_edges(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
    let rep = rep_co_subd2_3track(&k3).unwrap();
    let all: Vec<VertexLabel> = rep.labels().cloned().collect();
    assert_eq!(restrict_representation(&rep, &all).unwrap(), rep);
    let none = restrict_representation(&rep, &[]).unwrap();
    assert_eq!(none.len(), 0);
    let some = vec![x(1), x(3), "a2".parse().unwrap(), "b3".parse().unwrap()];
    let sub = restrict_representation(&rep, &some).unwrap();
    assert_eq!(
        intersection_graph(&sub),
        induced_subgraph(&intersection_graph(&rep), &some).unwrap()
    );
    assert!(matches!(
        restrict_representation(&rep, &[x(9)]),
        Err(Error::UnknownLabel(_))
    ));
}

#[test]
fn translation_and_mirror_preserve_the_graph() {
    let k3 = Graph::from_original_edges(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
    let rep = rep_co_subd2_unit3interval(&k3).unwrap();
    let g = intersection_graph(&rep);
    assert_eq!(intersection_graph(&rep.translated(-37)), g);
    assert_eq!(intersection_graph(&rep.mirrored()), g);
    assert_eq!(is_unit(&rep.mirrored()), is_unit(&rep));
}
