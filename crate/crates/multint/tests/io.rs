use multint::constructions::Constructor;
use multint::corpus::{random_graph, random_representation, rng};
use multint::gadgets::{rep_co_q_unit3track, QParams};
use multint::graph::{Graph, VertexLabel, Weights};
use multint::io::{
    graph_from_edge_list, graph_from_json, graph_to_dot, graph_to_edge_list, graph_to_json,
    rep_from_json, rep_to_json, weights_from_json, weights_to_json,
};
use multint::representation::RepKind;
use multint::Error;
use rand::Rng;

#[test]
fn graph_json_round_trip() {
    let mut r = rng(1);
    for _ in 0..50 {
        let n = r.random_range(0..10);
        let g = random_graph(&mut r, n, 0.4);
        let text = graph_to_json(&g);
        assert_eq!(graph_from_json(&text).unwrap(), g);
    }
}

#[test]
fn graph_json_shape() {
    let g = Graph::from_original_edges(3, &[(1, 2), (2, 3)]).unwrap();
    let v: serde_json::Value = serde_json::from_str(&graph_to_json(&g)).unwrap();
    assert_eq!(v["vertices"], serde_json::json!(["x1", "x2", "x3"]));
    assert_eq!(v["edges"], serde_json::json!([["x1", "x2"], ["x2", "x3"]]));
}

#[test]
fn graph_json_errors() {
    assert!(matches!(graph_from_json("{"), Err(Error::Parse(_))));
    assert!(matches!(
        graph_from_json(r#"{"vertices":["x1","q"],"edges":[]}"#),
        Err(Error::Parse(_))
    ));
    assert!(matches!(
        graph_from_json(r#"{"vertices":["x1"],"edges":[["x1","x1"]]}"#),
        Err(Error::SelfLoop(_))
    ));
}

#[test]
fn edge_list_round_trip() {
    let g = Graph::from_original_edges(4, &[(1, 2), (3, 4), (1, 4)]).unwrap();
    let text = graph_to_edge_list(&g);
    assert_eq!(text, "x1 x2\nx1 x4\nx3 x4\n");
    assert_eq!(graph_from_edge_list(&text).unwrap(), g);
    let with_comments = "# a comment\n\nx1 x2\n   x3 x4  \nx1 x4\n";
    assert_eq!(graph_from_edge_list(with_comments).unwrap(), g);
    assert!(graph_from_edge_list("x1 x2 x3\n").is_err());
}

#[test]
fn isolated_vertices_survive_edge_lists() {
    let g = Graph::from_original_edges(3, &[(1, 2)]).unwrap();
    let back = graph_from_edge_list(&graph_to_edge_list(&g)).unwrap();
    assert_eq!(back, g);
}

#[test]
fn dot_export_lists_every_edge() {
    let g = Graph::from_original_edges(3, &[(1, 2), (2, 3)]).unwrap();
    let dot = graph_to_dot(&g);
    assert!(dot.starts_with("graph G {"));
    assert!(dot.contains("\"x1\" -- \"x2\";"));
    assert!(dot.contains("\"x2\" -- \"x3\";"));
    assert!(dot.trim_end().ends_with('}'));
}

#[test]
fn representation_json_round_trip() {
    let mut r = rng(2);
    for kind in [
        RepKind::Interval,
        RepKind::Track,
        RepKind::CircularInterval,
        RepKind::CircularTrack,
    ] {
        for _ in 0..20 {
            let n = r.random_range(0..8);
            let t = r.random_range(1..=3);
            let rep = random_representation(&mut r, kind, t, n);
            let text = rep_to_json(&rep);
            let back = rep_from_json(&text).unwrap();
            assert_eq!(back, rep);
            assert_eq!(rep_to_json(&back), text);
        }
    }
    let g = Graph::from_original_edges(4, &[(1, 2), (2, 3), (1, 4)]).unwrap();
    for c in Constructor::ALL {
        let rep = c.build(&g).unwrap();
        assert_eq!(rep_from_json(&rep_to_json(&rep)).unwrap(), rep);
    }
    let q = rep_co_q_unit3track(&QParams::new(2, 1)).unwrap();
    assert_eq!(rep_from_json(&rep_to_json(&q)).unwrap(), q);
}

#[test]
fn representation_json_shape() {
    let g = Graph::from_original_edges(2, &[(1, 2)]).unwrap();
    let rep = Constructor::CoSubd2TwoCircularTrack.build(&g).unwrap();
    let v: serde_json::Value = serde_json::from_str(&rep_to_json(&rep)).unwrap();
    assert_eq!(v["kind"], "circular-track");
    assert_eq!(v["t"], 2);
    assert_eq!(v["circumferences"], serde_json::json!([7, 7]));
    let keys: Vec<&String> = v["pieces"].as_object().unwrap().keys().collect();
    assert_eq!(keys, vec!["x1", "x2", "a1", "b1"]);
    assert!(v["pieces"]["a1"][0].get("lo").is_some());

    let linear = Constructor::CoSubd2ThreeTrack.build(&g).unwrap();
    let v: serde_json::Value = serde_json::from_str(&rep_to_json(&linear)).unwrap();
    assert!(v.get("circumferences").is_none());
}

#[test]
fn representation_json_rejects_invalid_input() {
    assert!(rep_from_json(
        r#"{"kind":"interval","t":1,"pieces":{"x1":[{"lo":3,"hi":1,"site":1}]}}"#
    )
    .is_err());
    assert!(rep_from_json(r#"{"kind":"wobbly","t":1,"pieces":{}}"#).is_err());
    assert!(rep_from_json(r#"{"kind":"circular-interval","t":1,"pieces":{}}"#).is_err());
}

#[test]
fn weights_json_round_trip() {
    let g = Graph::from_original_edges(3, &[(1, 2)]).unwrap();
    let mut w = Weights::uniform(&g);
    w.set(VertexLabel::Original(3), 9);
    let text = weights_to_json(&w);
    assert_eq!(weights_from_json(&text).unwrap(), w);
    assert!(weights_from_json(r#"{"x1": -2}"#).is_err());
}
