//! Seeded generators for test and benchmark instances.
//!
//! Every generator draws only from the random number generator it is given,
//! so a seed passed to [`rng`] fixes the whole corpus.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexLabel, Weights};
use crate::representation::{Piece, RepKind, Representation};
use crate::solvers::CoBipartitePartition;

/// The corpus random number generator for a seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every graph on `x1..xn` with at least one edge, in edge-mask order.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    (1u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Graph::from_original_edges(n, &edges).expect("generated edges are valid")
        })
        .collect()
}

/// An Erdos-Renyi graph on `x1..xn` with edge probability `p`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let p = p.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_original_edges(n, &edges).expect("generated edges are valid")
}

/// A random representation of kind `kind` with `t` pieces on `x1..xn`.
///
/// Linear coordinates lie in `[0, 4n + 4]` with piece lengths up to `n + 1`;
/// circles have random circumferences between `2n + 4` and `4n + 8`.
pub fn random_representation<R: Rng + ?Sized>(
    rng: &mut R,
    kind: RepKind,
    t: usize,
    n: usize,
) -> Representation {
    let span = 4 * n as i64 + 4;
    let circles = match kind {
        RepKind::Interval | RepKind::Track => 0,
        RepKind::CircularInterval => 1,
        RepKind::CircularTrack => t,
    };
    let circumferences: Vec<i64> = (0..circles)
        .map(|_| rng.random_range(span / 2 + 2..=span + 4))
        .collect();
    let mut pieces = BTreeMap::new();
    for v in 1..=n {
        let list = (0..t)
            .map(|i| {
                let site = if kind.is_track() { i + 1 } else { 1 };
                let len = rng.random_range(0..=n as i64 + 1);
                if kind.is_circular() {
                    let l = circumferences[site - 1];
                    let lo = rng.random_range(0..l);
                    Piece::new(lo, (lo + len.min(l - 1)) % l, site)
                } else {
                    let lo = rng.random_range(0..=span - len);
                    Piece::new(lo, lo + len, site)
                }
            })
            .collect();
        pieces.insert(VertexLabel::Original(v), list);
    }
    Representation::new(kind, t, circumferences, pieces).expect("generated representation is valid")
}

/// Independent uniform weights in `0..=max` for the given labels.
pub fn random_weights<'a, R: Rng + ?Sized>(
    rng: &mut R,
    labels: impl IntoIterator<Item = &'a VertexLabel>,
    max: u64,
) -> Weights {
    Weights::from_pairs(
        labels
            .into_iter()
            .map(|v| (v.clone(), rng.random_range(0..=max)))
            .collect::<Vec<_>>(),
    )
}

/// A co-bipartite graph on `x1..xn`: two cliques with random edges between
/// them, its partition, and weights in `1..=max_weight`.
pub fn random_cobipartite<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_weight: u64,
) -> (Graph, CoBipartitePartition, Weights) {
    let split = rng.random_range(0..=n);
    let p = rng.random_range(0.0..1.0);
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let same_side = (i <= split) == (j <= split);
            if same_side || rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    let g = Graph::from_original_edges(n, &edges).expect("generated edges are valid");
    let partition = CoBipartitePartition::new(
        (1..=split).map(VertexLabel::Original).collect(),
        (split + 1..=n).map(VertexLabel::Original).collect(),
    );
    let weights = Weights::from_pairs(
        (1..=n)
            .map(|i| (VertexLabel::Original(i), rng.random_range(1..=max_weight)))
            .collect::<Vec<_>>(),
    );
    (g, partition, weights)
}
