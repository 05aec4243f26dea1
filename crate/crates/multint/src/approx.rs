//! Clique algorithms driven by a multiple-interval representation.
//!
//! * [`stab_weight_scan`] sweeps piece endpoints for the heaviest single
//!   stab point, a `2t`-approximation.
//! * [`approx_clique_t`] pairs left ends of one vertex and solves each
//!   induced co-bipartite instance exactly, a `t`-approximation.
//! * [`exact_clique_2track`] pairs arbitrary endpoints on a 2-track
//!   representation and is exact there.
//! * [`orient_and_color`] certifies every edge by a left end lying inside a
//!   piece of the other endpoint.
//!
//! Every function resolves ties towards the lexicographically least member
//! list, so sequential and parallel execution return identical results.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::graph::{Graph, VertexLabel, Weights};
use crate::representation::{intersection_graph_with, Piece, RepKind, Representation};
use crate::solvers::{cobipartite_by_index, CliqueResult};

/// A point on a site: a track or circle index (1-based) and an integer coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct StabPoint {
    pub site: usize,
    pub coord: i64,
}

/// The heaviest stab point found by [`stab_weight_scan`] and the vertices it stabs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanResult {
    /// `None` only when the representation has no pieces.
    pub point: Option<StabPoint>,
    pub clique: CliqueResult,
}

/// An edge `from -> to` certified by piece `color` of `from`.
///
/// The left end of piece `color` of `from` lies inside some piece of `to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedEdge {
    pub from: VertexLabel,
    pub to: VertexLabel,
    /// 1-based piece index of `from`.
    pub color: usize,
}

/// One direction and color for every edge of an intersection graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ColoredOrientation {
    edges: BTreeMap<(VertexLabel, VertexLabel), OrientedEdge>,
}

impl ColoredOrientation {
    /// Number of oriented edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// The orientation of edge `uv`, given its endpoints in either order.
    pub fn get(&self, u: &VertexLabel, v: &VertexLabel) -> Option<&OrientedEdge> {
        let key = if u <= v {
            (u.clone(), v.clone())
        } else {
            (v.clone(), u.clone())
        };
        self.edges.get(&key)
    }

    /// Oriented edges ordered by their unordered endpoint pair.
    pub fn iter(&self) -> impl Iterator<Item = &OrientedEdge> {
        self.edges.values()
    }

    /// Heads of the edges leaving `u`, in label order.
    pub fn out_neighbors(&self, u: &VertexLabel) -> Vec<VertexLabel> {
        let mut out: Vec<VertexLabel> = self
            .iter()
            .filter(|e| &e.from == u)
            .map(|e| e.to.clone())
            .collect();
        out.sort();
        out
    }

    /// Tails of the edges entering `u`, in label order.
    pub fn in_neighbors(&self, u: &VertexLabel) -> Vec<VertexLabel> {
        let mut out: Vec<VertexLabel> = self
            .iter()
            .filter(|e| &e.to == u)
            .map(|e| e.from.clone())
            .collect();
        out.sort();
        out
    }
}

/// Smallest piece index `i` (1-based) of `u` whose left end lies in a piece of `v`.
fn witness(rep: &Representation, u: &[Piece], v: &[Piece]) -> Option<usize> {
    u.iter()
        .position(|p| {
            let point = StabPoint {
                site: p.site,
                coord: p.lo,
            };
            v.iter().any(|q| rep.piece_contains(q, point))
        })
        .map(|i| i + 1)
}

/// Orients and colors every edge of the intersection graph.
///
/// Edge `uv` with `u < v` is oriented `u -> v` when some left end of `u`
/// lies in a piece of `v`, and `v -> u` otherwise; the color is the smallest
/// witnessing piece index.
pub fn orient_and_color(rep: &Representation) -> ColoredOrientation {
    let lists: Vec<(&VertexLabel, &Vec<Piece>)> = rep.pieces().iter().collect();
    let rows = exec::map_range(Execution::default(), lists.len(), |a| {
        let (u, pu) = lists[a];
        lists[a + 1..]
            .iter()
            .filter_map(|&(v, pv)| {
                let edge = match witness(rep, pu, pv) {
                    Some(color) => OrientedEdge {
                        from: u.clone(),
                        to: v.clone(),
                        color,
                    },
                    None => {
                        let color = witness(rep, pv, pu)?;
                        OrientedEdge {
                            from: v.clone(),
                            to: u.clone(),
                            color,
                        }
                    }
                };
                Some(((u.clone(), v.clone()), edge))
            })
            .collect::<Vec<_>>()
    });
    ColoredOrientation {
        edges: rows.into_iter().flatten().collect(),
    }
}

/// Splits a piece into at most two non-wrapping segments on its site.
fn segments(rep: &Representation, p: &Piece) -> Vec<(i64, i64)> {
    if rep.kind().is_circular() && p.hi < p.lo {
        vec![(0, p.hi), (p.lo, rep.circumference(p.site) - 1)]
    } else {
        vec![(p.lo, p.hi)]
    }
}

/// Indices of the vertices owning a piece that contains `point`.
fn stabbed(rep: &Representation, point: StabPoint) -> Vec<usize> {
    rep.pieces()
        .values()
        .enumerate()
        .filter(|(_, list)| list.iter().any(|p| rep.piece_contains(p, point)))
        .map(|(i, _)| i)
        .collect()
}

/// Finds the piece endpoint stabbing the most total weight.
///
/// A vertex counts once at a point even if several of its pieces contain it.
/// Each site is swept in coordinate order with per-vertex cover counters.
/// Among points of maximum weight the lexicographically least stabbed set
/// wins, then the smallest `(site, coord)`.
pub fn stab_weight_scan(rep: &Representation, weights: &Weights) -> Result<ScanResult> {
    let labels: Vec<VertexLabel> = rep.labels().cloned().collect();
    let w = weights.for_labels(&labels)?;
    let sites = if rep.kind().is_track() { rep.t() } else { 1 };

    let mut best_weight = 0u64;
    let mut ties: Vec<StabPoint> = Vec::new();
    for site in 1..=sites {
        // Events: (coord, kind, vertex); kind 0 opens before evaluation, kind 1 closes after.
        let mut events: Vec<(i64, u8, usize)> = Vec::new();
        let mut candidates: BTreeSet<i64> = BTreeSet::new();
        for (v, list) in rep.pieces().values().enumerate() {
            for p in list.iter().filter(|p| p.site == site) {
                candidates.insert(p.lo);
                candidates.insert(p.hi);
                for (lo, hi) in segments(rep, p) {
                    events.push((lo, 0, v));
                    events.push((hi, 1, v));
                }
            }
        }
        events.sort_unstable();
        let mut cover = vec![0usize; labels.len()];
        let mut current = 0u64;
        let mut next = 0;
        for &c in &candidates {
            while next < events.len()
                && (events[next].0 < c || (events[next].0 == c && events[next].1 == 0))
            {
                let (_, kind, v) = events[next];
                if kind == 0 {
                    if cover[v] == 0 {
                        current += w[v];
                    }
                    cover[v] += 1;
                } else {
                    cover[v] -= 1;
                    if cover[v] == 0 {
                        current -= w[v];
                    }
                }
                next += 1;
            }
            let point = StabPoint { site, coord: c };
            if ties.is_empty() || current > best_weight {
                best_weight = current;
                ties = vec![point];
            } else if current == best_weight {
                ties.push(point);
            }
        }
    }

    let result_of = |members: &[usize]| CliqueResult {
        members: members.iter().map(|&i| labels[i].clone()).collect(),
        weight: members.iter().map(|&i| w[i]).sum(),
    };
    let best = ties
        .into_iter()
        .map(|point| (result_of(&stabbed(rep, point)), point))
        .min_by(|(a, pa), (b, pb)| a.members.cmp(&b.members).then(pa.cmp(pb)));
    Ok(match best {
        Some((clique, point)) => ScanResult {
            point: Some(point),
            clique,
        },
        None => ScanResult {
            point: None,
            clique: CliqueResult::default(),
        },
    })
}

/// Solves every distinct co-bipartite subproblem and keeps the best.
///
/// Weights are computed for all subproblems first; only those reaching the
/// maximum are re-solved for their lexicographically least optimum.
fn best_over_sides(
    g: &Graph,
    w: &[u64],
    problems: BTreeSet<(Vec<usize>, Vec<usize>)>,
    exec: Execution,
) -> CliqueResult {
    let problems: Vec<(Vec<usize>, Vec<usize>)> = problems.into_iter().collect();
    let adjacent = |i: usize, j: usize| g.adjacent(i, j);
    let weights = exec::map(exec, &problems, |(a, b)| {
        cobipartite_by_index(a, b, w, adjacent, false).0
    });
    let Some(&top) = weights.iter().max() else {
        return CliqueResult::default();
    };
    let winners: Vec<&(Vec<usize>, Vec<usize>)> = problems
        .iter()
        .zip(&weights)
        .filter(|&(_, &x)| x == top)
        .map(|(p, _)| p)
        .collect();
    let sets = exec::map(exec, &winners, |(a, b)| {
        cobipartite_by_index(a, b, w, adjacent, true).1
    });
    let members = sets.into_iter().min().unwrap_or_default();
    CliqueResult::from_indices(g, &members, w)
}

/// Side pair for two stab points: vertices stabbed by `p`, then the rest stabbed by `q`.
fn sides(rep: &Representation, p: StabPoint, q: StabPoint) -> (Vec<usize>, Vec<usize>) {
    let a = stabbed(rep, p);
    let b = stabbed(rep, q)
        .into_iter()
        .filter(|v| a.binary_search(v).is_err())
        .collect();
    (a, b)
}

/// The `t`-approximation over pairs of left ends of a single vertex.
pub fn approx_clique_t(rep: &Representation, weights: &Weights) -> Result<CliqueResult> {
    approx_clique_t_with(rep, weights, Execution::default())
}

/// [`approx_clique_t`] with an explicit execution strategy.
///
/// For every vertex `u` and piece indices `i <= j`, side A holds the vertices
/// with a piece containing the left end of piece `i` of `u`, side B the
/// remaining vertices containing the left end of piece `j`. Both sides are
/// cliques, so each subproblem is solved exactly by minimum cut.
pub fn approx_clique_t_with(
    rep: &Representation,
    weights: &Weights,
    exec: Execution,
) -> Result<CliqueResult> {
    let g = intersection_graph_with(rep, exec);
    let w = weights.indexed(&g)?;
    let lists: Vec<&Vec<Piece>> = rep.pieces().values().collect();
    let per_vertex = exec::map(exec, &lists, |list| {
        let ends: Vec<StabPoint> = list
            .iter()
            .map(|p| StabPoint {
                site: p.site,
                coord: p.lo,
            })
            .collect();
        let mut out = Vec::new();
        for i in 0..ends.len() {
            for j in i..ends.len() {
                out.push(sides(rep, ends[i], ends[j]));
            }
        }
        out
    });
    let problems: BTreeSet<_> = per_vertex.into_iter().flatten().collect();
    Ok(best_over_sides(&g, &w, problems, exec))
}

/// Exact maximum-weight clique of a 2-track representation.
pub fn exact_clique_2track(rep: &Representation, weights: &Weights) -> Result<CliqueResult> {
    exact_clique_2track_with(rep, weights, Execution::default())
}

/// [`exact_clique_2track`] with an explicit execution strategy.
///
/// Every clique of a 2-track graph is covered by two stab points, each
/// placeable on a piece endpoint. All unordered pairs of endpoint candidates,
/// including a point paired with itself, define a co-bipartite subproblem.
pub fn exact_clique_2track_with(
    rep: &Representation,
    weights: &Weights,
    exec: Execution,
) -> Result<CliqueResult> {
    if rep.kind() != RepKind::Track || rep.t() != 2 {
        return Err(Error::WrongKind(format!(
            "exact 2-track clique needs a track representation with t = 2, got {} with t = {}",
            rep.kind().name(),
            rep.t()
        )));
    }
    let g = intersection_graph_with(rep, exec);
    let w = weights.indexed(&g)?;
    let points: Vec<StabPoint> = rep
        .pieces()
        .values()
        .flatten()
        .flat_map(|p| {
            [
                StabPoint {
                    site: p.site,
                    coord: p.lo,
                },
                StabPoint {
                    site: p.site,
                    coord: p.hi,
                },
            ]
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let rows = exec::map_range(exec, points.len(), |a| {
        (a..points.len())
            .map(|b| sides(rep, points[a], points[b]))
            .collect::<Vec<_>>()
    });
    let problems: BTreeSet<_> = rows.into_iter().flatten().collect();
    Ok(best_over_sides(&g, &w, problems, exec))
}
