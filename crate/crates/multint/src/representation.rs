//! Interval, track, circular-interval and circular-track representations.
//!
//! Every vertex owns exactly `t` closed pieces with integer endpoints.
//!
//! * `Interval`: `t` intervals on one line, all on site 1.
//! * `Track`: one interval on each of `t` parallel lines; piece `i` sits on site `i`.
//! * `CircularInterval`: `t` arcs on one circle of circumference `L`.
//! * `CircularTrack`: one arc on each of `t` circles; piece `i` sits on circle `i`.
//!
//! An arc `[lo, hi]` runs clockwise from `lo` to `hi`, with both ends in
//! `[0, L)`. It wraps through 0 when `hi < lo`, and `lo == hi` is a single
//! point. Touching endpoints count as intersection throughout.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::approx::StabPoint;
use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::graph::{Graph, VertexLabel};

/// The four representation models.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RepKind {
    Interval,
    Track,
    CircularInterval,
    CircularTrack,
}

impl RepKind {
    /// Whether pieces are arcs on circles.
    pub fn is_circular(self) -> bool {
        matches!(self, RepKind::CircularInterval | RepKind::CircularTrack)
    }

    /// Whether piece `i` of every vertex lives on its own site `i`.
    pub fn is_track(self) -> bool {
        matches!(self, RepKind::Track | RepKind::CircularTrack)
    }

    /// Text name used in JSON.
    pub fn name(self) -> &'static str {
        match self {
            RepKind::Interval => "interval",
            RepKind::Track => "track",
            RepKind::CircularInterval => "circular-interval",
            RepKind::CircularTrack => "circular-track",
        }
    }
}

/// A closed interval or arc `[lo, hi]` on a site (track or circle, 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Piece {
    pub lo: i64,
    pub hi: i64,
    pub site: usize,
}

impl Piece {
    pub fn new(lo: i64, hi: i64, site: usize) -> Self {
        Piece { lo, hi, site }
    }
}

/// Whether two pieces share a point.
///
/// Pieces on different sites never meet. Arc ends already lie in `[0, L)`,
/// so the circumference argument only documents the circle being used.
pub fn pieces_intersect(p: &Piece, q: &Piece, kind: RepKind, _circumference: i64) -> bool {
    if p.site != q.site {
        return false;
    }
    if !kind.is_circular() {
        return p.lo.max(q.lo) <= p.hi.min(q.hi);
    }
    match (p.lo <= p.hi, q.lo <= q.hi) {
        (true, true) => p.lo.max(q.lo) <= p.hi.min(q.hi),
        (false, true) => q.hi >= p.lo || q.lo <= p.hi,
        (true, false) => p.hi >= q.lo || p.lo <= q.hi,
        (false, false) => true,
    }
}

/// Whether a piece contains an integer point on a site.
pub fn piece_contains_point(piece: &Piece, site: usize, coord: i64, kind: RepKind) -> bool {
    if piece.site != site {
        return false;
    }
    if kind.is_circular() && piece.hi < piece.lo {
        coord >= piece.lo || coord <= piece.hi
    } else {
        piece.lo <= coord && coord <= piece.hi
    }
}

/// A validated representation: kind, multiplicity, circle lengths and pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    kind: RepKind,
    t: usize,
    circumferences: Vec<i64>,
    pieces: BTreeMap<VertexLabel, Vec<Piece>>,
}

impl Representation {
    /// Validates and builds a representation.
    ///
    /// Circular kinds need one circumference per circle (one for
    /// `CircularInterval`, `t` for `CircularTrack`); linear kinds need none.
    pub fn new(
        kind: RepKind,
        t: usize,
        circumferences: Vec<i64>,
        pieces: BTreeMap<VertexLabel, Vec<Piece>>,
    ) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidRepresentation(msg));
        if t == 0 {
            return invalid("multiplicity t must be at least 1".into());
        }
        let circles = match kind {
            RepKind::Interval | RepKind::Track => 0,
            RepKind::CircularInterval => 1,
            RepKind::CircularTrack => t,
        };
        if circumferences.len() != circles {
            return invalid(format!(
                "{} needs {circles} circumferences, got {}",
                kind.name(),
                circumferences.len()
            ));
        }
        if let Some(l) = circumferences.iter().find(|&&l| l < 1) {
            return invalid(format!("circumference {l} is not positive"));
        }
        for (label, list) in &pieces {
            if list.len() != t {
                return invalid(format!("{label} has {} pieces, expected {t}", list.len()));
            }
            for (i, p) in list.iter().enumerate() {
                let site = if kind.is_track() { i + 1 } else { 1 };
                if p.site != site {
                    return invalid(format!(
                        "{label} piece {} is on site {}, expected {site}",
                        i + 1,
                        p.site
                    ));
                }
                if kind.is_circular() {
                    let l = circumferences[p.site - 1];
                    if !(0..l).contains(&p.lo) || !(0..l).contains(&p.hi) {
                        return invalid(format!(
                            "{label} arc [{}, {}] leaves the circle of length {l}",
                            p.lo, p.hi
                        ));
                    }
                } else if p.lo > p.hi {
                    return invalid(format!("{label} interval [{}, {}] is reversed", p.lo, p.hi));
                }
            }
        }
        Ok(Representation {
            kind,
            t,
            circumferences,
            pieces,
        })
    }

    pub fn kind(&self) -> RepKind {
        self.kind
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Circle lengths, indexed by site minus one; empty for linear kinds.
    pub fn circumferences(&self) -> &[i64] {
        &self.circumferences
    }

    /// Length of the circle carrying `site`, or 0 for linear kinds.
    pub fn circumference(&self, site: usize) -> i64 {
        match self.kind {
            RepKind::CircularInterval => self.circumferences[0],
            RepKind::CircularTrack => self.circumferences[site - 1],
            _ => 0,
        }
    }

    /// All pieces keyed by label.
    pub fn pieces(&self) -> &BTreeMap<VertexLabel, Vec<Piece>> {
        &self.pieces
    }

    /// Pieces of one vertex.
    pub fn pieces_of(&self, label: &VertexLabel) -> Option<&[Piece]> {
        self.pieces.get(label).map(Vec::as_slice)
    }

    /// Vertex labels in canonical order.
    pub fn labels(&self) -> impl Iterator<Item = &VertexLabel> + Clone {
        self.pieces.keys()
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    /// Whether a piece of this representation contains a point.
    pub fn piece_contains(&self, piece: &Piece, point: StabPoint) -> bool {
        piece_contains_point(piece, point.site, point.coord, self.kind)
    }

    /// Whether two pieces of this representation intersect.
    pub fn meet(&self, p: &Piece, q: &Piece) -> bool {
        pieces_intersect(p, q, self.kind, self.circumference(p.site))
    }

    fn map_pieces(&self, f: impl Fn(&Piece, i64) -> Piece) -> Representation {
        let pieces = self
            .pieces
            .iter()
            .map(|(k, list)| {
                (
                    k.clone(),
                    list.iter()
                        .map(|p| f(p, self.circumference(p.site)))
                        .collect(),
                )
            })
            .collect();
        Representation {
            kind: self.kind,
            t: self.t,
            circumferences: self.circumferences.clone(),
            pieces,
        }
    }

    /// Shifts every coordinate by `delta` (modulo the circumference on circles).
    pub fn translated(&self, delta: i64) -> Representation {
        let circular = self.kind.is_circular();
        self.map_pieces(|p, l| {
            if circular {
                Piece::new(
                    (p.lo + delta).rem_euclid(l),
                    (p.hi + delta).rem_euclid(l),
                    p.site,
                )
            } else {
                Piece::new(p.lo + delta, p.hi + delta, p.site)
            }
        })
    }

    /// Reflects every coordinate through 0, swapping the ends of each piece.
    pub fn mirrored(&self) -> Representation {
        let circular = self.kind.is_circular();
        self.map_pieces(|p, l| {
            if circular {
                Piece::new((-p.hi).rem_euclid(l), (-p.lo).rem_euclid(l), p.site)
            } else {
                Piece::new(-p.hi, -p.lo, p.site)
            }
        })
    }

    /// The single-site representation formed by piece `site` of every vertex.
    ///
    /// Only track kinds have per-site pieces; a `Track` projects to an
    /// `Interval` and a `CircularTrack` to a `CircularInterval`, both with `t = 1`.
    pub fn project_site(&self, site: usize) -> Result<Representation> {
        if !self.kind.is_track() {
            return Err(Error::WrongKind(format!(
                "{} has no per-site pieces",
                self.kind.name()
            )));
        }
        if site == 0 || site > self.t {
            return Err(Error::InvalidParameter(format!(
                "site {site} outside 1..={}",
                self.t
            )));
        }
        let pieces = self
            .pieces
            .iter()
            .map(|(k, list)| {
                let p = list[site - 1];
                (k.clone(), vec![Piece::new(p.lo, p.hi, 1)])
            })
            .collect();
        let (kind, circumferences) = match self.kind {
            RepKind::Track => (RepKind::Interval, vec![]),
            _ => (
                RepKind::CircularInterval,
                vec![self.circumferences[site - 1]],
            ),
        };
        Representation::new(kind, 1, circumferences, pieces)
    }
}

/// The graph in which two vertices are adjacent iff some of their pieces meet.
pub fn intersection_graph(rep: &Representation) -> Graph {
    intersection_graph_with(rep, Execution::default())
}

/// [`intersection_graph`] with an explicit execution strategy.
pub fn intersection_graph_with(rep: &Representation, exec: Execution) -> Graph {
    let lists: Vec<&Vec<Piece>> = rep.pieces.values().collect();
    let rows = exec::map_range(exec, lists.len(), |i| {
        (i + 1..lists.len())
            .filter(|&j| {
                lists[i]
                    .iter()
                    .any(|p| lists[j].iter().any(|q| rep.meet(p, q)))
            })
            .collect::<Vec<usize>>()
    });
    let pairs = rows
        .into_iter()
        .enumerate()
        .flat_map(|(i, row)| row.into_iter().map(move |j| (i, j)));
    Graph::from_sorted(rep.pieces.keys().cloned().collect(), pairs)
}

/// Outcome of comparing a representation with a target graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    /// True iff the intersection graph equals the target.
    pub ok: bool,
    /// Target edges whose endpoints have disjoint pieces.
    pub missing_edges: Vec<(VertexLabel, VertexLabel)>,
    /// Non-edges of the target whose endpoints have intersecting pieces.
    pub extra_edges: Vec<(VertexLabel, VertexLabel)>,
    /// Common piece length, if every piece has the same length.
    pub unit_length: Option<i64>,
}

/// Compares the intersection graph of `rep` with `target`, listing every disagreement.
pub fn verify_representation(rep: &Representation, target: &Graph) -> Result<VerificationReport> {
    verify_representation_with(rep, target, Execution::default())
}

/// [`verify_representation`] with an explicit execution strategy.
pub fn verify_representation_with(
    rep: &Representation,
    target: &Graph,
    exec: Execution,
) -> Result<VerificationReport> {
    let only_in_rep = rep.labels().filter(|l| !target.contains(l)).count();
    let only_in_graph = target
        .vertices()
        .iter()
        .filter(|l| !rep.pieces.contains_key(l))
        .count();
    if only_in_rep > 0 || only_in_graph > 0 {
        return Err(Error::LabelSetMismatch {
            only_in_rep,
            only_in_graph,
        });
    }
    let realized = intersection_graph_with(rep, exec);
    let want: BTreeSet<(usize, usize)> = target.edge_pairs().collect();
    let have: BTreeSet<(usize, usize)> = realized.edge_pairs().collect();
    let label =
        |&(i, j): &(usize, usize)| (target.vertices()[i].clone(), target.vertices()[j].clone());
    let missing_edges: Vec<_> = want.difference(&have).map(label).collect();
    let extra_edges: Vec<_> = have.difference(&want).map(label).collect();
    Ok(VerificationReport {
        ok: missing_edges.is_empty() && extra_edges.is_empty(),
        missing_edges,
        extra_edges,
        unit_length: is_unit(rep),
    })
}

/// The common length of all pieces, if there is one.
///
/// Length is `hi - lo` on lines and `(hi - lo) mod L` on circles. A
/// representation without pieces has no common length.
pub fn is_unit(rep: &Representation) -> Option<i64> {
    let mut lengths = rep.pieces.values().flatten().map(|p| {
        if rep.kind.is_circular() {
            (p.hi - p.lo).rem_euclid(rep.circumference(p.site))
        } else {
            p.hi - p.lo
        }
    });
    let first = lengths.next()?;
    lengths.all(|l| l == first).then_some(first)
}

/// Keeps only the pieces of the given vertices.
pub fn restrict_representation(
    rep: &Representation,
    labels: &[VertexLabel],
) -> Result<Representation> {
    let mut pieces = BTreeMap::new();
    for l in labels {
        let list = rep
            .pieces
            .get(l)
            .ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
        pieces.insert(l.clone(), list.clone());
    }
    Ok(Representation {
        kind: rep.kind,
        t: rep.t,
        circumferences: rep.circumferences.clone(),
        pieces,
    })
}
