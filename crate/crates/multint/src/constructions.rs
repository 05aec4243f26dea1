//! Explicit representations of complements of subdivided graphs.
//!
//! Each constructor takes a graph `G` on original vertices with at least one
//! edge and returns a representation whose intersection graph is the
//! complement of `Subd_w(G)` (`w = 4` for [`rep_co_subd4_2interval`], `w = 2`
//! otherwise).
//!
//! Formula symbols map to labels as follows: `x_i` is the `i`-th original
//! vertex in label order, edge `k = x_l x_r` (`l < r`) is the `k`-th edge in
//! lexicographic order, and `a_k`..`d_k` are its subdivision vertices.
//!
//! The unit 3-interval, unit 4-track and unit 2-circular layouts use the
//! closed-form coordinates when `m >= n - 1`. Sparser graphs get layouts
//! that keep the same unit length `m^2` (and for the circular case the same
//! circumference `6m^2 + 2m + 4`) but place vertices by degree-aware ranks.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{complement, subdivide, Graph, SubdivisionPosition, VertexLabel};
use crate::representation::{Piece, RepKind, Representation};

/// The six constructions, addressable by a stable text id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Constructor {
    /// 2-interval representation of the complement of `Subd_4(G)`.
    CoSubd4TwoInterval,
    /// Unit 3-interval representation of the complement of `Subd_2(G)`.
    CoSubd2UnitThreeInterval,
    /// 3-track representation of the complement of `Subd_2(G)`.
    CoSubd2ThreeTrack,
    /// Unit 4-track representation of the complement of `Subd_2(G)`.
    CoSubd2UnitFourTrack,
    /// Unit 2-circular-interval representation of the complement of `Subd_2(G)`.
    CoSubd2UnitTwoCircular,
    /// 2-circular-track representation of the complement of `Subd_2(G)`.
    CoSubd2TwoCircularTrack,
}

impl Constructor {
    /// Every constructor, in a fixed order.
    pub const ALL: [Constructor; 6] = [
        Constructor::CoSubd4TwoInterval,
        Constructor::CoSubd2UnitThreeInterval,
        Constructor::CoSubd2ThreeTrack,
        Constructor::CoSubd2UnitFourTrack,
        Constructor::CoSubd2UnitTwoCircular,
        Constructor::CoSubd2TwoCircularTrack,
    ];

    /// Stable text id.
    pub fn id(self) -> &'static str {
        match self {
            Constructor::CoSubd4TwoInterval => "co-subd4-2i",
            Constructor::CoSubd2UnitThreeInterval => "co-subd2-u3i",
            Constructor::CoSubd2ThreeTrack => "co-subd2-3t",
            Constructor::CoSubd2UnitFourTrack => "co-subd2-u4t",
            Constructor::CoSubd2UnitTwoCircular => "co-subd2-u2ci",
            Constructor::CoSubd2TwoCircularTrack => "co-subd2-2ct",
        }
    }

    /// Looks a constructor up by its id.
    pub fn from_id(id: &str) -> Option<Constructor> {
        Constructor::ALL.into_iter().find(|c| c.id() == id)
    }

    /// Number of subdivision vertices per edge in the target graph.
    pub fn arity(self) -> usize {
        match self {
            Constructor::CoSubd4TwoInterval => 4,
            _ => 2,
        }
    }

    /// Builds the representation for `g`.
    pub fn build(self, g: &Graph) -> Result<Representation> {
        match self {
            Constructor::CoSubd4TwoInterval => rep_co_subd4_2interval(g),
            Constructor::CoSubd2UnitThreeInterval => rep_co_subd2_unit3interval(g),
            Constructor::CoSubd2ThreeTrack => rep_co_subd2_3track(g),
            Constructor::CoSubd2UnitFourTrack => rep_co_subd2_unit4track(g),
            Constructor::CoSubd2UnitTwoCircular => rep_co_subd2_unit2circular(g),
            Constructor::CoSubd2TwoCircularTrack => rep_co_subd2_2circulartrack(g),
        }
    }

    /// The graph the representation of `g` must realize.
    pub fn target(self, g: &Graph) -> Result<Graph> {
        Ok(complement(&subdivide(g, self.arity())?))
    }
}

/// An edge with 1-based rank `k` and endpoint positions `l < r`, as `i64`.
#[derive(Debug, Clone, Copy)]
struct Edge {
    k: i64,
    l: i64,
    r: i64,
}

/// Validated input: original labels in order plus ranked edges.
struct Input {
    labels: Vec<VertexLabel>,
    edges: Vec<Edge>,
}

impl Input {
    fn new(g: &Graph) -> Result<Input> {
        let edges = g.edge_index()?;
        if edges.is_empty() {
            return Err(Error::EmptyEdgeSet);
        }
        Ok(Input {
            labels: g.vertices().to_vec(),
            edges: edges
                .iter()
                .map(|e| Edge {
                    k: e.k as i64,
                    l: e.l as i64,
                    r: e.r as i64,
                })
                .collect(),
        })
    }

    fn n(&self) -> i64 {
        self.labels.len() as i64
    }

    fn m(&self) -> i64 {
        self.edges.len() as i64
    }

    /// `(position, label)` of every original vertex.
    fn xs(&self) -> impl Iterator<Item = (i64, VertexLabel)> + '_ {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, v)| (i as i64 + 1, v.clone()))
    }

    /// Whether the closed-form unit layouts apply.
    fn dense(&self) -> bool {
        self.m() >= self.n() - 1
    }
}

fn sub(k: i64, p: SubdivisionPosition) -> VertexLabel {
    VertexLabel::Subdivision(k as usize, p)
}

/// Collects pieces, placing piece `i` on site `i + 1` for track kinds and
/// reducing coordinates modulo the circumference for circular kinds.
struct Layout {
    kind: RepKind,
    circumferences: Vec<i64>,
    pieces: BTreeMap<VertexLabel, Vec<Piece>>,
}

impl Layout {
    fn new(kind: RepKind, circumferences: Vec<i64>) -> Layout {
        Layout {
            kind,
            circumferences,
            pieces: BTreeMap::new(),
        }
    }

    fn put(&mut self, label: VertexLabel, coords: &[(i64, i64)]) {
        let list = coords
            .iter()
            .enumerate()
            .map(|(i, &(lo, hi))| {
                let site = if self.kind.is_track() { i + 1 } else { 1 };
                if self.kind.is_circular() {
                    let l = self.circumferences[site - 1];
                    Piece::new(lo.rem_euclid(l), hi.rem_euclid(l), site)
                } else {
                    Piece::new(lo, hi, site)
                }
            })
            .collect();
        self.pieces.insert(label, list);
    }

    fn finish(self, t: usize) -> Result<Representation> {
        Representation::new(self.kind, t, self.circumferences, self.pieces)
    }
}

/// 2-interval representation of the complement of `Subd_4(G)`.
pub fn rep_co_subd4_2interval(g: &Graph) -> Result<Representation> {
    use SubdivisionPosition::*;
    let inp = Input::new(g)?;
    let (n, m) = (inp.n(), inp.m());
    let mn = m * n;
    let mut out = Layout::new(RepKind::Interval, vec![]);
    for (i, x) in inp.xs() {
        out.put(
            x,
            &[
                (m * i, mn + m * i),
                (4 * mn + m * i + 1, 5 * mn + m * i + 1),
            ],
        );
    }
    for &Edge { k, l, r } in &inp.edges {
        out.put(
            sub(k, A),
            &[
                (0, m * (l - 1) + k - 1),
                (mn + m * l + 1, 4 * mn + m - m * l - k + 1),
            ],
        );
        out.put(
            sub(k, B),
            &[
                (m * (l - 1) + k, mn + m - k),
                (4 * mn + m - m * l - k + 2, 5 * mn + k),
            ],
        );
        out.put(
            sub(k, C),
            &[
                (mn + m - k + 1, 3 * mn + m - m * r - k + 1),
                (5 * mn + k + 1, 5 * mn + m * r + k),
            ],
        );
        out.put(
            sub(k, D),
            &[
                (3 * mn + m - m * r - k + 2, 4 * mn + m * r),
                (5 * mn + m * r + k + 1, 6 * mn + m + 1),
            ],
        );
    }
    out.finish(2)
}

/// Degree-aware ranks for the sparse layouts.
struct Ranks {
    /// Rank among non-isolated vertices by position, `None` for isolated ones.
    rho: Vec<Option<i64>>,
    /// Maximum degree.
    mu: i64,
    /// Number of non-isolated vertices.
    active: i64,
    /// Rank of edge `k` among the edges sharing its left endpoint.
    jl: Vec<i64>,
    /// Rank of edge `k` among the edges sharing its right endpoint.
    jr: Vec<i64>,
}

impl Ranks {
    fn new(inp: &Input) -> Ranks {
        let n = inp.labels.len();
        let mut deg = vec![0i64; n + 1];
        let (mut left, mut right) = (vec![0i64; n + 1], vec![0i64; n + 1]);
        let (mut jl, mut jr) = (Vec::new(), Vec::new());
        for e in &inp.edges {
            deg[e.l as usize] += 1;
            deg[e.r as usize] += 1;
            left[e.l as usize] += 1;
            right[e.r as usize] += 1;
            jl.push(left[e.l as usize]);
            jr.push(right[e.r as usize]);
        }
        let mut rho = vec![None; n + 1];
        let mut active = 0;
        for i in 1..=n {
            if deg[i] > 0 {
                active += 1;
                rho[i] = Some(active);
            }
        }
        Ranks {
            rho,
            mu: deg.iter().copied().max().unwrap_or(0),
            active,
            jl,
            jr,
        }
    }

    /// `(rho(l), rho(r), jl(k), jr(k))` for an edge.
    fn edge(&self, e: &Edge) -> (i64, i64, i64, i64) {
        let rank = |p: i64| self.rho[p as usize].expect("edge endpoints have positive degree");
        (
            rank(e.l),
            rank(e.r),
            self.jl[e.k as usize - 1],
            self.jr[e.k as usize - 1],
        )
    }
}

/// Unit 3-interval representation of the complement of `Subd_2(G)` with unit length `m^2`.
pub fn rep_co_subd2_unit3interval(g: &Graph) -> Result<Representation> {
    use SubdivisionPosition::*;
    let inp = Input::new(g)?;
    let m = inp.m();
    let mm = m * m;
    let mut out = Layout::new(RepKind::Interval, vec![]);
    if inp.dense() {
        for (i, x) in inp.xs() {
            out.put(
                x,
                &[
                    (m * i + 2 * mm + 2, m * i + 3 * mm + 2),
                    (m * i + 4 * mm + m + 3, m * i + 5 * mm + m + 3),
                    (17 * mm, 18 * mm),
                ],
            );
        }
        for &Edge { k, l, r } in &inp.edges {
            out.put(
                sub(k, B),
                &[
                    (m * (l - 1) + k, m * (l - 1) + mm + k),
                    (m * r + 3 * mm + k + 2, m * r + 4 * mm + k + 2),
                    (m * l + 6 * mm + m + k + 4, m * l + 7 * mm + m + k + 4),
                ],
            );
            out.put(
                sub(k, A),
                &[
                    (m * (l - 1) + mm + k + 1, m * (l - 1) + 2 * mm + k + 1),
                    (m * l + 5 * mm + m + k + 3, m * l + 6 * mm + m + k + 3),
                    (15 * mm, 16 * mm),
                ],
            );
        }
        return out.finish(3);
    }
    let rk = Ranks::new(&inp);
    let mu = rk.mu;
    let s = (15 * mm).max(mu * rk.active + 7 * mm + 2 * mu + 5);
    for (i, x) in inp.xs() {
        match rk.rho[i as usize] {
            Some(q) => out.put(
                x,
                &[
                    (mu * q + 2 * mm + 2, mu * q + 3 * mm + 2),
                    (mu * q + 4 * mm + mu + 3, mu * q + 5 * mm + mu + 3),
                    (s + 2 * mm, s + 3 * mm),
                ],
            ),
            None => out.put(
                x,
                &[(mm, 2 * mm), (s + mm, s + 2 * mm), (s + 2 * mm, s + 3 * mm)],
            ),
        }
    }
    for e in &inp.edges {
        let (l, r, a, b) = rk.edge(e);
        out.put(
            sub(e.k, B),
            &[
                (mu * (l - 1) + a, mu * (l - 1) + mm + a),
                (mu * r + 3 * mm + b + 2, mu * r + 4 * mm + b + 2),
                (mu * l + 6 * mm + mu + a + 4, mu * l + 7 * mm + mu + a + 4),
            ],
        );
        out.put(
            sub(e.k, A),
            &[
                (mu * (l - 1) + mm + a + 1, mu * (l - 1) + 2 * mm + a + 1),
                (mu * l + 5 * mm + mu + a + 3, mu * l + 6 * mm + mu + a + 3),
                (s, s + mm),
            ],
        );
    }
    out.finish(3)
}

/// 3-track representation of the complement of `Subd_2(G)`.
pub fn rep_co_subd2_3track(g: &Graph) -> Result<Representation> {
    use SubdivisionPosition::*;
    let inp = Input::new(g)?;
    let (n, m) = (inp.n(), inp.m());
    let mut out = Layout::new(RepKind::Track, vec![]);
    for (i, x) in inp.xs() {
        out.put(x, &[(i + 1, n + i + 1), (0, i), (m + i + 1, m + n + 2)]);
    }
    for &Edge { k, l, r } in &inp.edges {
        out.put(sub(k, A), &[(0, l), (l + 1, n + k), (0, m + 1 - k)]);
        out.put(
            sub(k, B),
            &[
                (n + r + 2, 2 * n + 3),
                (n + k + 1, m + n + 2),
                (m + 2 - k, m + r),
            ],
        );
    }
    out.finish(3)
}

/// Unit 4-track representation of the complement of `Subd_2(G)` with unit length `m^2`.
pub fn rep_co_subd2_unit4track(g: &Graph) -> Result<Representation> {
    use SubdivisionPosition::*;
    let inp = Input::new(g)?;
    let m = inp.m();
    let mm = m * m;
    let mut out = Layout::new(RepKind::Track, vec![]);
    if inp.dense() {
        for (i, x) in inp.xs() {
            let p = (m * i + mm + 1, m * i + 2 * mm + 1);
            out.put(x, &[p, p, (5 * mm, 6 * mm), (5 * mm, 6 * mm)]);
        }
        for &Edge { k, l, r } in &inp.edges {
            out.put(
                sub(k, A),
                &[
                    (m * (l - 1) + k, m * (l - 1) + mm + k),
                    (2 * mm + m * l + k + 1, 3 * mm + m * l + k + 1),
                    (k, k + mm),
                    (k + mm + 1, k + 2 * mm + 1),
                ],
            );
            out.put(
                sub(k, B),
                &[
                    (2 * mm + m * r + k + 1, 3 * mm + m * r + k + 1),
                    (m * (r - 1) + k, m * (r - 1) + mm + k),
                    (k + mm + 1, k + 2 * mm + 1),
                    (k, k + mm),
                ],
            );
        }
        return out.finish(4);
    }
    let rk = Ranks::new(&inp);
    let mu = rk.mu;
    for (i, x) in inp.xs() {
        match rk.rho[i as usize] {
            Some(q) => {
                let p = (mu * q + mm + 1, mu * q + 2 * mm + 1);
                out.put(x, &[p, p, (5 * mm, 6 * mm), (5 * mm, 6 * mm)]);
            }
            None => out.put(
                x,
                &[(mm, 2 * mm), (mm, 2 * mm), (mm, 2 * mm), (5 * mm, 6 * mm)],
            ),
        }
    }
    for e in &inp.edges {
        let (l, r, a, b) = rk.edge(e);
        let k = e.k;
        out.put(
            sub(k, A),
            &[
                (mu * (l - 1) + a, mu * (l - 1) + mm + a),
                (2 * mm + mu * l + a + 1, 3 * mm + mu * l + a + 1),
                (k, k + mm),
                (k + mm + 1, k + 2 * mm + 1),
            ],
        );
        out.put(
            sub(k, B),
            &[
                (2 * mm + mu * r + b + 1, 3 * mm + mu * r + b + 1),
                (mu * (r - 1) + b, mu * (r - 1) + mm + b),
                (k + mm + 1, k + 2 * mm + 1),
                (k, k + mm),
            ],
        );
    }
    out.finish(4)
}

/// Unit 2-circular-interval representation of the complement of `Subd_2(G)`.
///
/// The circle has circumference `6m^2 + 2m + 4` and every arc has length `m^2`.
/// Graphs with `m < n - 1` are laid out by solving a system of difference
/// constraints on arc start points, which fails with
/// [`Error::LayoutInfeasible`] if no solution exists.
pub fn rep_co_subd2_unit2circular(g: &Graph) -> Result<Representation> {
    use SubdivisionPosition::*;
    let inp = Input::new(g)?;
    if !inp.dense() {
        return circular_by_constraints(&inp);
    }
    let m = inp.m();
    let mm = m * m;
    let circ = 6 * mm + 2 * m + 4;
    let mut out = Layout::new(RepKind::CircularInterval, vec![circ]);
    for (i, x) in inp.xs() {
        out.put(
            x,
            &[
                (m * i + 2 * mm + 2, m * i + 3 * mm + 2),
                (m * i + 4 * mm + m + 3, m * i + 5 * mm + m + 3),
            ],
        );
    }
    for &Edge { k, l, r } in &inp.edges {
        out.put(
            sub(k, B),
            &[
                (m * l + 6 * mm + m + k + 4, m * (l - 1) + mm + k),
                (m * r + 3 * mm + k + 2, m * r + 4 * mm + k + 2),
            ],
        );
        out.put(
            sub(k, A),
            &[
                (m * (l - 1) + mm + k + 1, m * (l - 1) + 2 * mm + k + 1),
                (m * l + 5 * mm + m + k + 3, m * l + 6 * mm + m + k + 3),
            ],
        );
    }
    out.finish(2)
}

/// Vertex family of a block of arcs in the circular constraint layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    X,
    A,
    B,
}

/// Cyclic block order: first `b` arcs, first `a` arcs, first `x` arcs,
/// second `b` arcs, second `x` arcs, second `a` arcs.
const BLOCKS: [Family; 6] = [
    Family::B,
    Family::A,
    Family::X,
    Family::B,
    Family::X,
    Family::A,
];

/// Difference constraints `e[v] - e[u] <= c`, stored as edges `(u, v, c)`.
struct Constraints {
    edges: Vec<(usize, usize, i64)>,
}

impl Constraints {
    fn le(&mut self, v: usize, u: usize, c: i64) {
        self.edges.push((u, v, c));
    }

    /// Bellman-Ford from a virtual source joined to every variable with weight 0.
    fn solve(&self, vars: usize) -> Option<Vec<i64>> {
        let mut d = vec![0i64; vars];
        for _ in 0..=vars {
            let mut changed = false;
            for &(u, v, c) in &self.edges {
                if d[u] + c < d[v] {
                    d[v] = d[u] + c;
                    changed = true;
                }
            }
            if !changed {
                return Some(d);
            }
        }
        None
    }
}

fn circular_by_constraints(inp: &Input) -> Result<Representation> {
    let (n, m) = (inp.labels.len(), inp.edges.len());
    let mi = m as i64;
    let mm = mi * mi;
    let circ = 6 * mm + 2 * mi + 4;
    let count = |f: Family| if f == Family::X { n } else { m };
    let mut offset = [0usize; 7];
    for (j, &f) in BLOCKS.iter().enumerate() {
        offset[j + 1] = offset[j] + count(f);
    }
    let vars = offset[6];
    let var = |block: usize, idx: usize| offset[block] + idx;

    let mut degree = vec![0usize; n];
    for e in &inp.edges {
        degree[e.l as usize - 1] += 1;
        degree[e.r as usize - 1] += 1;
    }
    // Subdivision edges of Subd_2(G), i.e. the non-edges of the target.
    let apart = |f: Family, i: usize, g: Family, j: usize| -> bool {
        let pair = |f: Family, i: usize, g: Family, j: usize| match (f, g) {
            (Family::X, Family::A) => inp.edges[j].l as usize - 1 == i,
            (Family::A, Family::B) => i == j,
            (Family::B, Family::X) => inp.edges[i].r as usize - 1 == j,
            _ => false,
        };
        pair(f, i, g, j) || pair(g, j, f, i)
    };

    let mut base = Constraints { edges: Vec::new() };
    for (bp, &fp) in BLOCKS.iter().enumerate() {
        for (bq, &fq) in BLOCKS.iter().enumerate().skip(bp) {
            for i in 0..count(fp) {
                let start = if bp == bq { i + 1 } else { 0 };
                for j in start..count(fq) {
                    if fp == fq && i == j {
                        continue;
                    }
                    let (p, q) = (var(bp, i), var(bq, j));
                    if bp == bq {
                        base.le(q, p, mm);
                        base.le(p, q, mm);
                    } else if apart(fp, i, fq, j) {
                        base.le(p, q, -(mm + 1));
                        base.le(q, p, circ - mm - 1);
                    }
                }
            }
        }
    }

    // Consecutive blocks: arcs either meet or are separated, by rank comparisons.
    let link = |cons: &mut Constraints, bp: usize, p: usize, bq: usize, q: usize, meet: bool| {
        let wrap = if bp == 5 && bq == 0 { circ } else { 0 };
        let (p, q) = (var(bp, p), var(bq, q));
        if meet {
            cons.le(q, p, mm - wrap);
        } else {
            cons.le(p, q, -(mm + 1) + wrap);
        }
    };
    // Isolated vertices share one virtual half-integer position; positions are doubled.
    for virtual_pos in (1..=2 * n + 1).step_by(2) {
        let pos = |i: usize| {
            if degree[i] > 0 {
                2 * (i + 1)
            } else {
                virtual_pos
            }
        };
        let mut cons = Constraints {
            edges: base.edges.clone(),
        };
        for (k, e) in inp.edges.iter().enumerate() {
            let (l, r) = (2 * e.l as usize, 2 * e.r as usize);
            for kk in 0..m {
                link(&mut cons, 0, kk, 1, k, kk > k);
                link(&mut cons, 5, k, 0, kk, kk < k);
            }
            for i in 0..n {
                let x = pos(i);
                link(&mut cons, 1, k, 2, i, x < l);
                link(&mut cons, 2, i, 3, k, x > r);
                link(&mut cons, 3, k, 4, i, x < r);
                link(&mut cons, 4, i, 5, k, x > l);
            }
        }
        let Some(d) = cons.solve(vars) else { continue };
        let arc = |block: usize, idx: usize| {
            let e = d[var(block, idx)];
            (e, e + mm)
        };
        let mut out = Layout::new(RepKind::CircularInterval, vec![circ]);
        for (i, x) in inp.labels.iter().enumerate() {
            out.put(x.clone(), &[arc(2, i), arc(4, i)]);
        }
        for (k, e) in inp.edges.iter().enumerate() {
            out.put(sub(e.k, SubdivisionPosition::A), &[arc(1, k), arc(5, k)]);
            out.put(sub(e.k, SubdivisionPosition::B), &[arc(0, k), arc(3, k)]);
        }
        return out.finish(2);
    }
    Err(Error::LayoutInfeasible(format!(
        "no unit circular layout found for n = {n}, m = {m}"
    )))
}

/// Smallest circumference accepted by [`rep_co_subd2_2circulartrack_with_circumference`].
pub fn min_2circulartrack_circumference(n: usize, m: usize) -> i64 {
    (3 * n as i64 + 1).max(2 * n as i64 + m as i64 + 2)
}

/// 2-circular-track representation of the complement of `Subd_2(G)` on two
/// circles of the minimum circumference `max(3n + 1, 2n + m + 2)`.
pub fn rep_co_subd2_2circulartrack(g: &Graph) -> Result<Representation> {
    let inp = Input::new(g)?;
    let circ = min_2circulartrack_circumference(inp.labels.len(), inp.edges.len());
    two_circular_track(&inp, circ)
}

/// [`rep_co_subd2_2circulartrack`] on circles of a chosen circumference.
pub fn rep_co_subd2_2circulartrack_with_circumference(
    g: &Graph,
    circumference: i64,
) -> Result<Representation> {
    let inp = Input::new(g)?;
    let minimum = min_2circulartrack_circumference(inp.labels.len(), inp.edges.len());
    if circumference < minimum {
        return Err(Error::CircumferenceTooSmall {
            given: circumference,
            minimum,
        });
    }
    two_circular_track(&inp, circumference)
}

fn two_circular_track(inp: &Input, circ: i64) -> Result<Representation> {
    use SubdivisionPosition::*;
    let n = inp.n();
    let mut out = Layout::new(RepKind::CircularTrack, vec![circ, circ]);
    for (i, x) in inp.xs() {
        out.put(x, &[(i, i + n), (i, i + n)]);
    }
    for &Edge { k, l, r } in &inp.edges {
        out.put(sub(k, A), &[(l + n + 1, 2 * n + k), (2 * n + k + 1, l - 1)]);
        out.put(sub(k, B), &[(2 * n + k + 1, r - 1), (r + n + 1, 2 * n + k)]);
    }
    out.finish(2)
}

/// A unit 2-circular-track representation of `K5` in which each circle
/// alone induces a 5-cycle.
///
/// Both circles have length 10. The vertex at cyclic position `j` gets the
/// arc `[2j, 2j + 2]`; circle 1 visits `x1..x5` in order and circle 2 visits
/// `x1, x3, x5, x2, x4`.
pub fn k5_unit_2circular_track() -> Representation {
    const SECOND: [usize; 5] = [1, 3, 5, 2, 4];
    let mut out = Layout::new(RepKind::CircularTrack, vec![10, 10]);
    for v in 1..=5usize {
        let j1 = (v - 1) as i64;
        let j2 = SECOND
            .iter()
            .position(|&u| u == v)
            .expect("every vertex is listed") as i64;
        out.put(
            VertexLabel::Original(v),
            &[(2 * j1, 2 * j1 + 2), (2 * j2, 2 * j2 + 2)],
        );
    }
    out.finish(2).expect("fixed layout is valid")
}
