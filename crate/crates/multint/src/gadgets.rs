//! The grid graph `R(w, h)` and the gadget `Q(w, l)` with unit 2-interval and
//! unit 3-track representations of its complement.
//!
//! `Q(w, l)` has vertex families `xo_1..xo_{w(l+1)}`, `xe_1..xe_{wl}` and
//! `A_i`, `B_i`, `C_i`, `D_i` for `1 <= i <= 2wl`. Its edges are
//!
//! * `xo_i A_{2i-1}` and `xo_i A_{2i}` for `i <= wl`;
//! * `xo_i B_{2(i-w)-2}` and `xo_i B_{2(i-w)-1}` for `w < i <= w(l+1)`;
//! * `xe_i A_{2i-2}`, `xe_i A_{2i-1}`, `xe_i B_{2i-1}` and `xe_i B_{2i}` for `i <= wl`;
//! * `A_i C_i` and `C_i D_i` for `i <= 2wl`, and `D_i B_{i+1}` for `i < 2wl`.
//!
//! Terms whose index falls outside its family are dropped. The coordinates
//! of both representations scale with a spacing constant `N`, which defaults
//! to the number of vertices of `Q(w, l)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{build_graph, GadgetRole, Graph, VertexLabel};
use crate::representation::{Piece, RepKind, Representation};

/// The `w` by `h` grid on `x1..x_{wh}`, numbered row by row.
pub fn grid(w: usize, h: usize) -> Result<Graph> {
    if w == 0 || h == 0 {
        return Err(Error::InvalidParameter(format!(
            "grid dimensions must be positive, got {w} x {h}"
        )));
    }
    let id = |row: usize, col: usize| row * w + col + 1;
    let mut edges = Vec::new();
    for row in 0..h {
        for col in 0..w {
            if col + 1 < w {
                edges.push((id(row, col), id(row, col + 1)));
            }
            if row + 1 < h {
                edges.push((id(row, col), id(row + 1, col)));
            }
        }
    }
    Graph::from_original_edges(w * h, &edges)
}

/// Parameters of `Q(w, l)`: column count, layer count and spacing `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QParams {
    pub w: usize,
    pub l: usize,
    spacing: Option<i64>,
}

impl QParams {
    /// Parameters with the default spacing.
    pub fn new(w: usize, l: usize) -> Self {
        QParams {
            w,
            l,
            spacing: None,
        }
    }

    /// Replaces the spacing constant `N`.
    pub fn with_spacing(self, spacing: i64) -> Self {
        QParams {
            spacing: Some(spacing),
            ..self
        }
    }

    /// Number of vertices of `Q(w, l)`: `w(2l + 1) + 8wl`.
    pub fn vertex_count(&self) -> usize {
        self.w * (2 * self.l + 1) + 8 * self.w * self.l
    }

    /// The spacing constant `N`.
    pub fn spacing(&self) -> i64 {
        self.spacing.unwrap_or(self.vertex_count() as i64)
    }

    fn validate(&self) -> Result<()> {
        if self.w == 0 || self.l == 0 {
            return Err(Error::InvalidParameter(format!(
                "Q(w, l) needs w, l >= 1, got w = {}, l = {}",
                self.w, self.l
            )));
        }
        if self.spacing() < 1 {
            return Err(Error::InvalidParameter(format!(
                "spacing must be positive, got {}",
                self.spacing()
            )));
        }
        Ok(())
    }
}

fn v(role: GadgetRole, i: usize) -> VertexLabel {
    VertexLabel::Gadget(role, i)
}

fn vertices(p: &QParams) -> Vec<VertexLabel> {
    use GadgetRole::*;
    let (w, l) = (p.w, p.l);
    let mut out: Vec<VertexLabel> = (1..=w * (l + 1)).map(|i| v(Xo, i)).collect();
    out.extend((1..=w * l).map(|i| v(Xe, i)));
    for role in [A, B, C, D] {
        out.extend((1..=2 * w * l).map(|i| v(role, i)));
    }
    out
}

/// The gadget graph `Q(w, l)`.
pub fn build_q(p: &QParams) -> Result<Graph> {
    use GadgetRole::*;
    p.validate()?;
    let (w, l) = (p.w, p.l);
    let top = 2 * w * l;
    let mut edges = Vec::new();
    let mut add = |a: VertexLabel, role: GadgetRole, j: usize| {
        if (1..=top).contains(&j) {
            edges.push((a, v(role, j)));
        }
    };
    for i in 1..=w * l {
        add(v(Xo, i), A, 2 * i - 1);
        add(v(Xo, i), A, 2 * i);
    }
    for i in w + 1..=w * (l + 1) {
        add(v(Xo, i), B, 2 * (i - w) - 2);
        add(v(Xo, i), B, 2 * (i - w) - 1);
    }
    for i in 1..=w * l {
        add(v(Xe, i), A, 2 * i - 2);
        add(v(Xe, i), A, 2 * i - 1);
        add(v(Xe, i), B, 2 * i - 1);
        add(v(Xe, i), B, 2 * i);
    }
    for i in 1..=top {
        add(v(A, i), C, i);
        add(v(C, i), D, i);
        add(v(D, i), B, i + 1);
    }
    build_graph(vertices(p), edges)
}

/// Unit 2-interval representation of the complement of `Q(w, l)`, unit length `6N`.
pub fn rep_co_q_unit2interval(p: &QParams) -> Result<Representation> {
    use GadgetRole::*;
    p.validate()?;
    let (w, l, n) = (p.w, p.l, p.spacing());
    let wi = w as i64;
    let mut pieces: BTreeMap<VertexLabel, Vec<Piece>> = BTreeMap::new();
    let mut put = |label: VertexLabel, a: (i64, i64), b: (i64, i64)| {
        pieces.insert(
            label,
            vec![Piece::new(a.0, a.1, 1), Piece::new(b.0, b.1, 1)],
        );
    };
    for i in 1..=2 * w * l {
        let x = i as i64;
        put(
            v(A, i),
            (2 * x, 2 * x + 6 * n),
            (2 * x + 12 * n + 4, 2 * x + 18 * n + 4),
        );
        put(
            v(C, i),
            (2 * x + 6 * n + 2, 2 * x + 12 * n + 2),
            (30 * n + 8 - 2 * x, 36 * n + 8 - 2 * x),
        );
        put(
            v(D, i),
            (2 * x, 2 * x + 6 * n),
            (24 * n + 6 - 2 * x, 30 * n + 6 - 2 * x),
        );
        put(
            v(B, i),
            (18 * n + 6 - 2 * x, 24 * n + 6 - 2 * x),
            (30 * n + 10 - 2 * x, 36 * n + 10 - 2 * x),
        );
    }
    for i in 1..=w * (l + 1) {
        let x = i as i64;
        put(
            v(Xo, i),
            (4 * x + 6 * n + 1, 4 * x + 12 * n + 1),
            (24 * n + 11 - 4 * x + 4 * wi, 30 * n + 11 - 4 * x + 4 * wi),
        );
    }
    for i in 1..=w * l {
        let x = i as i64;
        put(
            v(Xe, i),
            (4 * x + 6 * n - 1, 4 * x + 12 * n - 1),
            (24 * n + 9 - 4 * x, 30 * n + 9 - 4 * x),
        );
    }
    Representation::new(RepKind::Interval, 2, vec![], pieces)
}

/// Unit 3-track representation of the complement of `Q(w, l)`, unit length `4N`.
///
/// Tracks 1 and 2 carry pieces of length `2N` in their base layout and are
/// emitted at doubled coordinates, so every piece has length `4N`. Track 1
/// starts `xo_i` at `2(2i - 2w + 2N)`, which is negative for a small spacing.
pub fn rep_co_q_unit3track(p: &QParams) -> Result<Representation> {
    use GadgetRole::*;
    p.validate()?;
    let (w, l, n) = (p.w, p.l, p.spacing());
    let w2 = 2 * w as i64;
    let mut pieces: BTreeMap<VertexLabel, Vec<Piece>> = BTreeMap::new();
    let mut put = |label: VertexLabel, tracks: [(i64, i64); 3]| {
        let list = tracks
            .iter()
            .enumerate()
            .map(|(t, &(lo, hi))| {
                let scale = if t < 2 { 2 } else { 1 };
                Piece::new(scale * lo, scale * hi, t + 1)
            })
            .collect();
        pieces.insert(label, list);
    };
    for i in 1..=2 * w * l {
        let x = i as i64;
        put(
            v(A, i),
            [
                (x + 4 * n + 4, x + 6 * n + 4),
                (x, x + 2 * n),
                (x + 4 * n + 2, x + 8 * n + 2),
            ],
        );
        put(
            v(B, i),
            [
                (x, x + 2 * n),
                (x + w2 + 4 * n + 4, x + w2 + 6 * n + 4),
                (8 * n + 3 - x, 12 * n + 3 - x),
            ],
        );
        put(
            v(C, i),
            [
                (x + 2 * n + 3, x + 4 * n + 3),
                (x + w2 + 4 * n + 5, x + w2 + 6 * n + 5),
                (x + 8 * n + 3, x + 12 * n + 3),
            ],
        );
        put(
            v(D, i),
            [
                (x + 4 * n + 4, x + 6 * n + 4),
                (x + w2 + 2 * n + 4, x + w2 + 4 * n + 4),
                (4 * n + 1 - x, 8 * n + 1 - x),
            ],
        );
    }
    for i in 1..=w * (l + 1) {
        let x = i as i64;
        put(
            v(Xo, i),
            [
                (2 * x - w2 + 2 * n, 2 * x - w2 + 4 * n),
                (2 * x + 2 * n + 1, 2 * x + 4 * n + 1),
                (2 * x, 2 * x + 4 * n),
            ],
        );
    }
    for i in 1..=w * l {
        let x = i as i64;
        put(
            v(Xe, i),
            [
                (2 * x + 2 * n + 1, 2 * x + 4 * n + 1),
                (2 * x + 2 * n, 2 * x + 4 * n),
                (12 * n + 5 - 2 * x, 16 * n + 5 - 2 * x),
            ],
        );
    }
    Representation::new(RepKind::Track, 3, vec![], pieces)
}
