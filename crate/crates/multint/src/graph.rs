//! Labeled simple undirected graphs with structured vertex labels.
//!
//! Vertices are kept sorted by [`VertexLabel`] order, so vertex indices,
//! edge listings and every tie-break derived from them are canonical. Edges
//! among original vertices are ranked lexicographically by their endpoint
//! positions, which fixes the numbering `k` of subdivision vertices.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::solvers::{self, CliqueResult, OracleLimit};

/// Position of a subdivision vertex along the path replacing an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubdivisionPosition {
    A,
    B,
    C,
    D,
}

impl SubdivisionPosition {
    /// The first `w` positions, in path order.
    pub fn first(w: usize) -> &'static [SubdivisionPosition] {
        use SubdivisionPosition::*;
        &[A, B, C, D][..w.min(4)]
    }

    fn letter(self) -> char {
        match self {
            SubdivisionPosition::A => 'a',
            SubdivisionPosition::B => 'b',
            SubdivisionPosition::C => 'c',
            SubdivisionPosition::D => 'd',
        }
    }
}

/// Role of a vertex in the hardness gadget `Q(w, l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GadgetRole {
    Xo,
    Xe,
    A,
    B,
    C,
    D,
}

impl GadgetRole {
    fn prefix(self) -> &'static str {
        match self {
            GadgetRole::Xo => "xo",
            GadgetRole::Xe => "xe",
            GadgetRole::A => "A",
            GadgetRole::B => "B",
            GadgetRole::C => "C",
            GadgetRole::D => "D",
        }
    }
}

/// A structured vertex label.
///
/// Text forms are `x<i>` for original vertices, `a<k>`..`d<k>` for the
/// vertices subdividing edge `k`, and `xo<i>`, `xe<i>`, `A<i>`..`D<i>` for
/// gadget vertices. All indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexLabel {
    /// Original vertex `x_i`.
    Original(usize),
    /// Vertex at a given position on the path subdividing edge `k`.
    Subdivision(usize, SubdivisionPosition),
    /// Gadget vertex with a role and index.
    Gadget(GadgetRole, usize),
}

impl VertexLabel {
    /// Shorthand for `Original(i)`.
    pub fn x(i: usize) -> Self {
        VertexLabel::Original(i)
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Original(i) => write!(f, "x{i}"),
            VertexLabel::Subdivision(k, p) => write!(f, "{}{k}", p.letter()),
            VertexLabel::Gadget(r, i) => write!(f, "{}{i}", r.prefix()),
        }
    }
}

impl FromStr for VertexLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid vertex label {s:?}"));
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
        let (prefix, digits) = s.split_at(split);
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let index: usize = digits.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        use SubdivisionPosition as P;
        Ok(match prefix {
            "x" => VertexLabel::Original(index),
            "a" => VertexLabel::Subdivision(index, P::A),
            "b" => VertexLabel::Subdivision(index, P::B),
            "c" => VertexLabel::Subdivision(index, P::C),
            "d" => VertexLabel::Subdivision(index, P::D),
            "xo" => VertexLabel::Gadget(GadgetRole::Xo, index),
            "xe" => VertexLabel::Gadget(GadgetRole::Xe, index),
            "A" => VertexLabel::Gadget(GadgetRole::A, index),
            "B" => VertexLabel::Gadget(GadgetRole::B, index),
            "C" => VertexLabel::Gadget(GadgetRole::C, index),
            "D" => VertexLabel::Gadget(GadgetRole::D, index),
            _ => return Err(bad()),
        })
    }
}

impl serde::Serialize for VertexLabel {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for VertexLabel {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Rank `k` of an edge between original vertices with its endpoint positions.
///
/// `l` and `r` are 1-based positions of the endpoints among the original
/// vertices in label order; they equal the label indices when the vertices
/// are `x1..xn`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeIndex {
    pub k: usize,
    pub l: usize,
    pub r: usize,
}

/// A simple undirected graph on labeled vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<VertexLabel>,
    index: HashMap<VertexLabel, usize>,
    adj: Vec<Vec<usize>>,
    m: usize,
}

/// Builds a graph from labels and label pairs.
///
/// Repeated edges collapse to one; self-loops, repeated labels and unknown
/// endpoints are errors.
pub fn build_graph(
    vertices: Vec<VertexLabel>,
    edges: Vec<(VertexLabel, VertexLabel)>,
) -> Result<Graph> {
    let mut sorted = vertices;
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateLabel(w[0].to_string()));
    }
    let index: HashMap<VertexLabel, usize> = sorted
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, v)| (v, i))
        .collect();
    let mut pairs = Vec::with_capacity(edges.len());
    for (u, v) in edges {
        if u == v {
            return Err(Error::SelfLoop(u.to_string()));
        }
        let iu = *index
            .get(&u)
            .ok_or_else(|| Error::UnknownEndpoint(u.to_string()))?;
        let iv = *index
            .get(&v)
            .ok_or_else(|| Error::UnknownEndpoint(v.to_string()))?;
        pairs.push((iu, iv));
    }
    Ok(Graph::from_index_pairs(sorted, index, pairs))
}

impl Graph {
    fn from_index_pairs(
        vertices: Vec<VertexLabel>,
        index: HashMap<VertexLabel, usize>,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Graph {
        let mut adj = vec![Vec::new(); vertices.len()];
        for (u, v) in pairs {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Graph {
            vertices,
            index,
            adj,
            m: m / 2,
        }
    }

    /// Builds a graph on sorted, distinct labels from index pairs.
    pub(crate) fn from_sorted(
        vertices: Vec<VertexLabel>,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Graph {
        let index = vertices
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        Graph::from_index_pairs(vertices, index, pairs)
    }

    /// Graph on `x1..xn` with edges given as 1-based index pairs.
    pub fn from_original_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        build_graph(
            (1..=n).map(VertexLabel::Original).collect(),
            edges
                .iter()
                .map(|&(i, j)| (VertexLabel::Original(i), VertexLabel::Original(j)))
                .collect(),
        )
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Vertex labels in canonical order; positions are vertex indices.
    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }

    /// Index of a label, if present.
    pub fn index_of(&self, label: &VertexLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Whether the label is a vertex.
    pub fn contains(&self, label: &VertexLabel) -> bool {
        self.index.contains_key(label)
    }

    /// Sorted neighbor indices of vertex `i`.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    /// Degree of vertex `i`.
    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    /// Whether vertices `i` and `j` are adjacent.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&j).is_ok()
    }

    /// Whether two labels are adjacent; false if either is absent.
    pub fn has_edge(&self, u: &VertexLabel, v: &VertexLabel) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(i), Some(j)) => self.adjacent(i, j),
            _ => false,
        }
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edge_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, list)| list.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    /// Edges as label pairs with the smaller label first, in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexLabel, VertexLabel)> + '_ {
        self.edge_pairs()
            .map(|(i, j)| (self.vertices[i].clone(), self.vertices[j].clone()))
    }

    /// Whether the graph is connected (the empty graph counts as connected).
    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n()
    }

    fn require_original(&self) -> Result<()> {
        match self
            .vertices
            .iter()
            .find(|v| !matches!(v, VertexLabel::Original(_)))
        {
            Some(v) => Err(Error::NotOriginalGraph(v.to_string())),
            None => Ok(()),
        }
    }

    /// Canonical edge ranking of a graph on original vertices.
    ///
    /// Edge `k` (1-based) is the `k`-th pair `(l, r)`, `l < r`, in
    /// lexicographic order of endpoint positions.
    pub fn edge_index(&self) -> Result<Vec<EdgeIndex>> {
        self.require_original()?;
        Ok(self
            .edge_pairs()
            .enumerate()
            .map(|(k, (i, j))| EdgeIndex {
                k: k + 1,
                l: i + 1,
                r: j + 1,
            })
            .collect())
    }

    /// The complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = Vec::with_capacity(n);
        for i in 0..n {
            let mut list = Vec::with_capacity(n.saturating_sub(1 + self.adj[i].len()));
            let mut it = self.adj[i].iter().peekable();
            for j in 0..n {
                if it.peek() == Some(&&j) {
                    it.next();
                } else if j != i {
                    list.push(j);
                }
            }
            adj.push(list);
        }
        let total = n * n.saturating_sub(1) / 2;
        Graph {
            vertices: self.vertices.clone(),
            index: self.index.clone(),
            adj,
            m: total - self.m,
        }
    }

    /// Replaces every edge by a path through `w` new vertices.
    ///
    /// Edge `k = x_l x_r` becomes `x_l, a_k, b_k[, c_k[, d_k]], x_r`.
    pub fn subdivide(&self, w: usize) -> Result<Graph> {
        if !(2..=4).contains(&w) {
            return Err(Error::BadSubdivisionArity(w));
        }
        let edges = self.edge_index()?;
        let mut vertices = self.vertices.clone();
        for e in &edges {
            for &p in SubdivisionPosition::first(w) {
                vertices.push(VertexLabel::Subdivision(e.k, p));
            }
        }
        vertices.sort();
        let index: HashMap<VertexLabel, usize> = vertices
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let mut pairs = Vec::with_capacity((w + 1) * edges.len());
        for e in &edges {
            let mut path = vec![index[&self.vertices[e.l - 1]]];
            path.extend(
                SubdivisionPosition::first(w)
                    .iter()
                    .map(|&p| index[&VertexLabel::Subdivision(e.k, p)]),
            );
            path.push(index[&self.vertices[e.r - 1]]);
            pairs.extend(path.windows(2).map(|p| (p[0], p[1])));
        }
        Ok(Graph::from_index_pairs(vertices, index, pairs))
    }

    /// The subgraph induced by a set of labels.
    pub fn induced_subgraph(&self, labels: &[VertexLabel]) -> Result<Graph> {
        let mut keep = Vec::with_capacity(labels.len());
        for l in labels {
            keep.push(
                self.index_of(l)
                    .ok_or_else(|| Error::UnknownLabel(l.to_string()))?,
            );
        }
        keep.sort_unstable();
        keep.dedup();
        let mut position = vec![usize::MAX; self.n()];
        for (new, &old) in keep.iter().enumerate() {
            position[old] = new;
        }
        let vertices: Vec<VertexLabel> = keep.iter().map(|&i| self.vertices[i].clone()).collect();
        let pairs: Vec<(usize, usize)> = keep
            .iter()
            .flat_map(|&i| {
                let position = &position;
                self.adj[i]
                    .iter()
                    .filter(move |&&j| j > i && position[j] != usize::MAX)
                    .map(move |&j| (position[i], position[j]))
            })
            .collect();
        Ok(Graph::from_sorted(vertices, pairs))
    }
}

/// The complement of `g`; see [`Graph::complement`].
pub fn complement(g: &Graph) -> Graph {
    g.complement()
}

/// Subdivides every edge `w` times; see [`Graph::subdivide`].
pub fn subdivide(g: &Graph, w: usize) -> Result<Graph> {
    g.subdivide(w)
}

/// Subgraph induced by `labels`; see [`Graph::induced_subgraph`].
pub fn induced_subgraph(g: &Graph, labels: &[VertexLabel]) -> Result<Graph> {
    g.induced_subgraph(labels)
}

/// Exact maximum-weight independent set by branch and bound.
///
/// Ties resolve to the lexicographically least member list.
pub fn max_independent_set_bruteforce(
    g: &Graph,
    weights: &Weights,
    limit: OracleLimit,
) -> Result<CliqueResult> {
    solvers::max_weight_independent_set_bruteforce(g, weights, limit)
}

/// Nonnegative integer weights keyed by vertex label.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Weights {
    map: BTreeMap<VertexLabel, u64>,
}

impl Weights {
    /// Weight 1 on every vertex of `g`.
    pub fn uniform(g: &Graph) -> Weights {
        Weights::from_pairs(g.vertices().iter().map(|v| (v.clone(), 1)))
    }

    /// Weight 1 on every given label.
    pub fn uniform_on<'a>(labels: impl IntoIterator<Item = &'a VertexLabel>) -> Weights {
        Weights::from_pairs(labels.into_iter().map(|v| (v.clone(), 1)))
    }

    /// Weights from `(label, weight)` pairs; later pairs override earlier ones.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VertexLabel, u64)>) -> Weights {
        Weights {
            map: pairs.into_iter().collect(),
        }
    }

    /// Weight of a label, if assigned.
    pub fn get(&self, label: &VertexLabel) -> Option<u64> {
        self.map.get(label).copied()
    }

    /// Assigns a weight.
    pub fn set(&mut self, label: VertexLabel, weight: u64) {
        self.map.insert(label, weight);
    }

    /// Iterates over assigned weights in label order.
    pub fn iter(&self) -> impl Iterator<Item = (&VertexLabel, u64)> {
        self.map.iter().map(|(k, &v)| (k, v))
    }

    /// Weight per vertex index of `g`; every vertex must have a weight.
    pub fn indexed(&self, g: &Graph) -> Result<Vec<u64>> {
        self.for_labels(g.vertices())
    }

    /// Weight per label in the given order; every label must have a weight.
    pub fn for_labels(&self, labels: &[VertexLabel]) -> Result<Vec<u64>> {
        labels
            .iter()
            .map(|v| {
                self.get(v)
                    .ok_or_else(|| Error::MissingWeight(v.to_string()))
            })
            .collect()
    }

    /// Total weight of the vertices of `g`.
    pub fn total(&self, g: &Graph) -> Result<u64> {
        Ok(self.indexed(g)?.iter().sum())
    }

    /// Every weight multiplied by `factor`.
    pub fn scaled(&self, factor: u64) -> Weights {
        Weights {
            map: self
                .map
                .iter()
                .map(|(k, &v)| (k.clone(), v * factor))
                .collect(),
        }
    }
}
