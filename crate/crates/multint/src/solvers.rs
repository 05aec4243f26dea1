//! Exact maximum-weight clique machinery.
//!
//! * a branch-and-bound oracle for general graphs of at most 64 vertices,
//! * maximum-weight independent sets in bipartite graphs via minimum cut,
//! * maximum-weight cliques in co-bipartite graphs as complements of the
//!   latter.
//!
//! Every solver breaks ties towards the lexicographically least sorted member
//! list, which makes results reproducible across runs and thread counts.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexLabel, Weights};

/// Name of the environment variable overriding the oracle size limit.
pub const ORACLE_LIMIT_ENV: &str = "MULTINT_ORACLE_LIMIT";

/// Largest instance the bitset oracle can represent.
pub const ORACLE_MAX_SUPPORTED: usize = 64;

/// Largest vertex count the exact oracle accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OracleLimit(usize);

impl OracleLimit {
    /// Limit of `n` vertices, capped at [`ORACLE_MAX_SUPPORTED`].
    pub fn new(n: usize) -> Self {
        OracleLimit(n.min(ORACLE_MAX_SUPPORTED))
    }

    /// The limit as a vertex count.
    pub fn get(self) -> usize {
        self.0
    }

    /// Reads [`ORACLE_LIMIT_ENV`], falling back to the default when unset or unparsable.
    pub fn from_env() -> Self {
        std::env::var(ORACLE_LIMIT_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(OracleLimit::new)
            .unwrap_or_default()
    }

    fn check(self, n: usize) -> Result<()> {
        if n > self.0 {
            Err(Error::OracleSizeExceeded { n, limit: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for OracleLimit {
    fn default() -> Self {
        OracleLimit(30)
    }
}

/// A vertex set with its total weight; used for cliques and independent sets.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CliqueResult {
    /// Members in canonical label order.
    pub members: Vec<VertexLabel>,
    /// Sum of member weights.
    pub weight: u64,
}

impl CliqueResult {
    pub(crate) fn from_indices(g: &Graph, members: &[usize], w: &[u64]) -> Self {
        let mut idx = members.to_vec();
        idx.sort_unstable();
        CliqueResult {
            weight: idx.iter().map(|&i| w[i]).sum(),
            members: idx.iter().map(|&i| g.vertices()[i].clone()).collect(),
        }
    }

    /// Whether the members are pairwise adjacent vertices of `g`.
    pub fn is_clique_of(&self, g: &Graph) -> bool {
        self.pairwise(g, true)
    }

    /// Whether the members are pairwise non-adjacent vertices of `g`.
    pub fn is_independent_in(&self, g: &Graph) -> bool {
        self.pairwise(g, false)
    }

    fn pairwise(&self, g: &Graph, adjacent: bool) -> bool {
        let idx: Option<Vec<usize>> = self.members.iter().map(|v| g.index_of(v)).collect();
        let Some(idx) = idx else { return false };
        idx.iter().enumerate().all(|(a, &i)| {
            idx[a + 1..]
                .iter()
                .all(|&j| i != j && g.adjacent(i, j) == adjacent)
        })
    }
}

/// Two disjoint vertex sets, each expected to induce a clique.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoBipartitePartition {
    pub side_a: Vec<VertexLabel>,
    pub side_b: Vec<VertexLabel>,
}

impl CoBipartitePartition {
    pub fn new(side_a: Vec<VertexLabel>, side_b: Vec<VertexLabel>) -> Self {
        CoBipartitePartition { side_a, side_b }
    }
}

// ---------------------------------------------------------------------------
// Branch and bound
// ---------------------------------------------------------------------------

fn mask_weight(mut mask: u64, w: &[u64]) -> u64 {
    let mut total = 0;
    while mask != 0 {
        total += w[mask.trailing_zeros() as usize];
        mask &= mask - 1;
    }
    total
}

struct BranchAndBound<'a> {
    adj: &'a [u64],
    w: &'a [u64],
    best_weight: u64,
    best_set: u64,
}

impl BranchAndBound<'_> {
    /// Greedy colouring bound: each colour class holds at most one clique member.
    fn colour_bound(&self, cand: u64) -> u64 {
        let mut uncoloured = cand;
        let mut total = 0;
        while uncoloured != 0 {
            let mut open = uncoloured;
            let mut heaviest = 0;
            while open != 0 {
                let v = open.trailing_zeros() as usize;
                open &= !self.adj[v] & !(1u64 << v);
                uncoloured &= !(1u64 << v);
                heaviest = heaviest.max(self.w[v]);
            }
            total += heaviest;
        }
        total
    }

    /// Visits cliques in lexicographic order of their sorted member lists.
    fn expand(&mut self, set: u64, set_weight: u64, cand: u64) {
        if set_weight > self.best_weight {
            self.best_weight = set_weight;
            self.best_set = set;
        }
        if cand == 0 || set_weight + self.colour_bound(cand) <= self.best_weight {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            if set_weight + mask_weight(rest, self.w) <= self.best_weight {
                break;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            self.expand(set | 1u64 << v, set_weight + self.w[v], rest & self.adj[v]);
        }
    }
}

/// Maximum-weight clique over a bitset adjacency of at most 64 vertices.
pub(crate) fn clique_bitset(adj: &[u64], w: &[u64]) -> (u64, u64) {
    debug_assert!(adj.len() <= ORACLE_MAX_SUPPORTED);
    let all = if adj.len() == 64 {
        u64::MAX
    } else {
        (1u64 << adj.len()) - 1
    };
    let mut bb = BranchAndBound {
        adj,
        w,
        best_weight: 0,
        best_set: 0,
    };
    bb.expand(0, 0, all);
    (bb.best_weight, bb.best_set)
}

fn adjacency_masks(g: &Graph, complemented: bool) -> Vec<u64> {
    let n = g.n();
    (0..n)
        .map(|i| {
            let mut mask = 0u64;
            for &j in g.neighbors(i) {
                mask |= 1u64 << j;
            }
            if complemented {
                let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
                mask = !mask & all & !(1u64 << i);
            }
            mask
        })
        .collect()
}

fn mask_members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Exact maximum-weight clique by branch and bound.
///
/// Ties resolve to the lexicographically least member list.
pub fn max_weight_clique_bruteforce(
    g: &Graph,
    weights: &Weights,
    limit: OracleLimit,
) -> Result<CliqueResult> {
    limit.check(g.n())?;
    let w = weights.indexed(g)?;
    let (_, set) = clique_bitset(&adjacency_masks(g, false), &w);
    Ok(CliqueResult::from_indices(g, &mask_members(set), &w))
}

/// Exact maximum-weight independent set by branch and bound on the complement.
///
/// Ties resolve to the lexicographically least member list.
pub fn max_weight_independent_set_bruteforce(
    g: &Graph,
    weights: &Weights,
    limit: OracleLimit,
) -> Result<CliqueResult> {
    limit.check(g.n())?;
    let w = weights.indexed(g)?;
    let (_, set) = clique_bitset(&adjacency_masks(g, true), &w);
    Ok(CliqueResult::from_indices(g, &mask_members(set), &w))
}

// ---------------------------------------------------------------------------
// Maximum flow
// ---------------------------------------------------------------------------

/// Dinic's algorithm on integer capacities.
struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u64>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_edge(&mut self, u: usize, v: usize, c: u64) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    fn levels(&self, s: usize) -> Vec<usize> {
        let mut level = vec![usize::MAX; self.head.len()];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && level[v] == usize::MAX {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        level
    }

    fn augment(
        &mut self,
        u: usize,
        t: usize,
        limit: u64,
        level: &[usize],
        next: &mut [usize],
    ) -> u64 {
        if u == t {
            return limit;
        }
        while next[u] < self.head[u].len() {
            let e = self.head[u][next[u]];
            let v = self.to[e];
            if self.cap[e] > 0 && level[v] == level[u] + 1 {
                let pushed = self.augment(v, t, limit.min(self.cap[e]), level, next);
                if pushed > 0 {
                    self.cap[e] -= pushed;
                    self.cap[e ^ 1] += pushed;
                    return pushed;
                }
            }
            next[u] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        let mut flow = 0;
        loop {
            let level = self.levels(s);
            if level[t] == usize::MAX {
                return flow;
            }
            let mut next = vec![0; self.head.len()];
            loop {
                let pushed = self.augment(s, t, u64::MAX, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
            }
        }
    }

    /// Nodes reachable from `s` in the residual network.
    fn residual_reach(&self, s: usize) -> Vec<bool> {
        self.levels(s)
            .into_iter()
            .map(|l| l != usize::MAX)
            .collect()
    }
}

/// A bipartite conflict graph: left and right vertices with weights and conflicting pairs.
pub(crate) struct Bipartite<'a> {
    pub left_weights: &'a [u64],
    pub right_weights: &'a [u64],
    /// Pairs `(left index, right index)` that cannot both be chosen.
    pub conflicts: &'a [(usize, usize)],
}

impl Bipartite<'_> {
    /// Maximum-weight independent set restricted to the `active` vertices.
    ///
    /// Returns the weight and the membership flags (left vertices first).
    fn solve(&self, active: &[bool]) -> (u64, Vec<bool>) {
        let nl = self.left_weights.len();
        let nr = self.right_weights.len();
        let weight_of = |i: usize| {
            if i < nl {
                self.left_weights[i]
            } else {
                self.right_weights[i - nl]
            }
        };
        let total: u64 = (0..nl + nr).filter(|&i| active[i]).map(weight_of).sum();
        let (s, t) = (nl + nr, nl + nr + 1);
        let mut net = FlowNetwork::new(nl + nr + 2);
        for (i, _) in active.iter().enumerate().filter(|(_, &a)| a) {
            if i < nl {
                net.add_edge(s, i, weight_of(i));
            } else {
                net.add_edge(i, t, weight_of(i));
            }
        }
        let infinite = total + 1;
        for &(a, b) in self.conflicts {
            if active[a] && active[nl + b] {
                net.add_edge(a, nl + b, infinite);
            }
        }
        let cut = net.max_flow(s, t);
        let reach = net.residual_reach(s);
        let chosen = (0..nl + nr)
            .map(|i| active[i] && (if i < nl { reach[i] } else { !reach[i] }))
            .collect();
        (total - cut, chosen)
    }

    /// Lexicographically least maximum-weight independent set under `order`.
    ///
    /// `order` lists every vertex (left `0..nl`, right `nl..`) by increasing
    /// rank; the result is the optimum whose members, sorted by rank, form
    /// the least sequence.
    pub fn lex_least(&self, order: &[usize]) -> (u64, Vec<bool>) {
        let nl = self.left_weights.len();
        let n = nl + self.right_weights.len();
        let weight_of = |i: usize| {
            if i < nl {
                self.left_weights[i]
            } else {
                self.right_weights[i - nl]
            }
        };
        let mut neighbours = vec![Vec::new(); n];
        for &(a, b) in self.conflicts {
            neighbours[a].push(nl + b);
            neighbours[nl + b].push(a);
        }
        let (optimum, _) = self.solve(&vec![true; n]);
        let mut chosen = vec![false; n];
        let mut open = vec![true; n];
        let mut fixed = 0;
        for (pos, &v) in order.iter().enumerate() {
            if fixed == optimum {
                break;
            }
            if !open[v] {
                continue;
            }
            open[v] = false;
            let mut rest = vec![false; n];
            for &u in &order[pos + 1..] {
                rest[u] = open[u];
            }
            for &u in &neighbours[v] {
                rest[u] = false;
            }
            if fixed + weight_of(v) + self.solve(&rest).0 == optimum {
                chosen[v] = true;
                fixed += weight_of(v);
                for &u in &neighbours[v] {
                    open[u] = false;
                }
            }
        }
        (optimum, chosen)
    }
}

fn resolve(g: &Graph, labels: &[VertexLabel]) -> Result<Vec<usize>> {
    labels
        .iter()
        .map(|l| {
            g.index_of(l)
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))
        })
        .collect()
}

/// Left positions, right positions and cross edges of a bipartite split.
type BipartiteIndex = (Vec<usize>, Vec<usize>, Vec<(usize, usize)>);

fn bipartite_setup(
    g: &Graph,
    left: &[VertexLabel],
    right: &[VertexLabel],
) -> Result<BipartiteIndex> {
    let l = resolve(g, left)?;
    let r = resolve(g, right)?;
    let mut side = vec![None; g.n()];
    for (s, list) in [(0u8, &l), (1u8, &r)] {
        for &i in list.iter() {
            if side[i].is_some() {
                return Err(Error::NotBipartitePartition(format!(
                    "{} appears twice",
                    g.vertices()[i]
                )));
            }
            side[i] = Some(s);
        }
    }
    if let Some(i) = side.iter().position(|s| s.is_none()) {
        return Err(Error::NotBipartitePartition(format!(
            "{} is on neither side",
            g.vertices()[i]
        )));
    }
    let pos_l: Vec<usize> = {
        let mut p = vec![usize::MAX; g.n()];
        for (k, &i) in l.iter().enumerate() {
            p[i] = k;
        }
        p
    };
    let pos_r: Vec<usize> = {
        let mut p = vec![usize::MAX; g.n()];
        for (k, &i) in r.iter().enumerate() {
            p[i] = k;
        }
        p
    };
    let mut conflicts = Vec::new();
    for (i, j) in g.edge_pairs() {
        match (side[i], side[j]) {
            (Some(0), Some(1)) => conflicts.push((pos_l[i], pos_r[j])),
            (Some(1), Some(0)) => conflicts.push((pos_l[j], pos_r[i])),
            _ => {
                return Err(Error::NotBipartitePartition(format!(
                    "edge {} {} lies inside one side",
                    g.vertices()[i],
                    g.vertices()[j]
                )))
            }
        }
    }
    Ok((l, r, conflicts))
}

/// Lex-least maximum-weight independent set of a bipartite graph, by minimum cut.
///
/// Runs over a `(left, right)` partition of all vertices in which every edge
/// crosses sides.
pub fn max_weight_independent_set_bipartite(
    g: &Graph,
    partition: (&[VertexLabel], &[VertexLabel]),
    weights: &Weights,
) -> Result<CliqueResult> {
    let (l, r, conflicts) = bipartite_setup(g, partition.0, partition.1)?;
    let w = weights.indexed(g)?;
    let lw: Vec<u64> = l.iter().map(|&i| w[i]).collect();
    let rw: Vec<u64> = r.iter().map(|&i| w[i]).collect();
    let problem = Bipartite {
        left_weights: &lw,
        right_weights: &rw,
        conflicts: &conflicts,
    };
    let global: Vec<usize> = l.iter().chain(&r).copied().collect();
    let mut order: Vec<usize> = (0..global.len()).collect();
    order.sort_by_key(|&k| global[k]);
    let (_, chosen) = problem.lex_least(&order);
    let members: Vec<usize> = (0..global.len())
        .filter(|&k| chosen[k])
        .map(|k| global[k])
        .collect();
    let result = CliqueResult::from_indices(g, &members, &w);
    debug_assert!(result.is_independent_in(g));
    Ok(result)
}

/// Minimum-weight vertex cover of a bipartite graph: the complement of the
/// maximum-weight independent set.
pub fn min_weight_vertex_cover_bipartite(
    g: &Graph,
    partition: (&[VertexLabel], &[VertexLabel]),
    weights: &Weights,
) -> Result<CliqueResult> {
    let mis = max_weight_independent_set_bipartite(g, partition, weights)?;
    let w = weights.indexed(g)?;
    let inside: HashSet<&VertexLabel> = mis.members.iter().collect();
    let cover: Vec<usize> = (0..g.n())
        .filter(|&i| !inside.contains(&g.vertices()[i]))
        .collect();
    Ok(CliqueResult::from_indices(g, &cover, &w))
}

/// Maximum-weight clique inside the union of two cliques.
///
/// `side_a` and `side_b` hold vertex indices; `adjacent` answers adjacency
/// between them and `w` gives weights by index. The clique is the complement
/// of a maximum-weight independent set in the bipartite graph of non-adjacent
/// cross pairs. With `lex_least` the members are the lexicographically least
/// optimum under index order; otherwise only the weight is meaningful and the
/// returned members are some optimum.
pub(crate) fn cobipartite_by_index(
    side_a: &[usize],
    side_b: &[usize],
    w: &[u64],
    adjacent: impl Fn(usize, usize) -> bool,
    lex_least: bool,
) -> (u64, Vec<usize>) {
    let aw: Vec<u64> = side_a.iter().map(|&i| w[i]).collect();
    let bw: Vec<u64> = side_b.iter().map(|&i| w[i]).collect();
    let mut conflicts = Vec::new();
    for (x, &i) in side_a.iter().enumerate() {
        for (y, &j) in side_b.iter().enumerate() {
            if !adjacent(i, j) {
                conflicts.push((x, y));
            }
        }
    }
    let problem = Bipartite {
        left_weights: &aw,
        right_weights: &bw,
        conflicts: &conflicts,
    };
    let global: Vec<usize> = side_a.iter().chain(side_b).copied().collect();
    let chosen = if lex_least {
        let mut order: Vec<usize> = (0..global.len()).collect();
        order.sort_by_key(|&k| global[k]);
        problem.lex_least(&order).1
    } else {
        problem.solve(&vec![true; global.len()]).1
    };
    let mut members: Vec<usize> = (0..global.len())
        .filter(|&k| chosen[k])
        .map(|k| global[k])
        .collect();
    members.sort_unstable();
    (members.iter().map(|&i| w[i]).sum(), members)
}

/// Exact maximum-weight clique of `g` restricted to the two sides of a
/// co-bipartite partition, by minimum cut.
///
/// Ties resolve to the lexicographically least member list.
pub fn max_weight_clique_cobipartite(
    g: &Graph,
    partition: &CoBipartitePartition,
    weights: &Weights,
) -> Result<CliqueResult> {
    let a = resolve(g, &partition.side_a)?;
    let b = resolve(g, &partition.side_b)?;
    let mut seen = vec![false; g.n()];
    for &i in a.iter().chain(&b) {
        if seen[i] {
            return Err(Error::NotCoBipartite(format!(
                "{} appears twice",
                g.vertices()[i]
            )));
        }
        seen[i] = true;
    }
    for side in [&a, &b] {
        for (x, &i) in side.iter().enumerate() {
            for &j in &side[x + 1..] {
                if !g.adjacent(i, j) {
                    return Err(Error::NotCoBipartite(format!(
                        "{} and {} are on one side but not adjacent",
                        g.vertices()[i],
                        g.vertices()[j]
                    )));
                }
            }
        }
    }
    let w = weights.indexed(g)?;
    let (_, members) = cobipartite_by_index(&a, &b, &w, |i, j| g.adjacent(i, j), true);
    Ok(CliqueResult::from_indices(g, &members, &w))
}
