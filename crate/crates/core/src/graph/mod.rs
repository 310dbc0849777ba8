//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is kept as one `u64` bitrow per vertex, alongside a sorted edge
//! list. Every algorithm in the crate takes a `&Graph` and never mutates it.

mod cycle;
pub mod io;

use std::fmt;

use thiserror::Error;

pub use cycle::{Cycle, CycleError};

/// Largest vertex count a [`Graph`] can hold (one machine word per bitrow).
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
}

/// An undirected edge, always stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(usize, usize);

impl Edge {
    /// Normalizes the endpoint order. Panics on a self-loop.
    pub fn new(a: usize, b: usize) -> Edge {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn u(self) -> usize {
        self.0
    }

    pub fn v(self) -> usize {
        self.1
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.0, self.1)
    }

    pub fn vertex_set(self) -> VertexSet {
        VertexSet::from_bits((1u64 << self.0) | (1u64 << self.1))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// A set of vertices as a 64-bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> VertexSet {
        VertexSet(0)
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn from_bits(bits: u64) -> VertexSet {
        VertexSet(bits)
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// All `k`-element subsets of `0..n` in increasing bitmask order.
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    assert!(n <= MAX_VERTICES);
    let limit = VertexSet::full(n).bits();
    let mut next = if k > n {
        None
    } else if k == 0 {
        Some(0u64)
    } else {
        Some(VertexSet::full(k).bits())
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let low = cur & cur.wrapping_neg();
            let ripple = cur.wrapping_add(low);
            if ripple == 0 {
                None
            } else {
                let ones = ((ripple ^ cur) >> 2) / low;
                let nxt = ripple | ones;
                (nxt & !limit == 0).then_some(nxt)
            }
        };
        Some(VertexSet(cur))
    })
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            edges: Vec::new(),
        })
    }

    /// Builds a graph from vertex pairs. Repeated pairs (in either
    /// orientation) collapse to one edge.
    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = Graph::empty(n)?.adj;
        for (a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            adj[a] |= 1u64 << b;
            adj[b] |= 1u64 << a;
        }
        Ok(Graph::from_rows_unchecked(adj))
    }

    /// Builds a graph from symmetric, loop-free bitrows.
    pub(crate) fn from_rows_unchecked(adj: Vec<u64>) -> Graph {
        let n = adj.len();
        let mut edges = Vec::new();
        for (u, &row) in adj.iter().enumerate() {
            debug_assert_eq!(row >> u & 1, 0);
            for v in VertexSet(row).iter().filter(|&v| v > u) {
                debug_assert!(adj[v] >> u & 1 == 1);
                edges.push(Edge(u, v));
            }
        }
        Graph { n, adj, edges }
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted lexicographically.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub(crate) fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Returns the normalized edge if `(u, v)` is an edge of the graph.
    pub fn edge(&self, u: usize, v: usize) -> Result<Edge, GraphError> {
        if u != v && self.has_edge(u, v) {
            Ok(Edge::new(u, v))
        } else {
            Err(GraphError::NotAnEdge(u, v))
        }
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertices()) == self.vertices()
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    /// `start` must belong to `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier) {
                next |= self.adj[v];
            }
            frontier = next & within.0 & !seen;
            seen |= frontier;
        }
        VertexSet(seen)
    }

    /// Number of connected components of the subgraph induced on `within`.
    pub fn component_count(&self, within: VertexSet) -> usize {
        let mut rest = within;
        let mut count = 0;
        while let Some(v) = rest.min() {
            rest = rest.difference(self.reach(v, rest));
            count += 1;
        }
        count
    }

    /// Maximal connected vertex sets, ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let comp = self.reach(v, rest);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Subgraph induced on `keep`, relabeled `0..|keep|` in increasing
    /// order. The second value maps new labels to old ones.
    pub fn induced_subgraph(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let keep = keep.intersection(self.vertices());
        let map: Vec<usize> = keep.iter().collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (new, &old) in map.iter().enumerate() {
            index[old] = new;
        }
        let rows = map
            .iter()
            .map(|&old| {
                VertexSet(self.adj[old] & keep.0)
                    .iter()
                    .fold(0u64, |acc, w| acc | 1u64 << index[w])
            })
            .collect();
        (Graph::from_rows_unchecked(rows), map)
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for e in &self.edges {
            let (a, b) = (perm[e.0], perm[e.1]);
            rows[a] |= 1u64 << b;
            rows[b] |= 1u64 << a;
        }
        Graph::from_rows_unchecked(rows)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}-{}", e.0, e.1)?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert!(matches!(
            Graph::empty(65),
            Err(GraphError::TooManyVertices(65))
        ));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[Edge::new(0, 1), Edge::new(1, 2)]);
        let degree_sum: usize = (0..3).map(|v| g.degree(v)).sum();
        assert_eq!(degree_sum, 2 * g.m());
    }

    #[test]
    fn components() {
        assert_eq!(cycle(6).connected_components().len(), 1);
        let g = cycle(6);
        let rest = g.vertices().difference([0, 3].into_iter().collect());
        let (h, map) = g.induced_subgraph(rest);
        let comps: Vec<Vec<usize>> = h
            .connected_components()
            .into_iter()
            .map(|c| c.iter().map(|v| map[v]).collect())
            .collect();
        assert_eq!(comps, vec![vec![1, 2], vec![4, 5]]);
        assert_eq!(g.component_count(rest), 2);
        assert_eq!(Graph::empty(4).unwrap().connected_components().len(), 4);
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = cycle(5);
        let (p, map) = c5.induced_subgraph([0, 1, 2].into_iter().collect());
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(p.edges(), &[Edge::new(0, 1), Edge::new(1, 2)]);

        let (same, _) = c5.induced_subgraph(c5.vertices());
        assert_eq!(same, c5);
        assert_eq!(c5.induced_subgraph(VertexSet::empty()).0.n(), 0);

        // outer 5-cycle of the standard Petersen labeling
        let (face, _) = petersen().induced_subgraph(VertexSet::full(5));
        assert_eq!(face, c5);
        // the inner pentagram is a 5-cycle too, after relabeling
        let (inner, _) = petersen().induced_subgraph(VertexSet::from_bits(0b11111 << 5));
        assert_eq!(inner.m(), 5);
        assert!((0..5).all(|v| inner.degree(v) == 2));
        assert!(inner.is_connected());
    }

    #[test]
    fn fixed_size_subsets() {
        let all: Vec<u64> = subsets_of_size(4, 2).map(VertexSet::bits).collect();
        assert_eq!(all, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(subsets_of_size(5, 0).count(), 1);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
        assert_eq!(subsets_of_size(64, 64).count(), 1);
        assert_eq!(subsets_of_size(10, 3).count(), 120);
    }

    #[test]
    fn vertex_set_ops() {
        let s: VertexSet = [3, 1, 7].into_iter().collect();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3, 7]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.min(), Some(1));
        assert_eq!(s.to_string(), "{1,3,7}");
        assert!(VertexSet::full(64).contains(63));
        assert!(!s.contains(64));
    }
}
