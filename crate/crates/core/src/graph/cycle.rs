use std::fmt;

use thiserror::Error;

use super::{Edge, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("a cycle needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("vertex {0} is not in the graph")]
    VertexOutOfRange(usize),
    #[error("vertex {0} appears more than once")]
    RepeatedVertex(usize),
    #[error("consecutive vertices {0} and {1} are not adjacent")]
    MissingEdge(usize, usize),
}

/// A cycle of a host graph, stored in canonical form: the smallest vertex
/// first, and its smaller cycle-neighbor second.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Validates `seq` against `g` and canonicalizes it.
    pub fn new(g: &Graph, seq: &[usize]) -> Result<Cycle, CycleError> {
        if seq.len() < 3 {
            return Err(CycleError::TooShort(seq.len()));
        }
        let mut seen = VertexSet::empty();
        for &v in seq {
            if v >= g.n() {
                return Err(CycleError::VertexOutOfRange(v));
            }
            if seen.contains(v) {
                return Err(CycleError::RepeatedVertex(v));
            }
            seen.insert(v);
        }
        for i in 0..seq.len() {
            let (a, b) = (seq[i], seq[(i + 1) % seq.len()]);
            if !g.has_edge(a, b) {
                return Err(CycleError::MissingEdge(a, b));
            }
        }
        Ok(Cycle::canonical_unchecked(seq))
    }

    pub(crate) fn canonical_unchecked(seq: &[usize]) -> Cycle {
        let p = seq.len();
        let start = (0..p).min_by_key(|&i| seq[i]).expect("non-empty cycle");
        let next = seq[(start + 1) % p];
        let prev = seq[(start + p - 1) % p];
        let vertices = if next < prev {
            (0..p).map(|k| seq[(start + k) % p]).collect()
        } else {
            (0..p).map(|k| seq[(start + p - k) % p]).collect()
        };
        Cycle { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Vertex at cycle position `i` (taken mod the length).
    pub fn at(&self, i: usize) -> usize {
        self.vertices[i % self.vertices.len()]
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// Cycle edges `(c_i, c_{i+1})` in position order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.len()).map(move |i| Edge::new(self.at(i), self.at(i + 1)))
    }

    /// Re-checks the cycle against a graph.
    pub fn is_cycle_of(&self, g: &Graph) -> bool {
        Cycle::new(g, &self.vertices).is_ok_and(|c| c == *self)
    }

    /// Edges of `g` joining two non-consecutive cycle vertices.
    pub fn chords<'a>(&'a self, g: &'a Graph) -> impl Iterator<Item = Edge> + 'a {
        let p = self.len();
        (0..p).flat_map(move |i| {
            (i + 2..p)
                .filter(move |&j| !(i == 0 && j == p - 1))
                .filter(move |&j| g.has_edge(self.vertices[i], self.vertices[j]))
                .map(move |j| Edge::new(self.vertices[i], self.vertices[j]))
        })
    }
}

/// Whitespace-separated vertex list.
impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cycle[{self}]")
    }
}
