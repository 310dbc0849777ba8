use thiserror::Error;

use crate::graph::{Cycle, Graph, VertexSet};

/// Default cap on the order of graphs searched for holes.
pub const DEFAULT_HOLE_SEARCH_LIMIT: usize = 16;

/// A chordless cycle of length at least `k`, refuting k-chordality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoleWitness {
    pub cycle: Cycle,
}

impl HoleWitness {
    /// The cycle exists in `g`, is long enough, and has no chord.
    pub fn replays(&self, g: &Graph, k: usize) -> bool {
        self.cycle.is_cycle_of(g)
            && self.cycle.len() >= k.max(4)
            && self.cycle.chords(g).next().is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    KChordal,
    Hole(HoleWitness),
}

impl Chordality {
    pub fn holds(&self) -> bool {
        matches!(self, Chordality::KChordal)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChordalityError {
    #[error("k must be at least 3, got {0}")]
    InvalidK(usize),
    #[error("hole search on {n} vertices exceeds the configured limit of {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// Whether every cycle of length at least `k` has a chord.
///
/// Triangles cannot carry chords, so only holes of length `max(k, 4)` and up
/// count; `k = 3` and `k = 4` both mean chordal.
pub fn is_k_chordal(g: &Graph, k: usize) -> Result<Chordality, ChordalityError> {
    is_k_chordal_with_limit(g, k, DEFAULT_HOLE_SEARCH_LIMIT)
}

pub fn is_k_chordal_with_limit(
    g: &Graph,
    k: usize,
    max_vertices: usize,
) -> Result<Chordality, ChordalityError> {
    if k < 3 {
        return Err(ChordalityError::InvalidK(k));
    }
    if g.n() > max_vertices {
        return Err(ChordalityError::TooLarge {
            n: g.n(),
            limit: max_vertices,
        });
    }
    Ok(match find_hole(g, k.max(4)) {
        Some(cycle) => Chordality::Hole(HoleWitness { cycle }),
        None => Chordality::KChordal,
    })
}

/// Lexicographically least canonical chordless cycle of length at least
/// `min_len`, found by growing induced paths from each start vertex through
/// larger vertices only.
fn find_hole(g: &Graph, min_len: usize) -> Option<Cycle> {
    let mut path = Vec::with_capacity(g.n());
    for s in 0..g.n() {
        let above = g.vertices().difference(VertexSet::full(s + 1));
        path.clear();
        path.push(s);
        if let Some(hole) = extend(g, &mut path, VertexSet::singleton(s), above, min_len) {
            return Some(hole);
        }
    }
    None
}

fn extend(
    g: &Graph,
    path: &mut Vec<usize>,
    on_path: VertexSet,
    allowed: VertexSet,
    min_len: usize,
) -> Option<Cycle> {
    let s = path[0];
    let last = *path.last().expect("path starts non-empty");
    // path vertices other than the start and the current end
    let mut interior = on_path;
    interior.remove(s);
    interior.remove(last);

    let candidates = g.neighbors(last).intersection(allowed).difference(on_path);
    for v in candidates {
        if path.len() > 1 {
            if !g.neighbors(v).intersection(interior).is_empty() {
                continue;
            }
            if g.has_edge(v, s) {
                if path.len() + 1 >= min_len && path[1] < v {
                    path.push(v);
                    let hole = Cycle::canonical_unchecked(path);
                    path.pop();
                    return Some(hole);
                }
                continue;
            }
        }
        path.push(v);
        let mut next = on_path;
        next.insert(v);
        let found = extend(g, path, next, allowed, min_len);
        path.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}
