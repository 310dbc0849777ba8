//! Parity triangles on odd cycles.
//!
//! On an odd cycle `c_0 c_1 ... c_{p-1}` a parity triangle is a cycle edge
//! `(c_j, c_{j+1})` together with an apex `c_m` adjacent to both ends, where
//! the forward gap `(j - m) mod p` is odd, i.e. equals `2q - 1` for some
//! `1 <= q <= (p - 1) / 2`. In a graph where every cycle of length at least
//! 5 has a chord, every odd cycle carries one.
//!
//! [`find_parity_triangle`] builds one constructively by chord splitting:
//!
//! * a triangle is its own witness (`m = 0`, `j = 1`);
//! * otherwise take the least chord, rotate it to start at position 0 so it
//!   reads `(0, d)`, and let `t = d + 1` be the number of vertices on the
//!   arc `0..=d`;
//! * `d = 2` closes the triangle `0, 1, 2` immediately;
//! * odd `t`: continue on the odd cycle `0, 1, ..., d`;
//! * even `t`: continue on the odd cycle `0, d, d + 1, ..., p - 1`.
//!
//! Each step keeps a map from the current positions back to positions of
//! the original cycle. Consecutive current positions always lie an odd
//! number of original positions apart (1 along the cycle, `d` or `p - d` across
//! the kept chord), so gap parities survive every step and rotation. What
//! can break is adjacency, when the final triangle's "cycle edge" is a chord
//! of the original cycle. The composed candidate is therefore always
//! re-verified, and replaced by an exhaustive scan when it does not check out.

use std::fmt;

use thiserror::Error;

use crate::graph::{Cycle, CycleError, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TriangleWitness {
    /// Cycle position `m` of the apex.
    pub apex: usize,
    /// Cycle position `j` of the edge `(c_j, c_{j+1 mod p})`.
    pub edge_pos: usize,
    /// `(j - m) mod p = 2q - 1`.
    pub q: usize,
}

impl TriangleWitness {
    /// Derives `q` from the positions on a cycle of length `p`. The result
    /// is only meaningful when the gap is odd; [`verify_parity_triangle`]
    /// checks that.
    pub fn from_positions(p: usize, apex: usize, edge_pos: usize) -> TriangleWitness {
        let gap = (edge_pos + p - apex % p) % p;
        TriangleWitness {
            apex,
            edge_pos,
            q: gap.div_ceil(2),
        }
    }

    /// Positions `(m, j, j + 1 mod p)`.
    pub fn positions(&self, p: usize) -> [usize; 3] {
        [self.apex, self.edge_pos, (self.edge_pos + 1) % p]
    }

    /// Vertices `(c_m, c_j, c_{j+1})`.
    pub fn vertices(&self, c: &Cycle) -> [usize; 3] {
        self.positions(c.len()).map(|i| c.at(i))
    }

    /// The cycle read from the apex: position 0 is the apex and the edge
    /// sits at positions `2q - 1` and `2q`.
    pub fn from_apex(&self, c: &Cycle) -> Vec<usize> {
        (0..c.len()).map(|k| c.at(self.apex + k)).collect()
    }

    /// `apex=<vertex> edge=(<u>,<v>) q=<q>`.
    pub fn describe(&self, c: &Cycle) -> String {
        let [a, u, v] = self.vertices(c);
        format!("apex={a} edge=({u},{v}) q={}", self.q)
    }
}

impl fmt::Display for TriangleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={} j={} q={}", self.apex, self.edge_pos, self.q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// The chord is `(0, 2)`: triangle `0, 1, 2`.
    Immediate,
    /// `t` odd: keep the arc `0, 1, ..., d`.
    OddArc,
    /// `t` even: keep `0, d, d + 1, ..., p - 1`.
    EvenArc,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Immediate => "immediate",
            Branch::OddArc => "odd-arc",
            Branch::EvenArc => "even-arc",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    /// Length of the cycle the step split.
    pub cycle_len: usize,
    /// Chord as positions of that cycle, before rotation.
    pub chord: (usize, usize),
    /// Chord endpoints as graph vertices.
    pub chord_vertices: (usize, usize),
    /// Vertices on the arc from the chord's first endpoint to its second.
    pub t: usize,
    pub branch: Branch,
    /// Positions of the resulting cycle mapped to original cycle positions.
    pub labels: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SplitTrace {
    pub steps: Vec<TraceStep>,
    /// Original positions of the final triangle `(apex, edge, edge)`.
    pub base: [usize; 3],
}

impl SplitTrace {
    /// Positions of the base triangle pushed through the last step's map.
    /// For a trace that ends in the base case this is the composed result.
    pub fn replay(&self, p: usize) -> [usize; 3] {
        match self.steps.last() {
            Some(step) => [step.labels[0], step.labels[1], step.labels[2]],
            None => [0, 1, 2].map(|i| i % p),
        }
    }
}

impl fmt::Display for SplitTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            let labels: Vec<String> = s.labels.iter().map(|l| l.to_string()).collect();
            writeln!(
                f,
                "step {i}: len={} chord=({},{}) vertices=({},{}) t={} branch={} labels=[{}]",
                s.cycle_len,
                s.chord.0,
                s.chord.1,
                s.chord_vertices.0,
                s.chord_vertices.1,
                s.t,
                s.branch,
                labels.join(",")
            )?;
        }
        let [a, b, c] = self.base;
        writeln!(f, "base: positions ({a},{b},{c})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityTriangle {
    pub witness: TriangleWitness,
    pub trace: SplitTrace,
    /// Set when the composed candidate failed verification and the witness
    /// came from the exhaustive scan instead.
    pub fallback: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParityTriangleError {
    #[error("cycle has even length {0}")]
    EvenCycle(usize),
    #[error("not a cycle of the graph: {0}")]
    InvalidCycle(#[from] CycleError),
    #[error("sub-cycle {0} of length >= 5 has no chord; the graph is not 5-chordal")]
    ChordlessSubcycle(Cycle),
    #[error("no parity triangle on the cycle; the graph is not 5-chordal")]
    NoTriangle,
}

/// Finds a parity triangle on the odd cycle `c` by chord splitting.
pub fn find_parity_triangle(g: &Graph, c: &Cycle) -> Result<ParityTriangle, ParityTriangleError> {
    let c = Cycle::new(g, c.vertices())?;
    let p = c.len();
    if p % 2 == 0 {
        return Err(ParityTriangleError::EvenCycle(p));
    }

    let mut labels: Vec<usize> = (0..p).collect();
    let mut steps = Vec::new();
    while labels.len() > 3 {
        let len = labels.len();
        let vertex = |i: usize| c.at(labels[i]);
        let chord = (0..len).find_map(|a| {
            (a + 2..len)
                .filter(|&b| !(a == 0 && b == len - 1))
                .find(|&b| g.has_edge(vertex(a), vertex(b)))
                .map(|b| (a, b))
        });
        let Some((a, b)) = chord else {
            let verts: Vec<usize> = (0..len).map(vertex).collect();
            return Err(ParityTriangleError::ChordlessSubcycle(
                Cycle::canonical_unchecked(&verts),
            ));
        };
        let chord_vertices = (vertex(a), vertex(b));
        let rotated: Vec<usize> = (0..len).map(|i| labels[(a + i) % len]).collect();
        let d = b - a;
        let (branch, next) = if d == 2 {
            (Branch::Immediate, rotated)
        } else if d % 2 == 0 {
            (Branch::OddArc, rotated[..=d].to_vec())
        } else {
            let mut kept = vec![rotated[0]];
            kept.extend_from_slice(&rotated[d..]);
            (Branch::EvenArc, kept)
        };
        steps.push(TraceStep {
            cycle_len: len,
            chord: (a, b),
            chord_vertices,
            t: d + 1,
            branch,
            labels: next.clone(),
        });
        labels = next;
        if branch == Branch::Immediate {
            break;
        }
    }

    let base = [labels[0], labels[1], labels[2]];
    let trace = SplitTrace { steps, base };
    let composed = (base[2] == (base[1] + 1) % p)
        .then(|| TriangleWitness::from_positions(p, base[0], base[1]));
    if let Some(w) = composed.filter(|w| verify_parity_triangle(g, &c, w)) {
        return Ok(ParityTriangle {
            witness: w,
            trace,
            fallback: false,
        });
    }
    match brute_force_parity_triangle(g, &c) {
        Some(w) => Ok(ParityTriangle {
            witness: w,
            trace,
            fallback: true,
        }),
        None => Err(ParityTriangleError::NoTriangle),
    }
}

/// Checks the witness conditions: odd cycle, positions in range, odd gap
/// `2q - 1` with `1 <= q <= (p - 1) / 2`, and all three triangle edges.
pub fn verify_parity_triangle(g: &Graph, c: &Cycle, w: &TriangleWitness) -> bool {
    let p = c.len();
    if p < 3 || p.is_multiple_of(2) || w.apex >= p || w.edge_pos >= p {
        return false;
    }
    let gap = (w.edge_pos + p - w.apex) % p;
    if gap.is_multiple_of(2) || w.q < 1 || w.q > (p - 1) / 2 || 2 * w.q - 1 != gap {
        return false;
    }
    let [a, u, v] = w.vertices(c);
    g.has_edge(a, u) && g.has_edge(a, v) && g.has_edge(u, v)
}

/// The least `(m, j)` in lexicographic order that passes
/// [`verify_parity_triangle`].
pub fn brute_force_parity_triangle(g: &Graph, c: &Cycle) -> Option<TriangleWitness> {
    let p = c.len();
    (0..p)
        .flat_map(|m| (0..p).map(move |j| TriangleWitness::from_positions(p, m, j)))
        .find(|w| verify_parity_triangle(g, c, w))
}
