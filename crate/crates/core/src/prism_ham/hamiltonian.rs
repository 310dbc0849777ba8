use thiserror::Error;

use crate::graph::{Cycle, Graph, VertexSet};
use crate::search::{Budget, BudgetExceeded, DEFAULT_NODE_BUDGET};

use super::prism::{prism, Prism, PrismVertex};

/// Graphs above this order are rejected by [`hamiltonicity_oracle`].
pub const ORACLE_MAX_VERTICES: usize = 18;

/// A Hamiltonian cycle of the graph it was found in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonianCertificate {
    pub cycle: Cycle,
}

impl HamiltonianCertificate {
    /// Every vertex exactly once, every consecutive pair an edge.
    pub fn replays(&self, g: &Graph) -> bool {
        self.cycle.len() == g.n() && self.cycle.is_cycle_of(g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamiltonVerdict {
    Certified(HamiltonianCertificate),
    /// Exhaustive search found no Hamiltonian cycle.
    Refuted,
    /// The node budget ran out first.
    Unknown(BudgetExceeded),
}

impl HamiltonVerdict {
    /// `Some(true)` when certified, `Some(false)` when refuted.
    pub fn decided(&self) -> Option<bool> {
        match self {
            HamiltonVerdict::Certified(_) => Some(true),
            HamiltonVerdict::Refuted => Some(false),
            HamiltonVerdict::Unknown(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&HamiltonianCertificate> {
        match self {
            HamiltonVerdict::Certified(c) => Some(c),
            _ => None,
        }
    }
}

pub fn find_hamiltonian_cycle(g: &Graph) -> HamiltonVerdict {
    find_hamiltonian_cycle_with_budget(g, DEFAULT_NODE_BUDGET)
}

/// Backtracking search for a Hamiltonian cycle through vertex 0.
///
/// Paths grow from vertex 0 in increasing neighbor order. A branch is cut
/// when some unvisited vertex can no longer get two cycle neighbors, when
/// the unvisited vertices are not all reachable from the path end, or when
/// degree-2 vertices force incompatible moves. A degree-2 vertex next to the
/// path end is taken immediately.
pub fn find_hamiltonian_cycle_with_budget(g: &Graph, node_budget: u64) -> HamiltonVerdict {
    let n = g.n();
    if n < 3 || (0..n).any(|v| g.degree(v) < 2) || !g.is_connected() {
        return HamiltonVerdict::Refuted;
    }
    let mut search = HamSearch {
        g,
        full: g.vertices().bits(),
        budget: Budget::new(node_budget),
        path: Vec::with_capacity(n),
    };
    search.path.push(0);
    match search.extend(1) {
        Ok(true) => HamiltonVerdict::Certified(HamiltonianCertificate {
            cycle: Cycle::new(g, &search.path).expect("search only walks edges"),
        }),
        Ok(false) => HamiltonVerdict::Refuted,
        Err(b) => HamiltonVerdict::Unknown(b),
    }
}

struct HamSearch<'a> {
    g: &'a Graph,
    full: u64,
    budget: Budget,
    path: Vec<usize>,
}

impl HamSearch<'_> {
    fn extend(&mut self, visited: u64) -> Result<bool, BudgetExceeded> {
        self.budget.tick()?;
        let g = self.g;
        let head = *self.path.last().expect("path starts at 0");
        let unvisited = self.full & !visited;
        if unvisited == 0 {
            return Ok(g.has_edge(head, 0));
        }

        let start_bit = 1u64;
        let head_bit = 1u64 << head;
        let at_start = head == 0;
        let open = unvisited | head_bit | start_bit;
        let mut forced_head = 0u64;
        let mut forced_start = 0u64;
        for w in VertexSet::from_bits(unvisited) {
            let avail = g.row(w) & open;
            let k = avail.count_ones();
            if k < 2 {
                return Ok(false);
            }
            if k == 2 {
                if avail & head_bit != 0 {
                    forced_head |= 1u64 << w;
                }
                if avail & start_bit != 0 {
                    forced_start |= 1u64 << w;
                }
            }
        }
        if !at_start {
            if forced_head.count_ones() > 1 || forced_start.count_ones() > 1 {
                return Ok(false);
            }
            if forced_head & forced_start != 0 && unvisited.count_ones() > 1 {
                return Ok(false);
            }
        } else if forced_head.count_ones() > 2 {
            return Ok(false);
        }
        if g.row(0) & unvisited == 0 {
            return Ok(false);
        }
        // the rest of the cycle runs from head through every unvisited vertex
        let reach = g.reach(head, VertexSet::from_bits(unvisited | head_bit));
        if unvisited & !reach.bits() != 0 {
            return Ok(false);
        }

        let choices = if !at_start && forced_head != 0 {
            forced_head
        } else {
            g.row(head) & unvisited
        };
        for v in VertexSet::from_bits(choices) {
            self.path.push(v);
            if self.extend(visited | 1u64 << v)? {
                return Ok(true);
            }
            self.path.pop();
        }
        Ok(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("subset oracle supports at most {ORACLE_MAX_VERTICES} vertices, got {0}")]
    TooLarge(usize),
}

/// Existence of a Hamiltonian cycle by dynamic programming over vertex
/// subsets: `ends[S]` holds the vertices at which a path from 0 covering
/// exactly `S` can end.
pub fn hamiltonicity_oracle(g: &Graph) -> Result<bool, OracleError> {
    let n = g.n();
    if n > ORACLE_MAX_VERTICES {
        return Err(OracleError::TooLarge(n));
    }
    if n < 3 {
        return Ok(false);
    }
    let rows: Vec<u32> = (0..n).map(|v| g.neighbors(v).bits() as u32).collect();
    let full = (1u32 << n) - 1;
    let mut ends = vec![0u32; 1 << n];
    ends[1] = 1;
    for mask in (1..=full).step_by(2) {
        let here = ends[mask as usize];
        if here == 0 {
            continue;
        }
        let mut tails = here;
        while tails != 0 {
            let v = tails.trailing_zeros() as usize;
            tails &= tails - 1;
            let mut next = rows[v] & !mask;
            while next != 0 {
                let w = next.trailing_zeros();
                next &= next - 1;
                ends[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    Ok(ends[full as usize] & rows[0] != 0)
}

/// Hamiltonicity of the prism, with the certificate read back as prism
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrismHamiltonicity {
    pub prism: Prism,
    pub verdict: HamiltonVerdict,
}

impl PrismHamiltonicity {
    pub fn certificate_vertices(&self) -> Option<Vec<PrismVertex>> {
        self.verdict.certificate().map(|c| {
            c.cycle
                .vertices()
                .iter()
                .map(|&i| self.prism.vertex(i))
                .collect()
        })
    }
}

pub fn is_prism_hamiltonian(g: &Graph) -> PrismHamiltonicity {
    is_prism_hamiltonian_with_budget(g, DEFAULT_NODE_BUDGET)
}

/// Panics if `g` has more than 32 vertices (its prism would not fit).
pub fn is_prism_hamiltonian_with_budget(g: &Graph, node_budget: u64) -> PrismHamiltonicity {
    let prism = prism(g).expect("prism of a graph with at most 32 vertices");
    let verdict = find_hamiltonian_cycle_with_budget(prism.graph(), node_budget);
    PrismHamiltonicity { prism, verdict }
}
