//! Cycle enumeration and edge-dominating cycles.
//!
//! Cycles are produced in canonical form by growing paths from each start
//! vertex `s` through vertices larger than `s` only, and closing a path
//! `s, p1, ..., v` only when `p1 < v`. Each cycle is therefore reached
//! exactly once, and depth-first order with increasing neighbors yields the
//! lexicographic order of canonical vertex sequences.

use std::ops::ControlFlow;

use thiserror::Error;

use crate::graph::{Cycle, CycleError, Edge, Graph, VertexSet};
use crate::search::{Budget, BudgetExceeded, DEFAULT_NODE_BUDGET};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parity {
    #[default]
    Any,
    Odd,
    Even,
}

impl Parity {
    fn admits(self, len: usize) -> bool {
        match self {
            Parity::Any => true,
            Parity::Odd => len % 2 == 1,
            Parity::Even => len.is_multiple_of(2),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CycleOrder {
    /// Lexicographic order of canonical vertex sequences.
    #[default]
    Canonical,
    /// By decreasing length, canonical within a length.
    LongestFirst,
    /// By increasing length, canonical within a length.
    ShortestFirst,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleQuery {
    pub min_length: usize,
    /// Defaults to the graph order when `None`.
    pub max_length: Option<usize>,
    pub parity: Parity,
    /// Stop after this many cycles (truncation, not an error).
    pub limit: Option<usize>,
    pub order: CycleOrder,
    pub node_budget: u64,
}

impl Default for CycleQuery {
    fn default() -> CycleQuery {
        CycleQuery {
            min_length: 3,
            max_length: None,
            parity: Parity::Any,
            limit: None,
            order: CycleOrder::Canonical,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

impl CycleQuery {
    pub fn lengths(mut self, min: usize, max: usize) -> CycleQuery {
        self.min_length = min;
        self.max_length = Some(max);
        self
    }

    pub fn parity(mut self, parity: Parity) -> CycleQuery {
        self.parity = parity;
        self
    }

    pub fn order(mut self, order: CycleOrder) -> CycleQuery {
        self.order = order;
        self
    }

    pub fn limit(mut self, limit: usize) -> CycleQuery {
        self.limit = Some(limit);
        self
    }

    pub fn node_budget(mut self, nodes: u64) -> CycleQuery {
        self.node_budget = nodes;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleSearchError {
    #[error("invalid cycle query: minimum length {0} is below 3")]
    InvalidQuery(usize),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// Feeds every cycle matching `q` to `visit`, in the query's order, until
/// `visit` breaks or the result limit is reached.
pub fn for_each_cycle<F>(g: &Graph, q: &CycleQuery, mut visit: F) -> Result<(), CycleSearchError>
where
    F: FnMut(Cycle) -> ControlFlow<()>,
{
    if q.min_length < 3 {
        return Err(CycleSearchError::InvalidQuery(q.min_length));
    }
    let max = q.max_length.unwrap_or(g.n()).min(g.n());
    let min = q.min_length;
    if min > max {
        return Ok(());
    }
    let mut budget = Budget::new(q.node_budget);
    let mut remaining = q.limit.unwrap_or(usize::MAX);
    if remaining == 0 {
        return Ok(());
    }
    let mut emit = |c: Cycle| -> ControlFlow<()> {
        remaining -= 1;
        if visit(c).is_break() || remaining == 0 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    };
    let passes: Vec<(usize, usize)> = match q.order {
        CycleOrder::Canonical => vec![(min, max)],
        CycleOrder::LongestFirst => (min..=max).rev().map(|l| (l, l)).collect(),
        CycleOrder::ShortestFirst => (min..=max).map(|l| (l, l)).collect(),
    };
    for (lo, hi) in passes {
        if lo == hi && !q.parity.admits(lo) {
            continue;
        }
        let mut walker = Walker {
            g,
            lo,
            hi,
            parity: q.parity,
            budget: &mut budget,
            path: Vec::with_capacity(hi),
        };
        if walker.run(&mut emit)?.is_break() {
            break;
        }
    }
    Ok(())
}

/// Collects [`for_each_cycle`] into a vector.
pub fn enumerate_cycles(g: &Graph, q: &CycleQuery) -> Result<Vec<Cycle>, CycleSearchError> {
    let mut out = Vec::new();
    for_each_cycle(g, q, |c| {
        out.push(c);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

struct Walker<'a> {
    g: &'a Graph,
    lo: usize,
    hi: usize,
    parity: Parity,
    budget: &'a mut Budget,
    path: Vec<usize>,
}

impl Walker<'_> {
    fn run<F>(&mut self, emit: &mut F) -> Result<ControlFlow<()>, BudgetExceeded>
    where
        F: FnMut(Cycle) -> ControlFlow<()>,
    {
        for s in 0..self.g.n() {
            // a cycle with least vertex s has at most n - s vertices
            if self.g.n() - s < self.lo {
                break;
            }
            let above = self.g.vertices().difference(VertexSet::full(s + 1));
            self.path.clear();
            self.path.push(s);
            if self
                .extend(VertexSet::singleton(s), above, emit)?
                .is_break()
            {
                return Ok(ControlFlow::Break(()));
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    fn extend<F>(
        &mut self,
        on_path: VertexSet,
        allowed: VertexSet,
        emit: &mut F,
    ) -> Result<ControlFlow<()>, BudgetExceeded>
    where
        F: FnMut(Cycle) -> ControlFlow<()>,
    {
        self.budget.tick()?;
        let s = self.path[0];
        let last = *self.path.last().expect("non-empty path");
        let candidates = self
            .g
            .neighbors(last)
            .intersection(allowed)
            .difference(on_path);
        for v in candidates {
            let len = self.path.len() + 1;
            if len >= 3
                && len >= self.lo
                && self.path[1] < v
                && self.parity.admits(len)
                && self.g.has_edge(v, s)
            {
                self.path.push(v);
                let flow = emit(Cycle::canonical_unchecked(&self.path));
                self.path.pop();
                if flow.is_break() {
                    return Ok(ControlFlow::Break(()));
                }
            }
            if len < self.hi {
                self.path.push(v);
                let mut next = on_path;
                next.insert(v);
                let flow = self.extend(next, allowed, emit);
                self.path.pop();
                if flow?.is_break() {
                    return Ok(ControlFlow::Break(()));
                }
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeDomination {
    Dominating,
    /// Least edge with both endpoints off the cycle.
    Uncovered(Edge),
}

impl EdgeDomination {
    pub fn is_dominating(self) -> bool {
        self == EdgeDomination::Dominating
    }
}

/// Whether `V(g) - V(c)` induces no edge.
pub fn is_edge_dominating(g: &Graph, c: &Cycle) -> Result<EdgeDomination, CycleError> {
    Cycle::new(g, c.vertices())?;
    Ok(edge_domination_unchecked(g, c.vertex_set()))
}

fn edge_domination_unchecked(g: &Graph, on_cycle: VertexSet) -> EdgeDomination {
    let off = g.vertices().difference(on_cycle);
    for u in off {
        let above = g
            .neighbors(u)
            .intersection(off)
            .difference(VertexSet::full(u + 1));
        if let Some(v) = above.min() {
            return EdgeDomination::Uncovered(Edge::new(u, v));
        }
    }
    EdgeDomination::Dominating
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EdcPreference {
    #[default]
    LongestFirst,
    ShortestFirst,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdcResult {
    Found(Cycle),
    /// Every cycle was examined and none dominates the edges.
    Absent {
        /// Last rejected candidate and the edge it left uncovered.
        last_rejected: Option<(Cycle, Edge)>,
    },
}

impl EdcResult {
    pub fn cycle(&self) -> Option<&Cycle> {
        match self {
            EdcResult::Found(c) => Some(c),
            EdcResult::Absent { .. } => None,
        }
    }
}

pub fn find_edge_dominating_cycle(
    g: &Graph,
    prefer: EdcPreference,
) -> Result<EdcResult, BudgetExceeded> {
    find_edge_dominating_cycle_with_budget(g, prefer, DEFAULT_NODE_BUDGET)
}

/// First cycle in the preferred order whose complement is edgeless.
pub fn find_edge_dominating_cycle_with_budget(
    g: &Graph,
    prefer: EdcPreference,
    node_budget: u64,
) -> Result<EdcResult, BudgetExceeded> {
    let order = match prefer {
        EdcPreference::LongestFirst => CycleOrder::LongestFirst,
        EdcPreference::ShortestFirst => CycleOrder::ShortestFirst,
    };
    let q = CycleQuery::default().order(order).node_budget(node_budget);
    let mut found = None;
    let mut last_rejected = None;
    let outcome = for_each_cycle(g, &q, |c| {
        match edge_domination_unchecked(g, c.vertex_set()) {
            EdgeDomination::Dominating => {
                found = Some(c);
                ControlFlow::Break(())
            }
            EdgeDomination::Uncovered(e) => {
                last_rejected = Some((c, e));
                ControlFlow::Continue(())
            }
        }
    });
    match outcome {
        Ok(()) => {}
        Err(CycleSearchError::Budget(b)) => return Err(b),
        Err(CycleSearchError::InvalidQuery(_)) => unreachable!("default query is valid"),
    }
    Ok(match found {
        Some(c) => EdcResult::Found(c),
        None => EdcResult::Absent { last_rejected },
    })
}

/// A longest cycle, canonically least among those of maximum length.
pub fn longest_cycle(g: &Graph) -> Result<Option<Cycle>, BudgetExceeded> {
    let q = CycleQuery::default()
        .order(CycleOrder::LongestFirst)
        .limit(1);
    match enumerate_cycles(g, &q) {
        Ok(mut cs) => Ok(cs.pop()),
        Err(CycleSearchError::Budget(b)) => Err(b),
        Err(CycleSearchError::InvalidQuery(_)) => unreachable!("default query is valid"),
    }
}
