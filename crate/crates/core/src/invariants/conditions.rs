//! Degree-sum conditions on independent triples and on families of
//! mutually remote edges.

use std::fmt;

use crate::graph::{Edge, Graph, GraphError, VertexSet};

use super::connectivity::vertex_connectivity;

/// `|N(u) ∪ N(v) - {u, v}|` for the edge `uv`.
pub fn edge_degree(g: &Graph, e: Edge) -> Result<usize, GraphError> {
    let (u, v) = e.endpoints();
    g.edge(u, v)?;
    Ok(g.neighbors(u)
        .union(g.neighbors(v))
        .difference(e.vertex_set())
        .len())
}

/// Two edges are remote when they share no endpoint and no edge joins them.
pub fn are_remote(g: &Graph, e1: Edge, e2: Edge) -> Result<bool, GraphError> {
    g.edge(e1.u(), e1.v())?;
    g.edge(e2.u(), e2.v())?;
    Ok(remote_unchecked(g, e1, e2))
}

fn remote_unchecked(g: &Graph, e1: Edge, e2: Edge) -> bool {
    let a = e1.vertex_set();
    let b = e2.vertex_set();
    a.intersection(b).is_empty()
        && g.neighbors(e1.u())
            .union(g.neighbors(e1.v()))
            .intersection(b)
            .is_empty()
}

/// Least degree sum over independent vertex triples, with the
/// lexicographically least triple attaining it. `None` stands for `+inf`
/// (independence number below 3).
pub fn delta3_with_witness(g: &Graph) -> Option<(usize, [usize; 3])> {
    let n = g.n();
    let mut best: Option<(usize, [usize; 3])> = None;
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) || g.has_edge(b, c) {
                    continue;
                }
                let sum = g.degree(a) + g.degree(b) + g.degree(c);
                if best.is_none_or(|(s, _)| sum < s) {
                    best = Some((sum, [a, b, c]));
                }
            }
        }
    }
    best
}

/// `delta_3`: `None` encodes `+inf`.
pub fn delta3(g: &Graph) -> Option<usize> {
    delta3_with_witness(g).map(|(s, _)| s)
}

/// All families of `size` mutually remote edges, each family listed in
/// increasing edge order and families in lexicographic order.
pub fn remote_edge_families(g: &Graph, size: usize) -> Vec<Vec<Edge>> {
    let edges = g.edges();
    let m = edges.len();
    let remote: Vec<Vec<bool>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| remote_unchecked(g, edges[i], edges[j]))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(size);
    fn grow(
        start: usize,
        size: usize,
        remote: &[Vec<bool>],
        edges: &[Edge],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<Edge>>,
    ) {
        if chosen.len() == size {
            out.push(chosen.iter().map(|&i| edges[i]).collect());
            return;
        }
        for i in start..edges.len() {
            if chosen.iter().all(|&j| remote[j][i]) {
                chosen.push(i);
                grow(i + 1, size, remote, edges, chosen, out);
                chosen.pop();
            }
        }
    }
    if size > 0 {
        grow(0, size, &remote, edges, &mut chosen, &mut out);
    }
    out
}

/// The three degree conditions, plus the literal three-edge variant of the
/// remote-edge condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// `delta_3(G) >= n + 2`.
    Delta3,
    /// Every `k + 1` mutually remote edges have degree sum `> k(n - k) / 2`.
    Veldman(usize),
    /// Every remote pair has degree sum `> n - 4`.
    Yoshimoto,
    /// Every 3 mutually remote edges have degree sum `> 3(n - 3) / 2`.
    Corollary2Literal,
}

impl Condition {
    /// Connectivity the associated existence result assumes.
    pub fn required_connectivity(self) -> usize {
        match self {
            Condition::Delta3 | Condition::Yoshimoto => 2,
            Condition::Veldman(k) => k,
            Condition::Corollary2Literal => 3,
        }
    }

    fn satisfied_by(self, n: usize, sum: usize) -> bool {
        let (n, sum) = (n as i64, sum as i64);
        match self {
            Condition::Delta3 => sum >= n + 2,
            Condition::Veldman(k) => {
                let k = k as i64;
                2 * sum > k * (n - k)
            }
            Condition::Yoshimoto => sum > n - 4,
            Condition::Corollary2Literal => 2 * sum > 3 * (n - 3),
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::Delta3 => f.write_str("delta3"),
            Condition::Veldman(k) => write!(f, "veldman({k})"),
            Condition::Yoshimoto => f.write_str("yoshimoto"),
            Condition::Corollary2Literal => f.write_str("corollary2-literal"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tuple {
    Vertices(Vec<usize>),
    Edges(Vec<Edge>),
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tuple::Vertices(vs) => {
                let parts: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                write!(f, "[{}]", parts.join(","))
            }
            Tuple::Edges(es) => {
                let parts: Vec<String> = es.iter().map(|e| e.to_string()).collect();
                write!(f, "[{}]", parts.join(","))
            }
        }
    }
}

/// The qualifying tuple with the least degree sum (lexicographically least
/// on ties). It violates the inequality iff the condition fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extremal {
    pub tuple: Tuple,
    pub sum: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub condition: Condition,
    pub n: usize,
    pub holds: bool,
    /// `None` when no qualifying tuple exists and the condition holds
    /// vacuously.
    pub extremal: Option<Extremal>,
    pub connectivity: usize,
}

impl ConditionReport {
    pub fn is_vacuous(&self) -> bool {
        self.extremal.is_none()
    }

    pub fn connectivity_met(&self) -> bool {
        self.connectivity >= self.condition.required_connectivity()
    }

    /// The extremal tuple still qualifies and its sum still decides `holds`.
    pub fn replays(&self, g: &Graph) -> bool {
        let Some(ext) = &self.extremal else {
            return self.holds;
        };
        let recomputed = match &ext.tuple {
            Tuple::Vertices(vs) => {
                let set: VertexSet = vs.iter().copied().collect();
                let independent = vs
                    .iter()
                    .all(|&v| g.neighbors(v).intersection(set).is_empty());
                independent.then(|| vs.iter().map(|&v| g.degree(v)).sum::<usize>())
            }
            Tuple::Edges(es) => {
                let mutually_remote = es
                    .iter()
                    .enumerate()
                    .all(|(i, &a)| es[i + 1..].iter().all(|&b| are_remote(g, a, b) == Ok(true)));
                if mutually_remote {
                    es.iter()
                        .map(|&e| edge_degree(g, e).ok())
                        .sum::<Option<usize>>()
                } else {
                    None
                }
            }
        };
        recomputed == Some(ext.sum) && self.condition.satisfied_by(g.n(), ext.sum) == self.holds
    }
}

/// Evaluates a condition exactly. The connectivity hypothesis is measured
/// and reported, never assumed.
pub fn check_condition(g: &Graph, condition: Condition) -> ConditionReport {
    let n = g.n();
    let extremal = match condition {
        Condition::Delta3 => delta3_with_witness(g).map(|(sum, t)| Extremal {
            tuple: Tuple::Vertices(t.to_vec()),
            sum,
        }),
        Condition::Veldman(k) => {
            assert!(k >= 2, "the remote-edge condition needs k >= 2");
            min_family(g, k + 1)
        }
        Condition::Yoshimoto => min_family(g, 2),
        Condition::Corollary2Literal => min_family(g, 3),
    };
    let holds = extremal
        .as_ref()
        .is_none_or(|e| condition.satisfied_by(n, e.sum));
    ConditionReport {
        condition,
        n,
        holds,
        extremal,
        connectivity: vertex_connectivity(g),
    }
}

fn min_family(g: &Graph, size: usize) -> Option<Extremal> {
    let mut best: Option<Extremal> = None;
    for family in remote_edge_families(g, size) {
        let sum = family
            .iter()
            .map(|&e| edge_degree(g, e).expect("family edges come from the graph"))
            .sum();
        if best.as_ref().is_none_or(|b| sum < b.sum) {
            best = Some(Extremal {
                tuple: Tuple::Edges(family),
                sum,
            });
        }
    }
    best
}
