use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::cycles::{find_edge_dominating_cycle_with_budget, EdcPreference, EdcResult};
use crate::graph::io::write_graph6;
use crate::graph::Graph;
use crate::invariants::{is_k_chordal_with_limit, toughness, Rational};
use crate::prism_ham::PipelineOptions;

/// A toughness value with the graph attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extreme {
    pub toughness: String,
    pub graph6: String,
    #[serde(skip)]
    pub value: Rational,
}

/// Per-order summary over connected 5-chordal graphs without an
/// edge-dominating cycle. Any toughness bound that forces such a cycle must
/// exceed `max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExplorationRow {
    pub n: usize,
    pub five_chordal: usize,
    pub without_edc: usize,
    pub max: Option<Extreme>,
    pub min: Option<Extreme>,
    /// Graphs whose chordality or cycle search did not finish.
    pub inconclusive: usize,
}

enum Verdict {
    NotFiveChordal,
    HasEdc,
    NoEdc(Rational, String),
    Inconclusive,
}

fn classify(g: &Graph, opts: PipelineOptions) -> Verdict {
    match is_k_chordal_with_limit(g, 5, opts.hole_search_limit) {
        Err(_) => return Verdict::Inconclusive,
        Ok(c) if !c.holds() => return Verdict::NotFiveChordal,
        Ok(_) => {}
    }
    match find_edge_dominating_cycle_with_budget(g, EdcPreference::LongestFirst, opts.node_budget) {
        Err(_) => Verdict::Inconclusive,
        Ok(EdcResult::Found(_)) => Verdict::HasEdc,
        Ok(EdcResult::Absent { .. }) => Verdict::NoEdc(toughness(g).value, write_graph6(g)),
    }
}

/// One row per order `n >= 3` present in `corpus` (connected graphs only),
/// in increasing `n`. `K1` and `K2` are left out: they are complete, so
/// infinitely tough, yet have no cycle at all. Ties keep the first graph in
/// corpus order.
pub fn explore_edc_toughness(corpus: &[Graph], opts: PipelineOptions) -> Vec<ExplorationRow> {
    let graphs: Vec<&Graph> = corpus.iter().filter(|g| g.n() >= 3).collect();
    let verdicts: Vec<Verdict> = graphs.par_iter().map(|g| classify(g, opts)).collect();
    let mut rows: BTreeMap<usize, ExplorationRow> = BTreeMap::new();
    for (g, v) in graphs.into_iter().zip(verdicts) {
        let row = rows.entry(g.n()).or_insert_with(|| ExplorationRow {
            n: g.n(),
            five_chordal: 0,
            without_edc: 0,
            max: None,
            min: None,
            inconclusive: 0,
        });
        match v {
            Verdict::NotFiveChordal => {}
            Verdict::Inconclusive => row.inconclusive += 1,
            Verdict::HasEdc => row.five_chordal += 1,
            Verdict::NoEdc(value, graph6) => {
                row.five_chordal += 1;
                row.without_edc += 1;
                let entry = Extreme {
                    toughness: value.to_string(),
                    graph6,
                    value,
                };
                if row.max.as_ref().is_none_or(|m| value > m.value) {
                    row.max = Some(entry.clone());
                }
                if row.min.as_ref().is_none_or(|m| value < m.value) {
                    row.min = Some(entry);
                }
            }
        }
    }
    rows.into_values().collect()
}
