use std::collections::BTreeMap;
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::Serialize;

use crate::cycles::{for_each_cycle, CycleQuery, Parity};
use crate::graph::io::write_graph6;
use crate::graph::Graph;
use crate::invariants::{is_k_chordal_with_limit, Rational};
use crate::parity_triangle::{
    brute_force_parity_triangle, find_parity_triangle, verify_parity_triangle,
};
use crate::prism_ham::{
    check_corollary_with, verify_theorem_with_options, Corollary, CorollaryOutcome, EdcOutcome,
    PipelineOptions, TheoremReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepCheck {
    Theorem,
    Lemma2,
    Corollaries,
    All,
}

impl SweepCheck {
    fn theorem(self) -> bool {
        self != SweepCheck::Lemma2
    }

    fn lemma2(self) -> bool {
        matches!(self, SweepCheck::Lemma2 | SweepCheck::All)
    }

    fn corollaries(self) -> bool {
        matches!(self, SweepCheck::Corollaries | SweepCheck::All)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    pub check: SweepCheck,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    pub pipeline: PipelineOptions,
}

impl SweepOptions {
    pub fn new(check: SweepCheck) -> SweepOptions {
        SweepOptions {
            check,
            jobs: None,
            pipeline: PipelineOptions::default(),
        }
    }
}

/// A graph whose hypotheses hold but whose prism was refuted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub index: usize,
    pub graph6: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TheoremTally {
    pub total: usize,
    pub hypothesis_met: usize,
    pub conclusion_met: usize,
    pub hypothesis_and_conclusion: usize,
    /// Any check or search that ran out of budget or size limits.
    pub inconclusive: usize,
    pub hypothesis_inconclusive: usize,
    pub fallback_activations: usize,
    pub counterexamples: Vec<Counterexample>,
}

/// One odd cycle on which the split procedure and the brute force disagree,
/// or on which no parity triangle exists at all.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma2Failure {
    pub graph6: String,
    pub cycle: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Lemma2Tally {
    /// 5-chordal graphs examined.
    pub graphs: usize,
    /// Odd cycles examined.
    pub instances: usize,
    pub witnesses: usize,
    pub fallback_activations: usize,
    pub agreements: usize,
    /// Graphs whose hole search or cycle enumeration did not finish.
    pub inconclusive: usize,
    pub failures: Vec<Lemma2Failure>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CorollaryTally {
    pub condition_holds: usize,
    /// Condition holds with at least one tuple to sum over.
    pub non_vacuous: usize,
    pub applicable: usize,
    pub applicable_non_vacuous: usize,
    pub verified: usize,
    pub inconclusive: usize,
    pub counterexamples: Vec<Counterexample>,
}

/// Lowest toughness seen among 5-chordal graphs without an edge-dominating
/// cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ToughnessRecord {
    pub toughness: String,
    pub graph6: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub corpus: String,
    pub graphs: usize,
    pub theorem: Option<TheoremTally>,
    pub lemma2: Option<Lemma2Tally>,
    pub corollaries: Option<BTreeMap<&'static str, CorollaryTally>>,
    pub min_toughness_without_edc: Option<ToughnessRecord>,
}

impl SweepReport {
    /// Something was falsified: a theorem, lemma or corollary
    /// counterexample, or a split/brute-force disagreement. The literal
    /// reading of the second corollary is reported but not counted.
    pub fn has_violation(&self) -> bool {
        self.theorem
            .as_ref()
            .is_some_and(|t| !t.counterexamples.is_empty())
            || self.lemma2.as_ref().is_some_and(|l| !l.failures.is_empty())
            || self.corollaries.as_ref().is_some_and(|c| {
                c.iter().any(|(name, t)| {
                    *name != Corollary::TwoLiteral.name() && !t.counterexamples.is_empty()
                })
            })
    }

    pub fn has_inconclusive(&self) -> bool {
        self.theorem.as_ref().is_some_and(|t| t.inconclusive > 0)
            || self.lemma2.as_ref().is_some_and(|l| l.inconclusive > 0)
            || self
                .corollaries
                .as_ref()
                .is_some_and(|c| c.values().any(|t| t.inconclusive > 0))
    }

    /// The counts partition the way they should.
    pub fn is_consistent(&self) -> bool {
        let theorem_ok = self.theorem.as_ref().is_none_or(|t| {
            t.total == self.graphs
                && t.hypothesis_and_conclusion + t.counterexamples.len() <= t.hypothesis_met
                && t.hypothesis_met <= t.total
                && t.conclusion_met <= t.total
        });
        let lemma_ok = self.lemma2.as_ref().is_none_or(|l| {
            l.witnesses <= l.instances
                && l.agreements <= l.instances
                && l.fallback_activations <= l.witnesses
        });
        let corollary_ok = self.corollaries.as_ref().is_none_or(|c| {
            c.values().all(|t| {
                t.verified + t.counterexamples.len() + t.inconclusive >= t.applicable
                    && t.applicable_non_vacuous <= t.applicable
                    && t.applicable <= t.condition_holds
                    && t.non_vacuous <= t.condition_holds
            })
        });
        theorem_ok && lemma_ok && corollary_ok
    }
}

struct GraphOutcome {
    theorem: Option<TheoremReport>,
    lemma2: Option<Lemma2Tally>,
    corollaries: Vec<(Corollary, crate::prism_ham::CorollaryReport)>,
}

/// Runs the selected checks on every graph of `corpus`, in parallel, and
/// aggregates in corpus order.
pub fn run_sweep(corpus: &[Graph], description: &str, opts: SweepOptions) -> SweepReport {
    let work = || -> Vec<GraphOutcome> { corpus.par_iter().map(|g| examine(g, opts)).collect() };
    let outcomes = match opts.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(work),
        None => work(),
    };

    let mut report = SweepReport {
        corpus: description.to_string(),
        graphs: corpus.len(),
        ..SweepReport::default()
    };
    if opts.check.theorem() {
        report.theorem = Some(TheoremTally::default());
    }
    if opts.check.lemma2() {
        report.lemma2 = Some(Lemma2Tally::default());
    }
    if opts.check.corollaries() {
        report.corollaries = Some(
            Corollary::ALL
                .iter()
                .map(|c| (c.name(), CorollaryTally::default()))
                .collect(),
        );
    }
    let mut best: Option<(Rational, String)> = None;
    for (index, out) in outcomes.into_iter().enumerate() {
        if let (Some(t), Some(r)) = (report.theorem.as_mut(), out.theorem.as_ref()) {
            tally_theorem(t, index, r);
        }
        if let Some(r) = out.theorem.as_ref() {
            if r.chordal5 == Some(true) && r.edc == EdcOutcome::Absent {
                let value = r.toughness.value;
                if best.as_ref().is_none_or(|(b, _)| value < *b) {
                    best = Some((value, r.graph6.clone()));
                }
            }
        }
        if let (Some(total), Some(l)) = (report.lemma2.as_mut(), out.lemma2) {
            total.graphs += l.graphs;
            total.instances += l.instances;
            total.witnesses += l.witnesses;
            total.fallback_activations += l.fallback_activations;
            total.agreements += l.agreements;
            total.inconclusive += l.inconclusive;
            total.failures.extend(l.failures);
        }
        if let Some(tallies) = report.corollaries.as_mut() {
            for (which, r) in out.corollaries {
                let t = tallies
                    .get_mut(which.name())
                    .expect("every corollary tallied");
                let graph6 = || {
                    out.theorem
                        .as_ref()
                        .map(|r| r.graph6.clone())
                        .unwrap_or_default()
                };
                if r.condition.holds {
                    t.condition_holds += 1;
                    if !r.condition.is_vacuous() {
                        t.non_vacuous += 1;
                    }
                }
                if r.applicable() {
                    t.applicable += 1;
                    if !r.condition.is_vacuous() {
                        t.applicable_non_vacuous += 1;
                    }
                }
                match r.outcome {
                    CorollaryOutcome::NotApplicable => {}
                    CorollaryOutcome::Verified => t.verified += 1,
                    CorollaryOutcome::Inconclusive => t.inconclusive += 1,
                    CorollaryOutcome::Counterexample(_) => t.counterexamples.push(Counterexample {
                        index,
                        graph6: graph6(),
                    }),
                }
            }
        }
    }
    report.min_toughness_without_edc = best.map(|(v, graph6)| ToughnessRecord {
        toughness: v.to_string(),
        graph6,
    });
    report
}

fn tally_theorem(t: &mut TheoremTally, index: usize, r: &TheoremReport) {
    t.total += 1;
    if r.hypothesis_met {
        t.hypothesis_met += 1;
    }
    if r.conclusion_met == Some(true) {
        t.conclusion_met += 1;
    }
    if r.hypothesis_met && r.conclusion_met == Some(true) {
        t.hypothesis_and_conclusion += 1;
    }
    if r.is_counterexample() {
        t.counterexamples.push(Counterexample {
            index,
            graph6: r.graph6.clone(),
        });
    }
    if r.inconclusive() {
        t.inconclusive += 1;
        if r.hypothesis_met {
            t.hypothesis_inconclusive += 1;
        }
    }
    if matches!(&r.triangle, Some(Ok(p)) if p.fallback) {
        t.fallback_activations += 1;
    }
}

fn examine(g: &Graph, opts: SweepOptions) -> GraphOutcome {
    let needs_theorem = opts.check.theorem();
    let theorem = needs_theorem.then(|| verify_theorem_with_options(g, opts.pipeline));
    let lemma2 = opts.check.lemma2().then(|| lemma2_check(g, opts.pipeline));
    let corollaries = match (&theorem, opts.check.corollaries()) {
        (Some(r), true) => Corollary::ALL
            .iter()
            .map(|&c| (c, check_corollary_with(g, c, r)))
            .collect(),
        _ => Vec::new(),
    };
    GraphOutcome {
        theorem,
        lemma2,
        corollaries,
    }
}

/// Runs the split procedure on every odd cycle of `g` when `g` is 5-chordal,
/// checking each result against the brute force.
pub fn lemma2_check(g: &Graph, opts: PipelineOptions) -> Lemma2Tally {
    let mut tally = Lemma2Tally::default();
    match is_k_chordal_with_limit(g, 5, opts.hole_search_limit) {
        Err(_) => {
            tally.inconclusive = 1;
            return tally;
        }
        Ok(c) if !c.holds() => return tally,
        Ok(_) => {}
    }
    tally.graphs = 1;
    let graph6 = write_graph6(g);
    let query = CycleQuery::default()
        .parity(Parity::Odd)
        .node_budget(opts.node_budget);
    let finished = for_each_cycle(g, &query, |c| {
        tally.instances += 1;
        let split = find_parity_triangle(g, &c);
        let brute = brute_force_parity_triangle(g, &c);
        let mut fail = |reason: String| {
            tally.failures.push(Lemma2Failure {
                graph6: graph6.clone(),
                cycle: c.to_string(),
                reason,
            })
        };
        match (&split, &brute) {
            (Ok(p), Some(_)) => {
                tally.agreements += 1;
                if verify_parity_triangle(g, &c, &p.witness) {
                    tally.witnesses += 1;
                    if p.fallback {
                        tally.fallback_activations += 1;
                    }
                } else {
                    fail(format!("witness {} fails verification", p.witness));
                }
            }
            (Err(_), None) => {
                tally.agreements += 1;
                fail("no parity triangle exists".into());
            }
            (Ok(_), None) => fail("split found a witness the brute force missed".into()),
            (Err(e), Some(w)) => fail(format!("split failed ({e}) but {w} exists")),
        }
        ControlFlow::Continue(())
    });
    if finished.is_err() {
        tally.inconclusive = 1;
    }
    tally
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::generators::{complete, cycle, petersen};

    #[test]
    fn fixture_sweep() {
        let corpus = vec![
            complete(4).unwrap(),
            cycle(6).unwrap(),
            cycle(5).unwrap(),
            petersen(),
        ];
        let r = run_sweep(&corpus, "fixtures", SweepOptions::new(SweepCheck::All));
        let t = r.theorem.as_ref().unwrap();
        assert_eq!(t.total, 4);
        assert!(t.counterexamples.is_empty());
        assert_eq!(t.inconclusive, 0);
        assert_eq!(t.hypothesis_met, 1);
        assert!(r.is_consistent());
        assert!(!r.has_violation());
        let l = r.lemma2.as_ref().unwrap();
        // K4 is the only 5-chordal fixture; its odd cycles are its 4 triangles
        assert_eq!((l.graphs, l.instances, l.witnesses), (1, 4, 4));
    }

    #[test]
    fn empty_sweep() {
        let r = run_sweep(&[], "empty", SweepOptions::new(SweepCheck::All));
        assert_eq!(r.graphs, 0);
        assert!(r.is_consistent() && !r.has_violation() && !r.has_inconclusive());
        assert_eq!(r.min_toughness_without_edc, None);
    }

    #[test]
    fn jobs_do_not_change_the_report() {
        let corpus: Vec<Graph> = (3..8)
            .map(|n| cycle(n).unwrap())
            .chain([complete(5).unwrap()])
            .collect();
        let mut opts = SweepOptions::new(SweepCheck::All);
        let a = run_sweep(&corpus, "c", opts);
        opts.jobs = Some(1);
        assert_eq!(a, run_sweep(&corpus, "c", opts));
    }
}
