use serde::Serialize;

use crate::cycles::{find_edge_dominating_cycle_with_budget, EdcPreference, EdcResult};
use crate::graph::{io::write_graph6, Cycle, Graph};
use crate::invariants::{
    check_condition, is_k_chordal_with_limit, toughness, Chordality, Condition, ConditionReport,
    Rational, ToughnessCertificate, DEFAULT_HOLE_SEARCH_LIMIT,
};
use crate::parity_triangle::{find_parity_triangle, ParityTriangle, ParityTriangleError};
use crate::search::DEFAULT_NODE_BUDGET;

use super::hamiltonian::{is_prism_hamiltonian_with_budget, PrismHamiltonicity};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineOptions {
    pub node_budget: u64,
    pub hole_search_limit: usize,
}

impl Default for PipelineOptions {
    fn default() -> PipelineOptions {
        PipelineOptions {
            node_budget: DEFAULT_NODE_BUDGET,
            hole_search_limit: DEFAULT_HOLE_SEARCH_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdcOutcome {
    Found(Cycle),
    Absent,
    Unknown,
}

impl EdcOutcome {
    pub fn cycle(&self) -> Option<&Cycle> {
        match self {
            EdcOutcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

/// Which case of the prism construction an edge-dominating cycle falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma1Case {
    EvenCycle,
    OddCycleWithTriangle,
    OddCycleWithoutTriangle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub graph6: String,
    pub toughness: ToughnessCertificate,
    /// Toughness strictly above 1.
    pub tough: bool,
    /// `None` when the hole search was skipped for size.
    pub chordal5: Option<bool>,
    pub edc: EdcOutcome,
    /// Present when the edge-dominating cycle is odd.
    pub triangle: Option<Result<ParityTriangle, ParityTriangleError>>,
    pub prism: PrismHamiltonicity,
    pub hypothesis_met: bool,
    /// `None` when the prism search ran out of budget.
    pub conclusion_met: Option<bool>,
}

impl TheoremReport {
    /// Some hypothesis check or the prism search did not finish.
    pub fn inconclusive(&self) -> bool {
        self.chordal5.is_none()
            || (self.tough && self.chordal5 == Some(true) && self.edc == EdcOutcome::Unknown)
            || self.conclusion_met.is_none()
    }

    /// Hypotheses hold and the prism was exhaustively shown non-Hamiltonian.
    pub fn is_counterexample(&self) -> bool {
        self.hypothesis_met && self.conclusion_met == Some(false)
    }

    pub fn lemma1_case(&self) -> Option<Lemma1Case> {
        let c = self.edc.cycle()?;
        Some(if !c.is_odd() {
            Lemma1Case::EvenCycle
        } else if matches!(self.triangle, Some(Ok(_))) {
            Lemma1Case::OddCycleWithTriangle
        } else {
            Lemma1Case::OddCycleWithoutTriangle
        })
    }

    pub fn record(&self) -> TheoremRecord {
        let edc = self.edc.cycle();
        TheoremRecord {
            graph6: self.graph6.clone(),
            n: self.prism.prism.base_order(),
            toughness: self.toughness.value.to_string(),
            chordal5: self.chordal5,
            edc: match &self.edc {
                EdcOutcome::Found(c) => Some(c.to_string()),
                EdcOutcome::Absent => None,
                EdcOutcome::Unknown => Some("unknown".into()),
            },
            edc_parity: edc.map(|c| if c.is_odd() { "odd" } else { "even" }),
            triangle: match (&self.triangle, edc) {
                (Some(Ok(t)), Some(c)) => Some(t.witness.describe(c)),
                (Some(Err(e)), _) => Some(format!("error: {e}")),
                _ => None,
            },
            triangle_fallback: self
                .triangle
                .as_ref()
                .and_then(|t| t.as_ref().ok())
                .map(|t| t.fallback),
            prism_ham: match self.conclusion_met {
                Some(true) => "certified",
                Some(false) => "refuted",
                None => "unknown",
            },
            prism_cycle: self.prism.certificate_vertices().map(|vs| {
                vs.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            }),
            hypothesis: self.hypothesis_met,
            conclusion: self.conclusion_met,
        }
    }
}

/// One line-delimited JSON record per graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremRecord {
    pub graph6: String,
    pub n: usize,
    pub toughness: String,
    pub chordal5: Option<bool>,
    pub edc: Option<String>,
    pub edc_parity: Option<&'static str>,
    pub triangle: Option<String>,
    pub triangle_fallback: Option<bool>,
    pub prism_ham: &'static str,
    pub prism_cycle: Option<String>,
    pub hypothesis: bool,
    pub conclusion: Option<bool>,
}

pub fn verify_theorem(g: &Graph) -> TheoremReport {
    verify_theorem_with_options(g, PipelineOptions::default())
}

/// Evaluates toughness > 1, 5-chordality and an edge-dominating cycle
/// (longest first), finds a parity triangle when that cycle is odd, and
/// always searches the prism for a Hamiltonian cycle.
pub fn verify_theorem_with_options(g: &Graph, opts: PipelineOptions) -> TheoremReport {
    let tough_cert = toughness(g);
    let tough = tough_cert.value > Rational::integer(1);
    let chordal5 = is_k_chordal_with_limit(g, 5, opts.hole_search_limit)
        .ok()
        .map(|c| matches!(c, Chordality::KChordal));
    let edc = match find_edge_dominating_cycle_with_budget(
        g,
        EdcPreference::LongestFirst,
        opts.node_budget,
    ) {
        Ok(EdcResult::Found(c)) => EdcOutcome::Found(c),
        Ok(EdcResult::Absent { .. }) => EdcOutcome::Absent,
        Err(_) => EdcOutcome::Unknown,
    };
    let triangle = edc
        .cycle()
        .filter(|c| c.is_odd())
        .map(|c| find_parity_triangle(g, c));
    let prism = is_prism_hamiltonian_with_budget(g, opts.node_budget);
    let hypothesis_met = tough && chordal5 == Some(true) && edc.cycle().is_some();
    let conclusion_met = prism.verdict.decided();
    TheoremReport {
        graph6: write_graph6(g),
        toughness: tough_cert,
        tough,
        chordal5,
        edc,
        triangle,
        prism,
        hypothesis_met,
        conclusion_met,
    }
}

/// The three corollaries, with the second under both of its readings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Corollary {
    One,
    /// Four mutually remote edges, threshold `3(n - 3) / 2`.
    TwoVeldman,
    /// Three mutually remote edges, threshold `3(n - 3) / 2`.
    TwoLiteral,
    Three,
}

impl Corollary {
    pub const ALL: [Corollary; 4] = [
        Corollary::One,
        Corollary::TwoVeldman,
        Corollary::TwoLiteral,
        Corollary::Three,
    ];

    pub fn condition(self) -> Condition {
        match self {
            Corollary::One => Condition::Delta3,
            Corollary::TwoVeldman => Condition::Veldman(3),
            Corollary::TwoLiteral => Condition::Corollary2Literal,
            Corollary::Three => Condition::Yoshimoto,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Corollary::One => "corollary1",
            Corollary::TwoVeldman => "corollary2-veldman",
            Corollary::TwoLiteral => "corollary2-literal",
            Corollary::Three => "corollary3",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorollaryOutcome {
    /// Fewer than 3 vertices, or the condition, toughness or 5-chordality
    /// fails.
    NotApplicable,
    /// Edge-dominating cycle found and prism certified.
    Verified,
    Counterexample(String),
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryReport {
    pub corollary: Corollary,
    pub condition: ConditionReport,
    pub tough: bool,
    pub chordal5: Option<bool>,
    pub edc: EdcOutcome,
    pub conclusion_met: Option<bool>,
    pub outcome: CorollaryOutcome,
}

impl CorollaryReport {
    /// Below three vertices there is no cycle to find, so the corollaries
    /// say nothing.
    pub fn applicable(&self) -> bool {
        self.condition.n >= 3 && self.condition.holds && self.tough && self.chordal5 == Some(true)
    }
}

/// Evaluates a corollary's condition; when it and the toughness and
/// 5-chordality hypotheses hold, an edge-dominating cycle and a prism
/// certificate must both be found.
pub fn check_corollary(g: &Graph, which: Corollary) -> CorollaryReport {
    check_corollary_with(g, which, &verify_theorem(g))
}

/// Same as [`check_corollary`], reusing an existing theorem report for `g`.
pub fn check_corollary_with(
    g: &Graph,
    which: Corollary,
    theorem: &TheoremReport,
) -> CorollaryReport {
    let condition = check_condition(g, which.condition());
    let mut report = CorollaryReport {
        corollary: which,
        condition,
        tough: theorem.tough,
        chordal5: theorem.chordal5,
        edc: theorem.edc.clone(),
        conclusion_met: theorem.conclusion_met,
        outcome: CorollaryOutcome::NotApplicable,
    };
    if report.chordal5.is_none() {
        report.outcome = CorollaryOutcome::Inconclusive;
        return report;
    }
    if !report.applicable() {
        return report;
    }
    report.outcome = match (&report.edc, report.conclusion_met) {
        (EdcOutcome::Unknown, _) | (_, None) => CorollaryOutcome::Inconclusive,
        (EdcOutcome::Absent, _) => {
            CorollaryOutcome::Counterexample("no edge-dominating cycle exists".into())
        }
        (EdcOutcome::Found(_), Some(false)) => {
            CorollaryOutcome::Counterexample("prism is not Hamiltonian".into())
        }
        (EdcOutcome::Found(_), Some(true)) => CorollaryOutcome::Verified,
    };
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
    }

    fn octahedron() -> Graph {
        let pairs = (0..6).flat_map(|a| (a + 1..6).map(move |b| (a, b)));
        Graph::from_edges(6, pairs.filter(|&(a, b)| b != a + 3)).unwrap()
    }

    #[test]
    fn k4_meets_both_sides() {
        let r = verify_theorem(&complete(4));
        assert_eq!(r.toughness.value, Rational::Infinite);
        assert_eq!(r.chordal5, Some(true));
        assert!(r.hypothesis_met);
        assert_eq!(r.conclusion_met, Some(true));
        assert_eq!(r.lemma1_case(), Some(Lemma1Case::EvenCycle));
        let rec = r.record();
        assert_eq!(rec.toughness, "inf");
        assert_eq!(rec.edc_parity, Some("even"));
        assert_eq!(rec.prism_ham, "certified");
    }

    #[test]
    fn k3_uses_the_triangle_case() {
        let r = verify_theorem(&complete(3));
        assert!(r.hypothesis_met);
        assert_eq!(r.lemma1_case(), Some(Lemma1Case::OddCycleWithTriangle));
        assert_eq!(
            r.record().triangle.as_deref(),
            Some("apex=0 edge=(1,2) q=1")
        );
        assert_eq!(r.conclusion_met, Some(true));
    }

    #[test]
    fn cycles_miss_the_hypothesis() {
        let r = verify_theorem(&cycle(6));
        assert_eq!(r.toughness.value, Rational::integer(1));
        assert!(!r.tough);
        assert!(!r.hypothesis_met);
        assert_eq!(r.conclusion_met, Some(true));

        let r = verify_theorem(&cycle(5));
        assert_eq!(r.chordal5, Some(false));
        assert!(!r.hypothesis_met);
        assert!(matches!(
            r.triangle,
            Some(Err(ParityTriangleError::ChordlessSubcycle(_)))
        ));
        let line = serde_json::to_string(&r.record()).unwrap();
        assert!(line.contains("\"graph6\":\"Dhc\""));
        assert!(line.contains("\"hypothesis\":false"));
    }

    #[test]
    fn corollaries_on_dense_fixtures() {
        let r = check_corollary(&octahedron(), Corollary::One);
        assert!(r.condition.holds && r.condition.is_vacuous());
        assert_eq!(r.outcome, CorollaryOutcome::Verified);

        let r = check_corollary(&complete(5), Corollary::One);
        assert_eq!(r.outcome, CorollaryOutcome::Verified);

        let k2 = complete(2);
        assert_eq!(
            check_corollary(&k2, Corollary::One).outcome,
            CorollaryOutcome::NotApplicable
        );

        let r = check_corollary(&cycle(8), Corollary::Three);
        assert!(!r.condition.holds);
        assert_eq!(r.condition.extremal.as_ref().unwrap().sum, 4);
        assert_eq!(r.outcome, CorollaryOutcome::NotApplicable);
    }
}
