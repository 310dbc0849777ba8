//! Library results against the brute-force oracles in `common`, over the
//! built-in corpus.

mod common;

use std::collections::HashSet;

use rayon::prelude::*;

use hamprism::cycles::{
    enumerate_cycles, find_edge_dominating_cycle, is_edge_dominating, longest_cycle, CycleQuery,
    EdcPreference, EdcResult,
};
use hamprism::graph::io::write_graph6;
use hamprism::harness::enumerate_corpus;
use hamprism::invariants::{
    check_condition, delta3, is_k_chordal, toughness, vertex_connectivity, Chordality, Condition,
};
use hamprism::Graph;

fn corpus(max_n: usize) -> Vec<Graph> {
    enumerate_corpus(max_n).unwrap()
}

#[test]
fn toughness_matches_unpruned_search() {
    let mut graphs = corpus(7);
    // disconnected and larger sparse inputs too
    graphs.extend((0..200).map(|s| common::random_graph(2 + (s % 9) as usize, 35, s)));
    for g in &graphs {
        let cert = toughness(g);
        assert_eq!(cert.value, common::toughness(g), "{}", write_graph6(g));
        assert!(cert.replays(g), "{}", write_graph6(g));
    }
}

#[test]
fn cycle_enumeration_is_complete() {
    corpus(8).par_iter().for_each(|g| {
        let cycles = enumerate_cycles(g, &CycleQuery::default()).unwrap();
        assert_eq!(
            cycles.len() as u64,
            common::cycle_count(g),
            "{}",
            write_graph6(g)
        );
        let distinct: HashSet<_> = cycles.iter().collect();
        assert_eq!(distinct.len(), cycles.len());
        assert!(cycles.iter().all(|c| c.is_cycle_of(g)));
        assert!(cycles.windows(2).all(|w| w[0] < w[1]), "canonical order");
    });
}

#[test]
fn edge_dominating_search_is_sound_and_complete() {
    corpus(8).par_iter().for_each(|g| {
        let expected = common::has_edge_dominating_cycle(g);
        for prefer in [EdcPreference::LongestFirst, EdcPreference::ShortestFirst] {
            match find_edge_dominating_cycle(g, prefer).unwrap() {
                EdcResult::Found(c) => {
                    assert!(expected, "{}", write_graph6(g));
                    assert!(is_edge_dominating(g, &c).unwrap().is_dominating());
                    let adj = common::matrix(g);
                    let outside: Vec<usize> =
                        (0..g.n()).filter(|v| !c.vertices().contains(v)).collect();
                    assert!(outside.iter().all(|&a| outside.iter().all(|&b| !adj[a][b])));
                }
                EdcResult::Absent { .. } => assert!(!expected, "{}", write_graph6(g)),
            }
        }
    });
}

#[test]
fn longest_cycle_has_circumference_length() {
    for g in corpus(7) {
        let found = longest_cycle(&g).unwrap().map_or(0, |c| c.len());
        assert_eq!(found, common::circumference(&g), "{}", write_graph6(&g));
    }
}

#[test]
fn chordality_matches_induced_subgraph_search() {
    for g in corpus(7) {
        for k in 3..=7 {
            let verdict = is_k_chordal(&g, k).unwrap();
            assert_eq!(
                verdict.holds(),
                !common::has_long_hole(&g, k),
                "{} k={k}",
                write_graph6(&g)
            );
            if let Chordality::Hole(w) = verdict {
                assert!(w.replays(&g, k));
            }
        }
    }
}

// A 2-connected graph with delta_3 >= n + 2 has only edge-dominating longest
// cycles. Checked as a property of the implementation, not proved here.
#[test]
fn longest_cycles_dominate_under_the_degree_condition() {
    let mut instances = 0;
    for g in corpus(8) {
        let n = g.n();
        if n < 3 || vertex_connectivity(&g) < 2 || delta3(&g).is_some_and(|d| d < n + 2) {
            continue;
        }
        let len = common::circumference(&g);
        let longest = enumerate_cycles(&g, &CycleQuery::default().lengths(len, len)).unwrap();
        for c in &longest {
            assert!(
                is_edge_dominating(&g, c).unwrap().is_dominating(),
                "{} {c}",
                write_graph6(&g)
            );
        }
        instances += 1;
    }
    assert!(instances > 1000);
}

#[test]
fn condition_extremals_replay() {
    for g in corpus(7) {
        for c in [
            Condition::Delta3,
            Condition::Yoshimoto,
            Condition::Corollary2Literal,
            Condition::Veldman(3),
        ] {
            let r = check_condition(&g, c);
            assert!(r.replays(&g), "{} {c}", write_graph6(&g));
        }
    }
}

#[test]
fn delta3_is_the_least_independent_triple_sum() {
    for g in corpus(7) {
        let adj = common::matrix(&g);
        let n = g.n();
        let mut best = None::<usize>;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let distinct = a < b && b < c;
                    if distinct && !adj[a][b] && !adj[a][c] && !adj[b][c] {
                        let s = g.degree(a) + g.degree(b) + g.degree(c);
                        best = Some(best.map_or(s, |x| x.min(s)));
                    }
                }
            }
        }
        assert_eq!(delta3(&g), best, "{}", write_graph6(&g));
    }
}
