mod common;

use proptest::prelude::*;

use hamprism::cycles::{
    enumerate_cycles, find_edge_dominating_cycle, is_edge_dominating, CycleQuery, EdcPreference,
    Parity,
};
use hamprism::graph::io::{parse_dimacs, parse_graph6, write_dimacs, write_graph6};
use hamprism::harness::corpus::canonical_form;
use hamprism::harness::{gen_random_chordal, GeneratorSpec};
use hamprism::invariants::{is_k_chordal, toughness, Rational};
use hamprism::parity_triangle::{
    brute_force_parity_triangle, find_parity_triangle, verify_parity_triangle,
};
use hamprism::prism_ham::{find_hamiltonian_cycle, hamiltonicity_oracle, prism};
use hamprism::{Cycle, Graph};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            Graph::from_edges(n, all.zip(bits).filter(|(_, on)| *on).map(|(p, _)| p)).unwrap()
        })
    })
}

/// A cycle `0..n` with random extra chords, plus that cycle.
fn chorded_odd_cycle() -> impl Strategy<Value = (Graph, Cycle)> {
    (2usize..=5).prop_flat_map(|half| {
        let n = 2 * half + 1;
        proptest::collection::vec((0..n, 0..n), 0..8).prop_map(move |chords| {
            let ring = (0..n).map(|i| (i, (i + 1) % n));
            let extra = chords.into_iter().filter(|(a, b)| a != b);
            let g = Graph::from_edges(n, ring.chain(extra)).unwrap();
            let c = Cycle::new(&g, &(0..n).collect::<Vec<_>>()).unwrap();
            (g, c)
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trips(g in graph(16)) {
        let text = write_graph6(&g);
        prop_assert_eq!(&text, &common::graph6(&g));
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn dimacs_round_trips(g in graph(12)) {
        prop_assert_eq!(parse_dimacs(&write_dimacs(&g)).unwrap(), g);
    }

    #[test]
    fn prism_identities(g in graph(20)) {
        let p = prism(&g).unwrap();
        prop_assert_eq!(p.graph().n(), 2 * g.n());
        prop_assert_eq!(p.graph().m(), 2 * g.m() + g.n());
        for idx in 0..p.graph().n() {
            let v = p.vertex(idx);
            prop_assert_eq!(p.index(v), idx);
            prop_assert_eq!(p.graph().degree(idx), g.degree(v.base) + 1);
        }
    }

    #[test]
    fn toughness_is_exact_and_replays(g in graph(9)) {
        let cert = toughness(&g);
        prop_assert!(cert.replays(&g));
        prop_assert_eq!(cert.value, common::toughness(&g));
        if g.n() >= 2 && g.is_connected() && !g.is_complete() {
            prop_assert!(cert.value <= Rational::new(g.n() as i64 - 2, 2));
        }
    }

    #[test]
    fn chordality_is_monotone_in_k(g in graph(9)) {
        let levels: Vec<bool> = (3..=10).map(|k| is_k_chordal(&g, k).unwrap().holds()).collect();
        prop_assert!(levels.windows(2).all(|w| !w[0] || w[1]), "{:?}", levels);
    }

    #[test]
    fn generated_chordal_graphs(n in 1usize..=10, extra in 0usize..30, seed in any::<u64>()) {
        let g = gen_random_chordal(n, n - 1 + extra, seed).unwrap();
        prop_assert!(g.is_connected());
        for k in 3..=5 {
            prop_assert!(is_k_chordal(&g, k).unwrap().holds());
        }
        prop_assert_eq!(g, gen_random_chordal(n, n - 1 + extra, seed).unwrap());
    }

    #[test]
    fn generator_specs_are_deterministic(n in 3usize..=9, seed in any::<u64>()) {
        let spec: GeneratorSpec = format!("chordal:n={n},edges={}", 2 * n).parse().unwrap();
        prop_assert_eq!(spec.generate(seed).unwrap(), spec.generate(seed).unwrap());
    }

    #[test]
    fn parity_triangles_are_sound((g, c) in chorded_odd_cycle()) {
        let brute = brute_force_parity_triangle(&g, &c);
        match find_parity_triangle(&g, &c) {
            Ok(pt) => {
                prop_assert!(verify_parity_triangle(&g, &c, &pt.witness));
                prop_assert!(brute.is_some());
                if !pt.fallback {
                    prop_assert_eq!(pt.trace.replay(c.len()), pt.witness.positions(c.len()));
                }
            }
            Err(_) => prop_assert!(brute.is_none() || !is_k_chordal(&g, 5).unwrap().holds()),
        }
        if is_k_chordal(&g, 5).unwrap().holds() {
            prop_assert!(find_parity_triangle(&g, &c).is_ok());
        }
    }

    #[test]
    fn odd_cycles_are_odd(g in graph(8)) {
        for c in enumerate_cycles(&g, &CycleQuery::default().parity(Parity::Odd)).unwrap() {
            prop_assert!(c.is_odd() && c.is_cycle_of(&g));
        }
    }

    #[test]
    fn edge_dominating_cycles_replay(g in graph(9)) {
        if let Some(c) = find_edge_dominating_cycle(&g, EdcPreference::LongestFirst).unwrap().cycle() {
            prop_assert!(is_edge_dominating(&g, c).unwrap().is_dominating());
        }
    }

    #[test]
    fn hamiltonian_search_matches_the_oracle(g in graph(12)) {
        let verdict = find_hamiltonian_cycle(&g);
        prop_assert_eq!(verdict.decided(), Some(hamiltonicity_oracle(&g).unwrap()));
        if let Some(cert) = verdict.certificate() {
            prop_assert!(cert.replays(&g));
        }
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph(8), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
    }
}
