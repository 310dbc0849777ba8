//! Brute-force oracles written against a plain adjacency matrix. They share
//! no code with the library beyond reading `has_edge`, and favour obvious
//! correctness over speed.

#![allow(dead_code)]

use hamprism::invariants::Rational;
use hamprism::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n())
        .map(|a| (0..g.n()).map(|b| g.has_edge(a, b)).collect())
        .collect()
}

/// Components of the subgraph induced on `alive` (a bitmask), by repeated
/// flood fill.
pub fn components(adj: &[Vec<bool>], alive: u64) -> usize {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if alive >> s & 1 == 0 || seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for w in 0..n {
                if adj[v][w] && alive >> w & 1 == 1 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Unpruned toughness: the minimum of `|S| / c(G - S)` over every subset `S`
/// leaving at least two components. Complete graphs are infinitely tough.
pub fn toughness(g: &Graph) -> Rational {
    let adj = matrix(g);
    let n = g.n();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = Rational::Infinite;
    for s in 0..=full {
        let c = components(&adj, full & !s);
        if c >= 2 {
            let r = Rational::new(s.count_ones() as i64, c as i64);
            if r < best {
                best = r;
            }
        }
    }
    best
}

/// `counts[mask]` = number of distinct cycles whose vertex set is `mask`,
/// from a path-counting table per least vertex.
pub fn cycle_counts_by_vertex_set(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let adj = matrix(g);
    let mut counts = vec![0u64; 1 << n];
    for s in 0..n {
        // paths[mask][v]: simple paths s -> v visiting exactly mask, all
        // other vertices above s
        let mut paths = vec![vec![0u64; n]; 1 << n];
        paths[1 << s][s] = 1;
        for mask in 0usize..1 << n {
            if mask & (1 << s) == 0 || mask & ((1 << s) - 1) != 0 {
                continue;
            }
            for v in 0..n {
                let here = paths[mask][v];
                if here == 0 {
                    continue;
                }
                for w in s + 1..n {
                    if adj[v][w] && mask >> w & 1 == 0 {
                        paths[mask | 1 << w][w] += here;
                    }
                }
            }
        }
        for (mask, row) in paths.iter().enumerate() {
            if (mask as u64).count_ones() < 3 {
                continue;
            }
            let closing: u64 = (0..n).filter(|&v| adj[v][s]).map(|v| row[v]).sum();
            // each cycle is traced in both directions
            counts[mask] += closing / 2;
        }
    }
    counts
}

pub fn cycle_count(g: &Graph) -> u64 {
    cycle_counts_by_vertex_set(g).iter().sum()
}

/// Some cycle's vertex set leaves an edgeless remainder.
pub fn has_edge_dominating_cycle(g: &Graph) -> bool {
    let adj = matrix(g);
    let n = g.n();
    cycle_counts_by_vertex_set(g)
        .iter()
        .enumerate()
        .any(|(mask, &c)| {
            c > 0
                && (0..n)
                    .all(|a| (0..n).all(|b| !adj[a][b] || mask >> a & 1 == 1 || mask >> b & 1 == 1))
        })
}

/// Length of a longest cycle, 0 when acyclic.
pub fn circumference(g: &Graph) -> usize {
    cycle_counts_by_vertex_set(g)
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(mask, _)| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// A hole of length at least `max(k, 4)`: an induced subgraph that is
/// connected and 2-regular.
pub fn has_long_hole(g: &Graph, k: usize) -> bool {
    let adj = matrix(g);
    let n = g.n();
    let min = k.max(4);
    (0u64..1 << n).any(|mask| {
        (mask.count_ones() as usize) >= min
            && (0..n)
                .filter(|&v| mask >> v & 1 == 1)
                .all(|v| (0..n).filter(|&w| mask >> w & 1 == 1 && adj[v][w]).count() == 2)
            && components(&adj, mask) == 1
    })
}

/// graph6 straight from the format description: bit string, pad, chunk.
pub fn graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j) as u8);
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(0);
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([
            (n >> 12) as u8 + 63,
            (n >> 6 & 63) as u8 + 63,
            (n & 63) as u8 + 63,
        ]);
    }
    for chunk in bits.chunks(6) {
        out.push(chunk.iter().fold(0, |acc, &b| acc << 1 | b) + 63);
    }
    String::from_utf8(out).unwrap()
}

/// Upper-triangle code maximised over all `n!` orderings.
pub fn max_code_all_orderings(g: &Graph) -> u64 {
    fn go(g: &Graph, order: &mut Vec<usize>, used: &mut Vec<bool>, best: &mut u64) {
        let n = g.n();
        if order.len() == n {
            let mut code = 0u64;
            for j in 1..n {
                for i in 0..j {
                    code = code << 1 | g.has_edge(order[i], order[j]) as u64;
                }
            }
            *best = (*best).max(code);
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                order.push(v);
                go(g, order, used, best);
                order.pop();
                used[v] = false;
            }
        }
    }
    let mut best = 0;
    go(g, &mut Vec::new(), &mut vec![false; g.n()], &mut best);
    best
}

/// Every labelled graph on `n` vertices, indexed by its edge bitmask.
pub fn all_labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    (0u64..1 << pairs.len()).map(move |bits| {
        Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &p)| p),
        )
        .unwrap()
    })
}

/// Deterministic `G(n, p)` sample with `p = percent / 100`.
pub fn random_graph(n: usize, percent: u32, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|_| rng.gen_ratio(percent, 100))
        .collect();
    Graph::from_edges(n, pairs).unwrap()
}
