use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};
use crate::invariants::is_k_chordal;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("unknown graph name '{0}'")]
    UnknownName(String),
    #[error("invalid parameters for '{name}': {reason}")]
    BadParameters { name: String, reason: String },
    #[error("chord ({0},{1}) duplicates a cycle edge")]
    ChordIsCycleEdge(usize, usize),
    #[error("chord ({0},{1}) listed twice")]
    DuplicateChord(usize, usize),
    #[error("no connected 5-chordal sample after {0} attempts")]
    RejectionLimit(usize),
    #[error("cannot parse generator family '{0}'")]
    BadFamily(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn bad(name: &str, reason: impl Into<String>) -> GeneratorError {
    GeneratorError::BadParameters {
        name: name.to_string(),
        reason: reason.into(),
    }
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Complete multipartite graph; part `k` holds the next `sizes[k]` labels.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph, GraphError> {
    let n: usize = sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (k, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(k, s));
    }
    let part = &part;
    Graph::from_edges(
        n,
        (0..n).flat_map(|a| {
            (a + 1..n)
                .filter(move |&b| part[a] != part[b])
                .map(move |b| (a, b))
        }),
    )
}

/// Outer 5-cycle `0..5`, spokes `i - i+5`, inner pentagram `5+i - 5+(i+2)%5`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("valid labeling")
}

/// Hub 0 joined to the rim cycle `1..=rim`.
pub fn wheel(rim: usize) -> Result<Graph, GraphError> {
    let spokes = (1..=rim).map(|v| (0, v));
    let ring = (0..rim).map(|i| (1 + i, 1 + (i + 1) % rim));
    Graph::from_edges(rim + 1, spokes.chain(ring))
}

/// `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

/// Named fixtures: `petersen`, `K_n`, `C_n`, `P_n`, `K_m,n` (any number of
/// parts, braces optional), `wheel_n` (hub plus an `n`-cycle) and `star_n`
/// (`K_{1,n}`).
pub fn named_graph(name: &str) -> Result<Graph, GeneratorError> {
    let cleaned: String = name
        .chars()
        .filter(|c| !matches!(c, '{' | '}' | ' '))
        .collect();
    if cleaned.eq_ignore_ascii_case("petersen") {
        return Ok(petersen());
    }
    let (family, params) = cleaned
        .split_once('_')
        .ok_or_else(|| GeneratorError::UnknownName(name.to_string()))?;
    let numbers: Vec<usize> = params
        .split(',')
        .map(|p| p.parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad(name, "parameters must be non-negative integers"))?;
    let single = || match numbers.as_slice() {
        [k] => Ok(*k),
        _ => Err(bad(name, "expected a single size parameter")),
    };
    let g = match family {
        "K" if numbers.len() >= 2 => {
            if numbers.contains(&0) {
                return Err(bad(name, "parts must be non-empty"));
            }
            complete_multipartite(&numbers)?
        }
        "K" => complete(single()?)?,
        "C" => {
            let k = single()?;
            if k < 3 {
                return Err(bad(name, "a cycle needs at least 3 vertices"));
            }
            cycle(k)?
        }
        "P" => path(single()?)?,
        "wheel" | "W" => {
            let k = single()?;
            if k < 3 {
                return Err(bad(name, "a wheel rim needs at least 3 vertices"));
            }
            wheel(k)?
        }
        "star" => star(single()?)?,
        _ => return Err(GeneratorError::UnknownName(name.to_string())),
    };
    Ok(g)
}

/// Random connected chordal graph on `n` vertices with roughly
/// `edge_budget` edges (at least `n - 1`).
///
/// Vertices arrive one at a time; each attaches to a clique grown around a
/// random earlier vertex, so the arrival order reversed is a perfect
/// elimination ordering. Labels are shuffled at the end.
pub fn gen_random_chordal(
    n: usize,
    edge_budget: usize,
    seed: u64,
) -> Result<Graph, GeneratorError> {
    if n == 0 {
        return Err(bad("chordal", "n must be at least 1"));
    }
    if n > crate::graph::MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n).into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = vec![0u64; n];
    let mut m = 0usize;
    for i in 1..n {
        let anchor = rng.gen_range(0..i);
        let mut pool: Vec<usize> = VertexSet::from_bits(rows[anchor]).iter().collect();
        pool.shuffle(&mut rng);
        // reserve one edge for each vertex still to come
        let spare = edge_budget.saturating_sub(m + (n - 1 - i));
        let cap = (1 + pool.len()).min(spare.max(1));
        let target = rng.gen_range(1..=cap);
        let mut clique = vec![anchor];
        for c in pool {
            if clique.len() >= target {
                break;
            }
            if clique.iter().all(|&x| rows[c] >> x & 1 == 1) {
                clique.push(c);
            }
        }
        for &x in &clique {
            rows[i] |= 1u64 << x;
            rows[x] |= 1u64 << i;
        }
        m += clique.len();
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    Ok(Graph::from_rows_unchecked(rows).relabel(&perm))
}

/// The cycle `0..n` plus the listed chords.
pub fn gen_cycle_plus_chords(n: usize, chords: &[(usize, usize)]) -> Result<Graph, GeneratorError> {
    if n < 3 {
        return Err(bad("cycle", "a cycle needs at least 3 vertices"));
    }
    let mut seen = Vec::new();
    for &(a, b) in chords {
        if a >= n || b >= n {
            return Err(GraphError::VertexOutOfRange {
                vertex: a.max(b),
                n,
            }
            .into());
        }
        if a == b {
            return Err(GraphError::SelfLoop(a).into());
        }
        if (a + 1) % n == b || (b + 1) % n == a {
            return Err(GeneratorError::ChordIsCycleEdge(a, b));
        }
        let key = (a.min(b), a.max(b));
        if seen.contains(&key) {
            return Err(GeneratorError::DuplicateChord(a, b));
        }
        seen.push(key);
    }
    Ok(Graph::from_edges(
        n,
        (0..n)
            .map(|i| (i, (i + 1) % n))
            .chain(chords.iter().copied()),
    )?)
}

/// Maximum rejection-sampling attempts for [`gen_random_filtered_5chordal`].
pub const FILTER_ATTEMPTS: usize = 10_000;

/// `G(n, p)` samples, rejected until connected and 5-chordal.
pub fn gen_random_filtered_5chordal(n: usize, p: f64, seed: u64) -> Result<Graph, GeneratorError> {
    if n == 0 || n > crate::invariants::DEFAULT_HOLE_SEARCH_LIMIT {
        return Err(bad("filtered5", "n must be in 1..=16"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(bad("filtered5", "p must lie in [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..FILTER_ATTEMPTS {
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(p) {
                    pairs.push((a, b));
                }
            }
        }
        let g = Graph::from_edges(n, pairs)?;
        if g.is_connected() && is_k_chordal(&g, 5).is_ok_and(|c| c.holds()) {
            return Ok(g);
        }
    }
    Err(GeneratorError::RejectionLimit(FILTER_ATTEMPTS))
}

/// Generator family, as accepted on the command line:
///
/// * `named:<name>`
/// * `chordal:n=<n>,edges=<m>`
/// * `cycle:n=<n>,chords=<a>-<b>;<c>-<d>`
/// * `filtered5:n=<n>,p=<density>`
#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    Named(String),
    RandomChordal {
        n: usize,
        edge_budget: usize,
    },
    CyclePlusChords {
        n: usize,
        chords: Vec<(usize, usize)>,
    },
    RandomFiltered5Chordal {
        n: usize,
        density: f64,
    },
}

impl GeneratorSpec {
    /// Same spec and seed always give the same graph.
    pub fn generate(&self, seed: u64) -> Result<Graph, GeneratorError> {
        match self {
            GeneratorSpec::Named(name) => named_graph(name),
            GeneratorSpec::RandomChordal { n, edge_budget } => {
                gen_random_chordal(*n, *edge_budget, seed)
            }
            GeneratorSpec::CyclePlusChords { n, chords } => gen_cycle_plus_chords(*n, chords),
            GeneratorSpec::RandomFiltered5Chordal { n, density } => {
                gen_random_filtered_5chordal(*n, *density, seed)
            }
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = GeneratorError;

    fn from_str(s: &str) -> Result<GeneratorSpec, GeneratorError> {
        let fail = || GeneratorError::BadFamily(s.to_string());
        let (family, rest) = s.split_once(':').ok_or_else(fail)?;
        if family == "named" {
            return Ok(GeneratorSpec::Named(rest.to_string()));
        }
        let mut fields = std::collections::HashMap::new();
        for kv in rest.split(',').filter(|kv| !kv.is_empty()) {
            let (k, v) = kv.split_once('=').ok_or_else(fail)?;
            fields.insert(k.trim(), v.trim());
        }
        let int = |key: &str| -> Result<usize, GeneratorError> {
            fields
                .get(key)
                .and_then(|v| v.parse().ok())
                .ok_or_else(fail)
        };
        match family {
            "chordal" => Ok(GeneratorSpec::RandomChordal {
                n: int("n")?,
                edge_budget: int("edges")?,
            }),
            "cycle" => {
                let chords = match fields.get("chords") {
                    None => Vec::new(),
                    Some(list) => list
                        .split(';')
                        .filter(|c| !c.is_empty())
                        .map(|c| {
                            let (a, b) = c.split_once('-')?;
                            Some((a.parse().ok()?, b.parse().ok()?))
                        })
                        .collect::<Option<Vec<_>>>()
                        .ok_or_else(fail)?,
                };
                Ok(GeneratorSpec::CyclePlusChords {
                    n: int("n")?,
                    chords,
                })
            }
            "filtered5" => Ok(GeneratorSpec::RandomFiltered5Chordal {
                n: int("n")?,
                density: fields
                    .get("p")
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(fail)?,
            }),
            _ => Err(fail()),
        }
    }
}
