use std::collections::HashMap;
use std::io::BufRead;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::io::{parse_graph6, FormatError};
use crate::graph::{Graph, VertexSet};

/// Largest order the built-in enumerator will produce.
pub const BUILTIN_MAX_N: usize = 8;

/// Largest order [`canonical_form`] accepts (the code must fit in a `u64`).
pub const CANONICAL_MAX_N: usize = 11;

/// Connected graphs up to isomorphism for `n = 1..=8`.
pub const CONNECTED_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("built-in corpus supports n <= {BUILTIN_MAX_N}, got {0}")]
    TooLarge(usize),
    #[error("line {line}: {source}")]
    Malformed { line: usize, source: FormatError },
    #[error("line {line}: graph is disconnected")]
    Disconnected { line: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Upper-triangle adjacency bits of `g` under `order` (position to vertex),
/// column-major with pair `(0,1)` as the most significant bit.
pub fn adjacency_code(g: &Graph, order: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            code = code << 1 | g.has_edge(order[i], order[j]) as u64;
        }
    }
    code
}

/// Stable colouring by iterated neighbour-colour refinement, starting from
/// degrees. Colours are ranks of signatures, so they are isomorphism
/// invariant.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).iter().map(|w| colors[w]).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let mut ranked = sigs.clone();
        ranked.sort();
        ranked.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| ranked.binary_search(s).unwrap())
            .collect();
        if ranked.len() == classes {
            return next;
        }
        classes = ranked.len();
        colors = next;
    }
}

/// Canonical relabelling of `g`: the largest [`adjacency_code`] over all
/// orderings that list colour classes in colour order. Returns the code and
/// the relabelled graph; isomorphic graphs give equal results.
///
/// Panics above [`CANONICAL_MAX_N`] vertices.
pub fn canonical_form(g: &Graph) -> (u64, Graph) {
    let n = g.n();
    assert!(
        n <= CANONICAL_MAX_N,
        "canonical form supports at most {CANONICAL_MAX_N} vertices"
    );
    let colors = refine(g);
    let mut cell_of_position: Vec<usize> = colors.clone();
    cell_of_position.sort_unstable();
    let mut best = Canon {
        g,
        colors: &colors,
        cell_of_position: &cell_of_position,
        total_bits: n * n.saturating_sub(1) / 2,
        order: Vec::with_capacity(n),
        best_code: None,
        best_order: Vec::new(),
    };
    best.search(0, 0);
    let code = best.best_code.unwrap_or(0);
    let order = best.best_order;
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    (code, g.relabel(&perm))
}

struct Canon<'a> {
    g: &'a Graph,
    colors: &'a [usize],
    cell_of_position: &'a [usize],
    total_bits: usize,
    order: Vec<usize>,
    best_code: Option<u64>,
    best_order: Vec<usize>,
}

impl Canon<'_> {
    fn search(&mut self, used: u64, prefix: u64) {
        let j = self.order.len();
        if j == self.g.n() {
            if self.best_code.is_none_or(|b| prefix > b) {
                self.best_code = Some(prefix);
                self.best_order = self.order.clone();
            }
            return;
        }
        let cell = self.cell_of_position[j];
        for v in 0..self.g.n() {
            if used >> v & 1 == 1 || self.colors[v] != cell {
                continue;
            }
            let mut code = prefix;
            for &u in &self.order {
                code = code << 1 | self.g.has_edge(u, v) as u64;
            }
            let bits = (j + 1) * j / 2;
            if let Some(b) = self.best_code {
                if code < b >> (self.total_bits - bits) {
                    continue;
                }
            }
            self.order.push(v);
            self.search(used | 1 << v, code);
            self.order.pop();
        }
    }
}

/// Connected graphs on exactly `n` vertices, one per isomorphism class, in
/// canonical labelling, sorted by canonical code.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>, CorpusError> {
    if n > BUILTIN_MAX_N {
        return Err(CorpusError::TooLarge(n));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut layer = vec![Graph::empty(1).expect("one vertex")];
    for k in 2..=n {
        layer = extend_layer(&layer, k);
    }
    Ok(layer)
}

// Every connected graph on k vertices has a non-cut vertex, so removing it
// leaves a connected graph on k - 1 vertices: adding a vertex with every
// non-empty neighbourhood to each smaller class reaches all classes.
fn extend_layer(prev: &[Graph], k: usize) -> Vec<Graph> {
    let found: Vec<(u64, Graph)> = prev
        .par_iter()
        .flat_map_iter(|base| {
            let rows: Vec<u64> = (0..k - 1).map(|v| base.neighbors(v).bits()).collect();
            (1u64..1 << (k - 1)).map(move |attach| {
                let mut grown = rows.clone();
                for v in VertexSet::from_bits(attach) {
                    grown[v] |= 1 << (k - 1);
                }
                grown.push(attach);
                canonical_form(&Graph::from_rows_unchecked(grown))
            })
        })
        .collect();
    let unique: HashMap<u64, Graph> = found.into_iter().collect();
    let mut out: Vec<(u64, Graph)> = unique.into_iter().collect();
    out.sort_by_key(|(code, _)| *code);
    out.into_iter().map(|(_, g)| g).collect()
}

/// All connected graphs with `1..=max_n` vertices, smallest order first.
pub fn enumerate_corpus(max_n: usize) -> Result<Vec<Graph>, CorpusError> {
    if max_n > BUILTIN_MAX_N {
        return Err(CorpusError::TooLarge(max_n));
    }
    let mut all = Vec::new();
    let mut layer = Vec::new();
    for k in 1..=max_n {
        layer = if k == 1 {
            vec![Graph::empty(1).expect("one vertex")]
        } else {
            extend_layer(&layer, k)
        };
        all.extend(layer.iter().cloned());
    }
    Ok(all)
}

/// What to do with unusable lines in a graph6 stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OnBadLine {
    Skip,
    Fail,
}

/// Graphs read from a graph6 stream, plus the lines that were skipped.
#[derive(Debug, Default)]
pub struct StreamCorpus {
    pub graphs: Vec<Graph>,
    pub skipped: Vec<CorpusError>,
}

/// Reads one graph per line, ignoring blank lines. Graphs above `max_n`
/// vertices are dropped silently; malformed or disconnected lines are
/// skipped or fatal according to `policy`. Line numbers are 1-based.
pub fn read_graph6_stream<R: BufRead>(
    reader: R,
    max_n: usize,
    policy: OnBadLine,
) -> Result<StreamCorpus, CorpusError> {
    let mut out = StreamCorpus::default();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        let problem = match parse_graph6(text) {
            Ok(g) if g.n() > max_n => continue,
            Ok(g) if g.is_connected() => {
                out.graphs.push(g);
                continue;
            }
            Ok(_) => CorpusError::Disconnected { line: i + 1 },
            Err(source) => CorpusError::Malformed {
                line: i + 1,
                source,
            },
        };
        match policy {
            OnBadLine::Skip => out.skipped.push(problem),
            OnBadLine::Fail => return Err(problem),
        }
    }
    Ok(out)
}
