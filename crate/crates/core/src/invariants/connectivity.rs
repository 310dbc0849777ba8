use crate::graph::{subsets_of_size, Graph, VertexSet};

/// A smallest vertex set whose deletion disconnects `g`, least bitmask
/// first. `None` for complete graphs and graphs with fewer than two vertices.
pub fn minimum_vertex_cut(g: &Graph) -> Option<VertexSet> {
    let n = g.n();
    if n < 2 || g.is_complete() {
        return None;
    }
    let all = g.vertices();
    (0..n - 1)
        .find_map(|k| subsets_of_size(n, k).find(|&s| g.component_count(all.difference(s)) >= 2))
}

/// Vertex connectivity by exhaustive cut search; `n - 1` for complete
/// graphs and 0 for disconnected ones.
pub fn vertex_connectivity(g: &Graph) -> usize {
    match minimum_vertex_cut(g) {
        Some(cut) => cut.len(),
        None => g.n().saturating_sub(1),
    }
}
