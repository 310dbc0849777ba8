use crate::graph::{subsets_of_size, Graph, VertexSet};

use super::Rational;

/// Exact toughness together with a separator attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToughnessCertificate {
    pub value: Rational,
    /// Empty when the value is infinite or the input was disconnected.
    pub separator: VertexSet,
    /// Components left after deleting `separator`; `None` when infinite.
    pub component_count: Option<usize>,
    /// Set when the input graph was disconnected (value 0, empty separator).
    pub degenerate: bool,
}

impl ToughnessCertificate {
    /// Re-derives the value from the separator: deleting it must leave
    /// `component_count` components and `|S| / p` must equal `value`.
    pub fn replays(&self, g: &Graph) -> bool {
        match (self.value, self.component_count) {
            (Rational::Infinite, None) => g.is_complete(),
            (Rational::Finite(_), Some(p)) => {
                let rest = g.vertices().difference(self.separator);
                g.component_count(rest) == p
                    && p >= 2
                    && self.value == Rational::new(self.separator.len() as i64, p as i64)
            }
            _ => false,
        }
    }
}

/// Chvátal toughness: the minimum of `|S| / c(G - S)` over vertex sets `S`
/// whose deletion leaves at least two components; `+inf` for complete
/// graphs.
///
/// Subsets are scanned by increasing size and, within a size, by increasing
/// bitmask, keeping only strict improvements. Removing `k` vertices leaves at
/// most `n - k` components, so once `k / (n - k)` reaches the best ratio no
/// larger separator can win and the scan stops.
pub fn toughness(g: &Graph) -> ToughnessCertificate {
    let n = g.n();
    if !g.is_connected() {
        return ToughnessCertificate {
            value: Rational::integer(0),
            separator: VertexSet::empty(),
            component_count: Some(g.connected_components().len()),
            degenerate: true,
        };
    }
    if g.is_complete() {
        return ToughnessCertificate {
            value: Rational::Infinite,
            separator: VertexSet::empty(),
            component_count: None,
            degenerate: false,
        };
    }

    let all = g.vertices();
    let mut best: Option<(Rational, VertexSet, usize)> = None;
    for k in 1..n.saturating_sub(1) {
        let floor = Rational::new(k as i64, (n - k) as i64);
        if best.as_ref().is_some_and(|(b, _, _)| floor >= *b) {
            break;
        }
        for s in subsets_of_size(n, k) {
            let p = g.component_count(all.difference(s));
            if p < 2 {
                continue;
            }
            let ratio = Rational::new(k as i64, p as i64);
            if best.as_ref().is_none_or(|(b, _, _)| ratio < *b) {
                best = Some((ratio, s, p));
            }
        }
    }
    let (value, separator, p) = best.expect("a connected non-complete graph has a separator");
    ToughnessCertificate {
        value,
        separator,
        component_count: Some(p),
        degenerate: false,
    }
}

/// Compares the exact toughness against `threshold`: `> threshold` when
/// `strict`, otherwise `>=`.
pub fn is_beta_tough(g: &Graph, threshold: Rational, strict: bool) -> bool {
    let t = toughness(g).value;
    if strict {
        t > threshold
    } else {
        t >= threshold
    }
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

    #[test]
    fn complete_graphs_are_infinitely_tough() {
        let t = toughness(&complete(4));
        assert_eq!(t.value, Rational::Infinite);
        assert!(t.separator.is_empty());
        assert!(t.replays(&complete(4)));
        assert_eq!(toughness(&complete(1)).value, Rational::Infinite);
    }

    #[test]
    fn star() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let t = toughness(&g);
        assert_eq!(t.value, Rational::new(1, 3));
        assert_eq!(t.separator, VertexSet::singleton(0));
        assert_eq!(t.component_count, Some(3));
        assert!(t.replays(&g));
    }

    #[test]
    fn six_cycle_ties_break_to_the_smallest_mask() {
        let t = toughness(&cycle(6));
        assert_eq!(t.value, Rational::integer(1));
        // {0,2} is the first 2-set that splits C6
        assert_eq!(t.separator.iter().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(t.component_count, Some(2));
    }

    #[test]
    fn disconnected_is_degenerate() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let t = toughness(&g);
        assert!(t.degenerate);
        assert_eq!(t.value, Rational::integer(0));
        assert_eq!(t.component_count, Some(2));
    }

    #[test]
    fn thresholds() {
        assert!(is_beta_tough(&complete(4), Rational::integer(1), true));
        assert!(!is_beta_tough(&cycle(6), Rational::integer(1), true));
        assert!(is_beta_tough(&cycle(6), Rational::integer(1), false));
    }
}
