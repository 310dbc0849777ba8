use std::fmt;

use crate::graph::{Graph, GraphError};

/// A prism vertex: a base vertex on layer 0 or 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrismVertex {
    pub base: usize,
    pub layer: u8,
}

impl fmt::Display for PrismVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.base, self.layer)
    }
}

/// `G x K2` with the fixed numbering `(v, layer) -> v + layer * n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prism {
    graph: Graph,
    base_order: usize,
}

impl Prism {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }

    pub fn index(&self, v: PrismVertex) -> usize {
        assert!(v.base < self.base_order && v.layer < 2);
        v.base + usize::from(v.layer) * self.base_order
    }

    pub fn vertex(&self, index: usize) -> PrismVertex {
        assert!(index < 2 * self.base_order);
        PrismVertex {
            base: index % self.base_order,
            layer: (index / self.base_order) as u8,
        }
    }
}

/// Two copies of `g` joined by the rungs `(v,0)-(v,1)`.
pub fn prism(g: &Graph) -> Result<Prism, GraphError> {
    let n = g.n();
    let layers = g
        .edges()
        .iter()
        .flat_map(|e| [(e.u(), e.v()), (e.u() + n, e.v() + n)]);
    let rungs = (0..n).map(|v| (v, v + n));
    let graph = Graph::from_edges(2 * n, layers.chain(rungs))?;
    Ok(Prism {
        graph,
        base_order: n,
    })
}
