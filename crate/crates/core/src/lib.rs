//! Exact analysis of small graphs around Hamiltonian prisms: toughness,
//! k-chordality, edge-dominating cycles, parity triangles on odd cycles,
//! and certified Hamiltonian cycles in `G x K2`.

pub mod cycles;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod parity_triangle;
pub mod prism_ham;
pub mod search;

pub use graph::{Cycle, Edge, Graph, VertexSet};
