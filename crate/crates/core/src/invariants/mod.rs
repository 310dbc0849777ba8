//! Exact structural invariants: toughness, k-chordality, vertex
//! connectivity and the degree-sum conditions that guarantee
//! edge-dominating cycles.

pub mod chordality;
pub mod conditions;
pub mod connectivity;
mod rational;
pub mod toughness;

pub use chordality::{
    is_k_chordal, is_k_chordal_with_limit, Chordality, ChordalityError, HoleWitness,
    DEFAULT_HOLE_SEARCH_LIMIT,
};
pub use conditions::{
    are_remote, check_condition, delta3, edge_degree, Condition, ConditionReport, Extremal, Tuple,
};
pub use connectivity::{minimum_vertex_cut, vertex_connectivity};
pub use rational::{ParseRationalError, Rational};
pub use toughness::{is_beta_tough, toughness, ToughnessCertificate};
