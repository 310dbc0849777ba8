//! Prisms `G x K2`, Hamiltonian cycle search, and the end-to-end pipeline
//! that checks "tough, 5-chordal, with an edge-dominating cycle" against a
//! certified Hamiltonian cycle of the prism.

mod hamiltonian;
mod prism;
mod theorem;

pub use hamiltonian::{
    find_hamiltonian_cycle, find_hamiltonian_cycle_with_budget, hamiltonicity_oracle,
    is_prism_hamiltonian, is_prism_hamiltonian_with_budget, HamiltonVerdict,
    HamiltonianCertificate, OracleError, PrismHamiltonicity, ORACLE_MAX_VERTICES,
};
pub use prism::{prism, Prism, PrismVertex};
pub use theorem::{
    check_corollary, check_corollary_with, verify_theorem, verify_theorem_with_options, Corollary,
    CorollaryOutcome, CorollaryReport, EdcOutcome, Lemma1Case, PipelineOptions, TheoremRecord,
    TheoremReport,
};
