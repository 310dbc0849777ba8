//! Generators, the connected-graph corpus, sweeps over it, and the
//! exploration table for 5-chordal graphs without edge-dominating cycles.

pub mod corpus;
pub mod explore;
pub mod generators;
pub mod sweep;

pub use corpus::{
    canonical_form, connected_graphs, enumerate_corpus, read_graph6_stream, CorpusError, OnBadLine,
    StreamCorpus,
};
pub use explore::{explore_edc_toughness, ExplorationRow, Extreme};
pub use generators::{
    gen_cycle_plus_chords, gen_random_chordal, gen_random_filtered_5chordal, named_graph,
    GeneratorError, GeneratorSpec,
};
pub use sweep::{lemma2_check, run_sweep, SweepCheck, SweepOptions, SweepReport};
