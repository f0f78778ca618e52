//! Reconstruction of integer compositions from their sets of k-deletions.
//!
//! A composition of `n` is determined by its k-deletions whenever
//! `n >= 3k+1`. This crate implements the constructive reconstruction, a
//! brute-force oracle to check it against, and the correspondence between
//! compositions and layered permutations.
//!
//! ```
//! use compdeck::{comp, reconstruct, ReconstructionResult};
//!
//! let w = comp("5,1,2,2");
//! let deck = w.k_deletions(3).unwrap();
//! assert_eq!(reconstruct(&deck, 3).unwrap(), ReconstructionResult::Unique(w));
//! ```

pub mod cli;
pub mod composition;
pub mod deck;
pub mod error;
pub mod layered;
pub mod oracle;
pub mod reconstruct;

pub use composition::{comp, Composition};
pub use deck::Deck;
pub use error::{Error, ParseError, Result};
pub use layered::{composition_to_layered, layered_to_composition, pattern_contains, Permutation};
pub use oracle::{
    ambiguity_census, brute_force_preimages, enumerate_compositions, sweep, tightness_witness,
    SweepReport,
};
pub use reconstruct::{
    classify_ones, reconstruct, reconstruct_exactly_k, reconstruct_few_ones, reconstruct_many_ones,
    reconstruct_with_trace, Derivation, GapVector, OnesRegime, ReconstructionResult, Trace,
};
