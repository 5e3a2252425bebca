//! Rix-factorization of permutations, the hopping actions built on it, the
//! bijection `Φ` that sends rixed points to fixed points, and tools for
//! checking orbit averages by exhaustive enumeration.
//!
//! Letters are `1..=n`; positions are 0-based throughout the API.

pub mod bench;
pub mod error;
pub mod homomesy;
pub mod hop;
pub mod perm;
pub mod phi;
pub mod rix;

pub use error::{Error, Result};
pub use hop::{act, hop, hop_set, orbit, ActionKind, Orbit};
pub use perm::{
    all_permutations, classify, foata, foata_inverse, parse_cycles, parse_permutation, stats,
    CycleForm, Letter, LetterClass, Letters, Permutation, StatRecord, Word,
};
pub use phi::{phi, phi_cycles, phi_inverse, PhiCycleDecomposition};
pub use rix::{
    maximal_descending_ridge, rix, rix_factorize_iterative, rix_factorize_recursive, rix_set,
    Ridge, RixFactorization,
};
