//! Pipe dreams and the polynomials they compute.
//!
//! This crate implements the combinatorics of pipe dreams (rc-graphs) for the
//! symmetric group: reading words and Demazure (0-Hecke) products, Schubert
//! and Grothendieck polynomials by divided-difference induction and by
//! pipe-dream enumeration, chute moves, the mitosis operators together with
//! the transfer/internal/barren partition, and intron mutations.
//!
//! The module layout follows the objects themselves:
//!
//! - [`perm`] — permutations of `S_∞` with finite support, words, Demazure products
//! - [`polyring`] — exact sparse integer polynomials and the `∂_i` / `π_i` operators
//! - [`dreams`] — pipe dreams, enumeration of `P(w)` and `RP(w)`, chute moves
//! - [`mitosis`] — `start_i`, candidate columns, mitosis and its primed variant
//! - [`introns`] — two-row column typing, intron mutation, the involution `tau_i`
//! - [`verify`] — an exhaustive desk-scale conformance harness over all of the above

pub mod dreams;
pub mod introns;
pub mod mitosis;
pub mod perm;
pub mod polyring;
pub mod verify;

pub use dreams::{Atlas, ChuteDirection, ChuteKind, ChuteRect, PipeDream};
pub use introns::{ColumnType, IntronRange, StripPart};
pub use mitosis::{DreamClass, MitosisPartition};
pub use perm::{Permutation, Word};
pub use polyring::{Monomial, Polynomial};
pub use verify::{Report, TheoremId};

/// Errors shared by every module of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("cannot parse permutation from {input:?}: {reason}")]
    InvalidPermutation { input: String, reason: String },

    #[error("permutation {w} does not fit in S_{n}")]
    OutsideSymmetricGroup { w: String, n: u32 },

    #[error("cell ({row},{col}) lies outside the {n}x{n} grid")]
    CellOutOfGrid { row: u32, col: u32, n: u32 },

    #[error("grid bounds differ: {0} vs {1}")]
    GridBoundMismatch(u32, u32),

    #[error("grid bound {n} exceeds the enumeration ceiling {ceiling}")]
    CeilingExceeded { n: u32, ceiling: u32 },

    #[error("chute rectangle is not applicable: {0}")]
    ChuteNotApplicable(String),

    #[error("column {col} is not a mitosis candidate in row {row}")]
    NotACandidate { row: u32, col: u32 },

    #[error("{i} is not a left descent of {w}")]
    NotADescent { w: String, i: u32 },

    #[error("dream does not belong to P({expected}): its Demazure product is {actual}")]
    WrongPermutation { expected: String, actual: String },

    #[error("dream is not barren for (w = {w}, i = {i})")]
    NotBarren { w: String, i: u32 },

    #[error("range is not an intron: {0}")]
    NotAnIntron(String),

    #[error("intron decomposition failed, which indicates a convention bug: {0}")]
    DecompositionFault(String),

    #[error("cannot parse pipe dream: {0}")]
    InvalidDream(String),

    #[error("the zero polynomial has no lowest-degree part")]
    ZeroPolynomial,
}
