//! Error type shared across the crate.
//!
//! Every message is a single line starting with a fixed machine-readable tag,
//! so CLI consumers can match on the prefix without parsing prose.

use thiserror::Error;

use crate::roots::{Root, Weight};
use crate::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty_algebra: gl(0|0) has no Cartan subalgebra")]
    EmptyAlgebra,

    #[error("dimension_mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("not_a_root: {root} is not a positive root here")]
    NotARoot { root: Root },

    #[error("bad_simple_index: index {index} out of range (1..={count})")]
    BadSimpleIndex { index: usize, count: usize },

    #[error("odd_reflection: simple root {index} is odd, no reflection in W")]
    OddReflection { index: usize },

    #[error("bad_word_token: {token:?}")]
    BadWordToken { token: String },

    #[error("not_in_gamma: {weight} is not a sum of distinct odd positive roots")]
    NotInGamma { weight: Weight },

    #[error("not_one_dimensional: weight pairs to {value} on root {root}")]
    NotOneDimensional { root: Root, value: Rat },

    #[error("not_dominant: weight pairs to {value} on simple root {root}")]
    NotDominant { root: Root, value: Rat },

    #[error("incompatible_twist: root {root} lies in N(w) and in the Levi")]
    IncompatibleTwist { root: Root },

    #[error("not_exact: operation needs a character with finite exact support")]
    NotExact,

    #[error("window_exceeded: height {height} beyond truncation order {order}")]
    WindowExceeded { height: u32, order: u32 },

    #[error("incomparable_anchors: truncated operands with incomparable anchors")]
    IncomparableAnchors,

    #[error("non_lattice_shift: anchors do not differ by an integral combination of simple roots")]
    NonLatticeShift,

    #[error("negative_decomposition: coefficient {coefficient} at {weight}")]
    NegativeDecomposition { weight: Weight, coefficient: i64 },

    #[error("decomposition_diverged: subtraction loop exceeded the iteration cap")]
    DecompositionDiverged,

    #[error("parse_error: {0}")]
    Parse(String),

    #[error("sweep_too_large: {0} (rerun with --force)")]
    SweepTooLarge(String),
}
