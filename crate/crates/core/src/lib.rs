//! Exact character calculus for the general linear Lie superalgebra gl(m|n).
//!
//! The crate builds the root datum of gl(m|n) with the distinguished Borel
//! (all ε before all δ), represents the Weyl group W = S_m × S_n with its
//! linear, dot, circle and star actions, and does exact sparse arithmetic on
//! anchored, height-truncated formal characters with integer coefficients.
//! On top of that sit the characters of Verma modules, finite-dimensional
//! simple modules of an even Levi factor, and generalized Verma modules,
//! together with their images under Weyl-group twisting — each closed form
//! paired with an independent brute-force route so every identity can be
//! checked coefficient by coefficient.
//!
//! All arithmetic is exact: weights carry `i64` rationals, coefficients are
//! `i64` integers, and a truncated query beyond the known window is an error,
//! never a silent zero.

pub mod char_ring;
pub mod error;
pub mod levi;
pub mod roots;
pub mod sweep;
pub mod twist;
pub mod verma;
pub mod weyl;

pub use char_ring::{FormalCharacter, Order};
pub use error::Error;
pub use roots::{ParabolicData, Parity, Root, RootSystem, Weight};
pub use twist::TwistReport;
pub use weyl::WeylElement;

/// Exact rational scalar used for weight coordinates.
pub type Rat = num_rational::Rational64;

/// Integer coefficient of a formal character term.
pub type Coeff = i64;
