//! Exact-arithmetic laboratory for generalized continued fractions
//! `a_0 + b_0/(a_1 + b_1/(a_2 + …))` whose coefficient sequences are fixed
//! points of primitive substitutions.
//!
//! * [`exact`]: big integers, rationals, 2×2 matrices, Möbius maps, words.
//! * [`substitution`]: substitutions, fixed points, frequencies, folding,
//!   fractional powers and stammering detection.
//! * [`gcf`]: convergents, the ρ-series, enclosures, quadratic
//!   approximants and Diophantine diagnostics.
//! * [`raney`]: balanced matrices and Raney transducers over `{L, R}`.
//! * [`rcf`]: regular continued fraction partial quotients, extracted both
//!   through the transducer and from nested enclosures.

pub mod error;
pub mod exact;
pub mod gcf;
pub mod numeric;
pub mod raney;
pub mod rcf;
pub mod substitution;

pub use error::{Error, Result};
pub use exact::{ExtReal, Integer, Mat2, Rational, Word};
