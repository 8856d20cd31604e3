//! Exact-arithmetic library for tableau combinatorics, generalized orbital
//! variety ideals, Groebner-based multidegrees and Hilbert series,
//! preprojective-algebra flag functions, and the slice construction of
//! MV-cycle equations.
//!
//! Everything is computed over the rationals (or small prime fields for point
//! counting); there is no floating point anywhere in this crate.

pub mod alpha;
pub mod error;
pub mod fp;
pub mod measures;
pub mod mvy;
pub mod orbital;
pub mod poly;
pub mod polytopes;
pub mod preproj;
pub mod tableaux;

pub use error::{Error, Result};

pub type Rat = num::BigRational;
pub type Int = num::BigInt;

/// Shorthand for building a `BigRational` from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Shorthand for a rational from numerator and denominator.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}
