//! Numeric substrate: exact rationals, dense polynomials in the Casimir
//! symbol `c`, truncated power series in `x`, and the combinatorial helpers
//! (Stirling numbers, falling factorials, interpolation) everything else
//! leans on.

mod combin;
mod interp;
mod poly;
mod series;

pub use combin::{binomial, factorial, falling_factorial, multinomial, stirling2};
pub use interp::{interpolate, InterpError};
pub use poly::{CasimirPoly, PolyJsonError};
pub use series::{SeriesError, SeriesX};

/// The scalar field: arbitrary-precision rationals, always reduced, with a
/// positive denominator. `num`'s `BigRational` maintains both invariants.
pub type Rational = num::BigRational;

/// Arbitrary-precision integer re-export used throughout the crate.
pub type Integer = num::BigInt;

/// Shorthand for a rational from an integer numerator and denominator.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}
