//! Exact arithmetic: rationals, dense rational polynomials, cyclotomic
//! fields, valuations and primitive prime divisors.

pub mod arith;
mod cyclotomic;
mod poly;

pub use arith::{padic_val, zsigmondy, ZsigmondyResult};
pub use cyclotomic::{cyclotomic_poly, CycElt};
pub use poly::Poly;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type BigRat = num_rational::BigRational;
