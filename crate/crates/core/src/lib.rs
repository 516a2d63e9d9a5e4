//! Exact combinatorics of p-blocks of symmetric and alternating groups,
//! e-symbols and their Schur elements, and unipotent degree polynomials of
//! `GL_n(q)`.
//!
//! Everything is computed in exact arithmetic: [`BigRat`] rationals, dense
//! rational polynomials ([`Poly`]) and elements of cyclotomic fields
//! ([`CycElt`]). The modules build on each other bottom-up:
//!
//! - [`algebra`]: rationals, polynomials, cyclotomic fields, valuations,
//!   Zsigmondy primes.
//! - [`partitions`]: partitions, hooks, the p-abacus, cores and quotients,
//!   hook-length degrees and their q-analogues.
//! - [`wreath`]: multipartitions, e-symbols, Schur element functions and the
//!   wreath products `G(e,1,r)`.
//! - [`blocks`]: p-blocks of `S_n` and `A_n`, the relative hook formula and
//!   the EHZD classifiers.
//! - [`unipotent`]: `GL_n` degree polynomials, d-Harish-Chandra series,
//!   degree collisions, specialization equalities and torus orders.

pub mod algebra;
pub mod blocks;
mod error;
mod ser;
pub mod partitions;
pub mod unipotent;
pub mod wreath;

pub use algebra::{cyclotomic_poly, padic_val, zsigmondy, BigRat, CycElt, Poly, ZsigmondyResult};
pub use error::{Error, Result};
pub use partitions::{BetaSet, Partition};
