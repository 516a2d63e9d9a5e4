//! Unipotent characters of `GL_n(q)`, their `d`-Harish-Chandra series,
//! coincidences of specialized degree polynomials, and the torus tables used
//! for semisimple characters.

mod gl;
mod speceq;
mod tori;

pub use gl::{
    degree_collisions, dhc_series_gl, hll_check_gl, unipotent_degrees_gl, DegreePolyEntry, HllMember, HllReport,
    HllSeries, Sign,
};
pub use speceq::{
    conclusion_violations, ratio_factorization, speceq_search, witness_counts, witness_pairs, SpeceqBounds,
    SpeceqPart, SpeceqWitness,
};
pub use tori::{tori_check, Series, ToriEntry, ToriReport, TorusCheck};
