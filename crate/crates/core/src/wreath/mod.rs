//! Multipartitions, e-symbols and the Schur element functions of the
//! cyclotomic Hecke algebras of `G(e,1,r)`.

mod cyclic;
mod multipartition;
mod schur;
mod symbol;

pub use cyclic::{cyclic_config_test, cyclic_values, CyclicVerdict};
pub use multipartition::{enumerate_multipartitions, wreath_degree, Multipartition};
pub use schur::{
    case_one_separation, linear_symbol, rational_valuation, schur_linear, schur_specialize_roots, schur_value,
    specialized_degree, CaseOneSeparation, ParamSpec,
};
pub use symbol::{multipartition_of, symbol_of, ESymbol, SymbolHook, SymbolInvariants};
