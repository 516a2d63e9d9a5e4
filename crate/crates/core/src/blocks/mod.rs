//! `p`-blocks of symmetric and alternating groups, the relative hook formula,
//! and the case lists for blocks whose height-zero characters share a degree.

mod alt;
mod hook;
mod record;
mod sym;

use serde::Serialize;

pub use alt::{blocks_an, AltBlock, AltCase};
pub use hook::{quotient_congruence, relative_hook_degree, relative_hook_ratio, CongruenceReport, CoreOffsets};
pub use record::{BlockRecord, MemberRecord};
pub use sym::{
    block_sn, blocks_sn, classify_sym, is_ehzd, linear_member_degrees, BlockData, BlockLabel, LinearMember, Member,
    Split, SymCase, SymClassification, WitnessMember,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Group {
    #[serde(rename = "S")]
    Sym,
    #[serde(rename = "A")]
    Alt,
}
