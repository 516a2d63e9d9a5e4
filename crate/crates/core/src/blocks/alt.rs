use num_bigint::BigUint;
use serde::Serialize;

use crate::algebra::arith::{factorial, padic_val_uint};
use crate::error::{Error, Result};

use super::sym::{check_prime, finish_block, Split};
use super::{blocks_sn, BlockData, BlockLabel, Group, WitnessMember};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AltCase {
    /// Defect zero.
    #[serde(rename = "a")]
    A,
    /// `p = 3`, weight 1, self-dual core, all degrees equal.
    #[serde(rename = "b")]
    B,
    /// Two height-zero characters of different degree.
    #[serde(rename = "c")]
    C,
    /// `p = 2` and weight at least 2.
    #[serde(rename = "unclassified")]
    Unclassified,
}

impl AltCase {
    pub fn as_str(self) -> &'static str {
        match self {
            AltCase::A => "a",
            AltCase::B => "b",
            AltCase::C => "c",
            AltCase::Unclassified => "unclassified",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AltBlock {
    pub data: BlockData,
    pub case: AltCase,
    pub witness: Option<(WitnessMember, WitnessMember)>,
}

fn alt_order_val(n: usize, p: usize) -> u64 {
    let v = padic_val_uint(&factorial(n), p as u64).expect("n! > 0");
    if p == 2 && n >= 2 {
        v - 1
    } else {
        v
    }
}

/// The `p`-blocks of `A_n`, obtained by restricting the `S_n` blocks.
///
/// Conjugate cores give one block, labelled by the lexicographically larger
/// core. A self-dual partition contributes two members of half its degree.
/// A weight-0 block with self-dual core splits into two defect-0 blocks.
/// For `p = 2` and weight at least 2 the members are those of the `S_n`
/// block and the block is left unclassified. For `n < 2` the blocks are
/// those of `S_n`.
pub fn blocks_an(n: usize, p: usize) -> Result<Vec<AltBlock>> {
    check_prime(p)?;
    let ov = alt_order_val(n, p);
    let mut out = Vec::new();
    for sb in blocks_sn(n, p)? {
        let core = &sb.label.core;
        let conj = core.conjugate();
        if !core.is_self_dual() && *core < conj {
            continue;
        }
        let label = BlockLabel { group: Group::Alt, ..sb.label.clone() };
        if n < 2 {
            // A_n = S_n, nothing splits
            let data = BlockData { label, members: sb.members.clone(), defect: sb.defect };
            out.push(classified(data)?);
            continue;
        }
        if p == 2 && sb.label.weight >= 2 {
            let data = BlockData { label, members: sb.members.clone(), defect: sb.defect };
            out.push(AltBlock { data, case: AltCase::Unclassified, witness: None });
            continue;
        }
        if core.is_self_dual() && sb.label.weight == 0 {
            let half = &sb.members[0].degree / 2u32;
            for s in [Split::Plus, Split::Minus] {
                let data = finish_block(label.clone(), vec![(core.clone(), Some(s), half.clone())], ov);
                out.push(classified(data)?);
            }
            continue;
        }
        let mut raw = Vec::new();
        for m in &sb.members {
            let l = &m.partition;
            if l.is_self_dual() {
                let half: BigUint = &m.degree / 2u32;
                raw.push((l.clone(), Some(Split::Plus), half.clone()));
                raw.push((l.clone(), Some(Split::Minus), half));
            } else if *l > l.conjugate() || !core.is_self_dual() {
                raw.push((l.clone(), None, m.degree.clone()));
            }
        }
        out.push(classified(finish_block(label, raw, ov))?);
    }
    Ok(out)
}

/// Places an `A_n` block in the case list for alternating groups.
fn classified(data: BlockData) -> Result<AltBlock> {
    let l = &data.label;
    if data.defect == 0 {
        return Ok(AltBlock { data, case: AltCase::A, witness: None });
    }
    let degrees = data.height_zero_degrees();
    let all_equal = data.members.iter().all(|m| m.degree == data.members[0].degree);
    if l.p == 3 && l.weight == 1 && l.core.is_self_dual() && all_equal && data.defect == 1 {
        return Ok(AltBlock { data, case: AltCase::B, witness: None });
    }
    if degrees.len() >= 2 {
        let lo = data.height_zero().find(|m| m.degree == degrees[0]).expect("present");
        let hi = data.height_zero().find(|m| m.degree == degrees[degrees.len() - 1]).expect("present");
        let witness = Some((lo.into(), hi.into()));
        return Ok(AltBlock { data, case: AltCase::C, witness });
    }
    Err(Error::ClassificationFailure(format!(
        "{}-block of A_{} with core {} fits no case",
        l.p, l.n, l.core
    )))
}
