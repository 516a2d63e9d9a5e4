use serde::Serialize;

use crate::error::Result;
use crate::partitions::Partition;

use super::{classify_sym, is_ehzd, AltBlock, BlockData, Group, WitnessMember};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MemberRecord {
    pub label: String,
    pub partition: Partition,
    pub degree: String,
    pub height: u64,
}

/// Flat record of a block, as written by the scanner.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockRecord {
    pub group: Group,
    pub n: usize,
    pub p: usize,
    pub core: Partition,
    pub weight: usize,
    pub defect: u64,
    pub members: Vec<MemberRecord>,
    pub height_zero_degrees: Vec<String>,
    pub ehzd: bool,
    pub classification: String,
    pub witness: Option<(WitnessMember, WitnessMember)>,
}

impl BlockRecord {
    fn base(data: &BlockData, classification: String, witness: Option<(WitnessMember, WitnessMember)>) -> Self {
        let l = &data.label;
        BlockRecord {
            group: l.group,
            n: l.n,
            p: l.p,
            core: l.core.clone(),
            weight: l.weight,
            defect: data.defect,
            members: data
                .members
                .iter()
                .map(|m| MemberRecord {
                    label: m.label(),
                    partition: m.partition.clone(),
                    degree: m.degree.to_string(),
                    height: m.height,
                })
                .collect(),
            height_zero_degrees: data.height_zero_degrees().iter().map(ToString::to_string).collect(),
            ehzd: is_ehzd(data),
            classification,
            witness,
        }
    }

    pub fn from_sym(data: &BlockData) -> Result<Self> {
        let c = classify_sym(data)?;
        Ok(Self::base(data, c.case.as_str().to_owned(), c.witness))
    }

    pub fn from_alt(block: &AltBlock) -> Self {
        Self::base(&block.data, block.case.as_str().to_owned(), block.witness.clone())
    }
}
