use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::arith::{factorial, is_prime, padic_val_uint};
use crate::error::{Error, Result};
use crate::partitions::{combine, cores_of_size, Partition};
use crate::wreath::{enumerate_multipartitions, Multipartition};

use super::{CoreOffsets, Group};

/// Which of the two characters a self-dual partition splits into on `A_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Split {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Member {
    pub partition: Partition,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<Split>,
    #[serde(serialize_with = "crate::ser::display")]
    pub degree: BigUint,
    pub height: u64,
}

impl Member {
    pub fn label(&self) -> String {
        match self.split {
            None => self.partition.to_string(),
            Some(Split::Plus) => format!("{}+", self.partition),
            Some(Split::Minus) => format!("{}-", self.partition),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockLabel {
    pub group: Group,
    pub n: usize,
    pub p: usize,
    pub core: Partition,
    pub weight: usize,
}

/// A `p`-block: members in reverse-lex order of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockData {
    pub label: BlockLabel,
    pub members: Vec<Member>,
    pub defect: u64,
}

impl BlockData {
    pub fn height_zero(&self) -> impl Iterator<Item = &Member> {
        self.members.iter().filter(|m| m.height == 0)
    }

    /// Distinct height-zero degrees, ascending.
    pub fn height_zero_degrees(&self) -> Vec<BigUint> {
        let mut d: Vec<BigUint> = self.height_zero().map(|m| m.degree.clone()).collect();
        d.sort();
        d.dedup();
        d
    }
}

/// All height-zero characters have the same degree.
pub fn is_ehzd(block: &BlockData) -> bool {
    block.height_zero_degrees().len() <= 1
}

pub(crate) fn check_prime(p: usize) -> Result<()> {
    if p < 2 || !is_prime(p as u64) {
        return Err(Error::InvalidInput(format!("{p} is not a prime")));
    }
    Ok(())
}

/// Heights and defect from raw degrees, given `nu_p` of the group order.
pub(crate) fn finish_block(label: BlockLabel, raw: Vec<(Partition, Option<Split>, BigUint)>, order_val: u64) -> BlockData {
    let p = label.p as u64;
    let vals: Vec<u64> = raw.iter().map(|(_, _, d)| padic_val_uint(d, p).expect("degrees are positive")).collect();
    let min = vals.iter().copied().min().unwrap_or(0);
    let members = raw
        .into_iter()
        .zip(vals)
        .map(|((partition, split, degree), v)| Member { partition, split, degree, height: v - min })
        .collect();
    BlockData { label, members, defect: order_val - min }
}

/// The `p`-blocks of `S_n`, ordered by core size and then reverse-lex core.
pub fn blocks_sn(n: usize, p: usize) -> Result<Vec<BlockData>> {
    check_prime(p)?;
    let order_val = padic_val_uint(&factorial(n), p as u64).expect("n! > 0");
    let mut out = Vec::new();
    for w in (0..=n / p).rev() {
        for core in cores_of_size(n - p * w, p) {
            out.push(block_sn_of_core(&core, n, p, order_val)?);
        }
    }
    Ok(out)
}

fn block_sn_of_core(core: &Partition, n: usize, p: usize, order_val: u64) -> Result<BlockData> {
    let w = (n - core.size()) / p;
    let mut parts: Vec<Partition> = enumerate_multipartitions(p, w)
        .into_iter()
        .map(|nu| combine(core, nu.components(), p))
        .collect::<Result<_>>()?;
    parts.sort_by(|a, b| b.cmp(a));
    let raw = parts.into_iter().map(|l| {
        let d = l.degree();
        (l, None, d)
    });
    let label = BlockLabel { group: Group::Sym, n, p, core: core.clone(), weight: w };
    Ok(finish_block(label, raw.collect(), order_val))
}

/// The `S_n` block with the given core and weight.
pub fn block_sn(core: &Partition, w: usize, p: usize) -> Result<BlockData> {
    check_prime(p)?;
    let n = core.size() + p * w;
    let order_val = padic_val_uint(&factorial(n), p as u64).expect("n! > 0");
    block_sn_of_core(core, n, p, order_val)
}

/// The member labelled by `(w)` on one runner, with its degree from the
/// closed product formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearMember {
    /// 1-based position in the sorted offsets.
    pub index: usize,
    pub runner: usize,
    pub partition: Partition,
    #[serde(serialize_with = "crate::ser::display")]
    pub f: BigUint,
    #[serde(serialize_with = "crate::ser::display")]
    pub degree: BigUint,
}

/// `f_i = prod_{k<w} prod_{j != i} |p k + e_i - e_j|` and
/// `deg = n! / (p^w r! w! f_i) * chi_mu(1)`, for every sorted offset `e_i`.
pub fn linear_member_degrees(core: &Partition, w: usize, p: usize) -> Result<Vec<LinearMember>> {
    if w == 0 {
        return Err(Error::InvalidInput("linear members need positive weight".into()));
    }
    if !crate::partitions::is_core(core, p) {
        return Err(Error::NotACore(core.to_string(), p));
    }
    let off = CoreOffsets::of(core, p);
    let r = core.size();
    let n = r + p * w;
    let base = factorial(n) / (factorial(r) * factorial(w) * BigUint::from(p).pow(w as u32));
    let mut out = Vec::with_capacity(p);
    for i in 0..p {
        let mut f = BigUint::one();
        for k in 0..w as i64 {
            for j in 0..p {
                if j != i {
                    let v = p as i64 * k + off.e[i] - off.e[j];
                    if v == 0 {
                        return Err(Error::Internal(format!("vanishing factor in f_{} for core {core}", i + 1)));
                    }
                    f *= v.unsigned_abs();
                }
            }
        }
        let (q, rem) = (&base * core.degree()).div_rem(&f);
        if !rem.is_zero() {
            return Err(Error::InexactDivision(format!("f_{} does not divide n! chi_mu(1)/(p^w r! w!)", i + 1)));
        }
        let runner = off.runner_of_e[i];
        let nu = Multipartition::concentrated(p, runner - 1, w);
        let partition = combine(core, nu.components(), p)?;
        out.push(LinearMember { index: i + 1, runner, partition, f, degree: q });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SymCase {
    /// Weight 0.
    #[serde(rename = "a")]
    A,
    /// `p = 2`, weight 1.
    #[serde(rename = "b")]
    B,
    /// `p = 3`, weight 1, self-dual core.
    #[serde(rename = "c")]
    C,
    /// Two height-zero members of different degree.
    #[serde(rename = "d")]
    D,
}

impl SymCase {
    pub fn as_str(self) -> &'static str {
        match self {
            SymCase::A => "a",
            SymCase::B => "b",
            SymCase::C => "c",
            SymCase::D => "d",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessMember {
    pub label: String,
    #[serde(serialize_with = "crate::ser::display")]
    pub degree: BigUint,
}

impl From<&Member> for WitnessMember {
    fn from(m: &Member) -> Self {
        WitnessMember { label: m.label(), degree: m.degree.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymClassification {
    pub case: SymCase,
    /// `(smaller, larger)` height-zero degrees.
    pub witness: Option<(WitnessMember, WitnessMember)>,
}

/// Places an `S_n` block in the case list for symmetric groups. A witness
/// pair `d1 < d2` must be usable for `A_n` as well: either both members are
/// not self-dual, or `d2 != 2 d1`.
pub fn classify_sym(block: &BlockData) -> Result<SymClassification> {
    let l = &block.label;
    if l.weight == 0 {
        return Ok(SymClassification { case: SymCase::A, witness: None });
    }
    if l.p == 2 && l.weight == 1 {
        return Ok(SymClassification { case: SymCase::B, witness: None });
    }
    if l.p == 3 && l.weight == 1 && l.core.is_self_dual() {
        return Ok(SymClassification { case: SymCase::C, witness: None });
    }
    match sym_witness(block) {
        Some(w) => Ok(SymClassification { case: SymCase::D, witness: Some(w) }),
        None => Err(Error::ClassificationFailure(format!(
            "no height-zero witness in the {}-block of S_{} with core {}",
            l.p, l.n, l.core
        ))),
    }
}

fn sym_witness(block: &BlockData) -> Option<(WitnessMember, WitnessMember)> {
    // per distinct degree: first non-self-dual member, first member
    let mut by_degree: Vec<(BigUint, Option<&Member>, &Member)> = Vec::new();
    for m in block.height_zero() {
        let nsd = !m.partition.is_self_dual();
        match by_degree.iter_mut().find(|(d, _, _)| *d == m.degree) {
            Some(entry) => {
                if nsd && entry.1.is_none() {
                    entry.1 = Some(m);
                }
            }
            None => by_degree.push((m.degree.clone(), nsd.then_some(m), m)),
        }
    }
    by_degree.sort_by(|a, b| a.0.cmp(&b.0));
    for hi in (0..by_degree.len()).rev() {
        for lo in (0..hi).rev() {
            let (d1, n1, a1) = &by_degree[lo];
            let (d2, n2, a2) = &by_degree[hi];
            if let (Some(x), Some(y)) = (n1, n2) {
                return Some(((*x).into(), (*y).into()));
            }
            if *d2 != d1 * 2u32 {
                return Some(((*a1).into(), (*a2).into()));
            }
        }
    }
    None
}
