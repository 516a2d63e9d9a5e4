use crate::error::{Error, Result};

use super::Partition;

/// Strictly increasing set of non-negative integers encoding a partition.
///
/// Ascending convention: with parts `p_1 <= ... <= p_m` (padded by zeros),
/// the entries are `p_j + (j - 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BetaSet {
    entries: Vec<usize>,
}

impl BetaSet {
    /// Beta-set of `partition` with exactly `m` entries.
    pub fn of(partition: &Partition, m: usize) -> Result<Self> {
        if m < partition.len() {
            return Err(Error::InvalidInput(format!(
                "{partition} has {} parts, more than {m} beads",
                partition.len()
            )));
        }
        let pad = m - partition.len();
        let entries = (0..m)
            .map(|j| {
                let part = if j < pad { 0 } else { partition.parts()[m - 1 - j] };
                part + j
            })
            .collect();
        Ok(BetaSet { entries })
    }

    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(format!("{entries:?} is not strictly increasing")));
        }
        Ok(BetaSet { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_parts_unsorted(self.entries.iter().enumerate().map(|(j, &b)| b - j).collect())
    }

    /// `(0, b_1 + 1, ..., b_m + 1)`: same partition, one more bead.
    pub fn shifted(&self) -> BetaSet {
        let entries = std::iter::once(0).chain(self.entries.iter().map(|b| b + 1)).collect();
        BetaSet { entries }
    }
}

/// Bead count used throughout: the least multiple of `p` that is at least the
/// number of parts. This fixes which runner carries which quotient component.
pub fn bead_count(partition: &Partition, p: usize) -> usize {
    partition.len().div_ceil(p) * p
}

/// The `p`-abacus of a beta-set: runner `r` (0-based) holds the entries
/// congruent to `r` mod `p`, recorded by level `entry / p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abacus {
    p: usize,
    runners: Vec<Vec<usize>>,
}

impl Abacus {
    pub fn from_beta(beta: &BetaSet, p: usize) -> Self {
        assert!(p >= 1, "abacus needs at least one runner");
        let mut runners = vec![Vec::new(); p];
        for &b in beta.entries() {
            runners[b % p].push(b / p);
        }
        Abacus { p, runners }
    }

    /// Abacus of `partition` under the fixed bead-count convention.
    pub fn of(partition: &Partition, p: usize) -> Self {
        let m = bead_count(partition, p);
        Self::from_beta(&BetaSet::of(partition, m).expect("bead count covers the parts"), p)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Levels of the beads on each runner, ascending.
    pub fn runners(&self) -> &[Vec<usize>] {
        &self.runners
    }

    pub fn beads(&self) -> usize {
        self.runners.iter().map(Vec::len).sum()
    }

    pub fn beads_per_runner(&self) -> Vec<usize> {
        self.runners.iter().map(Vec::len).collect()
    }

    fn positions(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = self
            .runners
            .iter()
            .enumerate()
            .flat_map(|(r, levels)| levels.iter().map(move |&l| l * self.p + r))
            .collect();
        pos.sort_unstable();
        pos
    }

    pub fn to_partition(&self) -> Partition {
        BetaSet { entries: self.positions() }.to_partition()
    }

    /// Partition read off each runner.
    pub fn quotient(&self) -> Vec<Partition> {
        self.runners
            .iter()
            .map(|levels| BetaSet { entries: levels.clone() }.to_partition())
            .collect()
    }

    /// All beads slid to the top of their runners.
    pub fn core(&self) -> Partition {
        let slid = Abacus {
            p: self.p,
            runners: self.runners.iter().map(|l| (0..l.len()).collect()).collect(),
        };
        slid.to_partition()
    }
}

/// A partition's `p`-core, `p`-quotient and weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreQuotient {
    pub core: Partition,
    pub quotient: Vec<Partition>,
    pub weight: usize,
}

/// `p`-core and `p`-quotient via the abacus. Runner `i` (1-based) carries
/// residue `i - 1`. Works for any `p >= 1`, so it also gives d-cores.
pub fn core_and_quotient(partition: &Partition, p: usize) -> CoreQuotient {
    let abacus = Abacus::of(partition, p);
    let quotient = abacus.quotient();
    let weight = quotient.iter().map(Partition::size).sum();
    CoreQuotient { core: abacus.core(), quotient, weight }
}

/// True if no hook length of `partition` is divisible by `p`.
pub fn is_core(partition: &Partition, p: usize) -> bool {
    Abacus::of(partition, p).runners().iter().all(|l| l.iter().enumerate().all(|(k, &lvl)| k == lvl))
}

/// Inverse of [`core_and_quotient`].
pub fn combine(core: &Partition, quotient: &[Partition], p: usize) -> Result<Partition> {
    if quotient.len() != p {
        return Err(Error::InvalidInput(format!("quotient has {} components, expected {p}", quotient.len())));
    }
    if !is_core(core, p) {
        return Err(Error::NotACore(core.to_string(), p));
    }
    let base = Abacus::of(core, p).beads_per_runner();
    // Extra full rows of p beads leave the runner labelling unchanged.
    let extra = base.iter().zip(quotient).map(|(&b, q)| q.len().saturating_sub(b)).max().unwrap_or(0);
    let runners = base
        .iter()
        .zip(quotient)
        .map(|(&b, q)| BetaSet::of(q, b + extra).expect("enough beads").entries().to_vec())
        .collect();
    Ok(Abacus { p, runners }.to_partition())
}
