use std::fmt;

use serde::Serialize;

use crate::algebra::arith::binomial;
use crate::error::{Error, Result};
use crate::partitions::BetaSet;

use super::Multipartition;

/// An `e`-symbol: `e` strictly increasing rows of non-negative integers, all
/// of the same length `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ESymbol {
    rows: Vec<Vec<usize>>,
}

/// A hook `(s, t)` of a symbol, with `s` in row `i`, `t` not in row `j`.
/// Rows are 1-based as in the usual indexing of runners.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolHook {
    pub i: usize,
    pub j: usize,
    pub s: usize,
    pub t: usize,
}

impl SymbolHook {
    pub fn length(&self) -> usize {
        self.s - self.t
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolInvariants {
    pub rank: usize,
    pub a: u64,
    pub c: u64,
    pub hooks: Vec<SymbolHook>,
}

impl ESymbol {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidInput("a symbol needs at least one row".into()));
        }
        let m = rows[0].len();
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidInput(format!("symbol rows {rows:?} have unequal lengths")));
        }
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return Err(Error::InvalidInput(format!("symbol rows {rows:?} are not strictly increasing")));
        }
        Ok(ESymbol { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn e(&self) -> usize {
        self.rows.len()
    }

    /// Common row length.
    pub fn m(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rank(&self) -> usize {
        let total: usize = self.rows.iter().flatten().sum();
        total - self.e() * binomial(self.m() as u64, 2) as usize
    }

    /// The elementary equivalence `S_i -> (0, s_i1 + 1, ..., s_im + 1)` on every row.
    pub fn shifted(&self) -> ESymbol {
        let rows = self
            .rows
            .iter()
            .map(|r| std::iter::once(0).chain(r.iter().map(|s| s + 1)).collect())
            .collect();
        ESymbol { rows }
    }

    /// Undoes shifts while every row starts with 0, giving the minimal `m`.
    pub fn normalized(&self) -> ESymbol {
        let mut rows = self.rows.clone();
        while rows[0].first().is_some() && rows.iter().all(|r| r[0] == 0) {
            for r in rows.iter_mut() {
                r.remove(0);
                r.iter_mut().for_each(|s| *s -= 1);
            }
        }
        ESymbol { rows }
    }

    pub fn invariants(&self) -> SymbolInvariants {
        let (e, m) = (self.e() as u64, self.m() as u64);
        let rank = self.rank();
        let a = (1..m).map(|i| binomial(e * i, 2)).sum();
        let c = binomial(e, 2) * binomial(m, 2) + rank as u64 * (e - 1);
        SymbolInvariants { rank, a, c, hooks: self.hooks() }
    }

    /// Every hook, by exhaustive search over the definition.
    pub fn hooks(&self) -> Vec<SymbolHook> {
        let mut out = Vec::new();
        for (i, row_i) in self.rows.iter().enumerate() {
            for &s in row_i {
                for (j, row_j) in self.rows.iter().enumerate() {
                    for t in 0..=s {
                        if row_j.contains(&t) || (t == s && j <= i) {
                            continue;
                        }
                        out.push(SymbolHook { i: i + 1, j: j + 1, s, t });
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for ESymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r:?}")?;
        }
        write!(f, ")")
    }
}

/// Symbol of a multipartition: row `i` is the beta-set of `nu_i` with `m`
/// entries, `m` the largest number of parts of a component.
pub fn symbol_of(nu: &Multipartition) -> ESymbol {
    let m = nu.components().iter().map(|c| c.len()).max().unwrap_or(0);
    let rows = nu
        .components()
        .iter()
        .map(|c| BetaSet::of(c, m).expect("m covers every component").entries().to_vec())
        .collect();
    ESymbol { rows }
}

/// Inverse of [`symbol_of`] on equivalence classes.
pub fn multipartition_of(symbol: &ESymbol) -> Multipartition {
    let comps = symbol
        .rows
        .iter()
        .map(|r| BetaSet::new(r.clone()).expect("rows are strictly increasing").to_partition())
        .collect();
    Multipartition::new(comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_partitions, Partition};
    use crate::wreath::enumerate_multipartitions;

    #[test]
    fn small_symbols() {
        let nu = Multipartition::new(vec![Partition::new(vec![1]).unwrap(), Partition::empty()]);
        let s = symbol_of(&nu);
        assert_eq!(s.rows(), &[vec![1], vec![0]]);
        assert_eq!(s.rank(), 1);

        let empty = symbol_of(&Multipartition::new(vec![Partition::empty(); 3]));
        assert_eq!(empty.m(), 0);
        assert_eq!(empty.rank(), 0);
        assert_eq!(empty.shifted().rows(), &[vec![0], vec![0], vec![0]]);
        assert_eq!(empty.shifted().normalized(), empty);
    }

    #[test]
    fn validation() {
        assert!(ESymbol::new(vec![vec![0, 1], vec![2]]).is_err());
        assert!(ESymbol::new(vec![vec![1, 1]]).is_err());
        assert!(ESymbol::new(vec![]).is_err());
    }

    #[test]
    fn round_trip_and_shift_invariance() {
        for e in 1..=4 {
            for r in 0..=5 {
                for nu in enumerate_multipartitions(e, r) {
                    let s = symbol_of(&nu);
                    assert_eq!(s.rank(), r);
                    assert_eq!(multipartition_of(&s), nu);
                    let t = s.shifted().shifted();
                    assert_eq!(t.rank(), r);
                    assert_eq!(multipartition_of(&t), nu);
                    assert_eq!(t.normalized(), s);
                }
            }
        }
    }

    #[test]
    fn one_row_hooks_are_classical_hooks() {
        for n in 0..=10 {
            for l in enumerate_partitions(n) {
                let s = symbol_of(&Multipartition::new(vec![l.clone()]));
                let mut got: Vec<usize> = s.hooks().iter().map(SymbolHook::length).collect();
                let mut want = l.hook_lengths();
                got.sort_unstable();
                want.sort_unstable();
                assert_eq!(got, want, "{l}");
            }
        }
    }

    #[test]
    fn invariants_of_the_two_box_bipartition() {
        // ((1),(1)), e = 2: rows (1),(1), m = 1
        let one = Partition::new(vec![1]).unwrap();
        let s = symbol_of(&Multipartition::new(vec![one.clone(), one]));
        let inv = s.invariants();
        // a = sum over i in 1..m of binom(e i, 2) is empty for m = 1;
        // c = binom(2,2) binom(1,2) + 2 * (2 - 1)
        assert_eq!(inv.rank, 2);
        assert_eq!(inv.a, 0);
        assert_eq!(inv.c, 2);
        // After one shift: rows (0,2),(0,2), m = 2: a = binom(2,2) = 1, c = 1 + 2
        let inv = s.shifted().invariants();
        assert_eq!((inv.rank, inv.a, inv.c), (2, 1, 3));
    }
}
