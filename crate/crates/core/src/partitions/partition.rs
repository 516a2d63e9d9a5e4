use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::algebra::arith::factorial;
use crate::error::{Error, Result};

/// Integer partition: a weakly decreasing sequence of positive parts.
///
/// The derived ordering is lexicographic on the parts vector, so sorting in
/// descending order gives reverse lexicographic order `(n) > (n-1,1) > ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_parts_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (0..first).map(|j| self.parts.iter().take_while(|&&p| p > j).count()).collect();
        Partition { parts }
    }

    pub fn is_self_dual(&self) -> bool {
        self.conjugate() == *self
    }

    /// Hook lengths of all cells, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for (j, &col) in conj.parts.iter().enumerate().take(row) {
                hooks.push((row - j - 1) + (col - i - 1) + 1);
            }
        }
        hooks
    }

    /// `sum_i (i - 1) * part_i`, the exponent of the leading power of q in the
    /// unipotent degree.
    pub fn b_invariant(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Degree of the irreducible character of `S_n`, by the hook-length formula.
    pub fn degree(&self) -> BigUint {
        let denom = self.hook_lengths().into_iter().fold(BigUint::one(), |acc, h| acc * h);
        let num = factorial(self.size());
        assert!((&num % &denom).is_zero(), "hook-length division is inexact for {self}");
        num / denom
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[3,1]`, `3,1`, `[]` or the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::InvalidInput(format!("{s:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(&self.parts)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for first in (1..=max.min(rest)).rev() {
            prefix.push(first);
            go(rest - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Euler's pentagonal recurrence.
    fn partition_count(n: usize) -> u64 {
        let mut table = vec![0i64; n + 1];
        table[0] = 1;
        for i in 1..=n {
            let mut k = 1i64;
            let mut acc = 0i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc += sign * table[i - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= i {
                    acc += sign * table[i - g2];
                }
                k += 1;
            }
            table[i] = acc;
        }
        table[n] as u64
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(4).len(), 5);
        assert_eq!(
            enumerate_partitions(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(partition_count(30), 5604);
        assert_eq!(enumerate_partitions(30).len(), 5604);
        for n in 0..=20 {
            let all = enumerate_partitions(n);
            assert_eq!(all.len() as u64, partition_count(n));
            assert!(all.windows(2).all(|w| w[0] > w[1]), "not strictly reverse-lex at n={n}");
        }
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_parts_unsorted(vec![1, 0, 3]), p(&[3, 1]));
    }

    #[test]
    fn hooks_of_small_shapes() {
        let mut h = p(&[2, 2]).hook_lengths();
        h.sort_unstable();
        assert_eq!(h, vec![1, 2, 2, 3]);
        let mut h = p(&[3, 1]).hook_lengths();
        h.sort_unstable();
        assert_eq!(h, vec![1, 1, 2, 4]);
        let mut h = p(&[5]).hook_lengths();
        h.sort_unstable();
        assert_eq!(h, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn degrees() {
        assert_eq!(p(&[6]).degree(), BigUint::from(1u32));
        assert_eq!(p(&[2, 2]).degree(), BigUint::from(2u32));
        assert_eq!(p(&[3, 1]).degree(), BigUint::from(3u32));
        let mut fact = BigUint::one();
        for n in 1..=12usize {
            fact *= n;
            let sum: BigUint = enumerate_partitions(n).iter().map(|l| l.degree().pow(2)).sum();
            assert_eq!(sum, fact, "sum of squared degrees at n={n}");
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert!(p(&[2, 2]).is_self_dual());
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        for n in 0..=20 {
            for l in enumerate_partitions(n) {
                assert_eq!(l.conjugate().conjugate(), l);
            }
        }
    }

    #[test]
    fn text_round_trip() {
        assert_eq!("[3,1]".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[3, 1]).to_string(), "[3,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert!("[1,x]".parse::<Partition>().is_err());
        assert!("[1,2]".parse::<Partition>().is_err());
    }
}
