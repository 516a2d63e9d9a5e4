use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::algebra::arith::factorial;
use crate::partitions::{enumerate_partitions, Partition};

/// An `e`-tuple of partitions; its rank is the total size.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    /// # Panics
    ///
    /// Panics if `components` is empty.
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty(), "a multipartition needs at least one component");
        Multipartition { components }
    }

    /// `(w)` on component `i` (0-based), empty elsewhere.
    pub fn concentrated(e: usize, i: usize, w: usize) -> Self {
        let mut components = vec![Partition::empty(); e];
        if w > 0 {
            components[i] = Partition::new(vec![w]).expect("single row");
        }
        Multipartition { components }
    }

    pub fn e(&self) -> usize {
        self.components.len()
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Partition> {
        self.components
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// All `e`-multipartitions of rank `r`.
pub fn enumerate_multipartitions(e: usize, r: usize) -> Vec<Multipartition> {
    assert!(e >= 1, "e must be positive");
    fn go(e: usize, rest: usize, prefix: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
        if prefix.len() + 1 == e {
            for last in enumerate_partitions(rest) {
                prefix.push(last);
                out.push(Multipartition { components: prefix.clone() });
                prefix.pop();
            }
            return;
        }
        for size in (0..=rest).rev() {
            for part in enumerate_partitions(size) {
                prefix.push(part);
                go(e, rest - size, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(e, r, &mut Vec::new(), &mut out);
    out
}

/// Degree of the irreducible character of `G(e,1,r) = C_e wr S_r` labelled by
/// the multipartition: `r! / prod |nu_i|! * prod deg(nu_i)`.
pub fn wreath_degree(nu: &Multipartition) -> BigUint {
    let multinomial = nu
        .components
        .iter()
        .fold(factorial(nu.rank()), |acc, c| acc / factorial(c.size()));
    nu.components.iter().fold(multinomial, |acc, c| acc * c.degree())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_multipartitions(1, 4).len(), 5);
        assert_eq!(enumerate_multipartitions(2, 2).len(), 5);
        assert_eq!(enumerate_multipartitions(3, 1).len(), 3);
        assert_eq!(enumerate_multipartitions(4, 0).len(), 1);
    }

    #[test]
    fn degrees() {
        for nu in enumerate_multipartitions(1, 5) {
            assert_eq!(wreath_degree(&nu), nu.components()[0].degree());
        }
        for nu in enumerate_multipartitions(3, 1) {
            assert_eq!(wreath_degree(&nu), BigUint::from(1u32));
        }
        let one = Partition::new(vec![1]).unwrap();
        let nu = Multipartition::new(vec![one.clone(), one]);
        assert_eq!(wreath_degree(&nu), BigUint::from(2u32));
    }

    #[test]
    fn sum_of_squares_is_group_order() {
        for e in 1..=5usize {
            for r in 0..=5usize {
                let total: BigUint = enumerate_multipartitions(e, r).iter().map(|nu| wreath_degree(nu).pow(2)).sum();
                let order = BigUint::from(e).pow(r as u32) * factorial(r);
                assert_eq!(total, order, "e={e} r={r}");
            }
        }
    }
}
