use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::arith::factorial;
use crate::algebra::BigRat;
use crate::error::{Error, Result};
use crate::partitions::{core_and_quotient, Abacus, Partition};
use crate::wreath::{symbol_of, wreath_degree, Multipartition};

/// Runner offsets of a `p`-core: `b_i` beads on runner `i`, `c_i = p b_i + i - 1`,
/// and `e` the sorted `c` shifted so that its minimum is 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreOffsets {
    pub p: usize,
    pub b: Vec<usize>,
    pub c: Vec<i64>,
    pub e: Vec<i64>,
    /// `runner_of_e[k]` is the 1-based runner whose offset is `e[k]`.
    pub runner_of_e: Vec<usize>,
}

impl CoreOffsets {
    pub fn of(core: &Partition, p: usize) -> Self {
        let b = Abacus::of(core, p).beads_per_runner();
        let c: Vec<i64> = b.iter().enumerate().map(|(i, &bi)| (p * bi + i) as i64).collect();
        let mut order: Vec<usize> = (0..p).collect();
        order.sort_by_key(|&i| c[i]);
        let min = c[order[0]];
        let e = order.iter().map(|&i| c[i] - min).collect();
        CoreOffsets { p, b, c, e, runner_of_e: order.into_iter().map(|i| i + 1).collect() }
    }
}

/// `chi_pi(1) / chi_mu(1) = n!/r! / prod_{hooks h of S} |p l(h) + c_{i(h)} - c_{j(h)}|`,
/// where `mu` is the `p`-core and `S` the symbol of the `p`-quotient.
///
/// The rows of `S` are taken in increasing order of `c_i`; the asymmetric
/// condition on hooks with `s = t` depends on it. The ratio is a rational
/// number, integral at `p` but not in general.
pub fn relative_hook_ratio(partition: &Partition, p: usize) -> Result<BigRat> {
    let cq = core_and_quotient(partition, p);
    let off = CoreOffsets::of(&cq.core, p);
    let rows: Vec<Partition> = off.runner_of_e.iter().map(|&r| cq.quotient[r - 1].clone()).collect();
    let symbol = symbol_of(&Multipartition::new(rows));
    let mut denom = BigUint::one();
    for h in symbol.hooks() {
        let factor = (p * h.length()) as i64 + off.e[h.i - 1] - off.e[h.j - 1];
        if factor == 0 {
            return Err(Error::Internal(format!("vanishing hook factor for {partition} at p = {p}: {h:?}")));
        }
        denom *= factor.unsigned_abs();
    }
    let num = factorial(partition.size()) / factorial(cq.core.size());
    Ok(BigRat::new(num.into(), denom.into()))
}

/// `chi_pi(1)` from the relative hook formula.
pub fn relative_hook_degree(partition: &Partition, p: usize) -> Result<BigUint> {
    let core = core_and_quotient(partition, p).core;
    let d = relative_hook_ratio(partition, p)? * BigRat::from_integer(core.degree().into());
    if !d.is_integer() {
        return Err(Error::InexactDivision(format!("relative hook product for {partition} at p = {p}")));
    }
    d.to_integer().to_biguint().ok_or_else(|| Error::Internal("negative degree".into()))
}

/// Residue mod `p` of a `p`-integral rational.
pub(crate) fn residue_mod(x: &BigRat, p: usize) -> Result<u64> {
    let pb = BigInt::from(p);
    let den = x.denom().mod_floor(&pb);
    if den.is_zero() {
        return Err(Error::Internal(format!("{x} is not integral at {p}")));
    }
    let inv = den.modpow(&(&pb - 2u32), &pb);
    let r = (x.numer().mod_floor(&pb) * inv).mod_floor(&pb);
    Ok(r.to_u64().expect("residue fits"))
}

/// Comparison of `chi_pi(1)/chi_mu(1)` with `psi_nu(1)` modulo `p`, where `psi_nu`
/// is the character of `C_p wr S_w` labelled by the `p`-quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub partition: Partition,
    pub p: usize,
    pub lhs: u64,
    pub rhs: u64,
    pub holds_plus: bool,
    pub holds_minus: bool,
}

impl CongruenceReport {
    pub fn holds(&self) -> bool {
        self.holds_plus || self.holds_minus
    }
}

pub fn quotient_congruence(partition: &Partition, p: usize) -> Result<CongruenceReport> {
    let cq = core_and_quotient(partition, p);
    let ratio = relative_hook_ratio(partition, p)?;
    let psi = wreath_degree(&Multipartition::new(cq.quotient));
    let lhs = residue_mod(&ratio, p)?;
    let rhs = (psi % p).to_u64().expect("residue fits");
    let p64 = p as u64;
    Ok(CongruenceReport {
        partition: partition.clone(),
        p,
        lhs,
        rhs,
        holds_plus: lhs == rhs,
        holds_minus: lhs == (p64 - rhs) % p64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn offsets_of_small_cores() {
        let off = CoreOffsets::of(&Partition::empty(), 3);
        assert_eq!(off.c, vec![0, 1, 2]);
        assert_eq!(off.e, vec![0, 1, 2]);
        // (2) on the 3-abacus with 3 beads: positions 0,1,4
        let off = CoreOffsets::of(&p(&[2]), 3);
        assert_eq!(off.b, vec![1, 2, 0]);
        assert_eq!(off.c, vec![3, 7, 2]);
        assert_eq!(off.e, vec![0, 1, 5]);
        assert_eq!(off.runner_of_e, vec![3, 1, 2]);
    }

    #[test]
    fn small_examples() {
        assert_eq!(relative_hook_degree(&p(&[3, 1]), 2).unwrap(), BigUint::from(3u32));
        assert_eq!(relative_hook_ratio(&p(&[3, 1]), 2).unwrap(), BigRat::from_integer(3.into()));
        // weight 0: empty hook product
        let core = p(&[3, 1, 1]);
        assert_eq!(relative_hook_degree(&core, 3).unwrap(), core.degree());
        assert_eq!(relative_hook_ratio(&core, 3).unwrap(), BigRat::one());
        // the ratio need not be an integer: 162162 / 35 over the 7-core (5,1,1,1)
        let l = p(&[5, 3, 2, 2, 2, 1]);
        let want = BigRat::new(162162.into(), 35.into());
        assert_eq!(relative_hook_ratio(&l, 7).unwrap(), want);
        assert!(!want.is_integer());
        assert_eq!(relative_hook_degree(&l, 7).unwrap(), l.degree());
    }

    #[test]
    fn residues_of_rationals() {
        for (a, b) in [(23166i64, 5i64), (-7, 3), (1, 6), (0, 11)] {
            for prime in [7u64, 13] {
                let x = BigRat::new(a.into(), b.into());
                let want = (0..prime).find(|r| (*r as i64 * b - a).rem_euclid(prime as i64) == 0).unwrap();
                assert_eq!(residue_mod(&x, prime as usize).unwrap(), want);
            }
        }
        assert!(residue_mod(&BigRat::new(1.into(), 7.into()), 7).is_err());
    }

    #[test]
    fn congruence_examples() {
        let rep = quotient_congruence(&p(&[5]), 5).unwrap();
        assert_eq!((rep.lhs, rep.rhs), (1, 1));
        assert!(rep.holds_plus);
        let rep = quotient_congruence(&p(&[3, 1]), 2).unwrap();
        assert_eq!(rep.lhs, 1);
        assert_eq!(rep.rhs % 2, 1);
        assert!(rep.holds());
    }

    #[test]
    fn agrees_with_hook_length_formula_small_range() {
        for n in 0..=16 {
            for l in enumerate_partitions(n) {
                for prime in [2, 3, 5, 7] {
                    assert_eq!(relative_hook_degree(&l, prime).unwrap(), l.degree(), "{l} p={prime}");
                }
            }
        }
    }

    #[test]
    fn congruence_over_the_empty_core() {
        for n in 0..=14 {
            for l in enumerate_partitions(n) {
                for prime in [2, 3, 5, 7] {
                    if core_and_quotient(&l, prime).core.is_empty() {
                        assert!(quotient_congruence(&l, prime).unwrap().holds(), "{l} p={prime}");
                    }
                }
            }
        }
    }

    #[test]
    fn congruence_fails_over_nonempty_cores() {
        // chi_(4,1)(1) = 4 over the 2-core (2,1) of degree 2; chi_(7,2)(1) = 27 over
        // the 3-core (4,2) of degree 9. Both quotients label linear characters.
        for (parts, prime) in [(&[4, 1][..], 2), (&[7, 2][..], 3)] {
            let rep = quotient_congruence(&p(parts), prime).unwrap();
            assert_eq!((rep.lhs, rep.rhs), (0, 1));
            assert!(!rep.holds());
        }
    }
}
