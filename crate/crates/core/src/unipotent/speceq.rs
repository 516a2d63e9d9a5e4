use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::arith::{cyclotomic_value, factorize, is_prime, prime_power};
use crate::algebra::BigRat;
use crate::error::{Error, Result};

/// Which side condition the two integers satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SpeceqPart {
    /// Both powers of 2.
    #[serde(rename = "a")]
    A,
    /// Both divisors of 120.
    #[serde(rename = "b")]
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpeceqBounds {
    pub q_max: u64,
    pub m_max: u32,
    pub exp_bound: i32,
}

/// `n_1 = n_2 prod_{i<=m} Phi_i(q)^{a_i}` with `a_m != 0`; `n_1 / n_2` is in
/// lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpeceqWitness {
    pub part: SpeceqPart,
    pub q: u64,
    pub m: u32,
    /// `a_1, ..., a_m`.
    pub exponents: Vec<i32>,
    #[serde(serialize_with = "crate::ser::display")]
    pub n1: BigUint,
    #[serde(serialize_with = "crate::ser::display")]
    pub n2: BigUint,
}

impl SpeceqWitness {
    /// Recomputes the product exactly.
    pub fn verify(&self) -> bool {
        let mut prod = BigRat::one();
        for (i, &a) in self.exponents.iter().enumerate() {
            let v = BigRat::from_integer(cyclotomic_value(i as u32 + 1, self.q).into());
            prod *= if a >= 0 { v.pow(a) } else { v.recip().pow(-a) };
        }
        let lhs = BigRat::new(self.n1.clone().into(), self.n2.clone().into());
        let side = match self.part {
            SpeceqPart::A => self.n1.count_ones() == 1 && self.n2.count_ones() == 1,
            SpeceqPart::B => (BigUint::from(120u32) % &self.n1).is_zero() && (BigUint::from(120u32) % &self.n2).is_zero(),
        };
        side && lhs == prod && self.exponents.last().is_some_and(|&a| a != 0)
    }
}

/// One usable `Phi_i(q)`: its exponent vector over the tracked primes.
struct Factor {
    i: u32,
    vals: Vec<i32>,
}

/// Exponent window per tracked prime.
fn windows(part: SpeceqPart, primes: &[u64]) -> Vec<(i32, i32)> {
    primes
        .iter()
        .map(|&l| match (part, l) {
            (SpeceqPart::A, 2) => (i32::MIN / 4, i32::MAX / 4),
            (SpeceqPart::A, _) => (0, 0),
            (SpeceqPart::B, 2) => (-3, 3),
            (SpeceqPart::B, 3 | 5) => (-1, 1),
            (SpeceqPart::B, _) => (0, 0),
        })
        .collect()
}

/// Every witness for prime powers `2 <= q <= q_max`, `m <= m_max` and
/// `|a_i| <= exp_bound`, in order of `q`, then `m`, then exponents.
///
/// Tracked primes are those up to `max(m_max, 5)`. A larger prime divides
/// `Phi_i(q)` for at most one `i <= m_max`, so it cannot cancel: an index
/// whose value has such a prime is forced to exponent 0.
pub fn speceq_search(bounds: SpeceqBounds, part: SpeceqPart) -> Result<Vec<SpeceqWitness>> {
    if bounds.q_max < 2 || bounds.m_max == 0 || bounds.exp_bound <= 0 {
        return Err(Error::InvalidInput(format!("bounds must be positive: {bounds:?}")));
    }
    let mut out = Vec::new();
    for q in 2..=bounds.q_max {
        if prime_power(q).is_some() {
            search_q(q, bounds, part, &mut out);
        }
    }
    Ok(out)
}

fn search_q(q: u64, bounds: SpeceqBounds, part: SpeceqPart, out: &mut Vec<SpeceqWitness>) {
    let primes: Vec<u64> = (2..=u64::from(bounds.m_max).max(5)).filter(|&l| is_prime(l)).collect();
    let win = windows(part, &primes);
    let mut factors = Vec::new();
    for i in 1..=bounds.m_max {
        let mut v = cyclotomic_value(i, q);
        let mut vals = vec![0i32; primes.len()];
        for (k, &l) in primes.iter().enumerate() {
            while (&v % l).is_zero() {
                v /= l;
                vals[k] += 1;
            }
        }
        if v.is_one() {
            factors.push(Factor { i, vals });
        }
    }
    let b = bounds.exp_bound;
    // reach[k][j]: largest |contribution| to prime j from factors k..
    let mut reach = vec![vec![0i64; primes.len()]; factors.len() + 1];
    for k in (0..factors.len()).rev() {
        for j in 0..primes.len() {
            reach[k][j] = reach[k + 1][j] + i64::from(b) * i64::from(factors[k].vals[j]);
        }
    }
    let ctx = Ctx { q, part, b, primes: &primes, win: &win, factors: &factors, reach: &reach };
    let mut exps = vec![0i32; factors.len()];
    let mut acc = vec![0i64; primes.len()];
    // Fix the largest nonzero index first, then fill the smaller ones.
    for top in 0..factors.len() {
        for a in (-b..=b).filter(|&a| a != 0) {
            exps[top] = a;
            for j in 0..primes.len() {
                acc[j] = i64::from(a) * i64::from(factors[top].vals[j]);
            }
            ctx.fill(top, 0, &mut exps, &mut acc, out);
        }
        exps[top] = 0;
    }
}

struct Ctx<'a> {
    q: u64,
    part: SpeceqPart,
    b: i32,
    primes: &'a [u64],
    win: &'a [(i32, i32)],
    factors: &'a [Factor],
    reach: &'a [Vec<i64>],
}

impl Ctx<'_> {
    /// Chooses exponents for factors `k..top`.
    fn fill(&self, top: usize, k: usize, exps: &mut [i32], acc: &mut [i64], out: &mut Vec<SpeceqWitness>) {
        // remaining freedom is factors k..top, bounded by reach[k] - reach[top]
        for j in 0..self.primes.len() {
            let r = self.reach[k][j] - self.reach[top][j];
            let (lo, hi) = self.win[j];
            if acc[j] + r < i64::from(lo) || acc[j] - r > i64::from(hi) {
                return;
            }
        }
        if k == top {
            self.emit(top, exps, acc, out);
            return;
        }
        for a in -self.b..=self.b {
            exps[k] = a;
            for j in 0..self.primes.len() {
                acc[j] += i64::from(a) * i64::from(self.factors[k].vals[j]);
            }
            self.fill(top, k + 1, exps, acc, out);
            for j in 0..self.primes.len() {
                acc[j] -= i64::from(a) * i64::from(self.factors[k].vals[j]);
            }
        }
        exps[k] = 0;
    }

    fn emit(&self, top: usize, exps: &[i32], acc: &[i64], out: &mut Vec<SpeceqWitness>) {
        let m = self.factors[top].i;
        let mut exponents = vec![0i32; m as usize];
        for (f, &a) in self.factors[..=top].iter().zip(exps) {
            exponents[f.i as usize - 1] = a;
        }
        let (mut n1, mut n2) = (BigUint::one(), BigUint::one());
        for (&l, &v) in self.primes.iter().zip(acc) {
            let pw = BigUint::from(l).pow(v.unsigned_abs() as u32);
            if v > 0 {
                n1 *= pw;
            } else {
                n2 *= pw;
            }
        }
        out.push(SpeceqWitness { part: self.part, q: self.q, m, exponents, n1, n2 });
    }
}

/// The `(m, q)` pairs that occur among the witnesses.
pub fn witness_pairs(witnesses: &[SpeceqWitness]) -> BTreeSet<(u32, u64)> {
    witnesses.iter().map(|w| (w.m, w.q)).collect()
}

/// Witnesses that fall outside the conclusion list for their part:
/// part (a) allows `(m,q) = (6,2)` with `a_3 = a_4 = a_5 = 0, a_6 = -a_2`,
/// `(m,q) = (2,3)`, or `m = 1` with `q - 1` a power of 2; part (b) allows
/// `m = 4, q in {2,3}`, `m = 2, q in {2,3,4,5,7,9,11}`, or `m = 1` with
/// `q - 1 | 120`.
pub fn conclusion_violations(witnesses: &[SpeceqWitness]) -> Vec<&SpeceqWitness> {
    witnesses.iter().filter(|w| !in_conclusion(w)).collect()
}

fn in_conclusion(w: &SpeceqWitness) -> bool {
    let a = |i: usize| w.exponents.get(i - 1).copied().unwrap_or(0);
    match w.part {
        SpeceqPart::A => {
            (w.m == 6 && w.q == 2 && a(3) == 0 && a(4) == 0 && a(5) == 0 && a(6) == -a(2))
                || (w.m == 2 && w.q == 3)
                || (w.m == 1 && (w.q - 1).is_power_of_two())
        }
        SpeceqPart::B => {
            (w.m == 4 && [2, 3].contains(&w.q))
                || (w.m == 2 && [2, 3, 4, 5, 7, 9, 11].contains(&w.q))
                || (w.m == 1 && 120 % (w.q - 1) == 0)
        }
    }
}

/// Count of witnesses per `(m, q)`.
pub fn witness_counts(witnesses: &[SpeceqWitness]) -> BTreeMap<(u32, u64), usize> {
    let mut out = BTreeMap::new();
    for w in witnesses {
        *out.entry((w.m, w.q)).or_insert(0) += 1;
    }
    out
}

/// Prime factorization of `n1 / n2` as signed exponents, for display.
pub fn ratio_factorization(w: &SpeceqWitness) -> Vec<(u64, i64)> {
    let mut out: BTreeMap<u64, i64> = BTreeMap::new();
    for (n, sign) in [(&w.n1, 1i64), (&w.n2, -1)] {
        let small: u64 = n.try_into().expect("witness integers are small");
        for (l, e) in factorize(small) {
            *out.entry(l).or_insert(0) += sign * i64::from(e);
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn bounds(q_max: u64, m_max: u32, exp_bound: i32) -> SpeceqBounds {
        SpeceqBounds { q_max, m_max, exp_bound }
    }

    /// Exhaustive product over every exponent vector, no pruning.
    fn brute(q: u64, m_max: u32, b: i32, part: SpeceqPart) -> BTreeSet<(u32, Vec<i32>)> {
        let mut out = BTreeSet::new();
        let len = m_max as usize;
        let mut exps = vec![-b; len];
        loop {
            if let Some(m) = exps.iter().rposition(|&a| a != 0) {
                let mut prod = BigRat::one();
                for (i, &a) in exps.iter().enumerate() {
                    let v = BigRat::from_integer(cyclotomic_value(i as u32 + 1, q).into());
                    prod *= if a >= 0 { v.pow(a) } else { v.recip().pow(-a) };
                }
                let (n1, n2) = (prod.numer().clone(), prod.denom().clone());
                let ok = match part {
                    SpeceqPart::A => {
                        n1.magnitude().count_ones() == 1 && n2.magnitude().count_ones() == 1
                    }
                    SpeceqPart::B => (BigInt::from(120) % &n1).is_zero() && (BigInt::from(120) % &n2).is_zero(),
                };
                if ok {
                    out.insert((m as u32 + 1, exps[..=m].to_vec()));
                }
            }
            let mut k = 0;
            while k < len && exps[k] == b {
                exps[k] = -b;
                k += 1;
            }
            if k == len {
                break;
            }
            exps[k] += 1;
        }
        out
    }

    #[test]
    fn pruned_search_matches_brute_force() {
        for part in [SpeceqPart::A, SpeceqPart::B] {
            for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 19] {
                let got: BTreeSet<(u32, Vec<i32>)> = speceq_search(bounds(q, 5, 2), part)
                    .unwrap()
                    .into_iter()
                    .filter(|w| w.q == q)
                    .map(|w| {
                        assert!(w.verify(), "{w:?}");
                        (w.m, w.exponents)
                    })
                    .collect();
                assert_eq!(got, brute(q, 5, 2, part), "q={q} part={part:?}");
            }
        }
    }

    #[test]
    fn part_a_contains_the_q2_m6_pattern() {
        let w = speceq_search(bounds(2, 6, 2), SpeceqPart::A).unwrap();
        let six: Vec<_> = w.iter().filter(|w| w.m == 6).collect();
        assert!(!six.is_empty());
        for w in six {
            let e = &w.exponents;
            assert_eq!((e[2], e[3], e[4]), (0, 0, 0));
            assert_eq!(e[5], -e[1]);
        }
    }

    #[test]
    fn ratio_is_lowest_terms_and_trivial_product_excluded() {
        // Phi_1(2) = 1, so a_1 != 0 alone gives n1 = n2 = 1 at m = 1
        let w = speceq_search(bounds(2, 1, 1), SpeceqPart::B).unwrap();
        assert_eq!(w.len(), 2);
        assert!(w.iter().all(|w| w.n1.is_one() && w.n2.is_one() && w.exponents[0] != 0));
        // 19 + 1 = 20 divides 120
        let w = speceq_search(bounds(19, 2, 1), SpeceqPart::B).unwrap();
        let hit = w.iter().find(|w| w.q == 19 && w.exponents == vec![0, 1]).unwrap();
        assert_eq!((hit.n1.clone(), hit.n2.clone()), (20u32.into(), 1u32.into()));
        assert_eq!(ratio_factorization(hit), vec![(2, 2), (5, 1)]);
        assert!(!in_conclusion(hit));
    }

    #[test]
    fn rejects_bad_bounds() {
        assert!(speceq_search(bounds(1, 3, 1), SpeceqPart::A).is_err());
        assert!(speceq_search(bounds(5, 0, 1), SpeceqPart::A).is_err());
        assert!(speceq_search(bounds(5, 3, 0), SpeceqPart::A).is_err());
    }
}
