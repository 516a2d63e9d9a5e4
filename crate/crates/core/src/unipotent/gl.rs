use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use serde::Serialize;

use crate::algebra::{cyclotomic_poly, BigRat, CycElt, Poly};
use crate::error::{Error, Result};
use crate::partitions::{core_and_quotient, enumerate_partitions, gl_degree_poly, Partition};
use crate::wreath::{wreath_degree, Multipartition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreePolyEntry {
    pub n: usize,
    pub partition: Partition,
    pub poly: Poly,
}

/// Degree polynomials of the unipotent characters of `GL_n(q)`, one per
/// partition, in reverse-lex order.
pub fn unipotent_degrees_gl(n: usize) -> Result<Vec<DegreePolyEntry>> {
    enumerate_partitions(n)
        .into_iter()
        .map(|partition| Ok(DegreePolyEntry { n, poly: gl_degree_poly(&partition)?, partition }))
        .collect()
}

/// `d`-Harish-Chandra series of `GL_n`: partitions grouped by `d`-core.
/// Keys are cores, members keep reverse-lex order.
pub fn dhc_series_gl(n: usize, d: usize) -> Result<BTreeMap<Partition, Vec<Partition>>> {
    if d == 0 {
        return Err(Error::InvalidInput("d must be positive".into()));
    }
    let mut out: BTreeMap<Partition, Vec<Partition>> = BTreeMap::new();
    for l in enumerate_partitions(n) {
        out.entry(core_and_quotient(&l, d).core).or_default().push(l);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HllMember {
    pub partition: Partition,
    pub quotient: Multipartition,
    /// `phi(1)` for the character of `G(d,1,w)` labelled by the quotient.
    #[serde(serialize_with = "crate::ser::display")]
    pub phi_degree: BigUint,
    /// Multiplicity of `Phi_d` in `Deg(gamma_pi)` and in the degree of the core.
    pub phi_d_multiplicity: (u32, u32),
    /// `Deg(gamma_pi) / Deg(gamma_mu)` reduced mod `Phi_d`, when it is rational.
    #[serde(serialize_with = "crate::ser::display_opt")]
    pub constant: Option<BigRat>,
    pub sign: Option<Sign>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HllSeries {
    pub core: Partition,
    pub weight: usize,
    /// `|W_G(L) : W_G(L, lambda)|`, which is 1: every unipotent character of
    /// `L = GL_r x GL_1(q^d)^w` is stable under `N_G(L)`.
    pub index: u64,
    /// `|constant| / phi(1)`, when it is the same for every member.
    #[serde(serialize_with = "crate::ser::display_opt")]
    pub observed_ratio: Option<BigRat>,
    pub members: Vec<HllMember>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HllReport {
    pub n: usize,
    pub d: usize,
    pub series: Vec<HllSeries>,
    pub failures: usize,
    pub plus: usize,
    pub minus: usize,
}

/// Checks `Deg(gamma_pi) / Deg(gamma_mu) = +-phi(1) mod Phi_d` on every
/// `d`-series of `GL_n`, where `mu` is the `d`-core of `pi` and `phi` the
/// character of `G(d,1,w)` labelled by the `d`-quotient. The index of the
/// relative Weyl group in `W_G(L)` is 1 here.
///
/// The two degrees carry the same power of `Phi_d`; after removing it the
/// ratio is reduced in `Q(zeta_d)` and must be a rational constant.
const INDEX: u64 = 1;

pub fn hll_check_gl(n: usize, d: usize) -> Result<HllReport> {
    let phi_d = cyclotomic_poly(d);
    let mut report = HllReport { n, d, series: Vec::new(), failures: 0, plus: 0, minus: 0 };
    for (core, parts) in dhc_series_gl(n, d)? {
        let (core_stripped, core_mult) = gl_degree_poly(&core)?.strip_factor(&phi_d)?;
        let core_val = CycElt::from_poly(d, &core_stripped);
        let mut members = Vec::new();
        for l in parts {
            let cq = core_and_quotient(&l, d);
            let quotient = Multipartition::new(cq.quotient);
            let phi_degree = wreath_degree(&quotient);
            let (stripped, mult) = gl_degree_poly(&l)?.strip_factor(&phi_d)?;
            let constant = if mult == core_mult {
                CycElt::from_poly(d, &stripped).div(&core_val)?.as_rational()
            } else {
                None
            };
            let target = BigRat::from_integer(BigInt::from(phi_degree.clone()) * INDEX);
            let sign = constant.as_ref().and_then(|c| {
                if c.abs() != target {
                    None
                } else if c.is_positive() {
                    Some(Sign::Plus)
                } else {
                    Some(Sign::Minus)
                }
            });
            match sign {
                Some(Sign::Plus) => report.plus += 1,
                Some(Sign::Minus) => report.minus += 1,
                None => report.failures += 1,
            }
            members.push(HllMember {
                partition: l,
                quotient,
                phi_degree,
                phi_d_multiplicity: (mult, core_mult),
                constant,
                sign,
                ok: sign.is_some(),
            });
        }
        let ratios: Vec<Option<BigRat>> = members
            .iter()
            .map(|m| m.constant.as_ref().map(|c| c.abs() / BigRat::from_integer(m.phi_degree.clone().into())))
            .collect();
        let observed_ratio = match ratios.first() {
            Some(Some(r)) if ratios.iter().all(|x| x.as_ref() == Some(r)) => Some(r.clone()),
            _ => None,
        };
        let weight = (n - core.size()) / d;
        report.series.push(HllSeries { core, weight, index: INDEX, observed_ratio, members });
    }
    Ok(report)
}

/// Unordered pairs of partitions of `n` whose degree polynomials differ but
/// agree at `q`.
pub fn degree_collisions(n: usize, q: u64) -> Result<Vec<(Partition, Partition)>> {
    let entries = unipotent_degrees_gl(n)?;
    let x = BigRat::from_integer((q as i64).into());
    let mut by_value: BTreeMap<BigRat, Vec<usize>> = BTreeMap::new();
    for (k, e) in entries.iter().enumerate() {
        by_value.entry(e.poly.eval(&x)).or_default().push(k);
    }
    let mut out = Vec::new();
    for idx in by_value.values() {
        for (a, &i) in idx.iter().enumerate() {
            for &j in &idx[a + 1..] {
                if entries[i].poly != entries[j].poly {
                    out.push((entries[i].partition.clone(), entries[j].partition.clone()));
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn degrees_for_gl2() {
        let e = unipotent_degrees_gl(2).unwrap();
        assert_eq!(e[0].partition, p(&[2]));
        assert_eq!(e[0].poly, Poly::one());
        assert_eq!(e[1].poly, Poly::x());
        let at_one: Vec<BigRat> = unipotent_degrees_gl(3).unwrap().iter().map(|e| e.poly.eval_int(1)).collect();
        let want: Vec<BigRat> = [1, 2, 1].iter().map(|&k| BigRat::from_integer(k.into())).collect();
        assert_eq!(at_one, want);
    }

    #[test]
    fn series_examples() {
        let s = dhc_series_gl(2, 2).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[&Partition::empty()], vec![p(&[2]), p(&[1, 1])]);
        for n in 1..=6 {
            let s = dhc_series_gl(n, n + 1).unwrap();
            assert!(s.values().all(|v| v.len() == 1));
            let total: usize = dhc_series_gl(n, 2).unwrap().values().map(Vec::len).sum();
            assert_eq!(total, enumerate_partitions(n).len());
        }
        assert!(dhc_series_gl(3, 0).is_err());
    }

    #[test]
    fn hll_for_gl2_mod_phi2() {
        let r = hll_check_gl(2, 2).unwrap();
        assert_eq!(r.failures, 0);
        let m = &r.series[0].members;
        // trivial: 1; Steinberg: x = -1 mod x + 1
        assert_eq!(m[0].constant, Some(BigRat::from_integer(1.into())));
        assert_eq!(m[1].constant, Some(BigRat::from_integer((-1).into())));
        assert_eq!((r.plus, r.minus), (1, 1));
    }

    #[test]
    fn hll_small_range() {
        for n in 1..=7 {
            for d in 1..=4 {
                let r = hll_check_gl(n, d).unwrap();
                for s in &r.series {
                    if s.weight == 0 {
                        assert_eq!(s.members[0].constant, Some(BigRat::one()));
                    }
                    for m in &s.members {
                        assert_eq!(m.phi_d_multiplicity.0, m.phi_d_multiplicity.1);
                        assert!(m.constant.is_some());
                    }
                    // the constant is +-binom(floor(n/d), w) phi(1) throughout
                    let b = num_integer::binomial(n / d, s.weight);
                    assert_eq!(s.observed_ratio, Some(BigRat::from_integer(b.into())), "n={n} d={d} core {}", s.core);
                    assert_eq!(s.members.iter().all(|m| m.ok), b == 1);
                }
            }
        }
    }

    #[test]
    fn hll_fails_over_a_core_with_a_d_hook_free_quotient() {
        // Deg(4,1) / Deg(2,1) = x^2 + 1, which is 2 mod x + 1, while phi(1) = 1.
        let r = hll_check_gl(5, 2).unwrap();
        let s = r.series.iter().find(|s| s.core == p(&[2, 1])).unwrap();
        assert_eq!(s.members[0].partition, p(&[4, 1]));
        assert_eq!(s.members[0].constant, Some(BigRat::from_integer(2.into())));
        assert!(!s.members[0].ok);
        assert_eq!(r.failures, 2);
    }

    /// Degrees evaluated as integers from the q-hook formula, independent of
    /// the polynomial code.
    fn degree_at(l: &Partition, q: u64) -> BigInt {
        let q = BigInt::from(q);
        let n = l.size();
        let mut num = q.pow(l.b_invariant() as u32);
        for k in 1..=n {
            num *= q.pow(k as u32) - 1;
        }
        let mut den = BigInt::from(1);
        for h in l.hook_lengths() {
            den *= q.pow(h as u32) - 1;
        }
        assert_eq!(&num % &den, BigInt::from(0));
        num / den
    }

    #[test]
    fn collisions_match_brute_force() {
        for n in 1..=8 {
            for q in [2u64, 3, 4, 5] {
                let parts = enumerate_partitions(n);
                let mut want = Vec::new();
                for i in 0..parts.len() {
                    for j in i + 1..parts.len() {
                        let same_value = degree_at(&parts[i], q) == degree_at(&parts[j], q);
                        let same_poly = gl_degree_poly(&parts[i]).unwrap() == gl_degree_poly(&parts[j]).unwrap();
                        if same_value && !same_poly {
                            want.push((parts[i].clone(), parts[j].clone()));
                        }
                    }
                }
                want.sort();
                assert_eq!(degree_collisions(n, q).unwrap(), want, "n={n} q={q}");
            }
        }
        assert!(degree_collisions(2, 7).unwrap().is_empty());
    }
}
