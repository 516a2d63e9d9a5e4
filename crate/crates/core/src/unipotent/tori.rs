use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::arith::{cyclotomic_value, divisors};
use crate::algebra::{cyclotomic_poly, zsigmondy, Poly};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Series {
    A,
    #[serde(rename = "2A")]
    TwistedA,
    #[serde(rename = "B/C")]
    BC,
    D,
    #[serde(rename = "2D")]
    TwistedD,
    E6,
    #[serde(rename = "2E6")]
    TwistedE6,
    E7,
}

impl Series {
    pub const ALL: [Series; 8] =
        [Series::A, Series::TwistedA, Series::BC, Series::D, Series::TwistedD, Series::E6, Series::TwistedE6, Series::E7];

    /// Smallest rank with a table row.
    pub fn min_rank(self) -> usize {
        match self {
            Series::A => 1,
            Series::TwistedA | Series::BC => 2,
            Series::D | Series::TwistedD => 4,
            Series::E6 | Series::TwistedE6 => 6,
            Series::E7 => 7,
        }
    }

    pub fn is_exceptional(self) -> bool {
        matches!(self, Series::E6 | Series::TwistedE6 | Series::E7)
    }

    pub fn name(self) -> &'static str {
        match self {
            Series::A => "A",
            Series::TwistedA => "2A",
            Series::BC => "B/C",
            Series::D => "D",
            Series::TwistedD => "2D",
            Series::E6 => "E6",
            Series::TwistedE6 => "2E6",
            Series::E7 => "E7",
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        Ok(match t.as_str() {
            "A" => Series::A,
            "2A" => Series::TwistedA,
            "B" | "C" | "BC" | "B/C" => Series::BC,
            "D" => Series::D,
            "2D" => Series::TwistedD,
            "E6" => Series::E6,
            "2E6" => Series::TwistedE6,
            "E7" => Series::E7,
            _ => return Err(Error::InvalidInput(format!("unknown series {s:?}"))),
        })
    }
}

/// Two maximal tori of the dual group, as products of cyclotomic factors,
/// with the Zsigmondy indices `m_1, m_2` of the primes dividing them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToriEntry {
    pub series: Series,
    pub n: usize,
    /// Cyclotomic indices of `|T_1|`, with repetition.
    pub t1: Vec<usize>,
    pub t2: Vec<usize>,
    pub m1: u32,
    pub m2: u32,
}

/// Indices `d` with `Phi_d | x^k - 1`.
fn minus(k: usize) -> Vec<usize> {
    divisors(k as u64).into_iter().map(|d| d as usize).collect()
}

/// Indices `d` with `Phi_d | x^k + 1`.
fn plus(k: usize) -> Vec<usize> {
    let low = minus(k);
    minus(2 * k).into_iter().filter(|d| !low.contains(d)).collect()
}

fn without(mut v: Vec<usize>, d: usize) -> Vec<usize> {
    let pos = v.iter().position(|&x| x == d).expect("factor present");
    v.remove(pos);
    v
}

fn join(a: Vec<usize>, b: Vec<usize>) -> Vec<usize> {
    let mut v = a;
    v.extend(b);
    v.sort_unstable();
    v
}

impl ToriEntry {
    /// The row for `series` at rank `n`, respecting the parity splits and
    /// lower bounds of the tables.
    pub fn new(series: Series, n: usize) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("no table row for {series} at n = {n}"));
        if n < series.min_rank() {
            return Err(bad());
        }
        let sorted = |mut v: Vec<usize>| {
            v.sort_unstable();
            v
        };
        let (t1, t2, m1, m2) = match series {
            Series::A => (without(minus(n + 1), 1), minus(n), n + 1, n),
            Series::TwistedA if n % 2 == 0 => (without(plus(n + 1), 2), minus(n), 2 * n + 2, n),
            Series::TwistedA => {
                if n < 3 {
                    return Err(bad());
                }
                (without(minus(n + 1), 2), plus(n), n + 1, 2 * n)
            }
            Series::BC if n % 2 == 0 => (plus(n), join(plus(n - 1), vec![2]), 2 * n, 2 * n - 2),
            Series::BC => (plus(n), minus(n), 2 * n, n),
            Series::D if n % 2 == 0 => (join(minus(n - 1), vec![1]), join(plus(n - 1), vec![2]), n - 1, 2 * n - 2),
            Series::D => {
                if n < 5 {
                    return Err(bad());
                }
                (minus(n), join(plus(n - 1), vec![2]), n, 2 * n - 2)
            }
            Series::TwistedD => (plus(n), join(plus(n - 1), vec![1]), 2 * n, 2 * n - 2),
            Series::E6 | Series::TwistedE6 | Series::E7 => {
                let want = match series {
                    Series::E6 => 6,
                    _ => 7,
                };
                let want = if series == Series::TwistedE6 { 6 } else { want };
                if n != want {
                    return Err(bad());
                }
                match series {
                    Series::E6 => (vec![3, 12], vec![9], 12, 9),
                    Series::TwistedE6 => (vec![18], vec![6, 12], 18, 12),
                    _ => (vec![2, 18], vec![2, 14], 18, 14),
                }
            }
        };
        Ok(ToriEntry { series, n, t1: sorted(t1), t2: sorted(t2), m1: m1 as u32, m2: m2 as u32 })
    }

    pub fn t1_poly(&self) -> Poly {
        self.t1.iter().map(|&d| cyclotomic_poly(d)).product()
    }

    pub fn t2_poly(&self) -> Poly {
        self.t2.iter().map(|&d| cyclotomic_poly(d)).product()
    }

    /// Every row with `n <= n_max`.
    pub fn rows(n_max: usize) -> Vec<ToriEntry> {
        let mut out = Vec::new();
        for s in Series::ALL {
            for n in s.min_rank()..=n_max {
                if let Ok(e) = ToriEntry::new(s, n) {
                    out.push(e);
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusCheck {
    pub index: u8,
    #[serde(serialize_with = "crate::ser::display")]
    pub order: BigUint,
    pub m: u32,
    /// Smallest Zsigmondy prime of `q^m - 1`, if any.
    #[serde(serialize_with = "crate::ser::display_opt")]
    pub prime: Option<BigUint>,
    pub divides: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToriReport {
    pub series: Series,
    pub n: usize,
    pub q: u64,
    pub tori: [TorusCheck; 2],
}

impl ToriReport {
    /// Some torus has no Zsigmondy prime.
    pub fn is_exception(&self) -> bool {
        self.tori.iter().any(|t| t.prime.is_none())
    }

    /// A Zsigmondy prime exists but does not divide its torus.
    pub fn is_refutation(&self) -> bool {
        self.tori.iter().any(|t| t.divides == Some(false))
    }
}

fn torus_order(indices: &[usize], q: u64) -> BigUint {
    indices.iter().map(|&d| cyclotomic_value(d as u32, q)).product()
}

pub fn tori_check(entry: &ToriEntry, q: u64) -> Result<ToriReport> {
    if q < 2 {
        return Err(Error::InvalidInput(format!("q = {q} must be at least 2")));
    }
    let check = |index: u8, t: &[usize], m: u32| {
        let order = torus_order(t, q);
        let prime = zsigmondy(q, m).prime;
        let divides = prime.as_ref().map(|p| (&order % p).is_zero());
        TorusCheck { index, order, m, prime, divides }
    };
    Ok(ToriReport {
        series: entry.series,
        n: entry.n,
        q,
        tori: [check(1, &entry.t1, entry.m1), check(2, &entry.t2, entry.m2)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BigRat;

    fn xk(k: usize, c: i64) -> Poly {
        // x^k + c
        &Poly::monomial(BigRat::from_integer(1.into()), k) + &Poly::from_ints([c])
    }

    fn ex(a: &Poly, b: &Poly) -> Poly {
        a.exact_div(b).unwrap()
    }

    /// Closed forms of the table entries as polynomials.
    fn closed(series: Series, n: usize) -> (Poly, Poly) {
        let (q1, q1p) = (xk(1, -1), xk(1, 1));
        match series {
            Series::A => (ex(&xk(n + 1, -1), &q1), xk(n, -1)),
            Series::TwistedA if n % 2 == 0 => (ex(&xk(n + 1, 1), &q1p), xk(n, -1)),
            Series::TwistedA => (ex(&xk(n + 1, -1), &q1p), xk(n, 1)),
            Series::BC if n % 2 == 0 => (xk(n, 1), &xk(n - 1, 1) * &q1p),
            Series::BC => (xk(n, 1), xk(n, -1)),
            Series::D if n % 2 == 0 => (&xk(n - 1, -1) * &q1, &xk(n - 1, 1) * &q1p),
            Series::D => (xk(n, -1), &xk(n - 1, 1) * &q1p),
            Series::TwistedD => (xk(n, 1), &xk(n - 1, 1) * &q1),
            _ => unreachable!(),
        }
    }

    #[test]
    fn classical_rows_match_closed_forms() {
        for e in ToriEntry::rows(14) {
            if e.series.is_exceptional() {
                continue;
            }
            let (a, b) = closed(e.series, e.n);
            assert_eq!(e.t1_poly(), a, "{} n={}", e.series, e.n);
            assert_eq!(e.t2_poly(), b, "{} n={}", e.series, e.n);
        }
    }

    #[test]
    fn exceptional_rows() {
        let e = ToriEntry::new(Series::E7, 7).unwrap();
        assert_eq!((e.t1.clone(), e.m1), (vec![2, 18], 18));
        assert_eq!((e.t2.clone(), e.m2), (vec![2, 14], 14));
        assert!(ToriEntry::new(Series::E6, 7).is_err());
        assert!(ToriEntry::new(Series::TwistedE6, 6).is_ok());
    }

    #[test]
    fn row_bounds() {
        assert!(ToriEntry::new(Series::TwistedA, 1).is_err());
        assert!(ToriEntry::new(Series::TwistedA, 3).is_ok());
        assert!(ToriEntry::new(Series::D, 3).is_err());
        assert!(ToriEntry::new(Series::TwistedD, 3).is_err());
        assert!(ToriEntry::new(Series::BC, 1).is_err());
        assert!("F4".parse::<Series>().is_err());
        assert_eq!("c".parse::<Series>().unwrap(), Series::BC);
    }

    #[test]
    fn a_row_and_b2_at_three() {
        let e = ToriEntry::new(Series::A, 4).unwrap();
        assert_eq!(e.t2_poly(), xk(4, -1));
        assert_eq!(e.m2, 4);
        let r = tori_check(&ToriEntry::new(Series::BC, 2).unwrap(), 3).unwrap();
        assert_eq!(r.tori[0].order, BigUint::from(10u32));
        assert_eq!(r.tori[0].prime, Some(BigUint::from(5u32)));
        assert_eq!(r.tori[0].divides, Some(true));
        // q + 1 = 4 has no primitive prime
        assert_eq!(r.tori[1].prime, None);
        assert!(r.is_exception());
    }

    #[test]
    fn closed_form_values_by_integer_arithmetic() {
        for e in ToriEntry::rows(10) {
            for q in 2u64..=9 {
                let r = tori_check(&e, q).unwrap();
                assert!(!r.is_refutation());
                let v1 = e.t1_poly().eval_int(q as i64);
                assert_eq!(v1, BigRat::from_integer(r.tori[0].order.clone().into()));
            }
        }
    }
}
