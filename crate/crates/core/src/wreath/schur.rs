use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::arith::{padic_val, prime_power};
use crate::algebra::{BigRat, CycElt};
use crate::error::{Error, Result};

use super::{multipartition_of, ESymbol};

/// Parameters `(v; u_1, ..., u_e)` of a cyclotomic Hecke algebra of `G(e,1,r)`,
/// all in one cyclotomic field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSpec {
    v: CycElt,
    u: Vec<CycElt>,
}

impl ParamSpec {
    /// Lifts all values into a common field and checks that `v` and every
    /// `u_i` are nonzero and the `u_i` pairwise distinct.
    pub fn new(v: CycElt, u: Vec<CycElt>) -> Result<Self> {
        if u.is_empty() {
            return Err(Error::InvalidInput("at least one u parameter is required".into()));
        }
        let mut all = Vec::with_capacity(u.len() + 1);
        all.push(v);
        all.extend(u);
        let mut all = CycElt::into_common_field(&all)?;
        let u = all.split_off(1);
        let v = all.pop().expect("v present");
        if v.is_zero() || u.iter().any(CycElt::is_zero) {
            return Err(Error::InvalidInput("parameters must be nonzero".into()));
        }
        for i in 0..u.len() {
            for j in 0..i {
                if u[i] == u[j] {
                    return Err(Error::InvalidInput(format!("u_{} = u_{} = {}", j + 1, i + 1, u[i])));
                }
            }
        }
        Ok(ParamSpec { v, u })
    }

    pub fn rational(v: BigRat, u: Vec<BigRat>) -> Result<Self> {
        Self::new(CycElt::from_rational(1, v), u.into_iter().map(|c| CycElt::from_rational(1, c)).collect())
    }

    /// `v = 1`, `u_j = zeta_e^j` for `j = 1..e`.
    pub fn roots_of_unity(e: usize) -> Self {
        let u = (1..=e as i64).map(|j| CycElt::zeta_pow(e, j)).collect();
        Self::new(CycElt::one(e), u).expect("distinct roots of unity")
    }

    /// Parameters `(q^d; 1, q^{b_1 d + 1}, ..., q^{b_{d-1} d + d - 1})`.
    pub fn case_one(q: u64, d: usize, b: &[u64]) -> Result<Self> {
        if d < 2 || b.len() != d - 1 || q < 2 {
            return Err(Error::InvalidInput(format!("case (I) needs q >= 2, d >= 2 and d - 1 offsets, got q={q}, d={d}, b={b:?}")));
        }
        let qpow = |k: u64| BigRat::from_integer(BigInt::from(q).pow(k as u32));
        let mut u = vec![BigRat::one()];
        u.extend(b.iter().enumerate().map(|(k, &bk)| qpow(bk * d as u64 + k as u64 + 1)));
        Self::rational(qpow(d as u64), u)
    }

    pub fn v(&self) -> &CycElt {
        &self.v
    }

    pub fn u(&self) -> &[CycElt] {
        &self.u
    }

    pub fn e(&self) -> usize {
        self.u.len()
    }

    pub fn field_order(&self) -> usize {
        self.v.order()
    }
}

/// Running product of factors of the form `A v^a - B v^b`, tracking the order
/// of vanishing at `v = 1` instead of the (zero) value of singular factors.
struct Limit<'a> {
    params: &'a ParamSpec,
    v_is_one: bool,
    vpow: Vec<CycElt>,
    num: CycElt,
    den: CycElt,
    order: i64,
}

impl<'a> Limit<'a> {
    fn new(params: &'a ParamSpec) -> Self {
        let one = CycElt::one(params.field_order());
        Limit {
            params,
            v_is_one: params.v == one,
            vpow: vec![one.clone()],
            num: one.clone(),
            den: one,
            order: 0,
        }
    }

    fn v_pow(&mut self, k: usize) -> CycElt {
        while self.vpow.len() <= k {
            let next = self.vpow.last().expect("nonempty") * &self.params.v;
            self.vpow.push(next);
        }
        self.vpow[k].clone()
    }

    fn times(&mut self, c: &CycElt, in_denominator: bool) {
        if in_denominator {
            self.den = &self.den * c;
        } else {
            self.num = &self.num * c;
        }
    }

    /// Multiplies by `a_coef v^a - b_coef v^b` (or divides, when `in_denominator`).
    fn binomial(&mut self, a_coef: &CycElt, a: usize, b_coef: &CycElt, b: usize, in_denominator: bool) -> Result<()> {
        let value = &(a_coef * &self.v_pow(a)) - &(b_coef * &self.v_pow(b));
        if !value.is_zero() {
            self.times(&value, in_denominator);
            return Ok(());
        }
        if self.v_is_one && a_coef == b_coef && a != b {
            // c (v^a - v^b) = c (a - b) (v - 1) + O((v - 1)^2)
            let residual = a_coef * &CycElt::from_int(a_coef.order(), a as i64 - b as i64);
            self.times(&residual, in_denominator);
            self.order += if in_denominator { -1 } else { 1 };
            return Ok(());
        }
        Err(Error::Inadmissible(format!(
            "factor ({a_coef}) v^{a} - ({b_coef}) v^{b} vanishes at v = {}",
            self.params.v
        )))
    }

    fn finish(self) -> Result<CycElt> {
        match self.order {
            0 => self.num.div(&self.den),
            k if k > 0 => Err(Error::ZeroOfPositiveOrder { order: k as u64 }),
            k => Err(Error::Pole { order: k.unsigned_abs() }),
        }
    }
}

/// Value of the Schur element function `f_S` at `params`.
///
/// Factors that vanish at `v = 1` because both terms carry the same `u_i` are
/// replaced by their first derivative in `v`; the total order of vanishing must
/// cancel between numerator and denominator.
pub fn schur_value(symbol: &ESymbol, params: &ParamSpec) -> Result<CycElt> {
    let e = symbol.e();
    if params.e() != e {
        return Err(Error::InvalidInput(format!("symbol has {e} rows but {} u parameters were given", params.e())));
    }
    let inv = symbol.invariants();
    let (r, m) = (inv.rank, symbol.m());
    let u = params.u();
    let order = params.field_order();
    let one = CycElt::one(order);
    let mut acc = Limit::new(params);

    for _ in 0..r {
        acc.binomial(&one, 1, &one, 0, false)?;
    }
    for ui in u {
        acc.times(&ui.pow(r as i64)?, false);
    }
    let rows = symbol.rows();
    for i in 0..e {
        for j in i..e {
            for &s in &rows[i] {
                for &t in &rows[j] {
                    if i == j && s <= t {
                        continue;
                    }
                    acc.binomial(&u[i], s, &u[j], t, false)?;
                }
            }
        }
    }

    let va = acc.v_pow(inv.a as usize);
    acc.times(&va, true);
    for i in 0..e {
        for j in i + 1..e {
            acc.times(&(&u[i] - &u[j]).pow(m as i64)?, true);
        }
    }
    for i in 0..e {
        for &s in &rows[i] {
            for uj in u {
                for k in 1..=s {
                    acc.binomial(&u[i], k, uj, 0, true)?;
                }
            }
        }
    }

    let value = acc.finish()?;
    Ok(if inv.c % 2 == 1 { -&value } else { value })
}

/// `f_S(1; zeta_1, ..., zeta_e)` as an exact rational.
pub fn schur_specialize_roots(symbol: &ESymbol) -> Result<BigRat> {
    let params = ParamSpec::roots_of_unity(symbol.e());
    let value = schur_value(symbol, &params)?;
    value.as_rational().ok_or_else(|| Error::NotRational(value.to_string()))
}

/// Closed form of `f_S` for the linear character indexed by row `i` (1-based)
/// carrying `(r)`:
/// `prod_{k=1}^{r} (v - 1)/(v^k - 1) * prod_{j != i} u_j / (u_j - v^{k-1} u_i)`.
pub fn schur_linear(r: usize, i: usize, params: &ParamSpec) -> Result<CycElt> {
    let e = params.e();
    if i == 0 || i > e {
        return Err(Error::InvalidInput(format!("row index {i} outside 1..={e}")));
    }
    let u = params.u();
    let one = CycElt::one(params.field_order());
    let mut acc = Limit::new(params);
    for k in 1..=r {
        acc.binomial(&one, 1, &one, 0, false)?;
        acc.binomial(&one, k, &one, 0, true)?;
        for (j, uj) in u.iter().enumerate() {
            if j + 1 == i {
                continue;
            }
            acc.times(uj, false);
            acc.binomial(uj, 0, &u[i - 1], k - 1, true)?;
        }
    }
    acc.finish()
}

/// The symbol with `(r)` in row `i` (1-based) and `(0)` elsewhere.
pub fn linear_symbol(e: usize, r: usize, i: usize) -> ESymbol {
    let rows = (1..=e).map(|k| vec![if k == i { r } else { 0 }]).collect();
    ESymbol::new(rows).expect("single-entry rows")
}

/// `p`-adic valuation of a nonzero rational.
pub fn rational_valuation(x: &BigRat, p: u64) -> Result<i64> {
    let num = padic_val(x.numer(), p)? as i64;
    let den = padic_val(x.denom(), p)? as i64;
    Ok(num - den)
}

/// Linear-character Schur values for the two rows singled out by the case (I)
/// separation argument: row 1 (`u_1 = 1`) and the row with the largest `u_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseOneSeparation {
    pub q: u64,
    pub d: usize,
    pub r: usize,
    pub b: Vec<u64>,
    pub max_row: usize,
    #[serde(serialize_with = "crate::ser::display")]
    pub value_first: BigRat,
    #[serde(serialize_with = "crate::ser::display")]
    pub value_max: BigRat,
    pub valuation_first: i64,
    pub valuation_max: i64,
}

impl CaseOneSeparation {
    pub fn values_differ(&self) -> bool {
        self.value_first != self.value_max
    }

    pub fn valuations_differ(&self) -> bool {
        self.valuation_first != self.valuation_max
    }
}

pub fn case_one_separation(q: u64, d: usize, r: usize, b: &[u64]) -> Result<CaseOneSeparation> {
    let (prime, _) = prime_power(q).ok_or_else(|| Error::InvalidInput(format!("{q} is not a prime power")))?;
    let params = ParamSpec::case_one(q, d, b)?;
    let rational = |x: CycElt| x.as_rational().ok_or_else(|| Error::NotRational(x.to_string()));
    let max_row = params
        .u()
        .iter()
        .enumerate()
        .max_by_key(|(_, u)| u.as_rational().map(|c| c.abs()).unwrap_or_default())
        .map(|(k, _)| k + 1)
        .expect("d >= 2");
    let value_first = rational(schur_linear(r, 1, &params)?)?;
    let value_max = rational(schur_linear(r, max_row, &params)?)?;
    Ok(CaseOneSeparation {
        q,
        d,
        r,
        b: b.to_vec(),
        max_row,
        valuation_first: rational_valuation(&value_first, prime)?,
        valuation_max: rational_valuation(&value_max, prime)?,
        value_first,
        value_max,
    })
}

/// `e^r r! |f_S(1; zeta)|`, which should be the degree of the labelled character.
pub fn specialized_degree(symbol: &ESymbol) -> Result<BigRat> {
    let value = schur_specialize_roots(symbol)?;
    let nu = multipartition_of(symbol);
    let e = BigInt::from(nu.e());
    let order = e.pow(nu.rank() as u32) * BigInt::from(crate::algebra::arith::factorial(nu.rank()));
    let scaled = value.abs() * BigRat::from_integer(order);
    if scaled.is_zero() {
        return Err(Error::Internal(format!("vanishing specialization for {symbol}")));
    }
    Ok(scaled)
}
