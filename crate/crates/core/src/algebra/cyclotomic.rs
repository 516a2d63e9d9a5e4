use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{One, Zero};

use super::arith::{divisors, mobius};
use super::{BigRat, Poly};
use crate::error::{Error, Result};

fn cache() -> &'static Mutex<HashMap<usize, Arc<Poly>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Poly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn shared_cyclotomic(i: usize) -> Arc<Poly> {
    assert!(i >= 1, "cyclotomic polynomials are indexed from 1");
    if let Some(p) = cache().lock().expect("cyclotomic cache poisoned").get(&i) {
        return Arc::clone(p);
    }
    // Moebius inversion of x^i - 1 = prod_{d | i} Phi_d
    let mut num = Poly::one();
    let mut den = Poly::one();
    for d in divisors(i as u64) {
        match mobius(i as u64 / d) {
            1 => num = &num * &Poly::x_pow_minus_one(d as usize),
            -1 => den = &den * &Poly::x_pow_minus_one(d as usize),
            _ => {}
        }
    }
    let phi = Arc::new(num.exact_div(&den).expect("x^i - 1 is a product of cyclotomic factors"));
    cache()
        .lock()
        .expect("cyclotomic cache poisoned")
        .entry(i)
        .or_insert_with(|| Arc::clone(&phi));
    phi
}

/// The `i`-th cyclotomic polynomial `Phi_i(x)`, with integer coefficients.
///
/// # Panics
///
/// Panics if `i == 0`.
pub fn cyclotomic_poly(i: usize) -> Poly {
    (*shared_cyclotomic(i)).clone()
}

/// Element of the cyclotomic field `Q(zeta_e)`, stored as a residue modulo `Phi_e`.
///
/// `coords[k]` is the coefficient of `zeta^k` with `zeta = exp(2 pi i / e)`;
/// there are exactly `deg Phi_e` coordinates. Order 1 (and 2) is just `Q`.
#[derive(Clone)]
pub struct CycElt {
    order: usize,
    coords: Vec<BigRat>,
    modulus: Arc<Poly>,
}

impl CycElt {
    fn from_reduced(order: usize, modulus: Arc<Poly>, p: &Poly) -> Self {
        let deg = modulus.degree().expect("cyclotomic polynomials are nonconstant");
        let coords = (0..deg).map(|k| p.coeff(k)).collect();
        CycElt { order, coords, modulus }
    }

    /// Reduces a polynomial in `zeta_e` into the field.
    pub fn from_poly(order: usize, p: &Poly) -> Self {
        let modulus = shared_cyclotomic(order);
        let r = p.rem(&modulus).expect("modulus is nonzero");
        Self::from_reduced(order, modulus, &r)
    }

    pub fn from_rational(order: usize, c: BigRat) -> Self {
        Self::from_poly(order, &Poly::constant(c))
    }

    pub fn from_int(order: usize, c: i64) -> Self {
        Self::from_rational(order, BigRat::from_integer(c.into()))
    }

    pub fn zero(order: usize) -> Self {
        Self::from_poly(order, &Poly::zero())
    }

    pub fn one(order: usize) -> Self {
        Self::from_int(order, 1)
    }

    /// `zeta_e^j`, any integer `j`.
    pub fn zeta_pow(order: usize, j: i64) -> Self {
        let k = j.rem_euclid(order as i64) as usize;
        Self::from_poly(order, &Poly::monomial(BigRat::one(), k))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coords(&self) -> &[BigRat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(self.coords.clone())
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRat> {
        if self.coords.iter().skip(1).all(Zero::is_zero) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    fn check_same_field(&self, other: &CycElt) {
        assert_eq!(
            self.order, other.order,
            "mixing elements of Q(zeta_{}) and Q(zeta_{}); lift to a common field first",
            self.order, other.order
        );
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against `Phi_e`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InvalidInput("inverse of zero in a cyclotomic field".into()));
        }
        let (mut r0, mut r1) = ((*self.modulus).clone(), self.to_poly());
        let (mut s0, mut s1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
        }
        let g = r0
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::Internal("cyclotomic polynomial is not irreducible?".into()))?;
        let inv = s0.scale(&g.recip());
        Ok(Self::from_poly(self.order, &inv))
    }

    pub fn div(&self, other: &CycElt) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = CycElt::one(self.order);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// Embeds `Q(zeta_e)` into `Q(zeta_L)` for `e | L`, sending `zeta_e` to `zeta_L^(L/e)`.
    pub fn lift(&self, new_order: usize) -> Result<Self> {
        if new_order % self.order != 0 {
            return Err(Error::InvalidInput(format!(
                "Q(zeta_{}) does not embed in Q(zeta_{new_order})",
                self.order
            )));
        }
        let step = new_order / self.order;
        let mut coeffs = vec![BigRat::zero(); step * self.coords.len().max(1)];
        for (k, c) in self.coords.iter().enumerate() {
            coeffs[k * step] = c.clone();
        }
        Ok(Self::from_poly(new_order, &Poly::new(coeffs)))
    }

    /// Lifts every element into the smallest cyclotomic field containing all of them.
    pub fn into_common_field(elts: &[CycElt]) -> Result<Vec<CycElt>> {
        let order = elts.iter().fold(1usize, |acc, x| acc.lcm(&x.order));
        elts.iter().map(|x| x.lift(order)).collect()
    }
}

impl PartialEq for CycElt {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.coords == other.coords
    }
}

impl Eq for CycElt {}

impl fmt::Display for CycElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_rational() {
            return write!(f, "{c}");
        }
        let shown = self.to_poly().to_string().replace('x', "z");
        write!(f, "{shown} (z = zeta_{})", self.order)
    }
}

impl fmt::Debug for CycElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycElt[{}]({})", self.order, self.to_poly())
    }
}

impl Add for &CycElt {
    type Output = CycElt;
    fn add(self, rhs: &CycElt) -> CycElt {
        self.check_same_field(rhs);
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect();
        CycElt { order: self.order, coords, modulus: Arc::clone(&self.modulus) }
    }
}

impl Sub for &CycElt {
    type Output = CycElt;
    fn sub(self, rhs: &CycElt) -> CycElt {
        self.check_same_field(rhs);
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect();
        CycElt { order: self.order, coords, modulus: Arc::clone(&self.modulus) }
    }
}

impl Mul for &CycElt {
    type Output = CycElt;
    fn mul(self, rhs: &CycElt) -> CycElt {
        self.check_same_field(rhs);
        let prod = &self.to_poly() * &rhs.to_poly();
        let r = prod.rem(&self.modulus).expect("modulus is nonzero");
        CycElt::from_reduced(self.order, Arc::clone(&self.modulus), &r)
    }
}

impl Neg for &CycElt {
    type Output = CycElt;
    fn neg(self) -> CycElt {
        let coords = self.coords.iter().map(|a| -a).collect();
        CycElt { order: self.order, coords, modulus: Arc::clone(&self.modulus) }
    }
}
