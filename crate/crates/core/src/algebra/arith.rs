use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, PrimInt, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).first() == Some(&(n, 1))
}

/// `Some((p, f))` when `q = p^f` with `p` prime and `f >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    match factorize(q).as_slice() {
        [(p, f)] => Some((*p, *f)),
        _ => None,
    }
}

/// Moebius function.
pub fn mobius(n: u64) -> i32 {
    let f = factorize(n);
    if f.iter().any(|&(_, k)| k > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Legendre's formula for the exponent of `p` in `n!`.
pub fn legendre(n: u64, p: u64) -> u64 {
    let mut total = 0;
    let mut pk = p;
    while pk <= n {
        total += n / pk;
        match pk.checked_mul(p) {
            Some(next) => pk = next,
            None => break,
        }
    }
    total
}

/// Largest `k` with `p^k | n`.
pub fn padic_val(n: &BigInt, p: u64) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::InvalidInput("p-adic valuation of zero".into()));
    }
    if p < 2 {
        return Err(Error::InvalidInput(format!("{p} is not a prime")));
    }
    let p = BigInt::from(p);
    let mut cur = n.clone();
    let mut k = 0;
    loop {
        let (q, r) = cur.div_rem(&p);
        if !r.is_zero() {
            return Ok(k);
        }
        cur = q;
        k += 1;
    }
}

/// `p`-adic valuation of an unsigned value (convenience for degrees).
pub fn padic_val_uint(n: &BigUint, p: u64) -> Result<u64> {
    padic_val(&BigInt::from(n.clone()), p)
}

/// Result of a primitive prime divisor search for `q^m - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZsigmondyResult {
    pub q: u64,
    pub m: u32,
    #[serde(serialize_with = "opt_decimal")]
    pub prime: Option<BigUint>,
}

fn opt_decimal<S: Serializer>(v: &Option<BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_some(&x.to_string()),
        None => s.serialize_none(),
    }
}

/// Smallest divisor `> 1` of `n` in the progression `start, start + step, ...`,
/// or `n` itself if none is at most `sqrt(n)`.
fn least_divisor_in_progression<T: PrimInt>(n: T, start: T, step: T) -> T {
    let mut d = start;
    while d <= n / d {
        if n % d == T::zero() {
            return d;
        }
        d = d + step;
    }
    n
}

fn least_divisor_big(n: &BigUint, start: u64, step: u64) -> BigUint {
    if let Some(small) = n.to_u64() {
        return BigUint::from(least_divisor_in_progression(small, start, step));
    }
    if let Some(mid) = n.to_u128() {
        return BigUint::from(least_divisor_in_progression(mid, start as u128, step as u128));
    }
    let mut d = BigUint::from(start);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return d;
        }
        d += step;
    }
    n.clone()
}

/// Exact value of `Phi_m(q)` for integer `q`.
pub fn cyclotomic_value(m: u32, q: u64) -> BigUint {
    let phi = super::cyclotomic_poly(m as usize);
    let v = phi.eval_int(q as i64);
    v.to_integer().to_biguint().expect("Phi_m(q) > 0 for q >= 2")
}

fn is_primitive_divisor(prime: &BigUint, q: u64, m: u32) -> bool {
    let qq = BigUint::from(q) % prime;
    let mut pow = BigUint::one();
    for i in 1..=m {
        pow = (&pow * &qq) % prime;
        if pow.is_one() {
            return i == m;
        }
    }
    false
}

/// Smallest primitive prime divisor of `q^m - 1`: a prime dividing `q^m - 1`
/// but no `q^i - 1` with `1 <= i < m`.
///
/// Every prime factor of `Phi_m(q)` is either primitive or divides `m`, so the
/// primes of `m` are stripped first and the cofactor is searched by trial
/// division over the residue class `1 mod m`.
///
/// # Panics
///
/// Panics if `q < 2` or `m == 0`.
pub fn zsigmondy(q: u64, m: u32) -> ZsigmondyResult {
    assert!(q >= 2 && m >= 1, "zsigmondy requires q >= 2 and m >= 1");
    let mut cofactor = cyclotomic_value(m, q);
    for (l, _) in factorize(m as u64) {
        let l = BigUint::from(l);
        while (&cofactor % &l).is_zero() {
            cofactor /= &l;
        }
    }
    let prime = if cofactor.is_one() {
        None
    } else {
        let (start, step) = if m == 1 { (2, 1) } else { (m as u64 + 1, m as u64) };
        let p = least_divisor_big(&cofactor, start, step);
        assert!(is_primitive_divisor(&p, q, m), "primitive divisor check failed for q={q}, m={m}");
        Some(p)
    };
    ZsigmondyResult { q, m, prime }
}
