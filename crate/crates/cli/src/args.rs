use std::fmt;
use std::str::FromStr;

use ehzd::algebra::arith::is_prime;

/// Inclusive range `A..B`, or a single value `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub lo: u64,
    pub hi: u64,
}

impl Span {
    pub fn iter(self) -> impl Iterator<Item = u64> {
        self.lo..=self.hi
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("bad integer {t:?}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => (num(s)?, num(s)?),
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(Span { lo, hi })
    }
}

pub fn prime(s: &str) -> Result<usize, String> {
    let p: u64 = s.trim().parse().map_err(|_| format!("bad integer {s:?}"))?;
    if !is_prime(p) {
        return Err(format!("{p} is not prime"));
    }
    Ok(p as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans() {
        assert_eq!("2..10".parse::<Span>().unwrap(), Span { lo: 2, hi: 10 });
        assert_eq!("2..=10".parse::<Span>().unwrap(), Span { lo: 2, hi: 10 });
        assert_eq!("7".parse::<Span>().unwrap(), Span { lo: 7, hi: 7 });
        assert!("10..2".parse::<Span>().is_err());
        assert!("a..2".parse::<Span>().is_err());
    }

    #[test]
    fn primes() {
        assert_eq!(prime("7").unwrap(), 7);
        assert!(prime("4").is_err());
        assert!(prime("x").is_err());
        assert!(prime("1").is_err());
    }
}
