use serde::Serialize;

use crate::algebra::CycElt;
use crate::error::{Error, Result};

/// Outcome of testing whether `prod_{k != i} u_k / (u_k - u_i)` is independent of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum CyclicVerdict {
    /// All values agree. `roots_of_unity` records whether every `u_i / u_1`
    /// is an `e`-th root of unity, so that `{u_i} = y * mu_e`.
    Constant {
        #[serde(serialize_with = "crate::ser::display")]
        value: CycElt,
        roots_of_unity: bool,
    },
    /// Rows `1` and `j` (1-based) give different values.
    NonConstant {
        j: usize,
        #[serde(serialize_with = "crate::ser::display")]
        first: CycElt,
        #[serde(serialize_with = "crate::ser::display")]
        other: CycElt,
    },
}

impl CyclicVerdict {
    pub fn is_constant(&self) -> bool {
        matches!(self, CyclicVerdict::Constant { .. })
    }
}

/// Rank-one Schur values `prod_{k != i} u_k / (u_k - u_i)` for each `i`.
pub fn cyclic_values(u: &[CycElt]) -> Result<Vec<CycElt>> {
    let u = CycElt::into_common_field(u)?;
    if u.iter().any(CycElt::is_zero) {
        return Err(Error::InvalidInput("cyclic parameters must be nonzero".into()));
    }
    (0..u.len())
        .map(|i| {
            let order = u[i].order();
            let mut num = CycElt::one(order);
            let mut den = CycElt::one(order);
            for (k, uk) in u.iter().enumerate() {
                if k == i {
                    continue;
                }
                let diff = uk - &u[i];
                if diff.is_zero() {
                    return Err(Error::InvalidInput(format!("u_{} = u_{}", k + 1, i + 1)));
                }
                num = &num * uk;
                den = &den * &diff;
            }
            num.div(&den)
        })
        .collect()
}

/// Decides constancy of the rank-one Schur values and, when constant, checks
/// that the parameters form a coset of the `e`-th roots of unity.
pub fn cyclic_config_test(u: &[CycElt]) -> Result<CyclicVerdict> {
    let values = cyclic_values(u)?;
    if let Some(j) = values.iter().position(|v| *v != values[0]) {
        return Ok(CyclicVerdict::NonConstant { j: j + 1, first: values[0].clone(), other: values[j].clone() });
    }
    let u = CycElt::into_common_field(u)?;
    let e = u.len() as i64;
    let one = CycElt::one(u[0].order());
    let mut roots = true;
    for ui in &u {
        roots &= ui.div(&u[0])?.pow(e)? == one;
    }
    Ok(CyclicVerdict::Constant { value: values[0].clone(), roots_of_unity: roots })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BigRat;

    fn q(n: i64) -> CycElt {
        CycElt::from_int(1, n)
    }

    #[test]
    fn square_roots_of_unity() {
        match cyclic_config_test(&[q(1), q(-1)]).unwrap() {
            CyclicVerdict::Constant { value, roots_of_unity } => {
                assert_eq!(value.as_rational(), Some(BigRat::new(1.into(), 2.into())));
                assert!(roots_of_unity);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_constant_pair() {
        match cyclic_config_test(&[q(1), q(2)]).unwrap() {
            CyclicVerdict::NonConstant { j, first, other } => {
                assert_eq!(j, 2);
                assert_eq!(first, q(2));
                assert_eq!(other, q(-1));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn scaled_cube_roots() {
        let five = CycElt::from_int(3, 5);
        let u = [five.clone(), &five * &CycElt::zeta_pow(3, 1), &five * &CycElt::zeta_pow(3, 2)];
        let verdict = cyclic_config_test(&u).unwrap();
        assert!(matches!(verdict, CyclicVerdict::Constant { roots_of_unity: true, .. }));
    }

    #[test]
    fn mixed_fields_are_lifted() {
        // 1 (rational), i (in Q(zeta_4)), -1, -i
        let u = [q(1), CycElt::zeta_pow(4, 1), CycElt::from_int(2, -1), CycElt::zeta_pow(4, 3)];
        assert!(cyclic_config_test(&u).unwrap().is_constant());
    }

    #[test]
    fn rejects_degenerate_input() {
        assert!(cyclic_config_test(&[q(1), q(1)]).is_err());
        assert!(cyclic_config_test(&[q(0), q(1)]).is_err());
    }
}
