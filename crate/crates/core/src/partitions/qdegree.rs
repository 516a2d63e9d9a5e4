use crate::algebra::{BigRat, Poly};
use crate::error::Result;

use super::Partition;

/// Generic degree of the unipotent character of `GL_n(q)` labelled by `partition`:
///
/// `x^b * prod_{k=1}^{n} (x^k - 1) / prod_{hooks h} (x^{l(h)} - 1)`, with
/// `b = sum (i-1) part_i`. Its value at `x = 1` is the `S_n` degree.
pub fn gl_degree_poly(partition: &Partition) -> Result<Poly> {
    let n = partition.size();
    let num: Poly = (1..=n).map(Poly::x_pow_minus_one).product();
    let den: Poly = partition.hook_lengths().into_iter().map(Poly::x_pow_minus_one).product();
    let quotient = num.exact_div(&den)?;
    Ok(&quotient * &Poly::monomial(BigRat::from_integer(1.into()), partition.b_invariant()))
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::partitions::enumerate_partitions;

    #[test]
    fn small_degree_polynomials() {
        assert_eq!(gl_degree_poly(&Partition::new(vec![4]).unwrap()).unwrap(), Poly::one());
        assert_eq!(gl_degree_poly(&Partition::new(vec![1, 1]).unwrap()).unwrap(), Poly::x());
        // (2,1) of GL_3 has degree q^2 + q
        assert_eq!(gl_degree_poly(&Partition::new(vec![2, 1]).unwrap()).unwrap(), Poly::from_ints([0, 1, 1]));
        assert_eq!(gl_degree_poly(&Partition::empty()).unwrap(), Poly::one());
    }

    #[test]
    fn specializes_to_hook_formula() {
        let one = BigRat::from_integer(1.into());
        for n in 0..=12 {
            for l in enumerate_partitions(n) {
                let poly = gl_degree_poly(&l).unwrap();
                let expect = BigRat::from_integer(BigInt::from(l.degree()));
                assert_eq!(poly.eval(&one), expect, "{l}");
                assert!(poly.is_integral());
            }
        }
    }
}
