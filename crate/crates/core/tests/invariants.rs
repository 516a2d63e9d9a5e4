use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

use ehzd::algebra::arith::{factorial, factorize, padic_val_uint};
use ehzd::blocks::{blocks_an, blocks_sn, linear_member_degrees, relative_hook_ratio};
use ehzd::partitions::{combine, core_and_quotient, cores_of_size, enumerate_partitions, Partition};
use ehzd::wreath::{case_one_separation, cyclic_config_test, enumerate_multipartitions};
use ehzd::{zsigmondy, BigRat, CycElt};

#[test]
fn core_and_quotient_commute_with_conjugation() {
    // conjugating reverses the quotient and conjugates each component
    for n in 0..=14 {
        for l in enumerate_partitions(n) {
            for p in [2, 3, 5] {
                let a = core_and_quotient(&l, p);
                let b = core_and_quotient(&l.conjugate(), p);
                assert_eq!(b.core, a.core.conjugate());
                let mut q: Vec<Partition> = a.quotient.iter().map(Partition::conjugate).collect();
                q.reverse();
                assert_eq!(b.quotient, q, "{l} p={p}");
            }
        }
    }
}

#[test]
fn combine_is_a_bijection_onto_the_block() {
    for p in [2, 3, 5] {
        for r in 0..=8 {
            for core in cores_of_size(r, p) {
                for w in 0..=3 {
                    let mut seen = BTreeSet::new();
                    for nu in enumerate_multipartitions(p, w) {
                        let l = combine(&core, nu.components(), p).unwrap();
                        assert_eq!(l.size(), r + p * w);
                        let cq = core_and_quotient(&l, p);
                        assert_eq!(cq.core, core);
                        assert_eq!(cq.quotient.as_slice(), nu.components());
                        seen.insert(l);
                    }
                    let block = blocks_sn(r + p * w, p)
                        .unwrap()
                        .into_iter()
                        .find(|b| b.label.core == core)
                        .expect("block present");
                    let want: BTreeSet<_> = block.members.into_iter().map(|m| m.partition).collect();
                    assert_eq!(seen, want);
                }
            }
        }
    }
}

#[test]
fn hook_ratio_is_p_integral() {
    for n in 0..=18 {
        for p in [2u64, 3, 5, 7] {
            for l in enumerate_partitions(n) {
                let r = relative_hook_ratio(&l, p as usize).unwrap();
                assert!(!r.denom().is_multiple_of(&BigInt::from(p)), "{l} p={p}: {r}");
            }
        }
    }
}

#[test]
fn linear_members_have_height_zero() {
    for p in [3usize, 5] {
        for r in 0..=6 {
            for core in cores_of_size(r, p) {
                for w in 1..=2 {
                    let block = blocks_sn(r + p * w, p)
                        .unwrap()
                        .into_iter()
                        .find(|b| b.label.core == core)
                        .expect("block present");
                    for lm in linear_member_degrees(&core, w, p).unwrap() {
                        let m = block.members.iter().find(|m| m.partition == lm.partition).expect("member");
                        assert_eq!(m.degree, lm.degree);
                        assert_eq!(m.height, 0, "{} in core {core}", lm.partition);
                    }
                }
            }
        }
    }
}

/// Primes of `q^m - 1` that divide no `q^i - 1` with `i < m`, found by
/// stripping every common factor with `gcd`.
fn primitive_part(q: u64, m: u32) -> u128 {
    let q = q as u128;
    let mut n = q.pow(m) - 1;
    for i in 1..m {
        let other = q.pow(i) - 1;
        loop {
            let g = n.gcd(&other);
            if g == 1 {
                break;
            }
            n /= g;
        }
    }
    n
}

#[test]
fn zsigmondy_matches_gcd_stripping() {
    for q in 2u64..=50 {
        for m in 1u32..=12 {
            let part = primitive_part(q, m);
            let got = zsigmondy(q, m).prime;
            if part == 1 {
                assert_eq!(got, None, "q={q} m={m}");
                continue;
            }
            let prime: u128 = got.expect("a primitive prime").try_into().unwrap();
            assert_eq!(part % prime, 0, "q={q} m={m}");
            // least and prime, as far as trial division reaches
            let limit = prime.min(1 << 16);
            assert!((2..limit).all(|d| part % d != 0), "q={q} m={m}: {prime} is not least");
            assert!((2..limit).take_while(|d| d * d <= prime).all(|d| prime % d != 0));
        }
    }
    // the classical exceptions
    assert_eq!(zsigmondy(2, 6).prime, None);
    assert_eq!(zsigmondy(7, 2).prime, None);
    assert_eq!(zsigmondy(2, 1).prime, None);
}

#[test]
fn alternating_blocks_cover_irr_an() {
    for n in 2..=16 {
        let sd = enumerate_partitions(n).iter().filter(|l| l.is_self_dual()).count();
        let want = (enumerate_partitions(n).len() - sd) / 2 + 2 * sd;
        let order = factorial(n) / 2u32;
        for p in [3, 5, 7] {
            let blocks = blocks_an(n, p).unwrap();
            let k: usize = blocks.iter().map(|b| b.data.members.len()).sum();
            assert_eq!(k, want, "n={n} p={p}");
            let ov = padic_val_uint(&order, p as u64).unwrap();
            for b in &blocks {
                let min_val = b.data.members.iter().map(|m| padic_val_uint(&m.degree, p as u64).unwrap()).min().unwrap();
                assert_eq!(b.data.defect, ov - min_val);
                assert_eq!(b.data.defect, padic_val_uint(&factorial(p * b.data.label.weight), p as u64).unwrap());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn case_one_rows_separate(q in prop::sample::select(vec![2u64, 3, 4, 5]), d in 2usize..=4, r in 1usize..=4,
                              b in prop::collection::vec(0u64..4, 3)) {
        let s = case_one_separation(q, d, r, &b[..d - 1]).unwrap();
        prop_assert!(s.values_differ());
    }

    #[test]
    fn random_rational_tuples_are_not_cyclic(raw in prop::collection::vec((-40i64..=40, 1i64..=12), 2..=4)) {
        let u: Vec<BigRat> = raw.iter().map(|&(a, b)| BigRat::new(a.into(), b.into())).collect();
        let distinct: BTreeSet<_> = u.iter().cloned().collect();
        prop_assume!(distinct.len() == u.len() && u.iter().all(|x| *x != BigRat::from_integer(0.into())));
        // the only rational cosets of mu_e are {y, -y}
        prop_assume!(!(u.len() == 2 && u[0] == -u[1].clone()));
        let elts: Vec<CycElt> = u.into_iter().map(|c| CycElt::from_rational(1, c)).collect();
        prop_assert!(!cyclic_config_test(&elts).unwrap().is_constant());
    }
}

#[test]
fn factorization_roundtrip() {
    for n in 1u64..=2000 {
        let back: u64 = factorize(n).iter().map(|&(p, k)| p.pow(k)).product();
        assert_eq!(back, n);
    }
}
