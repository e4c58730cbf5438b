//! The library checked against the brute-force references in `common`.

mod common;

use common::*;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::Rng;
use recipmono::arith::{factor_int, is_prime_u64, is_squarefree_int, primes_up_to, Effort};
use recipmono::disc::{discriminant, lemma_disc_identity, resultant, sylvester_resultant};
use recipmono::modp::{factor_mod_p, ModPoly};
use recipmono::monogenic::{dedekind_index_test, ideal_square_membership, ideal_square_witnesses};
use recipmono::poly::{chebyshev_c, cyclotomic_2aqb, half_to_reciprocal, reciprocal_to_half};
use recipmono::IntPoly;

#[test]
fn integer_factorization_matches_trial_division() {
    let effort = Effort::default();
    let mut r = rng(11);
    let mut samples: Vec<u64> = (1..3000).collect();
    samples.extend((0..3000).map(|_| r.gen_range(1..=1_000_000)));
    samples.extend([999_983, 999_962, 1_000_000, 524_288, 998_001, 4_012_009]);
    for n in samples {
        let fac = factor_int(&BigInt::from(n), &effort);
        let got: Vec<(u64, u32)> = fac
            .factors
            .iter()
            .map(|(p, e)| (u64::try_from(p).unwrap(), *e))
            .collect();
        assert!(fac.is_complete(), "{n}");
        assert_eq!(got, naive_factor(n), "{n}");
        assert_eq!(
            is_squarefree_int(&BigInt::from(n), &effort).is_squarefree(),
            naive_squarefree(n),
            "{n}"
        );
    }
}

#[test]
fn primality_matches_trial_division() {
    for n in 0..20_000u64 {
        assert_eq!(is_prime_u64(n), naive_is_prime(n), "{n}");
    }
    let sieve = primes_up_to(5000);
    let naive: Vec<u64> = (0..=5000).filter(|&n| naive_is_prime(n)).collect();
    assert_eq!(sieve, naive);
}

#[test]
fn large_semiprime_and_square() {
    let effort = Effort::default();
    let a = BigInt::from(1_000_000_007u64);
    let b = BigInt::from(998_244_353u64);
    let fac = factor_int(&(&a * &b), &effort);
    assert!(fac.is_complete());
    assert_eq!(fac.factors.len(), 2);
    let sq = &a * &a * &b;
    let v = is_squarefree_int(&sq, &effort);
    assert!(!v.is_squarefree());
    assert_eq!(
        v,
        recipmono::arith::SquarefreeVerdict::NotSquarefree(Some(BigUint::from(1_000_000_007u64)))
    );
}

fn lib_factor(f: &IntPoly, p: u64) -> (u64, Vec<(Vec<u64>, u32)>) {
    let fac = factor_mod_p(&ModPoly::from_int(f, p)).unwrap();
    (
        fac.unit,
        fac.factors
            .iter()
            .map(|(g, e)| (g.coeffs().to_vec(), *e))
            .collect(),
    )
}

#[test]
fn factoring_mod_p_matches_exhaustive_search() {
    let mut r = rng(12);
    for p in [2u64, 3, 5, 7] {
        for _ in 0..120 {
            let n = r.gen_range(1..=7);
            let mut c: Vec<i64> = (0..=n).map(|_| r.gen_range(0..p as i64)).collect();
            c[n] = r.gen_range(1..p as i64);
            let f = IntPoly::from_i64s(&c);
            assert_eq!(lib_factor(&f, p), fp_factor_exhaustive(&fp_reduce(&f, p), p), "{f} mod {p}");
        }
    }
    // deliberately repeated factors
    for p in [2u64, 3, 5] {
        let f = p_pow(&IntPoly::from_i64s(&[1, 1]), 4) * IntPoly::from_i64s(&[1, 0, 1]).pow(2);
        assert_eq!(lib_factor(&f, p), fp_factor_exhaustive(&fp_reduce(&f, p), p));
    }
}

fn p_pow(f: &IntPoly, e: u32) -> IntPoly {
    f.pow(e)
}

#[test]
fn resultant_matches_sylvester_determinant() {
    let mut r = rng(13);
    for _ in 0..200 {
        let da = r.gen_range(0..=7);
        let db = r.gen_range(0..=7);
        let mut a: Vec<i64> = (0..=da).map(|_| r.gen_range(-9..=9)).collect();
        let mut b: Vec<i64> = (0..=db).map(|_| r.gen_range(-9..=9)).collect();
        a[da] = r.gen_range(1..=4);
        b[db] = -r.gen_range(1..=4);
        let (a, b) = (IntPoly::from_i64s(&a), IntPoly::from_i64s(&b));
        assert_eq!(resultant(&a, &b).unwrap(), sylvester_resultant(&a, &b).unwrap(), "{a} , {b}");
    }
}

#[test]
fn discriminant_matches_sylvester_formula() {
    let mut r = rng(14);
    for _ in 0..150 {
        let n = r.gen_range(2..=8);
        let f = random_monic(&mut r, n, 6);
        let res = sylvester_resultant(&f, &f.derivative()).unwrap();
        let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
        assert_eq!(discriminant(&f).unwrap(), res * sign, "{f}");
    }
}

#[test]
fn transform_matches_rational_evaluation() {
    let mut r = rng(15);
    for _ in 0..100 {
        let n = r.gen_range(1..=12);
        let mut c: Vec<i64> = (0..=n).map(|_| r.gen_range(-20..=20)).collect();
        c[n] = r.gen_range(1..=3);
        let g = IntPoly::from_i64s(&c);
        let f = half_to_reciprocal(&g, n).unwrap();
        for x0 in (-10i64..=10).filter(|&x| x != 0) {
            let x = BigRational::from(BigInt::from(x0));
            let u = &x + BigRational::new(1.into(), BigInt::from(x0));
            let rhs = rational_pow(&x, n) * eval_rational(&g, &u);
            assert_eq!(BigRational::from(f.eval_i64(x0)), rhs, "{g} at {x0}");
        }
        assert_eq!(reciprocal_to_half(&f).unwrap(), g);
    }
}

#[test]
fn chebyshev_matches_rational_identity() {
    let mut r = rng(16);
    for j in 0..=12 {
        let c = chebyshev_c(j);
        for _ in 0..5 {
            let z = BigRational::new(BigInt::from(r.gen_range(-30..=30) | 1), BigInt::from(r.gen_range(1..=17)));
            let zi = z.recip();
            let lhs = eval_rational(&c, &(&z + &zi));
            assert_eq!(lhs, rational_pow(&z, j) + rational_pow(&zi, j), "C_{j}");
        }
    }
}

#[test]
fn lemma_identity_on_cyclotomics() {
    for q in [3u64, 5, 7, 11, 13] {
        for a in 0..4 {
            for b in 1..3 {
                let Ok(phi) = cyclotomic_2aqb(q, a, b) else { continue };
                if phi.degree().unwrap() > 60 {
                    continue;
                }
                let c = lemma_disc_identity(&phi).unwrap();
                assert!(c.holds, "q={q} a={a} b={b}: {} vs {}", c.lhs, c.rhs);
            }
        }
    }
}

#[test]
fn dedekind_matches_ideal_square_search() {
    let mut r = rng(17);
    let mut checked = 0;
    for _ in 0..250 {
        let n = r.gen_range(2..=6);
        let f = random_monic(&mut r, n, 5);
        let disc = discriminant(&f).unwrap();
        for p in [2u64, 3, 5, 7] {
            let pp = BigInt::from(p * p);
            if (&disc % &pp) != BigInt::from(0) {
                continue;
            }
            checked += 1;
            let brute = brute_p_divides_index(&f, p);
            assert_eq!(dedekind_index_test(&f, p).unwrap().divides(), brute, "{f} at {p}");
            assert_eq!(!ideal_square_witnesses(&f, p).unwrap().is_empty(), brute, "{f} at {p}");
        }
    }
    assert!(checked > 30, "only {checked} cases");
}

#[test]
fn membership_matches_search_for_each_h() {
    let mut r = rng(18);
    for _ in 0..150 {
        let n = r.gen_range(2..=6);
        let f = random_monic(&mut r, n, 8);
        let p = [2u64, 3, 5][r.gen_range(0..3)];
        for d in 1..=2 {
            for h in monic_polys(p, d).filter(|h| fp_is_irreducible(h, p)) {
                let hp = IntPoly::from_i64s(&h.iter().map(|&c| c as i64).collect::<Vec<_>>());
                let m = ideal_square_membership(&f, p, &hp).unwrap();
                assert_eq!(m.member, brute_in_ideal_square(&f, p, &h), "{f} in <{p}, {hp}>^2");
                if let Some(w) = m.witness {
                    assert!(w.verify(&f));
                }
            }
        }
    }
}
