//! Brute-force reference implementations used to check the library. None of
//! these call into the code they are compared against.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use recipmono::IntPoly;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

/// Prime factorization by trial division, ascending.
pub fn naive_factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn naive_squarefree(n: u64) -> bool {
    n != 0 && naive_factor(n).iter().all(|&(_, e)| e == 1)
}

pub fn naive_is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

// ---- polynomials over F_p as ascending Vec<u64>, trimmed ----

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn fp_reduce(f: &IntPoly, p: u64) -> Vec<u64> {
    let bp = BigInt::from(p);
    trim(
        f.coeffs()
            .iter()
            .map(|c| (((c % &bp) + &bp) % &bp).to_u64().unwrap())
            .collect(),
    )
}

/// Remainder of `a` by monic `b` over F_p.
fn fp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db && !r.is_empty() {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        for (i, &c) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - lead * c % p) % p;
        }
        r = trim(r);
    }
    r
}

fn fp_div(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![0; a.len() - db];
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        q[shift] = lead;
        for (i, &c) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - lead * c % p) % p;
        }
        r = trim(r);
    }
    trim(q)
}

pub fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

/// Monic polynomials of degree `d` over F_p, in increasing order of the
/// coefficient vector read from the top.
pub fn monic_polys(p: u64, d: usize) -> impl Iterator<Item = Vec<u64>> {
    (0..p.pow(d as u32)).map(move |mut k| {
        let mut c = vec![0; d + 1];
        c[d] = 1;
        for j in (0..d).rev() {
            c[j] = k % p;
            k /= p;
        }
        c
    })
}

/// Factorization of `f mod p` into monic irreducibles by exhaustive trial
/// division: the lowest-degree monic divisor is always irreducible.
/// Returns `(unit, [(factor, multiplicity)])` sorted by degree then
/// coefficients from the top.
pub fn fp_factor_exhaustive(f: &[u64], p: u64) -> (u64, Vec<(Vec<u64>, u32)>) {
    assert!(!f.is_empty());
    let unit = *f.last().unwrap();
    let inv = (1..p).find(|x| x * unit % p == 1).unwrap();
    let mut rest: Vec<u64> = f.iter().map(|c| c * inv % p).collect();
    let mut found: Vec<(Vec<u64>, u32)> = Vec::new();
    let mut d = 1;
    while rest.len() > 1 {
        if 2 * d > rest.len() - 1 {
            found.push((rest.clone(), 1));
            break;
        }
        let mut progressed = false;
        for h in monic_polys(p, d) {
            if fp_rem(&rest, &h, p).is_empty() {
                let mut e = 0;
                while rest.len() > 1 && fp_rem(&rest, &h, p).is_empty() {
                    rest = fp_div(&rest, &h, p);
                    e += 1;
                }
                found.push((h, e));
                progressed = true;
            }
        }
        if !progressed || rest.len() <= 1 {
            d += 1;
        }
    }
    let mut merged: Vec<(Vec<u64>, u32)> = Vec::new();
    for (h, e) in found {
        match merged.iter_mut().find(|(g, _)| *g == h) {
            Some(x) => x.1 += e,
            None => merged.push((h, e)),
        }
    }
    merged.sort_by(|a, b| {
        a.0.len()
            .cmp(&b.0.len())
            .then_with(|| a.0.iter().rev().cmp(b.0.iter().rev()))
    });
    (unit, merged)
}

pub fn fp_is_irreducible(h: &[u64], p: u64) -> bool {
    let d = h.len() - 1;
    d >= 1 && (1..=d / 2).all(|k| monic_polys(p, k).all(|g| !fp_rem(h, &g, p).is_empty()))
}

// ---- <p, h>^2 membership by search ----

fn int_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn int_rem_monic(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        for (i, &c) in b.iter().enumerate() {
            r[shift + i] -= lead * c;
        }
        r.pop();
    }
    r
}

/// `f ∈ <p^2, p h, h^2>`, decided by trying every `B` of degree below
/// `deg h` with coefficients in `[0, p)` and testing whether
/// `(f - p h B) mod h^2` vanishes modulo `p^2`.
pub fn brute_in_ideal_square(f: &IntPoly, p: u64, h: &[u64]) -> bool {
    let fi: Vec<i128> = f.coeffs().iter().map(|c| c.to_i128().unwrap()).collect();
    let hi: Vec<i128> = h.iter().map(|&c| c as i128).collect();
    let h2 = int_mul(&hi, &hi);
    let d = h.len() - 1;
    let pp = (p * p) as i128;
    (0..p.pow(d as u32)).any(|mut k| {
        let mut b = vec![0i128; d.max(1)];
        for c in b.iter_mut().take(d) {
            *c = (k % p) as i128;
            k /= p;
        }
        let phb: Vec<i128> = int_mul(&hi, &b).iter().map(|c| c * p as i128).collect();
        let mut g = fi.clone();
        if g.len() < phb.len() {
            g.resize(phb.len(), 0);
        }
        for (i, c) in phb.iter().enumerate() {
            g[i] -= c;
        }
        int_rem_monic(&g, &h2).iter().all(|c| c.rem_euclid(pp) == 0)
    })
}

/// Does some `<p, h>^2` contain `f`? Searches every monic irreducible `h`
/// modulo `p` whose square divides `f mod p`.
pub fn brute_p_divides_index(f: &IntPoly, p: u64) -> bool {
    let fp = fp_reduce(f, p);
    let n = fp.len() - 1;
    (1..=n / 2).any(|d| {
        monic_polys(p, d).any(|h| {
            fp_rem(&fp, &fp_mul(&h, &h, p), p).is_empty()
                && fp_is_irreducible(&h, p)
                && brute_in_ideal_square(f, p, &h)
        })
    })
}

// ---- exact rational evaluation ----

pub fn eval_rational(f: &IntPoly, x: &BigRational) -> BigRational {
    f.coeffs()
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from(c.clone()))
}

pub fn rational_pow(x: &BigRational, n: usize) -> BigRational {
    (0..n).fold(BigRational::one(), |acc, _| acc * x)
}

/// Random monic reciprocal polynomial of degree `2n` with inner coefficients in `[-c, c]`.
pub fn random_monic_reciprocal<R: Rng>(r: &mut R, n: usize, c: i64) -> IntPoly {
    let mut coeffs = vec![0i64; 2 * n + 1];
    coeffs[0] = 1;
    coeffs[2 * n] = 1;
    for j in 1..=n {
        let v = r.gen_range(-c..=c);
        coeffs[j] = v;
        coeffs[2 * n - j] = v;
    }
    p(&coeffs)
}

pub fn random_monic<R: Rng>(r: &mut R, n: usize, c: i64) -> IntPoly {
    let mut coeffs: Vec<i64> = (0..n).map(|_| r.gen_range(-c..=c)).collect();
    coeffs.push(1);
    p(&coeffs)
}
