//! Polynomials over prime fields `F_p` with `p < 2^64`.

mod factor;
mod irreducible;

pub use factor::{factor_mod_p, factor_mod_p_seeded, factor_pattern, FactorPattern, ModPolyFactorization};
pub use irreducible::{
    irreducibility_certificate, irreducibility_certificate_with_disc, IrreducibilityCertificate,
    IrreducibleWitness, ReducibleEvidence,
};

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::arith::is_prime_u64;
use crate::error::{Error, Result};
use crate::poly::IntPoly;

#[inline]
pub(crate) fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

#[inline]
pub(crate) fn addm(a: u64, b: u64, p: u64) -> u64 {
    if a >= p - b {
        a - (p - b)
    } else {
        a + b
    }
}

#[inline]
pub(crate) fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

pub(crate) fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo the prime `p`.
pub(crate) fn invm(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    powm(a, p - 2, p)
}

/// Dense polynomial over `F_p`, ascending residues in `[0, p)`, trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

/// Reduce an integer polynomial modulo a prime.
pub fn reduce_mod(f: &IntPoly, p: u64) -> Result<ModPoly> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    Ok(ModPoly::from_int(f, p))
}

impl ModPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut out = ModPoly {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        out.trim();
        out
    }

    /// Reduction without a primality check on `p`.
    pub fn from_int(f: &IntPoly, p: u64) -> Self {
        let bp = BigInt::from(p);
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| {
                let r = ((c % &bp) + &bp) % &bp;
                r.to_u64().expect("residue below p")
            })
            .collect();
        ModPoly::new(p, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn zero(p: u64) -> Self {
        ModPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        ModPoly::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        ModPoly::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> u64 {
        self.coeffs.get(j).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn leading(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(1)
    }

    /// Lift to `Z[x]` with coefficients in `[0, p)`.
    pub fn lift(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Lift to `Z[x]` with coefficients in `(-p/2, p/2]`.
    pub fn lift_symmetric(&self) -> IntPoly {
        let half = self.p / 2;
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|&c| {
                    if c > half {
                        BigInt::from(c) - BigInt::from(self.p)
                    } else {
                        BigInt::from(c)
                    }
                })
                .collect(),
        )
    }

    pub fn eval(&self, x: u64) -> u64 {
        let x = x % self.p;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| addm(mulm(acc, x, self.p), c, self.p))
    }

    pub fn add(&self, other: &ModPoly) -> ModPoly {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| addm(self.coeff(i), other.coeff(i), p))
            .collect();
        ModPoly::new(p, c)
    }

    pub fn sub(&self, other: &ModPoly) -> ModPoly {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| subm(self.coeff(i), other.coeff(i), p))
            .collect();
        ModPoly::new(p, c)
    }

    pub fn scale(&self, s: u64) -> ModPoly {
        let p = self.p;
        ModPoly::new(p, self.coeffs.iter().map(|&c| mulm(c, s % p, p)).collect())
    }

    pub fn mul(&self, other: &ModPoly) -> ModPoly {
        let p = self.p;
        if self.is_zero() || other.is_zero() {
            return ModPoly::zero(p);
        }
        let pw = u128::from(p);
        let mut acc = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + u128::from(a) * u128::from(b)) % pw;
            }
        }
        ModPoly::new(p, acc.into_iter().map(|c| c as u64).collect())
    }

    pub fn pow(&self, mut e: u64) -> ModPoly {
        let mut base = self.clone();
        let mut acc = ModPoly::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn divrem(&self, d: &ModPoly) -> Result<(ModPoly, ModPoly)> {
        let p = self.p;
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let Some(nd) = self.degree() else {
            return Ok((ModPoly::zero(p), ModPoly::zero(p)));
        };
        if nd < dd {
            return Ok((ModPoly::zero(p), self.clone()));
        }
        let inv = invm(d.leading().expect("nonzero"), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = mulm(rem[k + dd], inv, p);
            rem[k + dd] = 0;
            if c == 0 {
                continue;
            }
            for (i, &b) in d.coeffs[..dd].iter().enumerate() {
                rem[k + i] = subm(rem[k + i], mulm(c, b, p), p);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((ModPoly::new(p, quot), ModPoly::new(p, rem)))
    }

    pub fn rem(&self, d: &ModPoly) -> ModPoly {
        self.divrem(d).expect("nonzero divisor").1
    }

    /// Exact quotient; panics in debug builds when `d` does not divide.
    pub fn div_exact(&self, d: &ModPoly) -> ModPoly {
        let (q, r) = self.divrem(d).expect("nonzero divisor");
        debug_assert!(r.is_zero());
        q
    }

    pub fn make_monic(&self) -> ModPoly {
        match self.leading() {
            None | Some(1) => self.clone(),
            Some(lc) => self.scale(invm(lc, self.p)),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &ModPoly) -> ModPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn derivative(&self) -> ModPoly {
        let p = self.p;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &c)| mulm(c, j as u64 % p, p))
            .collect();
        ModPoly::new(p, c)
    }

    pub fn mulmod(&self, other: &ModPoly, m: &ModPoly) -> ModPoly {
        self.mul(other).rem(m)
    }

    /// `self^e mod m`.
    pub fn powmod(&self, e: &BigUint, m: &ModPoly) -> ModPoly {
        let mut acc = ModPoly::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mulmod(&acc, m);
            if e.bit(i) {
                acc = acc.mulmod(&base, m);
            }
        }
        acc
    }

    /// For `f = h(x^p)` returns `h`, the `p`-th root over `F_p`.
    pub(crate) fn pth_root(&self) -> ModPoly {
        let p = self.p as usize;
        let c = self.coeffs.iter().step_by(p).copied().collect();
        ModPoly::new(self.p, c)
    }
}

impl PartialOrd for ModPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients from the top down.
impl Ord for ModPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
            .then_with(|| self.p.cmp(&other.p))
    }
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.lift(), f)
    }
}

impl fmt::Debug for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self, self.p)
    }
}

impl Serialize for ModPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let c: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        c.serialize(s)
    }
}

pub(crate) fn is_zero_mod(c: &BigInt, p: u64) -> bool {
    (c % BigInt::from(p)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u64, c: &[u64]) -> ModPoly {
        ModPoly::new(p, c.to_vec())
    }

    #[test]
    fn reduction() {
        let f = IntPoly::from_i64s(&[6, 5, 1]);
        assert_eq!(reduce_mod(&f, 5).unwrap(), m(5, &[1, 0, 1]));
        assert!(reduce_mod(&IntPoly::from_i64s(&[0, 0, 0, 7]), 7).unwrap().is_zero());
        assert_eq!(
            reduce_mod(&IntPoly::from_i64s(&[-1, -4]), 3).unwrap(),
            m(3, &[2, 2])
        );
        assert_eq!(reduce_mod(&f, 4), Err(Error::NotPrime("4".into())));
    }

    #[test]
    fn field_arithmetic() {
        let p = 7;
        let a = m(p, &[1, 2, 3]);
        let b = m(p, &[5, 1]);
        let (q, r) = a.mul(&b).add(&m(p, &[4])).divrem(&b).unwrap();
        assert_eq!(q, a);
        assert_eq!(r, m(p, &[4]));
        assert_eq!(a.sub(&a), ModPoly::zero(p));
        assert_eq!(a.gcd(&a.mul(&b)), a.make_monic());
        assert_eq!(m(5, &[1, 0, 0, 0, 0, 1]).derivative(), ModPoly::zero(5));
        assert_eq!(m(5, &[1, 0, 0, 0, 0, 3]).pth_root(), m(5, &[1, 3]));
        let big = (1u64 << 61) - 1;
        let x = ModPoly::x(big);
        let e = BigUint::from(big);
        // Frobenius fixes x mod (x^2 - x)
        let modulus = m(big, &[0, big - 1, 1]);
        assert_eq!(x.powmod(&e, &modulus), x);
    }

    #[test]
    fn ordering_is_degree_then_top_down() {
        let mut v = vec![m(3, &[0, 0, 1]), m(3, &[2, 1]), m(3, &[0, 1]), m(3, &[1, 2, 1])];
        v.sort();
        assert_eq!(v, vec![m(3, &[0, 1]), m(3, &[2, 1]), m(3, &[0, 0, 1]), m(3, &[1, 2, 1])]);
    }
}
