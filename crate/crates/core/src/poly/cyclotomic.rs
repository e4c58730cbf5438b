use num_bigint::BigInt;

use super::IntPoly;
use crate::arith::is_prime_u64;
use crate::error::{Error, Result};

/// `phi(2^a q^b)` for an odd prime `q`.
pub fn euler_phi_2aqb(q: u64, a: u32, b: u32) -> Option<u64> {
    let qb1 = q.checked_pow(b.checked_sub(1)?)?;
    let two = if a == 0 { 1 } else { 1u64.checked_shl(a - 1)? };
    two.checked_mul(qb1)?.checked_mul(q - 1)
}

/// `Phi_N` for `N = 2^a q^b`, built from `Phi_q` or `Phi_2q` by substituting
/// `x -> x^(2^(a-1) q^(b-1))`.
pub fn cyclotomic_2aqb(q: u64, a: u32, b: u32) -> Result<IntPoly> {
    if q % 2 == 0 || !is_prime_u64(q) {
        return Err(Error::NotOddPrime(q));
    }
    if b == 0 {
        return Err(Error::InvalidParams("exponent b must be at least 1".into()));
    }
    let phi = euler_phi_2aqb(q, a, b)
        .filter(|&d| d <= 1 << 22)
        .ok_or_else(|| Error::InvalidParams("cyclotomic degree too large".into()))?;
    let base: Vec<BigInt> = (0..q)
        .map(|k| {
            if a >= 1 && k % 2 == 1 {
                BigInt::from(-1)
            } else {
                BigInt::from(1)
            }
        })
        .collect();
    let base = IntPoly::new(base);
    let stretch = (phi / (q - 1)) as usize;
    let out = base.compose_power(stretch);
    debug_assert_eq!(out.degree(), Some(phi as usize));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_2aqb(3, 0, 1).unwrap(), IntPoly::from_i64s(&[1, 1, 1]));
        assert_eq!(
            cyclotomic_2aqb(5, 1, 1).unwrap(),
            IntPoly::from_i64s(&[1, -1, 1, -1, 1])
        );
        assert_eq!(
            cyclotomic_2aqb(3, 0, 2).unwrap(),
            IntPoly::from_i64s(&[1, 0, 0, 1, 0, 0, 1])
        );
        // Phi_12 = x^4 - x^2 + 1
        assert_eq!(
            cyclotomic_2aqb(3, 2, 1).unwrap(),
            IntPoly::from_i64s(&[1, 0, -1, 0, 1])
        );
    }

    #[test]
    fn rejects_bad_q() {
        assert_eq!(cyclotomic_2aqb(2, 0, 1), Err(Error::NotOddPrime(2)));
        assert_eq!(cyclotomic_2aqb(9, 0, 1), Err(Error::NotOddPrime(9)));
    }

    #[test]
    fn degrees_match_phi() {
        for q in [3u64, 5, 7] {
            for a in 0..4 {
                for b in 1..3 {
                    let f = cyclotomic_2aqb(q, a, b).unwrap();
                    assert_eq!(f.degree().unwrap() as u64, euler_phi_2aqb(q, a, b).unwrap());
                    assert!(f.is_reciprocal());
                }
            }
        }
    }
}
