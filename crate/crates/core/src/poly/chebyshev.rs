//! The rescaled Chebyshev basis `C_j(u) = 2 T_j(u/2)` and the transform
//! between reciprocal polynomials of degree `2n` and their degree-`n`
//! companions `g` with `f(x) = x^n g(x + 1/x)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

/// Memoized `C_0, C_1, ...` with `C_0 = 2`, `C_1 = u`, `C_j = u C_{j-1} - C_{j-2}`.
#[derive(Debug, Clone)]
pub struct ChebCoeffTable {
    entries: Vec<IntPoly>,
}

impl Default for ChebCoeffTable {
    fn default() -> Self {
        Self::new()
    }
}

impl ChebCoeffTable {
    pub fn new() -> Self {
        ChebCoeffTable {
            entries: vec![IntPoly::from_i64s(&[2]), IntPoly::x()],
        }
    }

    pub fn get(&mut self, j: usize) -> &IntPoly {
        let u = IntPoly::x();
        while self.entries.len() <= j {
            let k = self.entries.len();
            let next = &(&u * &self.entries[k - 1]) - &self.entries[k - 2];
            self.entries.push(next);
        }
        &self.entries[j]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn chebyshev_c(j: usize) -> IntPoly {
    ChebCoeffTable::new().get(j).clone()
}

/// `g(u) = a_n + sum_{j=1..n} a_{n-j} C_j(u)` for a reciprocal `f` of degree `2n`.
pub fn reciprocal_to_half(f: &IntPoly) -> Result<IntPoly> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if !f.is_reciprocal() {
        return Err(Error::NotReciprocal);
    }
    if d == 0 || d % 2 == 1 {
        return Err(Error::OddDegree(d));
    }
    let n = d / 2;
    let mut table = ChebCoeffTable::new();
    let mut g = IntPoly::constant(f.coeff(n));
    for j in 1..=n {
        let a = f.coeff(n - j);
        if !a.is_zero() {
            g = &g + &table.get(j).scale(&a);
        }
    }
    Ok(g)
}

/// `f(x) = sum_k b_k x^(n-k) (x^2+1)^k` where `g = sum_k b_k u^k` has degree `n`.
pub fn half_to_reciprocal(g: &IntPoly, n: usize) -> Result<IntPoly> {
    let found = g.degree();
    if found != Some(n) {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: found.unwrap_or(0),
        });
    }
    if n == 0 {
        return Err(Error::InvalidParams("target degree must be positive".into()));
    }
    let mut out = vec![BigInt::zero(); 2 * n + 1];
    for (k, b) in g.coeffs().iter().enumerate() {
        if b.is_zero() {
            continue;
        }
        // binom(k, i) built incrementally
        let mut binom = BigInt::one();
        for i in 0..=k {
            out[n - k + 2 * i] += b * &binom;
            binom = binom * BigInt::from(k - i) / BigInt::from(i + 1);
        }
    }
    Ok(IntPoly::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn chebyshev_small() {
        assert_eq!(chebyshev_c(0), p(&[2]));
        assert_eq!(chebyshev_c(1), p(&[0, 1]));
        assert_eq!(chebyshev_c(2), p(&[-2, 0, 1]));
        // 2 T_3(u/2) with T_3 = 4x^3 - 3x
        assert_eq!(chebyshev_c(3), p(&[0, -3, 0, 1]));
        let mut t = ChebCoeffTable::new();
        for j in 1..15 {
            let c = t.get(j).clone();
            assert!(c.is_monic());
            assert_eq!(c.degree(), Some(j));
        }
    }

    #[test]
    fn to_half_examples() {
        assert_eq!(
            reciprocal_to_half(&p(&[1, 3, 5, 3, 1])).unwrap(),
            p(&[3, 3, 1])
        );
        assert_eq!(
            reciprocal_to_half(&p(&[1, 0, 0, 3, 0, 0, 1])).unwrap(),
            p(&[3, -3, 0, 1])
        );
        let f3 = p(&[1, 1, 1, 1, 7, 13, 7, 1, 1, 1, 1]);
        assert_eq!(reciprocal_to_half(&f3).unwrap(), p(&[13, 9, -3, -4, 1, 1]));
    }

    #[test]
    fn to_half_rejects() {
        assert_eq!(reciprocal_to_half(&p(&[3, 2, 1])), Err(Error::NotReciprocal));
        assert_eq!(reciprocal_to_half(&p(&[1, 1, 1, 1])), Err(Error::OddDegree(3)));
        assert_eq!(reciprocal_to_half(&p(&[5])), Err(Error::OddDegree(0)));
        assert_eq!(reciprocal_to_half(&IntPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn to_reciprocal_examples() {
        assert_eq!(
            half_to_reciprocal(&p(&[3, 3, 1]), 2).unwrap(),
            p(&[1, 3, 5, 3, 1])
        );
        assert_eq!(
            half_to_reciprocal(&p(&[3, -3, 0, 1]), 3).unwrap(),
            p(&[1, 0, 0, 3, 0, 0, 1])
        );
        // x^3 + x^2 + (2T-2)x + 4T-1 at T = 0
        assert_eq!(
            half_to_reciprocal(&p(&[-1, -2, 1, 1]), 3).unwrap(),
            p(&[1, 1, 1, 1, 1, 1, 1])
        );
        assert!(matches!(
            half_to_reciprocal(&p(&[1, 1]), 2),
            Err(Error::DegreeMismatch { expected: 2, found: 1 })
        ));
    }
}
