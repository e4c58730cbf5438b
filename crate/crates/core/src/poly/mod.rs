//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! [`IntPoly`] stores coefficients in ascending degree and is always kept in
//! canonical form: no trailing zero coefficients, with the zero polynomial
//! represented by an empty coefficient vector (its degree is `None`).

mod chebyshev;
mod cyclotomic;
mod parse;

pub use chebyshev::{chebyshev_c, half_to_reciprocal, reciprocal_to_half, ChebCoeffTable};
pub use cyclotomic::{cyclotomic_2aqb, euler_phi_2aqb};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^j`, zero past the degree.
    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * BigInt::from(j))
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Exact division of every coefficient by `d`; `None` if some coefficient
    /// is not divisible.
    pub fn div_exact_scalar(&self, d: &BigInt) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(IntPoly::new(out))
    }

    /// Quotient and remainder on division by a monic polynomial.
    pub fn divrem_monic(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        if !divisor.is_monic() {
            return Err(Error::NonMonicDivisor);
        }
        let Some(nd) = self.degree() else {
            return Ok((IntPoly::zero(), IntPoly::zero()));
        };
        if nd < dd {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = std::mem::take(&mut rem[k + dd]);
            if c.is_zero() {
                continue;
            }
            for (i, b) in divisor.coeffs[..dd].iter().enumerate() {
                rem[k + i] -= &c * b;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Pseudo-remainder: `lc(divisor)^(deg self - deg divisor + 1) * self mod divisor`.
    pub fn pseudo_rem(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let Some(nd) = self.degree() else {
            return Ok(IntPoly::zero());
        };
        if nd < dd {
            return Ok(self.clone());
        }
        let lc = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut steps = nd - dd + 1;
        for top in (dd..=nd).rev() {
            let c = rem[top].clone();
            for r in rem[..top].iter_mut() {
                *r *= lc;
            }
            rem[top] = BigInt::zero();
            if !c.is_zero() {
                for (i, b) in divisor.coeffs[..dd].iter().enumerate() {
                    rem[top - dd + i] -= &c * b;
                }
            }
            steps -= 1;
        }
        debug_assert_eq!(steps, 0);
        rem.truncate(dd);
        Ok(IntPoly::new(rem))
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `f(g(x))` by Horner's scheme.
    pub fn compose(&self, inner: &IntPoly) -> IntPoly {
        self.coeffs.iter().rev().fold(IntPoly::zero(), |acc, c| {
            &(&acc * inner) + &IntPoly::constant(c.clone())
        })
    }

    /// `f(x^k)`. With `k = 0` the result is the constant `f(1)`.
    pub fn compose_power(&self, k: usize) -> IntPoly {
        if k == 0 {
            return IntPoly::constant(self.eval(&BigInt::one()));
        }
        let Some(d) = self.degree() else {
            return IntPoly::zero();
        };
        let mut out = vec![BigInt::zero(); d * k + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            out[j * k] = c.clone();
        }
        IntPoly::new(out)
    }

    /// `x^deg(f) * f(1/x)`. Rejects a zero constant term.
    pub fn reverse(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let mut c = self.coeffs.clone();
        c.reverse();
        Ok(IntPoly::new(c))
    }

    /// Palindromic coefficient sequence. The zero polynomial is not reciprocal.
    pub fn is_reciprocal(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let c = &self.coeffs;
        c.iter().eq(c.iter().rev())
    }

    /// Coefficients as decimal strings, ascending degree.
    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    /// Canonical JSON text, e.g. `["1","3","5","3","1"]`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_coeff_strings()).expect("strings serialize")
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_default()
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let mag = c.abs();
            if j == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match j {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{j}")?,
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse::parse_poly(s)
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_coeff_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(deserializer)?;
        parse::from_json_value(&v).map_err(serde::de::Error::custom)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn canonical_form_trims() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
        let f = p(&[1, 0, 0, 3, 0, 0, 1]);
        assert_eq!(f.eval_i64(1), BigInt::from(5));
        assert_eq!(p(&[3, -3, 0, 1]).derivative(), p(&[-3, 0, 3]));
        assert_eq!(p(&[6, -4, 10]).content(), BigInt::from(2));
        assert_eq!(p(&[-6, 4]).content(), BigInt::from(2));
    }

    #[test]
    fn divrem_monic_basic() {
        let f = p(&[-1, 0, 0, 1]);
        let d = p(&[-1, 1]);
        let (q, r) = f.divrem_monic(&d).unwrap();
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_zero());
        let (q, r) = p(&[5, 3, 1]).divrem_monic(&p(&[0, 0, 0, 1])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, p(&[5, 3, 1]));
        assert_eq!(f.divrem_monic(&IntPoly::zero()), Err(Error::DivisionByZero));
        assert_eq!(f.divrem_monic(&p(&[1, 2])), Err(Error::NonMonicDivisor));
    }

    #[test]
    fn pseudo_rem_hand_example() {
        // 9(4x^3+3x^2+2x+1) = (12x+9)(3x^2+1) + 6x
        let r = p(&[1, 2, 3, 4]).pseudo_rem(&p(&[1, 0, 3])).unwrap();
        assert_eq!(r, p(&[0, 6]));
    }

    #[test]
    fn reciprocal_predicate() {
        assert!(p(&[1, 3, 5, 3, 1]).is_reciprocal());
        assert!(!p(&[3, 2, 1]).is_reciprocal());
        assert!(p(&[7]).is_reciprocal());
        assert!(!IntPoly::zero().is_reciprocal());
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(p(&[4, 3, 2, 1]).reverse().unwrap(), p(&[1, 2, 3, 4]));
        let f = p(&[1, 3, 5, 3, 1]);
        assert_eq!(f.reverse().unwrap(), f);
        // x^3 + (x+1)^2 reversed is x(x+1)^2 + 1
        assert_eq!(p(&[1, 2, 1, 1]).reverse().unwrap(), p(&[1, 1, 2, 1]));
        assert_eq!(p(&[0, 1]).reverse(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn compose_power_examples() {
        assert_eq!(p(&[1, 0, 1]).compose_power(3), p(&[1, 0, 0, 0, 0, 0, 1]));
        let f = p(&[1, 3, 5, 3, 1]);
        assert_eq!(
            f.compose_power(3),
            p(&[1, 0, 0, 3, 0, 0, 5, 0, 0, 3, 0, 0, 1])
        );
        assert_eq!(f.compose_power(1), f);
    }

    #[test]
    fn compose_general() {
        // (x^2 + 1) o (x + 1) = x^2 + 2x + 2
        assert_eq!(p(&[1, 0, 1]).compose(&p(&[1, 1])), p(&[2, 2, 1]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[1, 3, 5, 3, 1]).to_string(), "x^4+3x^3+5x^2+3x+1");
        assert_eq!(p(&[-1, 0, -2, 1]).to_string(), "x^3-2x^2-1");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[1, 3, 5, 3, 1]).to_json(), r#"["1","3","5","3","1"]"#);
    }
}
