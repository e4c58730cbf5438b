//! Resultants, discriminants and the two discriminant identities for
//! reciprocal polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{factor_int, Effort, IntFactorization};
use crate::error::{Error, Result};
use crate::families::{jones_companion, perturbed_cyclotomic, FamilyParams};
use crate::poly::{reciprocal_to_half, IntPoly};

fn sign_pow(e: usize) -> BigInt {
    if e % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `Res(a, b)` by the subresultant remainder sequence.
pub fn resultant(a: &IntPoly, b: &IntPoly) -> Result<BigInt> {
    let (mut da, mut db) = match (a.degree(), b.degree()) {
        (Some(x), Some(y)) => (x, y),
        _ => return Err(Error::ZeroPolynomial),
    };
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut s = BigInt::one();
    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
    }
    if db == 0 {
        return Ok(s * num_traits::pow(b.coeff(0), da));
    }
    let ca = a.content();
    let cb = b.content();
    a = a.div_exact_scalar(&ca).expect("content divides");
    b = b.div_exact_scalar(&cb).expect("content divides");
    let t = num_traits::pow(ca, db) * num_traits::pow(cb, da);

    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.degree().expect("nonzero");
        let db = b.degree().expect("nonzero");
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b)?;
        a = b;
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        let div = &g * num_traits::pow(h.clone(), delta);
        b = r.div_exact_scalar(&div).expect("subresultant division is exact");
        g = a.leading().expect("nonzero").clone();
        if delta > 0 {
            h = num_traits::pow(g.clone(), delta) / num_traits::pow(h, delta - 1);
        }
        if b.degree() == Some(0) {
            let da = a.degree().expect("nonzero");
            let lb = b.coeff(0);
            let hh = num_traits::pow(lb, da) / num_traits::pow(h, da - 1);
            return Ok(s * t * hh);
        }
    }
}

/// `Res(a, b)` as the determinant of the Sylvester matrix, by Bareiss
/// fraction-free elimination. Slower than [`resultant`]; kept as a check.
pub fn sylvester_resultant(a: &IntPoly, b: &IntPoly) -> Result<BigInt> {
    let (m, n) = match (a.degree(), b.degree()) {
        (Some(x), Some(y)) => (x, y),
        _ => return Err(Error::ZeroPolynomial),
    };
    let size = m + n;
    if size == 0 {
        return Ok(BigInt::one());
    }
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for i in 0..n {
        for k in 0..=m {
            mat[i][i + k] = a.coeff(m - k);
        }
    }
    for i in 0..m {
        for k in 0..=n {
            mat[n + i][i + k] = b.coeff(n - k);
        }
    }
    Ok(bareiss_det(mat))
}

fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// `Δ(f) = (-1)^(n(n-1)/2) Res(f, f') / a_n`; degree-one polynomials have
/// discriminant 1.
pub fn discriminant(f: &IntPoly) -> Result<BigInt> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::InvalidParams(
            "discriminant needs degree at least 1".into(),
        ));
    }
    if n == 1 {
        return Ok(BigInt::one());
    }
    let res = resultant(f, &f.derivative())?;
    let lead = f.leading().expect("nonzero");
    let (q, r) = res.div_rem(lead);
    debug_assert!(r.is_zero());
    Ok(sign_pow(n * (n - 1) / 2) * q)
}

#[derive(Debug, Clone, Serialize)]
pub struct DiscriminantReport {
    pub poly: IntPoly,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub disc: BigInt,
    pub factorization: IntFactorization,
    #[serde(serialize_with = "crate::report::ser_display_vec")]
    pub square_divisor_primes: Vec<num_bigint::BigUint>,
}

pub fn discriminant_report(f: &IntPoly, effort: &Effort) -> Result<DiscriminantReport> {
    let disc = discriminant(f)?;
    let factorization = factor_int(&disc, effort);
    let square_divisor_primes = factorization.square_divisor_primes();
    Ok(DiscriminantReport {
        poly: f.clone(),
        disc,
        factorization,
        square_divisor_primes,
    })
}

/// Both sides of a claimed integer identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub holds: bool,
    pub holds_up_to_sign: bool,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub lhs: BigInt,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub rhs: BigInt,
}

impl IdentityCheck {
    pub fn new(lhs: BigInt, rhs: BigInt) -> Self {
        IdentityCheck {
            holds: lhs == rhs,
            holds_up_to_sign: lhs.abs() == rhs.abs(),
            lhs,
            rhs,
        }
    }
}

/// `Δ(f)` against `(-1)^(n(2n-1)) f(1) f(-1) Δ(g)^2` for a monic reciprocal
/// `f` of degree `2n` with companion `g`.
pub fn lemma_disc_identity(f: &IntPoly) -> Result<IdentityCheck> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let g = reciprocal_to_half(f)?;
    let n = g.degree().expect("nonzero");
    let lhs = discriminant(f)?;
    let dg = discriminant(&g)?;
    let rhs = sign_pow(n * (2 * n - 1)) * f.eval_i64(1) * f.eval_i64(-1) * &dg * &dg;
    Ok(IdentityCheck::new(lhs, rhs))
}

/// The discriminant of the perturbed cyclotomic `Φ_{2^a q}(x) + 4 r q^2 t x^((q-1)/2)`
/// against the closed form in terms of its companion's discriminant.
pub fn conjecture_disc_identity(q: u64, a: u32, r: i64, t: i64) -> Result<IdentityCheck> {
    if a > 1 {
        return Err(Error::InvalidParams("a must be 0 or 1".into()));
    }
    let params = FamilyParams::new(q, a, 1, r, t)?;
    let big_f = perturbed_cyclotomic(&params)?;
    let ga = jones_companion(q, a, r, t)?;
    let lhs = discriminant(&big_f)?;
    let dg = discriminant(&ga)?;
    let eps = sign_pow(((q - 1) / 2) as usize);
    let (q, r, t) = (BigInt::from(q), BigInt::from(r), BigInt::from(t));
    let qrt4 = BigInt::from(4) * &q * &r * &t;
    let q2rt4 = &qrt4 * &q;
    let (first, second) = if a == 0 {
        (&qrt4 + 1, &q2rt4 + &eps)
    } else {
        (&qrt4 + &eps, &q2rt4 + 1)
    };
    let rhs = q * first * second * &dg * &dg;
    Ok(IdentityCheck::new(lhs, rhs))
}
