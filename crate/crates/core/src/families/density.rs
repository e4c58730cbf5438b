use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{is_prime_u64, primes_up_to};
use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Residues of the coefficients modulo `m`, ascending.
fn residues(f: &IntPoly, m: u64) -> Vec<u128> {
    let bm = BigInt::from(m);
    f.coeffs()
        .iter()
        .map(|c| {
            let r = ((c % &bm) + &bm) % &bm;
            u128::from(r.to_u64().expect("below modulus"))
        })
        .collect()
}

fn eval_mod(c: &[u128], z: u128, m: u128) -> u128 {
    c.iter().rev().fold(0, |acc, &a| (acc * z + a) % m)
}

fn check_r(r: u64) -> Result<u64> {
    if !is_prime_u64(r) {
        return Err(Error::NotPrime(r.to_string()));
    }
    r.checked_mul(r)
        .filter(|&m| m < 1 << 40)
        .ok_or_else(|| Error::PrimeTooLarge(r.to_string()))
}

/// Number of units `z mod r^2` with `f(z) ≡ 0 (mod r^2)`, by exhaustion.
pub fn rho_f_r2(f: &IntPoly, r: u64) -> Result<u64> {
    let m = check_r(r)?;
    let c = residues(f, m);
    let m = u128::from(m);
    let r = u128::from(r);
    Ok((1..m)
        .filter(|z| z % r != 0 && eval_mod(&c, *z, m) == 0)
        .count() as u64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalEntry {
    pub r: u64,
    pub rho: u64,
    /// `r(r-1)`, the number of units modulo `r^2`.
    pub units: u64,
    pub obstruction: bool,
    /// Smallest unit `z` with `f(z) ≢ 0 (mod r^2)`.
    pub witness: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DensityReport {
    pub poly: IntPoly,
    pub bound: u64,
    pub rho_values: Vec<LocalEntry>,
    pub obstruction_primes: Vec<u64>,
    /// `prod (1 - rho(r^2) / (r(r-1)))` over primes `r <= bound`.
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub partial_product: BigRational,
    /// Floating-point rendering of `partial_product`, for reading only.
    pub partial_product_approx: f64,
}

pub fn local_obstruction_scan(f: &IntPoly, bound: u64) -> Result<DensityReport> {
    if bound < 2 {
        return Err(Error::InvalidParams("bound must be at least 2".into()));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut rho_values = Vec::new();
    let mut product = BigRational::one();
    for r in primes_up_to(bound) {
        let m = check_r(r)?;
        let c = residues(f, m);
        let (m, rr) = (u128::from(m), u128::from(r));
        let mut rho = 0u64;
        let mut witness = None;
        for z in (1..m).filter(|z| z % rr != 0) {
            if eval_mod(&c, z, m) == 0 {
                rho += 1;
            } else if witness.is_none() {
                witness = Some(z as u64);
            }
        }
        let units = r * (r - 1);
        product *= BigRational::new(BigInt::from(units - rho), BigInt::from(units));
        rho_values.push(LocalEntry {
            r,
            rho,
            units,
            obstruction: rho == units,
            witness,
        });
    }
    let obstruction_primes = rho_values
        .iter()
        .filter(|e| e.obstruction)
        .map(|e| e.r)
        .collect();
    let partial_product_approx = if product.is_zero() {
        0.0
    } else {
        product.numer().to_f64().unwrap_or(f64::NAN) / product.denom().to_f64().unwrap_or(f64::NAN)
    };
    Ok(DensityReport {
        poly: f.clone(),
        bound,
        rho_values,
        obstruction_primes,
        partial_product: product,
        partial_product_approx,
    })
}
