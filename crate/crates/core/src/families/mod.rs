//! Explicit polynomial families: perturbed cyclotomics, the degree-10
//! reciprocal family with quintic companions, and the sextic family with
//! cubic companions. Sweeps, counting and local densities live in submodules.

mod density;
mod sweep;

pub use density::{local_obstruction_scan, rho_f_r2, DensityReport, LocalEntry};
pub use sweep::{
    count_lf, count_mh, count_nh, decic_prime_scan, jones_sweep, sextic_sweep, Checkpoint,
    CountDefinition, CountReport, CountRow, DecicScanRow, JonesRow, LfMode, LfRange, SexticRow,
    SweepOptions,
};

use num_bigint::BigInt;
use serde::Serialize;

use crate::arith::is_prime_u64;
use crate::error::{Error, Result};
use crate::poly::{cyclotomic_2aqb, euler_phi_2aqb, ChebCoeffTable, IntPoly};

/// Parameters of `Φ_N(x) + 4 r q^2 t x^(φ(N)/2)` with `N = 2^a q^b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyParams {
    pub q: u64,
    pub a: u32,
    pub b: u32,
    pub r: i64,
    pub t: i64,
}

impl FamilyParams {
    pub fn new(q: u64, a: u32, b: u32, r: i64, t: i64) -> Result<Self> {
        if q % 2 == 0 || !is_prime_u64(q) {
            return Err(Error::NotOddPrime(q));
        }
        if b == 0 {
            return Err(Error::InvalidParams("b must be at least 1".into()));
        }
        if r == 0 {
            return Err(Error::InvalidParams("r must be nonzero".into()));
        }
        euler_phi_2aqb(q, a, b)
            .ok_or_else(|| Error::InvalidParams("N = 2^a q^b is too large".into()))?;
        Ok(FamilyParams { q, a, b, r, t })
    }

    /// `N = 2^a q^b`, if it fits in 64 bits.
    pub fn n(&self) -> Option<u64> {
        1u64.checked_shl(self.a)?
            .checked_mul(self.q.checked_pow(self.b)?)
    }

    pub fn phi(&self) -> u64 {
        euler_phi_2aqb(self.q, self.a, self.b).expect("validated")
    }

    /// `4 r q^2 t`.
    pub fn perturbation(&self) -> BigInt {
        BigInt::from(4) * self.r * BigInt::from(self.q).pow(2) * self.t
    }
}

pub fn perturbed_cyclotomic(params: &FamilyParams) -> Result<IntPoly> {
    let phi = cyclotomic_2aqb(params.q, params.a, params.b)?;
    let mid = (params.phi() / 2) as usize;
    let mut c = phi.into_coeffs();
    c[mid] += params.perturbation();
    Ok(IntPoly::new(c))
}

/// Companion of the perturbed `Φ_q` (`a = 0`) or `Φ_2q` (`a = 1`) in closed
/// form: `4rq^2t + 1 + sum_j C_j(u)` or `4rq^2t + (-1)^m (1 + sum_j (-1)^j C_j(u))`
/// with `j` running over `1..=m`, `m = (q-1)/2`.
pub fn jones_companion(q: u64, a: u32, r: i64, t: i64) -> Result<IntPoly> {
    if a > 1 {
        return Err(Error::InvalidParams("a must be 0 or 1".into()));
    }
    let params = FamilyParams::new(q, a, 1, r, t)?;
    let m = ((q - 1) / 2) as usize;
    let mut table = ChebCoeffTable::new();
    let mut sum = IntPoly::one();
    for j in 1..=m {
        let c = table.get(j);
        sum = if a == 1 && j % 2 == 1 { &sum - c } else { &sum + c };
    }
    if a == 1 && m % 2 == 1 {
        sum = -sum;
    }
    Ok(&sum + &IntPoly::constant(params.perturbation()))
}

/// `x^10 + x^9 + x^8 + x^7 + (2A+1)x^6 + (4A+1)x^5 + (2A+1)x^4 + x^3 + x^2 + x + 1`,
/// its quintic companion and the value `h(A)` of the discriminant polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecicMember {
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub a: BigInt,
    pub f: IntPoly,
    pub g: IntPoly,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub h_value: BigInt,
}

pub fn decic_family(a: &BigInt) -> DecicMember {
    let one = BigInt::from(1);
    let two_a1 = BigInt::from(2) * a + 1u32;
    let four_a1 = BigInt::from(4) * a + 1u32;
    let f = IntPoly::new(vec![
        one.clone(),
        one.clone(),
        one.clone(),
        one.clone(),
        two_a1.clone(),
        four_a1.clone(),
        two_a1,
        one.clone(),
        one.clone(),
        one.clone(),
        one.clone(),
    ]);
    let g = IntPoly::new(vec![
        four_a1,
        BigInt::from(2) * a + 3u32,
        BigInt::from(-3),
        BigInt::from(-4),
        one.clone(),
        one,
    ]);
    DecicMember {
        a: a.clone(),
        f,
        g,
        h_value: decic_disc_poly().eval(a),
    }
}

/// `8192y^5 + 125008y^4 + 156112y^3 - 139876y^2 - 15972y + 14641`, the
/// absolute discriminant of the quintic companion.
pub fn decic_disc_quintic() -> IntPoly {
    IntPoly::from_i64s(&[14641, -15972, -139876, 156112, 125008, 8192])
}

/// `h(y) = (8y + 11)` times [`decic_disc_quintic`].
pub fn decic_disc_poly() -> IntPoly {
    &IntPoly::from_i64s(&[11, 8]) * &decic_disc_quintic()
}

/// `x^6 + x^5 + (2a+1)x^4 + (4a+1)x^3 + (2a+1)x^2 + x + 1`, its cubic companion
/// `x^3 + x^2 + (2a-2)x + 4a - 1`, and `H(a)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SexticMember {
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub a: BigInt,
    pub f: IntPoly,
    pub g: IntPoly,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub h_value: BigInt,
}

pub fn sextic_family(a: &BigInt) -> SexticMember {
    let one = BigInt::from(1);
    let two_a1 = BigInt::from(2) * a + 1u32;
    let f = IntPoly::new(vec![
        one.clone(),
        one.clone(),
        two_a1.clone(),
        BigInt::from(4) * a + 1u32,
        two_a1,
        one.clone(),
        one.clone(),
    ]);
    let g = IntPoly::new(vec![
        BigInt::from(4) * a - 1u32,
        BigInt::from(2) * a - 2u32,
        one.clone(),
        one,
    ]);
    SexticMember {
        a: a.clone(),
        f,
        g,
        h_value: sextic_disc_poly().eval(a),
    }
}

/// `H(x) = (4x^2 + 20x - 7)(8x + 7)`.
pub fn sextic_disc_poly() -> IntPoly {
    &IntPoly::from_i64s(&[-7, 20, 4]) * &IntPoly::from_i64s(&[7, 8])
}
