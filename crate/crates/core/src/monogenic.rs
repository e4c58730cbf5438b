//! Index-prime tests and monogenicity verdicts.
//!
//! A prime `p` divides the index `[Z_K : Z[θ]]` of a monic irreducible `f`
//! exactly when `f` lies in `<p, h>^2` for some `h` irreducible modulo `p`.
//! Two routes to that condition are implemented: the Dedekind gcd test and a
//! direct membership check.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{factor_int, is_prime_u64, is_squarefree_int, Effort, IntFactorization, SquarefreeVerdict};
use crate::disc::discriminant;
use crate::error::{Error, Result};
use crate::modp::{
    factor_mod_p, irreducibility_certificate, irreducibility_certificate_with_disc,
    IrreducibilityCertificate, ModPoly,
};
use crate::poly::{reciprocal_to_half, IntPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexVerdict {
    DividesIndex,
    DoesNotDivideIndex,
}

impl IndexVerdict {
    pub fn divides(self) -> bool {
        self == IndexVerdict::DividesIndex
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Monogenic,
    NotMonogenic,
    Unknown,
}

/// Intermediate data of the Dedekind test at one prime.
#[derive(Debug, Clone, Serialize)]
pub struct IndexTest {
    pub p: u64,
    pub verdict: IndexVerdict,
    /// Irreducible factors of `f mod p` with multiplicity at least two.
    pub repeated_factors: Vec<(ModPoly, u32)>,
    /// `gcd(F, g*, h*)` over `F_p`; constant exactly when `p` does not divide the index.
    pub common_factor: ModPoly,
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime_u64(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p.to_string()))
    }
}

pub fn dedekind_index_test(f: &IntPoly, p: u64) -> Result<IndexVerdict> {
    Ok(dedekind_index_detail(f, p)?.verdict)
}

/// Dedekind's criterion: with `f = prod g_i^e_i mod p`, `g* = prod g_i`,
/// `h* = prod g_i^(e_i - 1)` and `F = (f - g* h*) / p`, the prime divides the
/// index iff `gcd(F, g*, h*)` is nonconstant modulo `p`.
pub fn dedekind_index_detail(f: &IntPoly, p: u64) -> Result<IndexTest> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    check_prime(p)?;
    let fac = factor_mod_p(&ModPoly::from_int(f, p))?;
    let mut g_star = ModPoly::one(p);
    let mut h_star = ModPoly::one(p);
    for (g, e) in &fac.factors {
        g_star = g_star.mul(g);
        if *e > 1 {
            h_star = h_star.mul(&g.pow(u64::from(*e - 1)));
        }
    }
    let diff = f - &(&g_star.lift() * &h_star.lift());
    let big_f = diff
        .div_exact_scalar(&BigInt::from(p))
        .expect("g* h* agrees with f modulo p");
    let common = ModPoly::from_int(&big_f, p).gcd(&g_star.gcd(&h_star));
    let verdict = if common.degree().unwrap_or(0) >= 1 {
        IndexVerdict::DividesIndex
    } else {
        IndexVerdict::DoesNotDivideIndex
    };
    let repeated_factors = fac.factors.into_iter().filter(|(_, e)| *e > 1).collect();
    Ok(IndexTest {
        p,
        verdict,
        repeated_factors,
        common_factor: common,
    })
}

/// Evidence that `f = quotient h^2 + linear h + constant` with `p | linear`
/// and `p^2 | constant`, i.e. `f ∈ <p, h>^2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealSquareWitness {
    pub p: u64,
    pub h: IntPoly,
    pub quotient: IntPoly,
    pub linear: IntPoly,
    pub constant: IntPoly,
}

impl IdealSquareWitness {
    /// Recomputes `f` from the decomposition and checks the divisibility conditions.
    pub fn verify(&self, f: &IntPoly) -> bool {
        let p = BigInt::from(self.p);
        let h2 = &self.h * &self.h;
        let rebuilt = &(&(&self.quotient * &h2) + &(&self.linear * &self.h)) + &self.constant;
        rebuilt == *f
            && self.linear.div_exact_scalar(&p).is_some()
            && self.constant.div_exact_scalar(&(&p * &p)).is_some()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Membership {
    pub member: bool,
    pub witness: Option<IdealSquareWitness>,
}

/// Decides `f ∈ <p^2, p h, h^2>` for monic `h` irreducible modulo `p`.
///
/// Write `f = Q h^2 + R1 h + R0` with `deg R0, deg R1 < deg h`. The map
/// `f -> (R1 mod p, R0 mod p^2)` is additive, kills every generator of the
/// ideal, and has image of size `p^(3 deg h) = |Z[x] / <p, h>^2|`, so its
/// kernel is exactly the ideal.
pub fn ideal_square_membership(f: &IntPoly, p: u64, h: &IntPoly) -> Result<Membership> {
    check_prime(p)?;
    let dh = h.degree().ok_or(Error::ZeroPolynomial)?;
    if !h.is_monic() {
        return Err(Error::NotMonic);
    }
    if dh == 0 || !factor_mod_p(&ModPoly::from_int(h, p))?.is_irreducible() {
        return Err(Error::NotIrreducibleModP(p));
    }
    let (quotient, rem) = f.divrem_monic(&(h * h))?;
    let (linear, constant) = rem.divrem_monic(h)?;
    let w = IdealSquareWitness {
        p,
        h: h.clone(),
        quotient,
        linear,
        constant,
    };
    let pb = BigInt::from(p);
    let member = w.linear.div_exact_scalar(&pb).is_some()
        && w.constant.div_exact_scalar(&(&pb * &pb)).is_some();
    Ok(Membership {
        member,
        witness: member.then_some(w),
    })
}

/// Every ideal `<p, h>` whose square contains `f`, with `h` running over the
/// repeated irreducible factors of `f mod p` lifted to coefficients in
/// `(-p/2, p/2]`. Empty exactly when `p` does not divide the index.
pub fn ideal_square_witnesses(f: &IntPoly, p: u64) -> Result<Vec<IdealSquareWitness>> {
    check_prime(p)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let fac = factor_mod_p(&ModPoly::from_int(f, p))?;
    let mut out = Vec::new();
    for (g, e) in &fac.factors {
        if *e < 2 {
            continue;
        }
        if let Some(w) = ideal_square_membership(f, p, &g.lift_symmetric())?.witness {
            out.push(w);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct MonogenicityReport {
    pub poly: IntPoly,
    pub irreducibility: IrreducibilityCertificate,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub disc: BigInt,
    pub disc_factorization: IntFactorization,
    #[serde(serialize_with = "crate::report::ser_display_vec")]
    pub candidate_primes: Vec<BigUint>,
    pub index_primes: Vec<u64>,
    pub per_prime_detail: BTreeMap<u64, IndexVerdict>,
    pub verdict: Verdict,
    /// Why the verdict is not `Monogenic`, when it is not.
    pub reasons: Vec<String>,
}

impl MonogenicityReport {
    pub fn is_separable(&self) -> bool {
        !self.disc.is_zero()
    }
}

/// Runs the Dedekind test at every prime whose square divides `Δ(f)`.
pub fn is_monogenic(f: &IntPoly, effort: &Effort) -> Result<MonogenicityReport> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if n == 0 {
        return Err(Error::InvalidParams("constant polynomial".into()));
    }
    let disc = discriminant(f)?;
    let irreducibility = irreducibility_certificate_with_disc(f, &disc, effort)?;
    let disc_factorization = factor_int(&disc, effort);
    let mut reasons = Vec::new();
    if disc.is_zero() {
        reasons.push("discriminant is zero: f has a repeated factor".to_string());
        return Ok(MonogenicityReport {
            poly: f.clone(),
            irreducibility,
            disc,
            disc_factorization,
            candidate_primes: Vec::new(),
            index_primes: Vec::new(),
            per_prime_detail: BTreeMap::new(),
            verdict: Verdict::Unknown,
            reasons,
        });
    }
    let candidate_primes = disc_factorization.square_divisor_primes();
    let small: Vec<u64> = candidate_primes.iter().filter_map(ToPrimitive::to_u64).collect();
    for big in candidate_primes.iter().filter(|q| q.to_u64().is_none()) {
        reasons.push(format!("candidate prime {big} exceeds the modular arithmetic range"));
    }
    if !disc_factorization.is_complete()
        && disc_factorization.cofactor_status != crate::arith::CofactorStatus::CertifiedSquarefree
    {
        reasons.push(format!(
            "discriminant cofactor {} not fully factored",
            disc_factorization.cofactor
        ));
    }
    let results: Vec<(u64, IndexVerdict)> = small
        .par_iter()
        .map(|&p| dedekind_index_test(f, p).map(|v| (p, v)))
        .collect::<Result<_>>()?;
    let per_prime_detail: BTreeMap<u64, IndexVerdict> = results.into_iter().collect();
    let index_primes: Vec<u64> = per_prime_detail
        .iter()
        .filter(|(_, v)| v.divides())
        .map(|(p, _)| *p)
        .collect();
    match &irreducibility {
        IrreducibilityCertificate::Irreducible { .. } => {}
        IrreducibilityCertificate::Reducible { .. } => reasons.push("f is reducible".into()),
        IrreducibilityCertificate::Unknown { .. } => {
            reasons.push("irreducibility not certified".into())
        }
    }
    let verdict = if !index_primes.is_empty() {
        for p in &index_primes {
            reasons.push(format!("{p} divides the index"));
        }
        Verdict::NotMonogenic
    } else if reasons.is_empty() {
        Verdict::Monogenic
    } else {
        Verdict::Unknown
    };
    Ok(MonogenicityReport {
        poly: f.clone(),
        irreducibility,
        disc,
        disc_factorization,
        candidate_primes,
        index_primes,
        per_prime_detail,
        verdict,
        reasons,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SufficientVerdict {
    MonogenicProven,
    Inconclusive,
}

/// Outcome of the test "f irreducible, f(1) f(-1) squarefree and g monogenic".
#[derive(Debug, Clone, Serialize)]
pub struct SufficientReport {
    pub poly: IntPoly,
    pub verdict: SufficientVerdict,
    pub g: IntPoly,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub f_one_times_f_minus_one: BigInt,
    pub squarefree: SquarefreeVerdict,
    pub irreducibility: IrreducibilityCertificate,
    pub g_report: MonogenicityReport,
    /// The conditions that could not be verified.
    pub failing: Vec<String>,
}

fn reciprocal_conditions(
    f: &IntPoly,
    effort: &Effort,
) -> Result<(IntPoly, BigInt, SquarefreeVerdict, MonogenicityReport, Vec<String>)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let g = reciprocal_to_half(f)?;
    let ends = f.eval_i64(1) * f.eval_i64(-1);
    let squarefree = is_squarefree_int(&ends, effort);
    let g_report = is_monogenic(&g, effort)?;
    let mut failing = Vec::new();
    if !squarefree.is_squarefree() {
        failing.push(format!("f(1)f(-1) = {ends} is {}", squarefree.label()));
    }
    if g_report.verdict != Verdict::Monogenic {
        failing.push(format!("g = {g} is not proven monogenic"));
    }
    Ok((g, ends, squarefree, g_report, failing))
}

/// Never concludes non-monogenicity: failing a condition only makes the
/// outcome inconclusive.
pub fn sufficient_reciprocal_monogenic(f: &IntPoly, effort: &Effort) -> Result<SufficientReport> {
    let (g, ends, squarefree, g_report, mut failing) = reciprocal_conditions(f, effort)?;
    let irreducibility = irreducibility_certificate(f, effort)?;
    if !irreducibility.is_irreducible() {
        failing.push(format!("irreducibility of f is {}", irreducibility.label()));
    }
    let verdict = if failing.is_empty() {
        SufficientVerdict::MonogenicProven
    } else {
        SufficientVerdict::Inconclusive
    };
    Ok(SufficientReport {
        poly: f.clone(),
        verdict,
        g,
        f_one_times_f_minus_one: ends,
        squarefree,
        irreducibility,
        g_report,
        failing,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct PowerCompReport {
    pub poly: IntPoly,
    pub k: usize,
    pub composed: IntPoly,
    pub verdict: SufficientVerdict,
    pub g: IntPoly,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub f_one_times_f_minus_one: BigInt,
    pub squarefree: SquarefreeVerdict,
    pub g_verdict: Verdict,
    pub composed_irreducibility: IrreducibilityCertificate,
    /// Dedekind verdict on `f(x^k)` at each prime dividing `k`.
    pub prime_checks: BTreeMap<u64, IndexVerdict>,
    pub failing: Vec<String>,
}

/// Monogenicity of `f(x^k)` for reciprocal `f` from the companion of `f`,
/// `f(1) f(-1)`, and the index test of `f(x^k)` at the primes dividing `k`.
pub fn power_compositional_check(f: &IntPoly, k: usize, effort: &Effort) -> Result<PowerCompReport> {
    if k < 2 {
        return Err(Error::InvalidParams("k must be at least 2".into()));
    }
    let (g, ends, squarefree, g_report, mut failing) = reciprocal_conditions(f, effort)?;
    let composed = f.compose_power(k);
    let composed_irreducibility = irreducibility_certificate(&composed, effort)?;
    if !composed_irreducibility.is_irreducible() {
        failing.push(format!(
            "irreducibility of f(x^{k}) is {}",
            composed_irreducibility.label()
        ));
    }
    let kf = factor_int(&BigInt::from(k), effort);
    let mut prime_checks = BTreeMap::new();
    for (p, _) in &kf.factors {
        let p = p.to_u64().expect("k fits in u64");
        let v = dedekind_index_test(&composed, p)?;
        if v.divides() {
            failing.push(format!("{p} divides the index of f(x^{k})"));
        }
        prime_checks.insert(p, v);
    }
    let verdict = if failing.is_empty() {
        SufficientVerdict::MonogenicProven
    } else {
        SufficientVerdict::Inconclusive
    };
    Ok(PowerCompReport {
        poly: f.clone(),
        k,
        composed,
        verdict,
        g,
        f_one_times_f_minus_one: ends,
        squarefree,
        g_verdict: g_report.verdict,
        composed_irreducibility,
        prime_checks,
        failing,
    })
}
