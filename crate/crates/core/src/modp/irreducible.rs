use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{factor_mod_p, ModPoly};
use crate::arith::{factor_int, primes, Effort};
use crate::disc::discriminant;
use crate::error::{Error, Result};
use crate::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IrreducibleWitness {
    Linear,
    /// The reduction modulo `p` is irreducible.
    ModP { p: u64 },
    /// No proper subset of factor degrees is achievable at every listed prime.
    DegreeSieve { primes: Vec<u64> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReducibleEvidence {
    RationalRoot {
        #[serde(serialize_with = "crate::report::ser_bigint")]
        root: BigInt,
    },
    /// `Δ(f) = 0`, so `gcd(f, f')` is a proper factor.
    RepeatedFactor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum IrreducibilityCertificate {
    Irreducible { witness: IrreducibleWitness },
    Reducible { evidence: ReducibleEvidence },
    Unknown { primes_tried: Vec<u64> },
}

impl IrreducibilityCertificate {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, IrreducibilityCertificate::Irreducible { .. })
    }

    pub fn is_reducible(&self) -> bool {
        matches!(self, IrreducibilityCertificate::Reducible { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            IrreducibilityCertificate::Irreducible { .. } => "irreducible",
            IrreducibilityCertificate::Reducible { .. } => "reducible",
            IrreducibilityCertificate::Unknown { .. } => "unknown",
        }
    }
}

pub fn irreducibility_certificate(f: &IntPoly, effort: &Effort) -> Result<IrreducibilityCertificate> {
    let disc = match f.degree() {
        Some(d) if d >= 1 => discriminant(f)?,
        _ => BigInt::zero(),
    };
    irreducibility_certificate_with_disc(f, &disc, effort)
}

/// As [`irreducibility_certificate`] with `Δ(f)` supplied by the caller.
pub fn irreducibility_certificate_with_disc(
    f: &IntPoly,
    disc: &BigInt,
    effort: &Effort,
) -> Result<IrreducibilityCertificate> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::InvalidParams("constant polynomial".into()));
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if n == 1 {
        return Ok(IrreducibilityCertificate::Irreducible {
            witness: IrreducibleWitness::Linear,
        });
    }
    if let Some(root) = integer_root(f, effort) {
        return Ok(IrreducibilityCertificate::Reducible {
            evidence: ReducibleEvidence::RationalRoot { root },
        });
    }
    if disc.is_zero() {
        return Ok(IrreducibilityCertificate::Reducible {
            evidence: ReducibleEvidence::RepeatedFactor,
        });
    }
    // reachable[k]: some product of factors has degree k at every prime so far
    let mut reachable = vec![true; n + 1];
    let mut tried = Vec::new();
    for p in primes() {
        if tried.len() >= effort.prime_budget {
            break;
        }
        if (disc % BigInt::from(p)).is_zero() {
            continue;
        }
        tried.push(p);
        let fac = factor_mod_p(&ModPoly::from_int(f, p))?;
        if fac.is_irreducible() {
            return Ok(IrreducibilityCertificate::Irreducible {
                witness: IrreducibleWitness::ModP { p },
            });
        }
        let mut here = vec![false; n + 1];
        here[0] = true;
        for (g, _) in &fac.factors {
            let d = g.degree().expect("nonconstant");
            for k in (d..=n).rev() {
                here[k] |= here[k - d];
            }
        }
        for (r, h) in reachable.iter_mut().zip(&here) {
            *r &= *h;
        }
        if reachable[1..n].iter().all(|r| !r) {
            return Ok(IrreducibilityCertificate::Irreducible {
                witness: IrreducibleWitness::DegreeSieve { primes: tried },
            });
        }
    }
    Ok(IrreducibilityCertificate::Unknown { primes_tried: tried })
}

/// An integer root of a monic `f`, searched among divisors of `f(0)` when
/// those can be enumerated.
fn integer_root(f: &IntPoly, effort: &Effort) -> Option<BigInt> {
    let a0 = f.constant_term();
    if a0.is_zero() {
        return Some(BigInt::zero());
    }
    let bound = f.max_abs_coeff() + 1u32;
    let fac = factor_int(&a0, effort);
    if !fac.is_complete() {
        return None;
    }
    let mut divisors = vec![BigUint::one()];
    for (prime, e) in &fac.factors {
        let mut next = Vec::with_capacity(divisors.len() * (*e as usize + 1));
        for d in &divisors {
            let mut v = d.clone();
            for _ in 0..=*e {
                next.push(v.clone());
                v *= prime;
            }
        }
        divisors = next;
        if divisors.len() > 1 << 16 {
            return None;
        }
    }
    divisors.sort();
    for d in divisors {
        let d = BigInt::from(d);
        if d > bound.abs() {
            break;
        }
        for cand in [d.clone(), -d] {
            if f.eval(&cand).is_zero() {
                return Some(cand);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn cert(c: &[i64]) -> IrreducibilityCertificate {
        irreducibility_certificate(&p(c), &Effort::default()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            cert(&[1, 1, 1]),
            IrreducibilityCertificate::Irreducible {
                witness: IrreducibleWitness::ModP { p: 2 }
            }
        );
        assert_eq!(
            cert(&[1, 0, 0, 3, 0, 0, 1]),
            IrreducibilityCertificate::Irreducible {
                witness: IrreducibleWitness::ModP { p: 2 }
            }
        );
        assert!(matches!(
            cert(&[-1, 0, 1]),
            IrreducibilityCertificate::Reducible {
                evidence: ReducibleEvidence::RationalRoot { .. }
            }
        ));
        assert!(cert(&[0, 0, 1]).is_reducible());
        assert!(cert(&[1, 2, 3, 2, 1]).is_reducible());
    }

    #[test]
    fn degree_sieve_needed() {
        // x^4 + 8x + 12 has group A4: no 4-cycles, so no irreducible reduction,
        // but patterns (1,3) and (2,2) together rule out every proper factor
        let c = cert(&[12, 8, 0, 0, 1]);
        assert!(matches!(
            c,
            IrreducibilityCertificate::Irreducible {
                witness: IrreducibleWitness::DegreeSieve { .. }
            }
        ), "{c:?}");
        // x^4 + 1 splits modulo every prime into pieces of degree at most 2
        assert!(matches!(cert(&[1, 0, 0, 0, 1]), IrreducibilityCertificate::Unknown { .. }));
    }

    #[test]
    fn product_without_roots_stays_unknown() {
        // (x^2+1)(x^2+x+1) has no rational root and no certificate
        let f = &p(&[1, 0, 1]) * &p(&[1, 1, 1]);
        let c = irreducibility_certificate(&f, &Effort::default()).unwrap();
        assert!(matches!(c, IrreducibilityCertificate::Unknown { .. }));
    }
}
