//! Cycle types of the Galois group read off from factorizations modulo
//! unramified primes, and a resolver for quintics that separates `A5` and `S5`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::arith::{is_perfect_square, primes, Effort};
use crate::disc::discriminant;
use crate::error::{Error, Result};
use crate::modp::{factor_mod_p, irreducibility_certificate_with_disc, IrreducibilityCertificate, ModPoly};
use crate::poly::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiscSquare {
    Square,
    NotSquare,
}

pub fn disc_is_square(n: &BigInt) -> DiscSquare {
    if is_perfect_square(n) {
        DiscSquare::Square
    } else {
        DiscSquare::NotSquare
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleSample {
    pub p: u64,
    /// Sorted factor degrees: the cycle type of the Frobenius at `p`.
    pub pattern: Vec<usize>,
    pub simple: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Conclusion {
    ProvenGroup(String),
    Constraint(Vec<String>),
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct GaloisEvidence {
    pub poly: IntPoly,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub disc: BigInt,
    pub samples: Vec<CycleSample>,
    /// Primes passed over because they divide `Δ(f)`.
    pub skipped_primes: Vec<u64>,
    pub disc_square: DiscSquare,
    pub irreducibility: Option<IrreducibilityCertificate>,
    pub conclusion: Conclusion,
}

impl GaloisEvidence {
    /// Distinct cycle types seen, sorted.
    pub fn cycle_types(&self) -> BTreeSet<Vec<usize>> {
        self.samples.iter().map(|s| s.pattern.clone()).collect()
    }

    pub fn has_cycle_type(&self, t: &[usize]) -> bool {
        self.samples.iter().any(|s| s.pattern == t)
    }
}

fn scan(f: &IntPoly, budget: usize) -> Result<(BigInt, Vec<CycleSample>, Vec<u64>)> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::InvalidParams("constant polynomial".into()));
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let disc = discriminant(f)?;
    if disc.is_zero() {
        return Err(Error::Inseparable);
    }
    let mut samples = Vec::new();
    let mut skipped = Vec::new();
    for p in primes() {
        if samples.len() >= budget {
            break;
        }
        if (&disc % BigInt::from(p)).is_zero() {
            skipped.push(p);
            continue;
        }
        let fac = factor_mod_p(&ModPoly::from_int(f, p))?;
        let mut pattern: Vec<usize> = fac
            .factors
            .iter()
            .map(|(g, _)| g.degree().expect("nonconstant"))
            .collect();
        pattern.sort_unstable();
        samples.push(CycleSample {
            p,
            pattern,
            simple: fac.is_squarefree(),
        });
    }
    Ok((disc, samples, skipped))
}

fn constraints(n: usize, samples: &[CycleSample], square: DiscSquare) -> Vec<String> {
    let mut facts = Vec::new();
    if square == DiscSquare::Square {
        facts.push(format!("contained in A{n}"));
    } else {
        facts.push(format!("not contained in A{n}"));
    }
    let types: BTreeSet<&Vec<usize>> = samples.iter().map(|s| &s.pattern).collect();
    for t in types {
        let parts: Vec<String> = t.iter().map(ToString::to_string).collect();
        facts.push(format!("contains cycle type ({})", parts.join(",")));
    }
    facts
}

/// Frobenius cycle types at the first `budget` primes not dividing `Δ(f)`.
pub fn cycle_type_scan(f: &IntPoly, budget: usize) -> Result<GaloisEvidence> {
    let (disc, samples, skipped_primes) = scan(f, budget)?;
    let disc_square = disc_is_square(&disc);
    let n = f.degree().expect("checked");
    let conclusion = if samples.is_empty() {
        Conclusion::Inconclusive
    } else {
        Conclusion::Constraint(constraints(n, &samples, disc_square))
    };
    Ok(GaloisEvidence {
        poly: f.clone(),
        disc,
        samples,
        skipped_primes,
        disc_square,
        irreducibility: None,
        conclusion,
    })
}

/// `A5` or `S5` once the quintic is proven irreducible and a 3-cycle has been
/// observed: a transitive subgroup of `S5` with a 3-cycle and a 5-cycle is
/// `A5` or `S5`, and transitivity on five points already forces a 5-cycle.
/// The square class of `Δ` then decides between the two.
pub fn quintic_galois(g: &IntPoly, effort: &Effort) -> Result<GaloisEvidence> {
    match g.degree() {
        Some(5) => {}
        Some(d) => return Err(Error::NotQuintic(d)),
        None => return Err(Error::ZeroPolynomial),
    }
    let mut ev = cycle_type_scan(g, effort.galois_budget)?;
    let cert = irreducibility_certificate_with_disc(g, &ev.disc, effort)?;
    let has_three = ev.has_cycle_type(&[1, 1, 3]);
    if cert.is_irreducible() && has_three {
        let name = match ev.disc_square {
            DiscSquare::Square => "A5",
            DiscSquare::NotSquare => "S5",
        };
        ev.conclusion = Conclusion::ProvenGroup(name.into());
    } else if let Conclusion::Constraint(facts) = &mut ev.conclusion {
        if cert.is_irreducible() {
            facts.push("transitive (irreducible), contains a 5-cycle".into());
        } else if cert.is_reducible() {
            facts.push("intransitive (reducible)".into());
        }
    }
    ev.irreducibility = Some(cert);
    Ok(ev)
}
