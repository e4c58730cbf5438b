use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::ModPoly;
use crate::arith::{is_prime_u64, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// `unit * prod f_i^e_i` with monic irreducible `f_i`, sorted by degree and
/// then coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModPolyFactorization {
    pub p: u64,
    pub unit: u64,
    pub factors: Vec<(ModPoly, u32)>,
}

impl ModPolyFactorization {
    pub fn product(&self) -> ModPoly {
        self.factors.iter().fold(
            ModPoly::new(self.p, vec![self.unit]),
            |acc, (g, e)| acc.mul(&g.pow(u64::from(*e))),
        )
    }

    /// `(degree, multiplicity)` per factor, sorted.
    pub fn pattern(&self) -> Vec<(usize, u32)> {
        let mut v: Vec<(usize, u32)> = self
            .factors
            .iter()
            .map(|(g, e)| (g.degree().expect("nonconstant factor"), *e))
            .collect();
        v.sort_unstable();
        v
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, e)| *e == 1)
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

pub fn factor_mod_p(f: &ModPoly) -> Result<ModPolyFactorization> {
    factor_mod_p_seeded(f, DEFAULT_SEED)
}

/// Squarefree decomposition, distinct-degree splitting, then Cantor-Zassenhaus
/// equal-degree splitting driven by a generator seeded with `seed`.
pub fn factor_mod_p_seeded(f: &ModPoly, seed: u64) -> Result<ModPolyFactorization> {
    let p = f.modulus();
    let unit = f.leading().ok_or(Error::ZeroPolynomial)?;
    let monic = f.make_monic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ p.rotate_left(17));
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(&monic) {
        for (block, d) in distinct_degree(&part) {
            for g in equal_degree(&block, d, &mut rng) {
                factors.push((g, mult));
            }
        }
    }
    factors.sort();
    Ok(ModPolyFactorization { p, unit, factors })
}

fn squarefree_decomposition(f: &ModPoly) -> Vec<(ModPoly, u32)> {
    let p = f.modulus();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    let mut c = f.gcd(&df);
    let mut w = f.div_exact(&c);
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_exact(&y);
        if !z.is_one() {
            out.push((z, i));
        }
        i += 1;
        c = c.div_exact(&y);
        w = y;
    }
    if !c.is_one() {
        let root = c.pth_root();
        let pm = u32::try_from(p).expect("repeated p-th powers only occur for small p");
        for (g, e) in squarefree_decomposition(&root) {
            out.push((g, e * pm));
        }
    }
    out
}

/// Splits a monic squarefree `f` into products of irreducibles of equal degree.
fn distinct_degree(f: &ModPoly) -> Vec<(ModPoly, usize)> {
    let p = f.modulus();
    let pe = BigUint::from(p);
    let x = ModPoly::x(p);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest);
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.powmod(&pe, &rest);
        let g = h.sub(&x).gcd(&rest);
        if !g.is_one() {
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(k) = rest.degree().filter(|&k| k > 0) {
        out.push((rest, k));
    }
    out
}

fn equal_degree(f: &ModPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<ModPoly> {
    let n = f.degree().expect("nonzero");
    if n == d {
        return vec![f.clone()];
    }
    let p = f.modulus();
    let exponent = if p == 2 {
        BigUint::one()
    } else {
        (BigUint::from(p).pow(d as u32) - 1u32) >> 1
    };
    loop {
        let coeffs: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
        let a = ModPoly::new(p, coeffs);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut term = a.rem(f);
            let mut acc = term.clone();
            for _ in 1..d {
                term = term.mulmod(&term, f);
                acc = acc.add(&term);
            }
            acc
        } else {
            a.powmod(&exponent, f).sub(&ModPoly::one(p))
        };
        let g = b.gcd(f);
        let k = g.degree().unwrap_or(0);
        if k > 0 && k < n {
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&f.div_exact(&g), d, rng));
            return out;
        }
    }
}

/// Factor-degree data of `f mod p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorPattern {
    pub p: u64,
    /// `(degree, multiplicity)`, sorted.
    pub parts: Vec<(usize, u32)>,
    pub all_simple: bool,
    /// With `p` not dividing the leading coefficient, `p | Δ(f)` exactly when
    /// the reduction has a repeated factor.
    pub p_divides_disc: bool,
}

impl FactorPattern {
    /// Factor degrees with multiplicity, sorted; the cycle type when simple.
    pub fn degrees(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .parts
            .iter()
            .flat_map(|&(d, e)| std::iter::repeat_n(d, e as usize))
            .collect();
        v.sort_unstable();
        v
    }
}

pub fn factor_pattern(f: &IntPoly, p: u64) -> Result<FactorPattern> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let lc = f.leading().ok_or(Error::ZeroPolynomial)?;
    if super::is_zero_mod(lc, p) {
        return Err(Error::PrimeDividesLeading(p));
    }
    let fac = factor_mod_p(&ModPoly::from_int(f, p))?;
    let all_simple = fac.is_squarefree();
    Ok(FactorPattern {
        p,
        parts: fac.pattern(),
        all_simple,
        p_divides_disc: !all_simple,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u64, c: &[u64]) -> ModPoly {
        ModPoly::new(p, c.to_vec())
    }

    #[test]
    fn frobenius_power() {
        let fac = factor_mod_p(&m(2, &[1, 0, 0, 0, 1])).unwrap();
        assert_eq!(fac.factors, vec![(m(2, &[1, 1]), 4)]);
    }

    #[test]
    fn split_quadratic() {
        let fac = factor_mod_p(&m(5, &[1, 0, 1])).unwrap();
        assert_eq!(fac.factors, vec![(m(5, &[2, 1]), 1), (m(5, &[3, 1]), 1)]);
    }

    #[test]
    fn companion_mod_three() {
        let g5 = IntPoly::from_i64s(&[21, 13, -3, -4, 1, 1]);
        let fac = factor_mod_p(&ModPoly::from_int(&g5, 3)).unwrap();
        assert_eq!(
            fac.factors,
            vec![
                (m(3, &[0, 1]), 1),
                (m(3, &[1, 1]), 1),
                (m(3, &[1, 2, 0, 1]), 1)
            ]
        );
        let pat = factor_pattern(&g5, 3).unwrap();
        assert_eq!(pat.degrees(), vec![1, 1, 3]);
        assert!(pat.all_simple && !pat.p_divides_disc);
    }

    #[test]
    fn patterns() {
        let pat = factor_pattern(&IntPoly::from_i64s(&[-1, 0, 1]), 2).unwrap();
        assert_eq!(pat.parts, vec![(1, 2)]);
        assert!(pat.p_divides_disc);
        assert_eq!(
            factor_pattern(&IntPoly::from_i64s(&[1, 3]), 3),
            Err(Error::PrimeDividesLeading(3))
        );
    }

    #[test]
    fn mixed_multiplicities_reassemble() {
        for p in [2u64, 3, 5, 7, 1_000_000_007] {
            let a = m(p, &[1, 1, 1]);
            let b = m(p, &[p - 1, 1]);
            let c = m(p, &[2, 0, 0, 1]);
            let f = a.pow(3).mul(&b.pow(2)).mul(&c).scale(if p > 3 { 4 } else { 1 });
            let fac = factor_mod_p(&f).unwrap();
            assert_eq!(fac.product(), f, "p={p}");
            let total: usize = fac.pattern().iter().map(|&(d, e)| d * e as usize).sum();
            assert_eq!(total, f.degree().unwrap());
            for (g, _) in &fac.factors {
                let again = factor_mod_p(g).unwrap();
                assert!(again.is_irreducible());
            }
        }
    }

    #[test]
    fn large_prime_and_degree() {
        // x^p - x splits into all linear factors
        let p = 31;
        let mut c = vec![0u64; p as usize + 1];
        c[1] = p - 1;
        c[p as usize] = 1;
        let fac = factor_mod_p(&m(p, &c)).unwrap();
        assert_eq!(fac.factors.len(), p as usize);
        assert!(fac.factors.iter().all(|(g, e)| g.degree() == Some(1) && *e == 1));
    }
}
