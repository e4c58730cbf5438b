use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use super::montgomery::{brent_rho, Mont};
use super::{is_prime_biguint, small_prime_table, Effort};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CofactorStatus {
    /// Factorization is complete; the cofactor is 1.
    Complete,
    /// The cofactor has no prime factor below the trial bound, is neither a
    /// prime nor a perfect power, and is below the cube of the trial bound,
    /// so it is a product of two distinct primes.
    CertifiedSquarefree,
    Unknown,
}

/// `sign * prod(p^e) * cofactor == n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntFactorization {
    pub sign: i8,
    pub factors: Vec<(BigUint, u32)>,
    pub cofactor: BigUint,
    pub cofactor_status: CofactorStatus,
}

impl IntFactorization {
    pub fn is_complete(&self) -> bool {
        self.cofactor_status == CofactorStatus::Complete
    }

    pub fn reassemble(&self) -> BigInt {
        let mag = self
            .factors
            .iter()
            .fold(self.cofactor.clone(), |acc, (p, e)| acc * p.pow(*e));
        match self.sign {
            0 => BigInt::zero(),
            s if s < 0 => -BigInt::from(mag),
            _ => BigInt::from(mag),
        }
    }

    /// Primes whose square divides the input, among the fully factored part.
    pub fn square_divisor_primes(&self) -> Vec<BigUint> {
        self.factors
            .iter()
            .filter(|(_, e)| *e >= 2)
            .map(|(p, _)| p.clone())
            .collect()
    }
}

#[derive(Serialize)]
struct FactorEntry {
    prime: String,
    exponent: u32,
}

impl Serialize for IntFactorization {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            sign: i8,
            factors: Vec<FactorEntry>,
            cofactor: String,
            cofactor_status: CofactorStatus,
        }
        Repr {
            sign: self.sign,
            factors: self
                .factors
                .iter()
                .map(|(p, e)| FactorEntry {
                    prime: p.to_string(),
                    exponent: *e,
                })
                .collect(),
            cofactor: self.cofactor.to_string(),
            cofactor_status: self.cofactor_status,
        }
        .serialize(serializer)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SquarefreeVerdict {
    Squarefree,
    /// Carries the smallest prime whose square divides `n`. `None` only for
    /// `n = 0`. If the repeated part could not be split, the witness is the
    /// unfactored base of that square.
    NotSquarefree(Option<BigUint>),
    Unknown,
}

impl SquarefreeVerdict {
    pub fn is_squarefree(&self) -> bool {
        matches!(self, SquarefreeVerdict::Squarefree)
    }

    pub fn label(&self) -> &'static str {
        match self {
            SquarefreeVerdict::Squarefree => "squarefree",
            SquarefreeVerdict::NotSquarefree(_) => "not_squarefree",
            SquarefreeVerdict::Unknown => "unknown",
        }
    }
}

impl Serialize for SquarefreeVerdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            verdict: &'static str,
            #[serde(skip_serializing_if = "Option::is_none")]
            witness: Option<String>,
        }
        let witness = match self {
            SquarefreeVerdict::NotSquarefree(w) => w.as_ref().map(ToString::to_string),
            _ => None,
        };
        Repr {
            verdict: self.label(),
            witness,
        }
        .serialize(serializer)
    }
}

fn trial_divide(m: &mut BigUint, bound: u64, found: &mut BTreeMap<BigUint, u32>) {
    let table = small_prime_table();
    if let Some(mut v) = m.to_u64() {
        for &p in table.iter().take_while(|&&p| p <= bound) {
            if p * p > v {
                break;
            }
            if v % p == 0 {
                let mut e = 0;
                while v % p == 0 {
                    v /= p;
                    e += 1;
                }
                *found.entry(BigUint::from(p)).or_default() += e;
            }
        }
        *m = BigUint::from(v);
        return;
    }
    for &p in table.iter().take_while(|&&p| p <= bound) {
        if (&*m % p).is_zero() {
            let mut e = 0;
            while (&*m % p).is_zero() {
                *m /= p;
                e += 1;
            }
            *found.entry(BigUint::from(p)).or_default() += e;
            if let Some(v) = m.to_u64() {
                if v < p.saturating_mul(p) {
                    break;
                }
            }
        }
    }
}

/// `Some((r, k))` with `r^k == n`, `k >= 2` prime, for the smallest such `k`.
fn perfect_power(n: &BigUint) -> Option<(BigUint, u32)> {
    let bits = n.bits() as u32;
    for k in (2..=bits).filter(|&k| super::is_prime_u64(u64::from(k))) {
        let r = n.nth_root(k);
        if r.pow(k) == *n {
            return Some((r, k));
        }
    }
    None
}

fn rho_big(n: &BigUint, c: &BigUint, x0: &BigUint, max_iter: u64) -> Option<BigUint> {
    const BATCH: u64 = 64;
    let f = |v: &BigUint| (v * v + c) % n;
    let one = BigUint::one();
    let mut y = x0 % n;
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut q = one.clone();
    let mut g = one.clone();
    let mut r: u64 = 1;
    let mut iters = 0;
    let absdiff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    while g == one {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g == one {
            ys = y.clone();
            for _ in 0..BATCH.min(r - k) {
                y = f(&y);
                q = (q * absdiff(&x, &y)) % n;
            }
            g = q.gcd(n);
            k += BATCH;
            iters += BATCH;
            if iters > max_iter {
                return None;
            }
        }
        r *= 2;
    }
    if g == *n {
        loop {
            ys = f(&ys);
            g = absdiff(&x, &ys).gcd(n);
            if g > one {
                break;
            }
        }
    }
    (g != *n).then_some(g)
}

/// Nontrivial factor of the odd composite `n`, or `None` when the budget runs out.
fn find_factor(n: &BigUint, effort: &Effort, rng: &mut ChaCha8Rng) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    let restarts = effort.rho_restarts.max(1);
    let per_try = (effort.rho_iterations / u64::from(restarts)).max(1024);
    if let Some(v) = n.to_u128().filter(|&v| v < Mont::LIMIT) {
        for _ in 0..restarts {
            let c = rng.gen_range(1..v.min(1 << 62));
            let x0 = rng.gen_range(0..v.min(1 << 62));
            if let Some(d) = brent_rho(v, c, x0, per_try) {
                return Some(BigUint::from(d));
            }
        }
        return None;
    }
    for _ in 0..restarts {
        let c = BigUint::from(rng.gen_range(1u64..1 << 62));
        let x0 = BigUint::from(rng.gen::<u64>());
        if let Some(d) = rho_big(n, &c, &x0, per_try) {
            return Some(d);
        }
    }
    None
}

/// Factor `n` within the given effort. Incomplete results keep the unfactored
/// part in `cofactor`; nothing is ever thrown.
pub fn factor_int(n: &BigInt, effort: &Effort) -> IntFactorization {
    let sign: i8 = match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    };
    if sign == 0 {
        return IntFactorization {
            sign,
            factors: Vec::new(),
            cofactor: BigUint::one(),
            cofactor_status: CofactorStatus::Complete,
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(effort.seed);
    let mut found: BTreeMap<BigUint, u32> = BTreeMap::new();
    let mut m = n.magnitude().clone();
    trial_divide(&mut m, effort.trial_bound, &mut found);

    let one = BigUint::one();
    let mut stack: Vec<(BigUint, u32)> = Vec::new();
    if m > one {
        stack.push((m, 1));
    }
    let mut stuck: Vec<(BigUint, u32)> = Vec::new();
    while let Some((c, e)) = stack.pop() {
        if c == one {
            continue;
        }
        if is_prime_biguint(&c) {
            *found.entry(c).or_default() += e;
            continue;
        }
        if let Some((r, k)) = perfect_power(&c) {
            stack.push((r, e * k));
            continue;
        }
        match find_factor(&c, effort, &mut rng) {
            Some(d) => {
                let other = &c / &d;
                stack.push((d, e));
                stack.push((other, e));
            }
            None => stuck.push((c, e)),
        }
    }

    // Strip known primes from the stuck pieces, then split pieces that share a
    // common factor.
    let mut changed = true;
    while changed {
        changed = false;
        for (c, e) in stuck.iter_mut() {
            for (p, pe) in found.iter_mut() {
                while (&*c % p).is_zero() {
                    *c /= p;
                    *pe += *e;
                    changed = true;
                }
            }
        }
        stuck.retain(|(c, _)| *c > one);
        'pairs: for i in 0..stuck.len() {
            for j in i + 1..stuck.len() {
                let g = stuck[i].0.gcd(&stuck[j].0);
                if g > one {
                    let (ci, ei) = stuck.remove(j);
                    let (cj, ej) = stuck.remove(i);
                    for (piece, exp) in [(ci, ei), (cj, ej)] {
                        let rest = &piece / &g;
                        stuck.push((g.clone(), exp));
                        if rest > one {
                            stuck.push((rest, exp));
                        }
                    }
                    changed = true;
                    break 'pairs;
                }
            }
        }
        if changed {
            // merge equal pieces and promote any that became prime
            let mut merged: BTreeMap<BigUint, u32> = BTreeMap::new();
            for (c, e) in stuck.drain(..) {
                *merged.entry(c).or_default() += e;
            }
            for (c, e) in merged {
                if is_prime_biguint(&c) {
                    *found.entry(c).or_default() += e;
                } else {
                    stuck.push((c, e));
                }
            }
        }
    }

    let cofactor = stuck
        .iter()
        .fold(one.clone(), |acc, (c, e)| acc * c.pow(*e));
    let cofactor_status = if stuck.is_empty() {
        CofactorStatus::Complete
    } else {
        let b = BigUint::from(effort.trial_bound);
        let cube = &b * &b * &b;
        let certified = stuck.iter().all(|(c, e)| *e == 1 && *c < cube)
            && stuck
                .iter()
                .enumerate()
                .all(|(i, (a, _))| stuck[i + 1..].iter().all(|(b, _)| a.gcd(b) == one));
        if certified {
            CofactorStatus::CertifiedSquarefree
        } else {
            CofactorStatus::Unknown
        }
    };
    IntFactorization {
        sign,
        factors: found.into_iter().collect(),
        cofactor,
        cofactor_status,
    }
}

pub fn is_squarefree_int(n: &BigInt, effort: &Effort) -> SquarefreeVerdict {
    if n.is_zero() {
        return SquarefreeVerdict::NotSquarefree(None);
    }
    squarefree_from_factorization(&factor_int(n, effort))
}

pub(crate) fn squarefree_from_factorization(fac: &IntFactorization) -> SquarefreeVerdict {
    if fac.sign == 0 {
        return SquarefreeVerdict::NotSquarefree(None);
    }
    if let Some((p, _)) = fac.factors.iter().find(|(_, e)| *e >= 2) {
        return SquarefreeVerdict::NotSquarefree(Some(p.clone()));
    }
    match fac.cofactor_status {
        CofactorStatus::Complete | CofactorStatus::CertifiedSquarefree => {
            SquarefreeVerdict::Squarefree
        }
        CofactorStatus::Unknown => SquarefreeVerdict::Unknown,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(n: i64) -> IntFactorization {
        factor_int(&BigInt::from(n), &Effort::default())
    }

    fn pairs(f: &IntFactorization) -> Vec<(u64, u32)> {
        f.factors
            .iter()
            .map(|(p, e)| (p.to_u64().unwrap(), *e))
            .collect()
    }

    #[test]
    fn documented_examples() {
        assert_eq!(pairs(&fac(255)), vec![(3, 1), (5, 1), (17, 1)]);
        assert_eq!(pairs(&fac(50)), vec![(2, 1), (5, 2)]);
        assert_eq!(
            pairs(&fac(5 * 19 * 19 * 1559)),
            vec![(5, 1), (19, 2), (1559, 1)]
        );
        let f = fac(-13 * 17 * 179);
        assert_eq!(f.sign, -1);
        assert_eq!(f.reassemble(), BigInt::from(-13 * 17 * 179));
    }

    #[test]
    fn zero_and_units() {
        let z = fac(0);
        assert_eq!(z.sign, 0);
        assert_eq!(z.reassemble(), BigInt::zero());
        assert!(fac(1).factors.is_empty());
        assert_eq!(fac(-1).reassemble(), BigInt::from(-1));
    }

    #[test]
    fn large_semiprimes_and_powers() {
        let p = BigInt::from(1_000_000_007u64);
        let q = BigInt::from(998_244_353u64);
        let r = BigInt::from(2_305_843_009_213_693_951u64); // 2^61 - 1
        let n = &p * &q * &r * &r;
        let f = factor_int(&n, &Effort::default());
        assert!(f.is_complete());
        assert_eq!(f.reassemble(), n);
        assert_eq!(f.factors.len(), 3);
        let sq = BigInt::from(1_000_000_007u64).pow(6);
        let f = factor_int(&sq, &Effort::default());
        assert_eq!(f.factors, vec![(BigUint::from(1_000_000_007u64), 6)]);
    }

    #[test]
    fn beyond_mont_range() {
        // (2^127 - 1) * 1000003 * 1000033 exceeds the Montgomery fast path
        let m127: BigInt = (BigInt::one() << 127u32) - 1;
        let n = &m127 * BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64);
        let f = factor_int(&n, &Effort::default());
        assert!(f.is_complete());
        assert_eq!(f.reassemble(), n);
    }

    #[test]
    fn starved_budget_is_honest() {
        let effort = Effort {
            trial_bound: 100,
            rho_iterations: 1,
            rho_restarts: 1,
            ..Effort::default()
        };
        // 10007 * 10009 exceeds 100^3, so an unsplit cofactor stays Unknown
        let n = BigInt::from(10007u64 * 10009);
        let f = factor_int(&n, &effort);
        assert_eq!(f.reassemble(), n);
        if !f.is_complete() {
            assert_eq!(f.cofactor_status, CofactorStatus::Unknown);
            assert_eq!(is_squarefree_int(&n, &effort), SquarefreeVerdict::Unknown);
        }
        // 101 * 103 with rho starved: below 100^3, certified squarefree
        let n = BigInt::from(101u64 * 103);
        let f = factor_int(&n, &effort);
        assert_eq!(f.reassemble(), n);
        assert!(is_squarefree_int(&n, &effort).is_squarefree());
    }

    #[test]
    fn squarefree_examples() {
        let e = Effort::default();
        assert_eq!(
            is_squarefree_int(&BigInt::from(121), &e),
            SquarefreeVerdict::NotSquarefree(Some(BigUint::from(11u32)))
        );
        assert_eq!(
            is_squarefree_int(&BigInt::from(-13 * 17 * 179), &e),
            SquarefreeVerdict::Squarefree
        );
        assert_eq!(
            is_squarefree_int(&BigInt::zero(), &e),
            SquarefreeVerdict::NotSquarefree(None)
        );
        assert!(is_squarefree_int(&BigInt::from(-1), &e).is_squarefree());
    }
}
