//! Integer primality, factorization and squarefreeness.
//!
//! Primality uses strong probable-prime rounds on the first twelve prime
//! bases, which is deterministic for every input below 3.3 * 10^24 and a
//! probable-prime test above that. Factorization is trial division followed by
//! perfect-power detection and seeded Pollard-Brent rho.

mod factor;
mod montgomery;

pub use factor::{
    factor_int, is_squarefree_int, CofactorStatus, IntFactorization, SquarefreeVerdict,
};

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use montgomery::{sprp, Mont};

/// Work limits and seeds shared by the factoring and decision procedures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Effort {
    /// Trial division runs over primes up to this bound.
    pub trial_bound: u64,
    /// Rho iterations per composite before giving up on it.
    pub rho_iterations: u64,
    /// Distinct rho polynomials tried per composite.
    pub rho_restarts: u32,
    /// Primes sampled by the irreducibility certificate.
    pub prime_budget: usize,
    /// Primes scanned for cycle types.
    pub galois_budget: usize,
    pub seed: u64,
}

pub const DEFAULT_SEED: u64 = 0x5EED_1DE5_0001;

impl Default for Effort {
    fn default() -> Self {
        Effort {
            trial_bound: 1 << 14,
            rho_iterations: 1 << 27,
            rho_restarts: 8,
            prime_budget: 25,
            galois_budget: 50,
            seed: DEFAULT_SEED,
        }
    }
}

impl Effort {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub(crate) fn small_prime_table() -> &'static [u64] {
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    TABLE.get_or_init(|| primes_up_to(1 << 16))
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Primes in increasing order, unbounded.
pub fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| is_prime_u64(n))
}

pub fn is_prime_u64(n: u64) -> bool {
    is_prime_u128(u128::from(n))
}

fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        let p = u128::from(p);
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    if n < 41 * 41 {
        return true;
    }
    let mont = Mont::new(n);
    MR_BASES.iter().all(|&b| sprp(&mont, n, u128::from(b)))
}

pub(crate) fn is_prime_biguint(n: &BigUint) -> bool {
    if let Some(v) = n.to_u128() {
        if v < Mont::LIMIT {
            return is_prime_u128(v);
        }
    }
    let two = BigUint::from(2u32);
    if (n % &two).is_zero() {
        return false;
    }
    for &p in &MR_BASES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'bases: for &b in &MR_BASES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'bases;
            }
            if x == one {
                return false;
            }
        }
        return false;
    }
    true
}

/// Primality of an arbitrary integer; negative numbers, 0 and 1 are not prime.
pub fn is_prime(n: &BigInt) -> bool {
    !n.is_negative() && is_prime_biguint(n.magnitude())
}

/// Exact integer square test; negative inputs are never squares.
pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}
