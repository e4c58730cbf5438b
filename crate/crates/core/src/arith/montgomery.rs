//! Montgomery arithmetic for odd moduli below 2^127, used by Miller-Rabin and
//! Pollard-Brent rho on the fast path.

const LO: u128 = u64::MAX as u128;

#[inline]
fn mul_wide(a: u128, b: u128) -> (u128, u128) {
    let (a1, a0) = (a >> 64, a & LO);
    let (b1, b0) = (b >> 64, b & LO);
    let p00 = a0 * b0;
    let p01 = a0 * b1;
    let p10 = a1 * b0;
    let p11 = a1 * b1;
    let mid = (p00 >> 64) + (p01 & LO) + (p10 & LO);
    let lo = (p00 & LO) | (mid << 64);
    let hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    (hi, lo)
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Mont {
    n: u128,
    ninv: u128,
    r2: u128,
    one: u128,
}

impl Mont {
    pub(crate) const LIMIT: u128 = 1 << 127;

    /// `n` must be odd and below 2^127.
    pub(crate) fn new(n: u128) -> Self {
        debug_assert!(n % 2 == 1 && n < Self::LIMIT);
        let mut inv = n;
        for _ in 0..7 {
            inv = inv.wrapping_mul(2u128.wrapping_sub(n.wrapping_mul(inv)));
        }
        let one = 0u128.wrapping_sub(n) % n;
        let mut r2 = one;
        for _ in 0..128 {
            r2 <<= 1;
            if r2 >= n {
                r2 -= n;
            }
        }
        Mont {
            n,
            ninv: inv.wrapping_neg(),
            r2,
            one,
        }
    }

    #[inline]
    fn redc(&self, hi: u128, lo: u128) -> u128 {
        let m = lo.wrapping_mul(self.ninv);
        let (mh, _) = mul_wide(m, self.n);
        let carry = u128::from(lo != 0);
        let t = hi + mh + carry;
        if t >= self.n {
            t - self.n
        } else {
            t
        }
    }

    #[inline]
    pub(crate) fn mul(&self, a: u128, b: u128) -> u128 {
        let (hi, lo) = mul_wide(a, b);
        self.redc(hi, lo)
    }

    pub(crate) fn to_mont(&self, a: u128) -> u128 {
        self.mul(a % self.n, self.r2)
    }

    #[cfg(test)]
    pub(crate) fn from_mont(&self, a: u128) -> u128 {
        self.redc(0, a)
    }

    pub(crate) fn one(&self) -> u128 {
        self.one
    }

    #[inline]
    pub(crate) fn add(&self, a: u128, b: u128) -> u128 {
        let s = a + b;
        if s >= self.n {
            s - self.n
        } else {
            s
        }
    }

    pub(crate) fn pow(&self, base: u128, mut e: u128) -> u128 {
        let mut acc = self.one;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }
}

pub(crate) fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

/// Strong probable-prime test to a single base; `n` odd, `n > base`.
pub(crate) fn sprp(mont: &Mont, n: u128, base: u128) -> bool {
    let nm1 = n - 1;
    let s = nm1.trailing_zeros();
    let d = nm1 >> s;
    let one = mont.one();
    let minus_one = mont.to_mont(nm1);
    let mut x = mont.pow(mont.to_mont(base), d);
    if x == one || x == minus_one {
        return true;
    }
    for _ in 1..s {
        x = mont.mul(x, x);
        if x == minus_one {
            return true;
        }
        if x == one {
            return false;
        }
    }
    false
}

/// Pollard-Brent rho; returns a nontrivial factor of the odd composite `n`.
pub(crate) fn brent_rho(n: u128, c: u128, x0: u128, max_iter: u64) -> Option<u128> {
    const BATCH: u64 = 128;
    let mont = Mont::new(n);
    let c = mont.to_mont(c);
    let f = |v: u128| mont.add(mont.mul(v, v), c);
    let mut y = mont.to_mont(x0);
    let mut q = mont.one();
    let mut g = 1u128;
    let mut r: u64 = 1;
    let mut x = y;
    let mut ys = y;
    let mut iters: u64 = 0;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = f(y);
                let diff = x.abs_diff(y);
                q = mont.mul(q, diff);
            }
            g = gcd_u128(q, n);
            k += BATCH;
            iters += BATCH;
            if iters > max_iter {
                return None;
            }
        }
        r *= 2;
    }
    if g == n {
        loop {
            ys = f(ys);
            let diff = x.abs_diff(ys);
            g = gcd_u128(diff, n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}
