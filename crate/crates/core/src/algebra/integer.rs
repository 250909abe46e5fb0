use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::fp_poly::{mulmod, powmod};

/// Limits for [`factor_integer`].
#[derive(Clone, Copy, Debug)]
pub struct FactorLimits {
    pub trial_bound: u64,
    pub rho_iterations: u64,
}

impl Default for FactorLimits {
    fn default() -> Self {
        Self { trial_bound: 1_000_000, rho_iterations: 10_000_000 }
    }
}

/// Prime factorization of an integer. Anything Pollard rho could not split
/// within its budget lands in `unresolved` instead of being dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntFactorization {
    pub primes: Vec<(BigUint, u32)>,
    pub unresolved: Vec<BigUint>,
}

impl IntFactorization {
    pub fn is_complete(&self) -> bool {
        self.unresolved.is_empty()
    }
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Miller–Rabin with fixed bases; exact below 3.3e24 and probabilistic beyond.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Factors `|n|` by trial division followed by Pollard–Brent rho.
pub fn factor_integer(n: &BigInt, limits: FactorLimits) -> IntFactorization {
    assert!(!n.is_zero(), "factor_integer(0)");
    let mut rest = n.abs().to_biguint().unwrap();
    let mut primes: Vec<(BigUint, u32)> = Vec::new();
    let push = |p: BigUint, primes: &mut Vec<(BigUint, u32)>| match primes
        .iter_mut()
        .find(|(q, _)| *q == p)
    {
        Some((_, e)) => *e += 1,
        None => primes.push((p, 1)),
    };

    let mut d = 2u64;
    while d <= limits.trial_bound {
        let db = BigUint::from(d);
        if &db * &db > rest {
            break;
        }
        while (&rest % &db).is_zero() {
            rest /= &db;
            push(db.clone(), &mut primes);
        }
        d += if d == 2 { 1 } else { 2 };
    }

    let mut unresolved = Vec::new();
    let mut stack = Vec::new();
    if rest > BigUint::one() {
        stack.push(rest);
    }
    while let Some(m) = stack.pop() {
        if is_probable_prime(&m) || trial_exhausts(&m, limits.trial_bound) {
            push(m, &mut primes);
            continue;
        }
        match pollard_brent(&m, limits.rho_iterations) {
            Some(f) => {
                let g = &m / &f;
                stack.push(f);
                stack.push(g);
            }
            None => unresolved.push(m),
        }
    }
    primes.sort();
    unresolved.sort();
    IntFactorization { primes, unresolved }
}

/// After trial division up to `bound`, any cofactor below `bound^2` is prime.
fn trial_exhausts(m: &BigUint, bound: u64) -> bool {
    let b = BigUint::from(bound);
    *m < &b * &b
}

fn pollard_brent(n: &BigUint, budget: u64) -> Option<BigUint> {
    let one = BigUint::one();
    let mut spent = 0u64;
    for c in 1u32.. {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r = 1u64;
        let mut q = one.clone();
        let mut g = one.clone();
        let mut x = y.clone();
        let mut ys = y.clone();
        let m = 128u64;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += m;
                spent += m.min(r);
            }
            r *= 2;
            if spent > budget {
                return None;
            }
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g > one {
                    break;
                }
            }
        }
        if &g != n {
            return Some(g);
        }
        if spent > budget {
            return None;
        }
    }
    None
}
