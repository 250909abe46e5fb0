use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::IntPoly;

/// Dense polynomial over `Z/m` with `m < 2^63`, coefficients
/// ascending and stored in `0..m`. No trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FpPoly {
    m: u64,
    coeffs: Vec<u64>,
}

pub(crate) fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if it exists.
pub(crate) fn invmod(a: u64, m: u64) -> Option<u64> {
    let g = (a as i128).extended_gcd(&(m as i128));
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(m as i128) as u64)
}

impl FpPoly {
    pub fn new(m: u64, mut coeffs: Vec<u64>) -> Self {
        assert!(m >= 2, "modulus must be at least 2");
        for c in coeffs.iter_mut() {
            *c %= m;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { m, coeffs }
    }

    pub fn zero(m: u64) -> Self {
        Self::new(m, Vec::new())
    }

    pub fn one(m: u64) -> Self {
        Self::new(m, vec![1])
    }

    /// The variable `t`.
    pub fn x(m: u64) -> Self {
        Self::new(m, vec![0, 1])
    }

    /// Reduction of an integer polynomial; negative exponents are rejected.
    pub fn from_int(f: &IntPoly, m: u64) -> Self {
        assert!(f.is_polynomial(), "cannot reduce a Laurent polynomial to FpPoly");
        let mb = BigInt::from(m);
        let coeffs =
            f.dense_coeffs().iter().map(|c| c.mod_floor(&mb).to_u64().unwrap()).collect();
        Self::new(m, coeffs)
    }

    /// Lift with representatives in `0..m`.
    pub fn to_int(&self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n).map(|i| (self.coeff(i) + o.coeff(i)) % self.m).collect();
        Self::new(self.m, c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n).map(|i| (self.coeff(i) + self.m - o.coeff(i)) % self.m).collect();
        Self::new(self.m, c)
    }

    pub fn neg(&self) -> Self {
        Self::zero(self.m).sub(self)
    }

    pub fn scale(&self, k: u64) -> Self {
        Self::new(self.m, self.coeffs.iter().map(|&c| mulmod(c, k, self.m)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.m);
        }
        let m = self.m as u128;
        let mut acc = vec![0u128; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u128 * b as u128) % m;
            }
        }
        Self::new(self.m, acc.into_iter().map(|c| c as u64).collect())
    }

    /// Division with remainder by a divisor whose leading coefficient is a unit.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let inv = invmod(d.leading(), self.m).expect("leading coefficient must be a unit");
        let dn = d.coeffs.len();
        if self.coeffs.len() < dn {
            return (Self::zero(self.m), self.clone());
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; r.len() - dn + 1];
        for i in (0..q.len()).rev() {
            let top = r[i + dn - 1];
            if top == 0 {
                continue;
            }
            let f = mulmod(top, inv, self.m);
            q[i] = f;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                r[i + j] = (r[i + j] + self.m - mulmod(f, dc, self.m)) % self.m;
            }
        }
        (Self::new(self.m, q), Self::new(self.m, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn make_monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = invmod(self.leading(), self.m).expect("leading coefficient must be a unit");
        self.scale(inv)
    }

    /// Monic gcd; the modulus must be prime.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn derivative(&self) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulmod(c, i as u64 % self.m, self.m))
            .collect();
        Self::new(self.m, c)
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| (mulmod(acc, x, self.m) + c) % self.m)
    }

    /// `self^e mod f`.
    pub fn pow_mod(&self, mut e: u128, f: &Self) -> Self {
        let mut base = self.rem(f);
        let mut acc = Self::one(self.m).rem(f);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(f);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(f);
            }
        }
        acc
    }

    /// Lexicographic key on coefficients, highest degree first, for sorting factors.
    pub fn sort_key(&self) -> (usize, Vec<u64>) {
        (self.coeffs.len(), self.coeffs.iter().rev().copied().collect())
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_int().fmt(f)
    }
}
