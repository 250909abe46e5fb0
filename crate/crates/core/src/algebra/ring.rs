use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::factor::is_irreducible;
use super::fp_poly::{invmod, mulmod};
use super::integer::is_prime_u64;
use super::{AlgebraError, FpPoly, IntPoly};

/// The finite ring `(Z/m)[t]/f` with `f` monic of degree ≥ 1.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    modulus: u64,
    reducer: FpPoly,
    is_field: bool,
}

pub type Ring = Arc<RingDescriptor>;

impl RingDescriptor {
    pub fn new(modulus: u64, reducer: &IntPoly) -> Result<Ring, AlgebraError> {
        if modulus < 2 {
            return Err(AlgebraError::BadModulus(modulus));
        }
        if modulus > u32::MAX as u64 {
            return Err(AlgebraError::BadModulus(modulus));
        }
        let f = FpPoly::from_int(reducer, modulus);
        if f.degree().unwrap_or(0) == 0 || !f.is_monic() {
            return Err(AlgebraError::BadReducer(reducer.to_string()));
        }
        let is_field = is_prime_u64(modulus) && is_irreducible(&f);
        Ok(Arc::new(Self { modulus, reducer: f, is_field }))
    }

    /// Plain `Z/m`, presented as `(Z/m)[t]/(t)`.
    pub fn integers_mod(modulus: u64) -> Result<Ring, AlgebraError> {
        Self::new(modulus, &IntPoly::t())
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn reducer(&self) -> &FpPoly {
        &self.reducer
    }

    pub fn degree(&self) -> usize {
        self.reducer.degree().unwrap()
    }

    pub fn is_field(&self) -> bool {
        self.is_field
    }

    /// Number of elements, `m^deg f`.
    pub fn size(&self) -> u128 {
        (self.modulus as u128).pow(self.degree() as u32)
    }

    /// Characteristic of the ring (the modulus).
    pub fn characteristic(&self) -> u64 {
        self.modulus
    }
}

/// Element of a [`RingDescriptor`], stored as a reduced residue of fixed length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElem {
    ring: Ring,
    value: Vec<u64>,
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElem({self})")
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        FpPoly::new(self.ring.modulus, self.value.clone()).fmt(f)
    }
}

impl PartialOrd for RingElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on `(c_0, ..., c_{deg f - 1})`.
impl Ord for RingElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value.cmp(&other.value)
    }
}

impl RingElem {
    fn from_fp(ring: &Ring, p: &FpPoly) -> Self {
        let r = p.rem(&ring.reducer);
        let mut value = r.coeffs().to_vec();
        value.resize(ring.degree(), 0);
        Self { ring: ring.clone(), value }
    }

    pub fn zero(ring: &Ring) -> Self {
        Self { ring: ring.clone(), value: vec![0; ring.degree()] }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::from_int(ring, 1)
    }

    pub fn from_int(ring: &Ring, c: i64) -> Self {
        let mut value = vec![0; ring.degree()];
        value[0] = c.rem_euclid(ring.modulus as i64) as u64;
        Self { ring: ring.clone(), value }
    }

    /// The class of `t`.
    pub fn generator(ring: &Ring) -> Self {
        Self::from_fp(ring, &FpPoly::x(ring.modulus))
    }

    /// Residue of an integer polynomial; negative exponents use the inverse
    /// of `t`, failing if `t` is not a unit.
    pub fn from_poly(ring: &Ring, f: &IntPoly) -> Result<Self, AlgebraError> {
        Self::generator(ring).eval_laurent(f)
    }

    /// Residue coefficients `(c_0, ..., c_{deg f - 1})`.
    pub fn coeffs(&self) -> &[u64] {
        &self.value
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    fn to_fp(&self) -> FpPoly {
        FpPoly::new(self.ring.modulus, self.value.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.value.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.value[0] == 1 && self.value[1..].iter().all(|&c| c == 0)
    }

    fn check(&self, o: &Self) {
        debug_assert!(Arc::ptr_eq(&self.ring, &o.ring) || self.ring == o.ring, "ring mismatch");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o);
        let m = self.ring.modulus;
        let value = self.value.iter().zip(&o.value).map(|(a, b)| (a + b) % m).collect();
        Self { ring: self.ring.clone(), value }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check(o);
        let m = self.ring.modulus;
        let value = self.value.iter().zip(&o.value).map(|(a, b)| (a + m - b) % m).collect();
        Self { ring: self.ring.clone(), value }
    }

    pub fn neg(&self) -> Self {
        Self::zero(&self.ring).sub(self)
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check(o);
        if self.value.len() == 1 {
            let m = self.ring.modulus;
            return Self { ring: self.ring.clone(), value: vec![mulmod(self.value[0], o.value[0], m)] };
        }
        Self::from_fp(&self.ring, &self.to_fp().mul(&o.to_fp()))
    }

    pub fn scale(&self, k: i64) -> Self {
        self.mul(&Self::from_int(&self.ring, k))
    }

    /// Multiplicative inverse: `a^(q-2)` in a field of order `q`, otherwise
    /// `a^(k-1)` for the multiplicative order `k` (fine for the small rings used).
    pub fn inverse(&self) -> Option<Self> {
        if self.value.len() == 1 {
            let inv = invmod(self.value[0], self.ring.modulus)?;
            return Some(Self { ring: self.ring.clone(), value: vec![inv] });
        }
        if self.ring.is_field {
            if self.is_zero() {
                return None;
            }
            let q = self.ring.size();
            return Some(self.pow_u128(q - 2));
        }
        let order = self.mul_order()?;
        Some(self.pow_u128(order as u128 - 1))
    }

    pub fn pow_u128(&self, mut e: u128) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Integer power; negative exponents require a unit.
    pub fn pow(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow_u128(e as u128))
        } else {
            Some(self.inverse()?.pow_u128(e.unsigned_abs() as u128))
        }
    }

    pub fn is_unit(&self) -> bool {
        self.inverse().is_some()
    }

    /// Least `k ≥ 1` with `self^k = 1`, or `None` for a non-unit. In a field the
    /// order divides `q - 1` and is found from its divisors; otherwise by
    /// repeated multiplication bounded by the ring size.
    pub fn mul_order(&self) -> Option<u64> {
        if self.ring.is_field {
            if self.is_zero() {
                return None;
            }
            let group = (self.ring.size() - 1) as u64;
            let mut order = group;
            for (p, _) in small_factor(group) {
                while order.is_multiple_of(p) && self.pow_u128((order / p) as u128).is_one() {
                    order /= p;
                }
            }
            return Some(order);
        }
        let bound = self.ring.size();
        let mut acc = self.clone();
        let mut k = 1u64;
        while (k as u128) < bound {
            if acc.is_one() {
                return Some(k);
            }
            acc = acc.mul(self);
            k += 1;
        }
        None
    }

    /// Evaluates an integer Laurent polynomial at this element.
    pub fn eval_laurent(&self, f: &IntPoly) -> Result<Self, AlgebraError> {
        let m = BigInt::from(self.ring.modulus);
        let mut acc = Self::zero(&self.ring);
        if f.is_zero() {
            return Ok(acc);
        }
        for c in f.coeffs().iter().rev() {
            let cm = c.mod_floor(&m).to_i64().unwrap();
            acc = acc.mul(self).add(&Self::from_int(&self.ring, cm));
        }
        let shift = self.pow(f.lowest_exp()).ok_or(AlgebraError::NotUnit)?;
        Ok(acc.mul(&shift))
    }

    /// Smallest nonnegative representative when the ring is `Z/m`.
    pub fn as_scalar(&self) -> Option<u64> {
        self.value[1..].iter().all(|&c| c == 0).then_some(self.value[0])
    }

    /// Lift to an integer polynomial in the class of `t`.
    pub fn to_poly(&self) -> IntPoly {
        self.to_fp().to_int()
    }

    pub fn signed_repr(&self) -> Vec<i64> {
        let m = self.ring.modulus as i64;
        self.value.iter().map(|&c| if (c as i64) > m / 2 { c as i64 - m } else { c as i64 }).collect()
    }
}

fn small_factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}
