use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Laurent polynomial in `t` with big-integer coefficients.
///
/// `coeffs[i]` is the coefficient of `t^(lowest_exp + i)`. Both the first and
/// the last stored coefficient are nonzero; the zero polynomial is the empty
/// vector with `lowest_exp == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
    lowest_exp: i64,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_laurent(vec![c.into()], 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::from_laurent(vec![c.into()], exp)
    }

    /// Coefficients ascending from `t^0`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        Self::from_laurent(coeffs, 0)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficients ascending from `t^lowest_exp`.
    pub fn from_laurent(mut coeffs: Vec<BigInt>, mut lowest_exp: i64) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        lowest_exp += lead_zeros as i64;
        Self { coeffs, lowest_exp }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lowest_exp == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn lowest_exp(&self) -> i64 {
        self.lowest_exp
    }

    /// Highest exponent, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.lowest_exp + self.coeffs.len() as i64 - 1)
        }
    }

    /// True when no negative exponent occurs.
    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.lowest_exp >= 0
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let idx = exp - self.lowest_exp;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Stored coefficients, ascending from `lowest_exp`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Dense ascending coefficients from `t^0`; panics on negative exponents.
    pub fn dense_coeffs(&self) -> Vec<BigInt> {
        assert!(self.is_polynomial(), "dense_coeffs of a Laurent polynomial");
        if self.is_zero() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); self.lowest_exp as usize];
        out.extend(self.coeffs.iter().cloned());
        out
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Iterator over `(exponent, coefficient)` of nonzero terms, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.lowest_exp + i as i64, c))
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.clone(), lowest_exp: self.lowest_exp + k }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_laurent(self.coeffs.iter().map(|x| x * c).collect(), self.lowest_exp)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `f(t) -> f(-t)`.
    pub fn negate_var(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if (self.lowest_exp + i as i64).is_odd() { -c } else { c.clone() })
            .collect();
        Self::from_laurent(coeffs, self.lowest_exp)
    }

    /// `f(t) -> f(t^k)`; `k = 0` gives the constant `f(1)`.
    pub fn substitute_power(&self, k: i64) -> Self {
        if k >= 1 {
            if self.is_zero() {
                return Self::zero();
            }
            let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k as usize + 1];
            for (i, c) in self.coeffs.iter().enumerate() {
                coeffs[i * k as usize] = c.clone();
            }
            return Self::from_laurent(coeffs, self.lowest_exp * k);
        }
        self.terms().fold(Self::zero(), |acc, (e, c)| acc + Self::from_laurent(vec![c.clone()], e * k))
    }

    pub fn eval_int(&self, x: &BigInt) -> Option<BigInt> {
        if !self.is_polynomial() && x.is_zero() {
            return None;
        }
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        if self.lowest_exp >= 0 {
            Some(acc * x.pow(self.lowest_exp as u32))
        } else {
            // only x = +-1 keeps a Laurent value integral in general
            let d = x.pow((-self.lowest_exp) as u32);
            let (q, r) = acc.div_rem(&d);
            r.is_zero().then_some(q)
        }
    }

    /// Exact division in `Z[t, 1/t]` by a polynomial whose leading
    /// coefficient divides; `None` if the quotient is not exact.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // normalise both to polynomials with nonzero constant term
        let a: Vec<BigInt> = self.coeffs.clone();
        let b: &[BigInt] = &divisor.coeffs;
        if a.len() < b.len() {
            return None;
        }
        let lead = b.last().unwrap();
        let mut rem = a;
        let qlen = rem.len() - b.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + b.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, bj) in b.iter().enumerate() {
                rem[i + j] -= &q * bj;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_laurent(quot, self.lowest_exp - divisor.lowest_exp))
    }

    /// Remainder modulo a monic polynomial (ordinary polynomials only).
    pub fn rem_monic(&self, modulus: &IntPoly) -> IntPoly {
        assert!(modulus.is_polynomial() && modulus.leading_coeff().is_one());
        assert!(self.is_polynomial(), "rem_monic of a Laurent polynomial");
        let m = modulus.dense_coeffs();
        let mut r = self.dense_coeffs();
        let dm = m.len() - 1;
        while r.len() > dm {
            let top = r.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let off = r.len() - dm;
            for j in 0..dm {
                r[off + j] -= &top * &m[j];
            }
        }
        IntPoly::from_coeffs(r)
    }

    /// Sum of `t^i` for `0 <= i < n`, i.e. `(t^n - 1)/(t - 1)`; for negative
    /// `n` the analytic continuation `-t^n (1 + ... + t^(-n-1))`.
    pub fn geometric(n: i64) -> Self {
        if n >= 0 {
            Self::from_coeffs(vec![BigInt::one(); n as usize])
        } else {
            Self::from_laurent(vec![-BigInt::one(); (-n) as usize], n)
        }
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }
}

impl fmt::Display for IntPoly {
    /// Canonical text: descending exponents, explicit signs, no spaces,
    /// e.g. `t^4-t^3+2t+1`. Negative exponents print as `t^-k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            if e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            if e == 1 {
                write!(f, "t")?;
            } else {
                write!(f, "t^{e}")?;
            }
        }
        Ok(())
    }
}

fn add_impl(a: &IntPoly, b: &IntPoly, negate_b: bool) -> IntPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let lo = a.lowest_exp.min(b.lowest_exp);
    let hi = a.degree().unwrap().max(b.degree().unwrap());
    let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.lowest_exp - lo) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.lowest_exp - lo) as usize + i];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    IntPoly::from_laurent(coeffs, lo)
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        add_impl(self, rhs, false)
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        add_impl(self, rhs, true)
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_laurent(coeffs, self.lowest_exp + rhs.lowest_exp)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect(), lowest_exp: self.lowest_exp }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl From<i64> for IntPoly {
    fn from(c: i64) -> Self {
        IntPoly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_both_ends() {
        let p = IntPoly::from_laurent(vec![0.into(), 0.into(), 3.into(), 0.into()], -1);
        assert_eq!(p.lowest_exp(), 1);
        assert_eq!(p.coeffs(), &[BigInt::from(3)]);
        assert_eq!(IntPoly::from_i64s(&[0, 0]), IntPoly::zero());
        assert_eq!(IntPoly::zero().lowest_exp(), 0);
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(IntPoly::from_i64s(&[1, -1, 1, -1, 1]).to_string(), "t^4-t^3+t^2-t+1");
        assert_eq!(IntPoly::from_i64s(&[1, 2, 0, 1]).to_string(), "t^3+2t+1");
        assert_eq!(IntPoly::from_i64s(&[0, -1]).to_string(), "-t");
        assert_eq!(IntPoly::monomial(1, -2).to_string(), "t^-2");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn laurent_arithmetic() {
        let a = IntPoly::from_laurent(vec![1.into(), 1.into()], -1); // t^-1 + 1
        let b = IntPoly::t() + IntPoly::one();
        assert_eq!(&a * &b, IntPoly::from_laurent(vec![1.into(), 2.into(), 1.into()], -1));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division() {
        let num = IntPoly::from_i64s(&[-1, 0, 0, 0, 0, 0, 1]);
        let den = IntPoly::from_i64s(&[-1, 1]);
        assert_eq!(num.div_exact(&den).unwrap(), IntPoly::geometric(6));
        assert!(IntPoly::from_i64s(&[1, 0, 1]).div_exact(&den).is_none());
    }

    #[test]
    fn geometric_identity_for_negative_lengths() {
        // (t-1) f_n(t) = t^n - 1 for every integer n
        for n in -4..5 {
            let lhs = &IntPoly::geometric(n) * &IntPoly::from_i64s(&[-1, 1]);
            let rhs = IntPoly::monomial(1, n) - IntPoly::one();
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn remainder_mod_monic() {
        let f = IntPoly::from_i64s(&[0, 0, 0, 1]); // t^3
        let m = IntPoly::from_i64s(&[1, 1, 1]); // t^2+t+1
        assert_eq!(f.rem_monic(&m), IntPoly::one());
    }
}
