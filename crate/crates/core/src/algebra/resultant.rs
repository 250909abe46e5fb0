use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{AlgebraError, IntPoly};

/// Commutative ring with exact division, enough for fraction-free elimination.
pub trait ExactRing: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / o`, known in advance to be exact.
    fn div_exact(&self, o: &Self) -> Self;
}

impl ExactRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
}

impl ExactRing for IntPoly {
    fn zero() -> Self {
        IntPoly::zero()
    }
    fn one() -> Self {
        IntPoly::one()
    }
    fn is_zero(&self) -> bool {
        IntPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, o: &Self) -> Self {
        IntPoly::div_exact(self, o).expect("Bareiss division must be exact")
    }
}

/// Determinant by Bareiss fraction-free elimination with row pivoting.
pub fn bareiss_det<R: ExactRing>(mut a: Vec<Vec<R>>) -> R {
    let n = a.len();
    if n == 0 {
        return R::one();
    }
    let mut sign_flip = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.div_exact(&prev);
            }
            a[i][k] = R::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

/// Sylvester matrix of `f` and `g` given by ascending coefficient lists;
/// the `deg g` shifted rows of `f` come first.
pub fn sylvester<R: ExactRing>(f: &[R], g: &[R]) -> Vec<Vec<R>> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![R::zero(); size];
        for (j, c) in f.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![R::zero(); size];
        for (j, c) in g.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// `Res(f, g) = det Syl(f, g) = lc(f)^deg(g) * prod g(a)` over the roots `a` of
/// `f`. Coefficient lists are ascending with nonzero leading entries.
pub fn resultant_generic<R: ExactRing>(f: &[R], g: &[R]) -> Result<R, AlgebraError> {
    if f.is_empty() || g.is_empty() || f.last().unwrap().is_zero() || g.last().unwrap().is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if f.len() == 1 && g.len() == 1 {
        return Err(AlgebraError::BothConstant);
    }
    if f.len() == 1 {
        return Ok(pow(&f[0], g.len() - 1));
    }
    if g.len() == 1 {
        return Ok(pow(&g[0], f.len() - 1));
    }
    Ok(bareiss_det(sylvester(f, g)))
}

fn pow<R: ExactRing>(x: &R, e: usize) -> R {
    (0..e).fold(R::one(), |acc, _| acc.mul(x))
}

/// Resultant in `t` of two integer polynomials (no negative exponents).
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt, AlgebraError> {
    if !f.is_polynomial() || !g.is_polynomial() {
        return Err(AlgebraError::LaurentInput);
    }
    resultant_generic(&f.dense_coeffs(), &g.dense_coeffs())
}

/// Resultant in the main variable of polynomials whose coefficients are
/// integer polynomials in a second variable.
pub fn resultant_bivariate(f: &[IntPoly], g: &[IntPoly]) -> Result<IntPoly, AlgebraError> {
    resultant_generic(f, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    #[test]
    fn linear_sign_convention() {
        let r = resultant(&parse_poly("t-2").unwrap(), &parse_poly("t-5").unwrap()).unwrap();
        assert_eq!(r, BigInt::from(-3));
    }

    #[test]
    fn bivariate_evaluation_at_one() {
        // Res_l(l - 1, l^2 + (x^2-x+1) l + x^2) = chi(1)
        let f = vec![IntPoly::constant(-1), IntPoly::one()];
        let g = vec![
            parse_poly("t^2").unwrap(),
            parse_poly("t^2-t+1").unwrap(),
            IntPoly::one(),
        ];
        assert_eq!(resultant_bivariate(&f, &g).unwrap(), parse_poly("2t^2-t+2").unwrap());
    }

    #[test]
    fn common_root_gives_zero() {
        let f = parse_poly("t^3-1").unwrap();
        let g = parse_poly("t^2+t+1").unwrap();
        assert_eq!(resultant(&f, &g).unwrap(), BigInt::from(0));
    }

    #[test]
    fn product_of_root_values() {
        // f = (t-1)(t-2), g = t^2+1: g(1) g(2) = 2 * 5
        let f = parse_poly("t^2-3t+2").unwrap();
        let g = parse_poly("t^2+1").unwrap();
        assert_eq!(resultant(&f, &g).unwrap(), BigInt::from(10));
        // 3 * 5 odd degrees swap sign
        let h = parse_poly("t^3+t+7").unwrap();
        let k = parse_poly("2t^5-t+1").unwrap();
        assert_eq!(resultant(&h, &k).unwrap(), -resultant(&k, &h).unwrap());
    }

    #[test]
    fn errors() {
        assert!(resultant(&IntPoly::constant(2), &IntPoly::constant(3)).is_err());
        assert!(resultant(&IntPoly::zero(), &IntPoly::t()).is_err());
    }
}
