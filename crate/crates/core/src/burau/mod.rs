//! Braid words and the reduced Burau representation of the three-string
//! braid group over `Λ = Z[t, 1/t]` and its finite specializations.
//!
//! Matrices act on column coordinate vectors in the basis `e1, e2`, and the
//! matrix of a word is the left-to-right product of its letters' matrices.
//! For `σ1 σ2` this gives `[[-t,1],[0,1]]·[[1,0],[t,-t]] = [[0,-t],[t,-t]]`,
//! which is the composite automorphism "apply σ2, then σ1" on `𝔄`. Coset
//! enumeration instead multiplies row covectors on the right: `u ↦ u·M`.

mod mat;
mod word;

pub use mat::{Mat2, Scalar};
pub use word::{BraidWord, WordParseError};

use crate::algebra::{AlgebraError, IntPoly, Ring, RingElem};

/// Element of the (extended) Burau image together with its braid degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BurauMat<T> {
    pub mat: Mat2<T>,
    pub bdeg: i64,
}

impl<T: Scalar> BurauMat<T> {
    pub fn mul(&self, o: &Self) -> Self {
        Self { mat: self.mat.mul(&o.mat), bdeg: self.bdeg + o.bdeg }
    }
}

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

fn lp(c: i64, e: i64) -> IntPoly {
    IntPoly::monomial(c, e)
}

/// Matrix of `σ_g^{±1}` over `Λ`.
pub fn generator_matrix(g: u8, sign: i64) -> Mat2<IntPoly> {
    match (g, sign > 0) {
        (1, true) => Mat2::new(p(&[0, -1]), p(&[1]), p(&[]), p(&[1])),
        (1, false) => Mat2::new(lp(-1, -1), lp(1, -1), p(&[]), p(&[1])),
        (2, true) => Mat2::new(p(&[1]), p(&[]), p(&[0, 1]), p(&[0, -1])),
        (2, false) => Mat2::new(p(&[1]), p(&[]), p(&[1]), lp(-1, -1)),
        _ => panic!("generator index must be 1 or 2"),
    }
}

/// Closed form of `σ_g^m` for any integer `m`:
/// `σ1^m = [[(-t)^m, f_m(-t)], [0, 1]]`, `σ2^m = [[1, 0], [t f_m(-t), (-t)^m]]`.
pub fn generator_power(g: u8, m: i64) -> Mat2<IntPoly> {
    let neg_t_m = lp(if m.rem_euclid(2) == 0 { 1 } else { -1 }, m);
    let f = IntPoly::geometric(m).negate_var();
    match g {
        1 => Mat2::new(neg_t_m, f, p(&[]), p(&[1])),
        2 => Mat2::new(p(&[1]), p(&[]), f.shift(1), neg_t_m),
        _ => panic!("generator index must be 1 or 2"),
    }
}

/// The Burau matrix of a word over `Λ`.
pub fn burau_of_word(w: &BraidWord) -> BurauMat<IntPoly> {
    let mut mat = Mat2::scalar(lp(1, w.twist()));
    for &(g, e) in w.letters() {
        mat = mat.mul(&generator_power(g, e));
    }
    BurauMat { mat, bdeg: w.bdeg() }
}

/// Product of generator matrices letter by letter, without the closed form.
pub fn burau_of_word_naive(w: &BraidWord) -> BurauMat<IntPoly> {
    let mut mat = Mat2::scalar(lp(1, w.twist()));
    for (g, s) in w.expanded() {
        mat = mat.mul(&generator_matrix(g, s));
    }
    BurauMat { mat, bdeg: w.bdeg() }
}

impl BurauMat<IntPoly> {
    /// `(-t)^bdeg`, the expected determinant.
    pub fn expected_det(&self) -> IntPoly {
        lp(if self.bdeg.rem_euclid(2) == 0 { 1 } else { -1 }, self.bdeg)
    }

    /// Exact inverse `adj(M) · (-t)^(-bdeg)`.
    pub fn inverse(&self) -> Self {
        let inv_det = lp(if self.bdeg.rem_euclid(2) == 0 { 1 } else { -1 }, -self.bdeg);
        Self { mat: self.mat.adjugate().scale(&inv_det), bdeg: -self.bdeg }
    }
}

/// Entrywise evaluation `t ↦ ξ`.
pub fn specialize(m: &BurauMat<IntPoly>, xi: &RingElem) -> Result<BurauMat<RingElem>, AlgebraError> {
    if !xi.is_unit() {
        return Err(AlgebraError::NotUnit);
    }
    let ev = |f: &IntPoly| xi.eval_laurent(f);
    let mat = Mat2::new(ev(&m.mat.e[0][0])?, ev(&m.mat.e[0][1])?, ev(&m.mat.e[1][0])?, ev(&m.mat.e[1][1])?);
    Ok(BurauMat { mat, bdeg: m.bdeg })
}

/// The specialized matrix of a word, multiplied directly in the finite ring.
pub fn specialized_word(w: &BraidWord, xi: &RingElem) -> Result<Mat2<RingElem>, AlgebraError> {
    let xi_inv = xi.inverse().ok_or(AlgebraError::NotUnit)?;
    let one = RingElem::one(xi.ring());
    let zero = RingElem::zero(xi.ring());
    let gens = [
        Mat2::new(xi.neg(), one.clone(), zero.clone(), one.clone()),
        Mat2::new(xi_inv.neg(), xi_inv.clone(), zero.clone(), one.clone()),
        Mat2::new(one.clone(), zero.clone(), xi.clone(), xi.neg()),
        Mat2::new(one.clone(), zero, one.clone(), xi_inv.neg()),
    ];
    let twist = xi.pow(w.twist()).ok_or(AlgebraError::NotUnit)?;
    let mut acc = Mat2::scalar(twist);
    for (g, s) in w.expanded() {
        let idx = 2 * (g as usize - 1) + usize::from(s < 0);
        acc = acc.mul(&gens[idx]);
    }
    Ok(acc)
}

/// Image of a word in `SL(2, Z)` under `t ↦ -1`.
pub fn modular_project(w: &BraidWord) -> [[i64; 2]; 2] {
    let s1 = Mat2::new(1i64, 1, 0, 1);
    let s1i = Mat2::new(1i64, -1, 0, 1);
    let s2 = Mat2::new(1i64, 0, -1, 1);
    let s2i = Mat2::new(1i64, 0, 1, 1);
    let sign = if w.twist().rem_euclid(2) == 0 { 1 } else { -1 };
    let mut acc = Mat2::scalar(sign);
    for (g, s) in w.expanded() {
        let m = match (g, s > 0) {
            (1, true) => &s1,
            (1, false) => &s1i,
            (2, true) => &s2,
            _ => &s2i,
        };
        acc = acc.mul(m);
    }
    acc.e
}

/// Representative in `PSL(2, Z)`: the first nonzero entry is made positive.
pub fn psl_canonical(m: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let first = m.iter().flatten().copied().find(|&x| x != 0).unwrap_or(1);
    if first < 0 {
        m.map(|row| row.map(|x| -x))
    } else {
        m
    }
}

/// Specialized generator pair `(σ1(ξ), σ2(ξ))` in a finite ring.
pub fn specialized_generators(xi: &RingElem) -> (Mat2<RingElem>, Mat2<RingElem>) {
    let one = RingElem::one(xi.ring());
    let zero = RingElem::zero(xi.ring());
    (
        Mat2::new(xi.neg(), one.clone(), zero.clone(), one.clone()),
        Mat2::new(one, zero, xi.clone(), xi.neg()),
    )
}

/// Convenience: the class of `t` in `ring`.
pub fn ring_xi(ring: &Ring) -> RingElem {
    RingElem::generator(ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, RingDescriptor};

    fn poly(s: &str) -> IntPoly {
        parse_poly(s).unwrap()
    }

    fn word(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn mat(a: &str, b: &str, c: &str, d: &str) -> Mat2<IntPoly> {
        Mat2::new(poly(a), poly(b), poly(c), poly(d))
    }

    #[test]
    fn generator_and_small_words() {
        let b = burau_of_word(&word("s1"));
        assert_eq!(b.mat, mat("-t", "1", "0", "1"));
        assert_eq!(b.bdeg, 1);
        let b = burau_of_word(&word("s2 s1 s2"));
        assert_eq!(b.mat, mat("0", "-t", "-t^2", "0"));
        assert_eq!(b.bdeg, 3);
        assert_eq!(burau_of_word(&word("s1^2")).mat, mat("t^2", "-t+1", "0", "1"));
    }

    #[test]
    fn braid_relation_and_center() {
        assert_eq!(burau_of_word(&word("s1 s2 s1")), burau_of_word(&word("s2 s1 s2")));
        let y2 = burau_of_word(&word("s2 s1 s1 s2 s1 s1"));
        assert_eq!(y2.mat, Mat2::scalar(poly("t^3")));
    }

    #[test]
    fn closed_form_powers_match_products() {
        for g in [1u8, 2] {
            for m in -6..=6 {
                let w = BraidWord::sigma(g, m);
                assert_eq!(burau_of_word(&w), burau_of_word_naive(&w), "g={g} m={m}");
            }
        }
    }

    #[test]
    fn inverse_cancels() {
        let b = burau_of_word(&word("s1 s2^-2 s1^3 t^-1"));
        let prod = b.mul(&b.inverse());
        assert!(prod.mat.is_identity());
        assert_eq!(prod.bdeg, 0);
    }

    #[test]
    fn specialization_examples() {
        let f13 = RingDescriptor::new(13, &poly("t+2")).unwrap();
        let xi = ring_xi(&f13);
        let s = specialize(&burau_of_word(&word("s1")), &xi).unwrap();
        assert_eq!(s.mat.map(|x| x.as_scalar().unwrap() as i64), Mat2::new(2, 1, 0, 1));

        let f3 = RingDescriptor::new(3, &poly("t-1")).unwrap();
        let one = ring_xi(&f3);
        let s = specialize(&burau_of_word(&word("t")), &one).unwrap();
        assert!(s.mat.is_identity());

        let f7 = RingDescriptor::new(7, &poly("t-2")).unwrap();
        let s = specialize(&burau_of_word(&word("s2")), &ring_xi(&f7)).unwrap();
        assert_eq!(s.mat.map(|x| x.as_scalar().unwrap() as i64), Mat2::new(1, 0, 2, 5));
    }

    #[test]
    fn modular_projection() {
        assert_eq!(modular_project(&word("s1")), [[1, 1], [0, 1]]);
        let y2 = modular_project(&word("s2 s1^2 s2 s1^2"));
        assert_eq!(y2, [[-1, 0], [0, -1]]);
        assert_eq!(psl_canonical(y2), [[1, 0], [0, 1]]);
        assert_eq!(modular_project(&word("s2 s1 s2 s1 s2 s1")), [[-1, 0], [0, -1]]);
    }
}
