use std::fmt::Debug;

use crate::algebra::{IntPoly, RingElem};

/// Coefficient ring for 2×2 matrices. Constants are produced from an existing
/// element so that ring elements can carry their ring along.
pub trait Scalar: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Scalar for IntPoly {
    fn zero_like(&self) -> Self {
        IntPoly::zero()
    }
    fn one_like(&self) -> Self {
        IntPoly::one()
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
    fn is_zero(&self) -> bool {
        IntPoly::is_zero(self)
    }
}

impl Scalar for RingElem {
    fn zero_like(&self) -> Self {
        RingElem::zero(self.ring())
    }
    fn one_like(&self) -> Self {
        RingElem::one(self.ring())
    }
    fn add(&self, o: &Self) -> Self {
        RingElem::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RingElem::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RingElem::mul(self, o)
    }
    fn neg(&self) -> Self {
        RingElem::neg(self)
    }
    fn is_zero(&self) -> bool {
        RingElem::is_zero(self)
    }
}

impl Scalar for i64 {
    fn zero_like(&self) -> Self {
        0
    }
    fn one_like(&self) -> Self {
        1
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
    fn is_zero(&self) -> bool {
        *self == 0
    }
}

/// 2×2 matrix `[[a, b], [c, d]]`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2<T> {
    pub e: [[T; 2]; 2],
}

impl<T: Scalar> Mat2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Self { e: [[a, b], [c, d]] }
    }

    pub fn identity_like(x: &T) -> Self {
        Self::scalar(x.one_like())
    }

    pub fn scalar(x: T) -> Self {
        let z = x.zero_like();
        Self::new(x.clone(), z.clone(), z, x)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let e = &self.e;
        let f = &o.e;
        let cell = |i: usize, j: usize| e[i][0].mul(&f[0][j]).add(&e[i][1].mul(&f[1][j]));
        Self::new(cell(0, 0), cell(0, 1), cell(1, 0), cell(1, 1))
    }

    pub fn add(&self, o: &Self) -> Self {
        let c = |i: usize, j: usize| self.e[i][j].add(&o.e[i][j]);
        Self::new(c(0, 0), c(0, 1), c(1, 0), c(1, 1))
    }

    pub fn sub(&self, o: &Self) -> Self {
        let c = |i: usize, j: usize| self.e[i][j].sub(&o.e[i][j]);
        Self::new(c(0, 0), c(0, 1), c(1, 0), c(1, 1))
    }

    pub fn scale(&self, k: &T) -> Self {
        let c = |i: usize, j: usize| self.e[i][j].mul(k);
        Self::new(c(0, 0), c(0, 1), c(1, 0), c(1, 1))
    }

    pub fn minus_identity(&self) -> Self {
        self.sub(&Self::identity_like(&self.e[0][0]))
    }

    pub fn det(&self) -> T {
        self.e[0][0].mul(&self.e[1][1]).sub(&self.e[0][1].mul(&self.e[1][0]))
    }

    /// Adjugate `[[d, -b], [-c, a]]`.
    pub fn adjugate(&self) -> Self {
        let [[a, b], [c, d]] = &self.e;
        Self::new(d.clone(), b.neg(), c.neg(), a.clone())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity_like(&self.e[0][0])
    }

    /// `M · v` for a column vector.
    pub fn apply(&self, v: &[T; 2]) -> [T; 2] {
        let r = |i: usize| self.e[i][0].mul(&v[0]).add(&self.e[i][1].mul(&v[1]));
        [r(0), r(1)]
    }

    /// `u · M` for a row vector.
    pub fn apply_row(&self, u: &[T; 2]) -> [T; 2] {
        let c = |j: usize| u[0].mul(&self.e[0][j]).add(&u[1].mul(&self.e[1][j]));
        [c(0), c(1)]
    }

    pub fn column(&self, j: usize) -> [T; 2] {
        [self.e[0][j].clone(), self.e[1][j].clone()]
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Mat2<U> {
        Mat2::new(f(&self.e[0][0]), f(&self.e[0][1]), f(&self.e[1][0]), f(&self.e[1][1]))
    }
}
