//! Local contributions to the Alexander module: the column span of
//! `[ξ^r σ1^m − id | ξ^s σ2^n − id]` at a trivalent vertex, the monovalent
//! black/white cases, image submodules of generator lists, and the
//! polynomial of the distance equation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{ee, AlgebraError, IntPoly, RingElem};
use crate::burau::{specialized_generators, specialized_word, BraidWord, Mat2};
use crate::freegroup::{tilde_class, FreeGroupError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LocalError {
    #[error("ξ = ±1 is excluded for trivalent vertices")]
    XiPlusMinusOne,
    #[error("the coefficient ring is not a field")]
    NotAField,
    #[error("ξ is not a unit")]
    NotUnit,
    #[error("type {kind} is not valid for characteristic mode {mode} with M = {m}")]
    InvalidType { kind: VertexKind, mode: CharMode, m: u64 },
    #[error("width and distance arguments must be positive")]
    BadArgument,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    FreeGroup(#[from] FreeGroupError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VertexKind {
    Z,
    I1,
    I2,
    II1,
    II2,
    IIex,
    #[serde(rename = "III_plus")]
    IIIPlus,
    #[serde(rename = "III_minus")]
    IIIMinus,
    #[serde(rename = "III_p3")]
    IIIP3,
    IV,
    #[serde(rename = "FULL")]
    Full,
}

impl VertexKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::Z => "Z",
            Self::I1 => "I1",
            Self::I2 => "I2",
            Self::II1 => "II1",
            Self::II2 => "II2",
            Self::IIex => "IIex",
            Self::IIIPlus => "III_plus",
            Self::IIIMinus => "III_minus",
            Self::IIIP3 => "III_p3",
            Self::IV => "IV",
            Self::Full => "FULL",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        ALL_KINDS.iter().copied().find(|k| k.name() == s)
    }

    /// Weight of the type in the Euler-characteristic bound.
    pub fn kappa_weight(self) -> u32 {
        match self {
            Self::I1 | Self::II1 => 5,
            Self::IIIPlus | Self::IIIMinus | Self::IIIP3 => 4,
            Self::IV => 3,
            _ => 0,
        }
    }
}

const ALL_KINDS: [VertexKind; 11] = [
    VertexKind::Z,
    VertexKind::I1,
    VertexKind::I2,
    VertexKind::II1,
    VertexKind::II2,
    VertexKind::IIex,
    VertexKind::IIIPlus,
    VertexKind::IIIMinus,
    VertexKind::IIIP3,
    VertexKind::IV,
    VertexKind::Full,
];

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub type Vec2 = [RingElem; 2];

/// Subspace of `k^2` in canonical form: no basis for dimension 0, the
/// standard basis for dimension 2, and for dimension 1 the generator scaled
/// so that its `e2`-coordinate is 1, or its `e1`-coordinate if the former
/// vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    pub dim: u8,
    pub basis: Vec<Vec2>,
}

impl Subspace {
    /// Span over a field of a list of vectors.
    pub fn span(vectors: &[Vec2], zero: &RingElem) -> Self {
        let mut first: Option<&Vec2> = None;
        for v in vectors {
            if v[0].is_zero() && v[1].is_zero() {
                continue;
            }
            match first {
                None => first = Some(v),
                Some(f) => {
                    let det = f[0].mul(&v[1]).sub(&f[1].mul(&v[0]));
                    if !det.is_zero() {
                        let one = RingElem::one(zero.ring());
                        return Self {
                            dim: 2,
                            basis: vec![[one.clone(), zero.clone()], [zero.clone(), one]],
                        };
                    }
                }
            }
        }
        match first {
            None => Self { dim: 0, basis: Vec::new() },
            Some(v) => Self { dim: 1, basis: vec![normalize(v)] },
        }
    }

    pub fn contains(&self, v: &Vec2) -> bool {
        match self.dim {
            0 => v[0].is_zero() && v[1].is_zero(),
            2 => true,
            _ => {
                let g = &self.basis[0];
                g[0].mul(&v[1]).sub(&g[1].mul(&v[0])).is_zero()
            }
        }
    }

    pub fn generator(&self) -> Option<&Vec2> {
        (self.dim == 1).then(|| &self.basis[0])
    }
}

/// Projective normalization of a nonzero vector over a field.
pub fn normalize(v: &Vec2) -> Vec2 {
    let pivot = if v[1].is_zero() { &v[0] } else { &v[1] };
    let inv = pivot.inverse().expect("nonzero field element");
    [v[0].mul(&inv), v[1].mul(&inv)]
}

/// True iff `a` and `b` span the same line (both nonzero).
pub fn same_line(a: &Vec2, b: &Vec2) -> bool {
    a[0].mul(&b[1]).sub(&a[1].mul(&b[0])).is_zero()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexClass {
    pub kind: VertexKind,
    pub generator: Option<Vec2>,
    pub dim: u8,
}

impl VertexClass {
    fn from_subspace(kind: VertexKind, sub: &Subspace) -> Self {
        Self { kind, generator: sub.generator().cloned(), dim: sub.dim }
    }
}

fn require_field(xi: &RingElem) -> Result<u64, LocalError> {
    if !xi.ring().is_field() {
        return Err(LocalError::NotAField);
    }
    xi.mul_order().ok_or(LocalError::NotUnit)
}

fn mat_pow(m: &Mat2<RingElem>, e: u64) -> Mat2<RingElem> {
    let mut acc = Mat2::identity_like(&m.e[0][0]);
    let mut base = m.clone();
    let mut e = e;
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

/// The four columns of `[ξ^r σ1^m − id | ξ^s σ2^n − id]` at `t = ξ`.
pub fn trivalent_columns(m: u64, n: u64, r: i64, s: i64, xi: &RingElem) -> Result<[Vec2; 4], LocalError> {
    let (s1, s2) = specialized_generators(xi);
    let xr = xi.pow(r).ok_or(LocalError::NotUnit)?;
    let xs = xi.pow(s).ok_or(LocalError::NotUnit)?;
    let left = mat_pow(&s1, m).scale(&xr).minus_identity();
    let right = mat_pow(&s2, n).scale(&xs).minus_identity();
    Ok([left.column(0), left.column(1), right.column(0), right.column(1)])
}

/// Classifies a trivalent vertex with region widths `m`, `n` and exponents
/// `r`, `s` by the rank of its matrix; the label only names dim ≤ 1 cases.
pub fn classify_trivalent(m: u64, n: u64, r: i64, s: i64, xi: &RingElem) -> Result<VertexClass, LocalError> {
    if m == 0 || n == 0 {
        return Err(LocalError::BadArgument);
    }
    let order = require_field(xi)?;
    if xi.is_one() || xi.neg().is_one() {
        return Err(LocalError::XiPlusMinusOne);
    }
    let (r, s) = (r.rem_euclid(order as i64), s.rem_euclid(order as i64));
    let cols = trivalent_columns(m, n, r, s, xi)?;
    let zero = RingElem::zero(xi.ring());
    let sub = Subspace::span(&cols, &zero);
    let kind = match sub.dim {
        0 => VertexKind::Z,
        2 => VertexKind::Full,
        _ => {
            if cols.iter().all(|c| c[0].is_zero()) {
                VertexKind::I1
            } else if cols.iter().all(|c| c[1].is_zero()) {
                VertexKind::I2
            } else if r == 0 {
                VertexKind::II1
            } else if s == 0 {
                VertexKind::II2
            } else {
                VertexKind::IIex
            }
        }
    };
    Ok(VertexClass::from_subspace(kind, &sub))
}

/// Monovalent black vertex: the span of `ξ^r σ2σ1 − id`.
pub fn classify_monovalent_black(r: i64, xi: &RingElem) -> Result<VertexClass, LocalError> {
    let order = require_field(xi)?;
    let r = r.rem_euclid(order as i64);
    let xr = xi.pow(r).ok_or(LocalError::NotUnit)?;
    let (s1, s2) = specialized_generators(xi);
    let mat = s2.mul(&s1).scale(&xr).minus_identity();
    let zero = RingElem::zero(xi.ring());
    let sub = Subspace::span(&[mat.column(0), mat.column(1)], &zero);
    if sub.dim == 2 {
        return Ok(VertexClass::from_subspace(VertexKind::Full, &sub));
    }
    let kind = if xi.ring().characteristic() == 3 {
        VertexKind::IIIP3
    } else {
        let m = order as i64;
        debug_assert_eq!(m % 3, 0);
        if r == (m / 3 - 1).rem_euclid(m) {
            VertexKind::IIIPlus
        } else {
            VertexKind::IIIMinus
        }
    };
    Ok(VertexClass::from_subspace(kind, &sub))
}

/// Monovalent white vertex: the span of `ξ^r σ2σ1σ2 − id`.
pub fn classify_monovalent_white(r: i64, xi: &RingElem) -> Result<VertexClass, LocalError> {
    let order = require_field(xi)?;
    let r = r.rem_euclid(order as i64);
    let xr = xi.pow(r).ok_or(LocalError::NotUnit)?;
    let (s1, s2) = specialized_generators(xi);
    let mat = s2.mul(&s1).mul(&s2).scale(&xr).minus_identity();
    let zero = RingElem::zero(xi.ring());
    let sub = Subspace::span(&[mat.column(0), mat.column(1)], &zero);
    if sub.dim == 2 {
        return Ok(VertexClass::from_subspace(VertexKind::Full, &sub));
    }
    assert!(order % 2 == 1, "a degenerate white vertex forces odd M");
    Ok(VertexClass::from_subspace(VertexKind::IV, &sub))
}

fn check_unit(xi: &RingElem) -> Result<(), LocalError> {
    if xi.is_unit() {
        Ok(())
    } else {
        Err(LocalError::NotUnit)
    }
}

/// Columns of `β(ξ) − id` for every generator; valid over any finite ring.
pub fn image_generators(gens: &[BraidWord], xi: &RingElem) -> Result<Vec<Vec2>, LocalError> {
    check_unit(xi)?;
    let mut out = Vec::with_capacity(2 * gens.len());
    for g in gens {
        let m = specialized_word(g, xi)?.minus_identity();
        out.push(m.column(0));
        out.push(m.column(1));
    }
    Ok(out)
}

/// `I_G(ξ)`: span of the columns of `β(ξ) − id` over a field.
pub fn image_submodule(gens: &[BraidWord], xi: &RingElem) -> Result<Subspace, LocalError> {
    require_field(xi)?;
    let cols = image_generators(gens, xi)?;
    Ok(Subspace::span(&cols, &RingElem::zero(xi.ring())))
}

/// Specialization at `ξ` of the class `[β(α1)α1⁻¹]`.
pub fn tilde_vector(b: &BraidWord, xi: &RingElem) -> Result<Vec2, LocalError> {
    let [c1, c2] = tilde_class(b, 1)?;
    Ok([xi.eval_laurent(&c1)?, xi.eval_laurent(&c2)?])
}

/// `Ĩ_G(ξ)`: `I_G(ξ)` together with the specialized tilde classes.
pub fn tilde_image_submodule(gens: &[BraidWord], xi: &RingElem) -> Result<Subspace, LocalError> {
    require_field(xi)?;
    let mut cols = image_generators(gens, xi)?;
    for g in gens {
        cols.push(tilde_vector(g, xi)?);
    }
    Ok(Subspace::span(&cols, &RingElem::zero(xi.ring())))
}

/// Characteristic of the field in which the distance equation is solved.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CharMode {
    Zero,
    Two,
    Three,
    GenericOdd,
}

impl CharMode {
    pub fn for_prime(p: u64) -> Self {
        match p {
            0 => Self::Zero,
            2 => Self::Two,
            3 => Self::Three,
            _ => Self::GenericOdd,
        }
    }

    /// A representative characteristic for `ee`: any odd prime not dividing
    /// `N` gives the same value as the actual one.
    fn ee_char(self) -> u64 {
        match self {
            Self::Zero | Self::GenericOdd => 0,
            Self::Two => 2,
            Self::Three => 3,
        }
    }

    pub fn m_for(self, n: u64) -> Result<u64, AlgebraError> {
        ee(self.ee_char(), n)
    }
}

impl fmt::Display for CharMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Zero => "0",
            Self::Two => "2",
            Self::Three => "3",
            Self::GenericOdd => "generic-odd",
        })
    }
}

/// Vertex types that can carry a nonzero local contribution for this mode and `M`.
pub fn valid_types(mode: CharMode, m: u64) -> Vec<VertexKind> {
    let mut out = vec![VertexKind::I1, VertexKind::II1];
    if mode == CharMode::Three {
        out.push(VertexKind::IIIP3);
    } else if m.is_multiple_of(3) {
        out.push(VertexKind::IIIPlus);
        out.push(VertexKind::IIIMinus);
    }
    if m % 2 == 1 {
        out.push(VertexKind::IV);
    }
    out
}

/// The coefficient `a_v(t)` of the canonical generator `a_v e1 + e2`, with
/// exponents reduced into `0..M`.
pub fn a_coefficient(kind: VertexKind, mode: CharMode, m: u64) -> Result<IntPoly, LocalError> {
    if !valid_types(mode, m).contains(&kind) {
        return Err(LocalError::InvalidType { kind, mode, m });
    }
    let mi = m as i64;
    Ok(match kind {
        VertexKind::I1 => IntPoly::zero(),
        VertexKind::II1 => IntPoly::monomial(1, (mi - 1).rem_euclid(mi)) + IntPoly::one(),
        VertexKind::IIIPlus => IntPoly::monomial(-1, (mi / 3 - 1).rem_euclid(mi)),
        VertexKind::IIIMinus => IntPoly::monomial(-1, (-mi / 3 - 1).rem_euclid(mi)),
        VertexKind::IIIP3 => IntPoly::monomial(-1, (mi - 1).rem_euclid(mi)),
        VertexKind::IV => IntPoly::monomial(1, (mi - 1) / 2),
        _ => unreachable!("filtered by valid_types"),
    })
}

/// `E(t) = f_d(−t)((t+1)a_v(t) − 1) − (a_v(t) − a_u(t))`, multiplied by
/// `t^shift` to clear negative exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceEquation {
    pub poly: IntPoly,
    pub shift: i64,
    pub m: u64,
}

pub fn distance_equation(
    tu: VertexKind,
    tv: VertexKind,
    d: u64,
    n: u64,
    mode: CharMode,
) -> Result<DistanceEquation, LocalError> {
    if d == 0 || n < 3 {
        return Err(LocalError::BadArgument);
    }
    let m = mode.m_for(n)?;
    let au = a_coefficient(tu, mode, m)?;
    let av = a_coefficient(tv, mode, m)?;
    let fd = IntPoly::geometric(d as i64).negate_var();
    let t_plus_1 = IntPoly::from_i64s(&[1, 1]);
    let e = &fd * &(&(&t_plus_1 * &av) - &IntPoly::one()) - (&av - &au);
    let shift = if e.is_zero() { 0 } else { (-e.lowest_exp()).max(0) };
    Ok(DistanceEquation { poly: e.shift(shift), shift, m })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, RingDescriptor};

    fn field_xi(p: u64, f: &str) -> RingElem {
        RingElem::generator(&RingDescriptor::new(p, &parse_poly(f).unwrap()).unwrap())
    }

    fn scalar_vec(v: &Vec2) -> [u64; 2] {
        [v[0].as_scalar().unwrap(), v[1].as_scalar().unwrap()]
    }

    #[test]
    fn trivalent_examples() {
        let xi = field_xi(13, "t+2");
        let c = classify_trivalent(12, 12, 0, 0, &xi).unwrap();
        assert_eq!((c.kind, c.dim), (VertexKind::Z, 0));
        let c = classify_trivalent(12, 1, 0, 0, &xi).unwrap();
        assert_eq!(c.kind, VertexKind::I1);
        assert_eq!(scalar_vec(c.generator.as_ref().unwrap()), [0, 1]);

        let xi = field_xi(7, "t-2");
        let c = classify_trivalent(2, 2, 1, 1, &xi).unwrap();
        assert_eq!(c.kind, VertexKind::IIex);
        assert_eq!(scalar_vec(&normalize_e1(c.generator.as_ref().unwrap())), [1, 3]);
    }

    fn normalize_e1(v: &Vec2) -> Vec2 {
        let inv = v[0].inverse().unwrap();
        [v[0].mul(&inv), v[1].mul(&inv)]
    }

    #[test]
    fn trivalent_rejects_plus_minus_one() {
        assert_eq!(classify_trivalent(1, 1, 0, 0, &field_xi(7, "t-1")), Err(LocalError::XiPlusMinusOne));
        assert_eq!(classify_trivalent(1, 1, 0, 0, &field_xi(7, "t+1")), Err(LocalError::XiPlusMinusOne));
        let z12 = RingDescriptor::new(12, &parse_poly("t-5").unwrap()).unwrap();
        assert_eq!(
            classify_trivalent(1, 1, 0, 0, &RingElem::generator(&z12)),
            Err(LocalError::NotAField)
        );
    }

    #[test]
    fn monovalent_examples() {
        let c = classify_monovalent_black(0, &field_xi(7, "t-2")).unwrap();
        assert_eq!(c.kind, VertexKind::IIIPlus);
        assert_eq!(scalar_vec(c.generator.as_ref().unwrap()), [6, 1]);
        let c = classify_monovalent_black(1, &field_xi(3, "t-2")).unwrap();
        assert_eq!(c.kind, VertexKind::IIIP3);
        assert_eq!(scalar_vec(c.generator.as_ref().unwrap()), [1, 1]);
        assert_eq!(classify_monovalent_black(0, &field_xi(13, "t-11")).unwrap().kind, VertexKind::Full);

        let c = classify_monovalent_white(1, &field_xi(11, "t-3")).unwrap();
        assert_eq!(c.kind, VertexKind::IV);
        assert_eq!(scalar_vec(c.generator.as_ref().unwrap()), [9, 1]);
        assert_eq!(classify_monovalent_white(0, &field_xi(13, "t-11")).unwrap().kind, VertexKind::Full);
    }

    #[test]
    fn image_examples() {
        let w = |s: &str| s.parse::<BraidWord>().unwrap();
        let xi = field_xi(13, "t-11");
        let sub = image_submodule(&[w("s1")], &xi).unwrap();
        assert_eq!(sub.dim, 1);
        assert_eq!(scalar_vec(sub.generator().unwrap()), [1, 0]);
        assert_eq!(image_submodule(&[w("s1"), w("s2")], &xi).unwrap().dim, 2);

        let one = field_xi(3, "t-1");
        let sub = image_submodule(&[w("s1^2"), w("s2^2"), w("s2 s1")], &one).unwrap();
        assert_eq!(sub.dim, 1);
        assert_eq!(scalar_vec(sub.generator().unwrap()), [2, 1]);
        assert_eq!(tilde_image_submodule(&[w("s2 s1")], &one).unwrap().dim, 2);
        assert_eq!(tilde_image_submodule(&[w("id")], &xi).unwrap().dim, 0);
    }

    #[test]
    fn kind_names_round_trip() {
        for k in ALL_KINDS {
            assert_eq!(VertexKind::from_name(k.name()), Some(k));
            assert_eq!(serde_json::to_string(&k).unwrap(), format!("\"{}\"", k.name()));
        }
    }

    #[test]
    fn distance_same_type_i1() {
        let e = distance_equation(VertexKind::I1, VertexKind::I1, 4, 12, CharMode::Zero).unwrap();
        assert_eq!(e.poly, -IntPoly::geometric(4).negate_var());
        assert_eq!(e.shift, 0);
    }

    #[test]
    fn distance_four_term_relation() {
        // with a_u of type II1 and a_v of type I1, E·t(−t−1) = −(t(−t)^d + t²+t+1) mod t^M − 1
        for n in [11u64, 12, 13, 20] {
            let m = CharMode::Zero.m_for(n).unwrap();
            let modulus = IntPoly::monomial(1, m as i64) - IntPoly::one();
            for d in 1..n {
                let e = distance_equation(VertexKind::II1, VertexKind::I1, d, n, CharMode::Zero).unwrap();
                let lhs = &e.poly * &IntPoly::from_i64s(&[0, -1, -1]);
                let four = &IntPoly::t() * &IntPoly::monomial(1, d as i64).negate_var()
                    + IntPoly::from_i64s(&[1, 1, 1]);
                assert!((lhs + four).rem_monic(&modulus).is_zero(), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn distance_rejects_invalid_types() {
        // N = 12 in characteristic 0 gives M = 12, even
        assert!(matches!(
            distance_equation(VertexKind::IV, VertexKind::IV, 1, 12, CharMode::Zero),
            Err(LocalError::InvalidType { .. })
        ));
        assert!(distance_equation(VertexKind::IIIP3, VertexKind::I1, 1, 11, CharMode::Zero).is_err());
        assert!(distance_equation(VertexKind::IIIPlus, VertexKind::I1, 1, 12, CharMode::Three).is_err());
    }
}
