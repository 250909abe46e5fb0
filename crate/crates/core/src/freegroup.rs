//! The free group on `α1, α2, α3` with the Artin action of the braid group,
//! and the map to `𝔄 ⋊ Z` whose degree-zero part is abelianization onto the
//! Alexander module `𝔄 = Λe1 ⊕ Λe2`, `e1 = [α2α1⁻¹]`, `e2 = [α3α2⁻¹]`.

use std::fmt;
use std::str::FromStr;

use crate::algebra::IntPoly;
use crate::burau::BraidWord;

pub const DEFAULT_LENGTH_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FreeGroupError {
    #[error("word length exceeded the cap of {0} letters")]
    LengthCap(usize),
    #[error("scalar twist t^{0} is not a multiple of 3")]
    TwistNotMultipleOfThree(i64),
    #[error("bad token '{0}'")]
    BadToken(String),
}

/// Freely reduced word in `α1, α2, α3`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeWord {
    letters: Vec<(u8, i64)>,
}

impl FreeWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn gen(i: u8) -> Self {
        Self::from_letters(&[(i, 1)])
    }

    pub fn from_letters(letters: &[(u8, i64)]) -> Self {
        let mut w = Self::default();
        for &(i, e) in letters {
            w.push(i, e);
        }
        w
    }

    fn push(&mut self, i: u8, e: i64) {
        assert!((1..=3).contains(&i), "free generator index must be 1, 2 or 3");
        if e == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some((li, le)) if *li == i => {
                *le += e;
                if *le == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push((i, e)),
        }
    }

    pub fn letters(&self) -> &[(u8, i64)] {
        &self.letters
    }

    /// Number of letters counted with multiplicity.
    pub fn len(&self) -> usize {
        self.letters.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exponent sum.
    pub fn degree(&self) -> i64 {
        self.letters.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for &(i, e) in &o.letters {
            out.push(i, e);
        }
        out
    }

    pub fn inverse(&self) -> Self {
        let mut out = Self::default();
        for &(i, e) in self.letters.iter().rev() {
            out.push(i, -e);
        }
        out
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Self::identity(), |acc, _| acc.mul(&base))
    }

    /// Substitutes `images[i-1]` for `αi`.
    fn substitute(&self, images: &[FreeWord; 3], cap: usize) -> Result<Self, FreeGroupError> {
        let inverses = images.clone().map(|w| w.inverse());
        let mut out = Self::default();
        for &(i, e) in &self.letters {
            let img = if e > 0 { &images[i as usize - 1] } else { &inverses[i as usize - 1] };
            for _ in 0..e.unsigned_abs() {
                out = out.mul(img);
                if out.len() > cap {
                    return Err(FreeGroupError::LengthCap(cap));
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "id");
        }
        let tokens: Vec<String> = self
            .letters
            .iter()
            .map(|&(i, e)| if e == 1 { format!("a{i}") } else { format!("a{i}^{e}") })
            .collect();
        write!(f, "{}", tokens.join(" "))
    }
}

impl FromStr for FreeWord {
    type Err = FreeGroupError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut w = FreeWord::identity();
        for token in text.split_whitespace() {
            if token == "id" {
                continue;
            }
            let bad = || FreeGroupError::BadToken(token.to_string());
            let (head, exp) = match token.split_once('^') {
                Some((h, e)) => (h, e.parse::<i64>().map_err(|_| bad())?),
                None => (token, 1),
            };
            let idx = match head {
                "a1" => 1,
                "a2" => 2,
                "a3" => 3,
                _ => return Err(bad()),
            };
            w.push(idx, exp);
        }
        Ok(w)
    }
}

/// `ρ = α1α2α3`; the braid `(σ2σ1)^3` acts as conjugation by `ρ`.
pub fn rho() -> FreeWord {
    FreeWord::from_letters(&[(1, 1), (2, 1), (3, 1)])
}

fn generator_images(g: u8, sign: i64) -> [FreeWord; 3] {
    let a = |i: u8| FreeWord::gen(i);
    let w = |l: &[(u8, i64)]| FreeWord::from_letters(l);
    match (g, sign > 0) {
        (1, true) => [w(&[(1, 1), (2, 1), (1, -1)]), a(1), a(3)],
        (1, false) => [a(2), w(&[(2, -1), (1, 1), (2, 1)]), a(3)],
        (2, true) => [a(1), w(&[(2, 1), (3, 1), (2, -1)]), a(2)],
        (2, false) => [a(1), a(3), w(&[(3, -1), (2, 1), (3, 1)])],
        _ => panic!("generator index must be 1 or 2"),
    }
}

/// Artin action with the default length cap.
pub fn artin_apply(b: &BraidWord, w: &FreeWord) -> Result<FreeWord, FreeGroupError> {
    artin_apply_capped(b, w, DEFAULT_LENGTH_CAP)
}

/// `b(w)`: the rightmost letter of `b` acts first. A twist `t^{3k}` acts as
/// conjugation by `ρ^k`; other twists have no free-group meaning here.
pub fn artin_apply_capped(b: &BraidWord, w: &FreeWord, cap: usize) -> Result<FreeWord, FreeGroupError> {
    if b.twist() % 3 != 0 {
        return Err(FreeGroupError::TwistNotMultipleOfThree(b.twist()));
    }
    let letters: Vec<(u8, i64)> = b.expanded().collect();
    let mut cur = w.clone();
    for &(g, s) in letters.iter().rev() {
        cur = cur.substitute(&generator_images(g, s), cap)?;
    }
    let r = rho().pow(b.twist() / 3);
    cur = r.mul(&cur).mul(&r.inverse());
    if cur.len() > cap {
        return Err(FreeGroupError::LengthCap(cap));
    }
    Ok(cur)
}

/// Element `(v, d)` of `𝔄 ⋊ Z` with `v = c1 e1 + c2 e2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleVec {
    pub c1: IntPoly,
    pub c2: IntPoly,
    pub deg: i64,
}

impl ModuleVec {
    pub fn zero() -> Self {
        Self { c1: IntPoly::zero(), c2: IntPoly::zero(), deg: 0 }
    }

    /// `(v1, d1)(v2, d2) = (v1 + t^{d1} v2, d1 + d2)`.
    pub fn mul(&self, o: &Self) -> Self {
        Self {
            c1: &self.c1 + &o.c1.shift(self.deg),
            c2: &self.c2 + &o.c2.shift(self.deg),
            deg: self.deg + o.deg,
        }
    }

    /// `(v, d)^{-1} = (-t^{-d} v, -d)`.
    pub fn inverse(&self) -> Self {
        Self { c1: -self.c1.shift(-self.deg), c2: -self.c2.shift(-self.deg), deg: -self.deg }
    }

    pub fn vector(&self) -> [IntPoly; 2] {
        [self.c1.clone(), self.c2.clone()]
    }

    pub fn from_vector(v: [IntPoly; 2], deg: i64) -> Self {
        let [c1, c2] = v;
        Self { c1, c2, deg }
    }
}

fn psi_generator(i: u8) -> ModuleVec {
    let (c1, c2) = match i {
        1 => (IntPoly::zero(), IntPoly::zero()),
        2 => (IntPoly::one(), IntPoly::zero()),
        3 => (IntPoly::one(), IntPoly::one()),
        _ => panic!("free generator index must be 1, 2 or 3"),
    };
    ModuleVec { c1, c2, deg: 1 }
}

/// The homomorphism `α1 ↦ (0,1)`, `α2 ↦ (e1,1)`, `α3 ↦ (e1+e2,1)`.
pub fn psi(w: &FreeWord) -> ModuleVec {
    let gens = [psi_generator(1), psi_generator(2), psi_generator(3)];
    let invs = gens.clone().map(|g| g.inverse());
    let mut acc = ModuleVec::zero();
    for &(i, e) in w.letters() {
        let g = if e > 0 { &gens[i as usize - 1] } else { &invs[i as usize - 1] };
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(g);
        }
    }
    acc
}

/// The class `[b(αi)·αi⁻¹]` in `𝔄`.
pub fn tilde_class(b: &BraidWord, i: u8) -> Result<[IntPoly; 2], FreeGroupError> {
    let a = FreeWord::gen(i);
    let img = artin_apply(b, &a)?;
    Ok(psi(&img.mul(&a.inverse())).vector())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;
    use crate::burau::burau_of_word;

    fn fw(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    fn bw(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> IntPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn artin_generators() {
        assert_eq!(artin_apply(&bw("s1"), &fw("a2")).unwrap(), fw("a1"));
        assert_eq!(artin_apply(&bw("s1"), &fw("a1")).unwrap(), fw("a1 a2 a1^-1"));
        let w = fw("a1 a3^2 a2^-1");
        assert_eq!(artin_apply(&bw("s1 s1^-1"), &w).unwrap(), w);
    }

    #[test]
    fn inverse_letters_undo_generators() {
        let w = fw("a1 a2 a3^-1 a1");
        for g in ["s1", "s2"] {
            let b = bw(g);
            let back = artin_apply(&b.inverse(), &artin_apply(&b, &w).unwrap()).unwrap();
            assert_eq!(back, w);
        }
    }

    #[test]
    fn full_twist_is_conjugation_by_rho() {
        let w = fw("a2 a3^-1");
        let lhs = artin_apply(&bw("s2 s1 s2 s1 s2 s1"), &w).unwrap();
        let rhs = rho().mul(&w).mul(&rho().inverse());
        assert_eq!(lhs, rhs);
        assert_eq!(artin_apply(&bw("t^3"), &w).unwrap(), rhs);
        assert!(artin_apply(&bw("t"), &w).is_err());
    }

    #[test]
    fn psi_examples() {
        let v = psi(&fw("a2 a1^-1"));
        assert_eq!((v.c1, v.c2, v.deg), (IntPoly::one(), IntPoly::zero(), 0));
        let v = psi(&fw("a1"));
        assert_eq!((v.c1, v.c2, v.deg), (IntPoly::zero(), IntPoly::zero(), 1));
    }

    #[test]
    fn psi_matches_burau_columns() {
        // σ(e_j) computed through the free group equals the j-th Burau column
        let e = [fw("a2 a1^-1"), fw("a3 a2^-1")];
        for g in ["s1", "s2", "s1^-1", "s2^-1"] {
            let b = bw(g);
            let m = burau_of_word(&b).mat;
            for (j, ej) in e.iter().enumerate() {
                let img = psi(&artin_apply(&b, ej).unwrap());
                assert_eq!(img.vector(), m.column(j), "{g} e{}", j + 1);
            }
        }
    }

    #[test]
    fn rho_identity_uses_third_generator() {
        // (σ2σ1)^3(α3)·α3⁻¹ = (t-1)e1 + (t^2-1)e2
        let v = tilde_class(&bw("s2 s1 s2 s1 s2 s1"), 3).unwrap();
        assert_eq!(v, [poly("t-1"), poly("t^2-1")]);
    }

    #[test]
    fn length_cap_aborts() {
        let b = bw("s1 s2^-1").pow(30);
        assert!(matches!(
            artin_apply_capped(&b, &fw("a1"), 1_000),
            Err(FreeGroupError::LengthCap(1_000))
        ));
    }

    #[test]
    fn parse_round_trip() {
        let w = fw("a1 a2^-1 a3^4");
        assert_eq!(w.to_string(), "a1 a2^-1 a3^4");
        assert_eq!(w.degree(), 4);
        assert!("a4".parse::<FreeWord>().is_err());
    }
}
