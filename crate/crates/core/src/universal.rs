//! Coset enumeration for universal subgroups `G_V = {β : Im(β − id) ⊂ V}` of
//! the specialized Burau image, for a line `V = span(v)`.
//!
//! Two matrices are equivalent iff `v^⊥(M1 − ξ^s M2) = 0` for an admissible
//! scalar `ξ^s`, so a coset is determined by the row covector `v^⊥ M` up to
//! those scalars. Classes are the orbit of `v^⊥` under right multiplication,
//! each stored under the lexicographically least scalar multiple.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::algebra::RingElem;
use crate::burau::{specialized_generators, specialized_word, BraidWord, Mat2};
use crate::localgeom::Vec2;
use crate::skeleton::{Signature, Skeleton, SkeletonError};

pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UniversalError {
    #[error("index > cap ({cap})")]
    CapExceeded { cap: usize },
    #[error("ξ is not a unit")]
    NotUnit,
    #[error("v must have a unit coordinate")]
    BadVector,
    #[error(transparent)]
    Skeleton(#[from] SkeletonError),
}

/// Extended braid group (all scalars `ξ^s`) or the braid group proper
/// (scalars `ξ^{3s}` only).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Extended,
    Braid,
}

/// Words used to grow the orbit. Both sets generate the full image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorSet {
    /// `σ2σ1` and `σ1σ2σ1`.
    Standard,
    /// `σ1` and `σ2`.
    Artin,
}

impl GeneratorSet {
    pub fn words(self) -> [BraidWord; 2] {
        match self {
            Self::Standard => [BraidWord::new(&[(2, 1), (1, 1)], 0), BraidWord::new(&[(1, 1), (2, 1), (1, 1)], 0)],
            Self::Artin => [BraidWord::sigma(1, 1), BraidWord::sigma(2, 1)],
        }
    }
}

#[derive(Clone, Debug)]
pub struct EnumerationTask {
    pub xi: RingElem,
    pub v: Vec2,
    pub mode: Mode,
    pub cap: usize,
    pub generators: GeneratorSet,
}

impl EnumerationTask {
    /// Task for `v = e2`, standard generators and the default cap.
    pub fn new(xi: RingElem, mode: Mode) -> Self {
        let ring = xi.ring().clone();
        Self {
            v: [RingElem::zero(&ring), RingElem::one(&ring)],
            xi,
            mode,
            cap: DEFAULT_CAP,
            generators: GeneratorSet::Standard,
        }
    }

    pub fn with_v(mut self, v: Vec2) -> Self {
        self.v = v;
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn with_generators(mut self, g: GeneratorSet) -> Self {
        self.generators = g;
        self
    }

    /// The covector `(b, −a)` vanishing on `v = (a, b)`.
    pub fn seed(&self) -> Vec2 {
        [self.v[1].clone(), self.v[0].neg()]
    }

    /// The admissible scalars `ξ^s`, `s ∈ Z_M` or `s ∈ 3Z_M`.
    pub fn scalars(&self) -> Result<Vec<RingElem>, UniversalError> {
        let m = self.xi.mul_order().ok_or(UniversalError::NotUnit)?;
        let step = match self.mode {
            Mode::Extended => self.xi.clone(),
            Mode::Braid => self.xi.pow_u128(3),
        };
        let mut out = vec![RingElem::one(self.xi.ring())];
        let mut cur = step.clone();
        while !cur.is_one() && (out.len() as u64) < m {
            out.push(cur.clone());
            cur = cur.mul(&step);
        }
        Ok(out)
    }

    fn validate(&self) -> Result<(), UniversalError> {
        if !self.xi.is_unit() {
            return Err(UniversalError::NotUnit);
        }
        if !self.v[0].is_unit() && !self.v[1].is_unit() {
            return Err(UniversalError::BadVector);
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    /// Canonical covector of each class; class 0 holds the seed.
    pub classes: Vec<Vec2>,
    /// Right multiplication by `σ2σ1(ξ)`.
    pub black: Vec<u32>,
    /// Right multiplication by `σ2σ1²(ξ)`.
    pub white: Vec<u32>,
    /// Right multiplication by `σ1(ξ)`.
    pub region: Vec<u32>,
    /// For each class after the first: the class it was reached from and
    /// the index of the generator word used.
    pub discovery: Vec<Option<(u32, u8)>>,
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub table: CosetTable,
    pub skeleton: Skeleton,
    pub signature: Signature,
}

fn key_of(u: &Vec2) -> Vec<u64> {
    u[0].coeffs().iter().chain(u[1].coeffs()).copied().collect()
}

fn canonical(u: &Vec2, scalars: &[RingElem]) -> (Vec<u64>, Vec2) {
    let mut best: Option<(Vec<u64>, Vec2)> = None;
    for s in scalars {
        let cand = [u[0].mul(s), u[1].mul(s)];
        let k = key_of(&cand);
        if best.as_ref().is_none_or(|(bk, _)| k < *bk) {
            best = Some((k, cand));
        }
    }
    best.unwrap()
}

struct Orbit {
    scalars: Vec<RingElem>,
    index: HashMap<Vec<u64>, u32>,
    classes: Vec<Vec2>,
}

impl Orbit {
    fn find(&self, u: &Vec2) -> u32 {
        self.index[&canonical(u, &self.scalars).0]
    }
}

/// Enumerates the cosets and builds the skeleton and its signature.
pub fn enumerate_universal(task: &EnumerationTask) -> Result<Enumeration, UniversalError> {
    task.validate()?;
    let scalars = task.scalars()?;
    let gens: Vec<Mat2<RingElem>> = task
        .generators
        .words()
        .iter()
        .map(|w| specialized_word(w, &task.xi).map_err(|_| UniversalError::NotUnit))
        .collect::<Result<_, _>>()?;

    let (seed_key, seed) = canonical(&task.seed(), &scalars);
    let mut orbit = Orbit { scalars, index: HashMap::from([(seed_key, 0)]), classes: vec![seed] };
    let mut discovery = vec![None];
    let mut queue = VecDeque::from([0u32]);
    while let Some(i) = queue.pop_front() {
        for (gi, g) in gens.iter().enumerate() {
            let image = g.apply_row(&orbit.classes[i as usize]);
            let (k, c) = canonical(&image, &orbit.scalars);
            if orbit.index.contains_key(&k) {
                continue;
            }
            if orbit.classes.len() >= task.cap {
                return Err(UniversalError::CapExceeded { cap: task.cap });
            }
            let id = orbit.classes.len() as u32;
            orbit.index.insert(k, id);
            orbit.classes.push(c);
            discovery.push(Some((i, gi as u8)));
            queue.push_back(id);
        }
    }

    let (s1, s2) = specialized_generators(&task.xi);
    let x = s2.mul(&s1);
    let y = x.mul(&s1);
    let map = |m: &Mat2<RingElem>| -> Vec<u32> {
        orbit.classes.iter().map(|u| orbit.find(&m.apply_row(u))).collect()
    };
    let black = map(&x);
    let white = map(&y);
    let region = map(&s1);
    let skeleton = Skeleton::from_triple(black.clone(), white.clone(), region.clone())?;
    let signature = skeleton.signature();
    Ok(Enumeration {
        table: CosetTable { classes: orbit.classes, black, white, region, discovery },
        skeleton,
        signature,
    })
}

/// A word `w` with `v^⊥ w(ξ)` in class `i`, read off the discovery tree.
pub fn class_word(table: &CosetTable, generators: GeneratorSet, i: u32) -> BraidWord {
    let words = generators.words();
    let mut path = Vec::new();
    let mut cur = i;
    while let Some((parent, g)) = table.discovery[cur as usize] {
        path.push(g);
        cur = parent;
    }
    path.iter().rev().fold(BraidWord::identity(), |acc, &g| acc.concat(&words[g as usize]))
}

/// Schreier word `w_i g w_j⁻¹` for the class `j` reached from `i` by
/// generator `g`; it stabilizes class 0.
pub fn schreier_word(table: &CosetTable, generators: GeneratorSet, i: u32, g: usize, j: u32) -> BraidWord {
    let words = generators.words();
    class_word(table, generators, i).concat(&words[g]).concat(&class_word(table, generators, j).inverse())
}

/// True iff `v^⊥(β − ξ^s·id) = 0` for some admissible scalar, i.e. `β` fixes class 0.
pub fn stabilizes_seed(task: &EnumerationTask, beta: &Mat2<RingElem>) -> Result<bool, UniversalError> {
    let u = task.seed();
    let image = beta.apply_row(&u);
    Ok(task.scalars()?.iter().any(|s| image[0] == u[0].mul(s) && image[1] == u[1].mul(s)))
}

/// The literal procedure: keep whole matrices as coset representatives and
/// test `v^⊥(M − ξ^s R) = 0` against every stored representative.
pub fn enumerate_full_matrix(task: &EnumerationTask) -> Result<Skeleton, UniversalError> {
    task.validate()?;
    let scalars = task.scalars()?;
    let u = task.seed();
    let (s1, s2) = specialized_generators(&task.xi);
    let x = s2.mul(&s1);
    let y_ext = s1.mul(&s2).mul(&s1);
    let equivalent = |a: &Mat2<RingElem>, b: &Mat2<RingElem>| {
        let ua = a.apply_row(&u);
        let ub = b.apply_row(&u);
        scalars.iter().any(|s| ua[0] == ub[0].mul(s) && ua[1] == ub[1].mul(s))
    };
    let mut reps: Vec<Mat2<RingElem>> = vec![Mat2::identity_like(&task.xi)];
    let mut next = 0;
    while next < reps.len() {
        for g in [&x, &y_ext] {
            let cand = reps[next].mul(g);
            if !reps.iter().any(|r| equivalent(r, &cand)) {
                if reps.len() >= task.cap {
                    return Err(UniversalError::CapExceeded { cap: task.cap });
                }
                reps.push(cand);
            }
        }
        next += 1;
    }
    let find = |m: &Mat2<RingElem>| reps.iter().position(|r| equivalent(r, m)).unwrap() as u32;
    let y = x.mul(&s1);
    let black = reps.iter().map(|r| find(&r.mul(&x))).collect();
    let white = reps.iter().map(|r| find(&r.mul(&y))).collect();
    Ok(Skeleton::from_permutations(black, white)?)
}

fn normalize_line(v: &Vec2) -> Option<Vec2> {
    let pivot = if v[1].is_unit() {
        &v[1]
    } else if v[0].is_unit() {
        &v[0]
    } else {
        return None;
    };
    let inv = pivot.inverse()?;
    Some([v[0].mul(&inv), v[1].mul(&inv)])
}

/// Whether `span(v2)` lies in the orbit of `span(v1)` under the specialized
/// `σ1, σ2`. Scalars fix every line, so the answer does not depend on `mode`.
pub fn line_orbit_conjugacy(xi: &RingElem, v1: &Vec2, v2: &Vec2, _mode: Mode) -> Result<bool, UniversalError> {
    let start = normalize_line(v1).ok_or(UniversalError::BadVector)?;
    let target = normalize_line(v2).ok_or(UniversalError::BadVector)?;
    let (s1, s2) = specialized_generators(xi);
    let mut seen = std::collections::HashSet::from([key_of(&start)]);
    let mut queue = VecDeque::from([start]);
    while let Some(l) = queue.pop_front() {
        if l == target {
            return Ok(true);
        }
        for g in [&s1, &s2] {
            if let Some(n) = normalize_line(&g.apply(&l)) {
                if seen.insert(key_of(&n)) {
                    queue.push_back(n);
                }
            }
        }
    }
    Ok(false)
}

/// One monovalent vertex of each color, one monogon, all other regions hexagons.
pub fn six_significant_check(sk: &Skeleton) -> bool {
    let sig = sk.signature();
    sig.c2 == 1
        && sig.c3 == 1
        && sig.width_count(1) == 1
        && sig.widths.iter().all(|&(w, _)| w == 1 || w == 6)
}
