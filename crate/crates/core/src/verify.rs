//! Identity and oracle suites shared by the `verify` subcommand and the tests.
//!
//! Every check recomputes its expected side independently of the code under
//! test: closed forms for matrix powers, hand-expanded matrices for the
//! classifiers, the free-group action for module classes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{is_irreducible, FpPoly, IntPoly, RingDescriptor, RingElem};
use crate::burau::{burau_of_word, generator_power, specialize, specialized_word, BraidWord, Mat2};
use crate::freegroup::{artin_apply, psi, tilde_class, FreeWord};
use crate::localgeom::{
    classify_monovalent_black, classify_monovalent_white, classify_trivalent, image_submodule,
    same_line, tilde_image_submodule, Vec2, VertexClass, VertexKind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Burau,
    FreeGroup,
    LocalGeom,
}

impl Suite {
    pub const ALL: [Suite; 3] = [Suite::Burau, Suite::FreeGroup, Suite::LocalGeom];

    pub fn name(self) -> &'static str {
        match self {
            Self::Burau => "burau",
            Self::FreeGroup => "freegroup",
            Self::LocalGeom => "localgeom",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

type Outcome = Result<String, String>;

fn check(suite: Suite, name: &str, f: impl FnOnce() -> Outcome) -> Check {
    let (passed, detail) = match f() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Check { suite, name: name.to_string(), passed, detail }
}

pub const SEED: u64 = 0x7665_7269_6679;

pub fn random_word(rng: &mut impl Rng, max_len: usize, max_exp: i64) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let mut letters = Vec::with_capacity(len);
    for _ in 0..len {
        let g = rng.gen_range(1..=2u8);
        let mut e = rng.gen_range(1..=max_exp);
        if rng.gen_bool(0.5) {
            e = -e;
        }
        letters.push((g, e));
    }
    BraidWord::new(&letters, 0)
}

fn random_free_word(rng: &mut impl Rng, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<(u8, i64)> =
        (0..len).map(|_| (rng.gen_range(1..=3u8), if rng.gen_bool(0.5) { 1 } else { -1 })).collect();
    FreeWord::from_letters(&letters)
}

fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

fn word(s: &str) -> BraidWord {
    s.parse().expect("literal braid word")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `σ1^m` and `σ2^m` written out entrywise.
fn power_closed_form(g: u8, m: i64) -> Mat2<IntPoly> {
    let minus_t_m = IntPoly::monomial(1, 1).negate_var().pow(m as u32);
    let f = IntPoly::geometric(m).negate_var();
    if g == 1 {
        Mat2::new(minus_t_m, f, IntPoly::zero(), IntPoly::one())
    } else {
        Mat2::new(IntPoly::one(), IntPoly::zero(), &IntPoly::monomial(1, 1) * &f, minus_t_m)
    }
}

pub fn burau_suite() -> Vec<Check> {
    let s = Suite::Burau;
    vec![
        check(s, "braid relation", || {
            let a = burau_of_word(&word("s1 s2 s1"));
            let b = burau_of_word(&word("s2 s1 s2"));
            ensure(a == b, || format!("{:?} != {:?}", a.mat, b.mat))?;
            Ok("σ1σ2σ1 = σ2σ1σ2".into())
        }),
        check(s, "power formula", || {
            for g in 1..=2u8 {
                for m in 0..=6i64 {
                    let by_product = burau_of_word(&BraidWord::new(&vec![(g, 1); m as usize], 0)).mat;
                    ensure(by_product == power_closed_form(g, m), || format!("σ{g}^{m}"))?;
                    ensure(generator_power(g, m) == by_product, || format!("generator_power σ{g}^{m}"))?;
                }
            }
            Ok("σ1^m, σ2^m for 0 ≤ m ≤ 6".into())
        }),
        check(s, "f_m identity", || {
            let t1 = poly(&[1, 1]);
            for r in -3..=3i64 {
                for m in 0..=8i64 {
                    let f = IntPoly::geometric(m).negate_var();
                    let lhs = &(&t1 * &f).shift(r) + &IntPoly::monomial(1, 1).negate_var().pow(m as u32).shift(r);
                    ensure(lhs == IntPoly::monomial(1, r), || format!("r={r} m={m}"))?;
                }
            }
            Ok("(t+1)t^r f_m(−t) + t^r(−t)^m = t^r, |r| ≤ 3, m ≤ 8".into())
        }),
        check(s, "determinant", || {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED);
            for i in 0..1000 {
                let w = random_word(&mut rng, 12, 3);
                let b = burau_of_word(&w);
                let expect = IntPoly::monomial(1, 1).negate_var();
                let expect = if b.bdeg >= 0 {
                    expect.pow(b.bdeg as u32)
                } else {
                    IntPoly::monomial(if b.bdeg % 2 == 0 { 1 } else { -1 }, b.bdeg)
                };
                ensure(b.mat.det() == expect, || format!("word #{i}: {w}"))?;
            }
            Ok("det = (−t)^bdeg on 1000 random words".into())
        }),
        check(s, "(σ2σ1²)² = t³", || {
            let b = burau_of_word(&word("s2 s1 s1 s2 s1 s1"));
            let t3 = Mat2::scalar(IntPoly::monomial(1, 3));
            ensure(b.mat == t3, || format!("{:?}", b.mat))?;
            Ok("(σ2σ1²)² = t³·id".into())
        }),
        check(s, "N=6 word identity", || {
            let b1 = word("s1 s2^-1");
            let b2 = word("s2^-1 s1");
            let comm = b1.concat(&b2).concat(&b1.inverse()).concat(&b2.inverse());
            let lhs = burau_of_word(&comm.concat(&word("s2 s1").pow(-3)));
            let rhs = burau_of_word(&word("s1 s2^-6 s1^-1"));
            ensure(lhs == rhs, || format!("{:?} != {:?}", lhs.mat, rhs.mat))?;
            Ok("[σ1σ2⁻¹, σ2⁻¹σ1](σ2σ1)⁻³ = σ1σ2⁻⁶σ1⁻¹".into())
        }),
        check(s, "specialization is multiplicative", || {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
            for (p, f) in [(13, "t+2"), (7, "t+5"), (5, "t^2+2t+4")] {
                let ring = RingDescriptor::new(p, &f.parse().unwrap()).map_err(|e| e.to_string())?;
                let xi = RingElem::generator(&ring);
                for _ in 0..100 {
                    let (a, b) = (random_word(&mut rng, 6, 3), random_word(&mut rng, 6, 3));
                    let both = specialize(&burau_of_word(&a.concat(&b)), &xi).map_err(|e| e.to_string())?;
                    let sa = specialize(&burau_of_word(&a), &xi).map_err(|e| e.to_string())?;
                    let sb = specialize(&burau_of_word(&b), &xi).map_err(|e| e.to_string())?;
                    ensure(both == sa.mul(&sb), || format!("p={p} {a} · {b}"))?;
                }
            }
            Ok("300 random pairs".into())
        }),
    ]
}

fn class(w: &FreeWord) -> [IntPoly; 2] {
    psi(w).vector()
}

pub fn freegroup_suite() -> Vec<Check> {
    let s = Suite::FreeGroup;
    vec![
        check(s, "psi is a homomorphism", || {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
            for _ in 0..200 {
                let (a, b) = (random_free_word(&mut rng, 10), random_free_word(&mut rng, 10));
                ensure(psi(&a.mul(&b)) == psi(&a).mul(&psi(&b)), || format!("{a} · {b}"))?;
            }
            Ok("200 random pairs".into())
        }),
        check(s, "Artin action matches Burau", || {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
            let mut tested = 0;
            while tested < 100 {
                let w = random_free_word(&mut rng, 8);
                if w.degree() != 0 {
                    continue;
                }
                let b = random_word(&mut rng, 4, 2);
                let image = class(&artin_apply(&b, &w).map_err(|e| e.to_string())?);
                let expect = burau_of_word(&b).mat.apply(&class(&w));
                ensure(image == expect, || format!("{b} on {w}"))?;
                tested += 1;
            }
            Ok("100 random degree-0 words".into())
        }),
        check(s, "product rule for β(αh)", || {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
            let mut tested = 0;
            while tested < 100 {
                let a = random_free_word(&mut rng, 4);
                let h = random_free_word(&mut rng, 6);
                if h.degree() != 0 {
                    continue;
                }
                let b = random_word(&mut rng, 4, 2);
                let ah = a.mul(&h);
                let lhs = class(&artin_apply(&b, &ah).map_err(|e| e.to_string())?.mul(&ah.inverse()));
                let base = class(&artin_apply(&b, &a).map_err(|e| e.to_string())?.mul(&a.inverse()));
                let hv = class(&h);
                let moved = burau_of_word(&b).mat.apply(&hv);
                let expect = [
                    &base[0] + &(&moved[0] - &hv[0]).shift(a.degree()),
                    &base[1] + &(&moved[1] - &hv[1]).shift(a.degree()),
                ];
                ensure(lhs == expect, || format!("{b}, α={a}, h={h}"))?;
                tested += 1;
            }
            Ok("100 random (β, α, h)".into())
        }),
        check(s, "power rule for β(αⁿ)", || {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
            for _ in 0..40 {
                let a = random_free_word(&mut rng, 4);
                let b = random_word(&mut rng, 4, 2);
                let base = class(&artin_apply(&b, &a).map_err(|e| e.to_string())?.mul(&a.inverse()));
                let ba = artin_apply(&b, &a).map_err(|e| e.to_string())?;
                for n in -2..=3i64 {
                    let lhs = class(&ba.pow(n).mul(&a.pow(-n)));
                    let f = IntPoly::geometric(n).substitute_power(a.degree());
                    ensure(lhs == [&f * &base[0], &f * &base[1]], || format!("{b}, α={a}, n={n}"))?;
                }
            }
            Ok("40 random (β, α), n ∈ −2..3".into())
        }),
        check(s, "full-twist classes", || {
            let base = [poly(&[-1, 1]), poly(&[-1, 0, 1])];
            for s_ in 1..=3i64 {
                let b = word("s2 s1").pow(3 * s_);
                let v = tilde_class(&b, 3).map_err(|e| e.to_string())?;
                let f = IntPoly::geometric(s_).substitute_power(3);
                ensure(v == [&f * &base[0], &f * &base[1]], || format!("s={s_}: {v:?}"))?;
            }
            Ok("[(σ2σ1)^{3s}(α3)α3⁻¹] = f_s(t³)((t−1)e1 + (t²−1)e2), s ≤ 3".into())
        }),
    ]
}

/// Every `ξ` that is a root of a monic irreducible polynomial of degree at
/// most 2 over `F_p`, excluding `ξ = ±1`.
pub fn small_fields(p: u64) -> Vec<(IntPoly, RingElem)> {
    let mut out = Vec::new();
    for c in 0..p {
        for b in 0..=p {
            let f = if b == p { FpPoly::new(p, vec![c, 1]) } else { FpPoly::new(p, vec![c, b, 1]) };
            if !is_irreducible(&f) {
                continue;
            }
            let ring = RingDescriptor::new(p, &f.to_int()).expect("irreducible reducer");
            let xi = RingElem::generator(&ring);
            if xi.is_one() || xi.neg().is_one() || xi.is_zero() {
                continue;
            }
            out.push((f.to_int(), xi));
        }
    }
    out
}

/// The rows of `[ξ^r σ1^m − id | ξ^s σ2^n − id]`, entry by entry.
pub fn trivalent_oracle_matrix(m: u64, n: u64, r: i64, s: i64, xi: &RingElem) -> [[RingElem; 4]; 2] {
    let one = RingElem::one(xi.ring());
    let zero = RingElem::zero(xi.ring());
    let mx = xi.neg();
    let geo = |k: u64| mx.pow_u128(k as u128).sub(&one).mul(&mx.sub(&one).inverse().expect("ξ ≠ −1"));
    let xr = xi.pow(r).expect("unit");
    let xs = xi.pow(s).expect("unit");
    [
        [xr.mul(&mx.pow_u128(m as u128)).sub(&one), xr.mul(&geo(m)), xs.sub(&one), zero.clone()],
        [zero, xr.sub(&one), xs.mul(xi).mul(&geo(n)), xs.mul(&mx.pow_u128(n as u128)).sub(&one)],
    ]
}

/// Column span of a 2×k matrix over a field: `(dim, line)` with the line
/// given by its first nonzero column when `dim = 1`.
pub fn oracle_span(rows: &[Vec<RingElem>; 2]) -> (u8, Option<Vec2>) {
    let k = rows[0].len();
    let cols: Vec<Vec2> = (0..k).map(|j| [rows[0][j].clone(), rows[1][j].clone()]).collect();
    for i in 0..k {
        for j in i + 1..k {
            if !cols[i][0].mul(&cols[j][1]).sub(&cols[i][1].mul(&cols[j][0])).is_zero() {
                return (2, None);
            }
        }
    }
    match cols.into_iter().find(|c| !c[0].is_zero() || !c[1].is_zero()) {
        Some(c) => (1, Some(c)),
        None => (0, None),
    }
}

fn agrees(c: &VertexClass, dim: u8, line: &Option<Vec2>) -> bool {
    if c.dim != dim || (c.kind == VertexKind::Z) != (dim == 0) || (c.kind == VertexKind::Full) != (dim == 2) {
        return false;
    }
    match (line, &c.generator) {
        (Some(a), Some(b)) => same_line(a, b),
        (None, _) => true,
        _ => false,
    }
}

pub fn trivalent_cell_agrees(m: u64, n: u64, r: i64, s: i64, xi: &RingElem) -> bool {
    let Ok(c) = classify_trivalent(m, n, r, s, xi) else { return false };
    let [a, b] = trivalent_oracle_matrix(m, n, r, s, xi);
    let (dim, line) = oracle_span(&[a.to_vec(), b.to_vec()]);
    agrees(&c, dim, &line)
}

pub fn black_agrees(r: i64, xi: &RingElem) -> bool {
    let Ok(c) = classify_monovalent_black(r, xi) else { return false };
    let one = RingElem::one(xi.ring());
    let xr = xi.pow(r).expect("unit");
    let rows = [
        vec![xr.mul(xi).add(&one).neg(), xr.clone()],
        vec![xr.mul(xi).mul(xi).neg(), one.neg()],
    ];
    let (dim, line) = oracle_span(&rows);
    let det_zero = xr.mul(xi).pow_u128(2).add(&xr.mul(xi)).add(&one).is_zero();
    agrees(&c, dim, &line) && det_zero == (dim < 2)
}

pub fn white_agrees(r: i64, xi: &RingElem) -> bool {
    let Ok(c) = classify_monovalent_white(r, xi) else { return false };
    let one = RingElem::one(xi.ring());
    let xr = xi.pow(r).expect("unit");
    let rows = [vec![one.neg(), xr.mul(xi).neg()], vec![xr.mul(xi).mul(xi).neg(), one.neg()]];
    let (dim, line) = oracle_span(&rows);
    let det_zero = xi.pow(2 * r + 3).expect("unit").is_one();
    agrees(&c, dim, &line) && det_zero == (dim < 2)
}

/// How much of the `(m, n, r, s) ∈ [1, 2M]² × [0, 2M)²` grid to visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coverage {
    Exhaustive,
    /// This many seeded random cells.
    Sampled { samples: u64 },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GridStats {
    pub fields: usize,
    pub cells: u64,
    pub mismatches: u64,
    pub first_mismatch: Option<String>,
}

impl GridStats {
    fn record(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.cells += 1;
        if !ok {
            self.mismatches += 1;
            if self.first_mismatch.is_none() {
                self.first_mismatch = Some(label());
            }
        }
    }

    pub fn merge(&mut self, o: GridStats) {
        self.fields += o.fields;
        self.cells += o.cells;
        self.mismatches += o.mismatches;
        if self.first_mismatch.is_none() {
            self.first_mismatch = o.first_mismatch;
        }
    }
}

pub fn grid_cell_count(xi: &RingElem) -> u64 {
    (2 * xi.mul_order().expect("unit")).pow(4)
}

/// Compares the trivalent classifier with the oracle on one field.
pub fn trivalent_grid(poly: &IntPoly, xi: &RingElem, coverage: Coverage) -> GridStats {
    let big_m = xi.mul_order().expect("unit");
    let w = 2 * big_m;
    let mut st = GridStats { fields: 1, ..Default::default() };
    let label = |m, n, r, s| format!("p={} {poly}: m={m} n={n} r={r} s={s}", xi.ring().characteristic());
    match coverage {
        Coverage::Exhaustive => {
            for m in 1..=w {
                for n in 1..=w {
                    for r in 0..w as i64 {
                        for s in 0..w as i64 {
                            st.record(trivalent_cell_agrees(m, n, r, s, xi), || label(m, n, r, s));
                        }
                    }
                }
            }
        }
        Coverage::Sampled { samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ big_m ^ (xi.ring().characteristic() << 32));
            for _ in 0..samples {
                let (m, n) = (rng.gen_range(1..=w), rng.gen_range(1..=w));
                let (r, s) = (rng.gen_range(0..w as i64), rng.gen_range(0..w as i64));
                st.record(trivalent_cell_agrees(m, n, r, s, xi), || label(m, n, r, s));
            }
        }
    }
    st
}

/// Both monovalent classifiers for every `r ∈ [0, 2M)`.
pub fn monovalent_grid(xi: &RingElem) -> GridStats {
    let w = 2 * xi.mul_order().expect("unit") as i64;
    let mut st = GridStats { fields: 1, ..Default::default() };
    for r in 0..w {
        st.record(black_agrees(r, xi), || format!("black r={r}"));
        st.record(white_agrees(r, xi), || format!("white r={r}"));
    }
    st
}

/// Exhaustive where the grid has at most `budget` cells, `samples` random
/// cells elsewhere.
pub fn coverage_for(xi: &RingElem, budget: u64, samples: u64) -> Coverage {
    if grid_cell_count(xi) <= budget {
        Coverage::Exhaustive
    } else {
        Coverage::Sampled { samples }
    }
}

/// Runs the trivalent and monovalent comparisons over every small field of
/// the given characteristics.
pub fn oracle_grid(primes: &[u64], budget: u64, samples: u64) -> (GridStats, GridStats) {
    let fields: Vec<(IntPoly, RingElem)> = primes.iter().flat_map(|&p| small_fields(p)).collect();
    let per_field: Vec<(GridStats, GridStats)> = fields
        .par_iter()
        .map(|(f, xi)| (trivalent_grid(f, xi, coverage_for(xi, budget, samples)), monovalent_grid(xi)))
        .collect();
    let mut tri = GridStats::default();
    let mut mono = GridStats::default();
    for (t, m) in per_field {
        tri.merge(t);
        mono.merge(m);
    }
    (tri, mono)
}

fn grid_outcome(primes: &[u64], budget: u64, samples: u64) -> Outcome {
    let (tri, mono) = oracle_grid(primes, budget, samples);
    ensure(tri.mismatches == 0, || format!("trivalent mismatch: {:?}", tri.first_mismatch))?;
    ensure(mono.mismatches == 0, || format!("monovalent mismatch: {:?}", mono.first_mismatch))?;
    Ok(format!("{} trivalent cells over {} fields, {} monovalent cells", tri.cells, tri.fields, mono.cells))
}

fn field(p: u64, f: &str) -> RingElem {
    RingElem::generator(&RingDescriptor::new(p, &f.parse().unwrap()).unwrap())
}

/// Comparisons between `I_G(ξ)` and `Ĩ_G(ξ)`.
pub fn tilde_checks() -> Vec<Check> {
    let s = Suite::LocalGeom;
    vec![
        check(s, "I ⊂ Ĩ, equal off t²+t+1", || {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
            for (p, f) in [(13, "t+2"), (7, "t+3"), (11, "t+2"), (7, "t+2")] {
                let xi = field(p, f);
                let cubic = xi.mul(&xi).add(&xi).add(&RingElem::one(xi.ring())).is_zero();
                for _ in 0..30 {
                    let gens: Vec<BraidWord> = (0..2).map(|_| random_word(&mut rng, 3, 2)).collect();
                    let i = image_submodule(&gens, &xi).map_err(|e| e.to_string())?;
                    let ti = tilde_image_submodule(&gens, &xi).map_err(|e| e.to_string())?;
                    ensure(i.basis.iter().all(|v| ti.contains(v)), || format!("p={p}: I ⊄ Ĩ"))?;
                    if !cubic {
                        ensure(i.dim == ti.dim, || format!("p={p} {f}: dims {} vs {}", i.dim, ti.dim))?;
                    }
                }
            }
            Ok("120 random generator pairs".into())
        }),
        check(s, "(ξ²+ξ+1)Ĩ ⊂ I", || {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
            for (p, f) in [(7, "t+5"), (13, "t+10"), (13, "t+2"), (5, "t^2+2t+4")] {
                let xi = field(p, f);
                let c = xi.mul(&xi).add(&xi).add(&RingElem::one(xi.ring()));
                for _ in 0..30 {
                    let b = random_word(&mut rng, 4, 2);
                    let i = image_submodule(std::slice::from_ref(&b), &xi).map_err(|e| e.to_string())?;
                    let [c1, c2] = tilde_class(&b, 1).map_err(|e| e.to_string())?;
                    let v = [xi.eval_laurent(&c1).unwrap().mul(&c), xi.eval_laurent(&c2).unwrap().mul(&c)];
                    ensure(i.contains(&v), || format!("p={p} {f}: {b}"))?;
                }
            }
            Ok("120 random braids".into())
        }),
        check(s, "Ĩ for σ2σ1 over F3 at ξ = 1", || {
            let ring = RingDescriptor::integers_mod(3).map_err(|e| e.to_string())?;
            let one = RingElem::one(&ring);
            let ti = tilde_image_submodule(&[word("s2 s1")], &one).map_err(|e| e.to_string())?;
            let i = image_submodule(&[word("s2 s1")], &one).map_err(|e| e.to_string())?;
            ensure(ti.dim == 2, || format!("dim {}", ti.dim))?;
            Ok(format!("Ĩ is the whole plane, I has dim {}", i.dim))
        }),
    ]
}

pub fn localgeom_suite() -> Vec<Check> {
    let s = Suite::LocalGeom;
    let mut out = vec![
        check(s, "classifier vs matrix oracle", || grid_outcome(&[2, 3, 5, 7, 13], 20_000, 300)),
        check(s, "one-essential property", || {
            for p in [5, 7, 13] {
                for (_, xi) in small_fields(p) {
                    let n_ord = xi.neg().mul_order().unwrap();
                    let w = 2 * xi.mul_order().unwrap();
                    let mut rng = ChaCha8Rng::seed_from_u64(SEED + p);
                    for _ in 0..500 {
                        let (m, n) = (rng.gen_range(1..=w), rng.gen_range(1..=w));
                        let (r, s_) = (rng.gen_range(0..w as i64), rng.gen_range(0..w as i64));
                        let c = classify_trivalent(m, n, r, s_, &xi).map_err(|e| e.to_string())?;
                        if c.dim <= 1 && !matches!(c.kind, VertexKind::Z | VertexKind::IIex) {
                            ensure(m % n_ord == 0 || n % n_ord == 0, || format!("p={p} m={m} n={n} r={r} s={s_}"))?;
                        }
                    }
                }
            }
            Ok("degenerate non-exceptional vertices have an N-divisible width".into())
        }),
        check(s, "specialized words agree with specialized matrices", || {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
            let xi = field(13, "t+2");
            for _ in 0..100 {
                let w = random_word(&mut rng, 8, 3);
                let a = specialized_word(&w, &xi).map_err(|e| e.to_string())?;
                let b = specialize(&burau_of_word(&w), &xi).map_err(|e| e.to_string())?.mat;
                ensure(a == b, || format!("{w}"))?;
            }
            Ok("100 random words at p=13".into())
        }),
    ];
    out.extend(tilde_checks());
    out
}

pub fn run(suites: &[Suite]) -> Vec<Check> {
    suites
        .iter()
        .flat_map(|s| match s {
            Suite::Burau => burau_suite(),
            Suite::FreeGroup => freegroup_suite(),
            Suite::LocalGeom => localgeom_suite(),
        })
        .collect()
}
