//! Exceptional factors with `N > 10`: candidate triples `(p, N, m_ξ)` from
//! resultants of distance equations, the κ-filter, genus verdicts by coset
//! enumeration, and the resultant check ruling out `N = 7, 9` in the Burau
//! image itself.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    cyclotomic, factor_fp, factor_integer, resultant, resultant_bivariate, FactorLimits, FpPoly,
    IntPoly, RingDescriptor, RingElem,
};
use crate::localgeom::{distance_equation, valid_types, CharMode, VertexKind};
use crate::skeleton::Signature;
use crate::universal::{enumerate_universal, EnumerationTask, Mode, UniversalError};

pub mod tables;

/// One `(d, T_u, T_v)` cell whose distance equation produced the factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Witness {
    pub d: u64,
    pub tu: VertexKind,
    pub tv: VertexKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Unset,
    Genus0 { signature: Signature },
    GenusPositive { signature: Signature },
    BeyondCap { cap: usize },
}

impl Verdict {
    pub fn is_genus0(&self) -> bool {
        matches!(self, Self::Genus0 { .. })
    }

    pub fn is_positive(&self) -> bool {
        matches!(self, Self::GenusPositive { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateTriple {
    pub p: u64,
    pub n: u64,
    /// Monic and irreducible over `F_p`, dividing `Φ_N(−t)`.
    pub min_poly: FpPoly,
    pub witnesses: BTreeSet<Witness>,
    pub verdict: Verdict,
}

impl CandidateTriple {
    pub fn min_poly_int(&self) -> IntPoly {
        self.min_poly.to_int()
    }

    pub fn key(&self) -> TripleKey {
        (self.p, self.n, self.min_poly.sort_key())
    }
}

/// `(p, N, m_ξ)` with `m_ξ` in its canonical sort order.
pub type TripleKey = (u64, u64, (usize, Vec<u64>));

/// Which characteristics to scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Characteristics {
    Zero,
    Positive,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub n_min: u64,
    pub n_max: u64,
    pub chars: Characteristics,
    pub limits: FactorLimits,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { n_min: 11, n_max: 26, chars: Characteristics::Positive, limits: FactorLimits::default() }
    }
}

/// A `(N, d, T_u, T_v)` cell of the scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub n: u64,
    pub d: u64,
    pub tu: VertexKind,
    pub tv: VertexKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellWarning {
    pub cell: Cell,
    pub message: String,
}

#[derive(Clone, Debug, Default)]
pub struct SearchReport {
    pub candidates: Vec<CandidateTriple>,
    /// Characteristic-zero cells whose resultant vanished.
    pub char0_zeros: Vec<Cell>,
    pub warnings: Vec<CellWarning>,
}

#[derive(Default)]
struct CellOutput {
    hits: Vec<((u64, u64, FpPoly), Witness)>,
    zero: Option<Cell>,
    warnings: Vec<CellWarning>,
}

/// `Φ_N(−t)`: its roots are the `ξ` with `−ξ` of order exactly `N`.
pub fn order_polynomial(n: u64) -> IntPoly {
    cyclotomic(n).negate_var()
}

/// `Res_t(Φ_N(−t), E)`, computed after reducing `E` modulo the monic `Φ_N(−t)`.
pub fn cell_resultant(e: &IntPoly, n: u64) -> BigInt {
    let phi = order_polynomial(n);
    let r = e.rem_monic(&phi);
    if r.is_zero() {
        return BigInt::zero();
    }
    resultant(&phi, &r).expect("Φ_N(−t) has positive degree")
}

fn cells(mode: CharMode, n: u64) -> Vec<Cell> {
    let Ok(m) = mode.m_for(n) else { return Vec::new() };
    let types = valid_types(mode, m);
    let mut out = Vec::new();
    for d in 1..n {
        for &tu in &types {
            for &tv in &types {
                if tu != tv {
                    out.push(Cell { n, d, tu, tv });
                }
            }
        }
    }
    out
}

fn factors_over(p: u64, e: &IntPoly, n: u64, w: Witness, out: &mut CellOutput) {
    let g = FpPoly::from_int(e, p).gcd(&FpPoly::from_int(&order_polynomial(n), p));
    if g.degree().unwrap_or(0) == 0 {
        return;
    }
    for (f, _) in factor_fp(&g) {
        out.hits.push(((p, n, f), w));
    }
}

fn run_cell(cell: Cell, mode: CharMode, chars: Characteristics, limits: FactorLimits) -> CellOutput {
    let mut out = CellOutput::default();
    let e = distance_equation(cell.tu, cell.tv, cell.d, cell.n, mode)
        .expect("cell types are valid for the mode")
        .poly;
    let w = Witness { d: cell.d, tu: cell.tu, tv: cell.tv };
    match mode {
        CharMode::Two => factors_over(2, &e, cell.n, w, &mut out),
        CharMode::Three => factors_over(3, &e, cell.n, w, &mut out),
        CharMode::Zero | CharMode::GenericOdd => {
            let r = cell_resultant(&e, cell.n);
            if r.is_zero() {
                if chars == Characteristics::Zero {
                    out.zero = Some(cell);
                } else {
                    out.warnings.push(CellWarning { cell, message: "resultant vanishes".into() });
                }
                return out;
            }
            if chars == Characteristics::Zero {
                return out;
            }
            let fact = factor_integer(&r, limits);
            for c in &fact.unresolved {
                out.warnings.push(CellWarning { cell, message: format!("unfactored cofactor {c}") });
            }
            for (q, _) in &fact.primes {
                let Some(q) = q.to_u64() else {
                    out.warnings.push(CellWarning { cell, message: format!("prime {q} exceeds 64 bits") });
                    continue;
                };
                if q >= 5 && !cell.n.is_multiple_of(q) {
                    factors_over(q, &e, cell.n, w, &mut out);
                }
            }
        }
    }
    out
}

/// Scans every `(N, d, T_u, T_v)` cell. Cells run in parallel; the merge is
/// keyed by `(p, N, m_ξ)` so the output order does not depend on scheduling.
pub fn candidate_search(opts: &SearchOptions) -> SearchReport {
    let modes: &[CharMode] = match opts.chars {
        Characteristics::Zero => &[CharMode::Zero],
        Characteristics::Positive => &[CharMode::GenericOdd, CharMode::Two, CharMode::Three],
    };
    let mut jobs = Vec::new();
    for n in opts.n_min..=opts.n_max {
        for &mode in modes {
            jobs.extend(cells(mode, n).into_iter().map(|c| (c, mode)));
        }
    }
    let outputs: Vec<CellOutput> =
        jobs.par_iter().map(|&(c, mode)| run_cell(c, mode, opts.chars, opts.limits)).collect();

    let mut merged: BTreeMap<TripleKey, CandidateTriple> = BTreeMap::new();
    let mut report = SearchReport::default();
    for o in outputs {
        for ((p, n, f), w) in o.hits {
            merged
                .entry((p, n, f.sort_key()))
                .or_insert_with(|| CandidateTriple {
                    p,
                    n,
                    min_poly: f,
                    witnesses: BTreeSet::new(),
                    verdict: Verdict::Unset,
                })
                .witnesses
                .insert(w);
        }
        report.char0_zeros.extend(o.zero);
        report.warnings.extend(o.warnings);
    }
    report.candidates = merged.into_values().collect();
    report
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KappaReport {
    pub types: Vec<VertexKind>,
    /// Witnessed unordered pairs, each listed once with the smaller type first.
    pub edges: Vec<(VertexKind, VertexKind)>,
    pub clique: Vec<VertexKind>,
    pub kappa: u32,
    pub bound_ok: bool,
}

/// Maximum total weight of a set of types that are pairwise joined by an edge.
/// Single types always qualify.
pub fn max_weight_clique(types: &[VertexKind], edges: &BTreeSet<(VertexKind, VertexKind)>) -> (Vec<VertexKind>, u32) {
    let joined = |a: VertexKind, b: VertexKind| edges.contains(&(a.min(b), a.max(b)));
    let mut best = (Vec::new(), 0);
    for mask in 1u32..(1 << types.len()) {
        let set: Vec<VertexKind> =
            types.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &t)| t).collect();
        let clique = set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| joined(a, b)));
        if clique {
            let w = set.iter().map(|t| t.kappa_weight()).sum();
            if w > best.1 {
                best = (set, w);
            }
        }
    }
    best
}

pub fn kappa_report(c: &CandidateTriple) -> KappaReport {
    let mode = CharMode::for_prime(c.p);
    let m = mode.m_for(c.n).expect("p does not divide N");
    let types = valid_types(mode, m);
    let edges: BTreeSet<_> = c.witnesses.iter().map(|w| (w.tu.min(w.tv), w.tu.max(w.tv))).collect();
    let (clique, kappa) = max_weight_clique(&types, &edges);
    KappaReport {
        bound_ok: c.n < 6 + kappa as u64,
        types,
        edges: edges.into_iter().collect(),
        clique,
        kappa,
    }
}

pub struct KappaOutcome {
    pub kept: Vec<(CandidateTriple, KappaReport)>,
    pub dropped: Vec<(CandidateTriple, KappaReport)>,
}

/// Keeps the triples with `N < 6 + κ`.
pub fn kappa_filter(cands: Vec<CandidateTriple>) -> KappaOutcome {
    let (kept, dropped) = cands
        .into_iter()
        .map(|c| {
            let r = kappa_report(&c);
            (c, r)
        })
        .partition(|(_, r)| r.bound_ok);
    KappaOutcome { kept, dropped }
}

/// Runs the coset enumeration for `v = e2` and turns it into a verdict.
pub fn classify_triple(p: u64, min_poly: &IntPoly, mode: Mode, cap: usize) -> Result<Verdict, UniversalError> {
    let ring = RingDescriptor::new(p, min_poly).map_err(|_| UniversalError::NotUnit)?;
    let task = EnumerationTask::new(RingElem::generator(&ring), mode).with_cap(cap);
    match enumerate_universal(&task) {
        Ok(e) if e.signature.genus == 0 => Ok(Verdict::Genus0 { signature: e.signature }),
        Ok(e) => Ok(Verdict::GenusPositive { signature: e.signature }),
        Err(UniversalError::CapExceeded { cap }) => Ok(Verdict::BeyondCap { cap }),
        Err(e) => Err(e),
    }
}

/// Extended-mode verdicts for every candidate, computed in parallel.
pub fn classify_candidates(cands: &mut [CandidateTriple], cap: usize) -> Result<(), UniversalError> {
    let verdicts: Vec<Result<Verdict, UniversalError>> = cands
        .par_iter()
        .map(|c| classify_triple(c.p, &c.min_poly_int(), Mode::Extended, cap))
        .collect();
    for (c, v) in cands.iter_mut().zip(verdicts) {
        c.verdict = v?;
    }
    Ok(())
}

/// The orders `n` for which `Res_λ(Φ_n(λ), χ(λ))` is checked.
pub const N79_ORDERS: [u64; 19] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 14, 18, 21, 26, 28, 36, 42];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct N79Residue {
    pub n: u64,
    pub residue: String,
    pub nonzero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct N79Report {
    pub target: u64,
    pub residues: Vec<N79Residue>,
    pub all_nonzero: bool,
}

/// Characteristic polynomial of `β = tσ1⁻¹σ2` in `λ`, coefficients in `ξ`,
/// ascending in `λ`.
pub fn beta_charpoly() -> [IntPoly; 3] {
    [IntPoly::monomial(1, 2), IntPoly::from_i64s(&[1, -1, 1]), IntPoly::one()]
}

/// `R_n(ξ) = Res_λ(Φ_n(λ), χ(λ))` as an integer polynomial in `ξ`.
pub fn n79_resultant(n: u64) -> IntPoly {
    let phi: Vec<IntPoly> = cyclotomic(n).dense_coeffs().into_iter().map(IntPoly::constant).collect();
    resultant_bivariate(&phi, &beta_charpoly()).expect("both have positive degree")
}

/// Reduces every `R_n` modulo `Φ_target(ξ)`.
pub fn n79_check(target: u64) -> N79Report {
    let phi = cyclotomic(target);
    let residues: Vec<N79Residue> = N79_ORDERS
        .iter()
        .map(|&n| {
            let r = n79_resultant(n).rem_monic(&phi);
            N79Residue { n, residue: r.to_string(), nonzero: !r.is_zero() }
        })
        .collect();
    N79Report { target, all_nonzero: residues.iter().all(|r| r.nonzero), residues }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;
    use crate::burau::{burau_of_word, BraidWord};
    use VertexKind::*;

    #[test]
    fn clique_weights() {
        let types = [I1, II1, IIIPlus, IIIMinus, IV];
        let edges = BTreeSet::from([(I1, II1), (I1, IIIPlus), (II1, IIIPlus)]);
        let (clique, k) = max_weight_clique(&types, &edges);
        assert_eq!(k, 14);
        assert_eq!(clique, vec![I1, II1, IIIPlus]);
        let (_, k) = max_weight_clique(&types, &BTreeSet::from([(I1, IV)]));
        assert_eq!(k, 8);
        assert!(15 >= 6 + k);
        let (_, k) = max_weight_clique(&types, &BTreeSet::new());
        assert_eq!(k, 5);
    }

    #[test]
    fn beta_matrix_and_charpoly() {
        let b = burau_of_word(&"t s1^-1 s2".parse::<BraidWord>().unwrap());
        let expect = [["t-1", "-t"], ["t^2", "-t^2"]];
        for (row, want) in b.mat.e.iter().zip(expect) {
            for (got, w) in row.iter().zip(want) {
                assert_eq!(*got, parse_poly(w).unwrap());
            }
        }
        let tr = &b.mat.e[0][0] + &b.mat.e[1][1];
        let det = b.mat.det();
        let [c0, c1, _] = beta_charpoly();
        assert_eq!(c1, -tr);
        assert_eq!(c0, det);
    }

    #[test]
    fn n79_first_residue() {
        assert_eq!(n79_resultant(1), parse_poly("2t^2-t+2").unwrap());
        let r = n79_check(14);
        assert_eq!(r.residues[0].residue, "2t^2-t+2");
        assert!(r.all_nonzero);
        assert!(n79_check(18).all_nonzero);
    }

    #[test]
    fn n12_contains_known_factors() {
        let opts = SearchOptions { n_min: 12, n_max: 12, ..Default::default() };
        let rep = candidate_search(&opts);
        let keys: BTreeSet<(u64, String)> =
            rep.candidates.iter().map(|c| (c.p, c.min_poly.to_string())).collect();
        for (p, f) in [(5, "t^2+2t+4"), (13, "t+2"), (37, "t+8")] {
            assert!(keys.contains(&(p, f.to_string())), "missing ({p}, {f})");
        }
        assert!(rep.warnings.is_empty(), "{:?}", rep.warnings);
    }

    #[test]
    fn classify_table_row() {
        let v = classify_triple(13, &parse_poly("t+2").unwrap(), Mode::Extended, 1000).unwrap();
        assert_eq!(v, Verdict::Genus0 { signature: "(14;0;2;1^2 12^1)".parse().unwrap() });
        let v = classify_triple(13, &parse_poly("t+2").unwrap(), Mode::Extended, 3).unwrap();
        assert_eq!(v, Verdict::BeyondCap { cap: 3 });
    }
}
