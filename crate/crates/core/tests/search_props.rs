use std::sync::OnceLock;

use burau_atlas::algebra::{RingDescriptor, RingElem};
use burau_atlas::localgeom::{a_coefficient, CharMode};
use burau_atlas::search::tables::realized;
use burau_atlas::search::{candidate_search, kappa_filter, n79_check, SearchOptions, SearchReport};
use burau_atlas::universal::{enumerate_universal, line_orbit_conjugacy, EnumerationTask, Mode};

fn report() -> &'static SearchReport {
    static R: OnceLock<SearchReport> = OnceLock::new();
    R.get_or_init(|| candidate_search(&SearchOptions::default()))
}

#[test]
fn search_is_deterministic() {
    let again = candidate_search(&SearchOptions::default());
    let a: Vec<_> = report().candidates.iter().map(|c| (c.key(), c.witnesses.clone())).collect();
    let b: Vec<_> = again.candidates.iter().map(|c| (c.key(), c.witnesses.clone())).collect();
    assert_eq!(a, b);
    assert_eq!(report().warnings, again.warnings);
}

#[test]
fn witnessed_generator_lines_are_conjugate_to_e2() {
    let cands: Vec<_> = kappa_filter(report().candidates.clone()).kept.into_iter().map(|(c, _)| c).collect();
    let mut checked = 0;
    for row in realized() {
        for (p, n, f) in row.triples() {
            let c = cands.iter().find(|c| c.p == p && c.n == n && c.min_poly_int() == *f).expect("realized triple kept");
            let xi = RingElem::generator(&RingDescriptor::new(p, f).unwrap());
            let ring = xi.ring().clone();
            let e2 = [RingElem::zero(&ring), RingElem::one(&ring)];
            let mode = CharMode::for_prime(p);
            let m = mode.m_for(n).unwrap();
            for w in &c.witnesses {
                for kind in [w.tu, w.tv] {
                    let a = xi.eval_laurent(&a_coefficient(kind, mode, m).unwrap()).unwrap();
                    let v = [a, RingElem::one(&ring)];
                    assert!(line_orbit_conjugacy(&xi, &v, &e2, Mode::Extended).unwrap(), "p={p} {f} {kind:?}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn factors_of_one_row_give_the_same_signature() {
    for row in realized() {
        let sigs: Vec<_> = row
            .triples()
            .map(|(p, _, f)| {
                let xi = RingElem::generator(&RingDescriptor::new(p, f).unwrap());
                enumerate_universal(&EnumerationTask::new(xi, Mode::Extended)).unwrap().signature
            })
            .collect();
        assert!(sigs.windows(2).all(|w| w[0] == w[1]), "p={} N={}", row.p, row.n);
    }
}

#[test]
fn n79_residue_regression() {
    let r = n79_check(14);
    assert!(r.all_nonzero);
    assert_eq!(r.residues.len(), 19);
    assert_eq!(r.residues[0].n, 1);
    assert_eq!(r.residues[0].residue, "2t^2-t+2");
}
