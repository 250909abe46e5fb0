use burau_atlas::algebra::{IntPoly, RingDescriptor, RingElem};
use burau_atlas::burau::specialized_word;
use burau_atlas::search::tables::{realized, small_n};
use burau_atlas::skeleton::Skeleton;
use burau_atlas::universal::{
    class_word, enumerate_full_matrix, enumerate_universal, schreier_word, stabilizes_seed,
    EnumerationTask, GeneratorSet, Mode, UniversalError,
};
use burau_atlas::verify::random_word;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn xi(p: u64, f: &str) -> RingElem {
    RingElem::generator(&RingDescriptor::new(p, &f.parse::<IntPoly>().unwrap()).unwrap())
}

#[test]
fn row_and_full_matrix_enumerations_agree_on_known_tables() {
    for row in realized().iter().chain(small_n().iter()) {
        for (p, _, f) in row.triples() {
            let task = EnumerationTask::new(RingElem::generator(&RingDescriptor::new(p, f).unwrap()), Mode::Extended);
            let rows = enumerate_universal(&task).unwrap();
            let full = enumerate_full_matrix(&task).unwrap();
            assert_eq!(rows.skeleton.n_edges(), full.n_edges(), "p={p} {f}");
            assert!(rows.skeleton.is_isomorphic(&full), "p={p} {f}");
        }
    }
}

#[test]
fn stabilizer_words_fix_the_seed() {
    let task = EnumerationTask::new(xi(19, "t+2"), Mode::Extended);
    let e = enumerate_universal(&task).unwrap();
    let gens = task.generators.words();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut count = 0;
    while count < 100 {
        let i = rand::Rng::gen_range(&mut rng, 0..e.table.classes.len() as u32);
        let g = rand::Rng::gen_range(&mut rng, 0..2usize);
        let image = specialized_word(&gens[g], &task.xi).unwrap().apply_row(&e.table.classes[i as usize]);
        let j = (0..e.table.classes.len())
            .find(|&j| {
                let w = class_word(&e.table, task.generators, j as u32);
                let v = specialized_word(&w, &task.xi).unwrap().apply_row(&task.seed());
                task.scalars().unwrap().iter().any(|s| v[0].mul(s) == image[0] && v[1].mul(s) == image[1])
            })
            .unwrap();
        let w = schreier_word(&e.table, task.generators, i, g, j as u32);
        assert!(stabilizes_seed(&task, &specialized_word(&w, &task.xi).unwrap()).unwrap());
        count += 1;
    }
}

#[test]
fn unipotent_elements_in_the_universal_subgroup_fix_the_seed() {
    // random β with Im(β − id) ⊂ span(e2) fixes class 0
    let task = EnumerationTask::new(xi(13, "t+2"), Mode::Extended);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut found = 0;
    for _ in 0..20_000 {
        let w = random_word(&mut rng, 10, 12);
        let b = specialized_word(&w, &task.xi).unwrap();
        let m = b.minus_identity();
        if m.e[0][0].is_zero() && m.e[0][1].is_zero() {
            assert!(stabilizes_seed(&task, &b).unwrap(), "{w}");
            found += 1;
        }
    }
    assert!(found > 0);
}

#[test]
fn enumeration_is_deterministic() {
    let task = EnumerationTask::new(xi(37, "t+8"), Mode::Extended);
    let a = enumerate_universal(&task).unwrap();
    let b = enumerate_universal(&task).unwrap();
    assert_eq!(a.table, b.table);
    assert_eq!(a.skeleton.to_dot(), b.skeleton.to_dot());
}

#[test]
fn modes_coincide_when_three_does_not_divide_the_order() {
    for (p, f) in [(23, "t+2"), (11, "t+9"), (43, "t+39"), (29, "t+4")] {
        let x = xi(p, f);
        assert_ne!(x.mul_order().unwrap() % 3, 0);
        let a = enumerate_universal(&EnumerationTask::new(x.clone(), Mode::Extended)).unwrap();
        let b = enumerate_universal(&EnumerationTask::new(x, Mode::Braid)).unwrap();
        assert_eq!(a.table, b.table, "p={p}");
    }
}

#[test]
fn generating_sets_agree() {
    for (p, f) in [(13, "t+2"), (19, "t+3"), (7, "t+4")] {
        let task = EnumerationTask::new(xi(p, f), Mode::Braid);
        let a = enumerate_universal(&task).unwrap();
        let b = enumerate_universal(&task.clone().with_generators(GeneratorSet::Artin)).unwrap();
        assert!(a.skeleton.is_isomorphic(&b.skeleton));
    }
}

#[test]
fn other_seed_lines() {
    // span(e1) is the fixed line of σ1; its orbit gives the same index as e2
    let x = xi(13, "t+2");
    let ring = x.ring().clone();
    let e1 = [RingElem::one(&ring), RingElem::zero(&ring)];
    let a = enumerate_universal(&EnumerationTask::new(x.clone(), Mode::Extended).with_v(e1)).unwrap();
    let b = enumerate_universal(&EnumerationTask::new(x.clone(), Mode::Extended)).unwrap();
    assert!(a.skeleton.is_isomorphic(&b.skeleton));
    let zero = [RingElem::zero(&ring), RingElem::zero(&ring)];
    let err = enumerate_universal(&EnumerationTask::new(x, Mode::Extended).with_v(zero)).unwrap_err();
    assert_eq!(err, UniversalError::BadVector);
}

#[test]
fn composite_modulus_rings_enumerate() {
    // N = 6 style ring Z/m with ξ of order dividing 6
    let ring = RingDescriptor::integers_mod(91).unwrap();
    let x = RingElem::from_int(&ring, 10);
    let e = enumerate_universal(&EnumerationTask::new(x, Mode::Braid)).unwrap();
    assert_eq!(e.signature.index as usize, e.skeleton.n_edges());
    assert!(e.signature.euler_identity_holds());
}

#[test]
fn p2_small_example_signature() {
    let e = enumerate_universal(&EnumerationTask::new(xi(2, "t^3+t+1"), Mode::Extended)).unwrap();
    assert_eq!(e.signature.table_form(), "(9;1;0;1^2 7^1)");
    assert_eq!(e.signature.genus, 0);
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<u32>> {
    Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle()
}

/// Random valid skeletons: black cycles of length 1 or 3, white of length 1 or 2.
fn skeleton() -> impl Strategy<Value = Option<Skeleton>> {
    (1usize..16).prop_flat_map(|n| (permutation(n), prop::collection::vec(any::<bool>(), n), prop::collection::vec(any::<bool>(), n))).prop_map(
        |(order, triples, pairs)| {
            let n = order.len();
            let mut black: Vec<u32> = (0..n as u32).collect();
            let mut white: Vec<u32> = (0..n as u32).collect();
            let mut i = 0;
            while i < n {
                if triples[i] && i + 3 <= n {
                    let (a, b, c) = (order[i], order[i + 1], order[i + 2]);
                    black[a as usize] = b;
                    black[b as usize] = c;
                    black[c as usize] = a;
                    i += 3;
                } else {
                    i += 1;
                }
            }
            let mut i = 0;
            while i < n {
                if pairs[i] && i + 2 <= n {
                    let (a, b) = (i as u32, i as u32 + 1);
                    white[a as usize] = b;
                    white[b as usize] = a;
                    i += 2;
                } else {
                    i += 1;
                }
            }
            Skeleton::from_permutations(black, white).ok()
        },
    )
}

proptest! {
    #[test]
    fn skeleton_invariants(sk in skeleton()) {
        if let Some(sk) = sk {
            let sig = sk.signature();
            prop_assert_eq!(sk.euler_characteristic() % 2, 0);
            prop_assert_eq!(sig.index as usize, sk.n_edges());
            prop_assert_eq!(sig.widths.iter().map(|(w, m)| w * m).sum::<u64>(), sig.index);
            prop_assert!(sig.euler_identity_holds());
            if let Some(ok) = sig.small_width_identity() {
                prop_assert!(ok);
            }
            let again = Skeleton::from_permutations(sk.black().to_vec(), sk.white().to_vec()).unwrap();
            prop_assert_eq!(&again, &sk);
            prop_assert!(sk.canonical().is_isomorphic(&sk));
        }
    }

    #[test]
    fn enumerated_skeletons_have_nonnegative_genus(a in 2u64..22) {
        let ring = RingDescriptor::integers_mod(23).unwrap();
        let x = RingElem::from_int(&ring, a as i64);
        if !x.neg().is_one() {
            let e = enumerate_universal(&EnumerationTask::new(x, Mode::Extended)).unwrap();
            prop_assert!(e.signature.euler_characteristic() <= 2);
            prop_assert!(e.signature.euler_identity_holds());
        }
    }
}
