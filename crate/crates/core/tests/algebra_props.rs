use burau_atlas::algebra::{
    cyclotomic, ee, factor_mod_p, is_prime_u64, resultant, FpPoly, IntPoly, RingDescriptor, RingElem,
};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn fp_irreducible_by_scan(f: &FpPoly) -> bool {
    let p = f.modulus();
    let deg = f.degree().unwrap();
    if deg <= 1 {
        return true;
    }
    // any factorization has a monic factor of degree ≤ deg/2
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for code in 0..count {
            let mut c = Vec::with_capacity(d + 1);
            let mut x = code;
            for _ in 0..d {
                c.push(x % p);
                x /= p;
            }
            c.push(1);
            if f.rem(&FpPoly::new(p, c)).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Content-free remainder sequence over Z; returns the degree of gcd over Q.
fn gcd_degree(f: &IntPoly, g: &IntPoly) -> usize {
    let norm = |v: Vec<BigInt>| -> Vec<BigInt> {
        let mut v = v;
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        let g = v.iter().fold(BigInt::zero(), |a, c| num_integer::Integer::gcd(&a, c));
        if g.is_zero() {
            return v;
        }
        v.into_iter().map(|c| c / &g).collect()
    };
    let mut a = norm(f.dense_coeffs());
    let mut b = norm(g.dense_coeffs());
    while !b.is_empty() {
        while a.len() >= b.len() && !a.is_empty() {
            let shift = a.len() - b.len();
            let la = a.last().unwrap().clone();
            let lb = b.last().unwrap().clone();
            let mut next: Vec<BigInt> = a.iter().map(|c| c * &lb).collect();
            for (i, c) in b.iter().enumerate() {
                next[i + shift] -= c * &la;
            }
            a = norm(next);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

fn small_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-4i64..=4, 1..5).prop_filter_map("nonzero leading", |mut c| {
        while c.last() == Some(&0) {
            c.pop();
        }
        (c.len() >= 2).then(|| IntPoly::from_i64s(&c))
    })
}

proptest! {
    #[test]
    fn factors_multiply_back(p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]),
                             c in prop::collection::vec(0u64..13, 1..7)) {
        let mut coeffs: Vec<u64> = c.iter().map(|x| x % p).collect();
        coeffs.push(1);
        let f = FpPoly::new(p, coeffs);
        let factors = factor_mod_p(&f.to_int(), p).unwrap();
        let mut prod = FpPoly::one(p);
        for (g, e) in &factors {
            prop_assert!(g.is_monic());
            if g.degree().unwrap() <= 3 {
                prop_assert!(fp_irreducible_by_scan(g), "{g} over F{p}");
            }
            for _ in 0..*e {
                prod = prod.mul(g);
            }
        }
        prop_assert_eq!(prod, f);
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(f in small_poly(), g in small_poly()) {
        let r = resultant(&f, &g).unwrap();
        prop_assert_eq!(r.is_zero(), gcd_degree(&f, &g) > 0, "f={} g={}", f, g);
    }

    #[test]
    fn resultant_is_multiplicative(f in small_poly(), g in small_poly(), h in small_poly()) {
        let lhs = resultant(&f, &(&g * &h)).unwrap();
        let rhs = resultant(&f, &g).unwrap() * resultant(&f, &h).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn laurent_ring_laws(a in small_poly(), b in small_poly(), c in small_poly(), k in -5i64..5) {
        let (a, b) = (a.shift(k), b.shift(-k));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn order_of_negative_is_ee(p in prop::sample::select(vec![3u64, 5, 7, 11, 13, 17, 19, 23]), a in 1u64..1000) {
        let ring = RingDescriptor::integers_mod(p).unwrap();
        let x = RingElem::from_int(&ring, (a % (p - 1) + 1) as i64);
        let n = x.mul_order().unwrap();
        let m = x.neg().mul_order().unwrap();
        prop_assert_eq!(m, ee(p, n).unwrap());
    }

    #[test]
    fn ring_inverse_in_extension(p in prop::sample::select(vec![2u64, 3, 5, 7]), a in 0u64..49, b in 0u64..49) {
        let reducer: IntPoly = match p { 2 => "t^2+t+1", 3 => "t^2+1", 5 => "t^2+2", _ => "t^2+1" }.parse().unwrap();
        let ring = RingDescriptor::new(p, &reducer).unwrap();
        let x = RingElem::from_poly(&ring, &IntPoly::from_i64s(&[(a % p) as i64, (b % p) as i64])).unwrap();
        if !x.is_zero() {
            prop_assert!(x.mul(&x.inverse().unwrap()).is_one());
        }
    }
}

#[test]
fn ee_is_an_involution() {
    for p in [0u64, 2, 3, 5, 7, 11, 13] {
        for n in 1..200u64 {
            if p != 0 && n % p == 0 {
                continue;
            }
            let m = ee(p, n).unwrap();
            assert_eq!(ee(p, m).unwrap(), n, "p={p} n={n}");
        }
    }
}

#[test]
fn cyclotomic_values_at_one() {
    // Φ_n(1) = q for n = q^k a prime power, 1 otherwise (n ≥ 2)
    for n in 2..60u64 {
        let v = cyclotomic(n).eval_int(&BigInt::from(1)).unwrap();
        let prime_power = (2..=n).find(|q| n % q == 0).filter(|&q| {
            let mut m = n;
            while m % q == 0 {
                m /= q;
            }
            m == 1 && is_prime_u64(q)
        });
        assert_eq!(v.abs(), BigInt::from(prime_power.unwrap_or(1)), "n={n}");
    }
}
