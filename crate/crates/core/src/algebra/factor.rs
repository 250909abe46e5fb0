use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{AlgebraError, FpPoly, IntPoly};

const EDF_SEED: u64 = 0x6275_7261_7531;

/// Complete factorization of `f` over `F_p` into monic irreducibles with
/// multiplicities, sorted by degree and then by coefficients. The leading
/// coefficient of `f` is dropped.
pub fn factor_mod_p(f: &IntPoly, p: u64) -> Result<Vec<(FpPoly, u32)>, AlgebraError> {
    if !super::integer::is_prime_u64(p) {
        return Err(AlgebraError::NotPrime(p));
    }
    let fp = FpPoly::from_int(f, p);
    if fp.is_zero() {
        return Err(AlgebraError::ZeroModP { p });
    }
    Ok(factor_fp(&fp))
}

/// Factorization of a nonzero polynomial over a prime field.
pub fn factor_fp(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let mut out = Vec::new();
    let f = f.make_monic();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(EDF_SEED);
    for (sqf, mult) in square_free(&f) {
        for (g, d) in distinct_degree(&sqf) {
            let mut pieces = Vec::new();
            equal_degree(&g, d, &mut rng, &mut pieces);
            out.extend(pieces.into_iter().map(|q| (q, mult)));
        }
    }
    out.sort_by_key(|(q, m)| (q.sort_key(), *m));
    // merge repeated factors coming from different square-free layers
    let mut merged: Vec<(FpPoly, u32)> = Vec::new();
    for (q, m) in out {
        match merged.last_mut() {
            Some((last, lm)) if *last == q => *lm += m,
            _ => merged.push((q, m)),
        }
    }
    merged
}

/// True iff `f` is irreducible over `F_p` (degree ≥ 1).
pub fn is_irreducible(f: &FpPoly) -> bool {
    match f.degree() {
        None | Some(0) => false,
        Some(1) => true,
        Some(_) => {
            let fac = factor_fp(f);
            fac.len() == 1 && fac[0].1 == 1
        }
    }
}

/// Yun-style square-free decomposition in characteristic p: returns monic
/// square-free parts with their multiplicities.
fn square_free(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let p = f.modulus();
    let mut out = Vec::new();
    let df = f.derivative();
    if df.is_zero() {
        // f is a p-th power
        for (g, m) in square_free(&pth_root(f)) {
            out.push((g, m * p as u32));
        }
        return out;
    }
    let mut c = f.gcd(&df);
    let mut w = f.div_rem(&c).0;
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_rem(&y).0;
        if !z.is_one() {
            out.push((z.make_monic(), i));
        }
        i += 1;
        w = y;
        c = c.div_rem(&w).0;
    }
    if !c.is_one() {
        for (g, m) in square_free(&pth_root(&c)) {
            out.push((g, m * p as u32));
        }
    }
    out
}

/// For `f = g(t^p)` over `F_p`, returns `g` (Frobenius is the identity on `F_p`).
fn pth_root(f: &FpPoly) -> FpPoly {
    let p = f.modulus() as usize;
    let coeffs = f.coeffs().iter().step_by(p).copied().collect();
    FpPoly::new(f.modulus(), coeffs)
}

fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.modulus();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = FpPoly::x(p);
    let mut h = x.clone();
    let mut d = 0usize;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(p as u128, &rest);
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            out.push((g.clone(), d));
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        let deg = rest.degree().unwrap();
        out.push((rest.make_monic(), deg));
    }
    out
}

/// Cantor–Zassenhaus splitting of a product of distinct irreducibles of degree `d`.
fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<FpPoly>) {
    let n = f.degree().unwrap();
    if n == d {
        out.push(f.make_monic());
        return;
    }
    let p = f.modulus();
    if n == 2 && d == 1 && p < 1 << 20 {
        // direct root scan
        for r in 0..p {
            if f.eval(r) == 0 {
                let lin = FpPoly::new(p, vec![p - r, 1]);
                out.push(lin.clone());
                out.push(f.div_rem(&lin).0.make_monic());
                return;
            }
        }
    }
    loop {
        let a = FpPoly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut acc = a.rem(f);
            let mut cur = acc.clone();
            for _ in 1..d {
                cur = cur.mul(&cur).rem(f);
                acc = acc.add(&cur);
            }
            f.gcd(&acc)
        } else {
            let e = ((p as u128).pow(d as u32) - 1) / 2;
            let b = a.pow_mod(e, f).sub(&FpPoly::one(p));
            f.gcd(&b)
        };
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let h = f.div_rem(&g).0;
            equal_degree(&g, d, rng, out);
            equal_degree(&h, d, rng, out);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    fn fac(s: &str, p: u64) -> Vec<(String, u32)> {
        factor_mod_p(&parse_poly(s).unwrap(), p)
            .unwrap()
            .into_iter()
            .map(|(q, m)| (q.to_string(), m))
            .collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(fac("t^2+t+1", 7), vec![("t+3".into(), 1), ("t+5".into(), 1)]);
        assert_eq!(fac("t^4+t+1", 2), vec![("t^4+t+1".into(), 1)]);
        assert_eq!(fac("t-1", 5), vec![("t+4".into(), 1)]);
    }

    #[test]
    fn repeated_and_inseparable_factors() {
        // (t+1)^2 (t^2+1) over F_3 and t^4+1 = (t+1)^4 over F_2
        assert_eq!(fac("t^4+2t^3+2t^2+2t+1", 3), vec![("t+1".into(), 2), ("t^2+1".into(), 1)]);
        assert_eq!(fac("t^4+1", 2), vec![("t+1".into(), 4)]);
        assert_eq!(fac("t^6+t^3+1", 3), vec![("t+2".into(), 6)]);
    }

    #[test]
    fn rejects_zero_mod_p() {
        assert!(factor_mod_p(&parse_poly("7t+14").unwrap(), 7).is_err());
        assert!(factor_mod_p(&parse_poly("t").unwrap(), 8).is_err());
    }
}
