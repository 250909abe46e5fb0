//! Exact arithmetic: Laurent polynomials over `Z`, polynomials over `Z/m`,
//! finite quotient rings, factorization, resultants and integer factoring.

mod factor;
mod fp_poly;
pub mod integer;
mod intpoly;
mod parse;
mod resultant;
mod ring;

pub use factor::{factor_fp, factor_mod_p, is_irreducible};
pub use fp_poly::FpPoly;
pub use integer::{factor_integer, is_prime_u64, FactorLimits, IntFactorization};
pub use intpoly::IntPoly;
pub use parse::{parse_poly, ParseError};
pub use resultant::{bareiss_det, resultant, resultant_bivariate, resultant_generic, ExactRing};
pub use ring::{Ring, RingDescriptor, RingElem};

use num_integer::Integer;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial vanishes modulo {p}")]
    ZeroModP { p: u64 },
    #[error("modulus {0} out of range")]
    BadModulus(u64),
    #[error("reducer {0} must be monic of degree at least 1")]
    BadReducer(String),
    #[error("element is not a unit")]
    NotUnit,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("both polynomials are constant")]
    BothConstant,
    #[error("negative exponents are not allowed here")]
    LaurentInput,
    #[error("{p} divides {n}")]
    Divides { p: u64, n: u64 },
}

/// The cyclotomic polynomial `Φ_n`, by exact division of `t^n - 1` by `Φ_d`
/// for the proper divisors `d` of `n`.
pub fn cyclotomic(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic(0)");
    let mut acc = IntPoly::monomial(1, n as i64) - IntPoly::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            acc = acc.div_exact(&cyclotomic(d)).expect("cyclotomic division is exact");
        }
    }
    acc
}

/// The involution `ee_p` exchanging the orders of `ξ` and `-ξ`; `p = 0` means
/// characteristic zero.
pub fn ee(p: u64, n: u64) -> Result<u64, AlgebraError> {
    assert!(n >= 1);
    if p != 0 && n.is_multiple_of(p) {
        return Err(AlgebraError::Divides { p, n });
    }
    Ok(if p == 2 {
        n
    } else if n.is_odd() {
        2 * n
    } else if n % 4 == 2 {
        n / 2
    } else {
        n
    })
}

/// `f_n(x) = (x^n - 1)/(x - 1)` as an integer polynomial, any integer `n`.
pub fn f_poly(n: i64) -> IntPoly {
    IntPoly::geometric(n)
}
