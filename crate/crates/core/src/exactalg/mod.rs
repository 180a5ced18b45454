//! Exact arithmetic kernel: arbitrary-precision rationals, dense
//! univariate polynomials over them, and reduced rational functions.
//!
//! All coefficient arithmetic in this crate goes through these types;
//! nothing in here touches floating point except the explicit `*_f64`
//! evaluation helpers.

mod gcd;
mod poly;
mod ratfunc;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;

use num_traits::{One, Signed, Zero};

/// `n` as an exact rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n/d` as an exact rational.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// The factorial ratio `a!/b!` extended by the reciprocal-gamma
/// convention: zero whenever `b` is a negative integer. Requires
/// `a >= 0`.
pub fn factorial_ratio(a: i64, b: i64) -> BigRational {
    assert!(a >= 0, "factorial_ratio requires a >= 0, got a = {a}");
    if b < 0 {
        return BigRational::zero();
    }
    if a >= b {
        let mut acc = BigInt::one();
        for k in (b + 1)..=a {
            acc *= k;
        }
        BigRational::from_integer(acc)
    } else {
        let mut acc = BigInt::one();
        for k in (a + 1)..=b {
            acc *= k;
        }
        BigRational::new(BigInt::one(), acc)
    }
}

/// Render a rational as an explicit `num/den` string, denominator always
/// present and positive.
pub fn rational_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Round an exact rational to the nearest double.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    // Scale into i128 range by binary shifts; exact for desk-scale values.
    let mut numer = q.numer().clone();
    let mut denom = q.denom().clone();
    let mut exp2 = 0i32;
    let limit = BigInt::from(i128::MAX / 4);
    while numer.abs() > limit || denom > limit {
        if numer.abs() > limit {
            numer >>= 1;
            exp2 += 1;
        }
        if denom > limit {
            denom >>= 1;
            exp2 -= 1;
        }
    }
    let n = i128::try_from(numer).expect("shifted numerator fits i128") as f64;
    let d = i128::try_from(denom).expect("shifted denominator fits i128") as f64;
    (n / d) * 2f64.powi(exp2)
}
