//! Polynomial GCD through the fraction-free subresultant remainder
//! sequence. Rational inputs are cleared to primitive integer
//! polynomials first, so no intermediate coefficient is ever a fraction
//! and the coefficient growth stays polynomially bounded.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::Polynomial;

/// Monic GCD over the rationals. `gcd(0, 0) = 0`; otherwise the result
/// is the unique monic generator of the ideal (a, b).
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return make_monic(b);
    }
    if b.is_zero() {
        return make_monic(a);
    }
    let ai = to_primitive_integer(a);
    let bi = to_primitive_integer(b);
    let g = subresultant_gcd(ai, bi);
    let rational = Polynomial::new(g.into_iter().map(BigRational::from_integer).collect());
    make_monic(&rational)
}

fn make_monic(p: &Polynomial) -> Polynomial {
    match p.leading_coeff() {
        None => Polynomial::zero(),
        Some(lead) => p.scale(&lead.recip()),
    }
}

/// Clear denominators and divide out the integer content; the sign of
/// the leading coefficient is irrelevant to GCD use.
fn to_primitive_integer(p: &Polynomial) -> Vec<BigInt> {
    let mut denom_lcm = BigInt::one();
    for c in p.coeffs() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    primitive_part(ints)
}

fn primitive_part(coeffs: Vec<BigInt>) -> Vec<BigInt> {
    let mut content = BigInt::zero();
    for c in &coeffs {
        content = content.gcd(c);
        if content.is_one() {
            return coeffs;
        }
    }
    if content.is_zero() {
        return coeffs;
    }
    coeffs.into_iter().map(|c| c / &content).collect()
}

fn degree(p: &[BigInt]) -> usize {
    p.len() - 1
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Pseudo-remainder: the remainder of `lc(b)^(deg a - deg b + 1) * a`
/// divided by `b`, computed without fractions. The full power of the
/// leading coefficient is applied even when intermediate leading terms
/// cancel early, so the subresultant divisions stay exact.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = degree(b);
    let lb = b[db].clone();
    let mut rem = a.to_vec();
    let mut deficit = degree(a) + 1 - db;
    while rem.len() > db {
        let shift = rem.len() - 1 - db;
        let lead = rem.last().unwrap().clone();
        for c in rem.iter_mut() {
            *c *= &lb;
        }
        for j in 0..=db {
            rem[shift + j] -= &lead * &b[j];
        }
        rem = trim(rem);
        deficit -= 1;
        if rem.is_empty() {
            return rem;
        }
    }
    let scale = pow(&lb, deficit);
    rem.into_iter().map(|c| c * &scale).collect()
}

fn exact_div(n: BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_rem(d);
    debug_assert!(r.is_zero(), "subresultant division must be exact");
    q
}

fn subresultant_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    if degree(&a) < degree(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = degree(&a) - degree(&b);
        let rem = pseudo_rem(&a, &b);
        if rem.is_empty() {
            return primitive_part(b);
        }
        if degree(&rem) == 0 {
            return vec![BigInt::one()];
        }
        let divisor = &g * pow(&h, delta);
        let reduced: Vec<BigInt> = rem.into_iter().map(|c| exact_div(c, &divisor)).collect();
        a = b;
        b = reduced;
        g = a[degree(&a)].clone();
        h = if delta == 0 {
            h
        } else {
            // h <- g^delta / h^(delta-1), exact
            exact_div(pow(&g, delta), &pow(&h, delta - 1))
        };
    }
}

fn pow(base: &BigInt, exp: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ratio;

    #[test]
    fn gcd_of_common_factor() {
        // (x^2 - 1, x^2 + 2x + 1) share (x + 1)
        let a = Polynomial::from_i64(&[-1, 0, 1]);
        let b = Polynomial::from_i64(&[1, 2, 1]);
        assert_eq!(poly_gcd(&a, &b), Polynomial::from_i64(&[1, 1]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        let a = Polynomial::from_i64(&[1, 0, 2]); // 2x^2 + 1
        let b = Polynomial::from_i64(&[3, 0, 2]); // 2x^2 + 3
        assert_eq!(poly_gcd(&a, &b), Polynomial::one());
    }

    #[test]
    fn gcd_with_zero_and_rational_coeffs() {
        let a = Polynomial::new(vec![ratio(1, 2), ratio(0, 1), ratio(3, 4)]);
        assert_eq!(poly_gcd(&a, &Polynomial::zero()), {
            // monic version of a
            let lead = a.leading_coeff().unwrap().clone();
            a.scale(&lead.recip())
        });
        assert!(poly_gcd(&Polynomial::zero(), &Polynomial::zero()).is_zero());
    }

    #[test]
    fn gcd_high_multiplicity() {
        // (x-2)^3 (x+1) vs (x-2)^2 (x-5)
        let x_m2 = Polynomial::from_i64(&[-2, 1]);
        let left = &(&(&x_m2 * &x_m2) * &x_m2) * &Polynomial::from_i64(&[1, 1]);
        let right = &(&x_m2 * &x_m2) * &Polynomial::from_i64(&[-5, 1]);
        let expect = &x_m2 * &x_m2;
        assert_eq!(poly_gcd(&left, &right), expect);
    }
}
