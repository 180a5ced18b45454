use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd;

/// Dense univariate polynomial over exact rationals, coefficients stored
/// lowest power first. The zero polynomial is the empty coefficient
/// vector; nonzero polynomials never carry trailing zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::from_integer(BigInt::from(1)))
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Polynomial::new(vec![
            BigRational::zero(),
            BigRational::from_integer(BigInt::from(1)),
        ])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` is the minus-infinity sentinel for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation in doubles. Falls back to exact evaluation when
    /// the double result is dominated by cancellation, which only happens
    /// near a real root of the polynomial.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0f64;
        let mut mag = 0.0f64;
        for c in self.coeffs.iter().rev() {
            let cf = super::rational_to_f64(c);
            acc = acc * x + cf;
            mag = mag * x.abs() + cf.abs();
        }
        if acc.abs() < 1e-9 * mag && mag > 0.0 {
            let xr = BigRational::from_float(x).expect("finite grid point");
            return super::rational_to_f64(&self.eval(&xr));
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn scale(&self, s: &BigRational) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Quotient and remainder of exact division; the divisor must be nonzero.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let d_deg = divisor.degree().expect("division by zero polynomial");
        let d_lead = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return (Polynomial::zero(), self.clone());
        }
        let q_len = rem.len() - d_deg;
        let mut quot = vec![BigRational::zero(); q_len];
        for qi in (0..q_len).rev() {
            let factor = &rem[qi + d_deg] / &d_lead;
            if factor.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let t = &factor * dc;
                rem[qi + j] -= t;
            }
            quot[qi] = factor;
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Monic greatest common divisor, computed by the fraction-free
    /// subresultant remainder sequence over the integers.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        gcd::poly_gcd(self, other)
    }

    /// True when the exponent support matches the parity of `parity_of`
    /// (even exponents for even `parity_of`, odd for odd).
    pub fn has_parity_of(&self, parity_of: usize) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| c.is_zero() || k % 2 == parity_of % 2)
    }

    pub fn abs_coeffs(&self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(Signed::abs).collect())
    }

    /// Largest power of x dividing the polynomial (zero for the zero
    /// polynomial by convention).
    pub fn order_at_origin(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Polynomial::new(out)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        Polynomial::new(out)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let show_coeff = k == 0 || !a.is_one();
            if show_coeff {
                if a.denom().is_one() {
                    write!(f, "{}", a.numer())?;
                } else {
                    write!(f, "{}/{}", a.numer(), a.denom())?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn mul_matches_hand_expansion() {
        // (2x)(2x) = 4x^2
        let h1 = Polynomial::from_i64(&[0, 2]);
        assert_eq!(&h1 * &h1, Polynomial::from_i64(&[0, 0, 4]));
        // (2x)(4x^2 - 2) = 8x^3 - 4x
        let h2 = Polynomial::from_i64(&[-2, 0, 4]);
        assert_eq!(&h1 * &h2, Polynomial::from_i64(&[0, -4, 0, 8]));
    }

    #[test]
    fn mul_by_zero_annihilates() {
        let a = Polynomial::from_i64(&[3, 1, 4]);
        assert!((&a * &Polynomial::zero()).is_zero());
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(
            Polynomial::from_i64(&[2, 0, 4]).derivative(),
            Polynomial::from_i64(&[0, 8])
        );
        assert_eq!(
            Polynomial::from_i64(&[0, 12, 0, 8]).derivative(),
            Polynomial::from_i64(&[12, 0, 24])
        );
        assert!(Polynomial::from_i64(&[7]).derivative().is_zero());
    }

    #[test]
    fn zero_degree_sentinel() {
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(Polynomial::from_i64(&[5]).degree(), Some(0));
        assert_eq!(Polynomial::from_i64(&[0, 0, 1]).degree(), Some(2));
        // construction trims trailing zeros down to the empty representation
        assert_eq!(Polynomial::from_i64(&[0, 0]).degree(), None);
    }

    #[test]
    fn div_rem_exact_and_with_remainder() {
        let num = Polynomial::from_i64(&[-1, 0, 1]); // x^2 - 1
        let den = Polynomial::from_i64(&[1, 1]); // x + 1
        let (q, r) = num.div_rem(&den);
        assert_eq!(q, Polynomial::from_i64(&[-1, 1]));
        assert!(r.is_zero());

        let (q2, r2) = den.div_rem(&num);
        assert!(q2.is_zero());
        assert_eq!(r2, den);
    }

    #[test]
    fn eval_exact() {
        let p = Polynomial::from_i64(&[-2, 0, 4]); // 4x^2 - 2
        assert_eq!(p.eval(&rat(0)), rat(-2));
        assert_eq!(p.eval(&rat(3)), rat(34));
    }

    #[test]
    fn eval_f64_near_root_falls_back_to_exact() {
        // (x - 1)^8 expanded: brutal cancellation near x = 1
        let mut p = Polynomial::one();
        let lin = Polynomial::from_i64(&[-1, 1]);
        for _ in 0..8 {
            p = &p * &lin;
        }
        let x = 1.0 + 2f64.powi(-20);
        let exact = (2f64.powi(-20)).powi(8);
        let got = p.eval_f64(x);
        assert!((got - exact).abs() <= 1e-12 * exact.abs());
    }

    #[test]
    fn parity_and_origin_order() {
        let odd = Polynomial::from_i64(&[0, 12, 0, 8]);
        assert!(odd.has_parity_of(3));
        assert!(!odd.has_parity_of(2));
        assert_eq!(odd.order_at_origin(), 1);
        assert_eq!(Polynomial::from_i64(&[0, 0, 0, 8]).order_at_origin(), 3);
    }

    #[test]
    fn display_readable() {
        let p = Polynomial::from_i64(&[12, 0, -48, 0, 16]);
        assert_eq!(format!("{p}"), "16x^4 - 48x^2 + 12");
    }
}
