use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::Polynomial;
use crate::error::{Error, Result};

/// Reduced quotient of two polynomials in canonical form: numerator and
/// denominator coprime, denominator monic, zero represented as 0/1.
/// Equality is therefore plain coefficient comparison.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() > Some(0) {
            let (nq, nr) = num.div_rem(&g);
            let (dq, dr) = den.div_rem(&g);
            debug_assert!(nr.is_zero() && dr.is_zero());
            (nq, dq)
        } else {
            (num, den)
        };
        // absorb the denominator's leading coefficient into the numerator
        let lead = den.leading_coeff().unwrap().clone();
        Ok(RationalFunction {
            num: num.scale(&lead.recip()),
            den: den.scale(&lead.recip()),
        })
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        RationalFunction::from_poly(Polynomial::constant(c))
    }

    /// The monomial x as a rational function.
    pub fn x() -> Self {
        RationalFunction::from_poly(Polynomial::x())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Some(p) when the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        if self.den.degree() == Some(0) && self.den.leading_coeff().unwrap().is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole { x: x.clone() });
        }
        Ok(self.num.eval(x) / d)
    }

    /// Double-precision evaluation, numerator and denominator by Horner
    /// separately. Both sides fall back to exact arithmetic when
    /// cancellation is detected near a real root.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    /// Quotient-rule derivative, reduced.
    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let d = &self.den * &self.den;
        RationalFunction::new(n, d).expect("denominator square is nonzero")
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction {
            num: self.num.scale(s),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("product of nonzero denominators is nonzero")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &self.num * &rhs.num;
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("product of nonzero denominators is nonzero")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.as_polynomial() {
            write!(f, "{p}")
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
