//! The generalized Carinena oscillator family: rational extensions of
//! the harmonic well indexed by a seed integer p, with closed-form
//! spectra and eigenfunctions.
//!
//! Even seeds give a potential regular on the whole line whose spectrum
//! is the equidistant harmonic ladder with the p indices 1..p missing;
//! odd seeds add a repulsive 1/x^2 barrier at the origin, restrict the
//! problem to the half line, and keep every other level.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{factorial_ratio, rat, Polynomial, RationalFunction};
use crate::hermite::{hermite, pseudo_hermite};
use crate::susy::QuasiGaussian;

/// Where a model's bound states live.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// Even seed: the potential is regular everywhere.
    WholeLine,
    /// Odd seed: a 1/x^2 barrier at the origin restricts states to
    /// (0, inf) with a Dirichlet condition at 0.
    HalfLine,
}

/// A member of the family: the potential x^2 + 2(H_p'^2 - H_p H_p'')/H_p^2
/// together with its seed index and natural domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarinenaModel {
    p: u32,
    potential: RationalFunction,
    domain: Domain,
}

/// One row of a spectrum table. Energies are exact; the squared
/// normalization constant is the rational coefficient of 1/sqrt(pi)
/// where a closed form exists (whole-line models), `None` on the half
/// line where it is obtained numerically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumLevel {
    pub n: u32,
    pub energy: BigRational,
    pub norm_sq_coeff: Option<BigRational>,
    pub admissible: bool,
}

/// A closed-form bound state: the Hermite-combination numerator and the
/// unnormalized quasi-Gaussian wave with profile numerator/seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eigenfunction {
    pub level: SpectrumLevel,
    pub numerator: Polynomial,
    pub wave: QuasiGaussian,
}

impl CarinenaModel {
    /// Build the model for seed index p >= 1.
    pub fn new(p: u32) -> Self {
        let hp = pseudo_hermite(p as usize);
        let dh = hp.derivative();
        let num = &(&dh * &dh) - &(&hp * &hp.derivative().derivative());
        let correction = RationalFunction::new(num.scale(&rat(2)), &hp * &hp)
            .expect("seed polynomial is nonzero");
        debug_assert_eq!(
            correction.numerator().degree(),
            Some(2 * p as usize - 2),
            "correction numerator degree"
        );
        debug_assert_eq!(
            correction.denominator().degree(),
            Some(2 * p as usize),
            "correction denominator degree"
        );
        let potential = &RationalFunction::from_poly(Polynomial::from_i64(&[0, 0, 1])) + &correction;
        let domain = if p.is_multiple_of(2) {
            Domain::WholeLine
        } else {
            Domain::HalfLine
        };
        CarinenaModel { p, potential, domain }
    }

    pub fn seed_index(&self) -> u32 {
        self.p
    }

    pub fn potential(&self) -> &RationalFunction {
        &self.potential
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// x^2 (V(x) - x^2), which tends to 2p as x grows; exposed for the
    /// large-x asymptotics check.
    pub fn asymptotic_check(&self, x: &BigRational) -> Result<BigRational> {
        let v = self.potential.eval(x)?;
        Ok((v - x * x) * x * x)
    }

    /// Energy of level n: 2n - 2p + 1, exact.
    pub fn energy(&self, n: u32) -> BigRational {
        rat(2 * n as i64 - 2 * self.p as i64 + 1)
    }

    /// The admissibility rule: whole-line seeds keep n = 0 and every
    /// n >= p+1; half-line seeds keep odd n >= p+2 only.
    pub fn is_admissible(&self, n: u32) -> bool {
        match self.domain {
            Domain::WholeLine => n == 0 || n > self.p,
            Domain::HalfLine => n % 2 == 1 && n >= self.p + 2,
        }
    }

    /// All levels up to and including n_max, each carrying its
    /// admissibility flag and, where closed-form, its normalization.
    pub fn spectrum(&self, n_max: u32) -> Vec<SpectrumLevel> {
        (0..=n_max).map(|n| self.level(n)).collect()
    }

    fn level(&self, n: u32) -> SpectrumLevel {
        let admissible = self.is_admissible(n);
        debug_assert_eq!(
            admissible,
            self.regular_at_origin(n),
            "parity rule vs regularity scan at p={} n={n}",
            self.p
        );
        let norm_sq_coeff = if admissible {
            self.norm_squared(n).ok()
        } else {
            None
        };
        SpectrumLevel {
            n,
            energy: self.energy(n),
            norm_sq_coeff,
            admissible,
        }
    }

    /// Direct regularity check backing the parity rule: a level is kept
    /// exactly when its reduced profile has no pole at the origin (the
    /// only real zero the seed polynomial can have).
    fn regular_at_origin(&self, n: u32) -> bool {
        if n >= 1 && n <= self.p {
            return false; // no closed-form state exists at all
        }
        let numerator = self.pn_unchecked(n);
        let hp = pseudo_hermite(self.p as usize);
        numerator.order_at_origin() >= hp.order_at_origin()
    }

    /// The Hermite-combination numerator P_n. Defined for n = 0 (P_0 = 1)
    /// and for every n >= p+1; the indices 1..p carry no state.
    pub fn pn_polynomial(&self, n: u32) -> Result<Polynomial> {
        if n >= 1 && n <= self.p {
            return Err(Error::InadmissibleIndex { p: self.p, n });
        }
        Ok(self.pn_unchecked(n))
    }

    fn pn_unchecked(&self, n: u32) -> Polynomial {
        if n == 0 {
            return Polynomial::one();
        }
        let p = self.p as i64;
        let n = n as i64;
        let mut acc = Polynomial::zero();
        for i in 0..=p {
            let index = n - 2 * i;
            let ratio = factorial_ratio(n - i - 1, index);
            if ratio.is_zero() {
                continue;
            }
            let coeff = rat(2).pow(i as i32)
                * BigRational::from_integer(crate::exactalg::binomial(p as u64, i as u64))
                * rat(n)
                * ratio;
            acc = &acc + &hermite(index as usize).scale(&coeff);
        }
        acc
    }

    /// Squared normalization constant as the exact coefficient c in
    /// N^2 = c / sqrt(pi), for the unnormalized state with profile
    /// P_n / H_p. Closed forms exist only on the whole line; half-line
    /// levels must be normalized by quadrature.
    pub fn norm_squared(&self, n: u32) -> Result<BigRational> {
        if !self.is_admissible(n) {
            return Err(Error::InadmissibleIndex { p: self.p, n });
        }
        if self.domain == Domain::HalfLine {
            return Err(Error::NoClosedFormNorm { p: self.p });
        }
        if n == 0 {
            // 1/I_p with I_p the Gaussian integral against 1/H_p^2:
            // c = 2^p p! for even seed p = 2m
            let mut c = BigRational::one();
            for k in 1..=self.p as i64 {
                c = c * rat(2) * rat(k);
            }
            return Ok(c);
        }
        // prod_{j=1..p} (n-j) / (2^{n-p} n!)
        let p = self.p as i64;
        let n = n as i64;
        let mut num = BigRational::one();
        for j in 1..=p {
            num *= rat(n - j);
        }
        let den = rat(2).pow((n - p) as i32) * crate::exactalg::factorial_ratio(n, 0);
        Ok(num / den)
    }

    /// The closed-form bound state at an admissible index, unnormalized.
    pub fn eigenfunction(&self, n: u32) -> Result<Eigenfunction> {
        if !self.is_admissible(n) {
            return Err(Error::InadmissibleIndex { p: self.p, n });
        }
        let numerator = self.pn_unchecked(n);
        let profile = RationalFunction::new(numerator.clone(), pseudo_hermite(self.p as usize))
            .expect("seed polynomial is nonzero");
        Ok(Eigenfunction {
            level: self.level(n),
            numerator,
            wave: QuasiGaussian::new(profile),
        })
    }
}

/// Internal cross-check used by tests: P_n reproduced through the
/// ladder-sum expansion of index (p, n-p-1).
#[cfg(test)]
pub(crate) fn pn_via_ladder_expansion(p: u32, n: u32) -> Polynomial {
    assert!(n > p);
    let terms = crate::hermite::susy_sum_expansion(p as usize, (n - p - 1) as usize);
    crate::hermite::expansion_to_polynomial(&terms)
}
