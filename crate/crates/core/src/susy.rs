//! Factorization machinery: superpotentials built from the
//! pseudo-Hermite seed solutions, the first-order ladder operators
//! acting on quasi-Gaussian functions, and partner potential pairs.
//!
//! Every operator acts on the rational profile only; the Gaussian
//! factor is differentiated algebraically, so the whole layer stays in
//! exact arithmetic.

use num_rational::BigRational;

use crate::exactalg::{rat, Polynomial, RationalFunction};
use crate::hermite::pseudo_hermite;

/// A rational profile times the fixed factor e^{-x^2/2}. Closed under
/// differentiation and under both ladder operators, so all bound states
/// and operator images in this crate live here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiGaussian {
    profile: RationalFunction,
}

impl QuasiGaussian {
    pub fn new(profile: RationalFunction) -> Self {
        QuasiGaussian { profile }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        QuasiGaussian::new(RationalFunction::from_poly(p))
    }

    pub fn profile(&self) -> &RationalFunction {
        &self.profile
    }

    pub fn is_zero(&self) -> bool {
        self.profile.is_zero()
    }

    /// d/dx of R e^{-x^2/2} has profile R' - x R.
    pub fn derivative(&self) -> QuasiGaussian {
        let x = RationalFunction::x();
        QuasiGaussian::new(&self.profile.derivative() - &(&x * &self.profile))
    }

    pub fn scale(&self, s: &BigRational) -> QuasiGaussian {
        QuasiGaussian::new(self.profile.scale(s))
    }

    /// Value at a double-precision point, Gaussian factor included.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.profile.eval_f64(x) * (-0.5 * x * x).exp()
    }
}

impl std::ops::Sub for &QuasiGaussian {
    type Output = QuasiGaussian;
    fn sub(self, rhs: &QuasiGaussian) -> QuasiGaussian {
        QuasiGaussian::new(&self.profile - &rhs.profile)
    }
}

impl std::ops::Add for &QuasiGaussian {
    type Output = QuasiGaussian;
    fn add(self, rhs: &QuasiGaussian) -> QuasiGaussian {
        QuasiGaussian::new(&self.profile + &rhs.profile)
    }
}

/// -psi'' + V psi on the quasi-Gaussian representation, all exact.
pub fn hamiltonian_apply(potential: &RationalFunction, psi: &QuasiGaussian) -> QuasiGaussian {
    let second = psi.derivative().derivative();
    QuasiGaussian::new(&(potential * psi.profile()) - &second.profile)
}

/// The function W in the first-order factors d/dx + W and -d/dx + W,
/// derived from the seed index p as the logarithmic derivative of the
/// non-normalizable solution `pseudo_hermite(p) e^{x^2/2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Superpotential {
    p: u32,
    w: RationalFunction,
}

/// The pair of potentials W^2 -/+ W' sharing a spectrum up to one level.
/// `shift` is the constant 2p+1 by which the upper partner sits above
/// the bare harmonic well.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartnerPair {
    pub v1: RationalFunction,
    pub v2: RationalFunction,
    pub shift: BigRational,
}

impl Superpotential {
    /// W = x + H_p'/H_p for the pseudo-Hermite seed of index p, reduced.
    pub fn new(p: u32) -> Self {
        let hp = pseudo_hermite(p as usize);
        let num = &(&Polynomial::x() * &hp) + &hp.derivative();
        let w = RationalFunction::new(num, hp).expect("pseudo-Hermite seed is nonzero");
        Superpotential { p, w }
    }

    pub fn seed_index(&self) -> u32 {
        self.p
    }

    pub fn as_rational(&self) -> &RationalFunction {
        &self.w
    }

    /// Apply d/dx + W. The image profile is R' - x R + W R.
    pub fn apply_a(&self, psi: &QuasiGaussian) -> QuasiGaussian {
        let image = &psi.derivative().profile + &(&self.w * psi.profile());
        QuasiGaussian::new(image)
    }

    /// Apply -d/dx + W. The image profile is -R' + x R + W R.
    pub fn apply_a_dagger(&self, psi: &QuasiGaussian) -> QuasiGaussian {
        let image = &(&self.w * psi.profile()) - &psi.derivative().profile;
        QuasiGaussian::new(image)
    }

    /// Both partner potentials W^2 -/+ W', exactly. The upper partner
    /// must collapse to the shifted harmonic well x^2 + 2p + 1; this is
    /// asserted because it is the defining property of the seed family.
    pub fn partner_potentials(&self) -> PartnerPair {
        let w2 = &self.w * &self.w;
        let dw = self.w.derivative();
        let v1 = &w2 - &dw;
        let v2 = &w2 + &dw;
        let shift = rat(2 * self.p as i64 + 1);
        let expected = RationalFunction::from_poly(&Polynomial::from_i64(&[0, 0, 1]) + &Polynomial::constant(shift.clone()));
        assert_eq!(v2, expected, "upper partner of seed {} is not the shifted harmonic well", self.p);
        PartnerPair { v1, v2, shift }
    }

    /// W' + W^2 - x^2 + (2p+1); identically zero exactly when W solves
    /// the Riccati equation that makes the seed a harmonic solution.
    pub fn riccati_residual(&self) -> RationalFunction {
        let w2 = &self.w * &self.w;
        let dw = self.w.derivative();
        let level = RationalFunction::constant(rat(2 * self.p as i64 + 1));
        let x2 = RationalFunction::from_poly(Polynomial::from_i64(&[0, 0, 1]));
        &(&(&dw + &w2) - &x2) - &level
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ratio;
    use crate::hermite::hermite;

    fn ratfunc(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_i64(num), Polynomial::from_i64(den)).unwrap()
    }

    #[test]
    fn superpotential_p0_is_x() {
        let w = Superpotential::new(0);
        assert_eq!(w.as_rational(), &RationalFunction::x());
    }

    #[test]
    fn superpotential_p2_matches_closed_form() {
        // x + 4x/(2x^2+1) = (2x^3 + 5x)/(x^2 + 1/2) in canonical form
        let w = Superpotential::new(2);
        let expect = &RationalFunction::x() + &ratfunc(&[0, 4], &[1, 0, 2]);
        assert_eq!(w.as_rational(), &expect);
    }

    #[test]
    fn superpotential_p3_matches_closed_form() {
        // x + 1/x + 4x/(2x^2+3)
        let w = Superpotential::new(3);
        let expect = &(&RationalFunction::x() + &ratfunc(&[1], &[0, 1])) + &ratfunc(&[0, 4], &[3, 0, 2]);
        assert_eq!(w.as_rational(), &expect);
    }

    #[test]
    fn superpotential_shape() {
        for p in 0..=10u32 {
            let w = Superpotential::new(p);
            // W - x is a proper fraction with denominator the seed polynomial
            let tail = w.as_rational() - &RationalFunction::x();
            if p == 0 {
                assert!(tail.is_zero());
                continue;
            }
            assert!(tail.numerator().degree() < tail.denominator().degree());
            let seed = pseudo_hermite(p as usize);
            let monic = seed.scale(&seed.leading_coeff().unwrap().recip());
            assert_eq!(tail.denominator(), &monic);
            assert_eq!(w.as_rational().denominator(), &monic);
        }
    }

    #[test]
    fn partner_potentials_p0() {
        let pair = Superpotential::new(0).partner_potentials();
        assert_eq!(pair.v1, RationalFunction::from_poly(Polynomial::from_i64(&[-1, 0, 1])));
        assert_eq!(pair.v2, RationalFunction::from_poly(Polynomial::from_i64(&[1, 0, 1])));
    }

    #[test]
    fn partner_potentials_p2() {
        // V1 = x^2 + 8(2x^2-1)/(2x^2+1)^2 + 3
        let pair = Superpotential::new(2).partner_potentials();
        let den = ratfunc(&[1, 0, 2], &[1]);
        let correction = &ratfunc(&[-8, 0, 16], &[1]) * &(&den * &den).recip().unwrap();
        let expect = &RationalFunction::from_poly(Polynomial::from_i64(&[3, 0, 1])) + &correction;
        assert_eq!(pair.v1, expect);
        assert_eq!(
            pair.v2,
            RationalFunction::from_poly(Polynomial::from_i64(&[5, 0, 1]))
        );
        assert_eq!(pair.shift, rat(5));
    }

    #[test]
    fn partner_potentials_p4() {
        // V1 = x^2 + 16(8x^6+12x^4+18x^2-9)/(4x^4+12x^2+3)^2 + 7
        let pair = Superpotential::new(4).partner_potentials();
        let q = Polynomial::from_i64(&[3, 0, 12, 0, 4]);
        let num = Polynomial::from_i64(&[-144, 0, 288, 0, 192, 0, 128]); // 16*(…)
        let correction = RationalFunction::new(num, &q * &q).unwrap();
        let expect = &RationalFunction::from_poly(Polynomial::from_i64(&[7, 0, 1])) + &correction;
        assert_eq!(pair.v1, expect);
        assert_eq!(pair.shift, rat(9));
    }

    #[test]
    fn apply_a_annihilates_ground_states() {
        // p = 0: A e^{-x^2/2} = 0
        let w0 = Superpotential::new(0);
        assert!(w0.apply_a(&QuasiGaussian::from_poly(Polynomial::one())).is_zero());

        // p = 2: the profile 1/(2x^2+1) is annihilated
        let w2 = Superpotential::new(2);
        let ground = QuasiGaussian::new(ratfunc(&[1], &[1, 0, 2]));
        assert!(w2.apply_a(&ground).is_zero());
    }

    #[test]
    fn apply_a_dagger_raises_harmonic_states() {
        // p = 0: ordinary raising operator sends H_0 to H_1
        let w0 = Superpotential::new(0);
        let raised = w0.apply_a_dagger(&QuasiGaussian::from_poly(Polynomial::one()));
        assert_eq!(raised.profile(), &RationalFunction::from_poly(hermite(1)));

        // p = 2 applied to H_0: profile (8x^3+12x)/(4x^2+2)
        let w2 = Superpotential::new(2);
        let image = w2.apply_a_dagger(&QuasiGaussian::from_poly(hermite(0)));
        let expect = ratfunc(&[0, 12, 0, 8], &[2, 0, 4]);
        assert_eq!(image.profile(), &expect);

        // p = 2 applied to H_2: profile (H_5 + 20 H_3 + 40 H_1)/(4x^2+2)
        let image = w2.apply_a_dagger(&QuasiGaussian::from_poly(hermite(2)));
        let num = &(&hermite(5) + &hermite(3).scale(&rat(20))) + &hermite(1).scale(&rat(40));
        let expect = RationalFunction::new(num, pseudo_hermite(2)).unwrap();
        assert_eq!(image.profile(), &expect);
    }

    #[test]
    fn a_of_carinena_level_three_hits_shifted_ground_state() {
        // A maps the p = 2 level n = 3 state down to a constant profile with
        // eigenvalue factor 6
        let w2 = Superpotential::new(2);
        let psi = QuasiGaussian::new(ratfunc(&[0, 12, 0, 8], &[2, 0, 4]));
        let image = w2.apply_a(&psi);
        assert_eq!(
            image.profile(),
            &RationalFunction::constant(rat(6)),
            "A (A† H_0) must equal E H_0 with E = 6"
        );
    }

    #[test]
    fn riccati_residual_vanishes() {
        for p in 0..=10u32 {
            assert!(Superpotential::new(p).riccati_residual().is_zero(), "p = {p}");
        }
    }

    #[test]
    fn riccati_spot_check_at_one() {
        // w' + w^2 at x = 1 equals 1 + 2p + 1 for p = 2
        let w = Superpotential::new(2);
        let val = w.as_rational().derivative().eval(&rat(1)).unwrap()
            + w.as_rational().eval(&rat(1)).unwrap() * w.as_rational().eval(&rat(1)).unwrap();
        assert_eq!(val, rat(6));
    }

    #[test]
    fn quasi_gaussian_derivative_and_eval() {
        // d/dx e^{-x^2/2} = -x e^{-x^2/2}
        let g = QuasiGaussian::from_poly(Polynomial::one());
        assert_eq!(
            g.derivative().profile(),
            &RationalFunction::from_poly(Polynomial::from_i64(&[0, -1]))
        );
        let v = g.eval_f64(0.5);
        assert!((v - (-0.125f64).exp()).abs() < 1e-15);
        let half = QuasiGaussian::new(RationalFunction::constant(ratio(1, 2)));
        assert!((half.eval_f64(0.0) - 0.5).abs() < 1e-15);
    }
}
