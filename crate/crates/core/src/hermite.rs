//! Hermite polynomials H_k, their positive-coefficient counterparts
//! ("pseudo-Hermite" polynomials, the image of H_p under x -> ix with
//! phases stripped), and the exact expansion identities that rewrite
//! products of the two families back into the Hermite basis.
//!
//! Both sequences are built by three-term recurrences and memoized in a
//! global append-only cache; the Rodrigues constructions live in the
//! test suite as independent oracles.

use std::sync::Mutex;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactalg::{binomial, factorial, factorial_ratio, rat, Polynomial};

/// Which of the two polynomial families an operation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HermiteKind {
    /// H_k: Rodrigues form (-1)^k e^{x^2} d^k/dx^k e^{-x^2}.
    Standard,
    /// The positive-coefficient family e^{-x^2} d^p/dx^p e^{x^2}.
    Pseudo,
}

/// One term of a Hermite-basis expansion: `coeff * H_{hermite_index}`,
/// produced by summation index `i`. Terms whose Hermite index would be
/// negative carry a vanishing coefficient and are omitted, so a term
/// list is a canonical sparse form and comparable directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionTerm {
    pub i: usize,
    pub coeff: BigRational,
    pub hermite_index: usize,
}

static STANDARD_CACHE: Mutex<Vec<Polynomial>> = Mutex::new(Vec::new());
static PSEUDO_CACHE: Mutex<Vec<Polynomial>> = Mutex::new(Vec::new());

fn cached(cache: &Mutex<Vec<Polynomial>>, k: usize, kind: HermiteKind) -> Polynomial {
    let mut seq = cache.lock().expect("polynomial cache lock");
    if seq.is_empty() {
        seq.push(Polynomial::one());
        let first = Polynomial::from_i64(&[0, 2]);
        seq.push(first);
    }
    while seq.len() <= k {
        let m = seq.len() - 1; // recurrence index
        let prev = &seq[m];
        let prev2 = &seq[m - 1];
        let two_x = Polynomial::from_i64(&[0, 2]);
        let tail = prev2.scale(&rat(2 * m as i64));
        let next = match kind {
            // H_{m+1} = 2x H_m - 2m H_{m-1}
            HermiteKind::Standard => &(&two_x * prev) - &tail,
            // pseudo: sign of the trailing term flips
            HermiteKind::Pseudo => &(&two_x * prev) + &tail,
        };
        seq.push(next);
    }
    seq[k].clone()
}

/// Hermite polynomial H_k, exact.
pub fn hermite(k: usize) -> Polynomial {
    cached(&STANDARD_CACHE, k, HermiteKind::Standard)
}

/// Pseudo-Hermite polynomial of index p: all coefficients nonnegative,
/// parity equal to the parity of p.
pub fn pseudo_hermite(p: usize) -> Polynomial {
    cached(&PSEUDO_CACHE, p, HermiteKind::Pseudo)
}

/// Value of the even pseudo-Hermite polynomial at the origin: (2m)!/m!.
pub fn pseudo_hermite_at_zero(m: usize) -> BigRational {
    let num = factorial(2 * m as u64);
    let den = factorial(m as u64);
    BigRational::new(num, den)
}

/// Expansion of `pseudo_hermite(p) * hermite(k)` in the Hermite basis:
/// the i-th term is `2^i C(p,i) (k+p-i)!/(k+p-2i)! H_{k+p-2i}`.
pub fn product_expansion(p: usize, k: usize) -> Vec<ExpansionTerm> {
    let mut terms = Vec::with_capacity(p + 1);
    for i in 0..=p {
        let index = k as i64 + p as i64 - 2 * i as i64;
        let ratio = factorial_ratio(k as i64 + p as i64 - i as i64, index);
        if ratio.is_zero() {
            continue;
        }
        let coeff = pow2(i) * BigRational::from_integer(binomial(p as u64, i as u64)) * ratio;
        terms.push(ExpansionTerm {
            i,
            coeff,
            hermite_index: index as usize,
        });
    }
    terms
}

/// Expansion of `pseudo_hermite(p) * hermite(k+1) + pseudo_hermite'(p) * hermite(k)`
/// in the Hermite basis: the i-th term is
/// `2^i C(p,i) (k+p+1) (k+p-i)!/(k+p+1-2i)! H_{k+p+1-2i}`.
pub fn susy_sum_expansion(p: usize, k: usize) -> Vec<ExpansionTerm> {
    let mut terms = Vec::with_capacity(p + 1);
    let level = rat(k as i64 + p as i64 + 1);
    for i in 0..=p {
        let index = k as i64 + p as i64 + 1 - 2 * i as i64;
        let ratio = factorial_ratio(k as i64 + p as i64 - i as i64, index);
        if ratio.is_zero() {
            continue;
        }
        let coeff =
            pow2(i) * BigRational::from_integer(binomial(p as u64, i as u64)) * &level * ratio;
        terms.push(ExpansionTerm {
            i,
            coeff,
            hermite_index: index as usize,
        });
    }
    terms
}

/// Instantiate an expansion: sum of coeff * H_{index} as a polynomial.
pub fn expansion_to_polynomial(terms: &[ExpansionTerm]) -> Polynomial {
    let mut acc = Polynomial::zero();
    for t in terms {
        acc = &acc + &hermite(t.hermite_index).scale(&t.coeff);
    }
    acc
}

fn pow2(i: usize) -> BigRational {
    let mut v = BigRational::one();
    for _ in 0..i {
        v *= rat(2);
    }
    v
}
