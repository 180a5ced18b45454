//! Exact construction and verification of the generalized Carinena
//! oscillators: the family of rational extensions of the harmonic
//! oscillator obtained by supersymmetric factorization against the
//! non-normalizable seed solutions built from pseudo-Hermite polynomials.
//!
//! Everything spectral is computed in exact rational arithmetic:
//! potentials and superpotentials are reduced rational functions,
//! eigenfunctions are rational profiles times the fixed Gaussian
//! `e^{-x^2/2}`, and the Schrodinger residual of every claimed bound
//! state reduces to the canonical zero. Floating point enters only in
//! the independent numerical oracles (`verify`): adaptive quadrature
//! for normalization integrals and a finite-difference Sturm-bisection
//! eigensolver.

pub mod carinena;
pub mod error;
pub mod exactalg;
pub mod hermite;
pub mod susy;
pub mod verify;

pub use error::Error;
pub use exactalg::{BigRational, Polynomial, RationalFunction};
