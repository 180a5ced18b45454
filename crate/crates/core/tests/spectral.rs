//! Cross-module checks: the factorization intertwining relations, the
//! closure of the operator algebra on quasi-Gaussian profiles, and the
//! exact eigen-identity for the whole model family at desk scale.

use carinena_core::carinena::{CarinenaModel, Domain};
use carinena_core::exactalg::{rat, rational_to_f64, RationalFunction};
use carinena_core::hermite::hermite;
use carinena_core::susy::{hamiltonian_apply, QuasiGaussian, Superpotential};
use carinena_core::verify::{
    self, adaptive_quadrature, domain_spec, fd_spectrum_refined, FdGrid, QuadratureSpec,
};

/// A maps eigenfunctions of the lower partner to eigenfunctions of the
/// upper partner at the same energy, checked symbolically.
#[test]
fn intertwining_exact() {
    for p in 0..=6u32 {
        let w = Superpotential::new(p);
        let pair = w.partner_potentials();
        for k in 0..=12u32 {
            // psi1 = A† (H_k e^{-x^2/2}) is an eigenfunction of V1 with
            // eigenvalue 2k + 2p + 2
            let harmonic = QuasiGaussian::from_poly(hermite(k as usize));
            let psi1 = w.apply_a_dagger(&harmonic);
            let energy = rat(2 * (k as i64 + p as i64 + 1));

            let h1_psi = hamiltonian_apply(&pair.v1, &psi1);
            assert!(
                (&h1_psi - &psi1.scale(&energy)).is_zero(),
                "lower-partner eigen-identity failed at p={p}, k={k}"
            );

            // the image under A is again an eigenfunction of V2, same energy
            let mapped = w.apply_a(&psi1);
            assert!(!mapped.is_zero(), "A annihilated a positive-energy state");
            let h2_mapped = hamiltonian_apply(&pair.v2, &mapped);
            assert!(
                (&h2_mapped - &mapped.scale(&energy)).is_zero(),
                "intertwining failed at p={p}, k={k}"
            );

            // and A A† acts as multiplication by the energy
            let expected_profile = RationalFunction::from_poly(hermite(k as usize).scale(&energy));
            assert_eq!(
                mapped.profile(),
                &expected_profile,
                "A A† is not the expected scalar at p={p}, k={k}",
            );
        }
    }
}

/// A†(A psi) equals (-psi'' + V1 psi) for arbitrary polynomial-over-seed
/// profiles, as identical quasi-Gaussian values.
#[test]
fn factorization_closure() {
    for p in 1..=5u32 {
        let w = Superpotential::new(p);
        let pair = w.partner_potentials();
        let seed = carinena_core::hermite::pseudo_hermite(p as usize);
        for k in [0usize, 1, 2, 5, 8] {
            let profile = RationalFunction::new(hermite(k), seed.clone()).unwrap();
            let psi = QuasiGaussian::new(profile);
            let via_factors = w.apply_a_dagger(&w.apply_a(&psi));
            let via_hamiltonian = hamiltonian_apply(&pair.v1, &psi);
            assert_eq!(
                via_factors, via_hamiltonian,
                "A†A != -d^2 + V1 on H_{k}/seed at p={p}"
            );
        }
    }
}

/// The central claim: every admissible closed-form state solves its
/// Schrodinger equation exactly, for all seeds up to 6 and levels up
/// to 20.
#[test]
fn eigen_identity_family_wide() {
    for p in 1..=6u32 {
        let model = CarinenaModel::new(p);
        for n in 0..=20u32 {
            if !model.is_admissible(n) {
                continue;
            }
            let report = verify::hamiltonian_residual(p, n).unwrap();
            assert!(
                report.exact_zero,
                "residual not identically zero at p={p}, n={n}"
            );
        }
    }
}

/// Half-line levels have no closed-form normalization; quadrature both
/// normalizes them and confirms orthogonality.
#[test]
fn half_line_orthonormality() {
    let model = CarinenaModel::new(3);
    let spec = domain_spec(&model, 1e-10, 1e-13);
    let levels = [5u32, 7, 9];
    let gram = verify::orthonormality_matrix(&model, &levels, &spec).unwrap();
    for (a, row) in gram.iter().enumerate() {
        for (b, &entry) in row.iter().enumerate() {
            let expect = if a == b { 1.0 } else { 0.0 };
            assert!(
                (entry - expect).abs() < 1e-8,
                "gram({a},{b}) = {entry} at p=3"
            );
        }
    }
}

/// The numerically observed half-line normalization coefficient sits at
/// exactly twice the whole-line closed form, as parity dictates.
#[test]
fn half_line_norm_is_twice_whole_line_value() {
    let model = CarinenaModel::new(3);
    let spec = QuadratureSpec::half_gaussian_weighted(1e-11, 1e-14);
    for n in [5u32, 7] {
        let numeric = verify::numeric_norm_sq(&model, n, &spec).unwrap();
        // whole-line formula: prod_{j=1..p}(n-j) / (2^{n-p} n!)
        let mut c = rat(1);
        for j in 1..=3i64 {
            c *= rat(n as i64 - j);
        }
        let c = c / (rat(2).pow(n as i32 - 3) * rat((1..=n as i64).product::<i64>()));
        let whole_line = rational_to_f64(&c) / verify::SQRT_PI;
        assert!(
            (numeric / (2.0 * whole_line) - 1.0).abs() < 1e-8,
            "n={n}: numeric {numeric} vs doubled closed form {}",
            2.0 * whole_line
        );
    }
}

/// Eigenfunctions vanish quadratically at the origin on the half line.
#[test]
fn half_line_states_vanish_at_origin() {
    for p in [1u32, 3, 5] {
        let model = CarinenaModel::new(p);
        assert_eq!(model.domain(), Domain::HalfLine);
        let n = p + 2;
        let state = model.eigenfunction(n).unwrap();
        let profile = state.wave.profile();
        assert!(
            profile.eval(&rat(0)).unwrap().eq(&rat(0)),
            "profile nonzero at origin for p={p}"
        );
        assert!(state.wave.eval_f64(1e-4).abs() < 1e-6);
    }
}

/// FD oracle against the closed-form spectrum with a 2x refinement
/// stability report.
#[test]
fn fd_oracle_with_refinement() {
    let model = CarinenaModel::new(3);
    let grid = FdGrid::for_model(&model, 12.0, 3000);
    let report = fd_spectrum_refined(&model, &grid, 3);
    // admissible n = 5, 7, 9 with E = 2n - 5
    let expect = [5.0, 9.0, 13.0];
    for (got, want) in report.eigenvalues.iter().zip(expect) {
        assert!((got - want).abs() < 1e-3, "{:?}", report.eigenvalues);
    }
    assert!(report.refinement_shift < 1e-3, "grid too coarse");
}

/// Orthogonality of opposite-parity states is exact by symmetry; the
/// quadrature must see it at tolerance.
#[test]
fn opposite_parity_entry_is_zero() {
    let model = CarinenaModel::new(2);
    let spec = domain_spec(&model, 1e-10, 1e-13);
    let s0 = model.eigenfunction(0).unwrap();
    let s3 = model.eigenfunction(3).unwrap();
    let integral = adaptive_quadrature(
        |x| s0.wave.eval_f64(x) * s3.wave.eval_f64(x),
        &spec,
    )
    .unwrap();
    assert!(integral.value.abs() < 1e-8);
}
