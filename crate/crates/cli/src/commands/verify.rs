use carinena_core::carinena::CarinenaModel;
use carinena_core::exactalg::{rat, rational_to_f64};
use carinena_core::hermite::{
    expansion_to_polynomial, hermite, product_expansion, pseudo_hermite, susy_sum_expansion,
};
use carinena_core::verify::{
    appendix_a_value, discretize, domain_spec, fd_spectrum_refined, hamiltonian_residual,
    numeric_norm_sq, orthonormality_matrix, seed_integral_numeric, sturm_count_below, FdGrid,
    QuadratureSpec, SQRT_PI,
};

use crate::config::FileConfig;
use crate::output::{Cell, OutputRecord};
use crate::{CmdError, Suite, VerifyArgs};

struct CheckRow {
    suite: &'static str,
    check: String,
    pass: bool,
    detail: String,
}

fn row(suite: &'static str, check: impl Into<String>, pass: bool, detail: impl Into<String>) -> CheckRow {
    CheckRow {
        suite,
        check: check.into(),
        pass,
        detail: detail.into(),
    }
}

/// Run the requested suite(s); the second return value is false when
/// any check failed, which the caller turns into exit status 1.
pub fn run(args: &VerifyArgs, cfg: &FileConfig) -> Result<(OutputRecord, bool), CmdError> {
    let suite = resolve_suite(args, cfg)?;
    let mut rows = Vec::new();
    if matches!(suite, Suite::Residuals | Suite::All) {
        residuals(args, cfg, &mut rows)?;
    }
    if matches!(suite, Suite::Identities | Suite::All) {
        identities(args, cfg, &mut rows);
    }
    if matches!(suite, Suite::AppendixA | Suite::All) {
        appendix_a(args, cfg, &mut rows)?;
    }
    if matches!(suite, Suite::Orthonormality | Suite::All) {
        orthonormality(args, cfg, &mut rows)?;
    }
    if matches!(suite, Suite::FdOracle | Suite::All) {
        fd_oracle(args, cfg, &mut rows)?;
    }

    let mut record = OutputRecord::new("verify", vec!["suite", "check", "status", "detail"]);
    record.param("suite", Cell::Text(suite_name(suite).to_string()));
    let mut all_passed = true;
    for r in rows {
        all_passed &= r.pass;
        record.push_row(vec![
            Cell::Text(r.suite.to_string()),
            Cell::Text(r.check),
            Cell::Text(if r.pass { "pass" } else { "fail" }.to_string()),
            Cell::Text(r.detail),
        ]);
    }
    Ok((record, all_passed))
}

fn resolve_suite(args: &VerifyArgs, cfg: &FileConfig) -> Result<Suite, CmdError> {
    if let Some(s) = args.suite {
        return Ok(s);
    }
    match cfg.suite.as_deref() {
        None => Ok(Suite::All),
        Some("residuals") => Ok(Suite::Residuals),
        Some("orthonormality") => Ok(Suite::Orthonormality),
        Some("appendix-a") => Ok(Suite::AppendixA),
        Some("identities") => Ok(Suite::Identities),
        Some("fd-oracle") => Ok(Suite::FdOracle),
        Some("all") => Ok(Suite::All),
        Some(other) => Err(CmdError::usage(format!("unknown suite {other:?} in config file"))),
    }
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Residuals => "residuals",
        Suite::Orthonormality => "orthonormality",
        Suite::AppendixA => "appendix-a",
        Suite::Identities => "identities",
        Suite::FdOracle => "fd-oracle",
        Suite::All => "all",
    }
}

/// Exact Schrodinger residual of every admissible closed-form state.
fn residuals(args: &VerifyArgs, cfg: &FileConfig, rows: &mut Vec<CheckRow>) -> Result<(), CmdError> {
    let p_max = args.p_max.or(cfg.p_max).unwrap_or(6);
    let n_max = args.n_max.or(cfg.n_max).unwrap_or(20);
    for p in 1..=p_max {
        let model = CarinenaModel::new(p);
        for n in 0..=n_max {
            if !model.is_admissible(n) {
                continue;
            }
            let report = hamiltonian_residual(p, n)?;
            rows.push(row(
                "residuals",
                format!("eigen-identity p={p} n={n}"),
                report.exact_zero,
                if report.exact_zero {
                    "residual reduces to 0".to_string()
                } else {
                    format!("nonzero residual profile: {}", report.residual_profile)
                },
            ));
        }
    }
    Ok(())
}

/// Hermite-basis expansions against direct exact multiplication.
fn identities(args: &VerifyArgs, cfg: &FileConfig, rows: &mut Vec<CheckRow>) {
    let p_max = args.p_max.or(cfg.p_max).unwrap_or(15) as usize;
    for p in 0..=p_max {
        let mut ok = true;
        for k in 0..=p_max {
            let direct = &pseudo_hermite(p) * &hermite(k);
            ok &= direct == expansion_to_polynomial(&product_expansion(p, k));
        }
        rows.push(row(
            "identities",
            format!("product-expansion p={p}"),
            ok,
            format!("k = 0..={p_max} exact"),
        ));
    }
    for p in 0..=p_max {
        let mut ok = true;
        for k in 0..=p_max {
            let direct = &(&pseudo_hermite(p) * &hermite(k + 1))
                + &(&pseudo_hermite(p).derivative() * &hermite(k));
            ok &= direct == expansion_to_polynomial(&susy_sum_expansion(p, k));
        }
        rows.push(row(
            "identities",
            format!("ladder-sum-expansion p={p}"),
            ok,
            format!("k = 0..={p_max} exact"),
        ));
    }
}

/// Seed integrals: exact recursion, quadrature agreement, and the
/// ground-state normalization discrimination.
fn appendix_a(args: &VerifyArgs, cfg: &FileConfig, rows: &mut Vec<CheckRow>) -> Result<(), CmdError> {
    let m_max = args.m_max.or(cfg.m_max).unwrap_or(4);
    let tol = args.tol.or(cfg.tol).unwrap_or(1e-8);
    let spec = QuadratureSpec::gaussian_weighted(tol * 1e-2, 1e-14);

    let mut recursion_ok = true;
    for m in 0..m_max {
        let lhs = appendix_a_value(m);
        let rhs = rat(4 * (2 * m as i64 + 1) * (2 * m as i64 + 2)) * appendix_a_value(m + 1);
        recursion_ok &= lhs == rhs;
    }
    rows.push(row(
        "appendix-a",
        "downward-recursion".to_string(),
        recursion_ok,
        format!("exact on coefficients for m < {m_max}"),
    ));

    for m in 0..=m_max {
        let exact = rational_to_f64(&appendix_a_value(m)) * SQRT_PI;
        let numeric = seed_integral_numeric(m, &spec)?;
        let rel = ((numeric - exact) / exact).abs();
        rows.push(row(
            "appendix-a",
            format!("seed-integral m={m}"),
            rel < tol,
            format!("relative deviation {rel:.3e}"),
        ));
    }

    for m in [1u32, 2] {
        let model = CarinenaModel::new(2 * m);
        let numeric = numeric_norm_sq(&model, 0, &spec)?;
        let candidate = rational_to_f64(&model.norm_squared(0).unwrap()) / SQRT_PI;
        let rel = ((numeric - candidate) / candidate).abs();
        rows.push(row(
            "appendix-a",
            format!("ground-state-norm m={m}"),
            rel < tol,
            format!("2^(2m)(2m)! candidate off by {rel:.3e}"),
        ));
        let misprint = candidate / 2f64.powi(m as i32);
        let ratio = numeric / misprint;
        let pass = ratio >= 2f64.powi(m as i32) * 0.999;
        rows.push(row(
            "appendix-a",
            format!("misprint-variant-rejected m={m}"),
            pass,
            format!("2^m variant off by factor {ratio:.6}"),
        ));
    }
    Ok(())
}

/// Quadrature Gram matrices of normalized states against the identity.
fn orthonormality(args: &VerifyArgs, cfg: &FileConfig, rows: &mut Vec<CheckRow>) -> Result<(), CmdError> {
    let p_max = args.p_max.or(cfg.p_max).unwrap_or(4);
    let n_max = args.n_max.or(cfg.n_max).unwrap_or(9);
    let tol = args.tol.or(cfg.tol).unwrap_or(1e-8);
    for p in [2u32, 3, 4] {
        if p > p_max {
            continue;
        }
        let model = CarinenaModel::new(p);
        let levels: Vec<u32> = (0..=n_max).filter(|&n| model.is_admissible(n)).collect();
        let spec = domain_spec(&model, tol * 1e-2, 1e-13);
        let gram = orthonormality_matrix(&model, &levels, &spec)?;
        let mut worst = 0f64;
        for (a, r) in gram.iter().enumerate() {
            for (b, &entry) in r.iter().enumerate() {
                let expect = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((entry - expect).abs());
            }
        }
        rows.push(row(
            "orthonormality",
            format!("gram-identity p={p}"),
            worst < tol,
            format!("{} levels; worst deviation {worst:.3e}", levels.len()),
        ));
    }
    Ok(())
}

/// Finite-difference Sturm-bisection eigenvalues against the exact
/// spectrum, plus the missing-levels gap for even seeds.
fn fd_oracle(args: &VerifyArgs, cfg: &FileConfig, rows: &mut Vec<CheckRow>) -> Result<(), CmdError> {
    let tol = args.tol.or(cfg.tol).unwrap_or(1e-3);
    let seeds: Vec<u32> = match args.p.or(cfg.p) {
        Some(p) => vec![p],
        None => vec![1, 2, 3, 4],
    };
    for p in seeds {
        let model = CarinenaModel::new(p);
        let count = 5usize;
        let exact: Vec<f64> = (0..)
            .filter(|&n| model.is_admissible(n))
            .take(count)
            .map(|n| rational_to_f64(&model.energy(n)))
            .collect();
        // refinement doubles to 8000 points; the reported eigenvalues are
        // from the fine grid
        let grid = FdGrid::for_model(&model, 12.0, 4000);
        let report = fd_spectrum_refined(&model, &grid, count);
        let worst = report
            .eigenvalues
            .iter()
            .zip(&exact)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        let stable = report.refinement_shift < tol;
        rows.push(row(
            "fd-oracle",
            format!("spectrum p={p}"),
            worst < tol && stable,
            format!(
                "worst deviation {worst:.3e}; refinement shift {:.3e}",
                report.refinement_shift
            ),
        ));
        if p % 2 == 0 {
            let fine = FdGrid::for_model(&model, 12.0, 8000);
            let (diag, off) = discretize(&model, &fine);
            let delta = 0.1;
            let below_gap = sturm_count_below(&diag, off, -(2.0 * p as f64) + 1.0 + delta);
            let below_top = sturm_count_below(&diag, off, 3.0 - delta);
            rows.push(row(
                "fd-oracle",
                format!("missing-levels-gap p={p}"),
                below_gap == 1 && below_top == 1,
                format!("{below_gap} level(s) below the gap; {} inside", below_top - below_gap),
            ));
        }
    }
    Ok(())
}
