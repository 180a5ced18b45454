use carinena_core::carinena::{CarinenaModel, Domain};
use carinena_core::verify::{domain_spec, normalization_constant};
use carinena_core::Error;

use crate::config::FileConfig;
use crate::output::{Cell, OutputRecord};
use crate::{CmdError, TabulateArgs, TabulateWhat};

/// Rows (x, value) on a uniform grid, or at one point when --x is
/// given. Eigenfunctions are emitted normalized: closed form on the
/// whole line, quadrature on the half line.
pub fn run(args: &TabulateArgs, cfg: &FileConfig) -> Result<OutputRecord, CmdError> {
    let p = super::require_seed(args.p, cfg.p)?;
    let what = resolve_what(args, cfg)?;
    let model = CarinenaModel::new(p);
    let half_line = model.domain() == Domain::HalfLine;

    let points = build_grid(args, cfg, half_line)?;
    let tol = args.tol.or(cfg.tol).unwrap_or(1e-10);

    let mut record = OutputRecord::new("tabulate", vec!["x", "value"]);
    record.param("p", Cell::Int(p as i64));
    record.param(
        "what",
        Cell::Text(
            match what {
                TabulateWhat::Potential => "potential",
                TabulateWhat::Eigenfunction => "eigenfunction",
            }
            .to_string(),
        ),
    );

    match what {
        TabulateWhat::Potential => {
            for &x in &points {
                record.push_row(vec![
                    Cell::Float(x),
                    Cell::Float(model.potential().eval_f64(x)),
                ]);
            }
        }
        TabulateWhat::Eigenfunction => {
            let n = args
                .n
                .or(cfg.n)
                .ok_or_else(|| CmdError::usage("--n is required for eigenfunctions"))?;
            record.param("n", Cell::Int(n as i64));
            let state = model.eigenfunction(n).map_err(|e| match e {
                Error::InadmissibleIndex { p, n } => CmdError::usage(format!(
                    "no bound state at n = {n} for p = {p} (inadmissible index)"
                )),
                other => CmdError::Check(other.to_string()),
            })?;
            let spec = domain_spec(&model, tol, tol * 1e-3);
            let norm = normalization_constant(&model, n, &spec)?;
            for &x in &points {
                record.push_row(vec![
                    Cell::Float(x),
                    Cell::Float(norm * state.wave.eval_f64(x)),
                ]);
            }
        }
    }
    Ok(record)
}

fn resolve_what(args: &TabulateArgs, cfg: &FileConfig) -> Result<TabulateWhat, CmdError> {
    if let Some(w) = args.what {
        return Ok(w);
    }
    match cfg.what.as_deref() {
        Some("potential") => Ok(TabulateWhat::Potential),
        Some("eigenfunction") => Ok(TabulateWhat::Eigenfunction),
        Some(other) => Err(CmdError::usage(format!(
            "unknown curve {other:?} in config file (expected potential or eigenfunction)"
        ))),
        None => Err(CmdError::usage(
            "missing required --what (potential or eigenfunction)",
        )),
    }
}

fn build_grid(
    args: &TabulateArgs,
    cfg: &FileConfig,
    half_line: bool,
) -> Result<Vec<f64>, CmdError> {
    if let Some(x) = args.x.or(cfg.x) {
        if half_line && x <= 0.0 {
            return Err(CmdError::usage(
                "half-line model: the evaluation point must satisfy x > 0",
            ));
        }
        return Ok(vec![x]);
    }
    let default_min = if half_line { 0.1 } else { -6.0 };
    let x_min = args.x_min.or(cfg.x_min).unwrap_or(default_min);
    let x_max = args.x_max.or(cfg.x_max).unwrap_or(6.0);
    let samples = args.samples.or(cfg.samples).unwrap_or(121);
    if samples < 2 {
        return Err(CmdError::usage("--samples must be >= 2"));
    }
    if x_min >= x_max {
        return Err(CmdError::usage("--x-min must be below --x-max"));
    }
    if half_line && x_min <= 0.0 {
        return Err(CmdError::usage(
            "half-line model: --x-min must be > 0 (potential barrier at the origin)",
        ));
    }
    let step = (x_max - x_min) / (samples as f64 - 1.0);
    Ok((0..samples).map(|i| x_min + i as f64 * step).collect())
}
