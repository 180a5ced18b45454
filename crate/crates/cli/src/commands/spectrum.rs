use carinena_core::carinena::CarinenaModel;
use carinena_core::exactalg::{rational_string, rational_to_f64};

use crate::config::FileConfig;
use crate::output::{Cell, OutputRecord};
use crate::{CmdError, SpectrumArgs};

/// Rows (n, exact energy, float energy, admissibility, exact squared
/// normalization) for every level up to n_max. Half-line levels carry
/// "numeric" in the normalization column: their constant has no closed
/// form and is computed by quadrature on demand.
pub fn run(args: &SpectrumArgs, cfg: &FileConfig) -> Result<OutputRecord, CmdError> {
    let p = super::require_seed(args.p, cfg.p)?;
    let n_max = args.n_max.or(cfg.n_max).unwrap_or(10);

    let model = CarinenaModel::new(p);
    let mut record = OutputRecord::new(
        "spectrum",
        vec!["n", "energy_exact", "energy", "admissible", "norm_sq_exact"],
    );
    record.param("p", Cell::Int(p as i64));
    record.param("n_max", Cell::Int(n_max as i64));

    for level in model.spectrum(n_max) {
        let norm_cell = match (&level.norm_sq_coeff, level.admissible) {
            (Some(c), _) => Cell::Exact(rational_string(c)),
            (None, true) => Cell::Text("numeric".to_string()),
            (None, false) => Cell::Text(String::new()),
        };
        record.push_row(vec![
            Cell::Int(level.n as i64),
            Cell::Exact(rational_string(&level.energy)),
            Cell::Float(rational_to_f64(&level.energy)),
            Cell::Bool(level.admissible),
            norm_cell,
        ]);
    }
    Ok(record)
}
