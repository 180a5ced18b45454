//! Independent spectral oracle: second-order central differences turn
//! the Hamiltonian into a symmetric tridiagonal matrix whose lowest
//! eigenvalues are located by bisection on the Sturm sign-change count.

use crate::carinena::{CarinenaModel, Domain};

/// Uniform grid for the finite-difference discretization. The matrix
/// unknowns live on the `points` grid nodes from x_min to x_max
/// inclusive; Dirichlet zeros sit one spacing outside both ends.
#[derive(Debug, Clone, Copy)]
pub struct FdGrid {
    pub x_min: f64,
    pub x_max: f64,
    pub points: usize,
}

impl FdGrid {
    pub fn new(x_min: f64, x_max: f64, points: usize) -> Self {
        assert!(points >= 3, "need at least 3 grid points");
        assert!(x_min < x_max);
        FdGrid {
            x_min,
            x_max,
            points,
        }
    }

    /// Symmetric grid for whole-line models.
    pub fn whole_line(x_max: f64, points: usize) -> Self {
        FdGrid::new(-x_max, x_max, points)
    }

    /// Half-line grid with the wall one cell off the origin: the first
    /// node sits at x = spacing, so the Dirichlet ghost lands at x = 0.
    pub fn half_line(x_max: f64, points: usize) -> Self {
        let h = x_max / points as f64;
        FdGrid::new(h, x_max, points)
    }

    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.points as f64 - 1.0)
    }

    /// Grid matching the model's domain convention.
    pub fn for_model(model: &CarinenaModel, x_max: f64, points: usize) -> Self {
        match model.domain() {
            Domain::WholeLine => FdGrid::whole_line(x_max, points),
            Domain::HalfLine => FdGrid::half_line(x_max, points),
        }
    }
}

/// The discretized Hamiltonian: constant off-diagonal -1/h^2 and
/// diagonal 2/h^2 + V(x_i).
pub fn discretize(model: &CarinenaModel, grid: &FdGrid) -> (Vec<f64>, f64) {
    let h = grid.spacing();
    let inv_h2 = 1.0 / (h * h);
    let v = model.potential();
    let diag = (0..grid.points)
        .map(|i| 2.0 * inv_h2 + v.eval_f64(grid.x_min + i as f64 * h))
        .collect();
    (diag, -inv_h2)
}

/// Number of eigenvalues strictly below lambda, from the signs of the
/// LDL^T pivots of (T - lambda I).
pub fn sturm_count_below(diag: &[f64], off: f64, lambda: f64) -> usize {
    let off_sq = off * off;
    let mut count = 0;
    let mut q = 0.0f64;
    for (i, &d) in diag.iter().enumerate() {
        q = if i == 0 {
            d - lambda
        } else {
            let guard = if q == 0.0 { f64::MIN_POSITIVE } else { q };
            d - lambda - off_sq / guard
        };
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Lowest `count` eigenvalues by Sturm bisection, ascending. Brackets
/// are certified by the sign-change count, so no eigenvalue can be
/// skipped or duplicated.
pub fn lowest_eigenvalues(diag: &[f64], off: f64, count: usize) -> Vec<f64> {
    let floor = diag.iter().cloned().fold(f64::INFINITY, f64::min) - 2.0 * off.abs() - 1.0;
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        // exponential search up from the floor for an upper bracket
        let mut lo = floor;
        let mut hi = floor + 1.0;
        while sturm_count_below(diag, off, hi) <= k {
            let span = hi - lo;
            lo = hi;
            hi += 2.0 * span;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if hi - lo < 1e-11 * mid.abs().max(1.0) {
                break;
            }
            if sturm_count_below(diag, off, mid) <= k {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    out
}

/// Lowest eigenvalues of the discretized model.
pub fn fd_spectrum(model: &CarinenaModel, grid: &FdGrid, count: usize) -> Vec<f64> {
    let (diag, off) = discretize(model, grid);
    lowest_eigenvalues(&diag, off, count)
}

/// Spectrum plus the largest shift observed under one 2x grid
/// refinement; a large shift flags a grid too coarse for the requested
/// accuracy.
#[derive(Debug, Clone)]
pub struct FdReport {
    pub eigenvalues: Vec<f64>,
    pub refinement_shift: f64,
}

pub fn fd_spectrum_refined(model: &CarinenaModel, grid: &FdGrid, count: usize) -> FdReport {
    let coarse = fd_spectrum(model, grid, count);
    let fine_grid = match model.domain() {
        Domain::WholeLine => FdGrid::whole_line(grid.x_max, grid.points * 2),
        Domain::HalfLine => FdGrid::half_line(grid.x_max, grid.points * 2),
    };
    let fine = fd_spectrum(model, &fine_grid, count);
    let shift = coarse
        .iter()
        .zip(&fine)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    FdReport {
        eigenvalues: fine,
        refinement_shift: shift,
    }
}
