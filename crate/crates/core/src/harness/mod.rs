//! Verification experiments over the test corpus: the identity suite, norm
//! ratio sweeps, the Prestini constant ladder and the transference demo.
//!
//! Everything here is `f64`. Experiments run one after another; inner
//! loops use rayon only through order-preserving maps, so no number in a
//! report depends on the thread count.

mod identity;
mod report;
mod sweeps;
mod transference;

use std::sync::Arc;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::funcspace::{make_graded_grid, CorpusEntry, Domain, Grid, SampledFn, CORPUS_WINDOW};

pub use identity::{identity_gate, run_identity_suite, run_identity_suite_on, GatePass, TRANSPLANT_PAIRS};
pub use report::{to_json_17, write_jsonl, write_summary_csv, ExperimentReport, ReportKind, RATIO_LABEL};
pub use sweeps::{
    bcv_lattice, bcv_lattice_sweep, measure_ap_sweep, oscillation_ratio_sweep, oscillation_ratio_sweep_on, prestini_constant_sweep,
    prestini_constant_sweep_on, weighted_carleson_sweep, CutVariant, OscillationSettings,
};
pub use transference::{transference_demo, transference_demo_on, Multiplier, MultiplierFamily};

/// Spatial resolution: `n` nodes on each half line, composite Gauss–Legendre
/// panels of `nodes_per_panel` nodes over `[−window, window]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Resolution {
    pub n: usize,
    pub nodes_per_panel: usize,
    pub window: f64,
}

impl Default for Resolution {
    fn default() -> Self {
        Resolution { n: 512, nodes_per_panel: 32, window: CORPUS_WINDOW }
    }
}

impl Resolution {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_panels(n, 32, CORPUS_WINDOW)
    }

    pub fn with_panels(n: usize, nodes_per_panel: usize, window: f64) -> Result<Self> {
        if nodes_per_panel == 0 || n == 0 || n % nodes_per_panel != 0 {
            return Err(Error::Argument(format!("n = {n} must be a positive multiple of nodes_per_panel = {nodes_per_panel}")));
        }
        if !(window > 0.0) || !window.is_finite() {
            return Err(Error::Argument("window must be positive".into()));
        }
        Ok(Resolution { n, nodes_per_panel, window })
    }

    pub fn refined(&self) -> Self {
        Resolution { n: 2 * self.n, ..*self }
    }

    pub fn coarsened(&self) -> Result<Self> {
        Self::with_panels(self.n / 2, self.nodes_per_panel, self.window)
    }

    pub fn spatial(&self) -> Result<Arc<Grid<f64>>> {
        Ok(Arc::new(make_graded_grid(-self.window, self.window, self.n / self.nodes_per_panel, self.nodes_per_panel, 1.0)?))
    }

    /// Output grid for the continuous transforms: `[−Λ, Λ]` with `Λ` the
    /// frequency resolvable on `space`, twice as many panels per side.
    pub fn frequency(&self, space: &Grid<f64>) -> Result<Arc<Grid<f64>>> {
        let band = space.resolvable_frequency();
        Ok(Arc::new(make_graded_grid(-band, band, 2 * self.n / self.nodes_per_panel, self.nodes_per_panel, 1.0)?))
    }
}

pub(crate) fn sample(e: &CorpusEntry<f64>, grid: &Arc<Grid<f64>>) -> Result<SampledFn<f64>> {
    e.func.sample(grid.clone(), Domain::FullLine)
}

/// `d / n`, with `0/0 = 0` so exact zero inputs give exact zero residuals.
pub(crate) fn rel(d: f64, n: f64) -> f64 {
    if d == 0.0 {
        0.0
    } else {
        d / n
    }
}

/// `(∫ |f|² |x|^e dx)^{1/2}`.
pub(crate) fn l2(f: &SampledFn<f64>, e: f64) -> f64 {
    f.points()
        .iter()
        .zip(f.grid().weights())
        .zip(f.values())
        .map(|((x, w), v)| w * x.abs().powf(e) * v.norm_sqr())
        .sum::<f64>()
        .sqrt()
}

pub(crate) fn diff(a: &SampledFn<f64>, b: &SampledFn<f64>) -> Result<SampledFn<f64>> {
    a.combine(Complex::new(1.0, 0.0), b, Complex::new(-1.0, 0.0))
}

/// Both finite and positive with quotient in `[1/2, 2]`, or both zero.
pub(crate) fn within_factor_two(a: f64, b: f64) -> bool {
    if a == 0.0 && b == 0.0 {
        return true;
    }
    a.is_finite() && b.is_finite() && a > 0.0 && b > 0.0 && (0.5..=2.0).contains(&(b / a))
}
