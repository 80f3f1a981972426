use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::identity::GatePass;
use super::report::{ExperimentReport, ReportKind, RATIO_LABEL};
use super::{rel, within_factor_two, Resolution};
use crate::classical_ops::{prestini_majorant, SupGrid};
use crate::error::{Error, Result};
use crate::funcspace::{default_corpus, CorpusEntry, Domain, Grid, SampledFn, TestFn};
use crate::projections::{DunklProjector, HankelProjector, ThresholdSeq};
use crate::seminorms::{carleson_dunkl_max, max_oscillation_over_sampled_sequences};
use crate::special::Order;
use crate::transforms::Boundary;
use crate::weights::{measure_ap_check, ap_alpha_check, range_dyadic_oscillation, range_full_oscillation, weighted_lp_norm, NormSpec, Weight, DEFAULT_INTERVAL_SAMPLES};

/// Dilation factors for the invariance check.
const DILATIONS: [f64; 2] = [0.5, 2.0];
/// Allowed relative deviation of the ratio under dilation.
const DILATION_TOL: f64 = 0.01;

/// Which cut sequences the oscillation ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CutVariant {
    /// Random sequences from the whole threshold grid.
    Full,
    /// Random sequences from its dyadic thresholds only.
    Dyadic,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillationSettings {
    pub j: usize,
    pub n_sequences: usize,
    pub seed: u64,
    pub variant: CutVariant,
}

impl Default for OscillationSettings {
    fn default() -> Self {
        OscillationSettings { j: 6, n_sequences: 32, seed: 7, variant: CutVariant::Full }
    }
}

fn is_zero(e: &CorpusEntry<f64>) -> bool {
    matches!(e.func, TestFn::Zero)
}

/// Max over the corpus of `‖sup_I O²_{I,J}(𝒮_t f)‖ / ‖f‖` on `grid`, with
/// thresholds `t_grid`; `λ` dilates every corpus function.
fn max_oscillation_ratio(
    corpus: &[CorpusEntry<f64>],
    grid: &Arc<Grid<f64>>,
    t_grid: &ThresholdSeq<f64>,
    lambda: f64,
    spec: &NormSpec<f64>,
    s: &OscillationSettings,
) -> Result<f64> {
    let proj = DunklProjector::new(spec.alpha(), grid.clone())?;
    let unit = Weight::unit();
    let ratios = corpus
        .par_iter()
        .map(|e| {
            let f = e.func.dilate(lambda).sample(grid.clone(), Domain::FullLine)?;
            let mut fam = proj.family(&f, t_grid)?;
            if s.variant == CutVariant::Dyadic {
                fam = fam.restrict(&t_grid.dyadic_subsequence())?;
            }
            let osc = max_oscillation_over_sampled_sequences(&fam, s.j, s.n_sequences, s.seed)?;
            Ok(rel(weighted_lp_norm(&osc, spec, &unit)?, weighted_lp_norm(&f, spec, &unit)?))
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(ratios.into_iter().fold(0.0, f64::max))
}

fn ratio_at(res: &Resolution, lambda: f64, corpus: &[CorpusEntry<f64>], spec: &NormSpec<f64>, s: &OscillationSettings) -> Result<f64> {
    let x = res.spatial()?;
    let t = ThresholdSeq::default_grid(x.resolvable_frequency())?;
    if lambda == 1.0 {
        return max_oscillation_ratio(corpus, &x, &t, 1.0, spec, s);
    }
    let xl = Arc::new(x.scaled(1.0 / lambda)?);
    max_oscillation_ratio(corpus, &xl, &t.scaled(lambda)?, lambda, spec, s)
}

/// Oscillation norm ratios on the default corpus; see
/// [`oscillation_ratio_sweep_on`].
pub fn oscillation_ratio_sweep(
    gate: &GatePass,
    res: Resolution,
    specs: &[NormSpec<f64>],
    settings: OscillationSettings,
) -> Result<Vec<ExperimentReport>> {
    oscillation_ratio_sweep_on(gate, res, specs, settings, &default_corpus(settings.seed))
}

/// For each spec, the max over `corpus` of the sampled-sup oscillation
/// norm ratio at `N` and `2N` and under dilation by `½` and `2`. Passes
/// when the refinement factor lies in `[½, 2]` and both dilation
/// deviations are at most 1%.
pub fn oscillation_ratio_sweep_on(
    gate: &GatePass,
    res: Resolution,
    specs: &[NormSpec<f64>],
    settings: OscillationSettings,
    corpus: &[CorpusEntry<f64>],
) -> Result<Vec<ExperimentReport>> {
    if settings.j == 0 || settings.n_sequences == 0 {
        return Err(Error::Argument("J and n_sequences must be positive".into()));
    }
    let mut out = Vec::with_capacity(specs.len());
    for spec in specs {
        let start = Instant::now();
        let a = spec.alpha().alpha();
        gate.require(&res, a)?;
        if !(spec.exponent() > -1.0) {
            return Err(Error::Domain(format!("|x|^{} is not integrable at 0", spec.exponent())));
        }
        let in_range = match settings.variant {
            CutVariant::Full => spec.p() >= 2.0 && range_full_oscillation(spec.p(), spec.beta(), spec.alpha())?,
            CutVariant::Dyadic => range_dyadic_oscillation(spec.p(), spec.beta(), spec.alpha()),
        };
        let r = ratio_at(&res, 1.0, corpus, spec, &settings)?;
        let r2 = ratio_at(&res.refined(), 1.0, corpus, spec, &settings)?;
        let mut vals = vec![(format!("ratio[N={}]", res.n), r), (format!("ratio[N={}]", 2 * res.n), r2)];
        let mut dil_ok = true;
        for lambda in DILATIONS {
            let rl = ratio_at(&res, lambda, corpus, spec, &settings)?;
            let dev = if r == 0.0 && rl == 0.0 { 0.0 } else { (rl / r - 1.0).abs() };
            dil_ok &= dev <= DILATION_TOL;
            vals.push((format!("dilation_deviation[lambda={lambda}]"), dev));
        }
        let passed = within_factor_two(r, r2) && dil_ok;
        out.push(
            ExperimentReport {
                name: format!("oscillation_ratio[{:?}][p={},beta={},alpha={}]", settings.variant, spec.p(), spec.beta(), a)
                    .to_lowercase(),
                kind: ReportKind::Ratio,
                inputs: json!({
                    "p": spec.p(), "beta": spec.beta(), "alpha": a, "j": settings.j,
                    "n_sequences": settings.n_sequences, "variant": settings.variant, "in_range": in_range,
                    "corpus_size": corpus.len(),
                }),
                residuals_or_ratios: vals,
                tolerance: DILATION_TOL,
                passed,
                runtime_ms: 0,
                resolution: res,
                seed: settings.seed,
                note: RATIO_LABEL.into(),
            }
            .with_runtime(start),
        );
    }
    Ok(out)
}

/// Empirical Prestini constants on the default corpus.
pub fn prestini_constant_sweep(gate: &GatePass, alphas: &[f64], ladder: &[Resolution], seed: u64) -> Result<Vec<ExperimentReport>> {
    prestini_constant_sweep_on(gate, alphas, ladder, seed, &default_corpus(seed))
}

/// `C_α = max |S̃_t^α f(x)| / majorant(x)` over the corpus (restricted to
/// the positive half line), the default threshold grid and all nodes, at
/// each resolution of `ladder`. Zero functions are skipped. Passes when
/// every value is finite and consecutive values agree within a factor 2.
pub fn prestini_constant_sweep_on(
    gate: &GatePass,
    alphas: &[f64],
    ladder: &[Resolution],
    seed: u64,
    corpus: &[CorpusEntry<f64>],
) -> Result<Vec<ExperimentReport>> {
    let first = ladder.first().ok_or_else(|| Error::Argument("empty resolution ladder".into()))?;
    let active: Vec<&CorpusEntry<f64>> = corpus.iter().filter(|e| !is_zero(e)).collect();
    let skipped: Vec<&str> = corpus.iter().filter(|e| is_zero(e)).map(|e| e.name.as_str()).collect();
    let mut out = Vec::new();
    for &a in alphas {
        let start = Instant::now();
        gate.require(first, a)?;
        let o = Order::new(a)?;
        let mut vals = Vec::new();
        for res in ladder {
            vals.push((format!("C[N={}]", res.n), prestini_constant(o, res, &active)?));
        }
        let cs: Vec<f64> = vals.iter().map(|(_, c)| *c).collect();
        let passed = !active.is_empty()
            && cs.iter().all(|c| c.is_finite() && *c > 0.0)
            && cs.windows(2).all(|w| within_factor_two(w[0], w[1]));
        let note = if active.is_empty() {
            "no nonzero corpus entries: ratio undefined".to_string()
        } else {
            RATIO_LABEL.to_string()
        };
        out.push(
            ExperimentReport {
                name: format!("prestini_constant[alpha={a}]"),
                kind: ReportKind::Ratio,
                inputs: json!({ "alpha": a, "ladder": ladder.iter().map(|r| r.n).collect::<Vec<_>>(), "skipped": skipped }),
                residuals_or_ratios: vals,
                tolerance: 2.0,
                passed,
                runtime_ms: 0,
                resolution: *first,
                seed,
                note,
            }
            .with_runtime(start),
        );
    }
    Ok(out)
}

fn prestini_constant(o: Order<f64>, res: &Resolution, corpus: &[&CorpusEntry<f64>]) -> Result<f64> {
    let x = res.spatial()?;
    let half = Arc::new(x.positive_half()?);
    let t = ThresholdSeq::default_grid(x.resolvable_frequency())?;
    let sup = SupGrid::default_for(&half, &t)?;
    let proj = HankelProjector::new(o, half.clone(), Boundary::Neumann)?;
    let per_fn = corpus
        .iter()
        .map(|e| {
            let f = e.func.sample(half.clone(), Domain::HalfLine)?;
            let fam = proj.family(&f, &t)?;
            let maj = prestini_majorant(o, &f, &sup)?;
            let mut c: f64 = 0.0;
            for row in fam.values() {
                for (s, m) in row.iter().zip(maj.values()) {
                    let (s, m) = (s.norm(), m.re);
                    if s == 0.0 {
                        continue;
                    }
                    c = c.max(if m > 0.0 { s / m } else { f64::INFINITY });
                }
            }
            Ok(c)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(per_fn.into_iter().fold(0.0, f64::max))
}

/// `𝒞_*^α f` over the default threshold grid for each nonzero corpus entry.
fn carleson_samples(o: Order<f64>, res: &Resolution, corpus: &[&CorpusEntry<f64>]) -> Result<Vec<(SampledFn<f64>, SampledFn<f64>)>> {
    let x = res.spatial()?;
    let t = ThresholdSeq::default_grid(x.resolvable_frequency())?;
    corpus
        .par_iter()
        .map(|e| {
            let f = e.func.sample(x.clone(), Domain::FullLine)?;
            let c = carleson_dunkl_max(o, &f, &t)?;
            Ok((f, c))
        })
        .collect()
}

/// Max corpus ratio for one weight, `None` when the weighted norm of the
/// corpus is infinite.
fn carleson_ratio(samples: &[(SampledFn<f64>, SampledFn<f64>)], spec: &NormSpec<f64>, w: &Weight<f64>) -> Option<f64> {
    let mut m: f64 = 0.0;
    for (f, c) in samples {
        let nf = weighted_lp_norm(f, spec, w).ok()?;
        let nc = weighted_lp_norm(c, spec, w).ok()?;
        m = m.max(rel(nc, nf));
    }
    Some(m)
}

/// Per weight: max corpus ratio `‖𝒞_*^α f‖ / ‖f‖` in
/// `L^p(w|x|^{2α+1}dx)` at `N` and `2N`; passes when finite and stable
/// within a factor 2. Non-integrable weights are reported as failures with
/// a note.
pub fn weighted_carleson_sweep(
    gate: &GatePass,
    res: Resolution,
    weights: &[Weight<f64>],
    p: f64,
    alpha: f64,
    seed: u64,
) -> Result<Vec<ExperimentReport>> {
    gate.require(&res, alpha)?;
    let o = Order::new(alpha)?;
    let spec = NormSpec::new(p, 0.0, o)?;
    let corpus = default_corpus(seed);
    let active: Vec<&CorpusEntry<f64>> = corpus.iter().filter(|e| !is_zero(e)).collect();
    let start = Instant::now();
    let coarse = carleson_samples(o, &res, &active)?;
    let fine = carleson_samples(o, &res.refined(), &active)?;
    let setup_ms = start.elapsed().as_millis() as u64;
    Ok(weights
        .iter()
        .map(|w| {
            let start = Instant::now();
            let (vals, passed, note) = match (carleson_ratio(&coarse, &spec, w), carleson_ratio(&fine, &spec, w)) {
                (Some(r), Some(r2)) => (
                    vec![(format!("ratio[N={}]", res.n), r), (format!("ratio[N={}]", 2 * res.n), r2)],
                    within_factor_two(r, r2),
                    RATIO_LABEL.to_string(),
                ),
                _ => (Vec::new(), false, "weighted norm not integrable at 0".to_string()),
            };
            let mut rep = ExperimentReport {
                name: format!("weighted_carleson[{}][p={p},alpha={alpha}]", w.label()),
                kind: ReportKind::Ratio,
                inputs: json!({ "weight": w, "p": p, "alpha": alpha, "corpus_size": active.len() }),
                residuals_or_ratios: vals,
                tolerance: 2.0,
                passed,
                runtime_ms: 0,
                resolution: res,
                seed,
                note,
            }
            .with_runtime(start);
            rep.runtime_ms += setup_ms;
            rep
        })
        .collect())
}

/// `a` values straddling `±(2α+2)` and `b` values straddling `±1`.
pub fn bcv_lattice(alpha: f64) -> (Vec<f64>, Vec<f64>) {
    let edge = 2.0 * alpha + 2.0;
    (
        vec![-1.25 * edge, -0.75 * edge, 0.0, 0.75 * edge, 1.25 * edge],
        vec![-1.5, -0.5, 0.0, 0.5, 1.5],
    )
}

/// Carleson ratios for `w_{a,b}` on the lattice of [`bcv_lattice`], with
/// the rectangle `−(2α+2) < a < 2α+2`, `−1 < b < 1` marked. Passes when
/// every marked point has a finite ratio stable within a factor 2.
pub fn bcv_lattice_sweep(gate: &GatePass, res: Resolution, p: f64, alpha: f64, seed: u64) -> Result<ExperimentReport> {
    let start = Instant::now();
    let (a_vals, b_vals) = bcv_lattice(alpha);
    let edge = 2.0 * alpha + 2.0;
    let weights: Vec<Weight<f64>> = a_vals.iter().flat_map(|&a| b_vals.iter().map(move |&b| Weight::w_ab(a, b))).collect();
    let rows = weighted_carleson_sweep(gate, res, &weights, p, alpha, seed)?;
    let mut vals = Vec::new();
    let mut inside = Vec::new();
    let mut non_integrable = Vec::new();
    let mut passed = true;
    for (w, r) in weights.iter().zip(&rows) {
        let (a, b) = match *w {
            Weight::Wab { a, b } => (a, b),
            Weight::Power { .. } => unreachable!("lattice holds w_ab weights only"),
        };
        let key = format!("a={a},b={b}");
        let marked = -edge < a && a < edge && -1.0 < b && b < 1.0;
        if marked {
            inside.push(key.clone());
            passed &= r.passed;
        }
        if r.residuals_or_ratios.is_empty() {
            non_integrable.push(key);
            continue;
        }
        for (label, v) in &r.residuals_or_ratios {
            vals.push((format!("{label}[{key}]"), *v));
        }
    }
    Ok(ExperimentReport {
        name: format!("bcv_lattice[p={p},alpha={alpha}]"),
        kind: ReportKind::Table,
        inputs: json!({
            "p": p, "alpha": alpha, "a": a_vals, "b": b_vals,
            "rectangle": { "a": [-edge, edge], "b": [-1.0, 1.0] },
            "inside": inside, "non_integrable": non_integrable,
        }),
        residuals_or_ratios: vals,
        tolerance: 2.0,
        passed,
        runtime_ms: 0,
        resolution: res,
        seed,
        note: RATIO_LABEL.into(),
    }
    .with_runtime(start))
}

/// The measure-adapted Muckenhoupt predicate beside the proved `A_p^α`
/// test. Reports carry no pass/fail meaning.
pub fn measure_ap_sweep(weights: &[Weight<f64>], p: f64, alpha: f64) -> Result<Vec<ExperimentReport>> {
    let o = Order::new(alpha)?;
    weights
        .iter()
        .map(|w| {
            let start = Instant::now();
            let (member, est) = measure_ap_check(w, p, o, DEFAULT_INTERVAL_SAMPLES)?;
            let proved = ap_alpha_check(w, p, o)?;
            Ok(ExperimentReport {
                name: format!("measure_ap[{}][p={p},alpha={alpha}]", w.label()),
                kind: ReportKind::Experimental,
                inputs: json!({ "weight": w, "p": p, "alpha": alpha }),
                residuals_or_ratios: vec![
                    ("measure_ap_estimate".into(), est),
                    ("measure_ap_member".into(), f64::from(u8::from(member))),
                    ("ap_alpha_member".into(), f64::from(u8::from(proved))),
                ],
                tolerance: f64::INFINITY,
                passed: true,
                runtime_ms: 0,
                resolution: Resolution::default(),
                seed: 0,
                note: "experimental: no pass/fail semantics".into(),
            }
            .with_runtime(start))
        })
        .collect()
}
