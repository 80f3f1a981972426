use std::sync::Arc;
use std::time::Instant;

use num_complex::Complex;
use rayon::prelude::*;
use serde_json::json;

use super::report::ExperimentReport;
use super::{diff, l2, rel, sample, Resolution};
use crate::error::{Error, Result};
use crate::funcspace::{default_corpus, even_odd_split, multiply_power, CorpusEntry, Grid, MultExponent, SampledFn};
use crate::projections::{divide_by_x, lift_half, DunklProjector, HankelProjector};
use crate::special::Order;
use crate::transforms::{Boundary, DirectOperator, DunklOperator, DunklTransplant};

/// Order pairs `(α, γ)` for the `T_{γα} ∘ T_{αγ}` round trip.
pub const TRANSPLANT_PAIRS: [(f64, f64); 2] = [(-0.5, 0.5), (0.0, 1.0)];

const TOL_PLANCHEREL: f64 = 1e-6;
const TOL_INVERSION: f64 = 1e-6;
const TOL_FOURIER: f64 = 1e-9;
const TOL_TWO_ROUTE: f64 = 1e-9;
const TOL_DECOMPOSITION: f64 = 1e-8;
const TOL_CONJUGATION: f64 = 1e-8;
const TOL_PROJECTION: f64 = 1e-8;
const TOL_TRANSPLANT_ID: f64 = 1e-6;
const TOL_ROUNDTRIP: f64 = 1e-5;

const THRESHOLDS: [f64; 4] = [0.5, 1.0, 2.0, 4.0];

/// Proof that the identity suite passed at one resolution for a set of
/// orders. Ratio sweeps require one.
#[derive(Debug, Clone)]
pub struct GatePass {
    resolution: Resolution,
    alphas: Vec<f64>,
    seed: u64,
}

impl GatePass {
    pub fn resolution(&self) -> Resolution {
        self.resolution
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alphas
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub(crate) fn require(&self, res: &Resolution, alpha: f64) -> Result<()> {
        if *res != self.resolution {
            return Err(Error::Gate(format!("identity suite was run at N = {}, not N = {}", self.resolution.n, res.n)));
        }
        if !self.alphas.contains(&alpha) {
            return Err(Error::Gate(format!("identity suite did not cover alpha = {alpha}")));
        }
        Ok(())
    }
}

/// Runs the identity suite and returns a [`GatePass`] if every report
/// passed, [`Error::Gate`] naming the failures otherwise.
pub fn identity_gate(res: Resolution, alphas: &[f64], seed: u64) -> Result<GatePass> {
    let reports = run_identity_suite(res, alphas, seed)?;
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed).map(|r| r.name.as_str()).collect();
    if !failed.is_empty() {
        return Err(Error::Gate(format!("{} identity checks failed: {}", failed.len(), failed.join(", "))));
    }
    Ok(GatePass { resolution: res, alphas: alphas.to_vec(), seed })
}

/// All identities on the default corpus for each `α`. Failures are
/// reported, not raised; errors mean invalid arguments.
pub fn run_identity_suite(res: Resolution, alphas: &[f64], seed: u64) -> Result<Vec<ExperimentReport>> {
    run_identity_suite_on(res, alphas, seed, &default_corpus(seed))
}

pub fn run_identity_suite_on(
    res: Resolution,
    alphas: &[f64],
    seed: u64,
    corpus: &[CorpusEntry<f64>],
) -> Result<Vec<ExperimentReport>> {
    let ctx = Ctx::new(res, seed)?;
    let mut out = ctx.fourier_reduction(corpus)?;
    for &a in alphas {
        out.extend(ctx.for_order(Order::new(a)?, corpus)?);
    }
    for (a, g) in TRANSPLANT_PAIRS {
        out.extend(ctx.roundtrip(Order::new(a)?, Order::new(g)?, corpus)?);
    }
    Ok(out)
}

struct Ctx {
    res: Resolution,
    seed: u64,
    x: Arc<Grid<f64>>,
    xi: Arc<Grid<f64>>,
    half: Arc<Grid<f64>>,
}

fn inputs(identity: &str, alpha: Option<f64>, e: &CorpusEntry<f64>) -> serde_json::Value {
    json!({ "identity": identity, "alpha": alpha, "function": e.name })
}

fn name(identity: &str, alpha: Option<f64>, e: &CorpusEntry<f64>) -> String {
    match alpha {
        Some(a) => format!("{identity}[alpha={a}][{}]", e.name),
        None => format!("{identity}[{}]", e.name),
    }
}

fn one() -> Complex<f64> {
    Complex::new(1.0, 0.0)
}

impl Ctx {
    fn new(res: Resolution, seed: u64) -> Result<Self> {
        let x = res.spatial()?;
        let xi = res.frequency(&x)?;
        let half = Arc::new(x.positive_half()?);
        Ok(Ctx { res, seed, x, xi, half })
    }

    fn report(
        &self,
        identity: &str,
        alpha: Option<f64>,
        e: &CorpusEntry<f64>,
        residuals: Vec<(String, f64)>,
        tol: f64,
        start: Instant,
    ) -> ExperimentReport {
        ExperimentReport::identity(name(identity, alpha, e), inputs(identity, alpha, e), residuals, tol, self.res, self.seed)
            .with_runtime(start)
    }

    /// `|𝒟_{−1/2} f − 𝓕 f|` nodewise.
    fn fourier_reduction(&self, corpus: &[CorpusEntry<f64>]) -> Result<Vec<ExperimentReport>> {
        let d = DunklOperator::new(Order::new(-0.5)?, false, false, self.x.clone(), self.xi.clone())?;
        let f = DirectOperator::fourier(self.x.clone(), self.xi.clone())?;
        corpus
            .par_iter()
            .map(|e| {
                let start = Instant::now();
                let s = sample(e, &self.x)?;
                let r = d.apply(&s)?.max_abs_diff(&f.apply(&s)?)?;
                Ok(self.report("fourier_reduction", None, e, vec![("max_abs_diff".into(), r)], TOL_FOURIER, start))
            })
            .collect()
    }

    fn for_order(&self, o: Order<f64>, corpus: &[CorpusEntry<f64>]) -> Result<Vec<ExperimentReport>> {
        let a = o.alpha();
        let ex = o.measure_exponent();
        let fwd = DunklOperator::new(o, false, false, self.x.clone(), self.xi.clone())?;
        let inv = DunklOperator::new(o, false, true, self.xi.clone(), self.x.clone())?;
        let direct = DirectOperator::dunkl(o, self.x.clone(), self.xi.clone())?;
        let modified = DunklOperator::new(o, true, false, self.x.clone(), self.xi.clone())?;
        let full = DunklProjector::new(o, self.x.clone())?;
        let even = HankelProjector::new(o, self.half.clone(), Boundary::Neumann)?;
        let odd = HankelProjector::new(o.shifted(), self.half.clone(), Boundary::Dirichlet)?;
        let taa = DunklTransplant::new(o, o, self.x.clone())?;
        let alpha = Some(a);

        let per_fn = corpus
            .par_iter()
            .map(|e| -> Result<Vec<ExperimentReport>> {
                let f = sample(e, &self.x)?;
                let nf = l2(&f, ex);
                let mut reps = Vec::new();

                let start = Instant::now();
                let g = fwd.apply(&f)?;
                let ng = l2(&g, ex);
                let r = if nf == 0.0 && ng == 0.0 { 0.0 } else { (ng / nf - 1.0).abs() };
                reps.push(self.report("plancherel", alpha, e, vec![("abs_ratio_minus_one".into(), r)], TOL_PLANCHEREL, start));

                let start = Instant::now();
                let back = inv.apply(&g)?;
                let r = rel(l2(&diff(&back, &f)?, ex), nf);
                reps.push(self.report("inversion", alpha, e, vec![("rel_l2".into(), r)], TOL_INVERSION, start));

                let start = Instant::now();
                let r = g.max_abs_diff(&direct.apply(&f)?)?;
                reps.push(self.report("two_route", alpha, e, vec![("max_abs_diff".into(), r)], TOL_TWO_ROUTE, start));

                let start = Instant::now();
                let (fe, fo) = even_odd_split(&f)?;
                let q = divide_by_x(&fo);
                let mut res = Vec::new();
                for t in THRESHOLDS {
                    let s = full.partial_sum(&f, t)?;
                    let se = lift_half(&even.partial_sum(&fe, t)?, &self.x, false)?;
                    let so = lift_half(&odd.partial_sum(&q, t)?, &self.x, true)?;
                    let rhs = se.combine(one(), &so, one())?;
                    res.push((format!("t={t}"), s.max_abs_diff(&rhs)?));
                }
                reps.push(self.report("partial_sum_decomposition", alpha, e, res, TOL_DECOMPOSITION, start));

                let start = Instant::now();
                let sums: Vec<SampledFn<f64>> = THRESHOLDS.iter().map(|&t| full.partial_sum(&f, t)).collect::<Result<_>>()?;
                let mut res = Vec::new();
                for (i, &t) in THRESHOLDS.iter().enumerate() {
                    for (j, &s) in THRESHOLDS.iter().enumerate() {
                        let sst = full.partial_sum(&sums[i], s)?;
                        res.push((format!("s={s},t={t}"), sst.max_abs_diff(&sums[i.min(j)])?));
                    }
                }
                reps.push(self.report("projection_algebra", alpha, e, res, TOL_PROJECTION, start));

                if e.away_from_zero {
                    let start = Instant::now();
                    let mf = multiply_power(&f, MultExponent(a + 0.5))?;
                    let conj = multiply_power(&modified.apply(&mf)?, MultExponent(-(a + 0.5)))?;
                    let r = g.max_abs_diff(&conj)?;
                    reps.push(self.report("conjugation", alpha, e, vec![("max_abs_diff".into(), r)], TOL_CONJUGATION, start));

                    let start = Instant::now();
                    let r = rel(l2(&diff(&taa.apply(&f)?, &f)?, 0.0), l2(&f, 0.0));
                    reps.push(self.report("transplant_identity", alpha, e, vec![("rel_l2".into(), r)], TOL_TRANSPLANT_ID, start));
                }
                Ok(reps)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(per_fn.into_iter().flatten().collect())
    }

    /// `T_{γα} ∘ T_{αγ} f = f` on the away-from-zero corpus.
    fn roundtrip(&self, a: Order<f64>, g: Order<f64>, corpus: &[CorpusEntry<f64>]) -> Result<Vec<ExperimentReport>> {
        let fwd = DunklTransplant::new(a, g, self.x.clone())?;
        let back = DunklTransplant::new(g, a, self.x.clone())?;
        let label = format!("transplant_roundtrip[gamma={}]", g.alpha());
        corpus
            .par_iter()
            .filter(|e| e.away_from_zero)
            .map(|e| {
                let start = Instant::now();
                let f = sample(e, &self.x)?;
                let r = rel(l2(&diff(&back.apply(&fwd.apply(&f)?)?, &f)?, 0.0), l2(&f, 0.0));
                let mut rep = self.report(&label, Some(a.alpha()), e, vec![("rel_l2".into(), r)], TOL_ROUNDTRIP, start);
                rep.inputs["gamma"] = json!(g.alpha());
                Ok(rep)
            })
            .collect()
    }
}
