use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use num_complex::Complex;
use rayon::prelude::*;
use serde_json::json;

use super::identity::GatePass;
use super::report::{ExperimentReport, ReportKind, RATIO_LABEL};
use super::{within_factor_two, Resolution};
use crate::error::{Error, Result};
use crate::funcspace::{default_corpus, even_odd_split, CorpusEntry, Domain, SampledFn, TestFn};
use crate::special::{radial_order, Order};
use crate::transforms::{Boundary, DunklBasis, HankelBasis};
use crate::weights::{beta_star, weighted_lp_norm, NormSpec, Weight};

/// Agreement required between the two sides for partitions at `p = 2, β = 0`.
const L2_TOL: f64 = 1e-6;

/// An even multiplier `m(ξ) = m(|ξ|)`, evaluated on `|ξ|`.
#[derive(Clone)]
pub enum Multiplier {
    /// Indicator of a union of half-open intervals `[lo, hi)` of `|ξ|`;
    /// `hi` may be infinite.
    Indicators(Vec<(f64, f64)>),
    Constant(f64),
    Closed(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl fmt::Debug for Multiplier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplier::Indicators(iv) => f.debug_tuple("Indicators").field(iv).finish(),
            Multiplier::Constant(c) => f.debug_tuple("Constant").field(c).finish(),
            Multiplier::Closed(_) => f.write_str("Closed(..)"),
        }
    }
}

impl Multiplier {
    pub fn eval(&self, xi: f64) -> f64 {
        let r = xi.abs();
        match self {
            Multiplier::Indicators(iv) => {
                if iv.iter().any(|&(lo, hi)| lo <= r && r < hi) {
                    1.0
                } else {
                    0.0
                }
            }
            Multiplier::Constant(c) => *c,
            Multiplier::Closed(m) => m(r),
        }
    }
}

/// A finite labelled family of even multipliers bounded by 1.
#[derive(Debug, Clone)]
pub struct MultiplierFamily {
    members: Vec<(String, Multiplier)>,
}

impl MultiplierFamily {
    pub fn new(members: Vec<(String, Multiplier)>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::Argument("multiplier family is empty".into()));
        }
        for (label, m) in &members {
            match m {
                Multiplier::Indicators(iv) => {
                    if iv.iter().any(|&(lo, hi)| !(lo >= 0.0 && lo < hi) || lo.is_nan()) {
                        return Err(Error::Argument(format!("{label}: intervals need 0 <= lo < hi")));
                    }
                }
                Multiplier::Constant(c) => {
                    if !(c.abs() <= 1.0) {
                        return Err(Error::Argument(format!("{label}: |m| must be at most 1")));
                    }
                }
                Multiplier::Closed(_) => {}
            }
        }
        Ok(MultiplierFamily { members })
    }

    /// The single member `m ≡ 1`.
    pub fn identity() -> Self {
        MultiplierFamily { members: vec![("one".into(), Multiplier::Constant(1.0))] }
    }

    /// `1_{[0, 2^kmin)}`, `1_{[2^k, 2^{k+1})}` for `kmin ≤ k < kmax`, and
    /// `1_{[2^kmax, ∞)}`, all in `|ξ|`: a partition of the frequency axis.
    pub fn dyadic_indicators(kmin: i32, kmax: i32) -> Result<Self> {
        if kmin >= kmax {
            return Err(Error::Argument("dyadic indicators need kmin < kmax".into()));
        }
        let mut breaks = vec![0.0];
        breaks.extend((kmin..=kmax).map(|k| 2f64.powi(k)));
        breaks.push(f64::INFINITY);
        Self::indicators(&breaks)
    }

    /// Indicators of `[b_i, b_{i+1})` for consecutive `breaks` (increasing).
    pub fn indicators(breaks: &[f64]) -> Result<Self> {
        if breaks.len() < 2 || breaks.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::Argument("breaks must be strictly increasing, at least two".into()));
        }
        Self::new(
            breaks
                .windows(2)
                .map(|w| (format!("[{},{})", w[0], w[1]), Multiplier::Indicators(vec![(w[0], w[1])])))
                .collect(),
        )
    }

    pub fn members(&self) -> &[(String, Multiplier)] {
        &self.members
    }

    pub fn labels(&self) -> Vec<String> {
        self.members.iter().map(|(l, _)| l.clone()).collect()
    }

    /// `Σ m² ≡ 1`, checked on `nodes`: the square function is then an
    /// isometry on `L²`.
    fn is_partition_on(&self, nodes: &[f64]) -> bool {
        nodes.iter().all(|&x| {
            let s: f64 = self.members.iter().map(|(_, m)| m.eval(x).powi(2)).sum();
            (s - 1.0).abs() <= 1e-15
        })
    }

    fn check_bounded_on(&self, nodes: &[f64]) -> Result<()> {
        for (label, m) in &self.members {
            if nodes.iter().any(|&x| !(m.eval(x).abs() <= 1.0)) {
                return Err(Error::Argument(format!("{label}: |m| must be at most 1")));
            }
        }
        Ok(())
    }
}

/// `(Σ_m |synthesize(m(|λ|)·c)|²)^{1/2}` at the grid nodes.
fn square_function(
    nodes: &[f64],
    coeffs: &[Complex<f64>],
    family: &MultiplierFamily,
    synth: impl Fn(&[Complex<f64>]) -> Result<SampledFn<f64>>,
    like: &SampledFn<f64>,
) -> Result<SampledFn<f64>> {
    let mut acc = vec![0.0; like.len()];
    for (_, m) in family.members() {
        let c: Vec<Complex<f64>> = coeffs.iter().zip(nodes).map(|(c, &l)| c * m.eval(l)).collect();
        let g = synth(&c)?;
        for (a, v) in acc.iter_mut().zip(g.values()) {
            *a += v.norm_sqr();
        }
    }
    like.with_values(acc.into_iter().map(|s| Complex::new(s.sqrt(), 0.0)).collect())
}

/// Max corpus ratios `(Fourier side, Hankel side)` at one resolution.
fn ratios_at(
    res: &Resolution,
    family: &MultiplierFamily,
    spec: &NormSpec<f64>,
    radial: Order<f64>,
    corpus: &[CorpusEntry<f64>],
) -> Result<(f64, f64, bool)> {
    let x = res.spatial()?;
    let half = Arc::new(x.positive_half()?);
    let fb = DunklBasis::new(Order::new(-0.5)?, x.clone(), false)?;
    let hb = HankelBasis::new(radial.alpha(), half, Boundary::Neumann, false)?;
    let (fnodes, hnodes) = (fb.lattice().nodes(), hb.lattice().nodes());
    family.check_bounded_on(fnodes)?;
    family.check_bounded_on(hnodes)?;
    let partition = family.is_partition_on(fnodes) && family.is_partition_on(hnodes);
    let hspec = NormSpec::new(spec.p(), beta_star(spec.beta(), radial, spec.p()), radial)?;
    let unit = Weight::unit();
    let per_fn = corpus
        .par_iter()
        .filter(|e| !matches!(e.func, TestFn::Zero))
        .map(|e| {
            let f = e.func.sample(x.clone(), Domain::FullLine)?;
            let sf = square_function(fnodes, &fb.analyze(&f)?, family, |c| fb.synthesize(c, c.len()), &f)?;
            let rf = weighted_lp_norm(&sf, spec, &unit)? / weighted_lp_norm(&f, spec, &unit)?;
            let (fe, _) = even_odd_split(&f)?;
            let ne = weighted_lp_norm(&fe, &hspec, &unit)?;
            let rh = if ne > 0.0 {
                let sh = square_function(hnodes, &hb.analyze(&fe)?, family, |c| hb.synthesize(c, c.len()), &fe)?;
                weighted_lp_norm(&sh, &hspec, &unit)? / ne
            } else {
                0.0
            };
            Ok((rf, rh))
        })
        .collect::<Result<Vec<_>>>()?;
    let rf = per_fn.iter().map(|r| r.0).fold(0.0, f64::max);
    let rh = per_fn.iter().map(|r| r.1).fold(0.0, f64::max);
    Ok((rf, rh, partition))
}

/// Square-function transference on the default corpus.
pub fn transference_demo(
    gate: &GatePass,
    family: &MultiplierFamily,
    spec: &NormSpec<f64>,
    dimension: usize,
    res: Resolution,
) -> Result<ExperimentReport> {
    transference_demo_on(gate, family, spec, dimension, res, &default_corpus(gate.seed()))
}

/// Fourier side: `‖(Σ_m |𝓕⁻¹ m 𝓕 f|²)^{1/2}‖ / ‖f‖` in `L^p(|x|^β dx)`.
/// Hankel side: the same with `ℋ_ν`, `ν = (n−2)/2`, on the even part of
/// `f` as a radial profile, in `L^p(r^{β*+n−1} dr)`. Both at `N` and `2N`.
///
/// Passes when both sides are stable within a factor 2 under refinement
/// and, for partitions at `p = 2, β = 0`, agree to `1e−6`.
pub fn transference_demo_on(
    gate: &GatePass,
    family: &MultiplierFamily,
    spec: &NormSpec<f64>,
    dimension: usize,
    res: Resolution,
    corpus: &[CorpusEntry<f64>],
) -> Result<ExperimentReport> {
    let start = Instant::now();
    let (p, beta) = (spec.p(), spec.beta());
    if !(-1.0 < beta && beta < p - 1.0) {
        return Err(Error::Argument(format!("transference needs -1 < beta < p - 1, got beta = {beta}, p = {p}")));
    }
    if spec.alpha().alpha() != -0.5 {
        return Err(Error::Argument("the Fourier-side norm has alpha = -1/2".into()));
    }
    gate.require(&res, -0.5)?;
    let radial = radial_order(dimension)?;
    let (rf, rh, partition) = ratios_at(&res, family, spec, radial, corpus)?;
    let (rf2, rh2, _) = ratios_at(&res.refined(), family, spec, radial, corpus)?;
    let l2_exact = partition && p == 2.0 && beta == 0.0;
    let gap = (rf - rh).abs();
    let passed = within_factor_two(rf, rf2) && within_factor_two(rh, rh2) && (!l2_exact || gap <= L2_TOL);
    let (n, n2) = (res.n, 2 * res.n);
    Ok(ExperimentReport {
        name: format!("transference[n={dimension}][p={p},beta={beta}]"),
        kind: ReportKind::Ratio,
        inputs: json!({
            "p": p, "beta": beta, "dimension": dimension, "beta_star": beta_star(beta, radial, p),
            "members": family.labels(), "partition": partition, "l2_exact": l2_exact,
        }),
        residuals_or_ratios: vec![
            (format!("fourier_ratio[N={n}]"), rf),
            (format!("hankel_ratio[N={n}]"), rh),
            (format!("fourier_ratio[N={n2}]"), rf2),
            (format!("hankel_ratio[N={n2}]"), rh2),
            ("abs_difference".into(), gap),
        ],
        tolerance: if l2_exact { L2_TOL } else { 2.0 },
        passed,
        runtime_ms: 0,
        resolution: res,
        seed: gate.seed(),
        note: RATIO_LABEL.into(),
    }
    .with_runtime(start))
}
