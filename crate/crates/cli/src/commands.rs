use std::io::Write;
use std::sync::Arc;

use dunkl_osc::classical_ops::{conjugate_hardy, carleson_hunt, hardy_littlewood_max, maximal_hilbert, prestini_majorant, SupGrid};
use dunkl_osc::funcspace::{make_graded_grid, Domain, Grid, SampledFn};
use dunkl_osc::harness::*;
use dunkl_osc::projections::{
    build_family, build_hankel_family, dunkl_partial_sum, fourier_partial_sum, hankel_partial_sum_with, radial_partial_sum,
    PartialSumFamily, ThresholdSeq,
};
use dunkl_osc::seminorms::{carleson_dunkl_max, max_oscillation_over_sampled_sequences, oscillation, variation, CutSequence};
use dunkl_osc::special::Order;
use dunkl_osc::transforms::{
    dunkl, dunkl_inverse, dunkl_modified, dunkl_modified_inverse, fourier, hankel, hankel_modified, Boundary,
};
use dunkl_osc::weights::{
    ap_alpha_check, beta_star, range_dyadic_oscillation, range_full_oscillation, transplant_range, NormSpec, Weight,
};
use serde_json::json;

use crate::args::*;
use crate::inputs::{self, destination, header, load, t_grid, with_run_line, writer};
use crate::Failure;

/// Summary line and whether the data went to standard output (the summary
/// then goes to standard error).
pub struct Done {
    pub summary: String,
    pub data_on_stdout: bool,
}

/// The value as spelled on the command line.
fn cli_name<V: clap::ValueEnum>(v: &V) -> String {
    v.to_possible_value().map_or_else(String::new, |p| p.get_name().to_string())
}

fn done(summary: String, output: &Option<std::path::PathBuf>) -> Done {
    Done { summary, data_on_stdout: output.is_none() }
}

fn order(a: f64) -> Result<Order<f64>, Failure> {
    Ok(Order::new(a)?)
}

pub fn dispatch(cmd: Command) -> Result<Done, Failure> {
    match cmd {
        Command::Transform(a) => transform(&a),
        Command::PartialSum(a) => partial_sum(&a),
        Command::Family(a) => family_cmd(&a),
        Command::Osc(a) => osc(&a),
        Command::Var(a) => var(&a),
        Command::Maximal(a) => maximal(&a),
        Command::Range(a) => range(&a),
        Command::Verify(a) => verify(&a),
        Command::Sweep(a) => sweep(&a),
    }
}

/// Output grid at twice the input's panel count, up to the resolvable band.
fn frequency_grid(f: &SampledFn<f64>, npp: usize) -> Result<Arc<Grid<f64>>, Failure> {
    let band = f.grid().resolvable_frequency();
    let panels = (2 * f.len()).div_ceil(npp).max(1);
    Ok(Arc::new(match f.domain() {
        Domain::FullLine => make_graded_grid(-band, band, panels / 2, npp, 1.0)?,
        Domain::HalfLine => make_graded_grid(0.0, band, panels, npp, 1.0)?,
    }))
}

fn transform(a: &TransformArgs) -> Result<Done, Failure> {
    let half = matches!(a.kind, TransformName::Hankel | TransformName::HankelModified);
    let f = load(&a.io, if half { Domain::HalfLine } else { Domain::FullLine })?;
    let out = frequency_grid(&f, a.io.resolution.nodes_per_panel)?;
    let o = order(a.alpha)?;
    if a.inverse && half {
        return Err(Failure::Usage("Hankel transforms are their own inverses; drop --inverse".into()));
    }
    let g = match (a.kind, a.inverse) {
        (TransformName::Fourier, false) => fourier(&f, &out)?,
        (TransformName::Fourier, true) => dunkl_inverse(order(-0.5)?, &f, &out)?,
        (TransformName::Hankel, _) => hankel(o, &f, &out)?,
        (TransformName::HankelModified, _) => hankel_modified(o, &f, &out)?,
        (TransformName::Dunkl, false) => dunkl(o, &f, &out)?,
        (TransformName::Dunkl, true) => dunkl_inverse(o, &f, &out)?,
        (TransformName::DunklModified, false) => dunkl_modified(o, &f, &out)?,
        (TransformName::DunklModified, true) => dunkl_modified_inverse(o, &f, &out)?,
    };
    inputs::write_fn(&g, &a.io, &header("transform", a)?)?;
    let kind = cli_name(&a.kind);
    Ok(done(format!("transform {kind}: {} samples written to {}", g.len(), destination(&a.io.output)), &a.io.output))
}

fn boundary(b: BoundaryName) -> Boundary {
    match b {
        BoundaryName::Neumann => Boundary::Neumann,
        BoundaryName::Dirichlet => Boundary::Dirichlet,
    }
}

fn partial_sum(a: &PartialSumArgs) -> Result<Done, Failure> {
    let s = match a.kind {
        SumKind::Dunkl => dunkl_partial_sum(order(a.alpha)?, &load(&a.io, Domain::FullLine)?, a.t)?,
        SumKind::Fourier => fourier_partial_sum(&load(&a.io, Domain::FullLine)?, a.t)?,
        SumKind::Hankel => hankel_partial_sum_with(order(a.alpha)?, &load(&a.io, Domain::HalfLine)?, a.t, boundary(a.boundary))?,
        SumKind::Radial => radial_partial_sum(a.dimension, &load(&a.io, Domain::HalfLine)?, a.t)?,
    };
    inputs::write_fn(&s, &a.io, &header("partial-sum", a)?)?;
    Ok(done(format!("partial-sum t={}: {} samples written to {}", a.t, s.len(), destination(&a.io.output)), &a.io.output))
}

fn build(p: &FamilyParams, io: &IoArgs) -> Result<PartialSumFamily<f64>, Failure> {
    let o = order(p.alpha)?;
    Ok(match p.kind {
        FamilyKind::Dunkl => {
            let f = load(io, Domain::FullLine)?;
            let t = t_grid(&p.t_grid, f.grid().resolvable_frequency())?;
            build_family(o, &f, &t)?
        }
        FamilyKind::Hankel => {
            let f = load(io, Domain::HalfLine)?;
            let t = t_grid(&p.t_grid, f.grid().resolvable_frequency())?;
            build_hankel_family(o, &f, &t)?
        }
    })
}

fn family_cmd(a: &FamilyArgs) -> Result<Done, Failure> {
    let fam = build(&a.family, &a.io)?;
    let head = header("family", a)?;
    let mut out = writer(&a.io.output)?;
    match a.io.format {
        Format::Csv => {
            let mut buf = Vec::new();
            fam.write_csv(&mut buf)?;
            out.write_all(&with_run_line(buf, &head))?;
        }
        Format::Json => {
            let rows = fam.values();
            let doc = json!({
                "run": serde_json::from_str::<serde_json::Value>(&head).map_err(|e| Failure::Usage(e.to_string()))?,
                "t": fam.t_grid().values(),
                "x": fam.base().points(),
                "re": rows.iter().map(|r| r.iter().map(|v| v.re).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "im": rows.iter().map(|r| r.iter().map(|v| v.im).collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            writeln!(out, "{}", to_json_17(&doc)?)?;
        }
    }
    out.flush()?;
    Ok(done(
        format!("family: {} thresholds x {} nodes written to {}", fam.n_rows(), fam.n_points(), destination(&a.io.output)),
        &a.io.output,
    ))
}

fn osc(a: &OscArgs) -> Result<Done, Failure> {
    let fam = build(&a.family, &a.io)?;
    let o = match &a.cuts {
        Some(c) => oscillation(&fam, &CutSequence::new(ThresholdSeq::new(c.clone())?, a.j)?)?,
        None => max_oscillation_over_sampled_sequences(&fam, a.j, a.n_sequences, a.io.seed)?,
    };
    inputs::write_fn(&o, &a.io, &header("osc", a)?)?;
    Ok(done(format!("osc J={}: sup {} written to {}", a.j, inputs::fmt(o.sup_norm()), destination(&a.io.output)), &a.io.output))
}

fn var(a: &VarArgs) -> Result<Done, Failure> {
    let fam = build(&a.family, &a.io)?;
    let v = variation(&fam, a.r)?;
    inputs::write_fn(&v, &a.io, &header("var", a)?)?;
    Ok(done(format!("var r={}: sup {} written to {}", a.r, inputs::fmt(v.sup_norm()), destination(&a.io.output)), &a.io.output))
}

fn maximal(a: &MaximalArgs) -> Result<Done, Failure> {
    let half = a.op == MaximalOp::Prestini;
    let f = load(&a.io, if half { Domain::HalfLine } else { Domain::FullLine })?;
    let t = t_grid(&a.t_grid, f.grid().resolvable_frequency())?;
    let sup = SupGrid::default_for(f.grid(), &t)?;
    let m = match a.op {
        MaximalOp::HardyLittlewood => hardy_littlewood_max(&f, &sup)?,
        MaximalOp::ConjugateHardy => conjugate_hardy(&f)?,
        MaximalOp::MaximalHilbert => maximal_hilbert(&f, &sup)?,
        MaximalOp::CarlesonHunt => carleson_hunt(&f, &sup)?,
        MaximalOp::Prestini => prestini_majorant(order(a.alpha)?, &f, &sup)?,
        MaximalOp::CarlesonDunkl => carleson_dunkl_max(order(a.alpha)?, &f, &t)?,
    };
    inputs::write_fn(&m, &a.io, &header("maximal", a)?)?;
    Ok(done(format!("maximal {}: sup {} written to {}", cli_name(&a.op), inputs::fmt(m.sup_norm()), destination(&a.io.output)), &a.io.output))
}

fn range(a: &RangeArgs) -> Result<Done, Failure> {
    let o = order(a.alpha)?;
    let (result, formula) = match a.predicate {
        Predicate::Full => (
            json!(range_full_oscillation(a.p, a.beta, o)?),
            "p >= 2 and (-1 < beta + (alpha+1/2)(2-p) < p/2 - 1, or p = 2 and beta = 0)",
        ),
        Predicate::Dyadic => (json!(range_dyadic_oscillation(a.p, a.beta, o)), "p > 1 and -1 < beta + (alpha+1/2)(2-p) < p - 1"),
        Predicate::Transplant => {
            let g = a.gamma.ok_or_else(|| Failure::Usage("transplant needs --gamma".into()))?;
            (
                json!(transplant_range(a.p, a.beta, o, order(g)?)),
                "p > 1 and -1 - p*min(alpha+1/2, gamma+1/2) < beta < -1 + p*min(alpha+3/2, gamma+3/2)",
            )
        }
        Predicate::BetaStar => (json!(beta_star(a.beta, o, a.p)), "beta - (alpha+1/2)(2-p)"),
        Predicate::ApAlpha => (
            json!(ap_alpha_check(&Weight::power(a.beta), a.p, o)?),
            "|x|^beta in A_p^alpha: -1 < beta + (alpha+1/2)(2-p) < p - 1",
        ),
    };
    let doc = json!({
        "predicate": a.predicate,
        "inputs": { "p": a.p, "beta": a.beta, "alpha": a.alpha, "gamma": a.gamma },
        "result": result,
        "formula": formula,
    });
    let mut out = writer(&a.output)?;
    writeln!(out, "{}", to_json_17(&doc)?)?;
    out.flush()?;
    Ok(done(format!("range {}: {result}", doc["predicate"].as_str().unwrap_or("?")), &a.output))
}

fn write_reports(reports: &[ExperimentReport], r: &ReportArgs, head: &str) -> Result<(), Failure> {
    let mut out = writer(&r.output)?;
    match r.format {
        Format::Json => {
            writeln!(out, "{{\"run\":{head}}}")?;
            write_jsonl(reports, &mut out)?;
        }
        Format::Csv => {
            writeln!(out, "# run {head}")?;
            write_summary_csv(reports, &mut out)?;
        }
    }
    out.flush()?;
    if let Some(path) = &r.summary {
        let mut s = writer(&Some(path.clone()))?;
        write_summary_csv(reports, &mut s)?;
        s.flush()?;
    }
    Ok(())
}

fn tally(reports: &[ExperimentReport]) -> (usize, usize) {
    (reports.iter().filter(|r| r.passed).count(), reports.len())
}

fn verify(a: &VerifyArgs) -> Result<Done, Failure> {
    let res = inputs::resolution(&a.report.resolution)?;
    let reports = match a.suite {
        Suite::Identities => run_identity_suite(res, &a.alpha, a.report.seed)?,
    };
    write_reports(&reports, &a.report, &header("verify", a)?)?;
    let (ok, n) = tally(&reports);
    let worst = reports.iter().map(|r| r.max_value() / r.tolerance).fold(0.0, f64::max);
    let line = format!(
        "verify identities N={}: {ok}/{n} passed, worst residual/tolerance {}, reports in {}",
        res.n,
        inputs::fmt(worst),
        destination(&a.report.output)
    );
    if ok < n {
        return Err(Failure::Numerical(line));
    }
    Ok(done(line, &a.report.output))
}

fn sweep(a: &SweepArgs) -> Result<Done, Failure> {
    let r = &a.report;
    let head = header("sweep", a)?;
    if a.experimental == Some(Experimental::Conjecture) {
        let ws = a.weights.iter().map(|w| inputs::weight(w)).collect::<Result<Vec<_>, _>>()?;
        let mut reports = Vec::new();
        for &al in &a.alpha {
            reports.extend(measure_ap_sweep(&ws, a.p, al)?);
        }
        write_reports(&reports, r, &head)?;
        return Ok(done(format!("experimental conjecture: {} reports (no pass/fail), in {}", reports.len(), destination(&r.output)), &r.output));
    }
    let kind = a.kind.ok_or_else(|| Failure::Usage("sweep needs --kind or --experimental".into()))?;
    let res = inputs::resolution(&r.resolution)?;
    let alphas: Vec<f64> = if kind == SweepKind::Transference { vec![-0.5] } else { a.alpha.clone() };
    let gate = identity_gate(res, &alphas, r.seed)?;
    let reports = match kind {
        SweepKind::Oscillation | SweepKind::DyadicOscillation => {
            let specs = a.alpha.iter().map(|&al| Ok(NormSpec::new(a.p, a.beta, order(al)?)?)).collect::<Result<Vec<_>, Failure>>()?;
            let variant = if kind == SweepKind::Oscillation { CutVariant::Full } else { CutVariant::Dyadic };
            let settings = OscillationSettings { j: a.j, n_sequences: a.n_sequences, seed: r.seed, variant };
            oscillation_ratio_sweep(&gate, res, &specs, settings)?
        }
        SweepKind::Prestini => prestini_constant_sweep(&gate, &a.alpha, &[res, res.refined()], r.seed)?,
        SweepKind::Carleson => {
            let ws = a.weights.iter().map(|w| inputs::weight(w)).collect::<Result<Vec<_>, _>>()?;
            let mut v = Vec::new();
            for &al in &a.alpha {
                v.extend(weighted_carleson_sweep(&gate, res, &ws, a.p, al, r.seed)?);
            }
            v
        }
        SweepKind::Bcv => a.alpha.iter().map(|&al| bcv_lattice_sweep(&gate, res, a.p, al, r.seed)).collect::<Result<Vec<_>, _>>()?,
        SweepKind::Transference => {
            let fam = inputs::multiplier_family(&a.family)?;
            let spec = NormSpec::new(a.p, a.beta, order(-0.5)?)?;
            vec![transference_demo(&gate, &fam, &spec, a.dimension, res)?]
        }
    };
    write_reports(&reports, r, &head)?;
    let (ok, n) = tally(&reports);
    let kind = cli_name(&kind);
    Ok(done(format!("sweep {kind} N={}: {ok}/{n} passed, ratios are the {RATIO_LABEL}, reports in {}", res.n, destination(&r.output)), &r.output))
}
