//! One pass/fail line per acceptance criterion, written straight to stderr
//! so the lines survive output capture.

use std::io::Write;
use std::time::Instant;

use dunkl_osc::funcspace::{default_corpus, Domain};
use dunkl_osc::harness::*;
use dunkl_osc::projections::{DunklProjector, ThresholdSeq};
use dunkl_osc::seminorms::{oscillation, sample_cut_indices, variation, CutSequence};
use dunkl_osc::special::Order;
use dunkl_osc::weights::{ap_check, ap_closed, NormSpec, Weight, DEFAULT_INTERVAL_SAMPLES};

const SEED: u64 = 7;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn line(k: usize, title: &str, o: &Outcome) {
    let tag = if o.passed { "PASS" } else { "FAIL" };
    let _ = writeln!(std::io::stderr(), "acceptance {k:>2} [{tag}] {title}: {}", o.detail);
}

fn spec(p: f64, beta: f64, alpha: f64) -> NormSpec<f64> {
    NormSpec::new(p, beta, Order::new(alpha).unwrap()).unwrap()
}

fn worst(reports: &[ExperimentReport], prefix: &str, alphas: Option<&[f64]>) -> (bool, f64, usize) {
    let sel: Vec<&ExperimentReport> = reports
        .iter()
        .filter(|r| r.name.starts_with(prefix))
        .filter(|r| match alphas {
            Some(a) => r.inputs["alpha"].as_f64().is_some_and(|x| a.contains(&x)),
            None => true,
        })
        .collect();
    let ok = !sel.is_empty() && sel.iter().all(|r| r.passed);
    (ok, sel.iter().map(|r| r.max_value()).fold(0.0, f64::max), sel.len())
}

fn identity_line(reports: &[ExperimentReport], prefix: &str, alphas: Option<&[f64]>) -> Outcome {
    let (ok, m, n) = worst(reports, prefix, alphas);
    outcome(ok, format!("{n} reports, max residual {m:.3e}"))
}

/// Oscillation never exceeds the 2-variation, node by node.
fn oscillation_below_variation() -> Outcome {
    let res = Resolution::default();
    let x = res.spatial().unwrap();
    let t = ThresholdSeq::default_grid(x.resolvable_frequency()).unwrap();
    let mut checked = 0usize;
    let mut worst_gap = f64::NEG_INFINITY;
    for a in [0.0, 1.0] {
        let proj = DunklProjector::new(Order::new(a).unwrap(), x.clone()).unwrap();
        for e in default_corpus::<f64>(SEED) {
            let f = e.func.sample(x.clone(), Domain::FullLine).unwrap();
            let fam = proj.family(&f, &t).unwrap();
            let v2 = variation(&fam, 2.0).unwrap();
            for k in 0..100u64 {
                let j = 1 + (k as usize) % 8;
                let idx = sample_cut_indices(t.len(), j, SEED, k).unwrap();
                let seq = ThresholdSeq::new(idx.iter().map(|&i| t.values()[i]).collect()).unwrap();
                let o = oscillation(&fam, &CutSequence::new(seq, j).unwrap()).unwrap();
                for (u, v) in o.values().iter().zip(v2.values()) {
                    worst_gap = worst_gap.max(u.re - v.re);
                    checked += 1;
                }
            }
        }
    }
    outcome(worst_gap <= 0.0, format!("{checked} node checks, max(O - V2) = {worst_gap:.3e}"))
}

fn oscillation_evidence(gate: &GatePass) -> Outcome {
    let specs = [spec(2.0, 0.0, 0.0), spec(2.0, 0.0, 1.0), spec(3.0, 0.0, -0.5)];
    let mut ok = true;
    let mut parts = Vec::new();
    for variant in [CutVariant::Full, CutVariant::Dyadic] {
        let settings = OscillationSettings { variant, ..Default::default() };
        for r in oscillation_ratio_sweep(gate, Resolution::default(), &specs, settings).unwrap() {
            let in_range = r.inputs["in_range"].as_bool() == Some(true);
            let fast = r.runtime_ms <= 60_000;
            ok &= in_range && r.passed && fast;
            let dev = r.value("dilation_deviation[lambda=0.5]").unwrap().max(r.value("dilation_deviation[lambda=2]").unwrap());
            parts.push(format!(
                "{} ratio {:.4}/{:.4} dev {:.1e} {} ms",
                r.name,
                r.value("ratio[N=512]").unwrap(),
                r.value("ratio[N=1024]").unwrap(),
                dev,
                r.runtime_ms
            ));
        }
    }
    outcome(ok, parts.join("; "))
}

fn prestini(gate: &GatePass) -> Outcome {
    let ladder = [Resolution::default(), Resolution::default().refined()];
    let reports = prestini_constant_sweep(gate, &[-0.5, 0.0, 1.0], &ladder, SEED).unwrap();
    let ok = reports.iter().all(|r| r.passed);
    let d: Vec<String> = reports
        .iter()
        .map(|r| format!("{} C = {:.4}/{:.4}", r.name, r.residuals_or_ratios[0].1, r.residuals_or_ratios[1].1))
        .collect();
    outcome(ok, d.join("; "))
}

fn weight_criteria() -> Outcome {
    let mut mismatches = Vec::new();
    let mut n = 0;
    for p in [1.5f64, 2.0, 3.0] {
        for beta in [-1.5, -0.9, 0.0, 0.5, p - 1.1, p - 0.9] {
            let w = Weight::power(beta);
            let (m, _) = ap_check(&w, p, DEFAULT_INTERVAL_SAMPLES).unwrap();
            n += 1;
            if m != (-1.0 < beta && beta < p - 1.0) || m != ap_closed(&w, p) {
                mismatches.push(format!("power({beta}) p={p}"));
            }
        }
    }
    let lattice = [-1.5, -0.5, 0.0, 0.5, 1.5];
    for a in lattice {
        for b in lattice {
            let (m, _) = ap_check(&Weight::w_ab(a, b), 2.0, DEFAULT_INTERVAL_SAMPLES).unwrap();
            n += 1;
            let want = (-1.0 < a && a < 1.0) && (-1.0 < b && b < 1.0);
            if m != want {
                mismatches.push(format!("w_ab({a},{b})"));
            }
        }
    }
    outcome(mismatches.is_empty(), format!("{n} classifications, mismatches: {mismatches:?}"))
}

fn transference(gate: &GatePass) -> Outcome {
    let res = Resolution::default();
    let l2 = spec(2.0, 0.0, -0.5);
    let dyadic = MultiplierFamily::dyadic_indicators(-2, 4).unwrap();
    let uneven = MultiplierFamily::indicators(&[0.0, 0.7, 1.9, 3.3, f64::INFINITY]).unwrap();
    let mut ok = true;
    let mut parts = Vec::new();
    for (fam, n) in [(&dyadic, 3), (&uneven, 2)] {
        let r = transference_demo(gate, fam, &l2, n, res).unwrap();
        let gap = r.value("abs_difference").unwrap();
        ok &= r.passed && gap <= 1e-6;
        parts.push(format!("{} |F - H| = {gap:.3e}", r.name));
    }
    let r = transference_demo(gate, &uneven, &spec(3.0, 0.0, -0.5), 2, res).unwrap();
    let (h, h2) = (r.value("hankel_ratio[N=512]").unwrap(), r.value("hankel_ratio[N=1024]").unwrap());
    ok &= r.passed && h.is_finite();
    parts.push(format!("{} hankel {h:.4}/{h2:.4}", r.name));
    outcome(ok, parts.join("; "))
}

fn fingerprint(reports: &[ExperimentReport]) -> Vec<Vec<(String, u64)>> {
    reports.iter().map(|r| r.fingerprint()).collect()
}

fn determinism(gate: &GatePass) -> Outcome {
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            let mut all = run_identity_suite(Resolution::new(256).unwrap(), &[-0.5, 1.0], SEED).unwrap();
            let specs = [spec(2.0, 0.0, 0.0)];
            all.extend(oscillation_ratio_sweep(gate, Resolution::default(), &specs, OscillationSettings::default()).unwrap());
            let fam = MultiplierFamily::dyadic_indicators(-2, 4).unwrap();
            all.push(transference_demo(gate, &fam, &spec(3.0, 0.0, -0.5), 2, Resolution::default()).unwrap());
            fingerprint(&all)
        })
    };
    let one = run(1);
    let four = run(4);
    let again = run(4);
    let n: usize = one.iter().map(|r| r.len()).sum();
    outcome(one == four && four == again, format!("{n} numbers compared across threads 1, 4, 4"))
}

#[test]
fn acceptance_criteria() {
    let mut results: Vec<(usize, &str, Outcome)> = Vec::new();
    let alphas = [-0.5, 0.0, 0.5, 1.0];

    let start = Instant::now();
    let suite = run_identity_suite(Resolution::default(), &alphas, SEED).unwrap();
    let suite_s = start.elapsed().as_secs_f64();

    let mut c1 = identity_line(&suite, "plancherel", None);
    c1.passed &= suite_s <= 10.0;
    c1.detail = format!("{}, whole identity suite {suite_s:.1} s", c1.detail);
    results.push((1, "Plancherel", c1));
    results.push((2, "Inversion", identity_line(&suite, "inversion", None)));
    results.push((3, "Fourier reduction", identity_line(&suite, "fourier_reduction", None)));
    let (ok_a, m_a, n_a) = worst(&suite, "two_route", None);
    let (ok_b, m_b, n_b) = worst(&suite, "partial_sum_decomposition", None);
    results.push((
        4,
        "Decomposition",
        outcome(ok_a && ok_b, format!("two-route {n_a} reports max {m_a:.3e}; partial sums {n_b} reports max {m_b:.3e}")),
    ));
    results.push((5, "Projection algebra", identity_line(&suite, "projection_algebra", Some(&[-0.5, 0.0, 1.0]))));
    results.push((6, "Conjugation", identity_line(&suite, "conjugation", None)));
    let (ok_a, m_a, n_a) = worst(&suite, "transplant_identity", None);
    let (ok_b, m_b, n_b) = worst(&suite, "transplant_roundtrip", None);
    results.push((
        7,
        "Transplantation",
        outcome(ok_a && ok_b, format!("T_aa {n_a} reports max {m_a:.3e}; round trip {n_b} reports max {m_b:.3e}")),
    ));

    let gate = identity_gate(Resolution::default(), &alphas, SEED);
    let gated = |f: &dyn Fn(&GatePass) -> Outcome| match &gate {
        Ok(g) => f(g),
        Err(e) => outcome(false, format!("sweep refused: {e}")),
    };
    results.push((8, "Prestini domination", gated(&prestini)));
    results.push((9, "Oscillation vs variation", oscillation_below_variation()));
    results.push((10, "Oscillation norm evidence", gated(&oscillation_evidence)));
    results.push((11, "Weight criteria", weight_criteria()));
    results.push((12, "Transference", gated(&transference)));
    results.push((13, "Determinism", gated(&determinism)));

    for (k, title, o) in &results {
        line(*k, title, o);
    }
    let failed: Vec<usize> = results.iter().filter(|r| !r.2.passed).map(|r| r.0).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
