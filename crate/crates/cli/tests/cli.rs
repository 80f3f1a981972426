use std::fs;
use std::path::Path;
use std::process::{Command, Output};
use std::sync::Arc;

use dunkl_osc::funcspace::io::read_sampled;
use dunkl_osc::funcspace::{default_corpus, make_graded_grid, Domain};
use dunkl_osc::special::Order;
use dunkl_osc::transforms::dunkl;
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_dunkl-osc"));
    c.env_remove("DUNKL_OSC_THREADS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn p(dir: &Path, name: &str) -> String {
    dir.join(name).to_string_lossy().into_owned()
}

/// Report numbers without timings, for reproducibility comparisons.
fn numbers(jsonl: &str) -> Vec<Value> {
    jsonl
        .lines()
        .skip(1)
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["residuals_or_ratios"].clone())
        .collect()
}

#[test]
fn range_example() {
    let o = run(&["range", "--predicate", "full", "--p", "3", "--beta", "0", "--alpha", "0"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(v["result"], true);
    assert_eq!(v["predicate"], "full");
    assert!(v["formula"].as_str().unwrap().contains("p/2 - 1"));
    assert!(stderr(&o).contains("range full: true"));

    let o = run(&["range", "--predicate", "beta-star", "--p", "4", "--beta", "0", "--alpha", "0"]);
    let v: Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(v["result"].as_f64(), Some(1.0));
    let o = run(&["range", "--predicate", "transplant", "--p", "2", "--beta", "0.5", "--alpha", "-0.5", "--gamma", "0"]);
    let v: Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(v["result"], true);
}

#[test]
fn argument_errors_exit_two() {
    let o = run(&["range", "--predicate", "full", "--p", "1.5"]);
    assert_eq!(code(&o), 2);
    let o = run(&["range", "--predicate", "full", "--p", "3", "--nonsense", "1"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("Usage"));
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["range", "--predicate", "transplant", "--p", "2"])), 2);
    assert_eq!(code(&run(&["transform", "--kind", "dunkl", "--input", "/nonexistent/f.csv"])), 2);
    assert_eq!(code(&run(&["transform", "--kind", "dunkl", "--input", "corpus:nope"])), 2);
    let o = bin().args(["range", "--predicate", "dyadic", "--p", "2"]).env("DUNKL_OSC_THREADS", "many").output().unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn help_on_every_subcommand() {
    for sub in ["transform", "partial-sum", "family", "osc", "var", "maximal", "range", "verify", "sweep"] {
        let o = run(&[sub, "--help"]);
        assert_eq!(code(&o), 0, "{sub}");
        assert!(stdout(&o).contains("Usage"), "{sub}");
    }
}

#[test]
fn transform_writes_sampled_format() {
    let dir = tempfile::tempdir().unwrap();
    let out = p(dir.path(), "F.csv");
    let o = run(&["transform", "--kind", "dunkl", "--alpha", "0.5", "--input", "corpus:bump_c1_r2", "--n-panels", "4", "--output", &out]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).starts_with("transform dunkl"));
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("# dunkl-osc sampledfn v1 domain=full"));
    assert!(text.lines().nth(1).unwrap().starts_with("# run {\"command\":\"transform\""));
    let g = read_sampled::<f64, _>(fs::File::open(&out).unwrap()).unwrap();

    // same computation through the library, compared bitwise
    let x = Arc::new(make_graded_grid(-6.0, 6.0, 4, 32, 1.0).unwrap());
    let f = default_corpus::<f64>(7).into_iter().find(|e| e.name == "bump_c1_r2").unwrap().func.sample(x.clone(), Domain::FullLine).unwrap();
    let band = x.resolvable_frequency();
    let xi = Arc::new(make_graded_grid(-band, band, 8, 32, 1.0).unwrap());
    let want = dunkl(Order::new(0.5).unwrap(), &f, &xi).unwrap();
    assert_eq!(g.len(), want.len());
    for (a, b) in g.values().iter().zip(want.values()) {
        assert_eq!(a.re.to_bits(), b.re.to_bits());
        assert_eq!(a.im.to_bits(), b.im.to_bits());
    }

    // the written file is a valid input
    let back = p(dir.path(), "f.csv");
    let o = run(&["transform", "--kind", "dunkl", "--alpha", "0.5", "--inverse", "--input", &out, "--output", &back]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));

    let o = run(&["transform", "--kind", "hankel", "--alpha", "0", "--input", "corpus:bump_c0_r2.5", "--n-panels", "4", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["domain"], "half");
    assert_eq!(v["x"].as_array().unwrap().len(), v["re"].as_array().unwrap().len());
}

#[test]
fn operator_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let common = ["--input", "corpus:bump_c0.5_r3", "--n-panels", "4"];
    let cases: Vec<Vec<&str>> = vec![
        vec!["partial-sum", "--t", "2", "--alpha", "0"],
        vec!["partial-sum", "--t", "2", "--kind", "radial", "--dimension", "3"],
        vec!["partial-sum", "--t", "2", "--kind", "hankel", "--boundary", "dirichlet"],
        vec!["family", "--alpha", "1", "--t-grid", "dyadic:-2:3"],
        vec!["family", "--kind", "hankel", "--t-grid", "0.5,1,2"],
        vec!["osc", "--alpha", "0", "--j", "3", "--n-sequences", "4"],
        vec!["osc", "--alpha", "0", "--t-grid", "0.5,1,2,4", "--j", "2", "--cuts", "0.5,1,4"],
        vec!["var", "--alpha", "-0.5", "--r", "2.5"],
        vec!["maximal", "--op", "hardy-littlewood"],
        vec!["maximal", "--op", "conjugate-hardy"],
        vec!["maximal", "--op", "carleson-dunkl", "--alpha", "0.5"],
        vec!["maximal", "--op", "prestini", "--alpha", "0", "--t-grid", "dyadic:-1:1"],
    ];
    for (i, c) in cases.iter().enumerate() {
        let out = p(dir.path(), &format!("out{i}.csv"));
        let mut args = c.clone();
        args.extend(common);
        args.extend(["--output", &out]);
        let o = run(&args);
        assert_eq!(code(&o), 0, "{c:?}: {}", stderr(&o));
        let text = fs::read_to_string(&out).unwrap();
        assert!(text.starts_with("# dunkl-osc"), "{c:?}");
        assert!(text.contains("# run {"), "{c:?}");
    }
    let o = run(&["partial-sum", "--t", "1e6", "--input", "corpus:bump_c0.5_r3", "--n-panels", "4"]);
    assert_eq!(code(&o), 2, "threshold beyond the band");
}

#[test]
fn verify_reports_and_thread_independence() {
    let dir = tempfile::tempdir().unwrap();
    let a = p(dir.path(), "a.jsonl");
    let b = p(dir.path(), "b.jsonl");
    let summary = p(dir.path(), "s.csv");
    let o = run(&["verify", "--suite", "identities", "--alpha", "-0.5,1", "--seed", "7", "--threads", "1", "--output", &a, "--summary", &summary]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("passed"));
    let o = bin().args(["verify", "--alpha", "-0.5,1", "--seed", "7", "--output", &b]).env("DUNKL_OSC_THREADS", "3").output().unwrap();
    assert_eq!(code(&o), 0);
    let (ta, tb) = (fs::read_to_string(&a).unwrap(), fs::read_to_string(&b).unwrap());
    let first: Value = serde_json::from_str(ta.lines().next().unwrap()).unwrap();
    assert_eq!(first["run"]["options"]["report"]["seed"], 7);
    assert_eq!(numbers(&ta), numbers(&tb));
    assert!(ta.lines().skip(1).all(|l| serde_json::from_str::<Value>(l).unwrap()["passed"] == true));
    let s = fs::read_to_string(&summary).unwrap();
    assert_eq!(s.lines().next(), Some("name,passed,max_residual_or_ratio,runtime_ms"));
}

#[test]
fn identity_failure_exits_one() {
    let o = run(&["verify", "--alpha", "0", "--n-panels", "1"]);
    assert_eq!(code(&o), 1);
    let o = run(&["sweep", "--kind", "prestini", "--alpha", "0", "--n-panels", "1"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("identity gate failed"));
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = p(dir.path(), "run.cfg");
    fs::write(&cfg, "# range settings\npredicate = full\np = 3\nbeta = 5\nalpha=0\n").unwrap();
    let o = run(&["range", "--config", &cfg]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(v["result"], false);
    let o = run(&["range", "--config", &cfg, "--beta", "0"]);
    let v: Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(v["result"], true);
    assert_eq!(v["inputs"]["beta"].as_f64(), Some(0.0));

    fs::write(&cfg, "predicate=full\nbogus_key=1\n").unwrap();
    assert_eq!(code(&run(&["range", "--p", "3", "--config", &cfg])), 2);
    assert_eq!(code(&run(&["range", "--config", &p(dir.path(), "missing.cfg")])), 2);
}

#[test]
fn sweeps_run_behind_the_gate() {
    let dir = tempfile::tempdir().unwrap();
    let out = p(dir.path(), "t.jsonl");
    let o = run(&["sweep", "--kind", "transference", "--p", "2", "--beta", "0", "--dimension", "3", "--family", "dyadic:-2:4", "--output", &out]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = fs::read_to_string(&out).unwrap();
    let rep: Value = serde_json::from_str(text.lines().nth(1).unwrap()).unwrap();
    assert_eq!(rep["passed"], true);
    assert_eq!(rep["note"], "empirical lower bound of the operator norm");

    let o = run(&["sweep", "--experimental", "conjecture", "--weights", "power:0.5,wab:0.2:-0.3", "--p", "2", "--alpha", "0"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().count(), 3);
    assert_eq!(code(&run(&["sweep"])), 2);
}
