//! Input loading, grid and list parsing, and output writing.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::sync::Arc;

use dunkl_osc::funcspace::io::{fmt17, read_sampled, write_sampled};
use dunkl_osc::funcspace::{default_corpus, make_graded_grid, Domain, SampledFn};
use dunkl_osc::harness::{to_json_17, MultiplierFamily, Resolution};
use dunkl_osc::projections::ThresholdSeq;
use dunkl_osc::weights::Weight;
use serde::Serialize;
use serde_json::json;

use crate::args::{Format, IoArgs, ResolutionArgs};
use crate::Failure;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

pub fn resolution(r: &ResolutionArgs) -> Result<Resolution, Failure> {
    if r.grading != 1.0 {
        return Err(usage("harness grids use uniform panels; --grading must be 1"));
    }
    Ok(Resolution::with_panels(r.n_panels * r.nodes_per_panel, r.nodes_per_panel, r.window)?)
}

/// A SampledFn file, or `corpus:<name>` sampled on the `--n-panels` grid.
pub fn load(io: &IoArgs, domain: Domain) -> Result<SampledFn<f64>, Failure> {
    let f = if let Some(name) = io.input.strip_prefix("corpus:") {
        let r = &io.resolution;
        let grid = make_graded_grid(-r.window, r.window, r.n_panels, r.nodes_per_panel, r.grading)?;
        let grid = Arc::new(match domain {
            Domain::FullLine => grid,
            Domain::HalfLine => grid.positive_half()?,
        });
        let corpus = default_corpus::<f64>(io.seed);
        let entry = corpus.iter().find(|e| e.name == name).ok_or_else(|| {
            let names: Vec<&str> = corpus.iter().map(|e| e.name.as_str()).collect();
            usage(format!("unknown corpus function '{name}'; choose one of {}", names.join(", ")))
        })?;
        entry.func.sample(grid, domain)?
    } else {
        let file = File::open(&io.input).map_err(|e| usage(format!("cannot open {}: {e}", io.input)))?;
        read_sampled(file)?
    };
    if f.domain() != domain {
        return Err(usage(format!("{} holds a {}-line function; this command needs {}-line input", io.input, f.domain().tag(), domain.tag())));
    }
    Ok(f)
}

/// `default`, `dyadic:LO:HI`, `geometric:LO:HI:N` or a comma list.
pub fn t_grid(spec: &str, band: f64) -> Result<ThresholdSeq<f64>, Failure> {
    let bad = || usage(format!("bad t-grid '{spec}'"));
    let parts: Vec<&str> = spec.split(':').collect();
    let seq = match parts.as_slice() {
        ["default"] => ThresholdSeq::default_grid(band)?,
        ["dyadic", lo, hi] => ThresholdSeq::dyadic(lo.parse().map_err(|_| bad())?, hi.parse().map_err(|_| bad())?)?,
        ["geometric", lo, hi, n] => {
            ThresholdSeq::geometric(lo.parse().map_err(|_| bad())?, hi.parse().map_err(|_| bad())?, n.parse().map_err(|_| bad())?)?
        }
        [list] => ThresholdSeq::new(parse_list(list)?)?,
        _ => return Err(bad()),
    };
    Ok(seq)
}

pub fn parse_list(s: &str) -> Result<Vec<f64>, Failure> {
    s.split(',')
        .map(|v| {
            let v = v.trim();
            match v {
                "inf" | "infinity" => Ok(f64::INFINITY),
                _ => v.parse::<f64>().map_err(|_| usage(format!("not a number: '{v}'"))),
            }
        })
        .collect()
}

/// `power:BETA` or `wab:A:B`.
pub fn weight(s: &str) -> Result<Weight<f64>, Failure> {
    let num = |v: &str| v.parse::<f64>().map_err(|_| usage(format!("bad weight '{s}'")));
    match s.split(':').collect::<Vec<_>>().as_slice() {
        ["power", b] => Ok(Weight::power(num(b)?)),
        ["wab", a, b] => Ok(Weight::w_ab(num(a)?, num(b)?)),
        _ => Err(usage(format!("bad weight '{s}': use power:BETA or wab:A:B"))),
    }
}

/// `identity`, `dyadic:KMIN:KMAX` or increasing breaks.
pub fn multiplier_family(s: &str) -> Result<MultiplierFamily, Failure> {
    let int = |v: &str| v.parse::<i32>().map_err(|_| usage(format!("bad family '{s}'")));
    Ok(match s.split(':').collect::<Vec<_>>().as_slice() {
        ["identity"] => MultiplierFamily::identity(),
        ["dyadic", a, b] => MultiplierFamily::dyadic_indicators(int(a)?, int(b)?)?,
        [breaks] => MultiplierFamily::indicators(&parse_list(breaks)?)?,
        _ => return Err(usage(format!("bad family '{s}'"))),
    })
}

pub fn writer(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| usage(format!("cannot create {}: {e}", p.display())))?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

pub fn destination(path: &Option<PathBuf>) -> String {
    path.as_ref().map_or("standard output".into(), |p| p.display().to_string())
}

/// Self-describing run record: command name and every effective option.
pub fn header<A: Serialize>(command: &str, args: &A) -> Result<String, Failure> {
    Ok(to_json_17(&json!({ "command": command, "version": env!("CARGO_PKG_VERSION"), "options": args }))?)
}

/// Inserts `# run <header>` after the first line of a CSV document whose
/// first line is its own format header.
pub fn with_run_line(doc: Vec<u8>, header: &str) -> Vec<u8> {
    let cut = doc.iter().position(|&b| b == b'\n').map_or(doc.len(), |i| i + 1);
    let mut out = doc[..cut].to_vec();
    out.extend_from_slice(format!("# run {header}\n").as_bytes());
    out.extend_from_slice(&doc[cut..]);
    out
}

/// Writes a sampled function as SampledFn CSV or as one JSON object.
pub fn write_fn(f: &SampledFn<f64>, io: &IoArgs, header: &str) -> Result<(), Failure> {
    let mut out = writer(&io.output)?;
    match io.format {
        Format::Csv => {
            let mut buf = Vec::new();
            write_sampled(f, &mut buf)?;
            out.write_all(&with_run_line(buf, header))?;
        }
        Format::Json => {
            let doc = json!({
                "run": serde_json::from_str::<serde_json::Value>(header).map_err(|e| usage(e.to_string()))?,
                "domain": f.domain().tag(),
                "lo": f.grid().lo(),
                "hi": f.grid().hi(),
                "x": f.points(),
                "weight": f.grid().weights(),
                "re": f.values().iter().map(|v| v.re).collect::<Vec<_>>(),
                "im": f.values().iter().map(|v| v.im).collect::<Vec<_>>(),
            });
            writeln!(out, "{}", to_json_17(&doc)?)?;
        }
    }
    out.flush()?;
    Ok(())
}

pub fn fmt(x: f64) -> String {
    fmt17(x)
}
