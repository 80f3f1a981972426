//! SampledFn CSV format.
//!
//! ```text
//! # dunkl-osc sampledfn v1 domain=full lo=-6 hi=6
//! x,weight,re,im
//! -5.99...,0.0012...,0.0,0.0
//! ```
//!
//! `lo`/`hi` are optional on input; when absent they are inferred as
//! `[−Σw/2, Σw/2]` for full-line and `[0, Σw]` for half-line files.

use std::io::{BufRead, BufReader, Read, Write};
use std::sync::Arc;

use num_complex::Complex;

use super::grid::Grid;
use super::sampled::{Domain, SampledFn};
use crate::error::{Error, Result};
use crate::real::Real;

pub const SAMPLED_HEADER: &str = "# dunkl-osc sampledfn v1";

/// Formats with 17 significant digits.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_sampled<T: Real, W: Write>(f: &SampledFn<T>, out: W) -> Result<()> {
    let mut out = out;
    writeln!(
        out,
        "{SAMPLED_HEADER} domain={} lo={} hi={}",
        f.domain().tag(),
        fmt17(f.grid().lo().to_f64_lossy()),
        fmt17(f.grid().hi().to_f64_lossy())
    )?;
    let mut w = csv::Writer::from_writer(out);
    let map = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(["x", "weight", "re", "im"]).map_err(map)?;
    for ((x, wt), v) in f.points().iter().zip(f.grid().weights()).zip(f.values()) {
        w.write_record([
            fmt17(x.to_f64_lossy()),
            fmt17(wt.to_f64_lossy()),
            fmt17(v.re.to_f64_lossy()),
            fmt17(v.im.to_f64_lossy()),
        ])
        .map_err(map)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_sampled<T: Real, R: Read>(input: R) -> Result<SampledFn<T>> {
    let mut reader = BufReader::new(input);
    let mut header = String::new();
    reader.read_line(&mut header)?;
    let header = header.trim();
    let rest = header
        .strip_prefix(SAMPLED_HEADER)
        .ok_or_else(|| Error::Parse(format!("missing '{SAMPLED_HEADER}' header")))?;
    let mut domain = None;
    let mut lo = None;
    let mut hi = None;
    for kv in rest.split_whitespace() {
        let (k, v) = kv.split_once('=').ok_or_else(|| Error::Parse(format!("bad header field '{kv}'")))?;
        match k {
            "domain" => {
                domain = Some(match v {
                    "full" => Domain::FullLine,
                    "half" => Domain::HalfLine,
                    _ => return Err(Error::Parse(format!("unknown domain '{v}'"))),
                })
            }
            "lo" => lo = Some(parse_num(v)?),
            "hi" => hi = Some(parse_num(v)?),
            _ => return Err(Error::Parse(format!("unknown header field '{k}'"))),
        }
    }
    let domain = domain.ok_or_else(|| Error::Parse("header lacks domain=".into()))?;
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).comment(Some(b'#')).from_reader(reader);
    let mut xs = Vec::new();
    let mut ws = Vec::new();
    let mut vs = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
        if rec.len() != 4 {
            return Err(Error::Parse(format!("expected 4 columns, found {}", rec.len())));
        }
        xs.push(T::lit(parse_num(&rec[0])?));
        ws.push(T::lit(parse_num(&rec[1])?));
        vs.push(Complex::new(T::lit(parse_num(&rec[2])?), T::lit(parse_num(&rec[3])?)));
    }
    let total: f64 = ws.iter().map(|w| w.to_f64_lossy()).sum();
    let (lo, hi) = match (lo, hi, domain) {
        (Some(a), Some(b), _) => (a, b),
        (_, _, Domain::FullLine) => (-total / 2.0, total / 2.0),
        (_, _, Domain::HalfLine) => (0.0, total),
    };
    let grid = Grid::new(xs, ws, T::lit(lo), T::lit(hi))?;
    SampledFn::new(Arc::new(grid), vs, domain)
}

fn parse_num(s: &str) -> Result<f64> {
    s.trim().parse::<f64>().map_err(|_| Error::Parse(format!("not a number: '{s}'")))
}

#[cfg(test)]
mod tests {
    use super::super::grid::make_graded_grid;
    use super::*;

    #[test]
    fn roundtrip_is_exact() {
        let g = Arc::new(make_graded_grid(-2.0f64, 2.0, 4, 8, 1.0).unwrap());
        let f = SampledFn::from_fn(g, Domain::FullLine, |x| Complex::new(x.sin(), x * x / 3.0)).unwrap();
        let mut buf = Vec::new();
        write_sampled(&f, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("# dunkl-osc sampledfn v1 domain=full"));
        let back: SampledFn<f64> = read_sampled(&buf[..]).unwrap();
        assert_eq!(back.values(), f.values());
        assert_eq!(back.points(), f.points());
    }

    #[test]
    fn inferred_bounds() {
        let text = "# dunkl-osc sampledfn v1 domain=half\nx,weight,re,im\n0.25,0.5,1,0\n0.75,0.5,2,0\n";
        let f: SampledFn<f64> = read_sampled(text.as_bytes()).unwrap();
        assert_eq!(f.grid().hi(), 1.0);
        assert_eq!(f.domain(), Domain::HalfLine);
    }

    #[test]
    fn rejects_bad_header() {
        let text = "x,weight,re,im\n";
        assert!(matches!(read_sampled::<f64, _>(text.as_bytes()), Err(Error::Parse(_))));
    }
}
