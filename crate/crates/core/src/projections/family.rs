use std::io::Write;

use num_complex::Complex;

use super::threshold::ThresholdSeq;
use crate::error::{Error, Result};
use crate::funcspace::io::fmt17;
use crate::funcspace::SampledFn;
use crate::real::Real;
use crate::special::Order;
use crate::transforms::TransformKind;

pub const FAMILY_HEADER: &str = "# dunkl-osc family v1";

/// Rows `S_t f` for `t` in a threshold grid, sharing `f`'s grid.
#[derive(Debug, Clone)]
pub struct PartialSumFamily<T> {
    base: SampledFn<T>,
    kind: TransformKind<T>,
    t_grid: ThresholdSeq<T>,
    values: Vec<Vec<Complex<T>>>,
}

impl<T: Real> PartialSumFamily<T> {
    pub fn new(base: SampledFn<T>, kind: TransformKind<T>, t_grid: ThresholdSeq<T>, values: Vec<Vec<Complex<T>>>) -> Result<Self> {
        if values.len() != t_grid.len() || values.iter().any(|r| r.len() != base.len()) {
            return Err(Error::arg("family matrix does not match the t-grid and base grid"));
        }
        Ok(PartialSumFamily { base, kind, t_grid, values })
    }

    pub fn base(&self) -> &SampledFn<T> {
        &self.base
    }

    pub fn order(&self) -> Order<T> {
        self.kind.order
    }

    pub fn kind(&self) -> TransformKind<T> {
        self.kind
    }

    pub fn t_grid(&self) -> &ThresholdSeq<T> {
        &self.t_grid
    }

    /// Row-major `(t, x)` matrix.
    pub fn values(&self) -> &[Vec<Complex<T>>] {
        &self.values
    }

    pub fn n_rows(&self) -> usize {
        self.values.len()
    }

    pub fn n_points(&self) -> usize {
        self.base.len()
    }

    pub fn row(&self, k: usize) -> Result<SampledFn<T>> {
        let r = self.values.get(k).ok_or_else(|| Error::arg(format!("row {k} out of range")))?;
        self.base.with_values(r.clone())
    }

    /// Family with the same `t`-rows over a sub-grid of thresholds.
    pub fn restrict(&self, t_grid: &ThresholdSeq<T>) -> Result<Self> {
        let rows = t_grid
            .values()
            .iter()
            .map(|&t| {
                self.t_grid
                    .index_of(t)
                    .map(|k| self.values[k].clone())
                    .ok_or_else(|| Error::arg(format!("threshold {t} is not in the family's t-grid")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.base.clone(), self.kind, t_grid.clone(), rows)
    }

    /// CSV: a comment line, a header row `x,<t_1>,…` and, for each node, the
    /// real parts followed by a second block of imaginary parts marked `im`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut out = out;
        writeln!(
            out,
            "{FAMILY_HEADER} kind={} alpha={} domain={} rows={}",
            self.kind.kind.name(),
            fmt17(self.kind.order.alpha().to_f64_lossy()),
            self.base.domain().tag(),
            self.n_rows()
        )?;
        let mut w = csv::Writer::from_writer(out);
        let map = |e: csv::Error| Error::Io(e.to_string());
        let mut header = vec!["part".to_string(), "x".to_string()];
        header.extend(self.t_grid.values().iter().map(|t| fmt17(t.to_f64_lossy())));
        w.write_record(&header).map_err(map)?;
        for (part, pick) in [("re", true), ("im", false)] {
            for (i, x) in self.base.points().iter().enumerate() {
                let mut rec = vec![part.to_string(), fmt17(x.to_f64_lossy())];
                rec.extend(self.values.iter().map(|r| {
                    let v = r[i];
                    fmt17(if pick { v.re } else { v.im }.to_f64_lossy())
                }));
                w.write_record(&rec).map_err(map)?;
            }
        }
        w.flush()?;
        Ok(())
    }
}
