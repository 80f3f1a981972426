use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::projections::ThresholdSeq;
use crate::real::Real;

/// Cut points `I_1 < I_2 < …` and the number `J` of oscillation terms.
///
/// With `J + 1` cuts the last block is `[I_J, I_{J+1})`; with exactly `J`
/// cuts it is `[I_J, ∞)`, i.e. it runs to the end of the `t`-grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CutSequence<T> {
    seq: ThresholdSeq<T>,
    j: usize,
}

impl<T: Real> CutSequence<T> {
    pub fn new(seq: ThresholdSeq<T>, j: usize) -> Result<Self> {
        if j == 0 {
            return Err(Error::arg("J must be positive"));
        }
        if seq.len() < j {
            return Err(Error::arg(format!("{} cuts cannot carry J = {j} terms", seq.len())));
        }
        Ok(CutSequence { seq, j })
    }

    /// Uses every cut: `J = len − 1` (or 1 for a single cut).
    pub fn full(seq: ThresholdSeq<T>) -> Result<Self> {
        let j = seq.len().saturating_sub(1).max(1);
        Self::new(seq, j)
    }

    pub fn seq(&self) -> &ThresholdSeq<T> {
        &self.seq
    }

    pub fn j(&self) -> usize {
        self.j
    }

    /// Row index of each cut in `t_grid`.
    pub fn indices_in(&self, t_grid: &ThresholdSeq<T>) -> Result<Vec<usize>> {
        self.seq
            .values()
            .iter()
            .take(self.j + 1)
            .map(|&t| t_grid.index_of(t).ok_or_else(|| Error::arg(format!("cut {t} is not in the t-grid"))))
            .collect()
    }
}
