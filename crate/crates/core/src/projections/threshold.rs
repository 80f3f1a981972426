use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::real::Real;

/// Strictly increasing positive thresholds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdSeq<T> {
    values: Vec<T>,
}

impl<T: Real> ThresholdSeq<T> {
    pub fn new(values: Vec<T>) -> Result<Self> {
        if values.iter().any(|&t| !(t > T::zero()) || !t.is_finite()) {
            return Err(Error::arg("thresholds must be positive and finite"));
        }
        if values.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::arg("thresholds must be strictly increasing"));
        }
        Ok(ThresholdSeq { values })
    }

    /// `{2^n : lo ≤ n ≤ hi}`.
    pub fn dyadic(lo: i32, hi: i32) -> Result<Self> {
        if lo > hi {
            return Err(Error::arg(format!("empty dyadic range {lo}..{hi}")));
        }
        Self::new((lo..=hi).map(|n| T::lit(2.0).powi(n)).collect())
    }

    /// `n` geometric values from `lo` to `hi` inclusive.
    pub fn geometric(lo: T, hi: T, n: usize) -> Result<Self> {
        if n < 2 || !(lo > T::zero()) || !(lo < hi) {
            return Err(Error::arg("geometric thresholds need 0 < lo < hi and n >= 2"));
        }
        let step = (hi / lo).ln() / T::from_count(n - 1);
        let mut v: Vec<T> = (0..n).map(|k| lo * (step * T::from_count(k)).exp()).collect();
        v[n - 1] = hi;
        Self::new(v)
    }

    /// Default grid: 64 geometric values on `[2^{-4}, 2^6]` merged with the
    /// dyadics in that range, entries above `band` dropped, and `band`
    /// appended as the top threshold.
    pub fn default_grid(band: T) -> Result<Self> {
        let geo = Self::geometric(T::lit(0.0625), T::lit(64.0), 64)?;
        let dy = Self::dyadic(-4, 6)?;
        let mut v: Vec<T> = geo.values.into_iter().chain(dy.values).filter(|&t| t < band).collect();
        v.push(band);
        Ok(Self::merge(v))
    }

    /// Sorts and removes values equal to a neighbour up to relative `1e-12`.
    fn merge(mut v: Vec<T>) -> Self {
        v.sort_by(|a, b| a.partial_cmp(b).expect("finite thresholds"));
        let mut out: Vec<T> = Vec::with_capacity(v.len());
        for t in v {
            match out.last() {
                Some(&p) if (t - p).abs() <= T::lit(1e-12) * t => {
                    // keep exact dyadics over nearby geometric values
                    if is_power_of_two(t) {
                        *out.last_mut().expect("nonempty") = t;
                    }
                }
                _ => out.push(t),
            }
        }
        ThresholdSeq { values: out }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max(&self) -> Option<T> {
        self.values.last().copied()
    }

    pub fn is_dyadic(&self) -> bool {
        self.values.iter().all(|&t| is_power_of_two(t))
    }

    /// The dyadic members, as a sequence.
    pub fn dyadic_subsequence(&self) -> Self {
        ThresholdSeq { values: self.values.iter().copied().filter(|&t| is_power_of_two(t)).collect() }
    }

    /// `{c·t}`; keeps dyadic values dyadic when `c` is a power of two.
    pub fn scaled(&self, c: T) -> Result<Self> {
        Self::new(self.values.iter().map(|&t| c * t).collect())
    }

    /// Position of `t` (exact match).
    pub fn index_of(&self, t: T) -> Option<usize> {
        self.values.iter().position(|&v| v == t)
    }
}

fn is_power_of_two<T: Real>(t: T) -> bool {
    t > T::zero() && t.log2().fract() == T::zero()
}

/// The threshold moved to the midpoint of the gap between consecutive
/// `|λ|`-sorted lattice frequencies that contains it; the cut `|λ| ≤ t` is
/// unchanged and no node sits on the boundary.
pub fn snap_threshold<T: Real>(abs_nodes: &[T], t: T) -> T {
    let k = abs_nodes.iter().take_while(|&&l| l <= t).count();
    match (k.checked_sub(1).map(|i| abs_nodes[i]), abs_nodes.get(k)) {
        (Some(a), Some(&b)) => (a + b) / T::lit(2.0),
        (None, Some(&b)) => b / T::lit(2.0),
        _ => t,
    }
}
