use num_complex::Complex;

use crate::funcspace::SampledFn;
use crate::real::Real;

/// Piecewise-linear interpolant of grid samples.
///
/// Knots are `lo`, the grid nodes and `hi`; the first and last samples are
/// held constant out to `lo` and `hi`, and the function is zero outside
/// `[lo, hi]`.
#[derive(Debug, Clone)]
pub struct PiecewiseLinear<T> {
    knots: Vec<T>,
    values: Vec<Complex<T>>,
}

impl<T: Real> PiecewiseLinear<T> {
    pub fn from_sampled(f: &SampledFn<T>) -> Self {
        Self::from_parts(f.grid().lo(), f.grid().hi(), f.points(), f.values())
    }

    pub fn from_parts(lo: T, hi: T, points: &[T], values: &[Complex<T>]) -> Self {
        let mut knots = Vec::with_capacity(points.len() + 2);
        let mut vals = Vec::with_capacity(points.len() + 2);
        if lo < points[0] {
            knots.push(lo);
            vals.push(values[0]);
        }
        knots.extend_from_slice(points);
        vals.extend_from_slice(values);
        if hi > points[points.len() - 1] {
            knots.push(hi);
            vals.push(values[values.len() - 1]);
        }
        PiecewiseLinear { knots, values: vals }
    }

    /// Interpolant of `|f|`.
    pub fn abs(&self) -> Self {
        PiecewiseLinear {
            knots: self.knots.clone(),
            values: self.values.iter().map(|v| Complex::new(v.norm(), T::zero())).collect(),
        }
    }

    pub fn knots(&self) -> &[T] {
        &self.knots
    }

    pub fn values(&self) -> &[Complex<T>] {
        &self.values
    }

    pub fn lo(&self) -> T {
        self.knots[0]
    }

    pub fn hi(&self) -> T {
        self.knots[self.knots.len() - 1]
    }

    pub fn n_segments(&self) -> usize {
        self.knots.len() - 1
    }

    /// Segment containing `u` (clamped to the valid range).
    pub fn segment_of(&self, u: T) -> usize {
        let k = self.knots.partition_point(|&z| z <= u);
        k.saturating_sub(1).min(self.n_segments() - 1)
    }

    /// Value at `u` of the linear piece of segment `s`, extended beyond it.
    pub fn linear(&self, s: usize, u: T) -> Complex<T> {
        let (z0, z1) = (self.knots[s], self.knots[s + 1]);
        let (v0, v1) = (self.values[s], self.values[s + 1]);
        v0 + (v1 - v0) * ((u - z0) / (z1 - z0))
    }

    pub fn eval(&self, u: T) -> Complex<T> {
        if u < self.lo() || u > self.hi() {
            return Complex::new(T::zero(), T::zero());
        }
        self.linear(self.segment_of(u), u)
    }
}

/// Running integral of a real piecewise-linear function.
#[derive(Debug, Clone)]
pub(crate) struct Cumulative<T> {
    pl: PiecewiseLinear<T>,
    at_knots: Vec<T>,
}

impl<T: Real> Cumulative<T> {
    pub fn new(pl: PiecewiseLinear<T>) -> Self {
        let mut at_knots = vec![T::zero(); pl.knots.len()];
        for s in 0..pl.n_segments() {
            let h = pl.knots[s + 1] - pl.knots[s];
            at_knots[s + 1] = at_knots[s] + h * (pl.values[s].re + pl.values[s + 1].re) / T::lit(2.0);
        }
        Cumulative { pl, at_knots }
    }

    /// `∫_{lo}^{z}`.
    pub fn at(&self, z: T) -> T {
        if z <= self.pl.lo() {
            return T::zero();
        }
        if z >= self.pl.hi() {
            return self.at_knots[self.at_knots.len() - 1];
        }
        let s = self.pl.segment_of(z);
        let z0 = self.pl.knots[s];
        let v0 = self.pl.values[s].re;
        let vz = self.pl.linear(s, z).re;
        self.at_knots[s] + (z - z0) * (v0 + vz) / T::lit(2.0)
    }

    pub fn between(&self, a: T, b: T) -> T {
        self.at(b) - self.at(a)
    }
}
