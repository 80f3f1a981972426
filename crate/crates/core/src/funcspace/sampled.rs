use std::sync::Arc;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::grid::Grid;
use crate::error::{Error, Result};
use crate::real::Real;

/// Whether a sampled function lives on ℝ or on ℝ₊.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    FullLine,
    HalfLine,
}

impl Domain {
    pub fn tag(self) -> &'static str {
        match self {
            Domain::FullLine => "full",
            Domain::HalfLine => "half",
        }
    }
}

/// Complex-valued function sampled at the nodes of a quadrature grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFn<T> {
    grid: Arc<Grid<T>>,
    values: Vec<Complex<T>>,
    domain: Domain,
}

impl<T: Real> SampledFn<T> {
    pub fn new(grid: Arc<Grid<T>>, values: Vec<Complex<T>>, domain: Domain) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::arg(format!("{} values for a grid of {} points", values.len(), grid.len())));
        }
        if domain == Domain::HalfLine && grid.lo() < T::zero() {
            return Err(Error::arg("half-line functions need grid.lo >= 0"));
        }
        Ok(SampledFn { grid, values, domain })
    }

    /// Samples a complex-valued closure.
    pub fn from_fn(grid: Arc<Grid<T>>, domain: Domain, f: impl Fn(T) -> Complex<T>) -> Result<Self> {
        let values = grid.points().iter().map(|&x| f(x)).collect();
        Self::new(grid, values, domain)
    }

    /// Samples a real-valued closure.
    pub fn from_real(grid: Arc<Grid<T>>, domain: Domain, f: impl Fn(T) -> T) -> Result<Self> {
        Self::from_fn(grid, domain, |x| Complex::new(f(x), T::zero()))
    }

    pub fn zero(grid: Arc<Grid<T>>, domain: Domain) -> Result<Self> {
        let n = grid.len();
        Self::new(grid, vec![Complex::new(T::zero(), T::zero()); n], domain)
    }

    pub fn grid(&self) -> &Arc<Grid<T>> {
        &self.grid
    }

    pub fn values(&self) -> &[Complex<T>] {
        &self.values
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn points(&self) -> &[T] {
        self.grid.points()
    }

    /// Same grid and domain, new values.
    pub fn with_values(&self, values: Vec<Complex<T>>) -> Result<Self> {
        Self::new(self.grid.clone(), values, self.domain)
    }

    /// Pointwise map of the values.
    pub fn map(&self, f: impl Fn(T, Complex<T>) -> Complex<T>) -> Self {
        let values = self.points().iter().zip(&self.values).map(|(&x, &v)| f(x, v)).collect();
        SampledFn { grid: self.grid.clone(), values, domain: self.domain }
    }

    /// Pointwise modulus as a real-valued sampled function.
    pub fn abs(&self) -> Self {
        self.map(|_, v| Complex::new(v.norm(), T::zero()))
    }

    pub fn scale(&self, c: Complex<T>) -> Self {
        self.map(|_, v| v * c)
    }

    /// `a·self + b·other` on a shared grid.
    pub fn combine(&self, a: Complex<T>, other: &Self, b: Complex<T>) -> Result<Self> {
        self.same_grid(other)?;
        let values = self.values.iter().zip(&other.values).map(|(&u, &v)| u * a + v * b).collect();
        self.with_values(values)
    }

    pub fn same_grid(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.grid, &other.grid) || *self.grid == *other.grid {
            Ok(())
        } else {
            Err(Error::arg("functions live on different grids"))
        }
    }

    /// Largest pointwise modulus.
    pub fn sup_norm(&self) -> T {
        self.values.iter().fold(T::zero(), |m, v| m.max(v.norm()))
    }

    /// Largest pointwise distance to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<T> {
        self.same_grid(other)?;
        Ok(self.values.iter().zip(&other.values).fold(T::zero(), |m, (a, b)| m.max((*a - *b).norm())))
    }

    /// Real parts of the values.
    pub fn re(&self) -> Vec<T> {
        self.values.iter().map(|v| v.re).collect()
    }
}

/// `Σ weights · values`.
pub fn integrate<T: Real>(f: &SampledFn<T>) -> Complex<T> {
    f.grid
        .weights()
        .iter()
        .zip(&f.values)
        .fold(Complex::new(T::zero(), T::zero()), |acc, (&w, &v)| acc + v * w)
}

/// `(f_e, f_o)` restricted to the positive half of a symmetric grid.
pub fn even_odd_split<T: Real>(f: &SampledFn<T>) -> Result<(SampledFn<T>, SampledFn<T>)> {
    if !f.grid.is_symmetric() {
        return Err(Error::arg("even_odd_split needs a grid symmetric about 0"));
    }
    let n = f.len();
    let half = Arc::new(f.grid.positive_half()?);
    let m = half.len();
    let two = T::lit(2.0);
    let mut even = Vec::with_capacity(m);
    let mut odd = Vec::with_capacity(m);
    for k in 0..m {
        let p = f.values[n - m + k];
        let q = f.values[m - 1 - k];
        even.push((p + q) / two);
        odd.push((p - q) / two);
    }
    Ok((SampledFn::new(half.clone(), even, Domain::HalfLine)?, SampledFn::new(half, odd, Domain::HalfLine)?))
}

/// `f(x) = f_e(|x|) + sgn(x)·f_o(|x|)` on the mirrored grid.
pub fn even_odd_join<T: Real>(even: &SampledFn<T>, odd: &SampledFn<T>) -> Result<SampledFn<T>> {
    even.same_grid(odd)?;
    let full = Arc::new(even.grid.mirrored()?);
    let m = even.len();
    let mut values = Vec::with_capacity(2 * m);
    for k in (0..m).rev() {
        values.push(even.values[k] - odd.values[k]);
    }
    for k in 0..m {
        values.push(even.values[k] + odd.values[k]);
    }
    SampledFn::new(full, values, Domain::FullLine)
}

/// Exponent of the multiplication operator `M_a f(x) = |x|^a f(x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultExponent<T>(pub T);

/// `|x|^a · f(x)` pointwise.
pub fn multiply_power<T: Real>(f: &SampledFn<T>, a: MultExponent<T>) -> Result<SampledFn<T>> {
    let a = a.0;
    if a == T::zero() {
        return Ok(f.clone());
    }
    let tiny = T::min_positive_value().max(T::lit(1e-300));
    let mut values = Vec::with_capacity(f.len());
    for (&x, &v) in f.points().iter().zip(&f.values) {
        let ax = x.abs();
        if ax < tiny {
            if a < T::zero() && v != Complex::new(T::zero(), T::zero()) {
                return Err(Error::domain("negative power at x = 0 with f(0) != 0"));
            }
            values.push(if a < T::zero() { Complex::new(T::zero(), T::zero()) } else { v * ax.powf(a) });
        } else {
            values.push(v * ax.powf(a));
        }
    }
    f.with_values(values)
}
