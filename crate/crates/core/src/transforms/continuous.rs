//! Transforms evaluated by dense quadrature on arbitrary output grids.
//!
//! Each transform is a reusable operator holding its kernel matrix, so the
//! same discretization can be applied to many inputs; the free functions
//! build a one-shot operator. Rows are independent and summed in a fixed
//! order, so results do not depend on the thread count.

use std::sync::Arc;

use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::kernels::{dunkl_kernel, fourier_kernel, hankel_kernel, hankel_modified_kernel};
use crate::error::{Error, Result};
use crate::funcspace::{even_odd_split, Domain, Grid, SampledFn};
use crate::real::Real;
use crate::special::Order;

/// The transform families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Fourier,
    Hankel,
    HankelModified,
    Dunkl,
    DunklModified,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Fourier => "fourier",
            Kind::Hankel => "hankel",
            Kind::HankelModified => "hankel_modified",
            Kind::Dunkl => "dunkl",
            Kind::DunklModified => "dunkl_modified",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "fourier" => Kind::Fourier,
            "hankel" => Kind::Hankel,
            "hankel_modified" | "hankel-modified" => Kind::HankelModified,
            "dunkl" => Kind::Dunkl,
            "dunkl_modified" | "dunkl-modified" => Kind::DunklModified,
            _ => return Err(Error::arg(format!("unknown transform kind '{s}'"))),
        })
    }
}

/// A transform family with its order (ignored for Fourier).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformKind<T> {
    pub kind: Kind,
    pub order: Order<T>,
}

impl<T: Real> TransformKind<T> {
    pub fn new(kind: Kind, order: Order<T>) -> Self {
        TransformKind { kind, order }
    }
}

/// Fails unless every output abscissa is resolvable on the input grid
/// (at least six input nodes per kernel wavelength).
pub fn check_resolution<T: Real>(input: &Grid<T>, output: &[T]) -> Result<()> {
    let xmax = output.iter().fold(T::zero(), |m, x| m.max(x.abs()));
    let limit = input.resolvable_frequency();
    if xmax > limit * (T::one() + T::lit(1e-12)) {
        return Err(Error::resolution(format!(
            "output abscissa {xmax} exceeds the resolvable limit {limit} of the input grid"
        )));
    }
    Ok(())
}

fn out_domain<T: Real>(grid: &Grid<T>) -> Domain {
    if grid.lo() < T::zero() {
        Domain::FullLine
    } else {
        Domain::HalfLine
    }
}

fn build_matrix<T: Real, K: Send + Copy + Default>(rows: &[T], n_in: usize, entry: impl Fn(usize, T) -> K + Sync) -> Vec<K> {
    let mut m = vec![K::default(); rows.len() * n_in];
    if n_in == 0 {
        return m;
    }
    m.par_chunks_mut(n_in).zip(rows.par_iter()).for_each(|(row, &x)| {
        for (j, v) in row.iter_mut().enumerate() {
            *v = entry(j, x);
        }
    });
    m
}

/// Real-kernel operator from a half-line grid to a list of nonnegative
/// abscissae: `out_i = Σ_j K_ij f_j`.
#[derive(Debug, Clone)]
pub struct HankelOperator<T> {
    nu: T,
    modified: bool,
    out: Vec<T>,
    n_in: usize,
    matrix: Vec<T>,
}

impl<T: Real> HankelOperator<T> {
    /// `ℋ_ν` (or `H_ν` when `modified`) from `input` to the abscissae `out`.
    pub fn new(nu: T, modified: bool, input: &Grid<T>, out: Vec<T>) -> Result<Self> {
        if input.lo() < T::zero() {
            return Err(Error::arg("Hankel transforms need a half-line input grid"));
        }
        check_resolution(input, &out)?;
        let ys = input.points();
        let pre: Vec<T> = if modified {
            input.weights().to_vec()
        } else {
            let e = T::lit(2.0) * nu + T::one();
            ys.iter().zip(input.weights()).map(|(&y, &w)| w * y.powf(e)).collect()
        };
        let matrix = build_matrix(&out, ys.len(), |j, x| {
            let u = x.abs() * ys[j];
            let k = if modified { hankel_modified_kernel(nu, u) } else { hankel_kernel(nu, u) };
            k * pre[j]
        });
        Ok(HankelOperator { nu, modified, out, n_in: ys.len(), matrix })
    }

    pub fn order(&self) -> T {
        self.nu
    }

    pub fn is_modified(&self) -> bool {
        self.modified
    }

    pub fn apply_values(&self, f: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(f.len(), self.n_in, "input length mismatch");
        let zero = Complex::new(T::zero(), T::zero());
        if self.n_in == 0 {
            return vec![zero; self.out.len()];
        }
        self.matrix
            .par_chunks(self.n_in)
            .map(|row| row.iter().zip(f).fold(zero, |acc, (&k, &v)| acc + v * k))
            .collect()
    }
}

/// Distinct `|x|` values of an output grid and the map from nodes to them.
fn abs_nodes<T: Real>(grid: &Grid<T>) -> (Vec<T>, Vec<usize>) {
    let n = grid.len();
    if grid.is_symmetric() {
        let half = n / 2;
        let abs: Vec<T> = grid.points()[n - half..].to_vec();
        let map = (0..n).map(|i| if i < half { half - 1 - i } else { i - (n - half) }).collect();
        (abs, map)
    } else {
        (grid.points().iter().map(|x| x.abs()).collect(), (0..n).collect())
    }
}

/// `𝒟_α` or `D_α` through the even/odd decomposition
/// `𝒟_α f(x) = ℋ_α f_e(|x|) − i·x·ℋ_{α+1}(f_o/·)(|x|)`,
/// `D_α f(x) = H_α f_e(|x|) − i·sgn(x)·H_{α+1} f_o(|x|)`.
///
/// `inverse` evaluates at `−x`.
#[derive(Debug, Clone)]
pub struct DunklOperator<T> {
    order: Order<T>,
    modified: bool,
    inverse: bool,
    input: Arc<Grid<T>>,
    output: Arc<Grid<T>>,
    map: Vec<usize>,
    even: HankelOperator<T>,
    odd: HankelOperator<T>,
}

impl<T: Real> DunklOperator<T> {
    pub fn new(order: Order<T>, modified: bool, inverse: bool, input: Arc<Grid<T>>, output: Arc<Grid<T>>) -> Result<Self> {
        if !input.is_symmetric() {
            return Err(Error::arg("Dunkl transforms need an input grid symmetric about 0"));
        }
        let half = input.positive_half()?;
        let (abs, map) = abs_nodes(&output);
        let even = HankelOperator::new(order.alpha(), modified, &half, abs.clone())?;
        let odd = HankelOperator::new(order.alpha() + T::one(), modified, &half, abs)?;
        Ok(DunklOperator { order, modified, inverse, input, output, map, even, odd })
    }

    pub fn order(&self) -> Order<T> {
        self.order
    }

    pub fn output(&self) -> &Arc<Grid<T>> {
        &self.output
    }

    pub fn apply(&self, f: &SampledFn<T>) -> Result<SampledFn<T>> {
        if **f.grid() != *self.input {
            return Err(Error::arg("input function is not on the operator's grid"));
        }
        let (fe, fo) = even_odd_split(f)?;
        let odd_in: Vec<Complex<T>> = if self.modified {
            fo.values().to_vec()
        } else {
            fo.points().iter().zip(fo.values()).map(|(&y, &v)| v / y).collect()
        };
        let e = self.even.apply_values(fe.values());
        let o = self.odd.apply_values(&odd_in);
        let sign = if self.inverse { -T::one() } else { T::one() };
        let values = self
            .output
            .points()
            .iter()
            .zip(&self.map)
            .map(|(&x, &a)| {
                let factor = if self.modified { x.signum() } else { x };
                // −i·factor·O
                let o = o[a] * (sign * factor);
                e[a] + Complex::new(o.im, -o.re)
            })
            .collect();
        SampledFn::new(self.output.clone(), values, out_domain(&self.output))
    }
}

/// Complex-kernel operator on a full-line grid: Fourier or the direct Dunkl
/// kernel route.
#[derive(Debug, Clone)]
pub struct DirectOperator<T> {
    input: Arc<Grid<T>>,
    output: Arc<Grid<T>>,
    matrix: Vec<Complex<T>>,
}

impl<T: Real> DirectOperator<T> {
    /// `𝓕` with kernel `e^{−ixy}/√(2π)`.
    pub fn fourier(input: Arc<Grid<T>>, output: Arc<Grid<T>>) -> Result<Self> {
        check_resolution(&input, output.points())?;
        let ys = input.points();
        let ws = input.weights();
        let matrix = build_matrix(output.points(), ys.len(), |j, x| fourier_kernel(x * ys[j]) * ws[j]);
        Ok(DirectOperator { input, output, matrix })
    }

    /// `𝒟_α` by the direct kernel `k_α(xy)|y|^{2α+1}`.
    pub fn dunkl(order: Order<T>, input: Arc<Grid<T>>, output: Arc<Grid<T>>) -> Result<Self> {
        check_resolution(&input, output.points())?;
        let a = order.alpha();
        let e = order.measure_exponent();
        let ys = input.points();
        let pre: Vec<T> = ys.iter().zip(input.weights()).map(|(&y, &w)| w * y.abs().powf(e)).collect();
        let matrix = build_matrix(output.points(), ys.len(), |j, x| dunkl_kernel(a, x * ys[j]) * pre[j]);
        Ok(DirectOperator { input, output, matrix })
    }

    pub fn apply(&self, f: &SampledFn<T>) -> Result<SampledFn<T>> {
        if **f.grid() != *self.input {
            return Err(Error::arg("input function is not on the operator's grid"));
        }
        let n = self.input.len();
        let zero = Complex::new(T::zero(), T::zero());
        let values = self
            .matrix
            .par_chunks(n)
            .map(|row| row.iter().zip(f.values()).fold(zero, |acc, (&k, &v)| acc + v * k))
            .collect();
        SampledFn::new(self.output.clone(), values, out_domain(&self.output))
    }
}

fn require_full<T: Real>(f: &SampledFn<T>) -> Result<()> {
    if f.domain() != Domain::FullLine {
        return Err(Error::arg("transform needs a full-line function"));
    }
    Ok(())
}

fn require_half<T: Real>(f: &SampledFn<T>) -> Result<()> {
    if f.domain() != Domain::HalfLine {
        return Err(Error::arg("transform needs a half-line function"));
    }
    Ok(())
}

/// `𝓕f(x) = (2π)^{−1/2} ∫ f(y) e^{−ixy} dy`.
pub fn fourier<T: Real>(f: &SampledFn<T>, output: &Arc<Grid<T>>) -> Result<SampledFn<T>> {
    require_full(f)?;
    DirectOperator::fourier(f.grid().clone(), output.clone())?.apply(f)
}

fn hankel_impl<T: Real>(order: Order<T>, modified: bool, f: &SampledFn<T>, output: &Arc<Grid<T>>) -> Result<SampledFn<T>> {
    require_half(f)?;
    let out: Vec<T> = output.points().iter().map(|x| x.abs()).collect();
    let op = HankelOperator::new(order.alpha(), modified, f.grid(), out)?;
    SampledFn::new(output.clone(), op.apply_values(f.values()), out_domain(output))
}

/// `ℋ_α f(x) = ∫₀^∞ f(y) J_α(xy)/(xy)^α y^{2α+1} dy`.
pub fn hankel<T: Real>(order: Order<T>, f: &SampledFn<T>, output: &Arc<Grid<T>>) -> Result<SampledFn<T>> {
    hankel_impl(order, false, f, output)
}

/// `H_α f(x) = ∫₀^∞ f(y) (xy)^{1/2} J_α(xy) dy`.
pub fn hankel_modified<T: Real>(order: Order<T>, f: &SampledFn<T>, output: &Arc<Grid<T>>) -> Result<SampledFn<T>> {
    hankel_impl(order, true, f, output)
}

/// `𝒟_α f` through the Hankel decomposition.
pub fn dunkl<T: Real>(order: Order<T>, f: &SampledFn<T>, output: &Arc<Grid<T>>) -> Result<SampledFn<T>> {
    require_full(f)?;
    DunklOperator::new(order, false, false, f.grid().clone(), output.clone())?.apply(f)
}

/// `𝒟_α f` through the direct kernel, for cross-validation.
pub fn dunkl_direct<T: Real>(order: Order<T>, f: &SampledFn<T>, output: &Arc<Grid<T>>) -> Result<SampledFn<T>> {
    require_full(f)?;
    DirectOperator::dunkl(order, f.grid().clone(), output.clone())?.apply(f)
}

/// `𝒟̌_α g(x) = 𝒟_α g(−x)`.
pub fn dunkl_inverse<T: Real>(order: Order<T>, g: &SampledFn<T>, output: &Arc<Grid<T>>) -> Result<SampledFn<T>> {
    require_full(g)?;
    DunklOperator::new(order, false, true, g.grid().clone(), output.clone())?.apply(g)
}

/// `D_α f(x) = H_α f_e(|x|) − i·sgn(x)·H_{α+1} f_o(|x|)`.
pub fn dunkl_modified<T: Real>(order: Order<T>, f: &SampledFn<T>, output: &Arc<Grid<T>>) -> Result<SampledFn<T>> {
    require_full(f)?;
    DunklOperator::new(order, true, false, f.grid().clone(), output.clone())?.apply(f)
}

/// `Ď_α g(x) = D_α g(−x)`.
pub fn dunkl_modified_inverse<T: Real>(order: Order<T>, g: &SampledFn<T>, output: &Arc<Grid<T>>) -> Result<SampledFn<T>> {
    require_full(g)?;
    DunklOperator::new(order, true, true, g.grid().clone(), output.clone())?.apply(g)
}
