use std::sync::Arc;

use num_complex::Complex;

use super::family::PartialSumFamily;
use super::threshold::ThresholdSeq;
use crate::error::{Error, Result};
use crate::funcspace::{Domain, Grid, SampledFn};
use crate::real::Real;
use crate::special::{radial_order, Order};
use crate::transforms::{Boundary, DunklBasis, HankelBasis, Kind, TransformKind};

fn check_band<T: Real>(t: T, band: T) -> Result<()> {
    if !(t > T::zero()) {
        return Err(Error::arg(format!("threshold must be positive, got {t}")));
    }
    if t > band * (T::one() + T::lit(1e-12)) {
        return Err(Error::resolution(format!("threshold {t} exceeds the resolvable band {band}")));
    }
    Ok(())
}

/// `𝒮_t^α = 𝒟̌_α 1_{[−t,t]} 𝒟_α` on a fixed full-line grid.
#[derive(Debug, Clone)]
pub struct DunklProjector<T> {
    basis: DunklBasis<T>,
    band: T,
}

impl<T: Real> DunklProjector<T> {
    pub fn new(order: Order<T>, grid: Arc<Grid<T>>) -> Result<Self> {
        let band = grid.resolvable_frequency();
        Ok(DunklProjector { basis: DunklBasis::new(order, grid, false)?, band })
    }

    pub fn order(&self) -> Order<T> {
        self.basis.lattice().order()
    }

    pub fn grid(&self) -> &Arc<Grid<T>> {
        self.basis.grid()
    }

    /// Largest admissible threshold.
    pub fn band(&self) -> T {
        self.band
    }

    pub fn basis(&self) -> &DunklBasis<T> {
        &self.basis
    }

    pub fn partial_sum(&self, f: &SampledFn<T>, t: T) -> Result<SampledFn<T>> {
        check_band(t, self.band)?;
        let c = self.basis.analyze(f)?;
        self.basis.synthesize(&c, self.basis.count_within(t))
    }

    /// All rows `𝒮_t f`, `t ∈ t_grid`, from one analysis.
    pub fn family(&self, f: &SampledFn<T>, t_grid: &ThresholdSeq<T>) -> Result<PartialSumFamily<T>> {
        if t_grid.is_empty() {
            return Err(Error::arg("t-grid is empty"));
        }
        check_band(t_grid.max().expect("nonempty"), self.band)?;
        let c = self.basis.analyze(f)?;
        let ns: Vec<usize> = t_grid.values().iter().map(|&t| self.basis.count_within(t)).collect();
        let rows = self.basis.prefix_syntheses(&c, &ns)?;
        PartialSumFamily::new(f.clone(), TransformKind::new(Kind::Dunkl, self.order()), t_grid.clone(), rows)
    }
}

/// `S̃_t^ν = ℋ_ν 1_{[0,t]} ℋ_ν` on a fixed half-line grid.
#[derive(Debug, Clone)]
pub struct HankelProjector<T> {
    basis: HankelBasis<T>,
    band: T,
}

impl<T: Real> HankelProjector<T> {
    pub fn new(order: Order<T>, grid: Arc<Grid<T>>, boundary: Boundary) -> Result<Self> {
        let band = grid.resolvable_frequency();
        Ok(HankelProjector { basis: HankelBasis::new(order.alpha(), grid, boundary, false)?, band })
    }

    pub fn order(&self) -> Order<T> {
        Order::new(self.basis.lattice().order()).expect("validated at construction")
    }

    pub fn boundary(&self) -> Boundary {
        self.basis.lattice().boundary()
    }

    pub fn grid(&self) -> &Arc<Grid<T>> {
        self.basis.grid()
    }

    pub fn band(&self) -> T {
        self.band
    }

    pub fn basis(&self) -> &HankelBasis<T> {
        &self.basis
    }

    pub fn partial_sum(&self, f: &SampledFn<T>, t: T) -> Result<SampledFn<T>> {
        check_band(t, self.band)?;
        let c = self.basis.analyze(f)?;
        self.basis.synthesize(&c, self.basis.count_within(t))
    }

    pub fn family(&self, f: &SampledFn<T>, t_grid: &ThresholdSeq<T>) -> Result<PartialSumFamily<T>> {
        if t_grid.is_empty() {
            return Err(Error::arg("t-grid is empty"));
        }
        check_band(t_grid.max().expect("nonempty"), self.band)?;
        let c = self.basis.analyze(f)?;
        let ns: Vec<usize> = t_grid.values().iter().map(|&t| self.basis.count_within(t)).collect();
        let rows = self.basis.prefix_syntheses(&c, &ns)?;
        PartialSumFamily::new(f.clone(), TransformKind::new(Kind::Hankel, self.order()), t_grid.clone(), rows)
    }
}

fn require(f: &SampledFn<impl Real>, d: Domain) -> Result<()> {
    if f.domain() != d {
        return Err(Error::arg(format!("expected a {}-line function", d.tag())));
    }
    Ok(())
}

/// `𝒮_t^α f` on `f`'s grid.
pub fn dunkl_partial_sum<T: Real>(order: Order<T>, f: &SampledFn<T>, t: T) -> Result<SampledFn<T>> {
    require(f, Domain::FullLine)?;
    DunklProjector::new(order, f.grid().clone())?.partial_sum(f, t)
}

/// `S̃_t^α f` on `f`'s grid (Neumann lattice).
pub fn hankel_partial_sum<T: Real>(order: Order<T>, f: &SampledFn<T>, t: T) -> Result<SampledFn<T>> {
    hankel_partial_sum_with(order, f, t, Boundary::Neumann)
}

pub fn hankel_partial_sum_with<T: Real>(order: Order<T>, f: &SampledFn<T>, t: T, boundary: Boundary) -> Result<SampledFn<T>> {
    require(f, Domain::HalfLine)?;
    HankelProjector::new(order, f.grid().clone(), boundary)?.partial_sum(f, t)
}

/// `𝓕^{-1} 1_{[−t,t]} 𝓕 f`.
pub fn fourier_partial_sum<T: Real>(f: &SampledFn<T>, t: T) -> Result<SampledFn<T>> {
    dunkl_partial_sum(Order::new(T::lit(-0.5))?, f, t)
}

/// Radial profile of the ball partial sum in `ℝⁿ`, i.e. `S̃_t^{(n−2)/2} f₀`.
pub fn radial_partial_sum<T: Real>(dimension: usize, f0: &SampledFn<T>, t: T) -> Result<SampledFn<T>> {
    hankel_partial_sum(radial_order(dimension)?, f0, t)
}

/// Family of Dunkl partial sums over `t_grid`.
pub fn build_family<T: Real>(order: Order<T>, f: &SampledFn<T>, t_grid: &ThresholdSeq<T>) -> Result<PartialSumFamily<T>> {
    require(f, Domain::FullLine)?;
    DunklProjector::new(order, f.grid().clone())?.family(f, t_grid)
}

/// Family of Hankel partial sums over `t_grid` (Neumann lattice).
pub fn build_hankel_family<T: Real>(order: Order<T>, f: &SampledFn<T>, t_grid: &ThresholdSeq<T>) -> Result<PartialSumFamily<T>> {
    require(f, Domain::HalfLine)?;
    HankelProjector::new(order, f.grid().clone(), Boundary::Neumann)?.family(f, t_grid)
}

/// `f_o(y)/y` on the half line.
pub fn divide_by_x<T: Real>(f: &SampledFn<T>) -> SampledFn<T> {
    f.map(|x, v| v / x)
}

/// `g(|x|)`, or `x·g(|x|)` when `odd`, on a symmetric grid whose positive
/// half carries the samples of `g`.
pub fn lift_half<T: Real>(g: &SampledFn<T>, full: &Arc<Grid<T>>, odd: bool) -> Result<SampledFn<T>> {
    let n = full.len();
    if g.len() * 2 != n || !full.is_symmetric() {
        return Err(Error::arg("half-line samples do not match the symmetric grid"));
    }
    let half = n / 2;
    let values: Vec<Complex<T>> = full
        .points()
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let v = if i < half { g.values()[half - 1 - i] } else { g.values()[i - half] };
            if odd {
                v * x
            } else {
                v
            }
        })
        .collect();
    SampledFn::new(full.clone(), values, Domain::FullLine)
}
