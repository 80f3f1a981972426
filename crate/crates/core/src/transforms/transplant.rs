//! Transplantation `T_{αγ} = Ď_α ∘ D_γ` and `T̃_{αγ} = H_α ∘ H_γ`.
//!
//! Realized on the lattice bases: the `j`-th orthonormal coefficient of `f`
//! for order `γ` becomes the `j`-th coefficient for order `α`. Both bases
//! are cut to a common length, so the operators are partial isometries of
//! `L²(dx)` and `T_{γα} T_{αγ}` is the projection onto the band.

use std::sync::Arc;

use num_complex::Complex;

use super::basis::{DunklBasis, HankelBasis};
use super::lattice::Boundary;
use crate::error::{Error, Result};
use crate::funcspace::{Domain, Grid, SampledFn};
use crate::real::Real;
use crate::special::Order;

/// Reusable `T_{αγ}` on a fixed full-line grid.
#[derive(Debug, Clone)]
pub struct DunklTransplant<T> {
    target: DunklBasis<T>,
    source: DunklBasis<T>,
    n: usize,
}

impl<T: Real> DunklTransplant<T> {
    pub fn new(alpha: Order<T>, gamma: Order<T>, grid: Arc<Grid<T>>) -> Result<Self> {
        let target = DunklBasis::new(alpha, grid.clone(), true)?;
        let source = if gamma == alpha { target.clone() } else { DunklBasis::new(gamma, grid, true)? };
        let n = target.len().min(source.len());
        Ok(DunklTransplant { target, source, n })
    }

    /// Number of paired basis functions.
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn apply(&self, f: &SampledFn<T>) -> Result<SampledFn<T>> {
        let mut c = self.source.analyze(f)?;
        c.resize(self.target.len(), Complex::new(T::zero(), T::zero()));
        self.target.synthesize(&c, self.n)
    }
}

/// Reusable `T̃_{αγ}` on a fixed half-line grid (Neumann lattices).
#[derive(Debug, Clone)]
pub struct HankelTransplant<T> {
    target: HankelBasis<T>,
    source: HankelBasis<T>,
    n: usize,
}

impl<T: Real> HankelTransplant<T> {
    pub fn new(alpha: Order<T>, gamma: Order<T>, grid: Arc<Grid<T>>) -> Result<Self> {
        let target = HankelBasis::new(alpha.alpha(), grid.clone(), Boundary::Neumann, true)?;
        let source = if gamma == alpha {
            target.clone()
        } else {
            HankelBasis::new(gamma.alpha(), grid, Boundary::Neumann, true)?
        };
        let n = target.len().min(source.len());
        Ok(HankelTransplant { target, source, n })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn apply(&self, f: &SampledFn<T>) -> Result<SampledFn<T>> {
        let mut c = self.source.analyze(f)?;
        c.resize(self.target.len(), Complex::new(T::zero(), T::zero()));
        self.target.synthesize(&c, self.n)
    }
}

/// `T_{αγ} f` on `f`'s own grid.
pub fn transplant_dunkl<T: Real>(alpha: Order<T>, gamma: Order<T>, f: &SampledFn<T>) -> Result<SampledFn<T>> {
    if f.domain() != Domain::FullLine {
        return Err(Error::arg("transplant_dunkl needs a full-line function"));
    }
    DunklTransplant::new(alpha, gamma, f.grid().clone())?.apply(f)
}

/// `T̃_{αγ} f` on `f`'s own grid.
pub fn transplant_hankel<T: Real>(alpha: Order<T>, gamma: Order<T>, f: &SampledFn<T>) -> Result<SampledFn<T>> {
    if f.domain() != Domain::HalfLine {
        return Err(Error::arg("transplant_hankel needs a half-line function"));
    }
    HankelTransplant::new(alpha, gamma, f.grid().clone())?.apply(f)
}
