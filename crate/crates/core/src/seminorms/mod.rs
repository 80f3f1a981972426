//! Truncated oscillation `O²_{I,J}`, `r`-variation `V^r` and the
//! Carleson–Dunkl / Carleson–Hankel maximal operators, evaluated pointwise
//! on precomputed partial-sum families.

mod cuts;
mod oscillation;

use num_complex::Complex;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::funcspace::SampledFn;
use crate::projections::{build_family, build_hankel_family, HankelProjector, PartialSumFamily, ThresholdSeq};
use crate::real::Real;
use crate::special::Order;
use crate::transforms::Boundary;

pub use cuts::CutSequence;
pub use oscillation::{max_oscillation_over_sampled_sequences, oscillation, sample_cut_indices};

/// Node-major copy of a family: `columns[i][k] = 𝔞_{t_k}(x_i)`.
pub(crate) fn columns<T: Real>(family: &PartialSumFamily<T>) -> Vec<Vec<Complex<T>>> {
    (0..family.n_points())
        .into_par_iter()
        .map(|i| family.values().iter().map(|row| row[i]).collect())
        .collect()
}

pub(crate) fn real_fn<T: Real>(base: &SampledFn<T>, v: Vec<T>) -> Result<SampledFn<T>> {
    base.with_values(v.into_iter().map(|r| Complex::new(r, T::zero())).collect())
}

/// `sup` over increasing selections of `(Σ |a_{t_{j+1}} − a_{t_j}|^r)^{1/r}`
/// for one node, by the `O(T²)` dynamic program
/// `best[j] = max_{i<j} best[i] + |a_j − a_i|^r`.
pub(crate) fn variation_at<T: Real>(a: &[Complex<T>], r: T) -> T {
    let mut best = vec![T::zero(); a.len()];
    let mut top = T::zero();
    for j in 1..a.len() {
        let mut b = T::zero();
        for i in 0..j {
            b = b.max(best[i] + (a[j] - a[i]).norm().powf(r));
        }
        best[j] = b;
        top = top.max(b);
    }
    top.powf(r.recip())
}

/// `V^r(𝔞_t(x) : t ∈ t-grid)` at every node, exact over all sub-selections
/// of the family's `t`-grid.
pub fn variation<T: Real>(family: &PartialSumFamily<T>, r: T) -> Result<SampledFn<T>> {
    if !(r >= T::one()) {
        return Err(Error::arg(format!("variation exponent must be >= 1, got {r}")));
    }
    if family.n_rows() == 0 {
        return Err(Error::arg("variation of an empty family"));
    }
    let v = columns(family).par_iter().map(|a| variation_at(a, r)).collect();
    real_fn(family.base(), v)
}

/// Pointwise `max_t |𝔞_t|` over the family rows.
pub fn family_max<T: Real>(family: &PartialSumFamily<T>) -> Result<SampledFn<T>> {
    let v = columns(family).par_iter().map(|a| a.iter().fold(T::zero(), |m, z| m.max(z.norm()))).collect();
    real_fn(family.base(), v)
}

/// `𝒞_*^α f = max_t |𝒮_t^α f|` over `t_grid`.
pub fn carleson_dunkl_max<T: Real>(order: Order<T>, f: &SampledFn<T>, t_grid: &ThresholdSeq<T>) -> Result<SampledFn<T>> {
    family_max(&build_family(order, f, t_grid)?)
}

/// `𝒞̃_*^α f = max_t |S̃_t^α f|` over `t_grid`, for half-line `f`.
pub fn carleson_hankel_max<T: Real>(order: Order<T>, f: &SampledFn<T>, t_grid: &ThresholdSeq<T>) -> Result<SampledFn<T>> {
    family_max(&build_hankel_family(order, f, t_grid)?)
}

/// [`carleson_hankel_max`] on a chosen lattice; the odd part of a Dunkl
/// partial sum lives on the Dirichlet lattice of order `α + 1`.
pub fn carleson_hankel_max_with<T: Real>(
    order: Order<T>,
    f: &SampledFn<T>,
    t_grid: &ThresholdSeq<T>,
    boundary: Boundary,
) -> Result<SampledFn<T>> {
    family_max(&HankelProjector::new(order, f.grid().clone(), boundary)?.family(f, t_grid)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[f64]) -> Vec<Complex<f64>> {
        v.iter().map(|&x| Complex::new(x, 0.0)).collect()
    }

    #[test]
    fn variation_small_cases() {
        assert!((variation_at(&c(&[0.0, 1.0, 0.0]), 2.0) - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(variation_at(&c(&[0.5, 1.0, 3.0, 7.5]), 1.0), 7.0);
        assert_eq!(variation_at(&c(&[2.0; 5]), 2.0), 0.0);
        // skipping the middle sample is better for r = 2
        assert_eq!(variation_at(&c(&[0.0, 1.0, 2.0]), 2.0), 2.0);
    }
}
