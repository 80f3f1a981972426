//! The Hardy–Littlewood maximal function, the conjugate Hardy operator,
//! the maximal Hilbert transform, the Carleson–Hunt operator and the
//! majorant `|x|^{−(α+1/2)}(M_HL + H + ℋ_* + 𝒞)((·)^{α+1/2} f)(|x|)`.
//!
//! All operators act on the piecewise-linear interpolant of the samples
//! (see [`PiecewiseLinear`]); suprema run over a finite [`SupGrid`].

mod maximal;
mod piecewise;
mod singular;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::funcspace::{Domain, Grid, SampledFn};
use crate::projections::ThresholdSeq;
use crate::real::Real;
use crate::special::Order;

pub use piecewise::PiecewiseLinear;

/// Finite stand-in for `sup_{r>0}`, `sup_{ε>0}` and `sup_{ξ∈ℝ}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SupGrid<T> {
    radii: Vec<T>,
    frequencies: Vec<T>,
}

impl<T: Real> SupGrid<T> {
    /// `radii` strictly decreasing and positive; `frequencies` closed under
    /// negation (stored ascending).
    pub fn new(radii: Vec<T>, mut frequencies: Vec<T>) -> Result<Self> {
        if radii.is_empty() || radii.iter().any(|&r| !(r > T::zero()) || !r.is_finite()) {
            return Err(Error::arg("radii must be nonempty, positive and finite"));
        }
        if radii.windows(2).any(|w| !(w[0] > w[1])) {
            return Err(Error::arg("radii must be strictly decreasing"));
        }
        if frequencies.iter().any(|f| !f.is_finite()) {
            return Err(Error::arg("frequencies must be finite"));
        }
        frequencies.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        frequencies.dedup();
        if frequencies.iter().any(|&f| !frequencies.contains(&-f)) {
            return Err(Error::arg("frequencies must be symmetric about 0"));
        }
        Ok(SupGrid { radii, frequencies })
    }

    /// `{2^k·scale : k = hi, …, lo}`.
    pub fn dyadic_radii(lo: i32, hi: i32, scale: T) -> Result<Vec<T>> {
        if lo > hi || !(scale > T::zero()) {
            return Err(Error::arg("dyadic radii need lo <= hi and a positive scale"));
        }
        Ok((lo..=hi).rev().map(|k| T::lit(2.0).powi(k) * scale).collect())
    }

    /// Radii `2^k`, `k = −8..8`, and frequencies `0, ±t` for the thresholds
    /// resolvable on `grid`.
    pub fn default_for(grid: &Grid<T>, t_grid: &ThresholdSeq<T>) -> Result<Self> {
        let limit = T::PI() / (T::lit(3.0) * grid.spacing());
        let mut freqs = vec![T::zero()];
        for &t in t_grid.values().iter().filter(|&&t| t <= limit) {
            freqs.push(t);
            freqs.push(-t);
        }
        Self::new(Self::dyadic_radii(-8, 8, T::one())?, freqs)
    }

    pub fn radii(&self) -> &[T] {
        &self.radii
    }

    pub fn frequencies(&self) -> &[T] {
        &self.frequencies
    }

    pub fn max_frequency(&self) -> T {
        self.frequencies.iter().fold(T::zero(), |m, f| m.max(f.abs()))
    }

    /// Same radii, frequencies `{0}`.
    pub fn without_modulation(&self) -> Self {
        SupGrid { radii: self.radii.clone(), frequencies: vec![T::zero()] }
    }
}

fn real_output<T: Real>(f: &SampledFn<T>, v: Vec<T>) -> Result<SampledFn<T>> {
    f.with_values(v.into_iter().map(|r| Complex::new(r, T::zero())).collect())
}

fn check_frequencies<T: Real>(grid: &Grid<T>, sup: &SupGrid<T>) -> Result<()> {
    let limit = T::PI() / T::lit(3.0);
    let m = sup.max_frequency() * grid.spacing();
    if m > limit * (T::one() + T::lit(1e-12)) {
        return Err(Error::resolution(format!(
            "max frequency {} times node spacing {} exceeds π/3",
            sup.max_frequency(),
            grid.spacing()
        )));
    }
    Ok(())
}

/// `M_HL f(x) = sup_r (1/2r) ∫_{−r}^{r} |f(x−y)| dy` at `xs`.
pub fn hardy_littlewood_max_at<T: Real>(f: &SampledFn<T>, sup: &SupGrid<T>, xs: &[T]) -> Vec<T> {
    maximal::hardy_littlewood_at(&PiecewiseLinear::from_sampled(f), sup.radii(), xs)
}

/// `M_HL f` on `f`'s grid.
pub fn hardy_littlewood_max<T: Real>(f: &SampledFn<T>, sup: &SupGrid<T>) -> Result<SampledFn<T>> {
    real_output(f, hardy_littlewood_max_at(f, sup, f.points()))
}

/// `Hf(x) = ∫_{|x|}^∞ |f(y)|/y dy` at `xs`.
pub fn conjugate_hardy_at<T: Real>(f: &SampledFn<T>, xs: &[T]) -> Vec<T> {
    maximal::conjugate_hardy_at(&PiecewiseLinear::from_sampled(f), xs)
}

/// `Hf` on `f`'s grid.
pub fn conjugate_hardy<T: Real>(f: &SampledFn<T>) -> Result<SampledFn<T>> {
    real_output(f, conjugate_hardy_at(f, f.points()))
}

/// `ℋ_* f(x) = sup_ε |∫_{|y|>ε} f(x−y)/y dy|` at `xs`.
pub fn maximal_hilbert_at<T: Real>(f: &SampledFn<T>, sup: &SupGrid<T>, xs: &[T]) -> Vec<T> {
    let pl = PiecewiseLinear::from_sampled(f);
    let zero = [T::zero()];
    singular::SingularEngine::new(&pl, &zero).max_at(sup.radii(), xs)
}

/// `ℋ_* f` on `f`'s grid.
pub fn maximal_hilbert<T: Real>(f: &SampledFn<T>, sup: &SupGrid<T>) -> Result<SampledFn<T>> {
    real_output(f, maximal_hilbert_at(f, sup, f.points()))
}

/// `𝒞f(x) = sup_ε sup_ξ |∫_{|y|>ε} e^{iξy} f(x−y)/y dy|` at `xs`.
pub fn carleson_hunt_at<T: Real>(f: &SampledFn<T>, sup: &SupGrid<T>, xs: &[T]) -> Result<Vec<T>> {
    check_frequencies(f.grid(), sup)?;
    let pl = PiecewiseLinear::from_sampled(f);
    Ok(singular::SingularEngine::new(&pl, sup.frequencies()).max_at(sup.radii(), xs))
}

/// `𝒞f` on `f`'s grid.
pub fn carleson_hunt<T: Real>(f: &SampledFn<T>, sup: &SupGrid<T>) -> Result<SampledFn<T>> {
    let v = carleson_hunt_at(f, sup, f.points())?;
    real_output(f, v)
}

/// The four terms of the majorant at the nodes of a half-line `f`, before
/// the outer factor `|x|^{−(α+1/2)}`: `(M_HL g, Hg, ℋ_* g, 𝒞g)` with
/// `g = y^{α+1/2} f` extended by zero to `ℝ`.
pub fn prestini_terms<T: Real>(order: Order<T>, f: &SampledFn<T>, sup: &SupGrid<T>) -> Result<[Vec<T>; 4]> {
    if f.domain() != Domain::HalfLine {
        return Err(Error::arg("the majorant takes a half-line function"));
    }
    check_frequencies(f.grid(), sup)?;
    let e = order.half_shift();
    let g = f.map(|y, v| v * y.powf(e));
    let pl = PiecewiseLinear::from_sampled(&g);
    let xs = g.points();
    let m = maximal::hardy_littlewood_at(&pl, sup.radii(), xs);
    let h = maximal::conjugate_hardy_at(&pl, xs);
    let zero = [T::zero()];
    let hs = singular::SingularEngine::new(&pl, &zero).max_at(sup.radii(), xs);
    let c = singular::SingularEngine::new(&pl, sup.frequencies()).max_at(sup.radii(), xs);
    Ok([m, h, hs, c])
}

/// `|x|^{−(α+1/2)}(M_HL + H + ℋ_* + 𝒞)((·)^{α+1/2} f)(|x|)` on `f`'s grid,
/// without the constant `C_α`.
pub fn prestini_majorant<T: Real>(order: Order<T>, f: &SampledFn<T>, sup: &SupGrid<T>) -> Result<SampledFn<T>> {
    let [m, h, hs, c] = prestini_terms(order, f, sup)?;
    let e = order.half_shift();
    let v = f
        .points()
        .iter()
        .enumerate()
        .map(|(i, &x)| (m[i] + h[i] + hs[i] + c[i]) * x.abs().powf(-e))
        .collect();
    real_output(f, v)
}
