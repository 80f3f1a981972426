//! Bessel functions of the first kind, the normalized kernel `J_α(u)/u^α`,
//! the gamma function and positive zeros of `J_ν`.
//!
//! All functions are pure and reentrant.

mod bessel;
mod gamma;
mod zeros;

pub use bessel::{bessel_j, bessel_j_normalized, bessel_j_raw, bessel_j_normalized_raw};
pub use gamma::{gamma, ln_gamma};
pub use zeros::bessel_zeros;

use crate::error::{Error, Result};
use crate::real::Real;

/// Order `α ≥ −1/2` of a Bessel kernel or transform.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Order<T> {
    alpha: T,
}

impl<T: Real> Order<T> {
    pub fn new(alpha: T) -> Result<Self> {
        if !(alpha >= T::lit(-0.5)) {
            return Err(Error::arg(format!("order must satisfy alpha >= -1/2, got {alpha}")));
        }
        Ok(Order { alpha })
    }

    #[inline]
    pub fn alpha(&self) -> T {
        self.alpha
    }

    /// The order `α + 1`, used for odd parts.
    #[inline]
    pub fn shifted(&self) -> Self {
        Order { alpha: self.alpha + T::one() }
    }

    /// Exponent `α + 1/2` of the multiplication operator relating the
    /// weighted and modified transforms.
    #[inline]
    pub fn half_shift(&self) -> T {
        self.alpha + T::lit(0.5)
    }

    /// Exponent `2α + 1` of the measure `|x|^{2α+1} dx`.
    #[inline]
    pub fn measure_exponent(&self) -> T {
        T::lit(2.0) * self.alpha + T::one()
    }
}

/// Order `(n − 2)/2` attached to radial functions in dimension `n`.
pub fn radial_order<T: Real>(dimension: usize) -> Result<Order<T>> {
    if dimension == 0 {
        return Err(Error::arg("dimension must be at least 1"));
    }
    Order::new((T::from_count(dimension) - T::lit(2.0)) / T::lit(2.0))
}
