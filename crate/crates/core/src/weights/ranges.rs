use crate::error::{Error, Result};
use crate::real::Real;
use crate::special::Order;

/// `(α + 1/2)(2 − p)`.
fn shift<T: Real>(alpha: Order<T>, p: T) -> T {
    alpha.half_shift() * (T::lit(2.0) - p)
}

/// `−1 < β + (α+1/2)(2−p) < p/2 − 1`, or `p = 2, β = 0`; needs `p ≥ 2`.
pub fn range_full_oscillation<T: Real>(p: T, beta: T, alpha: Order<T>) -> Result<bool> {
    if !(p >= T::lit(2.0)) {
        return Err(Error::arg(format!("the full oscillation range needs p >= 2, got {p}")));
    }
    if p == T::lit(2.0) && beta == T::zero() {
        return Ok(true);
    }
    let b = beta + shift(alpha, p);
    Ok(-T::one() < b && b < p / T::lit(2.0) - T::one())
}

/// `−1 < β + (α+1/2)(2−p) < p − 1`; false for `p ≤ 1`.
pub fn range_dyadic_oscillation<T: Real>(p: T, beta: T, alpha: Order<T>) -> bool {
    if !(p > T::one()) {
        return false;
    }
    let b = beta + shift(alpha, p);
    -T::one() < b && b < p - T::one()
}

/// `−1 − p·min(α+1/2, γ+1/2) < β < −1 + p·min(α+3/2, γ+3/2)`; false for `p ≤ 1`.
pub fn transplant_range<T: Real>(p: T, beta: T, alpha: Order<T>, gamma: Order<T>) -> bool {
    if !(p > T::one()) {
        return false;
    }
    let lo = -T::one() - p * alpha.half_shift().min(gamma.half_shift());
    let hi = -T::one() + p * (alpha.half_shift() + T::one()).min(gamma.half_shift() + T::one());
    lo < beta && beta < hi
}

/// `β* = β − (α+1/2)(2−p)`.
pub fn beta_star<T: Real>(beta: T, alpha: Order<T>, p: T) -> T {
    beta - shift(alpha, p)
}
