//! Pointwise transform kernels.

use num_complex::Complex;

use crate::real::Real;
use crate::special::{bessel_j_normalized_raw, bessel_j_raw};

/// Dunkl kernel `k_α(u) = ½(J_α(u) − iJ_{α+1}(u))/u^α`, written as
/// `½(j_α(|u|) − i·u·j_{α+1}(|u|))` with `j_ν(v) = J_ν(v)/v^ν` so that it is
/// entire in `u` and valid for negative arguments.
#[inline]
pub fn dunkl_kernel<T: Real>(alpha: T, u: T) -> Complex<T> {
    let a = u.abs();
    let half = T::lit(0.5);
    Complex::new(
        half * bessel_j_normalized_raw(alpha, a),
        -half * u * bessel_j_normalized_raw(alpha + T::one(), a),
    )
}

/// Hankel kernel `J_ν(u)/u^ν`, `u ≥ 0`.
#[inline]
pub fn hankel_kernel<T: Real>(nu: T, u: T) -> T {
    bessel_j_normalized_raw(nu, u)
}

/// Modified Hankel kernel `u^{1/2} J_ν(u)`, `u ≥ 0`.
#[inline]
pub fn hankel_modified_kernel<T: Real>(nu: T, u: T) -> T {
    if u == T::zero() {
        return T::zero();
    }
    if nu == T::lit(-0.5) {
        return bessel_j_normalized_raw(nu, u);
    }
    u.sqrt() * bessel_j_raw(nu, u)
}

/// Modified Dunkl kernel `½|u|^{1/2}(J_α(|u|) − i·sgn(u)·J_{α+1}(|u|))`.
#[inline]
pub fn dunkl_modified_kernel<T: Real>(alpha: T, u: T) -> Complex<T> {
    let a = u.abs();
    let half = T::lit(0.5);
    Complex::new(
        half * hankel_modified_kernel(alpha, a),
        -half * u.signum() * hankel_modified_kernel(alpha + T::one(), a),
    )
}

/// Fourier kernel `e^{−iu}/√(2π)`.
#[inline]
pub fn fourier_kernel<T: Real>(u: T) -> Complex<T> {
    let c = T::one() / T::TAU().sqrt();
    Complex::new(c * u.cos(), -c * u.sin())
}
