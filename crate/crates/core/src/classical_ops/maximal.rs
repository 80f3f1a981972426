use rayon::prelude::*;

use super::piecewise::{Cumulative, PiecewiseLinear};
use crate::real::Real;

/// `max_r (1/2r) ∫_{x−r}^{x+r} |f|` at each point.
pub(crate) fn hardy_littlewood_at<T: Real>(pl: &PiecewiseLinear<T>, radii: &[T], xs: &[T]) -> Vec<T> {
    let cum = Cumulative::new(pl.abs());
    xs.par_iter()
        .map(|&x| {
            radii
                .iter()
                .map(|&r| cum.between(x - r, x + r) / (T::lit(2.0) * r))
                .fold(T::zero(), |m, v| m.max(v))
        })
        .collect()
}

/// `∫_{|x|}^∞ |f(y)|/y dy` at each point.
pub(crate) fn conjugate_hardy_at<T: Real>(pl: &PiecewiseLinear<T>, xs: &[T]) -> Vec<T> {
    let abs = pl.abs();
    let z = abs.knots();
    let n = abs.n_segments();
    let piece = |s: usize, a: T, b: T| -> T {
        // |f| = v0 + m (y − z0) = c + m y on segment s
        let m = (abs.values()[s + 1].re - abs.values()[s].re) / (z[s + 1] - z[s]);
        let c = abs.values()[s].re - m * z[s];
        c * (b / a).ln() + m * (b - a)
    };
    // suffix[s] = ∫_{z_s}^{hi}, defined where z_s > 0
    let mut suffix = vec![T::zero(); n + 1];
    for s in (0..n).rev() {
        suffix[s] = if z[s] > T::zero() { suffix[s + 1] + piece(s, z[s], z[s + 1]) } else { T::nan() };
    }
    xs.par_iter()
        .map(|&x| {
            let y0 = x.abs();
            if y0 >= abs.hi() {
                return T::zero();
            }
            if y0 == T::zero() {
                return T::infinity();
            }
            let start = y0.max(abs.lo());
            let s = abs.segment_of(start);
            piece(s, start, z[s + 1]) + suffix[s + 1]
        })
        .collect()
}
