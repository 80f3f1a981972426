//! Numerical `A_p` products over a fixed family of intervals.
//!
//! Integrals of `|x|^s(1+|x|)^u` run over panels that double in length away
//! from the left end; an interval starting at 0 uses panels that halve
//! toward 0 plus the analytic tail `ε^{s+1}/(s+1)`.

use rayon::prelude::*;

use super::Weight;
use crate::error::{Error, Result};
use crate::funcspace::gauss_legendre;
use crate::real::Real;
use crate::special::Order;

pub const DEFAULT_INTERVAL_SAMPLES: usize = 16;

const RANGE: i32 = 10;
const STABILITY: f64 = 0.05;
/// Halvings toward 0 before the analytic tail.
const DEPTH: i32 = 48;

#[derive(Clone, Copy)]
struct PowerLaw<T> {
    s: T,
    u: T,
}

impl<T: Real> PowerLaw<T> {
    fn of(w: &Weight<T>) -> Self {
        let (s, u) = w.exponents();
        PowerLaw { s, u }
    }

    fn pow(self, q: T) -> Self {
        PowerLaw { s: self.s * q, u: self.u * q }
    }

    fn times_abs_power(self, e: T) -> Self {
        PowerLaw { s: self.s + e, u: self.u }
    }

    fn eval(self, x: T) -> T {
        x.powf(self.s) * (T::one() + x).powf(self.u)
    }
}

struct Integrator<T> {
    nodes: Vec<T>,
    weights: Vec<T>,
}

impl<T: Real> Integrator<T> {
    fn new(n: usize) -> Self {
        let (nodes, weights) = gauss_legendre(n);
        Integrator { nodes, weights }
    }

    fn panel(&self, f: PowerLaw<T>, a: T, b: T) -> T {
        let two = T::lit(2.0);
        let (m, h) = ((a + b) / two, (b - a) / two);
        self.nodes.iter().zip(&self.weights).map(|(&t, &w)| w * h * f.eval(m + h * t)).sum()
    }

    /// `∫_a^b` for `0 ≤ a < b`.
    fn positive(&self, f: PowerLaw<T>, a: T, b: T) -> T {
        let two = T::lit(2.0);
        if a == T::zero() {
            if !(f.s > -T::one()) {
                return T::infinity();
            }
            let mut acc = T::zero();
            let mut hi = b;
            for _ in 0..DEPTH {
                let lo = hi / two;
                acc += self.panel(f, lo, hi);
                hi = lo;
            }
            return acc + hi.powf(f.s + T::one()) / (f.s + T::one());
        }
        let mut acc = T::zero();
        let mut lo = a;
        while lo < b {
            let hi = (lo * two).min(b);
            acc += self.panel(f, lo, hi);
            lo = hi;
        }
        acc
    }

    /// `∫_lo^hi` of the even extension.
    fn even(&self, f: PowerLaw<T>, lo: T, hi: T) -> T {
        if lo >= T::zero() {
            self.positive(f, lo, hi)
        } else if hi <= T::zero() {
            self.positive(f, -hi, -lo)
        } else {
            self.positive(f, T::zero(), -lo) + self.positive(f, T::zero(), hi)
        }
    }
}

/// Intervals centered at `0, ±2^k` with lengths `2^m`, `|k|, |m| ≤ range`.
fn intervals<T: Real>(range: i32) -> Vec<(T, T)> {
    let two = T::lit(2.0);
    let mut centers = vec![T::zero()];
    for k in -range..=range {
        centers.push(two.powi(k));
        centers.push(-two.powi(k));
    }
    let mut out = Vec::new();
    for &c in &centers {
        for m in -range..=range {
            let h = two.powi(m) / two;
            out.push((c - h, c + h));
        }
    }
    out
}

/// `sup_B ⟨w⟩_B ⟨w^{−1/(p−1)}⟩_B^{p−1}` with averages against `|x|^m dx`.
fn sup_product<T: Real>(w: PowerLaw<T>, p: T, m: T, range: i32, samples: usize) -> T {
    let q = T::one() / (p - T::one());
    let num = w.times_abs_power(m);
    let dual = w.pow(-q).times_abs_power(m);
    let meas = PowerLaw { s: m, u: T::zero() };
    let quad = Integrator::new(samples);
    let products: Vec<T> = intervals(range)
        .par_iter()
        .map(|&(lo, hi)| {
            let mu = quad.even(meas, lo, hi);
            let a = quad.even(num, lo, hi) / mu;
            let b = quad.even(dual, lo, hi) / mu;
            if a.is_finite() && b.is_finite() {
                a * b.powf(p - T::one())
            } else {
                T::infinity()
            }
        })
        .collect();
    products.into_iter().fold(T::zero(), |acc, v| acc.max(v))
}

fn verdict<T: Real>(w: PowerLaw<T>, p: T, m: T, samples: usize) -> Result<(bool, T)> {
    if !(p > T::one()) {
        return Err(Error::arg(format!("A_p needs p > 1, got {p}")));
    }
    if samples == 0 {
        return Err(Error::arg("interval_samples must be positive"));
    }
    let base = sup_product(w, p, m, RANGE, samples);
    if !base.is_finite() {
        return Ok((false, base));
    }
    let wide = sup_product(w, p, m, 2 * RANGE, samples);
    let stable = wide.is_finite() && wide <= base * (T::one() + T::lit(STABILITY));
    Ok((stable, base))
}

/// Numerical `A_p` test: `(is_member, sup_estimate)`. The estimate is the
/// product sup over intervals with `|k|, |m| ≤ 10`; membership also needs
/// the sup over `|k|, |m| ≤ 20` to stay within 5% of it.
pub fn ap_check<T: Real>(weight: &Weight<T>, p: T, interval_samples: usize) -> Result<(bool, T)> {
    verdict(PowerLaw::of(weight), p, T::zero(), interval_samples)
}

/// Closed-form `A_p` membership: `−1 < s < p − 1` for the local exponent
/// and, for `w_{a,b}`, also for the exponent `b` at infinity.
pub fn ap_closed<T: Real>(weight: &Weight<T>, p: T) -> bool {
    let inside = |e: T| -T::one() < e && e < p - T::one();
    p > T::one()
        && match *weight {
            Weight::Power { beta } => inside(beta),
            Weight::Wab { a, b } => inside(a) && inside(b),
        }
}

/// `w ∈ A_p^α`, i.e. `w(x)|x|^{(α+1/2)(2−p)} ∈ A_p`. Power weights use the
/// closed criterion; `w_{a,b}` weights run [`ap_check`] on the reweighted
/// (again `w_{a,b}`) weight.
pub fn ap_alpha_check<T: Real>(weight: &Weight<T>, p: T, alpha: Order<T>) -> Result<bool> {
    let e = alpha.half_shift() * (T::lit(2.0) - p);
    let r = weight.reweighted(e);
    match r {
        Weight::Power { .. } => Ok(ap_closed(&r, p)),
        Weight::Wab { .. } => Ok(ap_check(&r, p, DEFAULT_INTERVAL_SAMPLES)?.0),
    }
}

/// The `A_p` product with interval averages taken against `|x|^{2α+1} dx`
/// instead of `dx`. Experimental: no membership claim is attached.
pub fn measure_ap_check<T: Real>(weight: &Weight<T>, p: T, alpha: Order<T>, interval_samples: usize) -> Result<(bool, T)> {
    verdict(PowerLaw::of(weight), p, alpha.measure_exponent(), interval_samples)
}
