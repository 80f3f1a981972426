//! Weighted `L^p` norms, power and `w_{a,b}` weights, numerical `A_p` and
//! `A_p^α` membership checks and the admissible-range predicates.

mod muckenhoupt;
mod ranges;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::funcspace::SampledFn;
use crate::real::Real;
use crate::special::Order;

pub use muckenhoupt::{ap_alpha_check, ap_check, ap_closed, measure_ap_check, DEFAULT_INTERVAL_SAMPLES};
pub use ranges::{beta_star, range_dyadic_oscillation, range_full_oscillation, transplant_range};

/// The space `L^p(ℝ, |x|^{β+2α+1} dx)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormSpec<T> {
    p: T,
    beta: T,
    alpha: Order<T>,
}

impl<T: Real> NormSpec<T> {
    pub fn new(p: T, beta: T, alpha: Order<T>) -> Result<Self> {
        if !(p > T::one()) || !p.is_finite() {
            return Err(Error::arg(format!("p must lie in (1, ∞), got {p}")));
        }
        if !beta.is_finite() {
            return Err(Error::arg("beta must be finite"));
        }
        Ok(NormSpec { p, beta, alpha })
    }

    pub fn p(&self) -> T {
        self.p
    }

    pub fn beta(&self) -> T {
        self.beta
    }

    pub fn alpha(&self) -> Order<T> {
        self.alpha
    }

    /// `β + 2α + 1`.
    pub fn exponent(&self) -> T {
        self.beta + self.alpha.measure_exponent()
    }
}

/// Even weight `|x|^s (1+|x|)^u`: `power(β)` has `(s, u) = (β, 0)` and
/// `w_{a,b}` has `(a, b − a)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Weight<T> {
    Power { beta: T },
    Wab { a: T, b: T },
}

impl<T: Real> Weight<T> {
    pub fn power(beta: T) -> Self {
        Weight::Power { beta }
    }

    pub fn w_ab(a: T, b: T) -> Self {
        Weight::Wab { a, b }
    }

    pub fn unit() -> Self {
        Weight::Power { beta: T::zero() }
    }

    /// `(s, u)` with `w(x) = |x|^s (1+|x|)^u`.
    pub fn exponents(&self) -> (T, T) {
        match *self {
            Weight::Power { beta } => (beta, T::zero()),
            Weight::Wab { a, b } => (a, b - a),
        }
    }

    pub fn eval(&self, x: T) -> T {
        let (s, u) = self.exponents();
        let ax = x.abs();
        let v = ax.powf(s);
        if u == T::zero() {
            v
        } else {
            v * (T::one() + ax).powf(u)
        }
    }

    /// `w(x)|x|^e`, which stays in the same family.
    pub fn reweighted(&self, e: T) -> Self {
        match *self {
            Weight::Power { beta } => Weight::Power { beta: beta + e },
            Weight::Wab { a, b } => Weight::Wab { a: a + e, b: b + e },
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Weight::Power { beta } => format!("power(beta={beta})"),
            Weight::Wab { a, b } => format!("w_ab(a={a},b={b})"),
        }
    }
}

/// `(∫ |f|^p w(x) |x|^{β+2α+1} dx)^{1/p}` by the grid quadrature.
pub fn weighted_lp_norm<T: Real>(f: &SampledFn<T>, spec: &NormSpec<T>, weight: &Weight<T>) -> Result<T> {
    let e = spec.exponent();
    let local = e + weight.exponents().0;
    if !(local > -T::one()) {
        return Err(Error::domain(format!("|x|^{local} is not integrable at 0")));
    }
    let p = spec.p();
    let mut acc = T::zero();
    for ((&x, &w), v) in f.points().iter().zip(f.grid().weights()).zip(f.values()) {
        let a = v.norm();
        if a != T::zero() {
            acc += w * a.powf(p) * weight.eval(x) * x.abs().powf(e);
        }
    }
    Ok(acc.powf(p.recip()))
}
