//! Discrete frequency lattices of the windowed model.
//!
//! For functions supported in `[−R, R]` the Dunkl kernels at the
//! frequencies `{0} ∪ {±s_k/R}`, `s_k` the positive zeros of `J_{α+1}`,
//! are orthogonal in `L²([−R,R], |x|^{2α+1}dx)` (at those zeros
//! `J_{α+2} = −J_α`, which equalizes the even and odd normalizations).
//! Hence
//!
//! `f(x) = Σ_λ 𝒟_α f(λ)·k_α(−xλ)·W_λ`
//!
//! with explicit weights `W_λ`, and the continuous coefficients `𝒟_α f(λ)`
//! are exact. Half-line lattices of Neumann type (`0` and zeros of
//! `J_{ν+1}`) and Dirichlet type (zeros of `J_ν`) play the same role for
//! `ℋ_ν`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::real::Real;
use crate::special::{bessel_j_normalized_raw, bessel_zeros, Order};

/// Boundary condition selecting a half-line lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Boundary {
    /// `0` and the zeros of `J_{ν+1}`.
    Neumann,
    /// The zeros of `J_ν`.
    Dirichlet,
}

fn check_window<T: Real>(window: T, band: T) -> Result<()> {
    if !(window > T::zero()) || !(band > T::zero()) {
        return Err(Error::arg("lattice needs a positive window and band"));
    }
    Ok(())
}

/// Lattice for `ℋ_ν` on `[0, R]`.
#[derive(Debug, Clone, PartialEq)]
pub struct HankelLattice<T> {
    nu: T,
    window: T,
    boundary: Boundary,
    nodes: Vec<T>,
    weights: Vec<T>,
}

impl<T: Real> HankelLattice<T> {
    /// All lattice frequencies not exceeding `band`.
    pub fn new(nu: T, window: T, boundary: Boundary, band: T) -> Result<Self> {
        check_window(window, band)?;
        if !(nu >= T::lit(-0.5)) {
            return Err(Error::arg("lattice order must be >= -1/2"));
        }
        let r = window;
        let two = T::lit(2.0);
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        match boundary {
            Boundary::Neumann => {
                let c0 = bessel_j_normalized_raw(nu, T::zero());
                nodes.push(T::zero());
                weights.push((two * nu + two) / (r.powf(two * nu + two) * c0 * c0));
                for s in bessel_zeros(nu + T::one(), band * r) {
                    let n = bessel_j_normalized_raw(nu, s);
                    nodes.push(s / r);
                    weights.push(two / (r.powf(two * nu + two) * n * n));
                }
            }
            Boundary::Dirichlet => {
                for s in bessel_zeros(nu, band * r) {
                    let lam = s / r;
                    let n = bessel_j_normalized_raw(nu + T::one(), s);
                    nodes.push(lam);
                    weights.push(two / (r.powf(two * nu + T::lit(4.0)) * lam * lam * n * n));
                }
            }
        }
        Ok(HankelLattice { nu, window, boundary, nodes, weights })
    }

    pub fn order(&self) -> T {
        self.nu
    }

    pub fn window(&self) -> T {
        self.window
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    /// Frequencies, ascending.
    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    /// Synthesis weights `W_λ` (they include the density `λ^{2ν+1}dλ`).
    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Lattice for `𝒟_α` on `[−R, R]`.
///
/// Nodes are ordered `0, −λ₁, λ₁, −λ₂, λ₂, …`, i.e. by `|λ|`, so partial
/// sums are prefix sums.
#[derive(Debug, Clone, PartialEq)]
pub struct DunklLattice<T> {
    order: Order<T>,
    window: T,
    nodes: Vec<T>,
    weights: Vec<T>,
}

impl<T: Real> DunklLattice<T> {
    pub fn new(order: Order<T>, window: T, band: T) -> Result<Self> {
        let half = HankelLattice::new(order.alpha(), window, Boundary::Neumann, band)?;
        let mut nodes = vec![T::zero()];
        let mut weights = vec![T::lit(2.0) * half.weights[0]];
        for (&l, &w) in half.nodes.iter().zip(&half.weights).skip(1) {
            nodes.push(-l);
            weights.push(w);
            nodes.push(l);
            weights.push(w);
        }
        Ok(DunklLattice { order, window, nodes, weights })
    }

    pub fn order(&self) -> Order<T> {
        self.order
    }

    pub fn window(&self) -> T {
        self.window
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Signed index `j` of node `l`: `0, −1, 1, −2, 2, …`.
    pub fn signed_index(&self, l: usize) -> i64 {
        if l == 0 {
            0
        } else {
            let k = l.div_ceil(2) as i64;
            if l % 2 == 1 {
                -k
            } else {
                k
            }
        }
    }
}

/// Number of leading nodes of an `|λ|`-ordered lattice with `|λ| ≤ t`.
pub fn count_within<T: Real>(nodes: &[T], t: T) -> usize {
    nodes.iter().take_while(|l| l.abs() <= t).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcspace::make_graded_grid;
    use crate::transforms::kernels::{dunkl_kernel, hankel_kernel};
    use num_complex::Complex;

    #[test]
    fn fourier_lattice_is_uniform() {
        let l = DunklLattice::new(Order::new(-0.5f64).unwrap(), 2.0, 10.0).unwrap();
        let h = std::f64::consts::PI / 2.0;
        for (k, (&x, &w)) in l.nodes().iter().zip(l.weights()).enumerate() {
            assert!((x.abs() - h * l.signed_index(k).unsigned_abs() as f64).abs() < 1e-12);
            assert!((w - h).abs() < 1e-12);
        }
    }

    fn gram_dunkl(alpha: f64) -> f64 {
        let r = 3.0;
        let order = Order::new(alpha).unwrap();
        let lat = DunklLattice::new(order, r, 12.0).unwrap();
        let g = make_graded_grid(-r, r, 24, 24, 1.0).unwrap();
        let e = 2.0 * alpha + 1.0;
        let mut worst: f64 = 0.0;
        for a in 0..lat.len() {
            for b in 0..lat.len() {
                let mut s = Complex::new(0.0, 0.0);
                for (&x, &w) in g.points().iter().zip(g.weights()) {
                    let ka = dunkl_kernel(alpha, -x * lat.nodes()[a]);
                    let kb = dunkl_kernel(alpha, -x * lat.nodes()[b]);
                    s += ka * kb.conj() * (w * x.abs().powf(e));
                }
                let v = s * (lat.weights()[a] * lat.weights()[b]).sqrt();
                let want = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((v - want).norm());
            }
        }
        worst
    }

    #[test]
    fn dunkl_lattice_orthonormal() {
        for &a in &[-0.5, 0.0, 0.5, 1.0] {
            let w = gram_dunkl(a);
            assert!(w < 1e-10, "alpha={a} gram error {w}");
        }
    }

    fn gram_hankel(nu: f64, boundary: Boundary) -> f64 {
        let r = 2.5;
        let lat = HankelLattice::new(nu, r, boundary, 15.0).unwrap();
        let g = make_graded_grid(0.0, r, 24, 24, 1.0).unwrap();
        let e = 2.0 * nu + 1.0;
        let mut worst: f64 = 0.0;
        for a in 0..lat.len() {
            for b in 0..lat.len() {
                let s: f64 = g
                    .points()
                    .iter()
                    .zip(g.weights())
                    .map(|(&x, &w)| w * x.powf(e) * hankel_kernel(nu, x * lat.nodes()[a]) * hankel_kernel(nu, x * lat.nodes()[b]))
                    .sum();
                let v = s * (lat.weights()[a] * lat.weights()[b]).sqrt();
                let want = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((v - want).abs());
            }
        }
        worst
    }

    #[test]
    fn hankel_lattices_orthonormal() {
        for &nu in &[-0.5, 0.0, 0.5, 1.5, 2.0] {
            for b in [Boundary::Neumann, Boundary::Dirichlet] {
                let w = gram_hankel(nu, b);
                assert!(w < 1e-10, "nu={nu} {b:?} gram error {w}");
            }
        }
    }
}
