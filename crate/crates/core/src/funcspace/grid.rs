use crate::error::{Error, Result};
use crate::real::Real;

use super::quadrature::gauss_legendre;

/// Quadrature grid: strictly increasing nodes with positive weights over
/// `[lo, hi]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid<T> {
    points: Vec<T>,
    weights: Vec<T>,
    lo: T,
    hi: T,
    /// Largest `panel width / nodes in panel`; drives the resolution guard.
    spacing: T,
}

impl<T: Real> Grid<T> {
    /// Validating constructor for externally supplied nodes.
    ///
    /// Without panel information the effective spacing is estimated as
    /// `2/π` times the largest gap (the ratio for Gauss–Legendre panels).
    pub fn new(points: Vec<T>, weights: Vec<T>, lo: T, hi: T) -> Result<Self> {
        let mut gap = T::zero();
        for w in points.windows(2) {
            gap = gap.max(w[1] - w[0]);
        }
        if points.len() == 1 {
            gap = hi - lo;
        }
        let spacing = gap * T::lit(2.0) / T::PI();
        Self::with_spacing(points, weights, lo, hi, spacing)
    }

    fn with_spacing(points: Vec<T>, weights: Vec<T>, lo: T, hi: T, spacing: T) -> Result<Self> {
        if !(lo < hi) {
            return Err(Error::arg(format!("grid needs lo < hi, got [{lo}, {hi}]")));
        }
        if points.is_empty() || points.len() != weights.len() {
            return Err(Error::arg("grid needs matching nonempty points and weights"));
        }
        if points.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::arg("grid points must be strictly increasing"));
        }
        if weights.iter().any(|&w| !(w > T::zero())) {
            return Err(Error::arg("grid weights must be positive"));
        }
        if points[0] < lo || points[points.len() - 1] > hi {
            return Err(Error::arg("grid points must lie inside [lo, hi]"));
        }
        let total: T = weights.iter().copied().sum();
        let len = hi - lo;
        let tol = (T::epsilon() * T::lit(1e4)).max(T::lit(1e-12));
        if ((total - len) / len).abs() > tol {
            return Err(Error::arg(format!("grid weights sum to {total}, expected {len}")));
        }
        Ok(Grid { points, weights, lo, hi, spacing })
    }

    pub fn points(&self) -> &[T] {
        &self.points
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn lo(&self) -> T {
        self.lo
    }

    pub fn hi(&self) -> T {
        self.hi
    }

    /// Effective node spacing used by the resolution guard.
    pub fn spacing(&self) -> T {
        self.spacing
    }

    /// Largest frequency `ξ` such that `e^{iξy}` has at least six nodes per
    /// wavelength on every panel.
    pub fn resolvable_frequency(&self) -> T {
        T::TAU() / (T::lit(6.0) * self.spacing)
    }

    /// Exact mirror symmetry of nodes and weights about 0.
    pub fn is_symmetric(&self) -> bool {
        let n = self.len();
        self.lo == -self.hi
            && (0..n).all(|i| self.points[i] == -self.points[n - 1 - i] && self.weights[i] == self.weights[n - 1 - i])
    }

    /// The strictly positive nodes as a half-line grid on `[0, hi]`.
    pub fn positive_half(&self) -> Result<Self> {
        if !(self.hi > T::zero()) {
            return Err(Error::arg("grid has no positive part"));
        }
        let start = self.points.iter().position(|&x| x > T::zero()).unwrap_or(self.len());
        let lo = if self.lo > T::zero() { self.lo } else { T::zero() };
        Self::with_spacing(self.points[start..].to_vec(), self.weights[start..].to_vec(), lo, self.hi, self.spacing)
    }

    /// Symmetric full-line grid obtained by mirroring a half-line grid on `[0, hi]`.
    pub fn mirrored(&self) -> Result<Self> {
        if self.lo != T::zero() {
            return Err(Error::arg("mirroring needs a grid starting at 0"));
        }
        let mut points: Vec<T> = self.points.iter().rev().map(|&x| -x).collect();
        points.extend_from_slice(&self.points);
        let mut weights: Vec<T> = self.weights.iter().rev().copied().collect();
        weights.extend_from_slice(&self.weights);
        Self::with_spacing(points, weights, -self.hi, self.hi, self.spacing)
    }

    /// The grid `{c·x}` carrying the weights of `dx` after the substitution.
    pub fn scaled(&self, c: T) -> Result<Self> {
        if !(c > T::zero()) {
            return Err(Error::arg("scale factor must be positive"));
        }
        Self::with_spacing(
            self.points.iter().map(|&x| x * c).collect(),
            self.weights.iter().map(|&w| w * c).collect(),
            self.lo * c,
            self.hi * c,
            self.spacing * c,
        )
    }

    /// Index of a node equal to `x`, if any.
    pub fn index_of(&self, x: T) -> Option<usize> {
        self.points.binary_search_by(|p| p.partial_cmp(&x).expect("finite grid")).ok()
    }
}

/// Composite Gauss–Legendre grid with panels graded toward 0.
///
/// `n_panels` counts panels per side when `lo < 0 < hi`; then each side is
/// graded toward 0 and a symmetric interval gives an exactly symmetric grid.
/// For one-sided intervals the grading points toward the endpoint nearer 0.
pub fn make_graded_grid<T: Real>(lo: T, hi: T, n_panels: usize, nodes_per_panel: usize, grading: T) -> Result<Grid<T>> {
    if !(lo < hi) {
        return Err(Error::arg(format!("make_graded_grid needs lo < hi, got [{lo}, {hi}]")));
    }
    if n_panels == 0 || nodes_per_panel == 0 {
        return Err(Error::arg("n_panels and nodes_per_panel must be positive"));
    }
    if !(grading >= T::one()) {
        return Err(Error::arg("grading exponent must be >= 1"));
    }
    let (gx, gw) = gauss_legendre::<T>(nodes_per_panel);
    if lo < T::zero() && hi > T::zero() {
        let pos = one_sided(T::zero(), hi, n_panels, &gx, &gw, grading);
        let neg = if lo == -hi {
            Panels {
                points: pos.points.iter().rev().map(|&x| -x).collect(),
                weights: pos.weights.iter().rev().copied().collect(),
                spacing: pos.spacing,
            }
        } else {
            let p = one_sided(T::zero(), -lo, n_panels, &gx, &gw, grading);
            Panels {
                points: p.points.iter().rev().map(|&x| -x).collect(),
                weights: p.weights.iter().rev().copied().collect(),
                spacing: p.spacing,
            }
        };
        let mut points = neg.points;
        points.extend(pos.points);
        let mut weights = neg.weights;
        weights.extend(pos.weights);
        return Grid::with_spacing(points, weights, lo, hi, neg.spacing.max(pos.spacing));
    }
    let p = if hi <= T::zero() {
        let q = one_sided(-hi, -lo, n_panels, &gx, &gw, grading);
        Panels {
            points: q.points.iter().rev().map(|&x| -x).collect(),
            weights: q.weights.iter().rev().copied().collect(),
            spacing: q.spacing,
        }
    } else {
        one_sided(lo, hi, n_panels, &gx, &gw, grading)
    };
    Grid::with_spacing(p.points, p.weights, lo, hi, p.spacing)
}

struct Panels<T> {
    points: Vec<T>,
    weights: Vec<T>,
    spacing: T,
}

/// Panels on `[a, b]` (0 ≤ a < b) graded toward `a`.
fn one_sided<T: Real>(a: T, b: T, n: usize, gx: &[T], gw: &[T], grading: T) -> Panels<T> {
    let len = b - a;
    let nf = T::from_count(n);
    let edge = |k: usize| {
        if k == n {
            b
        } else {
            a + len * (T::from_count(k) / nf).powf(grading)
        }
    };
    let mut points = Vec::with_capacity(n * gx.len());
    let mut weights = Vec::with_capacity(n * gx.len());
    let mut spacing = T::zero();
    for k in 0..n {
        let (l, r) = (edge(k), edge(k + 1));
        let half = (r - l) / T::lit(2.0);
        let mid = (r + l) / T::lit(2.0);
        spacing = spacing.max((r - l) / T::from_count(gx.len()));
        if k == 0 && a == T::zero() && grading > T::one() && grading == grading.round() {
            // x = r·s^q (integer q keeps constants exact) smooths |x|^β at 0
            for (x, w) in gx.iter().zip(gw) {
                let s = (T::one() + *x) / T::lit(2.0);
                points.push(r * s.powf(grading));
                weights.push(r * grading * s.powf(grading - T::one()) * *w / T::lit(2.0));
            }
            continue;
        }
        for (x, w) in gx.iter().zip(gw) {
            points.push(mid + half * *x);
            weights.push(half * *w);
        }
    }
    Panels { points, weights, spacing }
}
