//! Truncated modulated singular integrals
//! `T_{ε,ξ} f(x) = ∫_{|x−u|>ε} e^{iξ(x−u)} f(u)/(x−u) du`
//! of a piecewise-linear `f`.
//!
//! On a segment with linear piece `ℓ` put `A = ℓ(x)`. Then
//! `ℓ(u)e^{iξ(x−u)} − A` vanishes at `u = x`, so
//!
//! `∫ e^{iξ(x−u)}ℓ(u)/(x−u) du = A·ln|(x−u₁)/(x−u₂)| + ∫ (ℓ(u)e^{iξ(x−u)} − A)/(x−u) du`
//!
//! and the second integrand is smooth. Six Gauss points per segment give
//! `e^{iξx}·Σ w_k ℓ(u_k)e^{−iξu_k}/(x−u_k) − A·Σ w_k/(x−u_k)`; the first sum
//! uses a table of `w_k ℓ(u_k) e^{−iξu_k}` shared by all `x`, the second is
//! independent of `ξ`. Whole segments beyond the cut points are summed by
//! walking outward from the far ends; the two segments cut at `x ± ε` get
//! their own Gauss points.

use num_complex::Complex;
use rayon::prelude::*;

use super::piecewise::PiecewiseLinear;
use crate::funcspace::gauss_legendre;
use crate::real::Real;

const POINTS_PER_SEGMENT: usize = 6;

fn czero<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::zero())
}

/// `e^{iθ}`.
fn cis<T: Real>(theta: T) -> Complex<T> {
    let (s, c) = theta.sin_cos();
    Complex::new(c, s)
}

pub(crate) struct SingularEngine<'a, T> {
    pl: &'a PiecewiseLinear<T>,
    freqs: &'a [T],
    gl_nodes: Vec<T>,
    gl_weights: Vec<T>,
    /// Gauss abscissae and weights of every segment, flattened.
    u: Vec<T>,
    w: Vec<T>,
    /// `(n_segments·6) × n_freq`, row-major.
    table: Vec<Complex<T>>,
}

impl<'a, T: Real> SingularEngine<'a, T> {
    pub fn new(pl: &'a PiecewiseLinear<T>, freqs: &'a [T]) -> Self {
        let (gl_nodes, gl_weights) = gauss_legendre::<T>(POINTS_PER_SEGMENT);
        let ns = pl.n_segments();
        let nf = freqs.len();
        let mut u = Vec::with_capacity(ns * POINTS_PER_SEGMENT);
        let mut w = Vec::with_capacity(ns * POINTS_PER_SEGMENT);
        let mut lv = Vec::with_capacity(ns * POINTS_PER_SEGMENT);
        let two = T::lit(2.0);
        for s in 0..ns {
            let (a, b) = (pl.knots()[s], pl.knots()[s + 1]);
            let (mid, half) = ((a + b) / two, (b - a) / two);
            for (t, wt) in gl_nodes.iter().zip(&gl_weights) {
                let x = mid + half * *t;
                u.push(x);
                w.push(half * *wt);
                lv.push(pl.linear(s, x) * (half * *wt));
            }
        }
        let mut table = vec![czero(); u.len() * nf];
        if nf > 0 {
            table.par_chunks_mut(nf).enumerate().for_each(|(j, row)| {
                for (v, &xi) in row.iter_mut().zip(freqs) {
                    *v = lv[j] * cis(-xi * u[j]);
                }
            });
        }
        SingularEngine { pl, freqs, gl_nodes, gl_weights, u, w, table }
    }

    /// `max_{ε ∈ radii, ξ ∈ freqs} |T_{ε,ξ} f(x)|` for each `x`.
    pub fn max_at(&self, radii: &[T], xs: &[T]) -> Vec<T> {
        xs.par_iter().map(|&x| self.max_one(radii, x)).collect()
    }

    fn max_one(&self, radii: &[T], x: T) -> T {
        let nf = self.freqs.len();
        let pl = self.pl;
        let (lo, hi) = (pl.lo(), pl.hi());
        let phase: Vec<Complex<T>> = self.freqs.iter().map(|&xi| cis(xi * x)).collect();

        // Radii sorted descending so the cut points move toward x.
        let mut order: Vec<usize> = (0..radii.len()).collect();
        order.sort_by(|&a, &b| radii[b].partial_cmp(&radii[a]).expect("finite radii"));

        let mut totals = vec![vec![czero(); nf]; radii.len()];

        // Left side: whole segments strictly left of x − ε.
        let mut acc_g = vec![czero(); nf];
        let mut acc_a = czero();
        let mut next = 0usize;
        for &k in &order {
            let cut = x - radii[k];
            if cut <= lo {
                continue;
            }
            let s_cut = if cut >= hi { pl.n_segments() } else { pl.segment_of(cut) };
            while next < s_cut {
                self.add_segment(next, x, &mut acc_g, &mut acc_a);
                next += 1;
            }
            let t = &mut totals[k];
            for f in 0..nf {
                t[f] += phase[f] * acc_g[f] + acc_a;
            }
            if cut < hi {
                self.add_piece(s_cut, pl.knots()[s_cut], cut, x, &phase, t);
            }
        }

        // Right side: whole segments strictly right of x + ε.
        let mut acc_g = vec![czero(); nf];
        let mut acc_a = czero();
        let mut next = pl.n_segments();
        for &k in &order {
            let cut = x + radii[k];
            if cut >= hi {
                continue;
            }
            let s_cut = if cut <= lo { None } else { Some(pl.segment_of(cut)) };
            let first_whole = s_cut.map_or(0, |s| s + 1);
            while next > first_whole {
                next -= 1;
                self.add_segment(next, x, &mut acc_g, &mut acc_a);
            }
            let t = &mut totals[k];
            for f in 0..nf {
                t[f] += phase[f] * acc_g[f] + acc_a;
            }
            if let Some(s) = s_cut {
                self.add_piece(s, cut, pl.knots()[s + 1], x, &phase, t);
            }
        }

        let mut best = T::zero();
        for t in &totals {
            for v in t {
                best = best.max(v.norm());
            }
        }
        best
    }

    fn add_segment(&self, s: usize, x: T, acc_g: &mut [Complex<T>], acc_a: &mut Complex<T>) {
        let nf = self.freqs.len();
        let (z0, z1) = (self.pl.knots()[s], self.pl.knots()[s + 1]);
        let mut wr_sum = T::zero();
        for k in 0..POINTS_PER_SEGMENT {
            let j = s * POINTS_PER_SEGMENT + k;
            let r = T::one() / (x - self.u[j]);
            wr_sum += self.w[j] * r;
            let row = &self.table[j * nf..(j + 1) * nf];
            for (a, &g) in acc_g.iter_mut().zip(row) {
                *a += g * r;
            }
        }
        let amp = self.pl.linear(s, x);
        *acc_a += amp * (((x - z0) / (x - z1)).abs().ln() - wr_sum);
    }

    /// Adds `∫_a^b` over part of segment `s` to every frequency of `out`.
    fn add_piece(&self, s: usize, a: T, b: T, x: T, phase: &[Complex<T>], out: &mut [Complex<T>]) {
        if !(b > a) {
            return;
        }
        let two = T::lit(2.0);
        let (mid, half) = ((a + b) / two, (b - a) / two);
        let amp = self.pl.linear(s, x);
        let mut wr_sum = T::zero();
        let mut pts = [(T::zero(), czero::<T>()); POINTS_PER_SEGMENT];
        for (k, (t, wt)) in self.gl_nodes.iter().zip(&self.gl_weights).enumerate() {
            let u = mid + half * *t;
            let wr = half * *wt / (x - u);
            wr_sum += wr;
            pts[k] = (u, self.pl.linear(s, u) * wr);
        }
        let corr = amp * (((x - a) / (x - b)).abs().ln() - wr_sum);
        for (f, &xi) in self.freqs.iter().enumerate() {
            let mut g = czero();
            for &(u, v) in &pts {
                g += v * cis(-xi * u);
            }
            out[f] += phase[f] * g + corr;
        }
    }
}
