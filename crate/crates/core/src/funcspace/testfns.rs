use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::grid::Grid;
use super::sampled::{Domain, SampledFn};
use crate::error::Result;
use crate::real::Real;

/// Closed-form test functions on ℝ.
#[derive(Debug, Clone, PartialEq)]
pub enum TestFn<T> {
    Zero,
    /// `exp(−1/(1−s²))`, `s = (x−center)/radius`, zero for `|s| ≥ 1`.
    Bump { center: T, radius: T },
    /// `(x−center)·bump(center, radius)(x)`.
    OddBump { center: T, radius: T },
    /// `exp(−(x−center)²/(2σ²))`, cut to zero beyond `cutoff·σ`.
    Gaussian { center: T, sigma: T, cutoff: T },
    /// Bump envelope times `Σ a_k cos(ω_k x) + b_k sin(ω_k x)`.
    Modulated { center: T, radius: T, modes: Vec<(T, T, T)> },
    Indicator { lo: T, hi: T },
    Sum(Vec<(T, TestFn<T>)>),
    /// `x ↦ f(λx)`.
    Dilated { lambda: T, inner: Box<TestFn<T>> },
}

/// `bump(center, radius)` generator.
pub fn bump<T: Real>(center: T, radius: T) -> TestFn<T> {
    assert!(radius > T::zero(), "bump radius must be positive");
    TestFn::Bump { center, radius }
}

/// Gaussian generator truncated at 12σ.
pub fn gaussian<T: Real>(center: T, sigma: T) -> TestFn<T> {
    TestFn::Gaussian { center, sigma, cutoff: T::lit(12.0) }
}

fn bump_profile<T: Real>(s: T) -> T {
    let q = T::one() - s * s;
    if q <= T::zero() {
        T::zero()
    } else {
        (-T::one() / q).exp()
    }
}

impl<T: Real> TestFn<T> {
    pub fn eval(&self, x: T) -> T {
        match self {
            TestFn::Zero => T::zero(),
            TestFn::Bump { center, radius } => bump_profile((x - *center) / *radius),
            TestFn::OddBump { center, radius } => (x - *center) * bump_profile((x - *center) / *radius),
            TestFn::Gaussian { center, sigma, cutoff } => {
                let s = (x - *center) / *sigma;
                if s.abs() > *cutoff {
                    T::zero()
                } else {
                    (-(s * s) / T::lit(2.0)).exp()
                }
            }
            TestFn::Modulated { center, radius, modes } => {
                let env = bump_profile((x - *center) / *radius);
                if env == T::zero() {
                    return T::zero();
                }
                let s: T = modes.iter().map(|&(w, a, b)| a * (w * x).cos() + b * (w * x).sin()).sum();
                env * s
            }
            TestFn::Indicator { lo, hi } => {
                if x >= *lo && x <= *hi {
                    T::one()
                } else {
                    T::zero()
                }
            }
            TestFn::Sum(parts) => parts.iter().map(|(c, f)| *c * f.eval(x)).sum(),
            TestFn::Dilated { lambda, inner } => inner.eval(*lambda * x),
        }
    }

    /// Closed interval outside which the function vanishes.
    pub fn support(&self) -> (T, T) {
        match self {
            TestFn::Zero => (T::zero(), T::zero()),
            TestFn::Bump { center, radius } | TestFn::OddBump { center, radius } => (*center - *radius, *center + *radius),
            TestFn::Modulated { center, radius, .. } => (*center - *radius, *center + *radius),
            TestFn::Gaussian { center, sigma, cutoff } => (*center - *cutoff * *sigma, *center + *cutoff * *sigma),
            TestFn::Indicator { lo, hi } => (*lo, *hi),
            TestFn::Sum(parts) => parts.iter().fold((T::infinity(), T::neg_infinity()), |(a, b), (_, f)| {
                let (c, d) = f.support();
                (a.min(c), b.max(d))
            }),
            TestFn::Dilated { lambda, inner } => {
                let (a, b) = inner.support();
                (a / *lambda, b / *lambda)
            }
        }
    }

    pub fn dilate(&self, lambda: T) -> Self {
        TestFn::Dilated { lambda, inner: Box::new(self.clone()) }
    }

    pub fn sample(&self, grid: Arc<Grid<T>>, domain: Domain) -> Result<SampledFn<T>> {
        SampledFn::from_real(grid, domain, |x| self.eval(x))
    }
}

/// A named corpus member.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusEntry<T> {
    pub name: String,
    pub func: TestFn<T>,
    /// Support inside `{0.2 ≤ |x| ≤ 5}`.
    pub away_from_zero: bool,
}

/// Half-width of the spatial window that contains every corpus support.
pub const CORPUS_WINDOW: f64 = 6.0;

/// The default 12-function corpus.
///
/// Bumps have radius at least 2 so their spectra are negligible beyond the
/// band resolvable at the default resolution.
pub fn default_corpus<T: Real>(seed: u64) -> Vec<CorpusEntry<T>> {
    let l = T::lit;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let modes: Vec<(T, T, T)> = (0..3)
        .map(|_| (l(rng.gen_range(0.5..3.0)), l(rng.gen_range(-1.0..1.0)), l(rng.gen_range(-1.0..1.0))))
        .collect();
    let entry = |name: &str, func: TestFn<T>, away: bool| CorpusEntry { name: name.to_string(), func, away_from_zero: away };
    vec![
        entry("bump_c0_r2.5", bump(l(0.0), l(2.5)), false),
        entry("bump_c1_r2", bump(l(1.0), l(2.0)), false),
        entry("bump_c-1.5_r2", bump(l(-1.5), l(2.0)), false),
        entry("bump_c0.5_r3", bump(l(0.5), l(3.0)), false),
        entry("bump_c2.6_r2.4", bump(l(2.6), l(2.4)), true),
        entry("bump_c-2.6_r2.4", bump(l(-2.6), l(2.4)), true),
        entry("bump_c3_r2", bump(l(3.0), l(2.0)), true),
        entry("gauss_c0_s0.4", gaussian(l(0.0), l(0.4)), false),
        entry("gauss_c1_s0.4", gaussian(l(1.0), l(0.4)), false),
        entry("xbump_c0_r2.5", TestFn::OddBump { center: l(0.0), radius: l(2.5) }, false),
        entry("modulated_c0_r3", TestFn::Modulated { center: l(0.0), radius: l(3.0), modes }, false),
        entry(
            "twobump_asym",
            TestFn::Sum(vec![(l(1.0), bump(l(2.6), l(2.4))), (l(-0.7), bump(l(-3.0), l(2.0)))]),
            true,
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::super::grid::make_graded_grid;
    use super::super::sampled::integrate;
    use super::*;

    #[test]
    fn bump_values() {
        let b = bump(0.0f64, 1.0);
        assert!((b.eval(0.0) - (-1.0f64).exp()).abs() < 1e-16);
        assert_eq!(b.eval(1.0), 0.0);
        assert_eq!(b.eval(-1.0), 0.0);
        assert_eq!(bump(3.0f64, 2.0).support(), (1.0, 5.0));
    }

    #[test]
    fn bump_integral_against_refined_oracle() {
        let b = bump(0.0f64, 1.0);
        let g = Arc::new(make_graded_grid(-1.0, 1.0, 16, 16, 1.0).unwrap());
        let fine = Arc::new(make_graded_grid(-1.0, 1.0, 64, 16, 1.0).unwrap());
        let a = integrate(&b.sample(g, Domain::FullLine).unwrap()).re;
        let o = integrate(&b.sample(fine, Domain::FullLine).unwrap()).re;
        assert!((a - o).abs() / o < 1e-8);
    }

    #[test]
    fn refinement_convergence() {
        let b = bump(0.3f64, 2.0);
        let g1 = Arc::new(make_graded_grid(-3.0, 3.0, 16, 16, 1.0).unwrap());
        let g2 = Arc::new(make_graded_grid(-3.0, 3.0, 32, 16, 1.0).unwrap());
        let a = integrate(&b.sample(g1, Domain::FullLine).unwrap()).re;
        let c = integrate(&b.sample(g2, Domain::FullLine).unwrap()).re;
        assert!((a - c).abs() / c < 1e-10);
    }

    #[test]
    fn corpus_fits_window() {
        let c = default_corpus::<f64>(1);
        assert_eq!(c.len(), 12);
        for e in &c {
            let (a, b) = e.func.support();
            assert!(a >= -CORPUS_WINDOW && b <= CORPUS_WINDOW, "{}", e.name);
            if e.away_from_zero {
                // every point of the support has 0.2 <= |x| <= 5
                let xs = (0..=1000).map(|k| -6.0 + 12.0 * k as f64 / 1000.0);
                for x in xs {
                    if e.func.eval(x) != 0.0 {
                        assert!(x.abs() >= 0.2 && x.abs() <= 5.0, "{} at {x}", e.name);
                    }
                }
            }
        }
    }

    #[test]
    fn dilation() {
        let b = bump(1.0f64, 2.0);
        let d = b.dilate(2.0);
        assert_eq!(d.eval(0.7), b.eval(1.4));
        assert_eq!(d.support(), (-0.5, 1.5));
    }
}
