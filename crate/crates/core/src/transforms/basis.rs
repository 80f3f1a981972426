//! Orthonormal lattice bases sampled on a quadrature grid.
//!
//! A basis stores the analysis map `f ↦ c_j = √W_j·𝒯f(λ_j)` and the
//! synthesis map `c ↦ Σ_j c_j·√W_j·φ_j(x)`, where `𝒯` is the transform of
//! the lattice and `φ_j` its inverse kernel at frequency `λ_j`. Keeping the
//! coefficients orthonormal makes prefix synthesis an orthogonal projection
//! and lets bases of different orders be paired index by index.

use std::sync::Arc;

use num_complex::Complex;
use rayon::prelude::*;

use super::kernels::{dunkl_kernel, hankel_kernel};
use super::lattice::{count_within, Boundary, DunklLattice, HankelLattice};
use crate::error::{Error, Result};
use crate::funcspace::{Domain, Grid, SampledFn};
use crate::real::Real;
use crate::special::Order;

fn window_of<T: Real>(grid: &Grid<T>) -> T {
    grid.hi().max(-grid.lo())
}

fn czero<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::zero())
}

/// Lattice basis on a full-line grid, for `𝒟_α` (or `D_α` when modified).
#[derive(Debug, Clone)]
pub struct DunklBasis<T> {
    lattice: DunklLattice<T>,
    grid: Arc<Grid<T>>,
    modified: bool,
    /// `n_lat × n_x`, row-major.
    analysis: Vec<Complex<T>>,
    /// `n_x × n_lat`, row-major.
    synthesis: Vec<Complex<T>>,
}

impl<T: Real> DunklBasis<T> {
    /// Basis for the grid's window `[−R, R]`, up to the grid's resolvable band.
    pub fn new(order: Order<T>, grid: Arc<Grid<T>>, modified: bool) -> Result<Self> {
        let band = grid.resolvable_frequency();
        Self::with_band(order, grid, modified, band)
    }

    pub fn with_band(order: Order<T>, grid: Arc<Grid<T>>, modified: bool, band: T) -> Result<Self> {
        if !grid.is_symmetric() {
            return Err(Error::arg("Dunkl lattice bases need a grid symmetric about 0"));
        }
        if band > grid.resolvable_frequency() * (T::one() + T::lit(1e-12)) {
            return Err(Error::resolution(format!(
                "lattice band {band} exceeds the resolvable limit {} of the grid",
                grid.resolvable_frequency()
            )));
        }
        let lattice = DunklLattice::new(order, window_of(&grid), band)?;
        let a = order.alpha();
        let (rho, sigma) = density(&grid, order.half_shift(), order.measure_exponent(), modified);
        let xs = grid.points();
        let nx = xs.len();
        let nl = lattice.len();
        let sw: Vec<T> = lattice.weights().iter().map(|w| w.sqrt()).collect();
        let mut analysis = vec![czero(); nl * nx];
        analysis.par_chunks_mut(nx.max(1)).enumerate().for_each(|(j, row)| {
            let l = lattice.nodes()[j];
            for (i, v) in row.iter_mut().enumerate() {
                *v = dunkl_kernel(a, xs[i] * l) * (rho[i] * sw[j]);
            }
        });
        let mut synthesis = vec![czero(); nx * nl];
        synthesis.par_chunks_mut(nl.max(1)).enumerate().for_each(|(i, row)| {
            for (j, v) in row.iter_mut().enumerate() {
                *v = dunkl_kernel(a, -xs[i] * lattice.nodes()[j]) * (sigma[i] * sw[j]);
            }
        });
        Ok(DunklBasis { lattice, grid, modified, analysis, synthesis })
    }

    pub fn lattice(&self) -> &DunklLattice<T> {
        &self.lattice
    }

    pub fn grid(&self) -> &Arc<Grid<T>> {
        &self.grid
    }

    pub fn is_modified(&self) -> bool {
        self.modified
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    /// Highest lattice frequency.
    pub fn band(&self) -> T {
        self.lattice.nodes().last().map_or(T::zero(), |l| l.abs())
    }

    /// Number of basis functions with `|λ| ≤ t`.
    pub fn count_within(&self, t: T) -> usize {
        count_within(self.lattice.nodes(), t)
    }

    pub fn analyze(&self, f: &SampledFn<T>) -> Result<Vec<Complex<T>>> {
        check_on(f, &self.grid, Domain::FullLine)?;
        Ok(analyze_rows(&self.analysis, f.values(), self.len()))
    }

    /// `Σ_{j<n} c_j·basis_j` on the grid.
    pub fn synthesize(&self, coeffs: &[Complex<T>], n: usize) -> Result<SampledFn<T>> {
        let values = synthesize_rows(&self.synthesis, self.len(), coeffs, n)?;
        SampledFn::new(self.grid.clone(), values, Domain::FullLine)
    }

    /// Synthesis rows for the prefix counts `ns` (nondecreasing), accumulated
    /// in a fixed order so every row is a deterministic partial sum.
    pub fn prefix_syntheses(&self, coeffs: &[Complex<T>], ns: &[usize]) -> Result<Vec<Vec<Complex<T>>>> {
        prefix_rows(&self.synthesis, self.len(), self.grid.len(), coeffs, ns)
    }
}

/// Lattice basis on a half-line grid, for `ℋ_ν` (or `H_ν` when modified).
#[derive(Debug, Clone)]
pub struct HankelBasis<T> {
    lattice: HankelLattice<T>,
    grid: Arc<Grid<T>>,
    modified: bool,
    analysis: Vec<T>,
    synthesis: Vec<T>,
}

impl<T: Real> HankelBasis<T> {
    pub fn new(nu: T, grid: Arc<Grid<T>>, boundary: Boundary, modified: bool) -> Result<Self> {
        let band = grid.resolvable_frequency();
        Self::with_band(nu, grid, boundary, modified, band)
    }

    pub fn with_band(nu: T, grid: Arc<Grid<T>>, boundary: Boundary, modified: bool, band: T) -> Result<Self> {
        if grid.lo() < T::zero() {
            return Err(Error::arg("Hankel lattice bases need a half-line grid"));
        }
        if band > grid.resolvable_frequency() * (T::one() + T::lit(1e-12)) {
            return Err(Error::resolution(format!(
                "lattice band {band} exceeds the resolvable limit {} of the grid",
                grid.resolvable_frequency()
            )));
        }
        let lattice = HankelLattice::new(nu, grid.hi(), boundary, band)?;
        let half = nu + T::lit(0.5);
        let (rho, sigma) = density(&grid, half, T::lit(2.0) * nu + T::one(), modified);
        let xs = grid.points();
        let nx = xs.len();
        let nl = lattice.len();
        let sw: Vec<T> = lattice.weights().iter().map(|w| w.sqrt()).collect();
        let mut analysis = vec![T::zero(); nl * nx];
        analysis.par_chunks_mut(nx.max(1)).enumerate().for_each(|(j, row)| {
            let l = lattice.nodes()[j];
            for (i, v) in row.iter_mut().enumerate() {
                *v = hankel_kernel(nu, xs[i] * l) * rho[i] * sw[j];
            }
        });
        let mut synthesis = vec![T::zero(); nx * nl];
        synthesis.par_chunks_mut(nl.max(1)).enumerate().for_each(|(i, row)| {
            for (j, v) in row.iter_mut().enumerate() {
                *v = hankel_kernel(nu, xs[i] * lattice.nodes()[j]) * sigma[i] * sw[j];
            }
        });
        Ok(HankelBasis { lattice, grid, modified, analysis, synthesis })
    }

    pub fn lattice(&self) -> &HankelLattice<T> {
        &self.lattice
    }

    pub fn grid(&self) -> &Arc<Grid<T>> {
        &self.grid
    }

    pub fn is_modified(&self) -> bool {
        self.modified
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    pub fn band(&self) -> T {
        self.lattice.nodes().last().copied().unwrap_or(T::zero())
    }

    pub fn count_within(&self, t: T) -> usize {
        count_within(self.lattice.nodes(), t)
    }

    pub fn analyze(&self, f: &SampledFn<T>) -> Result<Vec<Complex<T>>> {
        check_on(f, &self.grid, Domain::HalfLine)?;
        Ok(analyze_rows(&self.analysis, f.values(), self.len()))
    }

    pub fn synthesize(&self, coeffs: &[Complex<T>], n: usize) -> Result<SampledFn<T>> {
        let values = synthesize_rows(&self.synthesis, self.len(), coeffs, n)?;
        SampledFn::new(self.grid.clone(), values, Domain::HalfLine)
    }

    pub fn prefix_syntheses(&self, coeffs: &[Complex<T>], ns: &[usize]) -> Result<Vec<Vec<Complex<T>>>> {
        prefix_rows(&self.synthesis, self.len(), self.grid.len(), coeffs, ns)
    }
}

/// Quadrature density for analysis and the synthesis prefactor:
/// `(|x|^{2α+1}·w, 1)` for the plain transform, `(|x|^{α+1/2}·w, |x|^{α+1/2})`
/// for the modified one.
fn density<T: Real>(grid: &Grid<T>, half: T, measure: T, modified: bool) -> (Vec<T>, Vec<T>) {
    grid.points()
        .iter()
        .zip(grid.weights())
        .map(|(&x, &w)| {
            if modified {
                let p = x.abs().powf(half);
                (w * p, p)
            } else {
                (w * x.abs().powf(measure), T::one())
            }
        })
        .unzip()
}

fn check_on<T: Real>(f: &SampledFn<T>, grid: &Grid<T>, domain: Domain) -> Result<()> {
    if **f.grid() != *grid {
        return Err(Error::arg("function is not on the basis grid"));
    }
    if f.domain() != domain {
        return Err(Error::arg(format!("basis expects a {}-line function", domain.tag())));
    }
    Ok(())
}

fn analyze_rows<T: Real, K: Copy + Send + Sync>(m: &[K], f: &[Complex<T>], nl: usize) -> Vec<Complex<T>>
where
    Complex<T>: std::ops::Mul<K, Output = Complex<T>>,
{
    let nx = f.len();
    if nx == 0 {
        return vec![czero(); nl];
    }
    m.par_chunks(nx)
        .map(|row| row.iter().zip(f).fold(czero(), |acc, (&k, &v)| acc + v * k))
        .collect()
}

fn synthesize_rows<T: Real, K: Copy + Send + Sync>(m: &[K], nl: usize, c: &[Complex<T>], n: usize) -> Result<Vec<Complex<T>>>
where
    Complex<T>: std::ops::Mul<K, Output = Complex<T>>,
{
    if c.len() != nl || n > nl {
        return Err(Error::arg(format!("expected {nl} coefficients and a prefix ≤ {nl}")));
    }
    if nl == 0 {
        return Ok(Vec::new());
    }
    Ok(m.par_chunks(nl)
        .map(|row| row[..n].iter().zip(&c[..n]).fold(czero(), |acc, (&k, &v)| acc + v * k))
        .collect())
}

fn prefix_rows<T: Real, K: Copy + Send + Sync>(
    m: &[K],
    nl: usize,
    nx: usize,
    c: &[Complex<T>],
    ns: &[usize],
) -> Result<Vec<Vec<Complex<T>>>>
where
    Complex<T>: std::ops::Mul<K, Output = Complex<T>>,
{
    if c.len() != nl || ns.iter().any(|&n| n > nl) || ns.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::arg("prefix counts must be nondecreasing and within the lattice"));
    }
    let mut out = vec![vec![czero(); nx]; ns.len()];
    if nl == 0 {
        return Ok(out);
    }
    // Per node, walk the lattice once and record the running sum at each cut.
    let per_node: Vec<Vec<Complex<T>>> = m
        .par_chunks(nl)
        .map(|row| {
            let mut acc = czero();
            let mut done = 0;
            ns.iter()
                .map(|&n| {
                    for j in done..n {
                        acc = acc + c[j] * row[j];
                    }
                    done = n;
                    acc
                })
                .collect()
        })
        .collect();
    for (i, vals) in per_node.into_iter().enumerate() {
        for (k, v) in vals.into_iter().enumerate() {
            out[k][i] = v;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcspace::{bump, make_graded_grid};

    #[test]
    fn full_synthesis_reproduces_window_functions() {
        // error is the spectral tail of the bump beyond the band (1e-7..2e-6 here)
        let g = Arc::new(make_graded_grid(-6.0, 6.0, 16, 32, 1.0).unwrap());
        for a in [-0.5, 0.0, 1.0] {
            for modified in [false, true] {
                let b = DunklBasis::new(Order::new(a).unwrap(), g.clone(), modified).unwrap();
                let (c0, r0) = if modified { (2.6, 2.4) } else { (0.7, 2.5) };
                let f = bump(c0, r0).sample(g.clone(), Domain::FullLine).unwrap();
                let c = b.analyze(&f).unwrap();
                let back = b.synthesize(&c, b.len()).unwrap();
                let err = back.max_abs_diff(&f).unwrap();
                assert!(err < 5e-6, "alpha={a} modified={modified} err={err}");
            }
        }
    }

    #[test]
    fn prefix_rows_match_single_syntheses() {
        let g = Arc::new(make_graded_grid(0.0, 6.0, 8, 32, 1.0).unwrap());
        let b = HankelBasis::new(0.5, g.clone(), Boundary::Neumann, false).unwrap();
        let f = bump(2.0, 2.0).sample(g, Domain::HalfLine).unwrap();
        let c = b.analyze(&f).unwrap();
        let ns = [0, 3, 3, 10, b.len()];
        let rows = b.prefix_syntheses(&c, &ns).unwrap();
        for (n, row) in ns.iter().zip(&rows) {
            let s = b.synthesize(&c, *n).unwrap();
            for (u, v) in row.iter().zip(s.values()) {
                assert!((u - v).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn band_above_resolution_rejected() {
        let g = Arc::new(make_graded_grid(-6.0, 6.0, 4, 8, 1.0).unwrap());
        let band = g.resolvable_frequency() * 2.0;
        let r = DunklBasis::with_band(Order::new(0.0).unwrap(), g, false, band);
        assert!(matches!(r, Err(Error::Resolution(_))));
    }
}
