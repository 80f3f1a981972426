use num_complex::Complex;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::cuts::CutSequence;
use super::{columns, real_fn};
use crate::error::{Error, Result};
use crate::funcspace::SampledFn;
use crate::projections::PartialSumFamily;
use crate::real::Real;

/// `(Σ_j max_{I_j ≤ t_k < I_{j+1}} |a_k − a_{I_j}|²)^{1/2}` for one node;
/// `idx` holds the row indices of the cuts and `j` the number of terms.
fn oscillation_at<T: Real>(a: &[Complex<T>], idx: &[usize], j: usize) -> T {
    let mut total = T::zero();
    for b in 0..j {
        let start = idx[b];
        let end = idx.get(b + 1).copied().unwrap_or(a.len());
        let base = a[start];
        let mut m = T::zero();
        for v in &a[start..end] {
            m = m.max((*v - base).norm_sqr());
        }
        total += m;
    }
    total.sqrt()
}

/// `O²_{I,J}(𝔞_t(x))` at every node of the family.
pub fn oscillation<T: Real>(family: &PartialSumFamily<T>, cuts: &CutSequence<T>) -> Result<SampledFn<T>> {
    let idx = cuts.indices_in(family.t_grid())?;
    let j = cuts.j();
    let v = columns(family).par_iter().map(|a| oscillation_at(a, &idx, j)).collect();
    real_fn(family.base(), v)
}

/// Row indices of the `k`-th random cut sequence: `J + 1` distinct rows of a
/// `T`-row family, sorted. Sequence `k` reads its own ChaCha stream, so the
/// draw does not depend on how many sequences are requested or on threads.
pub fn sample_cut_indices(n_rows: usize, j: usize, seed: u64, k: u64) -> Result<Vec<usize>> {
    if j + 1 > n_rows {
        return Err(Error::arg(format!("J + 1 = {} exceeds the t-grid length {n_rows}", j + 1)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(k);
    let mut idx = sample(&mut rng, n_rows, j + 1).into_vec();
    idx.sort_unstable();
    Ok(idx)
}

/// Pointwise max of `O²_{I,J}` over `n_random` seeded random cut sequences
/// drawn from the family's `t`-grid and the first `J + 1` dyadic thresholds
/// of the grid (when there are that many). A lower bound for the supremum
/// over all `I ∈ 𝔖_J`.
pub fn max_oscillation_over_sampled_sequences<T: Real>(
    family: &PartialSumFamily<T>,
    j: usize,
    n_random: usize,
    seed: u64,
) -> Result<SampledFn<T>> {
    if j == 0 || n_random == 0 {
        return Err(Error::arg("J and n_random must be positive"));
    }
    let n = family.n_rows();
    let mut seqs = (0..n_random as u64).map(|k| sample_cut_indices(n, j, seed, k)).collect::<Result<Vec<_>>>()?;
    let dy = family.t_grid().dyadic_subsequence();
    if dy.len() > j {
        let cuts = CutSequence::new(dy, j)?;
        seqs.push(cuts.indices_in(family.t_grid())?);
    }
    let v = columns(family)
        .par_iter()
        .map(|a| seqs.iter().fold(T::zero(), |m, idx| m.max(oscillation_at(a, idx, j))))
        .collect();
    real_fn(family.base(), v)
}
