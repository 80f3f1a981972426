//! Partial-sum projections `𝒮_t^α`, `S̃_t^α`, Fourier and radial partial
//! sums, threshold sequences and precomputed partial-sum families.
//!
//! Projections act on the lattice bases of [`crate::transforms::basis`]:
//! the frequency cut keeps the basis functions with `|λ| ≤ t`, so the
//! projection identities hold to quadrature accuracy.

mod family;
mod projector;
mod threshold;

pub use family::{PartialSumFamily, FAMILY_HEADER};
pub use projector::{
    build_family, build_hankel_family, divide_by_x, dunkl_partial_sum, fourier_partial_sum, hankel_partial_sum,
    hankel_partial_sum_with, lift_half, radial_partial_sum, DunklProjector, HankelProjector,
};
pub use threshold::{snap_threshold, ThresholdSeq};
