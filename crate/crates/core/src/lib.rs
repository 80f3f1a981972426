pub mod classical_ops;
pub mod error;
pub mod funcspace;
pub mod harness;
pub mod projections;
pub mod real;
pub mod seminorms;
pub mod special;
pub mod transforms;
pub mod weights;

pub use error::{Error, Result};
pub use real::Real;

/// `f64` instantiations of the generic types.
pub type Grid64 = funcspace::Grid<f64>;
pub type SampledFn64 = funcspace::SampledFn<f64>;
pub type Order64 = special::Order<f64>;
pub type ThresholdSeq64 = projections::ThresholdSeq<f64>;
pub type PartialSumFamily64 = projections::PartialSumFamily<f64>;
pub type NormSpec64 = weights::NormSpec<f64>;
pub type Weight64 = weights::Weight<f64>;
