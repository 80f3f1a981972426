//! Grids, sampled functions, quadrature, parity splitting, power
//! multiplication and the test-function corpus.

mod grid;
pub mod io;
mod quadrature;
mod sampled;
mod testfns;

pub use grid::{make_graded_grid, Grid};
pub use quadrature::gauss_legendre;
pub use sampled::{even_odd_join, even_odd_split, integrate, multiply_power, Domain, MultExponent, SampledFn};
pub use testfns::{bump, default_corpus, gaussian, CorpusEntry, TestFn, CORPUS_WINDOW};
