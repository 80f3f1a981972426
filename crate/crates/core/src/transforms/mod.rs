//! Fourier, Hankel, modified Hankel, Dunkl and modified Dunkl transforms,
//! their inverses, the windowed frequency lattices and transplantation.

pub mod basis;
mod continuous;
pub mod kernels;
pub mod lattice;
mod transplant;

pub use basis::{DunklBasis, HankelBasis};
pub use continuous::{
    check_resolution, dunkl, dunkl_direct, dunkl_inverse, dunkl_modified, dunkl_modified_inverse, fourier, hankel,
    hankel_modified, DirectOperator, DunklOperator, HankelOperator, Kind, TransformKind,
};
pub use lattice::{Boundary, DunklLattice, HankelLattice};
pub use transplant::{transplant_dunkl, transplant_hankel, DunklTransplant, HankelTransplant};
