//! Moment-angle complex calculator for shifted simplicial complexes.
//!
//! Given a finite abstract simplicial complex K on an ordered vertex set,
//! this crate computes the wedge-of-spheres homotopy decomposition of the
//! moment-angle complex Z_K (equivalently, of the complement of the
//! corresponding complex coordinate subspace arrangement) whenever K is
//! shifted, and verifies it against an independent cohomology oracle built
//! from Hochster's formula and exact integer homology.

pub mod decomposer;
pub mod families;
pub mod hochster;
pub mod scomplex;
pub mod series;
pub mod wedge;
pub mod zhomology;

mod error;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
