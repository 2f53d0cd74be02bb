//! Prime simplicial complexes of finite groups.

pub mod analysis;
pub mod complex;
pub mod error;
pub mod groups;
pub mod io;
pub mod numtheory;
pub mod oracle;

pub use complex::{PrimeComplex, PrimeGraph, PrimeSimplex, Spectrum};
pub use error::{Error, Result};
pub use groups::GroupSpec;
