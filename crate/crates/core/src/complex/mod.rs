//! Prime simplices, prime simplicial complexes, prime graphs and spectra.

mod graph;
mod prime_complex;
mod simplex;
mod spectrum;

pub use graph::PrimeGraph;
pub use prime_complex::{PrimeComplex, MAX_VERTICES};
pub use simplex::PrimeSimplex;
pub use spectrum::Spectrum;
