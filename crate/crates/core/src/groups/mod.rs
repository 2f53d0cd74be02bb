//! Closed-form complexes of group families and the torus machinery for `PSL_n(q)`.

mod families;
mod lie;
mod spec;

pub use families::{
    alternating_complex, nilpotent_complex, psl2_complex, psl3_complex, psu3_complex,
    ree2g2_purity, suzuki_complex, symmetric_complex, ReePurity, ReeTorus,
};
pub use lie::{
    pure2_parameter_screen, rank_bound, torus_order, torus_readings, torus_simplex_criterion,
    ScreenKind, TorusOrder, TorusReadings,
};
pub use spec::GroupSpec;

use crate::complex::PrimeComplex;
use crate::error::{Error, Result};
use crate::io::Fixtures;

/// Complex of the group described by `spec`. Fixtures are read from `fixtures`.
pub fn complex_of(spec: &GroupSpec, fixtures: &Fixtures) -> Result<PrimeComplex> {
    match spec {
        GroupSpec::Symmetric(n) => symmetric_complex(*n),
        GroupSpec::Alternating(n) => alternating_complex(*n),
        GroupSpec::Nilpotent(primes) => nilpotent_complex(primes),
        GroupSpec::Psl2(q) => psl2_complex(*q),
        GroupSpec::Psl3(q) => psl3_complex(*q),
        GroupSpec::Psu3(q) => psu3_complex(*q),
        GroupSpec::Suzuki(m) => suzuki_complex(*m),
        GroupSpec::Psl { n: 2, q } => psl2_complex(*q),
        GroupSpec::Psl { n: 3, q } => psl3_complex(*q),
        GroupSpec::Psl { n, q } => Err(Error::UnsupportedFamily(format!(
            "PSL({n},{q}): only the torus criterion is available for n >= 4"
        ))),
        GroupSpec::Ree(m) => Err(Error::UnsupportedFamily(format!(
            "2G2({m}): the full complex is not determined; use the purity witness"
        ))),
        GroupSpec::Product(parts) => parts
            .iter()
            .try_fold(PrimeComplex::empty(), |acc, p| acc.join(&complex_of(p, fixtures)?)),
        GroupSpec::Fixture(name) => PrimeComplex::from_spectrum(&fixtures.spectrum(name)?),
    }
}
