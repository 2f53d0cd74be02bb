use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::is_prime;

/// A finite set of distinct primes, stored strictly increasing.
///
/// The empty simplex is allowed; it is a face of every complex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct PrimeSimplex(Vec<u64>);

impl PrimeSimplex {
    /// Builds a simplex from primes in any order; duplicates collapse.
    pub fn new(primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut v: Vec<u64> = primes.into_iter().collect();
        if let Some(&bad) = v.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::invalid(format!("{bad} is not prime")));
        }
        v.sort_unstable();
        v.dedup();
        Ok(PrimeSimplex(v))
    }

    pub fn empty() -> Self {
        PrimeSimplex(Vec::new())
    }

    pub(crate) fn from_sorted_unchecked(primes: Vec<u64>) -> Self {
        debug_assert!(primes.windows(2).all(|w| w[0] < w[1]));
        PrimeSimplex(primes)
    }

    pub fn primes(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: u64) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    pub fn is_subset(&self, other: &PrimeSimplex) -> bool {
        self.0.iter().all(|p| other.contains(*p))
    }

    pub fn union(&self, other: &PrimeSimplex) -> PrimeSimplex {
        let mut v: Vec<u64> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        PrimeSimplex(v)
    }

    pub fn with(&self, p: u64) -> Result<PrimeSimplex> {
        PrimeSimplex::new(self.0.iter().copied().chain([p]))
    }

    pub fn without(&self, p: u64) -> PrimeSimplex {
        PrimeSimplex(self.0.iter().copied().filter(|&q| q != p).collect())
    }

    /// Product of the primes, when it fits in 128 bits.
    pub fn product(&self) -> Option<u128> {
        self.0
            .iter()
            .try_fold(1u128, |acc, &p| acc.checked_mul(p as u128))
    }
}

impl TryFrom<Vec<u64>> for PrimeSimplex {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        PrimeSimplex::new(v)
    }
}

impl From<PrimeSimplex> for Vec<u64> {
    fn from(s: PrimeSimplex) -> Vec<u64> {
        s.0
    }
}

impl fmt::Display for PrimeSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}
