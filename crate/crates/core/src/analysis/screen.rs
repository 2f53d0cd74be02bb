use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow};
use serde::Serialize;

use crate::complex::PrimeSimplex;
use crate::error::{Error, Result};
use crate::numtheory::{multiplicative_order, prime_set_u64};

/// One cell of the characteristic screen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScreenRow {
    pub p: u64,
    pub r: u64,
    /// Multiplicative order of `p` modulo `r`.
    pub order: u64,
    /// `p^order - 1` has a prime divisor outside the allowed set.
    pub bad: bool,
}

/// Primes `p` of the allowed set with `pi(p - 1)` inside it; only these can
/// be the characteristic of a Lie type composition factor.
pub fn characteristic_screen_candidates(allowed: &PrimeSimplex) -> Vec<u64> {
    allowed
        .primes()
        .iter()
        .copied()
        .filter(|&p| prime_set_u64(p - 1).is_subset(allowed))
        .collect()
}

/// `n` has a prime divisor outside `allowed`.
fn escapes(mut n: BigUint, allowed: &PrimeSimplex) -> bool {
    for &r in allowed.primes() {
        let r = BigUint::from(r);
        loop {
            let (q, rem) = n.div_rem(&r);
            if rem != BigUint::ZERO {
                break;
            }
            n = q;
        }
    }
    !n.is_one()
}

/// Orders `i(p, r)` and bad flags for every candidate `p` and every other `r` in `allowed`.
pub fn characteristic_screen(allowed: &PrimeSimplex) -> Result<Vec<ScreenRow>> {
    let candidates = characteristic_screen_candidates(allowed);
    if candidates.is_empty() {
        return Err(Error::invalid(format!("{allowed} contains no candidate characteristic")));
    }
    let mut rows = Vec::new();
    for &p in &candidates {
        for &r in allowed.primes() {
            if r == p {
                continue;
            }
            let order = multiplicative_order(p, r)?;
            let exponent = u32::try_from(order).map_err(|_| Error::ResourceLimit("order too large".into()))?;
            let value = Pow::pow(BigUint::from(p), exponent) - 1u32;
            rows.push(ScreenRow {
                p,
                r,
                order,
                bad: escapes(value, allowed),
            });
        }
    }
    Ok(rows)
}
