//! Multiplicative orders, cyclotomic values and primitive prime divisors.

use num_bigint::BigUint;
use num_traits::{One, Pow};
use serde::Serialize;

use super::factor::{factor_u64, factorize};
use super::primes::{is_prime, pow_mod};
use crate::error::{Error, Result};

/// Smallest `i >= 1` with `q^i = 1 (mod r)`.
///
/// `r` must be prime and must not divide `q`. The result divides `r - 1`,
/// and `r | q^m - 1` holds exactly when the result divides `m`.
pub fn multiplicative_order(q: u64, r: u64) -> Result<u64> {
    if !is_prime(r) {
        return Err(Error::invalid(format!("modulus {r} is not prime")));
    }
    if q.is_multiple_of(r) {
        return Err(Error::invalid(format!("{r} divides {q}")));
    }
    let mut order = r - 1;
    for (p, _) in factor_u64(r - 1) {
        while order.is_multiple_of(p) && pow_mod(q, order / p, r) == 1 {
            order /= p;
        }
    }
    Ok(order)
}

fn mobius(n: u64) -> i8 {
    let f = factor_u64(n);
    if f.iter().any(|&(_, k)| k > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n.isqrt()).filter(|d| n.is_multiple_of(*d)).flat_map(|d| [d, n / d]).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Value of the `n`-th cyclotomic polynomial at `a >= 2`.
pub fn cyclotomic_value(a: u64, n: u32) -> BigUint {
    let a = BigUint::from(a);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for d in divisors(n as u64) {
        let term = Pow::pow(&a, d as u32) - 1u32;
        match mobius(n as u64 / d) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    num / den
}

/// Which clause of Zsigmondy's theorem (with `b = 1`) excuses `a^n - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ZsigmondyException {
    None,
    /// `(a, n)` is `(2, 1)` or `(2, 6)`.
    A2N1or6,
    /// `n = 2` and `a + 1` is a power of two.
    NEq2FermatLike,
}

/// Primitive prime divisors of `a^n - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PpdResult {
    pub base: u64,
    pub exponent: u32,
    /// Ascending.
    #[serde(serialize_with = "crate::io::serialize_decimal_list")]
    pub primitive_divisors: Vec<BigUint>,
    pub exception: ZsigmondyException,
}

/// Exact set of primes dividing `a^n - 1` but no `a^k - 1` with `k < n`.
///
/// Every such prime divides the cyclotomic value `Phi_n(a)`; a prime factor
/// of `Phi_n(a)` is primitive exactly when it does not divide `n`.
pub fn primitive_prime_divisors(a: u64, n: u32) -> Result<PpdResult> {
    if a < 2 {
        return Err(Error::invalid("base must be at least 2"));
    }
    if n == 0 {
        return Err(Error::invalid("exponent must be positive"));
    }
    let phi = cyclotomic_value(a, n);
    let primitive_divisors = factorize(&phi)?
        .primes()
        .filter(|p| (BigUint::from(n) % *p) != BigUint::ZERO)
        .cloned()
        .collect();
    let exception = if a == 2 && (n == 1 || n == 6) {
        ZsigmondyException::A2N1or6
    } else if n == 2 && (a + 1).is_power_of_two() {
        ZsigmondyException::NEq2FermatLike
    } else {
        ZsigmondyException::None
    };
    Ok(PpdResult {
        base: a,
        exponent: n,
        primitive_divisors,
        exception,
    })
}
