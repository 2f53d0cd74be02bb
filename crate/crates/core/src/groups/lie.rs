//! Maximal torus orders of `PSL_n(q)` and parameter screens for rank-two groups.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Pow;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::{is_mersenne_prime, is_prime, multiplicative_order, prime_power};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusOrder {
    pub n: u32,
    pub q: u64,
    pub partition: Vec<u32>,
    #[serde(serialize_with = "crate::io::serialize_decimal")]
    pub value: BigUint,
}

/// Order of the maximal torus of `PSL_n(q)` attached to `partition`:
/// `prod(q^n_i - 1) / ((n, q - 1)(q - 1))`.
pub fn torus_order(n: u32, q: u64, partition: &[u32]) -> Result<TorusOrder> {
    if prime_power(q).is_none() {
        return Err(Error::invalid(format!("{q} is not a prime power")));
    }
    if partition.contains(&0) || partition.iter().map(|&x| x as u64).sum::<u64>() != n as u64 {
        return Err(Error::invalid(format!("{partition:?} is not a partition of {n}")));
    }
    let qb = BigUint::from(q);
    let numerator: BigUint = partition
        .iter()
        .map(|&k| Pow::pow(&qb, k) - 1u32)
        .product();
    let denominator = BigUint::from((n as u64).gcd(&(q - 1)) * (q - 1));
    let (value, rem) = numerator.div_rem(&denominator);
    if rem != BigUint::ZERO {
        return Err(Error::InvariantViolation("torus order division is not exact".into()));
    }
    let mut partition = partition.to_vec();
    partition.sort_unstable_by(|a, b| b.cmp(a));
    Ok(TorusOrder {
        n,
        q,
        partition,
        value,
    })
}

/// Two readings of the torus partition criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TorusReadings {
    /// Some partition of `n` has, for each `r`, a part divisible by `e(r, q)`.
    pub order_divides_part: bool,
    /// Some partition of `n` has, for each `r`, a part divisible by `r` itself.
    pub prime_divides_part: bool,
}

const MAX_DISTINCT_MODULI: usize = 20;

/// Least total size of parts such that every value in `moduli` divides one of them.
fn least_covering_sum(moduli: &[u64]) -> Result<u64> {
    let mut vals: Vec<u64> = moduli.to_vec();
    vals.sort_unstable();
    vals.dedup();
    // a value dividing another rides along for free
    let vals: Vec<u64> = vals
        .iter()
        .copied()
        .filter(|&a| !vals.iter().any(|&b| b != a && b % a == 0))
        .collect();
    let k = vals.len();
    if k > MAX_DISTINCT_MODULI {
        return Err(Error::ResourceLimit(format!(
            "{k} incomparable moduli exceed the partition search limit of {MAX_DISTINCT_MODULI}"
        )));
    }
    let full = (1usize << k) - 1;
    let mut lcm = vec![1u64; 1 << k];
    for mask in 1..=full {
        let low = mask.trailing_zeros() as usize;
        lcm[mask] = lcm[mask & (mask - 1)].lcm(&vals[low]).min(u64::MAX / 2);
    }
    let mut best = vec![u64::MAX; 1 << k];
    best[0] = 0;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut sub = rest;
        loop {
            let block = sub | low;
            let tail = best[mask ^ block];
            if tail != u64::MAX {
                best[mask] = best[mask].min(tail.saturating_add(lcm[block]));
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    Ok(best[full])
}

/// Evaluates both readings for odd primes `rs` coprime to `q` with `e(r, q) >= 2`.
pub fn torus_readings(n: u32, q: u64, rs: &[u64]) -> Result<TorusReadings> {
    if n < 2 {
        return Err(Error::invalid("rank parameter must be at least 2"));
    }
    if prime_power(q).is_none() {
        return Err(Error::invalid(format!("{q} is not a prime power")));
    }
    let mut orders = Vec::with_capacity(rs.len());
    for &r in rs {
        if r == 2 || !is_prime(r) {
            return Err(Error::invalid(format!("{r} is not an odd prime")));
        }
        let e = multiplicative_order(q, r)?;
        if e < 2 {
            return Err(Error::invalid(format!("{r} divides q - 1")));
        }
        orders.push(e);
    }
    Ok(TorusReadings {
        order_divides_part: least_covering_sum(&orders)? <= n as u64,
        prime_divides_part: least_covering_sum(rs)? <= n as u64,
    })
}

/// Whether `PSL_n(q)` has an element of order `prod(rs)`, decided by torus partitions.
pub fn torus_simplex_criterion(n: u32, q: u64, rs: &[u64]) -> Result<bool> {
    Ok(torus_readings(n, q, rs)?.order_divides_part)
}

/// Parameter families singled out for rank-two groups with pure complexes of size two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ScreenKind {
    /// Prime `q = 3 * 2^k + 1`, `k >= 1`, `k != 1 (mod 3)`.
    Psl3Odd,
    /// Prime `q = 3 * 2^k - 1`, `k >= 2`.
    Psu3Odd,
    /// `q = 2^e` with `2^e - 1` a Mersenne prime and `3 | q + 1`.
    Psu3Char2,
}

/// All `q <= limit` in the chosen family.
pub fn pure2_parameter_screen(kind: ScreenKind, limit: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for k in 1..63u32 {
        let pow = 1u64 << k;
        let q = match kind {
            ScreenKind::Psl3Odd => 3 * pow + 1,
            ScreenKind::Psu3Odd => 3 * pow - 1,
            ScreenKind::Psu3Char2 => pow,
        };
        if q > limit || pow > u64::MAX / 4 {
            break;
        }
        let keep = match kind {
            ScreenKind::Psl3Odd => k % 3 != 1 && is_prime(q),
            ScreenKind::Psu3Odd => k >= 2 && is_prime(q),
            ScreenKind::Psu3Char2 => is_mersenne_prime(q - 1) && (q + 1) % 3 == 0,
        };
        if keep {
            out.push(q);
        }
    }
    out
}

/// Upper bound on the Lie rank of a simple group of Lie type whose complex
/// has maximal simplices of size at most `k`.
pub fn rank_bound(k: u64, small_field: bool) -> u64 {
    if small_field {
        (k + 4) * (k + 5) / 2 - 1
    } else {
        (k + 1) * (k + 2) / 2 - 1
    }
}
