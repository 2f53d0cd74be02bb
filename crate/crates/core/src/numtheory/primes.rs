//! Sieving and deterministic primality.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Witnesses that make strong-probable-prime testing exact for every
/// `n < 3_317_044_064_679_887_385_961_981` (and therefore for all of `u64`).
pub(crate) const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Smallest composite for which [`MR_BASES`] is no longer known to be a proof.
pub(crate) fn mr_deterministic_bound() -> BigUint {
    "3317044064679887385961981".parse().expect("literal")
}

/// All primes `p <= limit`, ascending.
pub fn primes_upto(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i.saturating_mul(i);
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Sieve of smallest prime factors for `0..=limit` (entries 0 and 1 are 0).
pub fn smallest_prime_factors(limit: usize) -> Vec<u32> {
    let mut spf = vec![0u32; limit + 1];
    for i in 2..=limit {
        if spf[i] != 0 {
            continue;
        }
        let mut j = i;
        while j <= limit {
            if spf[j] == 0 {
                spf[j] = i as u32;
            }
            j += i;
        }
    }
    spf
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn strong_probable_prime(n: u64, a: u64) -> bool {
    let a = a % n;
    if a == 0 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    let mut x = pow_mod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Deterministic primality test on the whole `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    if n < 41 * 41 {
        return true;
    }
    MR_BASES.iter().all(|&a| strong_probable_prime(n, a))
}

/// Strong probable-prime test to base `a` on an arbitrary natural.
pub(crate) fn strong_probable_prime_big(n: &BigUint, a: u64) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let a = BigUint::from(a) % n;
    if a.is_zero() {
        return true;
    }
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut x = a.modpow(&d, n);
    if x == one || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

/// Miller-Rabin over [`MR_BASES`]. Exact below [`mr_deterministic_bound`];
/// above it a `true` only means "probable prime".
pub(crate) fn passes_mr_big(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime(small);
    }
    if n.is_even() {
        return false;
    }
    MR_BASES.iter().all(|&a| strong_probable_prime_big(n, a))
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime(c) {
        c += 1;
    }
    c
}

/// Largest prime `<= n`, if any.
pub fn prev_prime(n: u64) -> Option<u64> {
    (2..=n).rev().find(|&c| is_prime(c))
}

/// `Some((p, k))` when `n = p^k` with `p` prime and `k >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let factors = super::factor::factor_u64(n);
    match factors.as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

/// Prime powers `q` with `lo <= q <= hi`, ascending.
pub fn prime_powers_in(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 {
        return Vec::new();
    }
    let mut out: Vec<u64> = Vec::new();
    for p in primes_upto(hi) {
        let mut q = p;
        loop {
            if q >= lo {
                out.push(q);
            }
            match q.checked_mul(p) {
                Some(next) if next <= hi => q = next,
                _ => break,
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_is_prime(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn units_and_small_values() {
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(is_prime(2));
        assert!(is_prime(257));
        for n in 0..20_000 {
            assert_eq!(is_prime(n), trial_is_prime(n), "n = {n}");
        }
    }

    #[test]
    fn mersenne_61() {
        let m61 = (1u64 << 61) - 1;
        assert!(is_prime(m61));
        // 2^59 - 1 = 179951 * 3203431780337
        assert!(!is_prime((1u64 << 59) - 1));
    }

    #[test]
    fn strong_pseudoprimes_rejected() {
        // strong pseudoprimes to several small bases
        for n in [2047u64, 1_373_653, 25_326_001, 3_215_031_751, 2_152_302_898_747, 3_474_749_660_383, 341_550_071_728_321, 3_825_123_056_546_413_051] {
            assert!(!is_prime(n), "{n}");
        }
        assert!(is_prime(u64::MAX - 58)); // 2^64 - 59
    }

    #[test]
    fn sieve_agrees_with_test() {
        let ps = primes_upto(10_000);
        let direct: Vec<u64> = (0..=10_000).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, direct);
        let spf = smallest_prime_factors(1000);
        assert_eq!(spf[91], 7);
        assert_eq!(spf[97], 97);
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(243), Some((3, 5)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_powers_in(4, 17), vec![4, 5, 7, 8, 9, 11, 13, 16, 17]);
    }
}
