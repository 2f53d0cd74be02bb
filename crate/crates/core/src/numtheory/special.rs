//! Special prime classifications consumed by the purity arguments.

use num_bigint::BigInt;
use num_traits::{One, Pow};
use serde::Serialize;

use super::factor::prime_set_u64;
use super::primes::{is_prime, primes_upto};

/// `p` is a prime of the form `2^(2^x) + 1`.
pub fn is_fermat_prime(p: u64) -> bool {
    if p < 3 || !is_prime(p) {
        return false;
    }
    let m = p - 1;
    m.is_power_of_two() && (m.trailing_zeros() as u64).is_power_of_two()
}

/// `p` is a prime of the form `2^l - 1` (then `l` is necessarily prime).
pub fn is_mersenne_prime(p: u64) -> bool {
    p >= 3 && (p + 1).is_power_of_two() && is_prime(p) && is_prime((p + 1).trailing_zeros() as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConsecutivePrimePowers {
    /// `(2^k, 2^k + 1)` with `2^k + 1` a Fermat prime.
    FermatPair,
    /// `(2^l - 1, 2^l)` with `2^l - 1` a Mersenne prime.
    MersennePair,
    EightNine,
    NotBothPrimePowers,
}

/// Classifies the pair `(n, n + 1)`.
pub fn classify_consecutive_prime_powers(n: u64) -> ConsecutivePrimePowers {
    use ConsecutivePrimePowers::*;
    if n == 8 {
        EightNine
    } else if n.is_power_of_two() && is_fermat_prime(n + 1) {
        FermatPair
    } else if (n + 1).is_power_of_two() && is_mersenne_prime(n) {
        MersennePair
    } else {
        NotBothPrimePowers
    }
}

/// `|pi(q^2 - 1)| = 2`, computed from the coprime-ish halves `q - 1` and `q + 1`.
pub fn q2_has_two_prime_divisors(q: u64) -> bool {
    prime_set_u64(q - 1).union(&prime_set_u64(q + 1)).len() == 2
}

/// Sum of the primes `p <= n`.
pub fn sum_primes_upto(n: u64) -> u64 {
    primes_upto(n).iter().sum()
}

/// `sums[n]` = sum of primes `<= n` for every `n <= limit`.
pub fn prime_sum_table(limit: usize) -> Vec<u64> {
    let primes = primes_upto(limit as u64);
    let mut out = vec![0u64; limit + 1];
    let mut next = primes.iter().peekable();
    let mut acc = 0u64;
    for (n, slot) in out.iter_mut().enumerate() {
        if next.peek().is_some_and(|&&p| p == n as u64) {
            acc += n as u64;
            next.next();
        }
        *slot = acc;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DiophantineCase {
    /// `239^2 - 2 * 13^4 = -1`.
    Listed239,
    /// `3^5 - 2 * 11^2 = 1`.
    Listed3to5,
    /// A solution with `a = b = 2`.
    SquareCase,
    /// `p^a - 2 r^b` is not `+-1`.
    NoSolution,
    /// A solution outside the known list (none exist by the classification).
    Unlisted,
}

/// Classifies `p^a - 2 r^b = +-1`.
pub fn diophantine_exception(p: u64, a: u32, r: u64, b: u32) -> DiophantineCase {
    let lhs: BigInt = Pow::pow(BigInt::from(p), a) - BigInt::from(2) * Pow::pow(BigInt::from(r), b);
    let is_unit = lhs == BigInt::one() || lhs == -BigInt::one();
    if !is_unit {
        DiophantineCase::NoSolution
    } else if (p, a, r, b) == (239, 2, 13, 4) {
        DiophantineCase::Listed239
    } else if (p, a, r, b) == (3, 5, 11, 2) {
        DiophantineCase::Listed3to5
    } else if a == 2 && b == 2 {
        DiophantineCase::SquareCase
    } else {
        DiophantineCase::Unlisted
    }
}
