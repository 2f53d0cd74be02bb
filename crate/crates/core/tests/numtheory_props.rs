use num_bigint::BigUint;
use num_integer::Integer;
use proptest::prelude::*;

use psc_core::numtheory::{
    classify_consecutive_prime_powers, factorize, is_prime, multiplicative_order, prime_power, prime_powers_in,
    prime_set, prime_set_u64, prime_sum_table, primes_upto, primitive_prime_divisors, q2_has_two_prime_divisors,
    sum_primes_upto, ConsecutivePrimePowers, ZsigmondyException,
};

#[test]
fn zsigmondy_exhaustive() {
    for a in 2..=100u64 {
        for n in 2..=12u32 {
            let r = primitive_prime_divisors(a, n).unwrap();
            let flagged = r.exception != ZsigmondyException::None;
            assert_eq!(r.primitive_divisors.is_empty(), flagged, "a = {a}, n = {n}");
        }
    }
}

#[test]
fn q4_minus_one_has_three_primes() {
    for q in prime_powers_in(4, 10_000) {
        let n = BigUint::from(q).pow(4) - 1u32;
        let n = n / BigUint::from((q - 1).gcd(&4));
        assert!(prime_set(&n).unwrap().len() >= 3, "q = {q}");
    }
}

#[test]
fn q2_minus_one_with_two_primes() {
    let hits: Vec<u64> = prime_powers_in(2, 1_000_000)
        .into_iter()
        .filter(|&q| q2_has_two_prime_divisors(q))
        .collect();
    assert_eq!(hits, vec![4, 5, 7, 8, 9, 17]);
    for q in prime_powers_in(3, 100_000).into_iter().filter(|q| q % 2 == 1) {
        let quarter = (q * q - 1) / 4;
        assert_eq!(q2_has_two_prime_divisors(q), prime_set_u64(quarter).len() == 2, "q = {q}");
    }
}

#[test]
fn prime_sums_exceed_n() {
    let table = prime_sum_table(1_000_000);
    for (n, &sum) in table.iter().enumerate().skip(3) {
        assert!(sum > n as u64, "n = {n}");
    }
    assert_eq!(sum_primes_upto(100), table[100]);
}

#[test]
fn prime_between_n_and_six_fifths_n() {
    let primes = primes_upto(120_001);
    for n in 25..=100_000u64 {
        let i = primes.partition_point(|&p| p <= n);
        // p < 6n/5  <=>  5p < 6n
        assert!(5 * primes[i] < 6 * n, "n = {n}");
    }
}

#[test]
fn consecutive_prime_powers_classified() {
    for n in 1..=1_000_000u64 {
        let both = prime_power(n).is_some() && prime_power(n + 1).is_some();
        let class = classify_consecutive_prime_powers(n);
        assert_eq!(both, class != ConsecutivePrimePowers::NotBothPrimePowers, "n = {n}");
    }
}

#[test]
fn factorizations_multiply_back() {
    for n in [1u64, 2, 97, 1 << 40, 600_851_475_143, 18_446_744_073_709_551_557] {
        let f = factorize(&BigUint::from(n)).unwrap();
        let product = f
            .factors()
            .iter()
            .fold(BigUint::from(1u32), |acc, (p, k)| acc * p.pow(*k));
        assert_eq!(product, BigUint::from(n));
    }
}

proptest! {
    #[test]
    fn order_divides_r_minus_one(q in 2u64..10_000, idx in 0usize..500, m in 1u32..60) {
        let primes = primes_upto(4000);
        let r = primes[idx % primes.len()];
        prop_assume!(q % r != 0);
        let e = multiplicative_order(q, r).unwrap();
        prop_assert_eq!((r - 1) % e, 0);
        let divides = (BigUint::from(q).pow(m) - 1u32) % r == BigUint::ZERO;
        prop_assert_eq!(divides, u64::from(m) % e == 0);
    }

    #[test]
    fn primality_agrees_with_factorization(n in 2u64..5_000_000) {
        let f = factorize(&BigUint::from(n)).unwrap();
        prop_assert_eq!(is_prime(n), f.factors().len() == 1 && f.factors()[0].1 == 1);
    }
}
