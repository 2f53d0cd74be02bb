//! Exact integer kernel: primality, factorization, multiplicative orders,
//! primitive prime divisors and the special prime classifications.

mod factor;
mod order;
mod primes;
mod special;

pub use factor::{
    factor_u64, factorize, prime_set, prime_set_u64, FactorConfig, Factorization, Factorizer,
    FACTOR_EFFORT_ENV,
};
pub use order::{
    cyclotomic_value, multiplicative_order, primitive_prime_divisors, PpdResult,
    ZsigmondyException,
};
pub use primes::{
    is_prime, next_prime, prev_prime, prime_power, prime_powers_in, primes_upto,
    smallest_prime_factors,
};
pub use special::{
    classify_consecutive_prime_powers, diophantine_exception, is_fermat_prime,
    is_mersenne_prime, prime_sum_table, q2_has_two_prime_divisors, sum_primes_upto,
    ConsecutivePrimePowers, DiophantineCase,
};
