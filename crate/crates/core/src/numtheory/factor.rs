//! Integer factorization: trial division, Brent's variant of Pollard rho,
//! and certified primality for cofactors outside the deterministic
//! Miller-Rabin range.

use std::cell::Cell;
use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::primes::{is_prime, mr_deterministic_bound, passes_mr_big, primes_upto};
use crate::complex::PrimeSimplex;
use crate::error::{Error, Result};

/// Environment variable overriding the rho iteration budget.
pub const FACTOR_EFFORT_ENV: &str = "PSC_FACTOR_EFFORT";

const DEFAULT_TRIAL_BOUND: u64 = 1_000_000;
const DEFAULT_RHO_EFFORT: u64 = 1 << 24;

/// A complete prime factorization of `value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    value: BigUint,
    factors: Vec<(BigUint, u32)>,
}

impl Factorization {
    pub fn value(&self) -> &BigUint {
        &self.value
    }

    /// `(prime, exponent)` pairs, primes strictly increasing.
    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.iter().map(|(p, _)| p)
    }

    /// Number of distinct prime divisors.
    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    /// Distinct primes as a simplex; fails if a prime does not fit in 64 bits.
    pub fn prime_set(&self) -> Result<PrimeSimplex> {
        let primes = self
            .factors
            .iter()
            .map(|(p, _)| {
                p.to_u64()
                    .ok_or_else(|| Error::invalid(format!("prime {p} exceeds 64 bits")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PrimeSimplex::from_sorted_unchecked(primes))
    }

    fn from_map(value: BigUint, map: BTreeMap<BigUint, u32>) -> Self {
        Factorization {
            value,
            factors: map.into_iter().collect(),
        }
    }
}

impl std::fmt::Display for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, k)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if *k == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{k}")?;
            }
        }
        Ok(())
    }
}

/// Factoring effort knobs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorConfig {
    /// Trial division runs over primes up to this bound.
    pub trial_bound: u64,
    /// Total rho iterations allowed per top-level factorization.
    pub rho_effort: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            trial_bound: DEFAULT_TRIAL_BOUND,
            rho_effort: DEFAULT_RHO_EFFORT,
        }
    }
}

impl FactorConfig {
    /// Defaults, with `rho_effort` taken from `PSC_FACTOR_EFFORT` when set.
    pub fn from_env() -> Self {
        let mut cfg = FactorConfig::default();
        if let Some(effort) = std::env::var(FACTOR_EFFORT_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
        {
            cfg.rho_effort = effort;
        }
        cfg
    }

    /// Process-wide configuration, read once from the environment.
    pub fn global() -> &'static FactorConfig {
        static GLOBAL: OnceLock<FactorConfig> = OnceLock::new();
        GLOBAL.get_or_init(FactorConfig::from_env)
    }
}

fn trial_primes(bound: u64) -> std::borrow::Cow<'static, [u64]> {
    static DEFAULT: OnceLock<Vec<u64>> = OnceLock::new();
    if bound == DEFAULT_TRIAL_BOUND {
        std::borrow::Cow::Borrowed(DEFAULT.get_or_init(|| primes_upto(DEFAULT_TRIAL_BOUND)))
    } else {
        std::borrow::Cow::Owned(primes_upto(bound))
    }
}

/// Factorizer bound to one configuration.
#[derive(Clone, Debug)]
pub struct Factorizer {
    config: FactorConfig,
}

impl Default for Factorizer {
    fn default() -> Self {
        Factorizer::new(*FactorConfig::global())
    }
}

struct Budget {
    left: Cell<u64>,
    total: u64,
}

impl Budget {
    fn spend(&self, n: u64) -> Result<()> {
        let left = self.left.get();
        if left < n {
            return Err(Error::ResourceLimit(format!(
                "factorization effort of {} rho iterations exhausted",
                self.total
            )));
        }
        self.left.set(left - n);
        Ok(())
    }
}

impl Factorizer {
    pub fn new(config: FactorConfig) -> Self {
        Factorizer { config }
    }

    pub fn config(&self) -> &FactorConfig {
        &self.config
    }

    /// Complete factorization of `n >= 1`.
    pub fn factorize(&self, n: &BigUint) -> Result<Factorization> {
        if n.is_zero() {
            return Err(Error::invalid("cannot factor 0"));
        }
        let budget = Budget {
            left: Cell::new(self.config.rho_effort),
            total: self.config.rho_effort,
        };
        let mut map = BTreeMap::new();
        self.factor_into(n.clone(), &mut map, &budget)?;
        Ok(Factorization::from_map(n.clone(), map))
    }

    /// Certified primality of an arbitrary natural.
    pub fn is_prime(&self, n: &BigUint) -> Result<bool> {
        let budget = Budget {
            left: Cell::new(self.config.rho_effort),
            total: self.config.rho_effort,
        };
        self.certify(n, &budget)
    }

    fn factor_into(
        &self,
        n: BigUint,
        map: &mut BTreeMap<BigUint, u32>,
        budget: &Budget,
    ) -> Result<()> {
        let mut rem = n;
        if let Some(small) = rem.to_u64() {
            merge_u64(map, small);
            return Ok(());
        }
        let primes = trial_primes(self.config.trial_bound);
        for (i, &p) in primes.iter().enumerate() {
            let bp = BigUint::from(p);
            let mut k = 0u32;
            loop {
                let (q, r) = rem.div_rem(&bp);
                if !r.is_zero() {
                    break;
                }
                rem = q;
                k += 1;
            }
            if k > 0 {
                *map.entry(bp).or_insert(0) += k;
            }
            if let Some(small) = rem.to_u64() {
                merge_u64(map, small);
                return Ok(());
            }
            // Cheap probable-prime probe so large prime cofactors do not
            // walk the entire trial range.
            if i % 512 == 511 && passes_mr_big(&rem) {
                break;
            }
        }
        self.split(rem, map, budget)
    }

    fn split(&self, n: BigUint, map: &mut BTreeMap<BigUint, u32>, budget: &Budget) -> Result<()> {
        if n.is_one() {
            return Ok(());
        }
        if let Some(small) = n.to_u64() {
            merge_u64(map, small);
            return Ok(());
        }
        if self.certify(&n, budget)? {
            *map.entry(n).or_insert(0) += 1;
            return Ok(());
        }
        let d = rho_big(&n, budget)?;
        let other = &n / &d;
        self.split(d, map, budget)?;
        self.split(other, map, budget)
    }

    fn certify(&self, n: &BigUint, budget: &Budget) -> Result<bool> {
        if let Some(small) = n.to_u64() {
            return Ok(is_prime(small));
        }
        if !passes_mr_big(n) {
            return Ok(false);
        }
        if *n < mr_deterministic_bound() {
            return Ok(true);
        }
        // Lucas-Pocklington certificate from a full factorization of n - 1.
        let n_minus_1 = n - 1u32;
        let mut map = BTreeMap::new();
        self.factor_into(n_minus_1.clone(), &mut map, budget)?;
        'prime: for q in map.keys() {
            let exp = &n_minus_1 / q;
            for a in 2u32..2000 {
                let a = BigUint::from(a);
                if !a.modpow(&n_minus_1, n).is_one() {
                    return Ok(false);
                }
                let t = a.modpow(&exp, n);
                let t = if t.is_zero() { n - 1u32 } else { t - 1u32 };
                if t.gcd(n).is_one() {
                    continue 'prime;
                }
            }
            return Err(Error::ResourceLimit(format!(
                "no Pocklington witness found for {n}"
            )));
        }
        Ok(true)
    }
}

/// Factorization with the process-wide configuration.
pub fn factorize(n: &BigUint) -> Result<Factorization> {
    Factorizer::default().factorize(n)
}

/// Distinct primes dividing `n >= 1`.
pub fn prime_set(n: &BigUint) -> Result<PrimeSimplex> {
    factorize(n)?.prime_set()
}

/// Distinct primes dividing a machine-word `n >= 1` (`n = 0` gives the empty set).
pub fn prime_set_u64(n: u64) -> PrimeSimplex {
    if n == 0 {
        return PrimeSimplex::empty();
    }
    PrimeSimplex::from_sorted_unchecked(factor_u64(n).into_iter().map(|(p, _)| p).collect())
}

fn merge_u64(map: &mut BTreeMap<BigUint, u32>, n: u64) {
    for (p, k) in factor_u64(n) {
        *map.entry(BigUint::from(p)).or_insert(0) += k;
    }
}

const SMALL_PRIMES: [u64; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Complete factorization of a machine word; `(prime, exponent)` ascending.
/// `factor_u64(1)` and `factor_u64(0)` are empty.
pub fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    let mut out: BTreeMap<u64, u32> = BTreeMap::new();
    if n < 2 {
        return Vec::new();
    }
    let mut rem = n;
    for &p in &SMALL_PRIMES {
        if p * p > rem {
            break;
        }
        while rem.is_multiple_of(p) {
            rem /= p;
            *out.entry(p).or_insert(0) += 1;
        }
    }
    let mut stack = vec![rem];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        let d = rho_u64(m);
        stack.push(d);
        stack.push(m / d);
    }
    out.into_iter().collect()
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Non-trivial divisor of a composite `n`.
fn rho_u64(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    // Perfect squares defeat rho for some seeds; peel them first.
    let r = n.isqrt();
    if r * r == n {
        return r;
    }
    for c in 1u64.. {
        if let Some(d) = brent_u64(n, c) {
            return d;
        }
    }
    unreachable!("rho over unbounded seeds")
}

fn brent_u64(n: u64, c: u64) -> Option<u64> {
    use super::primes::mul_mod;
    let f = |x: u64| (mul_mod(x, x, n) + c) % n;
    const BATCH: u64 = 128;
    let (mut x, mut y, mut ys) = (0u64, 2u64, 2u64);
    let mut q = 1u64;
    let mut g = 1u64;
    let mut r = 1u64;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = gcd_u64(q, n);
            k += BATCH;
        }
        r *= 2;
        if r > 1 << 40 {
            return None;
        }
    }
    if g == n {
        loop {
            ys = f(ys);
            g = gcd_u64(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn rho_big(n: &BigUint, budget: &Budget) -> Result<BigUint> {
    if n.is_even() {
        return Ok(BigUint::from(2u32));
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        return Ok(r);
    }
    for c in 1u64.. {
        if let Some(d) = brent_big(n, c, budget)? {
            return Ok(d);
        }
    }
    unreachable!("rho over unbounded seeds")
}

fn brent_big(n: &BigUint, c: u64, budget: &Budget) -> Result<Option<BigUint>> {
    let c = BigUint::from(c);
    let f = |x: &BigUint| (x * x + &c) % n;
    let diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    const BATCH: u64 = 128;
    let one = BigUint::one();
    let mut x = BigUint::zero();
    let mut y = BigUint::from(2u32);
    let mut ys = y.clone();
    let mut q = one.clone();
    let mut g = one.clone();
    let mut r = 1u64;
    while g.is_one() {
        x = y.clone();
        budget.spend(r)?;
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            let steps = BATCH.min(r - k);
            budget.spend(steps)?;
            for _ in 0..steps {
                y = f(&y);
                q = (&q * diff(&x, &y)) % n;
            }
            g = q.gcd(n);
            k += BATCH;
        }
        r *= 2;
    }
    if &g == n {
        loop {
            budget.spend(1)?;
            ys = f(&ys);
            g = diff(&x, &ys).gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    Ok((&g != n).then_some(g))
}
