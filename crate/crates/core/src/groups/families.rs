//! Closed-form complexes for the symmetric, alternating, nilpotent and
//! rank-one and rank-two Lie type families.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow};
use serde::Serialize;

use crate::complex::{PrimeComplex, PrimeSimplex, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::numtheory::{prime_power, prime_set, prime_set_u64, primes_upto};

/// Enumerates the maximal sets of vertices whose total weight is at most `budget`.
/// `items` holds `(prime, weight)` sorted by weight.
fn weighted_complex(items: &[(u64, u64)], budget: u64) -> Result<PrimeComplex> {
    let items: Vec<(u64, u64)> = items.iter().copied().filter(|&(_, w)| w <= budget).collect();
    if items.len() > MAX_VERTICES {
        return Err(Error::TooManyVertices(items.len()));
    }
    let mut vertices: Vec<u64> = items.iter().map(|&(p, _)| p).collect();
    vertices.sort_unstable();
    let bits: Vec<u64> = items
        .iter()
        .map(|(p, _)| 1u64 << vertices.binary_search(p).unwrap())
        .collect();
    let weights: Vec<u64> = items.iter().map(|&(_, w)| w).collect();

    let mut maximal = Vec::new();
    let mut stack = vec![(0usize, 0u64, 0u64)];
    while let Some((start, mask, sum)) = stack.pop() {
        if mask != 0 {
            let blocked = (0..items.len())
                .find(|&j| mask & bits[j] == 0)
                .is_none_or(|j| sum + weights[j] > budget);
            if blocked {
                maximal.push(mask);
            }
        }
        for j in start..items.len() {
            if sum + weights[j] > budget {
                break;
            }
            stack.push((j + 1, mask | bits[j], sum + weights[j]));
        }
    }
    Ok(PrimeComplex::from_antichain_unchecked(vertices, maximal))
}

/// Complex of `S_n`: sets of distinct primes with sum at most `n`.
pub fn symmetric_complex(n: u64) -> Result<PrimeComplex> {
    let items: Vec<(u64, u64)> = primes_upto(n).into_iter().map(|p| (p, p)).collect();
    weighted_complex(&items, n)
}

/// Complex of `A_n`. An element of order `2 * (odd part)` needs at least
/// four points for its even cycles, so 2 costs 4 instead of 2.
pub fn alternating_complex(n: u64) -> Result<PrimeComplex> {
    let mut items: Vec<(u64, u64)> = primes_upto(n.max(4))
        .into_iter()
        .map(|p| (p, if p == 2 { 4 } else { p }))
        .collect();
    items.sort_by_key(|&(_, w)| w);
    weighted_complex(&items, n)
}

/// Complex of a nilpotent group with prime divisors `primes`.
pub fn nilpotent_complex(primes: &PrimeSimplex) -> Result<PrimeComplex> {
    if primes.is_empty() {
        return Err(Error::invalid("nilpotent group needs at least one prime"));
    }
    PrimeComplex::complete(primes)
}

fn check_prime_power(q: u64, least: u64) -> Result<(u64, u32)> {
    if q < least {
        return Err(Error::invalid(format!("q = {q} is below {least}")));
    }
    if q >= 1 << 62 {
        return Err(Error::invalid(format!("q = {q} is too large")));
    }
    prime_power(q).ok_or_else(|| Error::invalid(format!("{q} is not a prime power")))
}

/// Complex of `PSL_2(q)`, `q >= 4` a prime power.
pub fn psl2_complex(q: u64) -> Result<PrimeComplex> {
    let (p, _) = check_prime_power(q, 4)?;
    let d = if q % 2 == 1 { 2 } else { 1 };
    PrimeComplex::from_simplices([
        PrimeSimplex::new([p])?,
        prime_set_u64((q - 1) / d),
        prime_set_u64((q + 1) / d),
    ])
}

fn exact_div(n: BigUint, d: u64) -> Result<BigUint> {
    let (quot, rem) = n.div_rem(&BigUint::from(d));
    if rem != BigUint::ZERO {
        return Err(Error::InvariantViolation(format!("division by {d} is not exact")));
    }
    Ok(quot)
}

/// The four candidate simplices for `PSL_3(q)` (`sign = 1`) or `PSU_3(q)` (`sign = -1`).
fn rank_two_complex(q: u64, sign: i8) -> Result<PrimeComplex> {
    let (p, _) = check_prime_power(q, if sign > 0 { 2 } else { 3 })?;
    let qb = BigUint::from(q);
    // q - 1 for PSL, q + 1 for PSU
    let shifted = if sign > 0 { &qb - 1u32 } else { &qb + 1u32 };
    let alpha = shifted.gcd(&BigUint::from(3u32)).try_into().unwrap_or(1u64);
    let split = Pow::pow(&qb, 2u32) - 1u32;
    let cyclic = if sign > 0 {
        Pow::pow(&qb, 2u32) + &qb + 1u32
    } else {
        Pow::pow(&qb, 2u32) - &qb + 1u32
    };
    let unipotent = PrimeSimplex::new([p])?.union(&prime_set(&exact_div(shifted.clone(), alpha)?)?);
    PrimeComplex::from_simplices([
        unipotent,
        prime_set(&exact_div(Pow::pow(&shifted, 2u32), alpha)?)?,
        prime_set(&exact_div(split, alpha)?)?,
        prime_set(&exact_div(cyclic, alpha)?)?,
    ])
}

/// Complex of `PSL_3(q)`.
pub fn psl3_complex(q: u64) -> Result<PrimeComplex> {
    rank_two_complex(q, 1)
}

/// Complex of `PSU_3(q)`, `q >= 3`.
pub fn psu3_complex(q: u64) -> Result<PrimeComplex> {
    rank_two_complex(q, -1)
}

fn check_twisted_param(m: u32) -> Result<()> {
    if m == 0 {
        return Err(Error::invalid("twisted groups need m >= 1"));
    }
    if m > 200 {
        return Err(Error::invalid(format!("m = {m} is too large")));
    }
    Ok(())
}

/// Complex of the Suzuki group `Sz(2^(2m+1))`.
pub fn suzuki_complex(m: u32) -> Result<PrimeComplex> {
    check_twisted_param(m)?;
    let q = BigUint::one() << (2 * m + 1);
    let s = BigUint::one() << (m + 1);
    PrimeComplex::from_simplices([
        PrimeSimplex::new([2])?,
        prime_set(&(&q - 1u32))?,
        prime_set(&(&q - &s + 1u32))?,
        prime_set(&(&q + &s + 1u32))?,
    ])
}

/// Labels of the maximal tori of `2G2(q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ReeTorus {
    /// `q - 1`
    Split,
    /// `q + 1`
    NonSplit,
    /// `q - sqrt(3q) + 1`
    Minus,
    /// `q + sqrt(3q) + 1`
    Plus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReePurity {
    pub m: u32,
    #[serde(serialize_with = "crate::io::serialize_decimal")]
    pub q: BigUint,
    pub pure: bool,
    /// The torus whose prime support clashes with the maximal simplex `{2,3}`.
    pub torus: ReeTorus,
    #[serde(serialize_with = "crate::io::serialize_decimal")]
    pub torus_order: BigUint,
    pub support: PrimeSimplex,
}

impl ReePurity {
    pub fn describe(&self) -> String {
        format!(
            "2G2(3^{}) is impure: {{2,3}} is a maximal simplex of size 2 while the {:?} torus of order {} has prime support {} of size {}",
            2 * self.m + 1,
            self.torus,
            self.torus_order,
            self.support,
            self.support.len()
        )
    }
}

/// Impurity witness for `2G2(3^(2m+1))`.
///
/// `{2,3}` is always a maximal simplex. A torus support with three or more
/// primes is a larger simplex; failing that, a prime cyclic torus
/// `q +- sqrt(3q) + 1` is a self-centralizing maximal simplex of size one.
pub fn ree2g2_purity(m: u32) -> Result<ReePurity> {
    check_twisted_param(m)?;
    let q = Pow::pow(BigUint::from(3u32), 2 * m + 1);
    let s = Pow::pow(BigUint::from(3u32), m + 1);
    let tori = [
        (ReeTorus::Split, &q - 1u32),
        (ReeTorus::NonSplit, &q + 1u32),
        (ReeTorus::Minus, &q - &s + 1u32),
        (ReeTorus::Plus, &q + &s + 1u32),
    ];
    let mut supports = Vec::with_capacity(4);
    for (label, order) in tori {
        let support = prime_set(&order)?;
        supports.push((label, order, support));
    }
    let witness = supports
        .iter()
        .find(|(_, _, s)| s.len() >= 3)
        .or_else(|| {
            [ReeTorus::Plus, ReeTorus::Minus].iter().find_map(|want| {
                supports
                    .iter()
                    .find(|(label, _, s)| label == want && s.len() == 1)
            })
        })
        .ok_or_else(|| {
            Error::InvariantViolation(format!("no impurity witness found for 2G2(3^{})", 2 * m + 1))
        })?;
    Ok(ReePurity {
        m,
        q,
        pure: false,
        torus: witness.0,
        torus_order: witness.1.clone(),
        support: witness.2.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lists(c: &PrimeComplex) -> Vec<Vec<u64>> {
        c.maximal().into_iter().map(Vec::from).collect()
    }

    #[test]
    fn symmetric_examples() {
        let s9 = symmetric_complex(9).unwrap();
        assert_eq!(lists(&s9), vec![vec![2, 3], vec![2, 5], vec![2, 7], vec![3, 5]]);
        assert!(s9.is_pure());
        let s5 = symmetric_complex(5).unwrap();
        assert_eq!(lists(&s5), vec![vec![2, 3], vec![5]]);
        assert_eq!(lists(&symmetric_complex(2).unwrap()), vec![vec![2]]);
        assert!(symmetric_complex(1).unwrap().is_empty());
    }

    #[test]
    fn alternating_examples() {
        let a10 = alternating_complex(10).unwrap();
        assert_eq!(lists(&a10), vec![vec![2, 3], vec![2, 5], vec![3, 5], vec![3, 7]]);
        assert_eq!(lists(&alternating_complex(5).unwrap()), vec![vec![2], vec![3], vec![5]]);
        assert_eq!(lists(&alternating_complex(7).unwrap()), vec![vec![2, 3], vec![5], vec![7]]);
        assert_eq!(lists(&alternating_complex(3).unwrap()), vec![vec![3]]);
        assert!(alternating_complex(2).unwrap().is_empty());
    }

    #[test]
    fn nilpotent_examples() {
        let s = PrimeSimplex::new([2, 3, 5]).unwrap();
        assert_eq!(lists(&nilpotent_complex(&s).unwrap()), vec![vec![2, 3, 5]]);
        assert!(nilpotent_complex(&PrimeSimplex::empty()).is_err());
    }

    #[test]
    fn psl2_examples() {
        let c = psl2_complex(173).unwrap();
        assert_eq!(c.vertices(), &[2, 3, 29, 43, 173]);
        assert_eq!(lists(&c), vec![vec![2, 43], vec![3, 29], vec![173]]);
        assert_eq!(
            lists(&psl2_complex(283).unwrap()),
            vec![vec![2, 71], vec![3, 47], vec![283]]
        );
        assert_eq!(lists(&psl2_complex(4).unwrap()), vec![vec![2], vec![3], vec![5]]);
        assert!(psl2_complex(6).is_err());
        assert!(psl2_complex(3).is_err());
    }

    #[test]
    fn rank_two_examples() {
        let c = psl3_complex(9).unwrap();
        assert_eq!(lists(&c), vec![vec![2, 3], vec![2, 5], vec![7, 13]]);
        assert_eq!(lists(&psl3_complex(2).unwrap()), vec![vec![2], vec![3], vec![7]]);
        assert_eq!(lists(&psl3_complex(3).unwrap()), vec![vec![2, 3], vec![13]]);
        assert_eq!(lists(&psl3_complex(4).unwrap()), vec![vec![2], vec![3], vec![5], vec![7]]);
        assert_eq!(lists(&psu3_complex(3).unwrap()), vec![vec![2, 3], vec![7]]);
        let c169 = psl3_complex(169).unwrap();
        assert!(!c169.is_pure());
        assert!(c169.contains(&PrimeSimplex::new([2, 7, 13]).unwrap()));
        assert!(c169.contains(&PrimeSimplex::new([2, 5, 7, 17]).unwrap()));
        assert!(psu3_complex(2).is_err());
    }

    #[test]
    fn suzuki_purity() {
        let pure: Vec<u32> = (1..=8).filter(|&m| suzuki_complex(m).unwrap().is_pure()).collect();
        assert_eq!(pure, vec![1, 2]);
        assert_eq!(
            lists(&suzuki_complex(1).unwrap()),
            vec![vec![2], vec![5], vec![7], vec![13]]
        );
    }

    #[test]
    fn ree_witnesses() {
        let w1 = ree2g2_purity(1).unwrap();
        assert_eq!((w1.torus, w1.support.primes()), (ReeTorus::Plus, &[37u64][..]));
        let w2 = ree2g2_purity(2).unwrap();
        assert_eq!(w2.support.primes(), &[271]);
        assert_eq!(w2.torus_order, BigUint::from(271u32));
        for m in 1..=6 {
            let w = ree2g2_purity(m).unwrap();
            assert!(!w.pure);
            assert!(w.support.len() >= 3 || w.support.len() == 1);
        }
        assert_eq!(ree2g2_purity(4).unwrap().support.len(), 3);
    }
}
