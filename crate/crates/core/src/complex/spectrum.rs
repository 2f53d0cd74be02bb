use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::numtheory::{factor_u64, prime_set_u64};

use super::PrimeSimplex;

/// Set of element orders of a group, closed under taking divisors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Spectrum {
    orders: BTreeSet<u64>,
}

fn divisors_of(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, k) in factor_u64(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..k {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out
}

impl Spectrum {
    /// Normalizes `orders` to its divisor closure.
    pub fn new(orders: impl IntoIterator<Item = u64>) -> Result<Self> {
        let raw: BTreeSet<u64> = orders.into_iter().collect();
        if raw.is_empty() {
            return Err(Error::invalid("spectrum needs at least one order"));
        }
        if raw.contains(&0) {
            return Err(Error::invalid("element orders are positive"));
        }
        let mut orders = BTreeSet::new();
        for &m in &raw {
            if orders.contains(&m) {
                continue;
            }
            orders.extend(divisors_of(m));
        }
        Ok(Spectrum { orders })
    }

    /// Spectrum of the trivial group.
    pub fn trivial() -> Self {
        Spectrum {
            orders: BTreeSet::from([1]),
        }
    }

    pub fn orders(&self) -> &BTreeSet<u64> {
        &self.orders
    }

    pub fn contains(&self, m: u64) -> bool {
        self.orders.contains(&m)
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn max_order(&self) -> u64 {
        self.orders.last().copied().unwrap_or(1)
    }

    /// Orders with no proper multiple in the spectrum.
    pub fn maximal_orders(&self) -> Vec<u64> {
        self.orders
            .iter()
            .copied()
            .filter(|&m| !self.orders.iter().any(|&k| k != m && k % m == 0))
            .collect()
    }

    /// Distinct prime supports of the orders.
    pub fn radicals(&self) -> BTreeSet<PrimeSimplex> {
        self.orders.iter().map(|&m| prime_set_u64(m)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_closure() {
        let s = Spectrum::new([12, 5]).unwrap();
        assert_eq!(
            s.orders().iter().copied().collect::<Vec<_>>(),
            vec![1, 2, 3, 4, 5, 6, 12]
        );
        assert_eq!(s.maximal_orders(), vec![5, 12]);
    }

    #[test]
    fn rejects_empty_and_zero() {
        assert!(Spectrum::new([]).is_err());
        assert!(Spectrum::new([0, 2]).is_err());
    }

    #[test]
    fn radicals_of_small_spectrum() {
        let s = Spectrum::new([1, 2, 3, 6]).unwrap();
        let r: Vec<String> = s.radicals().iter().map(|x| x.to_string()).collect();
        assert_eq!(r, vec!["{}", "{2}", "{2,3}", "{3}"]);
    }
}
