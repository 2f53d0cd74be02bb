use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Pow;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::prime_power;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Coprime5Family {
    Psl2,
    Psl3,
    Psu3,
    G2,
    Ree,
    Triality,
}

/// A family of simple groups of Lie type whose orders avoid the prime 5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleGroupOrderEntry {
    pub family: Coprime5Family,
    pub label: &'static str,
    pub restriction: &'static str,
}

fn pm2_mod5(q: u64) -> bool {
    matches!(q % 5, 2 | 3)
}

impl SimpleGroupOrderEntry {
    /// Whether `q` satisfies the entry's parameter restriction.
    pub fn admits(&self, q: u64) -> bool {
        let Some((p, e)) = prime_power(q) else {
            return false;
        };
        match self.family {
            Coprime5Family::Psl2 => q > 3 && pm2_mod5(q),
            Coprime5Family::Psl3 | Coprime5Family::Psu3 | Coprime5Family::G2 => q > 2 && pm2_mod5(q),
            Coprime5Family::Ree => p == 3 && e % 2 == 1 && q > 3,
            Coprime5Family::Triality => pm2_mod5(q),
        }
    }

    /// Exact group order at `q`.
    pub fn order(&self, q: u64) -> Result<BigUint> {
        if !self.admits(q) {
            return Err(Error::invalid(format!("q = {q} violates {} for {}", self.restriction, self.label)));
        }
        let qb = BigUint::from(q);
        let pw = |k: u32| Pow::pow(&qb, k);
        let order = match self.family {
            Coprime5Family::Psl2 => {
                let d = if q % 2 == 1 { 2u32 } else { 1 };
                &qb * (pw(2) - 1u32) / d
            }
            Coprime5Family::Psl3 => {
                let d = (q - 1).gcd(&3);
                pw(3) * (pw(3) - 1u32) * (pw(2) - 1u32) / d
            }
            Coprime5Family::Psu3 => {
                let d = (q + 1).gcd(&3);
                pw(3) * (pw(3) + 1u32) * (pw(2) - 1u32) / d
            }
            Coprime5Family::G2 => pw(6) * (pw(6) - 1u32) * (pw(2) - 1u32),
            Coprime5Family::Ree => pw(3) * (pw(3) + 1u32) * (&qb - 1u32),
            Coprime5Family::Triality => {
                pw(12) * (pw(8) + pw(4) + 1u32) * (pw(6) - 1u32) * (pw(2) - 1u32)
            }
        };
        Ok(order)
    }
}

/// Simple groups of Lie type with order coprime to 5, with their restrictions.
pub fn coprime5_catalog() -> Vec<SimpleGroupOrderEntry> {
    use Coprime5Family::*;
    vec![
        SimpleGroupOrderEntry { family: Psl2, label: "PSL2(q)", restriction: "3 < q = +-2 (mod 5)" },
        SimpleGroupOrderEntry { family: Psl3, label: "PSL3(q)", restriction: "2 < q = +-2 (mod 5)" },
        SimpleGroupOrderEntry { family: Psu3, label: "PSU3(q)", restriction: "2 < q = +-2 (mod 5)" },
        SimpleGroupOrderEntry { family: G2, label: "G2(q)", restriction: "2 < q = +-2 (mod 5)" },
        SimpleGroupOrderEntry { family: Ree, label: "2G2(q)", restriction: "3 < q = 3^(2k+1)" },
        SimpleGroupOrderEntry { family: Triality, label: "3D4(q)", restriction: "q = +-2 (mod 5)" },
    ]
}

/// `prime` does not divide the order of `entry` at `q`.
pub fn order_coprime_to(entry: &SimpleGroupOrderEntry, q: u64, prime: u64) -> Result<bool> {
    Ok((entry.order(q)? % prime) != BigUint::ZERO)
}
