use num_integer::Integer;

use crate::complex::Spectrum;
use crate::error::{Error, Result};

/// Largest degree accepted by the partition enumerations.
pub const MAX_PARTITION_DEGREE: u64 = 30;

/// Calls `visit` with every partition of `n` as a list of parts, largest first.
pub fn for_each_partition(n: u64, mut visit: impl FnMut(&[u64])) {
    fn go(rest: u64, max_part: u64, parts: &mut Vec<u64>, visit: &mut dyn FnMut(&[u64])) {
        if rest == 0 {
            visit(parts);
            return;
        }
        for part in (1..=rest.min(max_part)).rev() {
            parts.push(part);
            go(rest - part, part, parts, visit);
            parts.pop();
        }
    }
    go(n, n, &mut Vec::new(), &mut visit);
}

fn cycle_type_spectrum(n: u64, keep: impl Fn(&[u64]) -> bool) -> Result<Spectrum> {
    if n == 0 {
        return Err(Error::invalid("degree must be at least 1"));
    }
    if n > MAX_PARTITION_DEGREE {
        return Err(Error::ResourceLimit(format!(
            "degree {n} exceeds the partition enumeration limit {MAX_PARTITION_DEGREE}"
        )));
    }
    let mut orders = Vec::new();
    for_each_partition(n, |parts| {
        if keep(parts) {
            orders.push(parts.iter().fold(1u64, |acc, &k| acc.lcm(&k)));
        }
    });
    Spectrum::new(orders)
}

/// Element orders of `S_n`: lcms of the parts of every partition of `n`.
pub fn sn_spectrum(n: u64) -> Result<Spectrum> {
    cycle_type_spectrum(n, |_| true)
}

/// Element orders of `A_n`: partitions with an even number of even parts.
pub fn an_spectrum(n: u64) -> Result<Spectrum> {
    cycle_type_spectrum(n, |parts| parts.iter().filter(|&&k| k % 2 == 0).count() % 2 == 0)
}
