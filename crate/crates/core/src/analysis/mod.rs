//! Purity reports and scans, recognisability ingredients and table reproductions.

mod coprime;
mod screen;

pub use coprime::{coprime5_catalog, order_coprime_to, Coprime5Family, SimpleGroupOrderEntry};
pub use screen::{characteristic_screen, characteristic_screen_candidates, ScreenRow};

use serde::Serialize;

use crate::complex::{PrimeComplex, PrimeSimplex};
use crate::error::{Error, Result};
use crate::groups::{
    alternating_complex, complex_of, psl2_complex, psl3_complex, psu3_complex, suzuki_complex,
    symmetric_complex, GroupSpec,
};
use crate::io::Fixtures;
use crate::numtheory::{prime_power, primes_upto};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PurityReport {
    pub spec: String,
    pub pure: bool,
    pub max_size: usize,
    pub min_maximal_size: usize,
    /// The first maximal simplex and the first later one of another size.
    pub witness: Option<(PrimeSimplex, PrimeSimplex)>,
}

impl PurityReport {
    pub fn of_complex(spec: impl Into<String>, c: &PrimeComplex) -> Self {
        let maximal = c.maximal();
        let witness = maximal.first().and_then(|first| {
            maximal
                .iter()
                .find(|s| s.len() != first.len())
                .map(|other| (first.clone(), other.clone()))
        });
        PurityReport {
            spec: spec.into(),
            pure: c.is_pure(),
            max_size: c.max_size(),
            min_maximal_size: c.min_maximal_size(),
            witness,
        }
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        match &self.witness {
            None => format!("pure (all maximal simplices size {})", self.max_size),
            Some((a, b)) => format!(
                "impure (maximal simplex sizes {}..{}; witness {} of size {} and {} of size {})",
                self.min_maximal_size,
                self.max_size,
                a,
                a.len(),
                b,
                b.len()
            ),
        }
    }
}

pub fn purity_report(spec: &GroupSpec, fixtures: &Fixtures) -> Result<PurityReport> {
    Ok(PurityReport::of_complex(spec.to_string(), &complex_of(spec, fixtures)?))
}

/// Families with a closed-form complex over a parameter range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ScanFamily {
    Symmetric,
    Alternating,
    /// Prime powers `q >= 4`.
    Psl2,
    /// Prime powers `q >= 2`.
    Psl3,
    /// Prime powers `q >= 3`.
    Psu3,
    /// Parameter `m >= 1` of `Sz(2^(2m+1))`.
    Suzuki,
}

impl ScanFamily {
    pub fn parse(name: &str) -> Result<Self> {
        match name.to_ascii_lowercase().as_str() {
            "sym" | "symmetric" => Ok(ScanFamily::Symmetric),
            "alt" | "alternating" => Ok(ScanFamily::Alternating),
            "psl2" => Ok(ScanFamily::Psl2),
            "psl3" => Ok(ScanFamily::Psl3),
            "psu3" => Ok(ScanFamily::Psu3),
            "sz" | "suzuki" | "2b2" => Ok(ScanFamily::Suzuki),
            _ => Err(Error::invalid(format!("unknown scan family `{name}`"))),
        }
    }

    /// Parameters in `lo..=hi` valid for the family.
    pub fn parameters(self, lo: u64, hi: u64) -> Vec<u64> {
        let least = match self {
            ScanFamily::Symmetric | ScanFamily::Alternating | ScanFamily::Suzuki => 1,
            ScanFamily::Psl2 => 4,
            ScanFamily::Psl3 => 2,
            ScanFamily::Psu3 => 3,
        };
        let lo = lo.max(least);
        match self {
            ScanFamily::Symmetric | ScanFamily::Alternating | ScanFamily::Suzuki => {
                (lo..=hi).collect()
            }
            _ => (lo..=hi).filter(|&q| prime_power(q).is_some()).collect(),
        }
    }

    pub fn spec(self, x: u64) -> Result<GroupSpec> {
        Ok(match self {
            ScanFamily::Symmetric => GroupSpec::Symmetric(x),
            ScanFamily::Alternating => GroupSpec::Alternating(x),
            ScanFamily::Psl2 => GroupSpec::Psl2(x),
            ScanFamily::Psl3 => GroupSpec::Psl3(x),
            ScanFamily::Psu3 => GroupSpec::Psu3(x),
            ScanFamily::Suzuki => GroupSpec::Suzuki(
                u32::try_from(x).map_err(|_| Error::invalid("Suzuki parameter too large"))?,
            ),
        })
    }

    pub fn complex(self, x: u64) -> Result<PrimeComplex> {
        match self {
            ScanFamily::Symmetric => symmetric_complex(x),
            ScanFamily::Alternating => alternating_complex(x),
            ScanFamily::Psl2 => psl2_complex(x),
            ScanFamily::Psl3 => psl3_complex(x),
            ScanFamily::Psu3 => psu3_complex(x),
            ScanFamily::Suzuki => suzuki_complex(
                u32::try_from(x).map_err(|_| Error::invalid("Suzuki parameter too large"))?,
            ),
        }
    }
}

/// One report per valid parameter in `lo..=hi`, in increasing order.
pub fn purity_scan(family: ScanFamily, lo: u64, hi: u64) -> Result<Vec<PurityReport>> {
    family
        .parameters(lo, hi)
        .into_iter()
        .map(|x| Ok(PurityReport::of_complex(family.spec(x)?.to_string(), &family.complex(x)?)))
        .collect()
}

/// Outcome of the prime-sum inequality used for symmetric groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PnCheck {
    pub n: u64,
    /// `n < f`.
    pub holds: bool,
    /// Largest `k` with the first `k` primes summing to at most `n`.
    pub k: u64,
    /// Sum of the first `k - 1` primes plus the largest prime `<= n`.
    pub f: u64,
}

/// Evaluates the prime-sum inequality for every `n` in `lo..=hi` (`lo >= 5`)
/// against a single sieve.
pub fn pn_check_range(lo: u64, hi: u64) -> Result<Vec<PnCheck>> {
    if lo < 5 {
        return Err(Error::invalid("the inequality is stated for n >= 5"));
    }
    let primes = primes_upto(hi);
    let mut prefix = vec![0u64];
    for &p in &primes {
        prefix.push(prefix.last().unwrap() + p);
    }
    let mut out = Vec::new();
    let mut k = 0usize;
    let mut largest = 0usize;
    for n in lo..=hi {
        while k + 1 < prefix.len() && prefix[k + 1] <= n {
            k += 1;
        }
        while largest < primes.len() && primes[largest] <= n {
            largest += 1;
        }
        let p = primes[largest - 1];
        let f = prefix[k - 1] + p;
        out.push(PnCheck {
            n,
            holds: n < f,
            k: k as u64,
            f,
        });
    }
    Ok(out)
}

pub fn pn_check(n: u64) -> Result<PnCheck> {
    Ok(pn_check_range(n, n)?[0])
}

/// `None` when every maximal simplex extends by 2, so `Pi(C_2^k x G) = Pi(G)`;
/// otherwise the simplices that do not extend.
pub fn doubling_witness(c: &PrimeComplex) -> Result<Option<Vec<PrimeSimplex>>> {
    let defect = c.doubling_defect()?;
    Ok(if defect.is_empty() { None } else { Some(defect) })
}

/// Least `m` from which `G^m` is flagged unrecognisable: the cover number of `Pi(G)`.
pub fn power_unrecognisable_from(spec: &GroupSpec, fixtures: &Fixtures) -> Result<usize> {
    Ok(complex_of(spec, fixtures)?.cover_number())
}

/// Maximal simplices present in one complex and not the other.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexDiff {
    pub equal: bool,
    pub only_left: Vec<PrimeSimplex>,
    pub only_right: Vec<PrimeSimplex>,
}

pub fn compare(left: &PrimeComplex, right: &PrimeComplex) -> ComplexDiff {
    let (l, r) = (left.maximal(), right.maximal());
    let only_left: Vec<PrimeSimplex> = l.iter().filter(|s| !r.contains(s)).cloned().collect();
    let only_right: Vec<PrimeSimplex> = r.iter().filter(|s| !l.contains(s)).cloned().collect();
    ComplexDiff {
        equal: left == right,
        only_left,
        only_right,
    }
}

/// The sporadic simple groups in order of increasing group order.
pub const SPORADIC_NAMES: [&str; 26] = [
    "M11", "M12", "J1", "M22", "J2", "M23", "HS", "J3", "M24", "McL", "He", "Ru", "Suz", "O'N",
    "Co3", "Co2", "Fi22", "HN", "Ly", "Th", "Fi23", "Co1", "J4", "Fi24'", "B", "M",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SporadicSizeRow {
    pub group: String,
    pub max_size: usize,
    pub min_maximal_size: usize,
}

/// Largest simplex and smallest maximal simplex for every sporadic group with a fixture.
pub fn table_sporadic_sizes(fixtures: &Fixtures) -> Result<Vec<SporadicSizeRow>> {
    let all = fixtures.all()?;
    let mut rows = Vec::new();
    for name in SPORADIC_NAMES {
        if let Some(file) = all.get(name) {
            let c = PrimeComplex::from_spectrum(&file.spectrum()?)?;
            rows.push(SporadicSizeRow {
                group: name.to_string(),
                max_size: c.max_size(),
                min_maximal_size: c.min_maximal_size(),
            });
        }
    }
    if rows.is_empty() {
        return Err(Error::MissingFixture(format!(
            "no sporadic spectra in {}",
            fixtures.dir().display()
        )));
    }
    Ok(rows)
}
