use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::complex::Spectrum;
use crate::error::{Error, Result};
use crate::numtheory::prime_power;

/// Largest field order with lookup tables.
pub const MAX_FIELD_ORDER: u64 = 16;
/// Largest number of matrices an enumeration may visit.
pub const MAX_MATRIX_SPACE: u64 = 1 << 24;

/// `GF(q)`, `q <= 16`, with elements encoded as `0..q` (base-`p` digits of a
/// polynomial in a primitive root) and full operation tables.
#[derive(Clone, Debug)]
pub struct GaloisField {
    q: usize,
    p: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

fn digits(mut x: usize, p: usize, e: usize) -> Vec<usize> {
    (0..e)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn from_digits(ds: &[usize], p: usize) -> usize {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

impl GaloisField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or_else(|| Error::invalid(format!("{q} is not a prime power")))?;
        if q > MAX_FIELD_ORDER {
            return Err(Error::ResourceLimit(format!(
                "field order {q} exceeds the table limit {MAX_FIELD_ORDER}"
            )));
        }
        let (q, p, e) = (q as usize, p as usize, e as usize);
        let add_el = |a: usize, b: usize| {
            let (da, db) = (digits(a, p, e), digits(b, p, e));
            from_digits(&da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect::<Vec<_>>(), p)
        };
        // find a monic degree-e polynomial whose root generates the multiplicative group
        let mut exp = Vec::new();
        for tail in 0..q {
            let low = digits(tail, p, e);
            // multiply by x modulo x^e + low (x^e = -low)
            let times_x = |a: usize| {
                let da = digits(a, p, e);
                let top = da[e - 1];
                let mut out = vec![0usize; e];
                for i in (1..e).rev() {
                    out[i] = da[i - 1];
                }
                for i in 0..e {
                    out[i] = (out[i] + (p - low[i]) % p * top) % p;
                }
                from_digits(&out, p)
            };
            let start = if e == 1 { (p - low[0]) % p } else { p };
            let mut powers = vec![1usize];
            let mut cur = 1usize;
            loop {
                cur = if e == 1 { cur * start % p } else { times_x(cur) };
                if cur == 1 || cur == 0 || powers.len() == q - 1 {
                    break;
                }
                powers.push(cur);
            }
            if cur == 1 && powers.len() == q - 1 {
                exp = powers;
                break;
            }
        }
        if exp.len() != q - 1 && q > 2 {
            return Err(Error::InvariantViolation(format!("no primitive element found for GF({q})")));
        }
        if q == 2 {
            exp = vec![1];
        }
        let mut log = vec![0usize; q];
        for (i, &x) in exp.iter().enumerate() {
            log[x] = i;
        }
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = add_el(a, b) as u8;
                mul[a * q + b] = if a == 0 || b == 0 {
                    0
                } else {
                    exp[(log[a] + log[b]) % (q - 1)] as u8
                };
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u8)
            .collect();
        let inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    exp[(q - 1 - log[a]) % (q - 1)] as u8
                }
            })
            .collect();
        Ok(GaloisField {
            q,
            p,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn order(&self) -> u64 {
        self.q as u64
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// Inverse of a nonzero element.
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }
}

/// Which group of `n x n` matrices to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixVariant {
    Gl,
    Sl,
    /// `SL_n(q)` modulo scalars: orders are least `k` with `g^k` scalar.
    Psl,
}

/// Square matrix over a [`GaloisField`], entries row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixOverGf {
    n: usize,
    entries: Vec<u8>,
}

impl MatrixOverGf {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0u8; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        MatrixOverGf { n, entries }
    }

    pub fn from_entries(f: &GaloisField, n: usize, entries: Vec<u8>) -> Result<Self> {
        if entries.len() != n * n || entries.iter().any(|&x| x as u64 >= f.order()) {
            return Err(Error::invalid("matrix entries do not fit the field and dimension"));
        }
        Ok(MatrixOverGf { n, entries })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn mul(&self, f: &GaloisField, other: &MatrixOverGf) -> MatrixOverGf {
        let n = self.n;
        let mut entries = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u8;
                for k in 0..n {
                    acc = f.add(acc, f.mul(self.entries[i * n + k], other.entries[k * n + j]));
                }
                entries[i * n + j] = acc;
            }
        }
        MatrixOverGf { n, entries }
    }

    pub fn determinant(&self, f: &GaloisField) -> u8 {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut det = 1u8;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return 0;
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = f.neg(det);
            }
            let pv = a[col * n + col];
            det = f.mul(det, pv);
            let pinv = f.inv(pv);
            for r in col + 1..n {
                let factor = f.mul(a[r * n + col], pinv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let sub = f.neg(f.mul(factor, a[col * n + j]));
                    a[r * n + j] = f.add(a[r * n + j], sub);
                }
            }
        }
        det
    }

    pub fn is_scalar(&self) -> bool {
        let n = self.n;
        let d = self.entries[0];
        (0..n).all(|i| (0..n).all(|j| self.entries[i * n + j] == if i == j { d } else { 0 }))
    }

    pub fn is_identity(&self) -> bool {
        self.is_scalar() && self.entries[0] == 1
    }

    /// Least `k >= 1` with `g^k` the identity, or scalar when `modulo_scalars`.
    pub fn order(&self, f: &GaloisField, modulo_scalars: bool) -> u64 {
        let mut power = self.clone();
        let mut k = 1u64;
        loop {
            if power.is_identity() || (modulo_scalars && power.is_scalar()) {
                return k;
            }
            power = power.mul(f, self);
            k += 1;
        }
    }
}

/// Element orders of `GL_n(q)`, `SL_n(q)` or `PSL_n(q)` by exhaustive enumeration.
pub fn matrix_group_spectrum(n: u32, q: u64, variant: MatrixVariant) -> Result<Spectrum> {
    if n == 0 {
        return Err(Error::invalid("dimension must be positive"));
    }
    if n > 4 {
        return Err(Error::ResourceLimit(format!("dimension {n} exceeds 4")));
    }
    let f = GaloisField::new(q)?;
    let cells = (n * n) as usize;
    let space = q.checked_pow(cells as u32).filter(|&s| s <= MAX_MATRIX_SPACE);
    let Some(space) = space else {
        return Err(Error::ResourceLimit(format!(
            "q^(n^2) = {q}^{cells} exceeds the enumeration limit 2^24"
        )));
    };
    let mut orders = BTreeSet::new();
    let mut entries = vec![0u8; cells];
    for code in 0..space {
        let mut c = code;
        for slot in entries.iter_mut() {
            *slot = (c % q) as u8;
            c /= q;
        }
        let m = MatrixOverGf {
            n: n as usize,
            entries: entries.clone(),
        };
        let det = m.determinant(&f);
        let keep = match variant {
            MatrixVariant::Gl => det != 0,
            MatrixVariant::Sl | MatrixVariant::Psl => det == 1,
        };
        if keep {
            orders.insert(m.order(&f, variant == MatrixVariant::Psl));
        }
    }
    Spectrum::new(orders)
}
