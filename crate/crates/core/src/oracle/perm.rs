use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_integer::Integer;

use crate::complex::Spectrum;
use crate::error::{Error, Result};

/// Default bound on the size of an enumerated permutation group.
pub const DEFAULT_ORDER_CAP: usize = 1_000_000;

/// A bijection of `{0, ..., n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::invalid(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    /// Permutation of degree `n` given by disjoint or overlapping cycles,
    /// applied left to right.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut acc = Permutation::identity(n);
        for cycle in cycles {
            let mut images: Vec<u32> = (0..n as u32).collect();
            for (i, &x) in cycle.iter().enumerate() {
                let y = cycle[(i + 1) % cycle.len()];
                if x as usize >= n || y as usize >= n {
                    return Err(Error::invalid(format!("cycle {cycle:?} leaves degree {n}")));
                }
                images[x as usize] = y;
            }
            acc = acc.then(&Permutation::new(images)?);
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut order = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            order = order.lcm(&len);
        }
        order
    }

    /// The same permutation acting on `offset..offset + degree` inside degree `total`.
    pub fn shifted(&self, offset: usize, total: usize) -> Permutation {
        let mut images: Vec<u32> = (0..total as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = (offset as u32) + x;
        }
        Permutation { images }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            f.write_str("(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.images[x] as usize;
            }
            f.write_str(")")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

fn common_degree(generators: &[Permutation]) -> Result<usize> {
    let n = generators
        .first()
        .map(Permutation::degree)
        .ok_or_else(|| Error::invalid("at least one generator is required"))?;
    if generators.iter().any(|g| g.degree() != n) {
        return Err(Error::invalid("generators act on different degrees"));
    }
    Ok(n)
}

/// All elements of the group generated by `generators`, breadth first.
pub fn perm_group_elements(generators: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let n = common_degree(generators)?;
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id.clone()]);
    let mut elements = vec![id];
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                if elements.len() >= cap {
                    return Err(Error::ResourceLimit(format!(
                        "group closure exceeds the order cap {cap}"
                    )));
                }
                elements.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(elements)
}

fn spectrum_of<'a>(elements: impl Iterator<Item = &'a Permutation>) -> Result<Spectrum> {
    let orders: BTreeSet<u64> = elements.map(Permutation::order).collect();
    Spectrum::new(orders)
}

/// Element orders of the group generated by `generators`.
pub fn perm_group_spectrum(generators: &[Permutation], cap: usize) -> Result<Spectrum> {
    spectrum_of(perm_group_elements(generators, cap)?.iter())
}

/// Element orders of the centralizer of `g` in the group generated by `generators`.
pub fn centralizer_spectrum(generators: &[Permutation], g: &Permutation, cap: usize) -> Result<Spectrum> {
    let elements = perm_group_elements(generators, cap)?;
    if g.degree() != elements[0].degree() {
        return Err(Error::invalid("element and group act on different degrees"));
    }
    spectrum_of(elements.iter().filter(|h| h.then(g) == g.then(h)))
}

/// Element orders of a direct product: all lcms of pairs.
pub fn product_spectrum(a: &Spectrum, b: &Spectrum) -> Spectrum {
    let orders: BTreeSet<u64> = a
        .orders()
        .iter()
        .flat_map(|&x| b.orders().iter().map(move |&y| x.lcm(&y)))
        .collect();
    Spectrum::new(orders).expect("lcms of positive orders")
}

/// Generators of `S_n` on `{0, ..., n-1}`: a transposition and an `n`-cycle.
pub fn symmetric_generators(n: usize) -> Vec<Permutation> {
    if n < 2 {
        return vec![Permutation::identity(n.max(1))];
    }
    let cycle: Vec<u32> = (0..n as u32).collect();
    vec![
        Permutation::from_cycles(n, &[&[0, 1]]).unwrap(),
        Permutation::from_cycles(n, &[&cycle]).unwrap(),
    ]
}

/// Generators of `A_n`: the 3-cycles `(0 1 i)`.
pub fn alternating_generators(n: usize) -> Vec<Permutation> {
    if n < 3 {
        return vec![Permutation::identity(n.max(1))];
    }
    (2..n as u32)
        .map(|i| Permutation::from_cycles(n, &[&[0, 1, i]]).unwrap())
        .collect()
}

/// Generators of `G x H` acting on the disjoint union of the two point sets.
pub fn direct_product_generators(g: &[Permutation], h: &[Permutation]) -> Result<Vec<Permutation>> {
    let (dg, dh) = (common_degree(g)?, common_degree(h)?);
    let total = dg + dh;
    Ok(g.iter()
        .map(|x| x.shifted(0, total))
        .chain(h.iter().map(|y| y.shifted(dg, total)))
        .collect())
}

/// Generators of `(G x G) : C_2`, the second factor swapping the two copies.
pub fn swap_extension_generators(g: &[Permutation]) -> Result<Vec<Permutation>> {
    let d = common_degree(g)?;
    let mut gens = direct_product_generators(g, g)?;
    let swap: Vec<u32> = (0..2 * d as u32).map(|x| (x + d as u32) % (2 * d as u32)).collect();
    gens.push(Permutation::new(swap)?);
    Ok(gens)
}
