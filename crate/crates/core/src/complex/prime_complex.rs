use std::fmt;

use crate::error::{Error, Result};
use crate::numtheory::prime_set_u64;

use super::{PrimeGraph, PrimeSimplex, Spectrum};

/// Maximum number of vertices a complex may carry.
pub const MAX_VERTICES: usize = 64;

/// A prime simplicial complex stored as the antichain of its maximal faces.
///
/// Vertices are sorted ascending and faces are bit sets over vertex
/// indices. Maximal faces are kept in lexicographic order of their prime
/// lists, so derived equality is equality of complexes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrimeComplex {
    vertices: Vec<u64>,
    maximal: Vec<u64>,
}

/// Reduces a family of faces to its maximal elements. The empty face is dropped.
fn antichain(mut faces: Vec<u64>) -> (Vec<u64>, bool) {
    let before = faces.len();
    faces.retain(|&m| m != 0);
    faces.sort_unstable_by_key(|m| std::cmp::Reverse(m.count_ones()));
    faces.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(faces.len());
    for m in faces {
        if !kept.iter().any(|&k| k & m == m) {
            kept.push(m);
        }
    }
    let reduced = kept.len() != before;
    (kept, reduced)
}

impl PrimeComplex {
    /// The complex of the trivial group: no vertices, only the empty face.
    pub fn empty() -> Self {
        PrimeComplex {
            vertices: Vec::new(),
            maximal: Vec::new(),
        }
    }

    /// The full simplex on `primes`.
    pub fn complete(primes: &PrimeSimplex) -> Result<Self> {
        PrimeComplex::from_simplices([primes.clone()])
    }

    /// Downward closure of `faces`, reduced to its maximal faces.
    pub fn from_simplices(faces: impl IntoIterator<Item = PrimeSimplex>) -> Result<Self> {
        let faces: Vec<PrimeSimplex> = faces.into_iter().collect();
        let mut vertices: Vec<u64> = faces.iter().flat_map(|s| s.primes().iter().copied()).collect();
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(vertices.len()));
        }
        let masks = faces
            .iter()
            .map(|s| mask_in(&vertices, s).expect("face primes are vertices"))
            .collect();
        Ok(PrimeComplex::from_masks(vertices, masks).0)
    }

    /// Builds a complex from an explicit vertex list and a list of faces,
    /// checking that every face lies on the vertices and every vertex is used.
    /// The flag reports whether non-maximal faces had to be discarded.
    pub fn from_parts(vertices: Vec<u64>, faces: Vec<PrimeSimplex>) -> Result<(Self, bool)> {
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vertices.len() {
            return Err(Error::InvariantViolation("repeated vertex".into()));
        }
        let vertices = PrimeSimplex::new(sorted)?.primes().to_vec();
        if vertices.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(vertices.len()));
        }
        let mut masks = Vec::with_capacity(faces.len());
        for s in &faces {
            masks.push(mask_in(&vertices, s).ok_or_else(|| {
                Error::InvariantViolation(format!("simplex {s} uses a prime outside the vertex set"))
            })?);
        }
        let covered = masks.iter().fold(0u64, |acc, m| acc | m);
        if covered != full_mask(vertices.len()) {
            let missing: Vec<u64> = (0..vertices.len())
                .filter(|&i| covered >> i & 1 == 0)
                .map(|i| vertices[i])
                .collect();
            return Err(Error::InvariantViolation(format!(
                "vertices {missing:?} lie in no simplex"
            )));
        }
        Ok(PrimeComplex::from_masks(vertices, masks))
    }

    /// `masks` must already be an antichain of nonempty faces over `vertices`.
    pub(crate) fn from_antichain_unchecked(vertices: Vec<u64>, masks: Vec<u64>) -> Self {
        let mut c = PrimeComplex {
            vertices,
            maximal: masks,
        };
        c.canonicalize();
        c
    }

    fn from_masks(vertices: Vec<u64>, masks: Vec<u64>) -> (Self, bool) {
        let (maximal, reduced) = antichain(masks);
        let mut c = PrimeComplex { vertices, maximal };
        c.canonicalize();
        (c, reduced)
    }

    fn canonicalize(&mut self) {
        let vertices = &self.vertices;
        self.maximal
            .sort_by_cached_key(|&m| mask_primes(vertices, m));
    }

    /// Complex whose faces are the radicals of the given element orders.
    pub fn from_spectrum(spectrum: &Spectrum) -> Result<Self> {
        PrimeComplex::from_simplices(
            spectrum
                .maximal_orders()
                .into_iter()
                .map(prime_set_u64),
        )
    }

    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    pub fn vertex_simplex(&self) -> PrimeSimplex {
        PrimeSimplex::from_sorted_unchecked(self.vertices.clone())
    }

    /// Maximal faces in canonical order.
    pub fn maximal(&self) -> Vec<PrimeSimplex> {
        self.maximal
            .iter()
            .map(|&m| PrimeSimplex::from_sorted_unchecked(mask_primes(&self.vertices, m)))
            .collect()
    }

    pub fn maximal_count(&self) -> usize {
        self.maximal.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maximal.is_empty()
    }

    /// `s` is a face: contained in some maximal face.
    pub fn contains(&self, s: &PrimeSimplex) -> bool {
        if s.is_empty() {
            return true;
        }
        match mask_in(&self.vertices, s) {
            Some(mask) => self.maximal.iter().any(|&m| m & mask == mask),
            None => false,
        }
    }

    pub fn is_pure(&self) -> bool {
        self.max_size() == self.min_maximal_size()
    }

    /// Size of the largest face (0 for the empty complex).
    pub fn max_size(&self) -> usize {
        self.maximal.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0)
    }

    /// Size of the smallest maximal face (0 for the empty complex).
    pub fn min_maximal_size(&self) -> usize {
        self.maximal.iter().map(|m| m.count_ones() as usize).min().unwrap_or(0)
    }

    /// Complex of a direct product: maximal faces of the pairwise unions.
    pub fn join(&self, other: &PrimeComplex) -> Result<PrimeComplex> {
        let mut vertices: Vec<u64> = self.vertices.iter().chain(&other.vertices).copied().collect();
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(vertices.len()));
        }
        let remap = |c: &PrimeComplex| -> Vec<u64> {
            if c.maximal.is_empty() {
                return vec![0];
            }
            c.maximal
                .iter()
                .map(|&m| {
                    let s = PrimeSimplex::from_sorted_unchecked(mask_primes(&c.vertices, m));
                    mask_in(&vertices, &s).expect("vertex superset")
                })
                .collect()
        };
        let left = remap(self);
        let right = remap(other);
        let unions = left
            .iter()
            .flat_map(|a| right.iter().map(move |b| a | b))
            .collect();
        Ok(PrimeComplex::from_masks(vertices, unions).0)
    }

    /// The prime graph: edges are the two-element faces.
    pub fn prime_graph(&self) -> PrimeGraph {
        let n = self.vertices.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let pair = 1u64 << i | 1u64 << j;
                if self.maximal.iter().any(|&m| m & pair == pair) {
                    edges.push((self.vertices[i], self.vertices[j]));
                }
            }
        }
        PrimeGraph::from_sorted_parts(self.vertices.clone(), edges)
    }

    /// Maximal faces `s` with `2 ∉ s` such that `{2} ∪ s` is not a face.
    ///
    /// An empty result means every face can be extended by 2, so adjoining
    /// an elementary abelian 2-group as a direct factor leaves the complex
    /// unchanged.
    pub fn doubling_defect(&self) -> Result<Vec<PrimeSimplex>> {
        let two = self
            .vertices
            .iter()
            .position(|&p| p == 2)
            .ok_or_else(|| Error::invalid("2 is not a vertex of the complex"))?;
        let bit = 1u64 << two;
        Ok(self
            .maximal
            .iter()
            .filter(|&&m| m & bit == 0)
            .filter(|&&m| !self.maximal.iter().any(|&k| k & (m | bit) == m | bit))
            .map(|&m| PrimeSimplex::from_sorted_unchecked(mask_primes(&self.vertices, m)))
            .collect())
    }

    /// Minimum number of faces whose union is the vertex set.
    pub fn cover_number(&self) -> usize {
        let target = full_mask(self.vertices.len());
        if target == 0 {
            return 0;
        }
        let mut best = self.maximal.len();
        cover_search(&self.maximal, target, 0, 0, &mut best);
        best
    }
}

fn cover_search(faces: &[u64], target: u64, covered: u64, used: usize, best: &mut usize) {
    if covered == target {
        *best = (*best).min(used);
        return;
    }
    if used + 1 >= *best {
        return;
    }
    let lowest = (!covered & target).trailing_zeros();
    for &f in faces.iter().filter(|&&f| f >> lowest & 1 == 1) {
        cover_search(faces, target, covered | f, used + 1, best);
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn mask_in(vertices: &[u64], s: &PrimeSimplex) -> Option<u64> {
    s.primes().iter().try_fold(0u64, |acc, p| {
        vertices.binary_search(p).ok().map(|i| acc | 1u64 << i)
    })
}

fn mask_primes(vertices: &[u64], mask: u64) -> Vec<u64> {
    (0..vertices.len())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| vertices[i])
        .collect()
}

impl fmt::Debug for PrimeComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PrimeComplex{}", self)
    }
}

impl fmt::Display for PrimeComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.maximal().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}
