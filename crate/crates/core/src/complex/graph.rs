use std::fmt::Write;

/// Graph on primes with an edge `p -- r` when the product `pr` is an element order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimeGraph {
    vertices: Vec<u64>,
    edges: Vec<(u64, u64)>,
    adjacency: Vec<u64>,
}

impl PrimeGraph {
    /// `vertices` ascending, each edge `(p, r)` with `p < r`, edges sorted.
    pub(crate) fn from_sorted_parts(vertices: Vec<u64>, edges: Vec<(u64, u64)>) -> Self {
        let mut adjacency = vec![0u64; vertices.len()];
        for &(p, r) in &edges {
            let i = vertices.binary_search(&p).expect("edge endpoint");
            let j = vertices.binary_search(&r).expect("edge endpoint");
            adjacency[i] |= 1 << j;
            adjacency[j] |= 1 << i;
        }
        PrimeGraph {
            vertices,
            edges,
            adjacency,
        }
    }

    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(u64, u64)] {
        &self.edges
    }

    pub fn has_edge(&self, p: u64, r: u64) -> bool {
        let (a, b) = if p < r { (p, r) } else { (r, p) };
        self.edges.binary_search(&(a, b)).is_ok()
    }

    pub fn is_isolated(&self, p: u64) -> bool {
        match self.vertices.binary_search(&p) {
            Ok(i) => self.adjacency[i] == 0,
            Err(_) => false,
        }
    }

    /// Every edge of `self` is an edge of `other`, and likewise for vertices.
    pub fn is_subgraph_of(&self, other: &PrimeGraph) -> bool {
        self.vertices.iter().all(|v| other.vertices.binary_search(v).is_ok())
            && self.edges.iter().all(|&(p, r)| other.has_edge(p, r))
    }

    fn complement_adjacency(&self) -> Vec<u64> {
        let all = if self.vertices.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.vertices.len()) - 1
        };
        self.adjacency
            .iter()
            .enumerate()
            .map(|(i, &a)| all & !a & !(1u64 << i))
            .collect()
    }

    /// Size of the largest set of pairwise non-adjacent vertices.
    pub fn coclique_max(&self) -> usize {
        let comp = self.complement_adjacency();
        let n = self.vertices.len();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        max_clique(&comp, all, 0)
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> Vec<u64> {
        let n = self.vertices.len();
        (0..n)
            .filter(|&i| self.adjacency[i].count_ones() as usize == n - 1)
            .map(|i| self.vertices[i])
            .collect()
    }

    /// The complement is triangle-free and 3-colourable.
    ///
    /// This is the known necessary and sufficient condition for a graph to be
    /// the prime graph of some solvable group.
    pub fn is_solvable_realizable(&self) -> bool {
        let comp = self.complement_adjacency();
        let n = comp.len();
        for i in 0..n {
            for j in i + 1..n {
                if comp[i] >> j & 1 == 1 && comp[i] & comp[j] != 0 {
                    return false;
                }
            }
        }
        let mut colours = vec![u8::MAX; n];
        colour(&comp, &mut colours, 0)
    }

    /// Undirected DOT text; vertices ascending, edges lexicographic.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "graph \"{}\" {{", name.replace('"', "\\\"")).unwrap();
        for v in &self.vertices {
            writeln!(out, "  {v};").unwrap();
        }
        for (p, r) in &self.edges {
            writeln!(out, "  {p} -- {r};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn max_clique(adj: &[u64], candidates: u64, size: usize) -> usize {
    if candidates == 0 {
        return size;
    }
    let mut best = size;
    let mut rest = candidates;
    while rest != 0 {
        if size + rest.count_ones() as usize <= best {
            break;
        }
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        best = best.max(max_clique(adj, rest & adj[v], size + 1));
    }
    best
}

fn colour(adj: &[u64], colours: &mut [u8], v: usize) -> bool {
    if v == adj.len() {
        return true;
    }
    for c in 0..3u8 {
        let clash = (0..v).any(|u| adj[v] >> u & 1 == 1 && colours[u] == c);
        if !clash {
            colours[v] = c;
            if colour(adj, colours, v + 1) {
                return true;
            }
        }
    }
    colours[v] = u8::MAX;
    false
}
