use psc_core::groups::{
    alternating_complex, complex_of, psl2_complex, psl3_complex, psu3_complex, symmetric_complex,
    torus_simplex_criterion,
};
use psc_core::io::Fixtures;
use psc_core::numtheory::{is_prime, prime_power, prime_set_u64};
use psc_core::oracle::{
    alternating_generators, an_spectrum, centralizer_spectrum, direct_product_generators, perm_group_elements, matrix_group_spectrum, perm_group_spectrum,
    product_spectrum, sn_spectrum, swap_extension_generators, symmetric_generators, MatrixVariant, Permutation,
    DEFAULT_ORDER_CAP,
};
use psc_core::{GroupSpec, PrimeComplex, PrimeSimplex, Spectrum};

fn from_spectrum(s: &Spectrum) -> PrimeComplex {
    PrimeComplex::from_spectrum(s).unwrap()
}

#[test]
fn symmetric_and_alternating_match_partitions() {
    for n in 1..=18 {
        assert_eq!(symmetric_complex(n).unwrap(), from_spectrum(&sn_spectrum(n).unwrap()), "Sym({n})");
        assert_eq!(alternating_complex(n).unwrap(), from_spectrum(&an_spectrum(n).unwrap()), "Alt({n})");
    }
}

#[test]
fn partitions_match_permutation_closure() {
    for n in 2..=7 {
        let s = perm_group_spectrum(&symmetric_generators(n), DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(s, sn_spectrum(n as u64).unwrap());
        let a = perm_group_spectrum(&alternating_generators(n), DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(a, an_spectrum(n as u64).unwrap());
    }
}

#[test]
fn small_linear_groups_match_enumeration() {
    for q in [4u64, 5, 7, 8, 9, 11, 13, 16] {
        let s = matrix_group_spectrum(2, q, MatrixVariant::Psl).unwrap();
        assert_eq!(psl2_complex(q).unwrap(), from_spectrum(&s), "PSL2({q})");
    }
    for q in [2u64, 3] {
        let s = matrix_group_spectrum(3, q, MatrixVariant::Psl).unwrap();
        assert_eq!(psl3_complex(q).unwrap(), from_spectrum(&s), "PSL3({q})");
    }
}

#[test]
fn isomorphic_groups_agree() {
    // PSL2(4) = PSL2(5) = A5, PSL2(9) = A6, PSL3(2) = PSL2(7), PSL4(2) = A8, PSU3(3) has spectrum 1,2,3,4,6,7,8,12
    assert_eq!(psl2_complex(4).unwrap(), alternating_complex(5).unwrap());
    assert_eq!(psl2_complex(9).unwrap(), alternating_complex(6).unwrap());
    assert_eq!(psl3_complex(2).unwrap(), psl2_complex(7).unwrap());
    let psl42 = matrix_group_spectrum(4, 2, MatrixVariant::Psl).unwrap();
    assert_eq!(psl42, an_spectrum(8).unwrap());
    let psu33 = Spectrum::new([7, 8, 12]).unwrap();
    assert_eq!(psu3_complex(3).unwrap(), from_spectrum(&psu33));
}

/// Odd primes dividing `|PSL_n(q)|` other than the characteristic.
fn qualifying_primes(n: u32, q: u64) -> Vec<u64> {
    let (p, _) = prime_power(q).unwrap();
    let mut out = std::collections::BTreeSet::new();
    for i in 2..=n {
        for r in prime_set_u64(q.pow(i) - 1).primes() {
            out.insert(*r);
        }
    }
    out.into_iter().filter(|&r| r != 2 && r != p).collect()
}

#[test]
fn torus_criterion_matches_enumeration() {
    for (n, q) in [(3u32, 2u64), (3, 3), (4, 2)] {
        let truth = from_spectrum(&matrix_group_spectrum(n, q, MatrixVariant::Psl).unwrap());
        let primes = qualifying_primes(n, q);
        for mask in 1u32..(1 << primes.len()) {
            let subset: Vec<u64> = (0..primes.len()).filter(|i| mask >> i & 1 == 1).map(|i| primes[i]).collect();
            let expected = truth.contains(&PrimeSimplex::new(subset.clone()).unwrap());
            assert_eq!(torus_simplex_criterion(n, q, &subset).unwrap(), expected, "PSL{n}({q}) {subset:?}");
        }
    }
}

#[test]
fn products_match_permutation_direct_products() {
    let s3 = symmetric_generators(3);
    let a4 = alternating_generators(4);
    let gens = direct_product_generators(&s3, &a4).unwrap();
    let direct = perm_group_spectrum(&gens, DEFAULT_ORDER_CAP).unwrap();
    assert_eq!(direct, product_spectrum(&sn_spectrum(3).unwrap(), &an_spectrum(4).unwrap()));

    let fx = Fixtures::bundled();
    let spec: GroupSpec = "Sym(5)*Nil(7,11)".parse().unwrap();
    let joined = complex_of(&spec, &fx).unwrap();
    let product = product_spectrum(&sn_spectrum(5).unwrap(), &Spectrum::new([77]).unwrap());
    assert_eq!(joined, from_spectrum(&product));
}

#[test]
fn swap_extensions_keep_the_complex() {
    let d4 = vec![
        Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
        Permutation::from_cycles(4, &[&[0, 2]]).unwrap(),
    ];
    for gens in [symmetric_generators(3), d4, symmetric_generators(4)] {
        let square = direct_product_generators(&gens, &gens).unwrap();
        let extended = swap_extension_generators(&gens).unwrap();
        let a = from_spectrum(&perm_group_spectrum(&square, DEFAULT_ORDER_CAP).unwrap());
        let b = from_spectrum(&perm_group_spectrum(&extended, DEFAULT_ORDER_CAP).unwrap());
        assert_eq!(a, b);
    }
}

fn cycle_type(g: &Permutation) -> Vec<usize> {
    let mut seen = vec![false; g.degree()];
    let mut lengths = Vec::new();
    for start in 0..g.degree() {
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = g.apply(x as u32) as usize;
            len += 1;
        }
        if len > 0 {
            lengths.push(len);
        }
    }
    lengths.sort_unstable();
    lengths
}

#[test]
fn edges_come_from_centralizers() {
    // {r, s} is an edge exactly when some element of order r centralizes one of order s
    for n in 3..=7usize {
        for gens in [symmetric_generators(n), alternating_generators(n)] {
            let whole = from_spectrum(&perm_group_spectrum(&gens, DEFAULT_ORDER_CAP).unwrap());
            let elements = perm_group_elements(&gens, DEFAULT_ORDER_CAP).unwrap();
            let mut reps = std::collections::BTreeMap::new();
            for g in elements.iter().filter(|g| is_prime(g.order())) {
                reps.entry(cycle_type(g)).or_insert_with(|| g.clone());
            }
            let mut edges = std::collections::BTreeSet::new();
            for g in reps.values() {
                let c = centralizer_spectrum(&gens, g, DEFAULT_ORDER_CAP).unwrap();
                let r = g.order();
                for &s in whole.vertices() {
                    if s != r && c.orders().iter().any(|&m| m % s == 0) {
                        edges.insert((r.min(s), r.max(s)));
                    }
                }
            }
            let graph: std::collections::BTreeSet<(u64, u64)> = whole.prime_graph().edges().iter().copied().collect();
            assert_eq!(edges, graph, "degree {n}");
        }
    }
}

#[test]
fn psl32_centralizers() {
    // PSL3(2) acting on the seven points of the Fano plane
    let gens = vec![
        Permutation::from_cycles(7, &[&[0, 1, 2, 3, 4, 5, 6]]).unwrap(),
        Permutation::from_cycles(7, &[&[1, 2, 4], &[3, 6, 5]]).unwrap(),
        Permutation::from_cycles(7, &[&[2, 4], &[5, 6]]).unwrap(),
    ];
    let elements = perm_group_elements(&gens, DEFAULT_ORDER_CAP).unwrap();
    assert_eq!(elements.len(), 168);
    let spectrum = perm_group_spectrum(&gens, DEFAULT_ORDER_CAP).unwrap();
    assert_eq!(from_spectrum(&spectrum), psl3_complex(2).unwrap());
    for g in elements.iter().filter(|g| g.order() == 7) {
        let c = centralizer_spectrum(&gens, g, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(c, Spectrum::new([7]).unwrap());
    }
}
