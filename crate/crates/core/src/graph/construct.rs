use rayon::prelude::*;

use super::{Graph, GraphError, Variant, ZdGraph};
use crate::ring::{Census, Elem, FiniteRing, StarRing};

/// Below this many vertices rows are built on the calling thread.
const PARALLEL_ROWS: usize = 256;

fn from_predicate(vertices: &[Elem], adjacent: impl Fn(Elem, Elem) -> bool + Sync) -> Graph<Elem> {
    let upper = |i: usize| -> Vec<usize> {
        (i + 1..vertices.len())
            .filter(|&j| adjacent(vertices[i], vertices[j]))
            .collect()
    };
    let rows: Vec<Vec<usize>> = if vertices.len() > PARALLEL_ROWS {
        (0..vertices.len()).into_par_iter().map(upper).collect()
    } else {
        (0..vertices.len()).map(upper).collect()
    };
    let mut g = Graph::new(vertices.to_vec());
    for (i, row) in rows.into_iter().enumerate() {
        for j in row {
            g.add_edge(i, j);
        }
    }
    g
}

/// Classical zero-divisor graph: `x ~ y` iff `xy = 0`.
pub fn gamma(ring: &FiniteRing) -> Result<ZdGraph, GraphError> {
    if !ring.is_commutative() {
        return Err(GraphError::NotCommutative);
    }
    let census = Census::of(ring);
    let zero = ring.zero();
    let g = from_predicate(census.zero_divisors(), |x, y| ring.mul(x, y) == zero);
    Ok(ZdGraph::new(Variant::Gamma, g))
}

/// `x ~ y` iff `xy = 0` or `yx = 0`.
pub fn gamma_bar(ring: &FiniteRing) -> ZdGraph {
    let census = Census::of(ring);
    let zero = ring.zero();
    let g = from_predicate(census.zero_divisors(), |x, y| {
        ring.mul(x, y) == zero || ring.mul(y, x) == zero
    });
    ZdGraph::new(Variant::GammaBar, g)
}

pub fn gamma_star(sr: &StarRing) -> ZdGraph {
    gamma_star_with(sr, &Census::of(sr.ring()))
}

/// `x ~ y` iff `x y* = 0`. Applying `*` shows this is the same as
/// `y x* = 0`, so the relation is already symmetric; both are tested anyway
/// so that a bad involution cannot produce an asymmetric graph.
pub fn gamma_star_with(sr: &StarRing, census: &Census) -> ZdGraph {
    let ring = sr.ring();
    let zero = ring.zero();
    let g = from_predicate(census.zero_divisors(), |x, y| {
        ring.mul(x, sr.star(y)) == zero || ring.mul(y, sr.star(x)) == zero
    });
    ZdGraph::new(Variant::GammaStar, g)
}

pub fn gamma_prime(sr: &StarRing) -> ZdGraph {
    gamma_prime_with(sr, &Census::of(sr.ring()))
}

/// `x^n y* = 0` or `y^n x* = 0` for some `n >= 1`.
///
/// The right annihilators of `x, x^2, ...` form an ascending chain that is
/// constant once the powers reach their cycle, so a single test against the
/// stable power decides the existential. Nilpotents are adjacent to
/// everything without testing.
pub fn prime_adjacent(sr: &StarRing, census: &Census, x: Elem, y: Elem) -> bool {
    let ring = sr.ring();
    let zero = ring.zero();
    census.is_nilpotent(x)
        || census.is_nilpotent(y)
        || ring.mul(census.stable_power(x), sr.star(y)) == zero
        || ring.mul(census.stable_power(y), sr.star(x)) == zero
}

pub fn gamma_prime_with(sr: &StarRing, census: &Census) -> ZdGraph {
    let g = from_predicate(census.zero_divisors(), |x, y| prime_adjacent(sr, census, x, y));
    ZdGraph::new(Variant::GammaPrime, g)
}

/// Builds any of the four variants.
pub fn build_variant(sr: &StarRing, variant: Variant) -> Result<ZdGraph, GraphError> {
    match variant {
        Variant::Gamma => gamma(sr.ring()),
        Variant::GammaBar => Ok(gamma_bar(sr.ring())),
        Variant::GammaStar => Ok(gamma_star(sr)),
        Variant::GammaPrime => Ok(gamma_prime(sr)),
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;
    use std::sync::Arc;

    use super::*;
    use crate::ring::{build_matrix_ring, build_product, build_zn, InvolutionKind, DEFAULT_ORDER_CAP};

    fn names(sr: &StarRing, g: &ZdGraph) -> BTreeSet<(String, String)> {
        g.edge_labels()
            .into_iter()
            .map(|(a, b)| (sr.ring().name(a), sr.ring().name(b)))
            .collect()
    }

    fn edges(list: &[(&str, &str)]) -> BTreeSet<(String, String)> {
        list.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    }

    fn zn(n: usize) -> StarRing {
        StarRing::identity(Arc::new(build_zn(n))).unwrap()
    }

    fn z3_squared_swap() -> StarRing {
        let z3 = Arc::new(build_zn(3));
        StarRing::with_kind(Arc::new(build_product(z3.clone(), z3)), InvolutionKind::Swap).unwrap()
    }

    fn m2(q: usize) -> StarRing {
        let m = build_matrix_ring(2, Arc::new(build_zn(q)), DEFAULT_ORDER_CAP).unwrap();
        StarRing::with_kind(Arc::new(m), InvolutionKind::Transpose).unwrap()
    }

    #[test]
    fn gamma_of_z8_and_z6() {
        let z8 = zn(8);
        assert_eq!(names(&z8, &gamma(z8.ring()).unwrap()), edges(&[("2", "4"), ("4", "6")]));
        let z6 = zn(6);
        assert_eq!(names(&z6, &gamma(z6.ring()).unwrap()), edges(&[("2", "3"), ("3", "4")]));
        let z7 = gamma(zn(7).ring()).unwrap();
        assert_eq!(z7.vertices().len(), 0);
    }

    #[test]
    fn gamma_rejects_noncommutative() {
        assert_eq!(gamma(m2(2).ring()).unwrap_err(), GraphError::NotCommutative);
    }

    #[test]
    fn gamma_bar_on_commutative_rings_is_gamma() {
        for n in [4, 6, 8, 12, 30] {
            let r = zn(n);
            assert_eq!(gamma_bar(r.ring()).edge_labels(), gamma(r.ring()).unwrap().edge_labels());
        }
        let z4 = gamma_bar(zn(4).ring());
        assert_eq!(z4.vertices(), &[Elem::new(2)]);
        assert_eq!(z4.graph().edge_count(), 0);
    }

    #[test]
    fn z8_star_and_prime() {
        let z8 = zn(8);
        assert_eq!(names(&z8, &gamma_star(&z8)), edges(&[("2", "4"), ("4", "6")]));
        assert_eq!(names(&z8, &gamma_prime(&z8)), edges(&[("2", "4"), ("2", "6"), ("4", "6")]));
    }

    #[test]
    fn z3_squared_with_swap() {
        let sr = z3_squared_swap();
        let expected = edges(&[("(0,1)", "(0,2)"), ("(1,0)", "(2,0)")]);
        assert_eq!(names(&sr, &gamma_star(&sr)), expected);
        assert_eq!(names(&sr, &gamma_prime(&sr)), expected);
    }

    #[test]
    fn m2z2_edge_counts() {
        // frozen from an independent brute-force computation over explicit 2x2 matrices
        let sr = m2(2);
        assert_eq!(gamma_bar(sr.ring()).graph().edge_count(), 21);
        assert_eq!(gamma_star(&sr).graph().edge_count(), 12);
        let gp = gamma_prime(&sr);
        assert_eq!(gp.graph().edge_count(), 26);
        assert_eq!(gp.vertices().len(), 9);
        assert_ne!(gp.edge_labels(), gamma_bar(sr.ring()).edge_labels());
    }

    #[test]
    fn m2z3_prime_edge_count() {
        let sr = m2(3);
        let gp = gamma_prime(&sr);
        assert_eq!(gp.vertices().len(), 32);
        assert_eq!(gp.graph().edge_count(), 292);
    }

    #[test]
    fn star_is_a_subgraph_of_prime() {
        for sr in [zn(8), zn(12), zn(36), m2(2), m2(3), z3_squared_swap()] {
            let s = gamma_star(&sr).edge_labels();
            let p = gamma_prime(&sr).edge_labels();
            assert!(s.is_subset(&p), "{}", sr.describe());
        }
    }

    #[test]
    fn m2z4_prime_edge_count() {
        let sr = m2(4);
        let gp = gamma_prime(&sr);
        assert_eq!(gp.vertices().len(), 159);
        assert_eq!(gp.graph().edge_count(), 8577);
    }

    #[test]
    fn parallel_rows_match_sequential() {
        // Z_2 x M2(Z4) has more zero-divisors than the sequential threshold
        let z2 = Arc::new(build_zn(2));
        let m = Arc::new(build_matrix_ring(2, Arc::new(build_zn(4)), DEFAULT_ORDER_CAP).unwrap());
        let ring = build_product(z2, m);
        let census = Census::of(&ring);
        assert!(census.zero_divisors().len() > PARALLEL_ROWS);
        let zero = ring.zero();
        let g = gamma_bar(&ring);
        let zd = census.zero_divisors();
        for (i, &x) in zd.iter().enumerate() {
            for (j, &y) in zd.iter().enumerate() {
                let expected = i != j && (ring.mul(x, y) == zero || ring.mul(y, x) == zero);
                assert_eq!(g.graph().has_edge(i, j), expected);
            }
        }
    }
}
