use std::collections::{BTreeSet, VecDeque};
use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use starzd::analysis::{
    components, diameter, girth, shape_tests, shortest_cycle, universal_vertices, ExtendedNat,
};
use starzd::graph::{gamma_prime_with, gamma_star_with, Graph};
use starzd::ring::enumerate::rings_up_to;
use starzd::ring::{
    build_matrix_ring, build_product, build_zn, enumerate_involutions, power_orbit, right_annihilator,
    ring_predicates, validate_involution, Census, Elem, InvolutionKind, StarRing, DEFAULT_ORDER_CAP,
};

// ---------- graph invariants against brute force ----------

fn graph_from(n: usize, bits: &[bool]) -> Graph<usize> {
    let mut g = Graph::new((0..n).collect());
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits[k] {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    g
}

fn small_graph() -> impl Strategy<Value = Graph<usize>> {
    (1usize..=8).prop_flat_map(|n| prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |b| graph_from(n, &b)))
}

/// Length of the shortest path from `a` to `b` that avoids the edge `a-b`.
fn distance_without_edge(g: &Graph<usize>, a: usize, b: usize) -> Option<usize> {
    let mut dist = vec![None; g.vertex_count()];
    dist[a] = Some(0);
    let mut queue = VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        for w in 0..g.vertex_count() {
            if g.has_edge(v, w) && !(v == a && w == b) && dist[w].is_none() {
                dist[w] = Some(dist[v].unwrap() + 1);
                queue.push_back(w);
            }
        }
    }
    dist[b]
}

/// Every simple path from `a`, to find the longest shortest distance.
fn all_simple_path_distance(g: &Graph<usize>, a: usize, b: usize) -> Option<usize> {
    fn walk(g: &Graph<usize>, v: usize, b: usize, used: &mut Vec<bool>, len: usize, best: &mut Option<usize>) {
        if v == b {
            *best = Some(best.map_or(len, |x: usize| x.min(len)));
            return;
        }
        for w in 0..g.vertex_count() {
            if g.has_edge(v, w) && !used[w] {
                used[w] = true;
                walk(g, w, b, used, len + 1, best);
                used[w] = false;
            }
        }
    }
    let mut used = vec![false; g.vertex_count()];
    used[a] = true;
    let mut best = None;
    walk(g, a, b, &mut used, 0, &mut best);
    best
}

proptest! {
    #[test]
    fn diameter_matches_simple_paths(g in small_graph()) {
        let n = g.vertex_count();
        let mut expected = ExtendedNat::Finite(0);
        'outer: for a in 0..n {
            for b in a + 1..n {
                match all_simple_path_distance(&g, a, b) {
                    Some(d) => expected = expected.max(ExtendedNat::Finite(d as u64)),
                    None => { expected = ExtendedNat::Infinity; break 'outer; }
                }
            }
        }
        prop_assert_eq!(diameter(&g).unwrap(), expected);
    }

    #[test]
    fn girth_matches_edge_removal(g in small_graph()) {
        let expected = g
            .edges()
            .filter_map(|(a, b)| distance_without_edge(&g, a, b).map(|d| d as u64 + 1))
            .min()
            .map_or(ExtendedNat::Infinity, ExtendedNat::Finite);
        prop_assert_eq!(girth(&g), expected);
        match shortest_cycle(&g) {
            None => prop_assert_eq!(expected, ExtendedNat::Infinity),
            Some(c) => {
                prop_assert_eq!(ExtendedNat::Finite(c.len() as u64), expected);
                prop_assert_eq!(c.iter().collect::<BTreeSet<_>>().len(), c.len());
                for i in 0..c.len() {
                    prop_assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
                }
            }
        }
    }

    #[test]
    fn components_partition_vertices(g in small_graph()) {
        let comps = components(&g);
        let all: Vec<usize> = comps.iter().flatten().copied().collect();
        prop_assert_eq!(all.len(), g.vertex_count());
        prop_assert_eq!(all.iter().collect::<BTreeSet<_>>().len(), g.vertex_count());
        for (a, b) in g.edges() {
            prop_assert!(comps.iter().any(|c| c.contains(&a) && c.contains(&b)));
        }
    }

    #[test]
    fn stars_have_diameter_two(g in small_graph()) {
        let shape = shape_tests(&g);
        if shape.is_star() && g.vertex_count() >= 3 {
            prop_assert_eq!(diameter(&g).unwrap(), ExtendedNat::Finite(2));
            prop_assert_eq!(girth(&g), ExtendedNat::Infinity);
        }
    }
}

// ---------- ring and graph properties over a fixed pool ----------

struct Entry {
    sr: StarRing,
    census: Census,
}

impl std::fmt::Debug for Entry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.sr.describe())
    }
}

fn pool() -> &'static [Entry] {
    static POOL: OnceLock<Vec<Entry>> = OnceLock::new();
    POOL.get_or_init(|| {
        let id = || InvolutionKind::Identity;
        let mut rings: Vec<StarRing> = (2..=40).map(|n| StarRing::identity(Arc::new(build_zn(n))).unwrap()).collect();
        for a in 2..=6 {
            for b in 2..=6 {
                let r = Arc::new(build_product(Arc::new(build_zn(a)), Arc::new(build_zn(b))));
                rings.push(StarRing::with_kind(r.clone(), InvolutionKind::Componentwise(Box::new(id()), Box::new(id()))).unwrap());
                if a == b {
                    rings.push(StarRing::with_kind(r, InvolutionKind::Swap).unwrap());
                }
            }
        }
        for m in [2, 3] {
            let r = build_matrix_ring(2, Arc::new(build_zn(m)), DEFAULT_ORDER_CAP).unwrap();
            rings.push(StarRing::with_kind(Arc::new(r), InvolutionKind::Transpose).unwrap());
        }
        for ring in rings_up_to(8) {
            let ring = Arc::new(ring);
            for inv in enumerate_involutions(&ring, 8).unwrap() {
                rings.push(StarRing::new(ring.clone(), inv, InvolutionKind::Custom("p".into())));
            }
        }
        rings
            .into_iter()
            .map(|sr| {
                let census = Census::of(sr.ring());
                Entry { sr, census }
            })
            .collect()
    })
}

fn entry() -> impl Strategy<Value = &'static Entry> {
    (0..pool().len()).prop_map(|i| &pool()[i])
}

fn entry_and_elems() -> impl Strategy<Value = (&'static Entry, Elem, Elem)> {
    (entry(), any::<usize>(), any::<usize>()).prop_map(|(e, a, b)| {
        let n = e.sr.ring().order();
        (e, Elem::new(a % n), Elem::new(b % n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn orbit_contains_zero_iff_nilpotent((e, x, _) in entry_and_elems()) {
        let ring = e.sr.ring();
        let orbit = power_orbit(ring, x);
        let naive = (1..=ring.order() as u64).any(|k| ring.pow(x, k) == ring.zero());
        prop_assert_eq!(orbit.powers().contains(&ring.zero()), naive);
        prop_assert_eq!(e.census.is_nilpotent(x), naive);
    }

    #[test]
    fn stable_annihilator_contains_annihilator((e, x, _) in entry_and_elems()) {
        let ring = e.sr.ring();
        let r = right_annihilator(ring, x);
        let stable = right_annihilator(ring, e.census.stable_power(x));
        prop_assert!(r.is_subset(&stable));
        // the union over all powers up to |R|
        let mut union = r.clone();
        for k in 2..=ring.order() as u64 {
            union.union_with(&right_annihilator(ring, ring.pow(x, k)));
        }
        prop_assert_eq!(&union, &stable);
        if ring_predicates(&e.sr).is_reduced {
            prop_assert_eq!(&r, &stable);
        }
    }

    #[test]
    fn zero_divisors_closed_under_star(e in entry()) {
        for x in e.sr.ring().elements() {
            prop_assert_eq!(e.census.is_zero_divisor(x), e.census.is_zero_divisor(e.sr.star(x)));
        }
    }

    #[test]
    fn enumerated_involutions_revalidate(e in entry()) {
        prop_assert!(validate_involution(e.sr.ring(), &e.sr.involution().to_vec()).is_ok());
    }

    #[test]
    fn star_graph_inside_prime_graph(e in entry()) {
        let star = gamma_star_with(&e.sr, &e.census).edge_labels();
        let prime = gamma_prime_with(&e.sr, &e.census).edge_labels();
        prop_assert!(star.is_subset(&prime));
        if ring_predicates(&e.sr).is_reduced {
            prop_assert_eq!(star, prime);
        }
    }

    #[test]
    fn nilpotents_are_universal(e in entry()) {
        let g = gamma_prime_with(&e.sr, &e.census);
        let universal: BTreeSet<Elem> = universal_vertices(g.graph()).into_iter().map(|v| *g.graph().label(v)).collect();
        for x in e.census.nilpotents() {
            prop_assert!(universal.contains(&x));
        }
        let ring = e.sr.ring();
        if ring.one().is_some() {
            for &u in &universal {
                let projection = ring.mul(u, u) == u && e.sr.star(u) == u;
                prop_assert!(e.census.is_nilpotent(u) || projection, "{} in {}", ring.name(u), e.sr.describe());
            }
        }
    }

    #[test]
    fn adjacency_closed_under_powers((e, x, y) in entry_and_elems(), i in 1u64..5, j in 1u64..5) {
        let g = gamma_prime_with(&e.sr, &e.census);
        let ring = e.sr.ring();
        let (Some(px), Some(py)) = (g.graph().position(&x), g.graph().position(&y)) else { return Ok(()); };
        if !g.graph().has_edge(px, py) {
            return Ok(());
        }
        let (xi, yj) = (ring.pow(x, i), ring.pow(y, j));
        if let (Some(a), Some(b)) = (g.graph().position(&xi), g.graph().position(&yj)) {
            if a != b {
                prop_assert!(g.graph().has_edge(a, b));
            }
        }
    }

    #[test]
    fn neighborhoods_grow_along_powers((e, x, _) in entry_and_elems(), k in 2u64..6) {
        let g = gamma_prime_with(&e.sr, &e.census);
        let ring = e.sr.ring();
        let xk = ring.pow(x, k);
        let (Some(a), Some(b)) = (g.graph().position(&x), g.graph().position(&xk)) else { return Ok(()); };
        let nb = |v: usize| g.graph().neighbors(v).filter(|&w| w != a && w != b).collect::<BTreeSet<_>>();
        prop_assert!(nb(a).is_subset(&nb(b)));
        if e.census.is_potent(x) {
            prop_assert_eq!(nb(a), nb(b));
        }
    }

    #[test]
    fn projections_adjacent_iff_orthogonal(e in entry()) {
        let ring = e.sr.ring();
        let g = gamma_prime_with(&e.sr, &e.census);
        let projections: Vec<Elem> = g
            .vertices()
            .iter()
            .copied()
            .filter(|&p| ring.mul(p, p) == p && e.sr.star(p) == p)
            .collect();
        for &p in &projections {
            for &q in &projections {
                if p < q {
                    let adjacent = g.graph().has_edge(g.graph().position(&p).unwrap(), g.graph().position(&q).unwrap());
                    prop_assert_eq!(adjacent, ring.mul(p, q) == ring.zero(), "{} {}", ring.name(p), ring.name(q));
                }
            }
        }
    }
}
