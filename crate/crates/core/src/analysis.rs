//! Graph invariants and shape recognizers.

use std::collections::VecDeque;
use std::fmt;
use std::hash::Hash;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;

/// Default vertex cap for [`isomorphic_small`].
pub const DEFAULT_ISO_CAP: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex is not in the graph")]
    UnknownVertex,
    #[error("graphs have different vertex sets")]
    VertexSetMismatch,
    #[error("graph has {vertices} vertices, above the cap of {cap}")]
    CapExceeded { vertices: usize, cap: usize },
}

/// A non-negative integer or infinity. `Infinity` sorts after every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedNat {
    Finite(u64),
    Infinity,
}

impl ExtendedNat {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedNat::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtendedNat::Finite(v) => Some(v),
            ExtendedNat::Infinity => None,
        }
    }
}

impl From<u64> for ExtendedNat {
    fn from(v: u64) -> Self {
        ExtendedNat::Finite(v)
    }
}

impl fmt::Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNat::Finite(v) => write!(f, "{v}"),
            ExtendedNat::Infinity => f.write_str("inf"),
        }
    }
}

/// Integers stay integers; infinity becomes the string `"inf"`.
impl Serialize for ExtendedNat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtendedNat::Finite(v) => s.serialize_u64(*v),
            ExtendedNat::Infinity => s.serialize_str("inf"),
        }
    }
}

/// BFS distances from `source`; `None` for unreachable vertices.
pub fn distances_from<L: Clone + Eq + Hash>(g: &Graph<L>, source: usize) -> Vec<Option<u64>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices have a distance");
        for w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Connected components as lists of positions, each sorted, ordered by
/// smallest member.
pub fn components<L: Clone + Eq + Hash>(g: &Graph<L>) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected<L: Clone + Eq + Hash>(g: &Graph<L>) -> bool {
    components(g).len() <= 1
}

/// Largest pairwise distance: 0 for one vertex, infinity when disconnected.
pub fn diameter<L: Clone + Eq + Hash>(g: &Graph<L>) -> Result<ExtendedNat, AnalysisError> {
    if g.vertex_count() == 0 {
        return Err(AnalysisError::EmptyGraph);
    }
    let mut best = 0;
    for s in 0..g.vertex_count() {
        for d in distances_from(g, s) {
            match d {
                Some(d) => best = best.max(d),
                None => return Ok(ExtendedNat::Infinity),
            }
        }
    }
    Ok(ExtendedNat::Finite(best))
}

/// Length of a shortest cycle, infinity for forests (including the empty graph).
pub fn girth<L: Clone + Eq + Hash>(g: &Graph<L>) -> ExtendedNat {
    shortest_cycle(g).map_or(ExtendedNat::Infinity, |c| ExtendedNat::Finite(c.len() as u64))
}

/// Vertices of a shortest cycle in traversal order, if the graph has one.
pub fn shortest_cycle<L: Clone + Eq + Hash>(g: &Graph<L>) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut best: Option<Vec<usize>> = None;
    for s in 0..n {
        let mut dist: Vec<Option<u64>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have a distance");
            if best.as_ref().is_some_and(|b| 2 * du + 1 >= b.len() as u64) {
                break;
            }
            for w in g.neighbors(u) {
                match dist[w] {
                    None => {
                        dist[w] = Some(du + 1);
                        parent[w] = u;
                        queue.push_back(w);
                    }
                    Some(dw) if parent[u] != w => {
                        let len = (du + dw + 1) as usize;
                        if best.as_ref().is_none_or(|b| len < b.len()) {
                            let mut cycle = walk_to_root(&parent, u, s);
                            cycle.reverse();
                            cycle.extend(walk_to_root(&parent, w, s).into_iter().rev().skip(1).rev());
                            best = Some(cycle);
                        }
                    }
                    Some(_) => {}
                }
            }
        }
    }
    best
}

/// `v, parent(v), ..., root`.
fn walk_to_root(parent: &[usize], mut v: usize, root: usize) -> Vec<usize> {
    let mut out = vec![v];
    while v != root {
        v = parent[v];
        out.push(v);
    }
    out
}

/// A shortest path from `a` to `b` as positions, both endpoints included.
pub fn shortest_path<L: Clone + Eq + Hash>(g: &Graph<L>, a: usize, b: usize) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.vertex_count()];
    parent[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        if u == b {
            let mut path = walk_to_root(&parent, b, a);
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

pub fn degree_sequence<L: Clone + Eq + Hash>(g: &Graph<L>) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

/// Positions adjacent to every other vertex.
pub fn universal_vertices<L: Clone + Eq + Hash>(g: &Graph<L>) -> Vec<usize> {
    let n = g.vertex_count();
    (0..n).filter(|&v| g.degree(v) + 1 == n).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeReport {
    /// `K_n` with `n >= 1`.
    pub is_complete: bool,
    /// Center position when the graph is `K_{1,n}` with `n >= 1`. For `K_2`
    /// the first vertex is reported.
    pub star_center: Option<usize>,
    /// Both sides of a complete bipartite graph with non-empty sides.
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
}

impl ShapeReport {
    pub fn is_star(&self) -> bool {
        self.star_center.is_some()
    }

    pub fn is_complete_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }
}

pub fn shape_tests<L: Clone + Eq + Hash>(g: &Graph<L>) -> ShapeReport {
    let n = g.vertex_count();
    let m = g.edge_count();
    let is_complete = n >= 1 && m == n * (n - 1) / 2;
    let star_center = if n >= 2 && m == n - 1 {
        (0..n).find(|&v| g.degree(v) == n - 1)
    } else {
        None
    };
    ShapeReport {
        is_complete,
        star_center,
        bipartition: complete_bipartition(g),
    }
}

fn complete_bipartition<L: Clone + Eq + Hash>(g: &Graph<L>) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.vertex_count();
    if n < 2 || !is_connected(g) {
        return None;
    }
    let mut side: Vec<Option<bool>> = vec![None; n];
    side[0] = Some(false);
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        let su = side[u].expect("queued vertices are colored");
        for w in g.neighbors(u) {
            match side[w] {
                None => {
                    side[w] = Some(!su);
                    queue.push_back(w);
                }
                Some(sw) if sw == su => return None,
                Some(_) => {}
            }
        }
    }
    let (a, b): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| side[v] == Some(false));
    (g.edge_count() == a.len() * b.len()).then_some((a, b))
}

/// Open neighborhood of the vertex with the given label, in position order.
pub fn neighborhood<L: Clone + Eq + Hash>(g: &Graph<L>, x: &L) -> Result<Vec<L>, AnalysisError> {
    let v = g.position(x).ok_or(AnalysisError::UnknownVertex)?;
    Ok(g.neighbors(v).map(|w| g.label(w).clone()).collect())
}

/// Exact edge-set comparison of two graphs on the same labels.
pub fn edge_set_equal<L: Clone + Eq + Hash>(g1: &Graph<L>, g2: &Graph<L>) -> Result<bool, AnalysisError> {
    let same_vertices = g1.vertex_count() == g2.vertex_count() && g2.labels().iter().all(|l| g1.position(l).is_some());
    if !same_vertices {
        return Err(AnalysisError::VertexSetMismatch);
    }
    if g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let to_g1: Vec<usize> = g2.labels().iter().map(|l| g1.position(l).expect("checked above")).collect();
    Ok(g2.edges().all(|(i, j)| g1.has_edge(to_g1[i], to_g1[j])))
}

/// Brute-force isomorphism test with degree pruning.
pub fn isomorphic_small<L, M>(g1: &Graph<L>, g2: &Graph<M>, cap: usize) -> Result<bool, AnalysisError>
where
    L: Clone + Eq + Hash,
    M: Clone + Eq + Hash,
{
    for n in [g1.vertex_count(), g2.vertex_count()] {
        if n > cap {
            return Err(AnalysisError::CapExceeded { vertices: n, cap });
        }
    }
    if g1.vertex_count() != g2.vertex_count()
        || g1.edge_count() != g2.edge_count()
        || degree_sequence(g1) != degree_sequence(g2)
    {
        return Ok(false);
    }
    let n = g1.vertex_count();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend_isomorphism(g1, g2, 0, &mut image, &mut used))
}

fn extend_isomorphism<L, M>(g1: &Graph<L>, g2: &Graph<M>, v: usize, image: &mut [usize], used: &mut [bool]) -> bool
where
    L: Clone + Eq + Hash,
    M: Clone + Eq + Hash,
{
    if v == image.len() {
        return true;
    }
    for w in 0..image.len() {
        if used[w] || g1.degree(v) != g2.degree(w) {
            continue;
        }
        if (0..v).any(|u| g1.has_edge(u, v) != g2.has_edge(image[u], w)) {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend_isomorphism(g1, g2, v + 1, image, used) {
            return true;
        }
        used[w] = false;
    }
    false
}

/// Every invariant the reports and checks use, computed in one pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport<L> {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub component_count: usize,
    /// `None` for the empty graph.
    pub diameter: Option<ExtendedNat>,
    pub girth: ExtendedNat,
    pub is_connected: bool,
    pub is_complete: bool,
    pub is_star: bool,
    pub star_center: Option<L>,
    pub universal_vertices: Vec<L>,
    /// Non-increasing.
    pub degree_sequence: Vec<usize>,
}

pub fn invariant_report<L: Clone + Eq + Hash>(g: &Graph<L>) -> InvariantReport<L> {
    let component_count = components(g).len();
    let shape = shape_tests(g);
    InvariantReport {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        component_count,
        diameter: diameter(g).ok(),
        girth: girth(g),
        is_connected: component_count <= 1,
        is_complete: shape.is_complete,
        is_star: shape.is_star(),
        star_center: shape.star_center.map(|v| g.label(v).clone()),
        universal_vertices: universal_vertices(g).into_iter().map(|v| g.label(v).clone()).collect(),
        degree_sequence: degree_sequence(g),
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph<usize> {
        let mut g = Graph::new((0..n).collect());
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    fn cycle(n: usize) -> Graph<usize> {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        from_edges(n, &edges)
    }

    #[test]
    fn extended_nat_ordering_and_display() {
        assert!(ExtendedNat::Infinity > ExtendedNat::Finite(u64::MAX));
        assert!(ExtendedNat::Finite(2) < ExtendedNat::Finite(3));
        assert_eq!(ExtendedNat::Infinity.to_string(), "inf");
        assert_eq!(serde_json::to_string(&ExtendedNat::Finite(4)).unwrap(), "4");
        assert_eq!(serde_json::to_string(&ExtendedNat::Infinity).unwrap(), "\"inf\"");
    }

    #[test]
    fn component_counts() {
        assert_eq!(components(&Graph::<usize>::new(vec![])).len(), 0);
        assert_eq!(components(&from_edges(4, &[(0, 1), (2, 3)])), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(components(&cycle(5)).len(), 1);
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter(&Graph::<usize>::new(vec![])), Err(AnalysisError::EmptyGraph));
        assert_eq!(diameter(&from_edges(1, &[])), Ok(ExtendedNat::Finite(0)));
        assert_eq!(diameter(&from_edges(2, &[(0, 1)])), Ok(ExtendedNat::Finite(1)));
        assert_eq!(diameter(&cycle(7)), Ok(ExtendedNat::Finite(3)));
        assert_eq!(diameter(&from_edges(4, &[(0, 1), (2, 3)])), Ok(ExtendedNat::Infinity));
    }

    #[test]
    fn girths() {
        assert_eq!(girth(&Graph::<usize>::new(vec![])), ExtendedNat::Infinity);
        assert_eq!(girth(&from_edges(4, &[(0, 1), (1, 2), (1, 3)])), ExtendedNat::Infinity);
        for n in 3..9 {
            assert_eq!(girth(&cycle(n)), ExtendedNat::Finite(n as u64));
        }
        // K_{2,2} plus a pendant path
        assert_eq!(girth(&from_edges(5, &[(0, 2), (0, 3), (1, 2), (1, 3), (3, 4)])), ExtendedNat::Finite(4));
        // 5-cycle with a chord gives a triangle
        let mut g = cycle(5);
        g.add_edge(0, 2);
        assert_eq!(girth(&g), ExtendedNat::Finite(3));
    }

    #[test]
    fn cycle_and_path_witnesses() {
        let g = from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5)]);
        let c = shortest_cycle(&g).unwrap();
        assert_eq!(c.len(), 5);
        for (i, &v) in c.iter().enumerate() {
            assert!(g.has_edge(v, c[(i + 1) % c.len()]));
        }
        assert_eq!(c.iter().collect::<HashSet<_>>().len(), 5);
        assert_eq!(shortest_path(&g, 1, 5), Some(vec![1, 0, 4, 5]));
        assert_eq!(shortest_path(&g, 2, 2), Some(vec![2]));
        assert_eq!(shortest_path(&from_edges(3, &[(0, 1)]), 0, 2), None);
    }

    #[test]
    fn shapes() {
        let k3 = Graph::complete(vec![0, 1, 2]);
        let s = shape_tests(&k3);
        assert!(s.is_complete && !s.is_star() && s.bipartition.is_none());

        let star = from_edges(4, &[(2, 0), (2, 1), (2, 3)]);
        let s = shape_tests(&star);
        assert_eq!(s.star_center, Some(2));
        assert_eq!(s.bipartition, Some((vec![0, 1, 3], vec![2])));

        let k2 = from_edges(2, &[(0, 1)]);
        assert_eq!(shape_tests(&k2).star_center, Some(0));

        let path = from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let s = shape_tests(&path);
        assert!(!s.is_complete && !s.is_star() && s.bipartition.is_none());

        assert!(!shape_tests(&Graph::<usize>::new(vec![])).is_complete);
        assert!(shape_tests(&from_edges(1, &[])).is_complete);
    }

    #[test]
    fn neighborhoods() {
        let star = from_edges(4, &[(2, 0), (2, 1), (2, 3)]);
        assert_eq!(neighborhood(&star, &2).unwrap(), vec![0, 1, 3]);
        assert_eq!(neighborhood(&from_edges(2, &[]), &1).unwrap(), Vec::<usize>::new());
        assert_eq!(neighborhood(&star, &9), Err(AnalysisError::UnknownVertex));
    }

    #[test]
    fn edge_set_comparison() {
        let a = from_edges(3, &[(0, 1)]);
        let mut b = Graph::new(vec![2, 1, 0]);
        b.add_edge(1, 2);
        assert_eq!(edge_set_equal(&a, &b), Ok(true));
        assert_eq!(edge_set_equal(&a, &a), Ok(true));
        assert_eq!(edge_set_equal(&a, &cycle(3)), Ok(false));
        assert_eq!(edge_set_equal(&a, &cycle(4)), Err(AnalysisError::VertexSetMismatch));
    }

    #[test]
    fn small_isomorphism() {
        let k3 = Graph::complete(vec!['a', 'b', 'c']);
        assert_eq!(isomorphic_small(&k3, &cycle(3), DEFAULT_ISO_CAP), Ok(true));
        let p3 = from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(isomorphic_small(&p3, &k3, DEFAULT_ISO_CAP), Ok(false));
        // same degree sequence, not isomorphic: C6 vs two triangles
        let two_triangles = from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert_eq!(isomorphic_small(&cycle(6), &two_triangles, DEFAULT_ISO_CAP), Ok(false));
        let relabeled = from_edges(6, &[(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]);
        assert_eq!(isomorphic_small(&cycle(6), &relabeled, DEFAULT_ISO_CAP), Ok(true));
        assert_eq!(
            isomorphic_small(&cycle(11), &cycle(11), DEFAULT_ISO_CAP),
            Err(AnalysisError::CapExceeded { vertices: 11, cap: 10 })
        );
    }

    #[test]
    fn report_fields() {
        let r = invariant_report(&from_edges(4, &[(2, 0), (2, 1), (2, 3)]));
        assert_eq!(r.component_count, 1);
        assert_eq!(r.diameter, Some(ExtendedNat::Finite(2)));
        assert_eq!(r.girth, ExtendedNat::Infinity);
        assert!(r.is_star && r.is_connected && !r.is_complete);
        assert_eq!(r.star_center, Some(2));
        assert_eq!(r.universal_vertices, vec![2]);
        assert_eq!(r.degree_sequence, vec![3, 1, 1, 1]);

        let empty = invariant_report(&Graph::<usize>::new(vec![]));
        assert_eq!(empty.diameter, None);
        assert!(empty.is_connected && !empty.is_complete);
    }
}
