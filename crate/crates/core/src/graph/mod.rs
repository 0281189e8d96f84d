//! Simple undirected graphs with labeled vertices, the four zero-divisor
//! graph variants, and generalized joins.

mod construct;
mod join;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::ring::Elem;

pub use construct::{
    build_variant, gamma, gamma_bar, gamma_prime, gamma_prime_with, gamma_star, gamma_star_with, prime_adjacent,
};
pub use join::{generalized_join, m2_field_decomposition, GeneralizedJoinSpec, M2Decomposition};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("the classical zero-divisor graph needs a commutative ring")]
    NotCommutative,
    #[error("host graph has {host} vertices but {parts} parts were given")]
    ArityMismatch { host: usize, parts: usize },
    #[error("ring is not M2 over a finite field with transpose: {0}")]
    NotM2OverField(String),
    #[error("vertex label appears in more than one part")]
    DuplicateVertex,
}

/// A simple undirected graph. Adjacency rows are bit-packed and kept
/// symmetric; loops are never stored.
#[derive(Clone, Debug)]
pub struct Graph<L> {
    labels: Vec<L>,
    index: HashMap<L, usize>,
    adj: Vec<FixedBitSet>,
}

impl<L: Clone + Eq + Hash> Graph<L> {
    /// Edgeless graph on the given labels, which must be distinct.
    pub fn new(labels: Vec<L>) -> Self {
        let n = labels.len();
        let index: HashMap<L, usize> = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        assert_eq!(index.len(), n, "vertex labels must be distinct");
        Graph {
            labels,
            index,
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn complete(labels: Vec<L>) -> Self {
        let mut g = Self::new(labels);
        let n = g.vertex_count();
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &L {
        &self.labels[v]
    }

    pub fn position(&self, label: &L) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Adds `i -- j`; loops are ignored.
    pub fn add_edge(&mut self, i: usize, j: usize) {
        if i != j {
            self.adj[i].insert(j);
            self.adj[j].insert(i);
        }
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn row(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Edges as position pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |i| self.adj[i].ones().filter(move |&j| j > i).map(move |j| (i, j)))
    }

    /// Subgraph induced on the given positions, in the given order.
    pub fn induced(&self, keep: &[usize]) -> Graph<L> {
        let mut g = Graph::new(keep.iter().map(|&v| self.labels[v].clone()).collect());
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Same graph with every label replaced.
    pub fn map_labels<M: Clone + Eq + Hash>(&self, f: impl Fn(&L) -> M) -> Graph<M> {
        let mut g = Graph::new(self.labels.iter().map(f).collect());
        g.adj = self.adj.clone();
        g
    }
}

impl<L: Clone + Eq + Hash + Ord> Graph<L> {
    /// Edge set keyed by labels, each edge as an ordered `(min, max)` pair.
    pub fn edge_labels(&self) -> BTreeSet<(L, L)> {
        self.edges()
            .map(|(i, j)| {
                let (a, b) = (self.labels[i].clone(), self.labels[j].clone());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    }
}

/// Which zero-divisor graph a [`ZdGraph`] is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `xy = 0`, commutative rings only.
    Gamma,
    /// `xy = 0` or `yx = 0`.
    GammaBar,
    /// `x y* = 0`.
    GammaStar,
    /// `x^n y* = 0` or `y^n x* = 0` for some `n >= 1`.
    GammaPrime,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Gamma, Variant::GammaBar, Variant::GammaStar, Variant::GammaPrime];

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Gamma => "gamma",
            Variant::GammaBar => "gamma-bar",
            Variant::GammaStar => "gamma-star",
            Variant::GammaPrime => "gamma-prime",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Variant::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| format!("unknown variant `{s}` (expected gamma, gamma-bar, gamma-star or gamma-prime)"))
    }
}

/// A zero-divisor graph: vertices are exactly `Z*(R)` in index order.
#[derive(Clone, Debug)]
pub struct ZdGraph {
    variant: Variant,
    graph: Graph<Elem>,
}

impl ZdGraph {
    pub(crate) fn new(variant: Variant, graph: Graph<Elem>) -> Self {
        ZdGraph { variant, graph }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn graph(&self) -> &Graph<Elem> {
        &self.graph
    }

    pub fn into_graph(self) -> Graph<Elem> {
        self.graph
    }

    pub fn vertices(&self) -> &[Elem] {
        self.graph.labels()
    }

    pub fn edge_labels(&self) -> BTreeSet<(Elem, Elem)> {
        self.graph.edge_labels()
    }
}
