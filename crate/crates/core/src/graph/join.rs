use std::hash::Hash;

use super::{gamma_star_with, Graph, GraphError};
use crate::ring::{Census, Elem, InvolutionKind, Shape, StarRing};

/// A host graph `H` on `n` vertices and one part graph per host vertex.
#[derive(Clone, Debug)]
pub struct GeneralizedJoinSpec<H, L> {
    pub host: Graph<H>,
    pub parts: Vec<Graph<L>>,
}

impl<H: Clone + Eq + Hash, L: Clone + Eq + Hash> GeneralizedJoinSpec<H, L> {
    pub fn build(&self) -> Result<Graph<L>, GraphError> {
        generalized_join(&self.host, &self.parts)
    }
}

/// Replaces host vertex `i` by `parts[i]` and joins every vertex of
/// `parts[i]` to every vertex of `parts[j]` exactly when `i ~ j` in the host.
/// Part labels must be pairwise distinct across parts.
pub fn generalized_join<H, L>(host: &Graph<H>, parts: &[Graph<L>]) -> Result<Graph<L>, GraphError>
where
    H: Clone + Eq + Hash,
    L: Clone + Eq + Hash,
{
    if host.vertex_count() != parts.len() {
        return Err(GraphError::ArityMismatch {
            host: host.vertex_count(),
            parts: parts.len(),
        });
    }
    let mut offsets = Vec::with_capacity(parts.len());
    let mut labels = Vec::new();
    for part in parts {
        offsets.push(labels.len());
        labels.extend(part.labels().iter().cloned());
    }
    let total = labels.len();
    let mut seen = std::collections::HashSet::with_capacity(total);
    if !labels.iter().all(|l| seen.insert(l.clone())) {
        return Err(GraphError::DuplicateVertex);
    }
    let mut g = Graph::new(labels);
    for (part, &base) in parts.iter().zip(&offsets) {
        for (u, v) in part.edges() {
            g.add_edge(base + u, base + v);
        }
    }
    for (i, j) in host.edges() {
        for u in 0..parts[i].vertex_count() {
            for v in 0..parts[j].vertex_count() {
                g.add_edge(offsets[i] + u, offsets[j] + v);
            }
        }
    }
    Ok(g)
}

/// The pieces of `Γ'(M2(F))` for a finite field `F` under transpose.
#[derive(Clone, Debug)]
pub struct M2Decomposition {
    /// `Γ*` induced on the non-nilpotent zero-divisors.
    pub gamma1: Graph<Elem>,
    /// Complete graph on the non-zero nilpotents.
    pub nilpotent_part: Graph<Elem>,
    /// `K2`-join of the two.
    pub join: Graph<Elem>,
}

pub fn m2_field_decomposition(sr: &StarRing) -> Result<M2Decomposition, GraphError> {
    let ring = sr.ring();
    let base = match ring.shape() {
        Shape::Matrix { size: 2, base } => base,
        _ => return Err(GraphError::NotM2OverField(format!("{} is not a 2x2 matrix ring", ring.describe()))),
    };
    let base_is_field = base.order() >= 2
        && base.one().is_some()
        && base.is_commutative()
        && Census::of(base).zero_divisors().is_empty();
    if !base_is_field {
        return Err(GraphError::NotM2OverField(format!("{} is not a field", base.describe())));
    }
    if *sr.kind() != InvolutionKind::Transpose {
        return Err(GraphError::NotM2OverField(format!("involution is {}, not transpose", sr.kind())));
    }

    let census = Census::of(ring);
    let star = gamma_star_with(sr, &census);
    let g = star.graph();
    let (nil, non_nil): (Vec<usize>, Vec<usize>) =
        (0..g.vertex_count()).partition(|&v| census.is_nilpotent(*g.label(v)));
    let gamma1 = g.induced(&non_nil);
    let nilpotent_part = Graph::complete(nil.iter().map(|&v| *g.label(v)).collect());
    let join = generalized_join(&Graph::complete(vec![0u8, 1]), &[gamma1.clone(), nilpotent_part.clone()])?;
    Ok(M2Decomposition {
        gamma1,
        nilpotent_part,
        join,
    })
}
