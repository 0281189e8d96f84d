use std::fmt;
use std::sync::Arc;

use super::involution::{validate_involution, validate_involution_sampled, Involution, InvolutionError};
use super::{Elem, FiniteRing, Shape};

/// Rings above this order get sampled pair checks when an involution is attached.
const EXHAUSTIVE_INVOLUTION_LIMIT: usize = 1024;
const PAIR_SAMPLES: usize = 50_000;

/// How an involution was obtained; used for descriptions and for family
/// hypotheses.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum InvolutionKind {
    Identity,
    /// `(x, y)* = (y, x)` on `R x R`.
    Swap,
    /// Matrix transpose.
    Transpose,
    Componentwise(Box<InvolutionKind>, Box<InvolutionKind>),
    /// Anything else: enumerated or read from a file.
    Custom(String),
}

impl fmt::Display for InvolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvolutionKind::Identity => f.write_str("id"),
            InvolutionKind::Swap => f.write_str("swap"),
            InvolutionKind::Transpose => f.write_str("transpose"),
            InvolutionKind::Componentwise(a, b) => write!(f, "({a},{b})"),
            InvolutionKind::Custom(label) => f.write_str(label),
        }
    }
}

/// A finite ring paired with a validated involution.
#[derive(Clone, Debug)]
pub struct StarRing {
    ring: Arc<FiniteRing>,
    star: Involution,
    kind: InvolutionKind,
}

impl StarRing {
    /// Pairs a ring with an involution already validated against it.
    pub fn new(ring: Arc<FiniteRing>, star: Involution, kind: InvolutionKind) -> Self {
        assert_eq!(star.to_vec().len(), ring.order(), "involution built for another ring");
        StarRing { ring, star, kind }
    }

    /// Builds and validates the involution named by `kind`.
    pub fn with_kind(ring: Arc<FiniteRing>, kind: InvolutionKind) -> Result<Self, InvolutionError> {
        let map = involution_map(&ring, &kind)?;
        let star = if ring.order() <= EXHAUSTIVE_INVOLUTION_LIMIT {
            validate_involution(&ring, &map)?
        } else {
            validate_involution_sampled(&ring, &map, PAIR_SAMPLES, ring.order() as u64)?
        };
        Ok(StarRing { ring, star, kind })
    }

    pub fn identity(ring: Arc<FiniteRing>) -> Result<Self, InvolutionError> {
        Self::with_kind(ring, InvolutionKind::Identity)
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn ring_arc(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn involution(&self) -> &Involution {
        &self.star
    }

    pub fn kind(&self) -> &InvolutionKind {
        &self.kind
    }

    #[inline]
    pub fn star(&self, x: Elem) -> Elem {
        self.star.apply(x)
    }

    /// Canonical `ring@involution` string.
    pub fn describe(&self) -> String {
        format!("{}@{}", self.ring.describe(), self.kind)
    }

    /// Whether the involution maps each product factor into itself.
    pub fn is_componentwise(&self) -> bool {
        let Shape::Product(l, r) = self.ring.shape() else {
            return false;
        };
        let ring = &*self.ring;
        l.elements().all(|a| ring.split(self.star(ring.pair(a, r.zero()))).1 == r.zero())
            && r.elements().all(|b| ring.split(self.star(ring.pair(l.zero(), b))).0 == l.zero())
    }
}

fn involution_map(ring: &FiniteRing, kind: &InvolutionKind) -> Result<Vec<usize>, InvolutionError> {
    let incompatible = |why: String| Err(InvolutionError::IncompatibleShape(why));
    match kind {
        InvolutionKind::Identity => Ok((0..ring.order()).collect()),
        InvolutionKind::Swap => match ring.shape() {
            Shape::Product(l, r) if l.describe() == r.describe() && l.order() == r.order() => Ok(ring
                .elements()
                .map(|x| {
                    let (a, b) = ring.split(x);
                    ring.pair(b, a).index()
                })
                .collect()),
            _ => incompatible(format!("swap needs a product R x R, got {}", ring.describe())),
        },
        InvolutionKind::Transpose => match ring.shape() {
            Shape::Matrix { size, .. } => {
                let k = *size;
                Ok(ring
                    .elements()
                    .map(|x| {
                        let m = ring.entries(x);
                        let t: Vec<Elem> = (0..k * k).map(|p| m[(p % k) * k + p / k]).collect();
                        ring.from_entries(&t).index()
                    })
                    .collect())
            }
            _ => incompatible(format!("transpose needs a matrix ring, got {}", ring.describe())),
        },
        InvolutionKind::Componentwise(a, b) => match ring.shape() {
            Shape::Product(l, r) => {
                let left = involution_map(l, a)?;
                let right = involution_map(r, b)?;
                Ok(ring
                    .elements()
                    .map(|x| {
                        let (p, q) = ring.split(x);
                        ring.pair(Elem::new(left[p.index()]), Elem::new(right[q.index()])).index()
                    })
                    .collect())
            }
            _ => incompatible(format!("componentwise involution needs a product, got {}", ring.describe())),
        },
        InvolutionKind::Custom(label) => incompatible(format!("custom involution `{label}` needs an explicit map")),
    }
}

#[cfg(test)]
mod tests {
    use super::super::{build_matrix_ring, build_product, build_zn, DEFAULT_ORDER_CAP};
    use super::*;

    #[test]
    fn descriptions() {
        let z3 = Arc::new(build_zn(3));
        let p = Arc::new(build_product(z3.clone(), z3));
        let sr = StarRing::with_kind(p.clone(), InvolutionKind::Swap).unwrap();
        assert_eq!(sr.describe(), "Z3xZ3@swap");
        assert!(!sr.is_componentwise());
        let cw = InvolutionKind::Componentwise(Box::new(InvolutionKind::Identity), Box::new(InvolutionKind::Identity));
        let sr = StarRing::with_kind(p, cw).unwrap();
        assert_eq!(sr.describe(), "Z3xZ3@(id,id)");
        assert!(sr.is_componentwise());
    }

    #[test]
    fn identity_rejected_on_noncommutative_ring() {
        let m = Arc::new(build_matrix_ring(2, Arc::new(build_zn(2)), DEFAULT_ORDER_CAP).unwrap());
        let err = StarRing::identity(m.clone()).unwrap_err();
        assert!(matches!(err, InvolutionError::NotAntiMultiplicative { .. }));
        let sr = StarRing::with_kind(m, InvolutionKind::Transpose).unwrap();
        assert_eq!(sr.describe(), "M2(Z2)@transpose");
    }

    #[test]
    fn shape_mismatches() {
        let z3 = Arc::new(build_zn(3));
        let z4 = Arc::new(build_zn(4));
        let p = Arc::new(build_product(z3.clone(), z4));
        assert!(matches!(
            StarRing::with_kind(p, InvolutionKind::Swap),
            Err(InvolutionError::IncompatibleShape(_))
        ));
        assert!(matches!(
            StarRing::with_kind(z3, InvolutionKind::Transpose),
            Err(InvolutionError::IncompatibleShape(_))
        ));
    }

    #[test]
    fn transpose_on_large_matrix_ring_is_sampled() {
        let m = Arc::new(build_matrix_ring(2, Arc::new(build_zn(6)), DEFAULT_ORDER_CAP).unwrap());
        let sr = StarRing::with_kind(m.clone(), InvolutionKind::Transpose).unwrap();
        let a = m.from_entries(&[Elem::new(1), Elem::new(2), Elem::new(3), Elem::new(4)]);
        assert_eq!(sr.ring().name(sr.star(a)), "[[1,3],[2,4]]");
    }
}
