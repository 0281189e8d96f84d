use std::sync::Arc;

use crate::ring::enumerate::rings_up_to;
use crate::ring::{
    build_matrix_ring, build_product, build_zn, enumerate_involutions, InvolutionKind, StarRing,
    DEFAULT_INVOLUTION_CAP, DEFAULT_ORDER_CAP,
};

/// A named list of *-rings to run checks over.
#[derive(Clone, Debug)]
pub struct RingFamily {
    pub name: String,
    pub members: Vec<StarRing>,
}

impl RingFamily {
    pub fn new(name: impl Into<String>, members: Vec<StarRing>) -> Self {
        RingFamily {
            name: name.into(),
            members,
        }
    }
}

/// `Z_n` with the identity involution for `lo <= n <= hi`.
pub fn zn_family(lo: usize, hi: usize) -> RingFamily {
    let members = (lo.max(1)..=hi)
        .map(|n| StarRing::identity(Arc::new(build_zn(n))).expect("Z_n is commutative"))
        .collect();
    RingFamily::new(format!("Z_n, {lo} <= n <= {hi}"), members)
}

/// `Z_a x Z_b` for `2 <= a, b <= max` with the componentwise identity, and
/// swap when `a = b`.
pub fn product_family(max: usize) -> RingFamily {
    let mut members = Vec::new();
    for a in 2..=max {
        for b in 2..=max {
            let ring = Arc::new(build_product(Arc::new(build_zn(a)), Arc::new(build_zn(b))));
            let cw = InvolutionKind::Componentwise(Box::new(InvolutionKind::Identity), Box::new(InvolutionKind::Identity));
            members.push(StarRing::with_kind(ring.clone(), cw).expect("componentwise identity"));
            if a == b {
                members.push(StarRing::with_kind(ring, InvolutionKind::Swap).expect("swap on R x R"));
            }
        }
    }
    RingFamily::new(format!("Z_a x Z_b, a, b <= {max}"), members)
}

/// `Z_m x Z_m` with swap, for each listed `m`.
pub fn swap_family(moduli: &[usize]) -> RingFamily {
    let members = moduli
        .iter()
        .map(|&m| {
            let z = Arc::new(build_zn(m));
            StarRing::with_kind(Arc::new(build_product(z.clone(), z)), InvolutionKind::Swap).expect("swap on R x R")
        })
        .collect();
    RingFamily::new("Z_m x Z_m with swap", members)
}

/// `M_2(Z_m)` with transpose, for each listed `m`.
pub fn matrix_family(moduli: &[usize]) -> RingFamily {
    let members = moduli
        .iter()
        .map(|&m| {
            let ring = build_matrix_ring(2, Arc::new(build_zn(m)), DEFAULT_ORDER_CAP).expect("within the order cap");
            StarRing::with_kind(Arc::new(ring), InvolutionKind::Transpose).expect("transpose")
        })
        .collect();
    RingFamily::new("M2(Z_m) with transpose", members)
}

/// Every ring of order at most `max_order` under each of its involutions.
/// Non-identity involutions are labeled `inv1`, `inv2`, ... per ring.
pub fn cayley_family(max_order: usize) -> RingFamily {
    let mut members = Vec::new();
    for ring in rings_up_to(max_order) {
        let ring = Arc::new(ring);
        let involutions = enumerate_involutions(&ring, DEFAULT_INVOLUTION_CAP.max(max_order)).expect("order within cap");
        let mut k = 0;
        for inv in involutions {
            let kind = if inv.is_identity() {
                InvolutionKind::Identity
            } else {
                k += 1;
                InvolutionKind::Custom(format!("inv{k}"))
            };
            members.push(StarRing::new(ring.clone(), inv, kind));
        }
    }
    RingFamily::new(format!("all rings of order <= {max_order}"), members)
}

/// Z_n up to 200, small products, M2(Z_m) for m in {2, 3, 4}, and all
/// rings of order at most 8 under every involution.
pub fn default_families() -> Vec<RingFamily> {
    vec![
        zn_family(2, 200),
        product_family(9),
        matrix_family(&[2, 3, 4]),
        cayley_family(8),
    ]
}
