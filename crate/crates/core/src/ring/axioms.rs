use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Elem, FiniteRing, TABLE_LIMIT};

/// Samples per law when a ring is too large for exhaustive checking.
const SAMPLES: usize = 20_000;
const SAMPLE_SEED: u64 = 0x005E_ED0F_2196;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdditiveLaw {
    Associativity,
    Commutativity,
    Identity,
    Inverse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A violated ring axiom together with the first witness found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    NonAbelianAddition { law: AdditiveLaw, witness: Vec<Elem> },
    NonAssociativeMultiplication { witness: [Elem; 3] },
    /// `Left`: `a(b+c) != ab+ac`; `Right`: `(a+b)c != ac+bc`.
    DistributivityFailure { side: Side, witness: [Elem; 3] },
    IdentityFailure { one: Elem, witness: Elem },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |w: &[Elem]| w.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",");
        match self {
            AxiomViolation::NonAbelianAddition { law, witness } => {
                write!(f, "addition fails {law:?} at ({})", list(witness))
            }
            AxiomViolation::NonAssociativeMultiplication { witness } => {
                write!(f, "multiplication not associative at ({})", list(witness))
            }
            AxiomViolation::DistributivityFailure { side, witness } => {
                write!(f, "{side:?} distributivity fails at ({})", list(witness))
            }
            AxiomViolation::IdentityFailure { one, witness } => {
                write!(f, "{one} is not a two-sided identity at {witness}")
            }
        }
    }
}

/// Exhaustive validation for rings up to [`TABLE_LIMIT`], sampled above.
pub fn validate_ring(ring: &FiniteRing) -> Vec<AxiomViolation> {
    if ring.order() <= TABLE_LIMIT {
        validate_ring_exhaustive(ring)
    } else {
        validate_ring_sampled(ring, SAMPLES, SAMPLE_SEED)
    }
}

pub fn validate_ring_exhaustive(ring: &FiniteRing) -> Vec<AxiomViolation> {
    let els = ring.elements();
    let pairs = els.clone().flat_map(|a| els.clone().map(move |b| (a, b)));
    let triples = els.clone().flat_map(|a| {
        let els = els.clone();
        els.clone().flat_map(move |b| els.clone().map(move |c| (a, b, c)))
    });
    let mut out = Vec::new();
    check_pairs(ring, pairs, &mut out);
    check_triples(ring, triples, &mut out);
    out
}

/// Validation on `samples` random pairs and triples (deterministic per seed).
pub fn validate_ring_sampled(ring: &FiniteRing, samples: usize, seed: u64) -> Vec<AxiomViolation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = ring.order();
    let mut pick = move || Elem::new(rng.gen_range(0..n));
    let pairs: Vec<(Elem, Elem)> = (0..samples).map(|_| (pick(), pick())).collect();
    let triples: Vec<(Elem, Elem, Elem)> = (0..samples).map(|_| (pick(), pick(), pick())).collect();
    let mut out = Vec::new();
    check_pairs(ring, pairs.into_iter(), &mut out);
    check_triples(ring, triples.into_iter(), &mut out);
    out
}

fn check_pairs(ring: &FiniteRing, pairs: impl Iterator<Item = (Elem, Elem)>, out: &mut Vec<AxiomViolation>) {
    let zero = ring.zero();
    let mut comm = None;
    let mut ident = None;
    let mut inverse = None;
    let mut one_fail = None;
    for (a, b) in pairs {
        if comm.is_none() && ring.add(a, b) != ring.add(b, a) {
            comm = Some(vec![a, b]);
        }
        if ident.is_none() && (ring.add(a, zero) != a || ring.add(zero, a) != a) {
            ident = Some(vec![a]);
        }
        if inverse.is_none() && ring.add(a, ring.neg(a)) != zero {
            inverse = Some(vec![a]);
        }
        if let Some(one) = ring.one() {
            if one_fail.is_none() && (ring.mul(one, a) != a || ring.mul(a, one) != a) {
                one_fail = Some((one, a));
            }
        }
    }
    if let Some(w) = comm {
        out.push(AxiomViolation::NonAbelianAddition { law: AdditiveLaw::Commutativity, witness: w });
    }
    if let Some(w) = ident {
        out.push(AxiomViolation::NonAbelianAddition { law: AdditiveLaw::Identity, witness: w });
    }
    if let Some(w) = inverse {
        out.push(AxiomViolation::NonAbelianAddition { law: AdditiveLaw::Inverse, witness: w });
    }
    if let Some((one, witness)) = one_fail {
        out.push(AxiomViolation::IdentityFailure { one, witness });
    }
}

fn check_triples(
    ring: &FiniteRing,
    triples: impl Iterator<Item = (Elem, Elem, Elem)>,
    out: &mut Vec<AxiomViolation>,
) {
    let mut add_assoc = None;
    let mut mul_assoc = None;
    let mut left = None;
    let mut right = None;
    for (a, b, c) in triples {
        if add_assoc.is_none() && ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c)) {
            add_assoc = Some(vec![a, b, c]);
        }
        if mul_assoc.is_none() && ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)) {
            mul_assoc = Some([a, b, c]);
        }
        if left.is_none() && ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)) {
            left = Some([a, b, c]);
        }
        if right.is_none() && ring.mul(ring.add(a, b), c) != ring.add(ring.mul(a, c), ring.mul(b, c)) {
            right = Some([a, b, c]);
        }
        if add_assoc.is_some() && mul_assoc.is_some() && left.is_some() && right.is_some() {
            break;
        }
    }
    if let Some(w) = add_assoc {
        out.push(AxiomViolation::NonAbelianAddition { law: AdditiveLaw::Associativity, witness: w });
    }
    if let Some(witness) = mul_assoc {
        out.push(AxiomViolation::NonAssociativeMultiplication { witness });
    }
    if let Some(witness) = left {
        out.push(AxiomViolation::DistributivityFailure { side: Side::Left, witness });
    }
    if let Some(witness) = right {
        out.push(AxiomViolation::DistributivityFailure { side: Side::Right, witness });
    }
}
