use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::{Elem, FiniteRing, StarRing};

/// The distinct powers `x, x^2, ...` up to the first repetition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerOrbit {
    powers: Vec<Elem>,
    cycle_start: usize,
}

impl PowerOrbit {
    pub fn powers(&self) -> &[Elem] {
        &self.powers
    }

    /// Number of powers before the cycle.
    pub fn preperiod(&self) -> usize {
        self.cycle_start
    }

    pub fn period(&self) -> usize {
        self.powers.len() - self.cycle_start
    }

    /// Smallest exponent whose power lies on the cycle.
    pub fn stable_exponent(&self) -> usize {
        self.cycle_start + 1
    }

    /// `x^a` for the stable exponent `a`. Every `x^n` with `n >= a` has the
    /// same right annihilator as this element.
    pub fn stable_power(&self) -> Elem {
        self.powers[self.cycle_start]
    }

    /// Smallest `m` with `x^m = 0`, if any.
    pub fn nilpotency_index(&self, zero: Elem) -> Option<usize> {
        self.powers.iter().position(|&p| p == zero).map(|i| i + 1)
    }

    /// `x^m = x` for some `m >= 2`.
    pub fn is_potent(&self) -> bool {
        self.cycle_start == 0
    }
}

pub fn power_orbit(ring: &FiniteRing, x: Elem) -> PowerOrbit {
    let mut seen: HashMap<Elem, usize> = HashMap::new();
    let mut powers = Vec::new();
    let mut p = x;
    loop {
        if let Some(&at) = seen.get(&p) {
            return PowerOrbit { powers, cycle_start: at };
        }
        seen.insert(p, powers.len());
        powers.push(p);
        p = ring.mul(p, x);
    }
}

/// `{ z : x z = 0 }`.
pub fn right_annihilator(ring: &FiniteRing, x: Elem) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(ring.order());
    for z in ring.elements() {
        if ring.mul(x, z) == ring.zero() {
            set.insert(z.index());
        }
    }
    set
}

/// `{ z : z x = 0 }`.
pub fn left_annihilator(ring: &FiniteRing, x: Elem) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(ring.order());
    for z in ring.elements() {
        if ring.mul(z, x) == ring.zero() {
            set.insert(z.index());
        }
    }
    set
}

fn is_zero_divisor(ring: &FiniteRing, x: Elem) -> bool {
    let zero = ring.zero();
    x != zero && ring.nonzero().any(|y| ring.mul(x, y) == zero || ring.mul(y, x) == zero)
}

fn is_unit(ring: &FiniteRing, x: Elem) -> bool {
    ring.one()
        .is_some_and(|one| ring.elements().any(|y| ring.mul(x, y) == one && ring.mul(y, x) == one))
}

#[derive(Clone, Debug)]
pub struct ElementProfile {
    pub element: Elem,
    /// Membership in `Z*(R)`: non-zero with a non-zero left or right annihilator.
    pub is_zero_divisor: bool,
    pub is_nilpotent: bool,
    pub nilpotency_index: Option<usize>,
    pub is_idempotent: bool,
    pub is_projection: bool,
    pub is_unit: bool,
    pub is_potent: bool,
    pub power_orbit: PowerOrbit,
    /// Union of the right annihilators of all powers of the element.
    pub stable_annihilator: FixedBitSet,
}

pub fn classify_element(sr: &StarRing, x: Elem) -> ElementProfile {
    let ring = sr.ring();
    let orbit = power_orbit(ring, x);
    let nilpotency_index = orbit.nilpotency_index(ring.zero());
    let is_idempotent = ring.mul(x, x) == x;
    ElementProfile {
        element: x,
        is_zero_divisor: is_zero_divisor(ring, x),
        is_nilpotent: nilpotency_index.is_some(),
        nilpotency_index,
        is_idempotent,
        is_projection: is_idempotent && sr.star(x) == x,
        is_unit: is_unit(ring, x),
        is_potent: orbit.is_potent(),
        stable_annihilator: right_annihilator(ring, orbit.stable_power()),
        power_orbit: orbit,
    }
}

/// Per-element facts for a whole ring, computed once and shared by the graph
/// builders and the theorem checks.
#[derive(Clone, Debug)]
pub struct Census {
    zero_divisors: Vec<Elem>,
    is_zd: FixedBitSet,
    nilpotency: Vec<Option<u32>>,
    stable_power: Vec<Elem>,
    potent: FixedBitSet,
}

impl Census {
    pub fn of(ring: &FiniteRing) -> Self {
        let n = ring.order();
        let zero = ring.zero();
        let mut is_zd = FixedBitSet::with_capacity(n);
        let mut nilpotency = Vec::with_capacity(n);
        let mut stable_power = Vec::with_capacity(n);
        let mut potent = FixedBitSet::with_capacity(n);
        for x in ring.elements() {
            let orbit = power_orbit(ring, x);
            let nil = orbit.nilpotency_index(zero);
            nilpotency.push(nil.map(|m| m as u32));
            stable_power.push(orbit.stable_power());
            potent.set(x.index(), orbit.is_potent());
            // non-zero nilpotents are always zero-divisors
            let zd = x != zero && (nil.is_some() || is_zero_divisor(ring, x));
            is_zd.set(x.index(), zd);
        }
        let zero_divisors = ring.elements().filter(|x| is_zd.contains(x.index())).collect();
        Census {
            zero_divisors,
            is_zd,
            nilpotency,
            stable_power,
            potent,
        }
    }

    /// `Z*(R)` in index order.
    pub fn zero_divisors(&self) -> &[Elem] {
        &self.zero_divisors
    }

    pub fn is_zero_divisor(&self, x: Elem) -> bool {
        self.is_zd.contains(x.index())
    }

    pub fn nilpotency_index(&self, x: Elem) -> Option<usize> {
        self.nilpotency[x.index()].map(|m| m as usize)
    }

    pub fn is_nilpotent(&self, x: Elem) -> bool {
        self.nilpotency[x.index()].is_some()
    }

    pub fn stable_power(&self, x: Elem) -> Elem {
        self.stable_power[x.index()]
    }

    pub fn is_potent(&self, x: Elem) -> bool {
        self.potent.contains(x.index())
    }

    /// Non-zero nilpotent elements.
    pub fn nilpotents(&self) -> impl Iterator<Item = Elem> + '_ {
        self.zero_divisors.iter().copied().filter(|&x| self.is_nilpotent(x))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RingPredicates {
    pub is_reduced: bool,
    /// Every idempotent is central.
    pub is_abelian: bool,
    pub is_commutative: bool,
    pub is_integral_domain: bool,
    /// `x x* = 0` forces `x = 0`.
    pub has_proper_involution: bool,
    /// A central projection other than 0 and 1.
    pub has_nontrivial_central_projection: bool,
}

pub fn ring_predicates(sr: &StarRing) -> RingPredicates {
    let ring = sr.ring();
    let zero = ring.zero();
    let is_reduced = ring
        .nonzero()
        .all(|x| power_orbit(ring, x).nilpotency_index(zero).is_none());
    let idempotents: Vec<Elem> = ring.elements().filter(|&x| ring.mul(x, x) == x).collect();
    let is_abelian = idempotents.iter().all(|&e| ring.is_central(e));
    let is_commutative = ring.is_commutative();
    let is_integral_domain = is_commutative
        && ring.order() >= 2
        && ring.one().is_some()
        && ring.nonzero().all(|x| ring.nonzero().all(|y| ring.mul(x, y) != zero));
    let has_proper_involution = ring.nonzero().all(|x| ring.mul(x, sr.star(x)) != zero);
    let has_nontrivial_central_projection = idempotents
        .iter()
        .any(|&e| e != zero && Some(e) != ring.one() && sr.star(e) == e && ring.is_central(e));
    RingPredicates {
        is_reduced,
        is_abelian,
        is_commutative,
        is_integral_domain,
        has_proper_involution,
        has_nontrivial_central_projection,
    }
}
