use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::{Elem, FiniteRing};

/// Largest ring order [`enumerate_involutions`] accepts by default.
pub const DEFAULT_INVOLUTION_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InvolutionError {
    #[error("map has {got} entries for a ring of order {order}")]
    WrongLength { got: usize, order: usize },
    #[error("map is not a permutation: {witness} is hit twice or out of range")]
    NotAPermutation { witness: usize },
    #[error("(x*)* != x at x = {x}")]
    NotInvolutive { x: Elem },
    #[error("(x+y)* != x*+y* at x = {x}, y = {y}")]
    NotAdditive { x: Elem, y: Elem },
    #[error("(xy)* != y*x* at x = {x}, y = {y}")]
    NotAntiMultiplicative { x: Elem, y: Elem },
    #[error("ring order {order} exceeds the involution search cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("{0}")]
    IncompatibleShape(String),
}

/// A validated involution: additive, anti-multiplicative, self-inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Involution {
    map: Vec<u32>,
}

impl Involution {
    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        Elem::new(self.map[x.index()] as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v as usize).collect()
    }

    pub(crate) fn from_map_unchecked(map: Vec<usize>) -> Self {
        Involution {
            map: map.into_iter().map(|v| v as u32).collect(),
        }
    }
}

fn check_permutation(ring: &FiniteRing, map: &[usize]) -> Result<(), InvolutionError> {
    let n = ring.order();
    if map.len() != n {
        return Err(InvolutionError::WrongLength { got: map.len(), order: n });
    }
    let mut seen = vec![false; n];
    for &v in map {
        if v >= n || seen[v] {
            return Err(InvolutionError::NotAPermutation { witness: v });
        }
        seen[v] = true;
    }
    Ok(())
}

fn check_pair(ring: &FiniteRing, map: &[usize], x: Elem, y: Elem) -> Result<(), InvolutionError> {
    let star = |e: Elem| Elem::new(map[e.index()]);
    if star(ring.add(x, y)) != ring.add(star(x), star(y)) {
        return Err(InvolutionError::NotAdditive { x, y });
    }
    if star(ring.mul(x, y)) != ring.mul(star(y), star(x)) {
        return Err(InvolutionError::NotAntiMultiplicative { x, y });
    }
    Ok(())
}

fn check_involutive(ring: &FiniteRing, map: &[usize]) -> Result<(), InvolutionError> {
    match ring.elements().find(|x| map[map[x.index()]] != x.index()) {
        Some(x) => Err(InvolutionError::NotInvolutive { x }),
        None => Ok(()),
    }
}

/// Checks all three involution axioms on every pair of elements. The first
/// failure is reported with its witness.
pub fn validate_involution(ring: &FiniteRing, map: &[usize]) -> Result<Involution, InvolutionError> {
    check_permutation(ring, map)?;
    check_involutive(ring, map)?;
    for x in ring.elements() {
        for y in ring.elements() {
            check_pair(ring, map, x, y)?;
        }
    }
    Ok(Involution::from_map_unchecked(map.to_vec()))
}

/// As [`validate_involution`] but with the pair laws checked on random
/// pairs only; involutivity and bijectivity are still checked in full.
pub fn validate_involution_sampled(
    ring: &FiniteRing,
    map: &[usize],
    samples: usize,
    seed: u64,
) -> Result<Involution, InvolutionError> {
    check_permutation(ring, map)?;
    check_involutive(ring, map)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = ring.order();
    for _ in 0..samples {
        let x = Elem::new(rng.gen_range(0..n));
        let y = Elem::new(rng.gen_range(0..n));
        check_pair(ring, map, x, y)?;
    }
    Ok(Involution::from_map_unchecked(map.to_vec()))
}

fn additive_order(ring: &FiniteRing, x: Elem) -> usize {
    let mut acc = x;
    let mut m = 1;
    while acc != ring.zero() {
        acc = ring.add(acc, x);
        m += 1;
    }
    m
}

/// Greedy additive generating set: each generator is the smallest element
/// outside the subgroup generated so far.
fn additive_generators(ring: &FiniteRing) -> Vec<Elem> {
    let mut inside = vec![false; ring.order()];
    inside[ring.zero().index()] = true;
    let mut members = vec![ring.zero()];
    let mut gens = Vec::new();
    for g in ring.elements() {
        if inside[g.index()] {
            continue;
        }
        gens.push(g);
        let mut frontier = members.clone();
        while let Some(m) = frontier.pop() {
            let next = ring.add(m, g);
            if !inside[next.index()] {
                inside[next.index()] = true;
                members.push(next);
                frontier.push(next);
            }
        }
    }
    gens
}

struct Search<'a> {
    ring: &'a FiniteRing,
    gens: Vec<(Elem, usize)>,
    candidates: Vec<Vec<Elem>>,
    found: Vec<Involution>,
}

impl Search<'_> {
    fn run(&mut self, depth: usize, map: &mut Vec<Option<Elem>>, domain: &mut Vec<Elem>) {
        if depth == self.gens.len() {
            let full: Vec<usize> = map.iter().map(|v| v.expect("generators span the group").index()).collect();
            if let Ok(inv) = validate_involution(self.ring, &full) {
                self.found.push(inv);
            }
            return;
        }
        let (g, _) = self.gens[depth];
        for h in self.candidates[depth].clone() {
            let mark = domain.len();
            let mut assigned = Vec::new();
            if self.extend(g, h, map, domain, &mut assigned) {
                self.run(depth + 1, map, domain);
            }
            for x in assigned {
                map[x.index()] = None;
            }
            domain.truncate(mark);
        }
    }

    /// Extends the additive map from subgroup `domain` to `domain + <g>`
    /// with `g -> h`. Returns false on any additivity, injectivity or
    /// involutivity conflict.
    fn extend(
        &self,
        g: Elem,
        h: Elem,
        map: &mut [Option<Elem>],
        domain: &mut Vec<Elem>,
        assigned: &mut Vec<Elem>,
    ) -> bool {
        let ring = self.ring;
        let base: Vec<Elem> = domain.clone();
        let (mut tg, mut th) = (g, h);
        while tg != ring.zero() {
            for &d in &base {
                let x = ring.add(d, tg);
                let image = ring.add(map[d.index()].expect("domain is mapped"), th);
                match map[x.index()] {
                    Some(existing) if existing != image => return false,
                    Some(_) => {}
                    None => {
                        map[x.index()] = Some(image);
                        assigned.push(x);
                        domain.push(x);
                    }
                }
            }
            tg = ring.add(tg, g);
            th = ring.add(th, h);
        }
        let mut hit = vec![false; ring.order()];
        for &x in domain.iter() {
            let y = map[x.index()].expect("domain is mapped");
            if std::mem::replace(&mut hit[y.index()], true) {
                return false;
            }
            if map[y.index()].is_some_and(|back| back != x) {
                return false;
            }
        }
        true
    }
}

/// All involutions of `ring`, by backtracking over images of an additive
/// generating set. Each generator may only go to an element of the same
/// additive order, and additivity fixes the map on the generated subgroup.
pub fn enumerate_involutions(ring: &FiniteRing, order_cap: usize) -> Result<Vec<Involution>, InvolutionError> {
    if ring.order() > order_cap {
        return Err(InvolutionError::OrderCapExceeded {
            order: ring.order(),
            cap: order_cap,
        });
    }
    let orders: Vec<usize> = ring.elements().map(|x| additive_order(ring, x)).collect();
    let gens: Vec<(Elem, usize)> = additive_generators(ring)
        .into_iter()
        .map(|g| (g, orders[g.index()]))
        .collect();
    let candidates = gens
        .iter()
        .map(|&(_, m)| ring.elements().filter(|h| orders[h.index()] == m).collect())
        .collect();
    let mut search = Search {
        ring,
        gens,
        candidates,
        found: Vec::new(),
    };
    let mut map = vec![None; ring.order()];
    map[ring.zero().index()] = Some(ring.zero());
    let mut domain = vec![ring.zero()];
    search.run(0, &mut map, &mut domain);
    Ok(search.found)
}
