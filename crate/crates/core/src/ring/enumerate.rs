//! Enumeration of all finite rings (associative, not necessarily unital) of
//! a given small order, up to isomorphism.
//!
//! The additive group is a product of cyclic groups of prime-power order
//! with generators `e_i`. A multiplication is fixed by the products
//! `e_i e_j`, and each of those must be killed by `gcd(|e_i|, |e_j|)` for
//! the bilinear extension to be well defined. Associativity only has to be
//! checked on generator triples. Isomorphism classes are separated by
//! taking the lexicographically least multiplication table over all
//! additive automorphisms.

use std::collections::BTreeSet;

use super::{unchecked_from_tables, FiniteRing};

/// Cyclic factor orders (prime powers) of every abelian group of order `n`.
pub fn abelian_group_types(n: usize) -> Vec<Vec<usize>> {
    assert!(n >= 1);
    let mut per_prime: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut rest = n;
    let mut p = 2;
    while rest > 1 {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            let options = partitions(e)
                .into_iter()
                .map(|parts| parts.into_iter().map(|k| p.pow(k as u32)).collect())
                .collect();
            per_prime.push(options);
        }
        p += 1;
    }
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for options in per_prime {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |opt: &Vec<usize>| {
                    let mut v = prefix.clone();
                    v.extend(opt);
                    v
                })
            })
            .collect();
    }
    out
}

/// Partitions of `e` into non-increasing parts.
fn partitions(e: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(e, e, &mut Vec::new(), &mut out);
    out
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Mixed-radix arithmetic on `Z_{f_0} x ... x Z_{f_{k-1}}`, first factor
/// most significant.
struct Group {
    factors: Vec<usize>,
    order: usize,
}

impl Group {
    fn new(factors: Vec<usize>) -> Self {
        let order = factors.iter().product();
        Group { factors, order }
    }

    fn rank(&self) -> usize {
        self.factors.len()
    }

    fn digits(&self, x: usize) -> Vec<usize> {
        let mut out = vec![0; self.rank()];
        let mut rest = x;
        for (slot, &f) in out.iter_mut().zip(&self.factors).rev() {
            *slot = rest % f;
            rest /= f;
        }
        out
    }

    fn compose(&self, digits: &[usize]) -> usize {
        digits
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&d, &f)| acc * f + d % f)
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.digits(a), self.digits(b));
        let sum: Vec<usize> = x.iter().zip(&y).map(|(p, q)| p + q).collect();
        self.compose(&sum)
    }

    fn scale(&self, m: usize, a: usize) -> usize {
        let x: Vec<usize> = self.digits(a).iter().map(|d| d * m).collect();
        self.compose(&x)
    }

    /// `sum_l coeffs_l * images_l`.
    fn combine(&self, coeffs: &[usize], images: &[usize]) -> usize {
        coeffs
            .iter()
            .zip(images)
            .fold(0, |acc, (&c, &h)| self.add(acc, self.scale(c, h)))
    }

    /// Additive automorphisms, as permutations of element indices.
    fn automorphisms(&self) -> Vec<Vec<usize>> {
        let k = self.rank();
        let choices: Vec<Vec<usize>> = self
            .factors
            .iter()
            .map(|&f| (0..self.order).filter(|&h| self.scale(f, h) == 0).collect())
            .collect();
        let mut out = Vec::new();
        let mut images = vec![0; k];
        self.collect_automorphisms(0, &choices, &mut images, &mut out);
        out
    }

    fn collect_automorphisms(&self, i: usize, choices: &[Vec<usize>], images: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == images.len() {
            let map: Vec<usize> = (0..self.order).map(|x| self.combine(&self.digits(x), images)).collect();
            let mut seen = vec![false; self.order];
            if map.iter().all(|&y| !std::mem::replace(&mut seen[y], true)) {
                out.push(map);
            }
            return;
        }
        for &h in &choices[i] {
            images[i] = h;
            self.collect_automorphisms(i + 1, choices, images, out);
        }
    }
}

struct Structures<'a> {
    group: &'a Group,
    /// Allowed values for each structure constant `e_i e_j`, row-major.
    choices: Vec<Vec<usize>>,
    found: Vec<Vec<usize>>,
}

impl Structures<'_> {
    /// `(sum_l x_l e_l) * e_j` given the assigned constants, if determined.
    fn times_generator(&self, consts: &[Option<usize>], x: usize, j: usize) -> Option<usize> {
        let k = self.group.rank();
        let mut acc = 0;
        for (l, d) in self.group.digits(x).into_iter().enumerate() {
            if d != 0 {
                acc = self.group.add(acc, self.group.scale(d, consts[l * k + j]?));
            }
        }
        Some(acc)
    }

    fn generator_times(&self, consts: &[Option<usize>], i: usize, x: usize) -> Option<usize> {
        let k = self.group.rank();
        let mut acc = 0;
        for (l, d) in self.group.digits(x).into_iter().enumerate() {
            if d != 0 {
                acc = self.group.add(acc, self.group.scale(d, consts[i * k + l]?));
            }
        }
        Some(acc)
    }

    /// False if some fully determined generator triple fails associativity.
    fn associative_so_far(&self, consts: &[Option<usize>]) -> bool {
        let k = self.group.rank();
        for a in 0..k {
            for b in 0..k {
                let Some(ab) = consts[a * k + b] else { continue };
                for c in 0..k {
                    let Some(bc) = consts[b * k + c] else { continue };
                    let lhs = self.times_generator(consts, ab, c);
                    let rhs = self.generator_times(consts, a, bc);
                    if let (Some(l), Some(r)) = (lhs, rhs) {
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn search(&mut self, slot: usize, consts: &mut Vec<Option<usize>>) {
        if slot == consts.len() {
            self.found.push(consts.iter().map(|c| c.expect("all slots assigned")).collect());
            return;
        }
        for v in self.choices[slot].clone() {
            consts[slot] = Some(v);
            if self.associative_so_far(consts) {
                self.search(slot + 1, consts);
            }
        }
        consts[slot] = None;
    }
}

fn multiplication_table(group: &Group, consts: &[usize]) -> Vec<usize> {
    let k = group.rank();
    let n = group.order;
    let mut table = vec![0; n * n];
    for x in 0..n {
        let dx = group.digits(x);
        for y in 0..n {
            let dy = group.digits(y);
            let mut acc = 0;
            for i in 0..k {
                for j in 0..k {
                    let m = dx[i] * dy[j];
                    if m != 0 {
                        acc = group.add(acc, group.scale(m, consts[i * k + j]));
                    }
                }
            }
            table[x * n + y] = acc;
        }
    }
    table
}

fn canonical(table: &[usize], n: usize, automorphisms: &[Vec<usize>]) -> Vec<u8> {
    automorphisms
        .iter()
        .map(|phi| {
            let mut t = vec![0u8; n * n];
            for a in 0..n {
                for b in 0..n {
                    t[phi[a] * n + phi[b]] = phi[table[a * n + b]] as u8;
                }
            }
            t
        })
        .min()
        .expect("identity is an automorphism")
}

/// One representative multiplication table per isomorphism class of rings
/// on the additive group with the given cyclic factors.
fn rings_on_group(factors: Vec<usize>) -> (Group, Vec<Vec<u8>>) {
    let group = Group::new(factors);
    let k = group.rank();
    let mut choices = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            let g = gcd(group.factors[i], group.factors[j]);
            choices.push((0..group.order).filter(|&c| group.scale(g, c) == 0).collect());
        }
    }
    let mut search = Structures {
        group: &group,
        choices,
        found: Vec::new(),
    };
    search.search(0, &mut vec![None; k * k]);
    let automorphisms = group.automorphisms();
    let classes: BTreeSet<Vec<u8>> = search
        .found
        .iter()
        .map(|consts| canonical(&multiplication_table(&group, consts), group.order, &automorphisms))
        .collect();
    (group, classes.into_iter().collect())
}

/// All rings of order `n` up to isomorphism, as table-backed rings labeled
/// `T{n}.{i}`. Intended for `n <= 16` or so; the search is exponential in
/// the rank of the additive group.
pub fn rings_of_order(n: usize) -> Vec<FiniteRing> {
    assert!(n <= 255, "element indices are stored as bytes during canonicalization");
    let mut out = Vec::new();
    for factors in abelian_group_types(n) {
        let (group, tables) = rings_on_group(factors);
        let add: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| group.add(a, b)).collect()).collect();
        for table in tables {
            let mul: Vec<Vec<usize>> = table.chunks(n).map(|row| row.iter().map(|&v| v as usize).collect()).collect();
            let label = format!("T{n}.{}", out.len() + 1);
            out.push(unchecked_from_tables(&add, &mul, &label).expect("enumerated tables are well formed"));
        }
    }
    out
}

/// Every ring of order at most `max_order`, smallest first.
pub fn rings_up_to(max_order: usize) -> Vec<FiniteRing> {
    (1..=max_order).flat_map(rings_of_order).collect()
}

#[cfg(test)]
mod tests {
    use super::super::validate_ring_exhaustive;
    use super::*;

    #[test]
    fn group_types() {
        assert_eq!(abelian_group_types(1), vec![Vec::<usize>::new()]);
        assert_eq!(abelian_group_types(8), vec![vec![8], vec![4, 2], vec![2, 2, 2]]);
        assert_eq!(abelian_group_types(12), vec![vec![4, 3], vec![2, 2, 3]]);
        assert_eq!(abelian_group_types(7), vec![vec![7]]);
    }

    #[test]
    fn automorphism_counts() {
        // |Aut(Z8)| = 4, |Aut(Z4 x Z2)| = 8, |GL(3,2)| = 168
        assert_eq!(Group::new(vec![8]).automorphisms().len(), 4);
        assert_eq!(Group::new(vec![4, 2]).automorphisms().len(), 8);
        assert_eq!(Group::new(vec![2, 2, 2]).automorphisms().len(), 168);
    }

    #[test]
    fn known_ring_counts() {
        // number of rings of order n up to isomorphism, n = 1..8
        let expected = [1, 2, 2, 11, 2, 4, 2, 52];
        for (n, &count) in (1..=8).zip(&expected) {
            assert_eq!(rings_of_order(n).len(), count, "order {n}");
        }
    }

    #[test]
    fn enumerated_rings_satisfy_the_axioms() {
        for ring in rings_up_to(8) {
            assert!(validate_ring_exhaustive(&ring).is_empty(), "{}", ring.describe());
        }
    }

    #[test]
    fn unital_rings_of_order_four() {
        // Z4, Z2xZ2, F4, Z2[x]/(x^2)
        let unital = rings_of_order(4).into_iter().filter(|r| r.one().is_some()).count();
        assert_eq!(unital, 4);
    }
}
