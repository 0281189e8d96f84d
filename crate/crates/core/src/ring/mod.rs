//! Finite rings on indexed elements.
//!
//! Every ring element is an index in `[0, order)`. Small rings carry explicit
//! Cayley tables; larger structured rings (matrix rings mostly) compute their
//! arithmetic on demand from the [`Shape`] they were built from.

mod axioms;
mod classify;
pub mod enumerate;
mod involution;
mod star;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use axioms::{
    validate_ring, validate_ring_exhaustive, validate_ring_sampled, AdditiveLaw, AxiomViolation,
    Side,
};
pub use classify::{
    classify_element, left_annihilator, power_orbit, right_annihilator, ring_predicates, Census,
    ElementProfile, PowerOrbit, RingPredicates,
};
pub use involution::{
    enumerate_involutions, validate_involution, validate_involution_sampled, Involution,
    InvolutionError, DEFAULT_INVOLUTION_CAP,
};
pub use star::{InvolutionKind, StarRing};

/// Rings up to this order are backed by explicit Cayley tables.
pub const TABLE_LIMIT: usize = 256;

/// Default resource bound for matrix ring construction.
pub const DEFAULT_ORDER_CAP: usize = 1_000_000;

/// An element of a finite ring, identified by its index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(u32);

impl Elem {
    #[inline]
    pub fn new(index: usize) -> Self {
        Elem(u32::try_from(index).expect("element index exceeds u32"))
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// How a ring was built. Drives on-demand arithmetic, element names and
/// canonical descriptions.
#[derive(Clone, Debug)]
pub enum Shape {
    /// `Z_n`.
    Modular(usize),
    /// Componentwise product; element `(a, b)` has index `a * |right| + b`.
    Product(Arc<FiniteRing>, Arc<FiniteRing>),
    /// `size x size` matrices, entries row-major with the (0,0) entry as the
    /// most significant base-`|base|` digit.
    Matrix { size: usize, base: Arc<FiniteRing> },
    /// Explicit Cayley tables with no further structure.
    Table { label: String },
}

#[derive(Clone, Debug)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

#[derive(Debug, Error)]
pub enum RingError {
    #[error("malformed tables: {0}")]
    TableShape(String),
    #[error("ring axioms violated: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Axioms(Vec<AxiomViolation>),
    #[error("matrix ring M{size} over order {base_order} exceeds the order cap {cap}")]
    OrderCapExceeded {
        size: usize,
        base_order: usize,
        cap: usize,
    },
    #[error("matrix rings need a base ring with identity")]
    BaseWithoutIdentity,
    #[error("invalid size {0}: must be at least 1")]
    InvalidSize(usize),
}

/// A finite ring with distinguished zero and optional identity.
#[derive(Clone, Debug)]
pub struct FiniteRing {
    order: usize,
    zero: Elem,
    one: Option<Elem>,
    shape: Shape,
    tables: Option<Tables>,
}

impl FiniteRing {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Option<Elem> {
        self.one
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order).map(Elem::new)
    }

    /// Non-zero elements in index order.
    pub fn nonzero(&self) -> impl Iterator<Item = Elem> + '_ {
        let zero = self.zero;
        self.elements().filter(move |&x| x != zero)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.tables {
            Some(t) => Elem(t.add[a.index() * self.order + b.index()]),
            None => self.shape_add(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.tables {
            Some(t) => Elem(t.mul[a.index() * self.order + b.index()]),
            None => self.shape_mul(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        match &self.tables {
            Some(t) => Elem(t.neg[a.index()]),
            None => self.shape_neg(a),
        }
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// `x^n` for `n >= 1`.
    pub fn pow(&self, x: Elem, n: u64) -> Elem {
        assert!(n >= 1, "pow needs a positive exponent");
        let mut acc: Option<Elem> = None;
        let mut base = x;
        let mut n = n;
        loop {
            if n & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => self.mul(a, base),
                    None => base,
                });
            }
            n >>= 1;
            if n == 0 {
                break;
            }
            base = self.mul(base, base);
        }
        acc.expect("n >= 1")
    }

    /// `m * x` (repeated addition).
    pub fn scale(&self, m: usize, x: Elem) -> Elem {
        let mut acc = self.zero;
        for _ in 0..m {
            acc = self.add(acc, x);
        }
        acc
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Whether `x` commutes with every element.
    pub fn is_central(&self, x: Elem) -> bool {
        self.elements().all(|y| self.mul(x, y) == self.mul(y, x))
    }

    /// Human-readable element name: integers for `Z_n`, tuples for products,
    /// row-major bracketed matrices for matrix rings.
    pub fn name(&self, x: Elem) -> String {
        match &self.shape {
            Shape::Modular(_) | Shape::Table { .. } => x.index().to_string(),
            Shape::Product(l, r) => {
                let (a, b) = self.split(x);
                format!("({},{})", l.name(a), r.name(b))
            }
            Shape::Matrix { size, base } => {
                let entries = self.entries(x);
                let rows: Vec<String> = entries
                    .chunks(*size)
                    .map(|row| {
                        let cells: Vec<String> = row.iter().map(|&e| base.name(e)).collect();
                        format!("[{}]", cells.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            }
        }
    }

    /// Canonical ring description, e.g. `Z3xZ3` or `M2(Z2)`.
    pub fn describe(&self) -> String {
        match &self.shape {
            Shape::Modular(n) => format!("Z{n}"),
            Shape::Product(l, r) => format!("{}x{}", l.describe(), r.describe()),
            Shape::Matrix { size, base } => format!("M{size}({})", base.describe()),
            Shape::Table { label } => label.clone(),
        }
    }

    /// Index of `(a, b)` in a product ring.
    pub fn pair(&self, a: Elem, b: Elem) -> Elem {
        match &self.shape {
            Shape::Product(_, r) => Elem::new(a.index() * r.order + b.index()),
            _ => panic!("pair() on a ring that is not a product"),
        }
    }

    /// Components of a product-ring element.
    pub fn split(&self, x: Elem) -> (Elem, Elem) {
        match &self.shape {
            Shape::Product(_, r) => (Elem::new(x.index() / r.order), Elem::new(x.index() % r.order)),
            _ => panic!("split() on a ring that is not a product"),
        }
    }

    /// Row-major entries of a matrix-ring element.
    pub fn entries(&self, x: Elem) -> Vec<Elem> {
        match &self.shape {
            Shape::Matrix { size, base } => {
                let q = base.order;
                let cells = size * size;
                let mut out = vec![Elem(0); cells];
                let mut rest = x.index();
                for slot in out.iter_mut().rev() {
                    *slot = Elem::new(rest % q);
                    rest /= q;
                }
                out
            }
            _ => panic!("entries() on a ring that is not a matrix ring"),
        }
    }

    /// Matrix-ring element with the given row-major entries.
    pub fn from_entries(&self, entries: &[Elem]) -> Elem {
        match &self.shape {
            Shape::Matrix { size, base } => {
                assert_eq!(entries.len(), size * size);
                let q = base.order;
                Elem::new(entries.iter().fold(0usize, |acc, e| acc * q + e.index()))
            }
            _ => panic!("from_entries() on a ring that is not a matrix ring"),
        }
    }

    fn shape_add(&self, a: Elem, b: Elem) -> Elem {
        match &self.shape {
            Shape::Modular(n) => Elem::new((a.index() + b.index()) % n),
            Shape::Product(l, r) => {
                let (a1, a2) = self.split(a);
                let (b1, b2) = self.split(b);
                self.pair(l.add(a1, b1), r.add(a2, b2))
            }
            Shape::Matrix { base, .. } => {
                let x = self.entries(a);
                let y = self.entries(b);
                let sum: Vec<Elem> = x.iter().zip(&y).map(|(&p, &q)| base.add(p, q)).collect();
                self.from_entries(&sum)
            }
            Shape::Table { .. } => unreachable!("table rings always carry tables"),
        }
    }

    fn shape_mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.shape {
            Shape::Modular(n) => Elem::new(((a.index() as u64 * b.index() as u64) % *n as u64) as usize),
            Shape::Product(l, r) => {
                let (a1, a2) = self.split(a);
                let (b1, b2) = self.split(b);
                self.pair(l.mul(a1, b1), r.mul(a2, b2))
            }
            Shape::Matrix { size, base } => {
                let k = *size;
                let x = self.entries(a);
                let y = self.entries(b);
                let mut out = Vec::with_capacity(k * k);
                for i in 0..k {
                    for j in 0..k {
                        let mut acc = base.zero;
                        for t in 0..k {
                            acc = base.add(acc, base.mul(x[i * k + t], y[t * k + j]));
                        }
                        out.push(acc);
                    }
                }
                self.from_entries(&out)
            }
            Shape::Table { .. } => unreachable!("table rings always carry tables"),
        }
    }

    fn shape_neg(&self, a: Elem) -> Elem {
        match &self.shape {
            Shape::Modular(n) => Elem::new((n - a.index()) % n),
            Shape::Product(l, r) => {
                let (a1, a2) = self.split(a);
                self.pair(l.neg(a1), r.neg(a2))
            }
            Shape::Matrix { base, .. } => {
                let x: Vec<Elem> = self.entries(a).into_iter().map(|e| base.neg(e)).collect();
                self.from_entries(&x)
            }
            Shape::Table { .. } => unreachable!("table rings always carry tables"),
        }
    }

    fn from_shape(order: usize, zero: Elem, one: Option<Elem>, shape: Shape) -> Self {
        let mut ring = FiniteRing {
            order,
            zero,
            one,
            shape,
            tables: None,
        };
        if order <= TABLE_LIMIT {
            ring.tables = Some(ring.materialize());
        }
        ring
    }

    fn materialize(&self) -> Tables {
        let n = self.order;
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in self.elements() {
            for b in self.elements() {
                add.push(self.shape_add(a, b).0);
                mul.push(self.shape_mul(a, b).0);
            }
        }
        let neg = self.elements().map(|a| self.shape_neg(a).0).collect();
        Tables { add, mul, neg }
    }

    /// Additive and multiplicative Cayley tables as row-major index vectors.
    pub fn cayley_tables(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let rows = |f: &dyn Fn(Elem, Elem) -> Elem| -> Vec<Vec<usize>> {
            self.elements()
                .map(|a| self.elements().map(|b| f(a, b).index()).collect())
                .collect()
        };
        (rows(&|a, b| self.add(a, b)), rows(&|a, b| self.mul(a, b)))
    }
}

/// `Z_n` with modular arithmetic. `Z_1` is the zero ring where `zero == one`.
pub fn build_zn(n: usize) -> FiniteRing {
    assert!(n >= 1, "Z_n needs n >= 1");
    let one = if n > 1 { Elem(1) } else { Elem(0) };
    FiniteRing::from_shape(n, Elem(0), Some(one), Shape::Modular(n))
}

/// Componentwise product of two finite rings.
pub fn build_product(left: Arc<FiniteRing>, right: Arc<FiniteRing>) -> FiniteRing {
    let order = left.order * right.order;
    let zero = Elem::new(left.zero.index() * right.order + right.zero.index());
    let one = match (left.one, right.one) {
        (Some(a), Some(b)) => Some(Elem::new(a.index() * right.order + b.index())),
        _ => None,
    };
    FiniteRing::from_shape(order, zero, one, Shape::Product(left, right))
}

/// `k x k` matrices over `base`, rejected when `k * |base|^(k^2)` exceeds `cap`.
pub fn build_matrix_ring(
    size: usize,
    base: Arc<FiniteRing>,
    cap: usize,
) -> Result<FiniteRing, RingError> {
    if size == 0 {
        return Err(RingError::InvalidSize(size));
    }
    let base_one = base.one.ok_or(RingError::BaseWithoutIdentity)?;
    let too_big = RingError::OrderCapExceeded {
        size,
        base_order: base.order,
        cap,
    };
    let cells = u32::try_from(size * size).map_err(|_| RingError::InvalidSize(size))?;
    let order = base
        .order
        .checked_pow(cells)
        .filter(|o| o.checked_mul(size).is_some_and(|cost| cost <= cap));
    let Some(order) = order else {
        return Err(too_big);
    };
    let digits = |entries: &dyn Fn(usize, usize) -> Elem| -> Elem {
        let mut idx = 0usize;
        for i in 0..size {
            for j in 0..size {
                idx = idx * base.order + entries(i, j).index();
            }
        }
        Elem::new(idx)
    };
    let zero = digits(&|_, _| base.zero);
    let one = digits(&|i, j| if i == j { base_one } else { base.zero });
    Ok(FiniteRing::from_shape(
        order,
        zero,
        Some(one),
        Shape::Matrix { size, base },
    ))
}

/// Ring from explicit Cayley tables, validated exhaustively.
pub fn build_from_tables(
    add: &[Vec<usize>],
    mul: &[Vec<usize>],
) -> Result<FiniteRing, RingError> {
    build_from_tables_labeled(add, mul, "table")
}

/// As [`build_from_tables`], with a description label for the ring.
pub fn build_from_tables_labeled(
    add: &[Vec<usize>],
    mul: &[Vec<usize>],
    label: &str,
) -> Result<FiniteRing, RingError> {
    let ring = unchecked_from_tables(add, mul, label)?;
    let violations = validate_ring_exhaustive(&ring);
    if violations.is_empty() {
        Ok(ring)
    } else {
        Err(RingError::Axioms(violations))
    }
}

/// Builds table rings that are known to satisfy the axioms (used by the
/// ring enumerator). Only the table shape is checked.
pub(crate) fn unchecked_from_tables(
    add: &[Vec<usize>],
    mul: &[Vec<usize>],
    label: &str,
) -> Result<FiniteRing, RingError> {
    let n = add.len();
    if n == 0 {
        return Err(RingError::TableShape("empty tables".into()));
    }
    if mul.len() != n {
        return Err(RingError::TableShape(format!(
            "addition table has {n} rows, multiplication table has {}",
            mul.len()
        )));
    }
    for (name, table) in [("addition", add), ("multiplication", mul)] {
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(RingError::TableShape(format!(
                    "{name} row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(RingError::TableShape(format!(
                    "{name} row {i} has entry {bad} outside [0, {n})"
                )));
            }
        }
    }
    let flat = |t: &[Vec<usize>]| -> Vec<u32> { t.iter().flatten().map(|&v| v as u32).collect() };
    let add_flat = flat(add);
    let mul_flat = flat(mul);

    let zero = (0..n).find(|&z| (0..n).all(|x| add[z][x] == x && add[x][z] == x));
    let Some(zero) = zero else {
        return Err(RingError::Axioms(vec![AxiomViolation::NonAbelianAddition {
            law: AdditiveLaw::Identity,
            witness: vec![],
        }]));
    };
    let mut neg = Vec::with_capacity(n);
    let mut missing_inverse = None;
    for x in 0..n {
        match (0..n).find(|&y| add[x][y] == zero) {
            Some(y) => neg.push(y as u32),
            None => {
                missing_inverse.get_or_insert(x);
                neg.push(zero as u32);
            }
        }
    }
    if let Some(x) = missing_inverse {
        return Err(RingError::Axioms(vec![AxiomViolation::NonAbelianAddition {
            law: AdditiveLaw::Inverse,
            witness: vec![Elem::new(x)],
        }]));
    }
    let one = (0..n).find(|&u| (0..n).all(|x| mul[u][x] == x && mul[x][u] == x));
    Ok(FiniteRing {
        order: n,
        zero: Elem::new(zero),
        one: one.map(Elem::new),
        shape: Shape::Table {
            label: label.to_string(),
        },
        tables: Some(Tables {
            add: add_flat,
            mul: mul_flat,
            neg,
        }),
    })
}
