//! Named structural checks run over families of *-rings.

mod checks;
mod families;

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{invariant_report, ExtendedNat, InvariantReport};
use crate::graph::{gamma_prime_with, gamma_star_with, ZdGraph};
use crate::ring::{ring_predicates, Census, Elem, RingPredicates, StarRing};

pub use families::{
    cayley_family, default_families, matrix_family, product_family, swap_family, zn_family, RingFamily,
};

/// Rings above this order are skipped unless the caller raises the bound.
pub const DEFAULT_MAX_ORDER: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CheckId {
    T01,
    T02,
    T03,
    T04,
    T05,
    T06,
    T07,
    T08,
    T09,
    T10,
    T11,
    T12,
    T13,
}

impl CheckId {
    pub const ALL: [CheckId; 13] = [
        CheckId::T01,
        CheckId::T02,
        CheckId::T03,
        CheckId::T04,
        CheckId::T05,
        CheckId::T06,
        CheckId::T07,
        CheckId::T08,
        CheckId::T09,
        CheckId::T10,
        CheckId::T11,
        CheckId::T12,
        CheckId::T13,
    ];

    pub fn code(self) -> &'static str {
        match self {
            CheckId::T01 => "T01",
            CheckId::T02 => "T02",
            CheckId::T03 => "T03",
            CheckId::T04 => "T04",
            CheckId::T05 => "T05",
            CheckId::T06 => "T06",
            CheckId::T07 => "T07",
            CheckId::T08 => "T08",
            CheckId::T09 => "T09",
            CheckId::T10 => "T10",
            CheckId::T11 => "T11",
            CheckId::T12 => "T12",
            CheckId::T13 => "T13",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            CheckId::T01 => "reduced rings: gamma-star and gamma-prime have the same edges",
            CheckId::T02 => "N(x) is contained in N(x^k); equal for potent x; everything for nilpotent x",
            CheckId::T03 => "non-zero nilpotents are universal and force connectivity",
            CheckId::T04 => "unital rings with identity involution: connected, diameter at most 2",
            CheckId::T05 => "M_n(Z_m) under transpose: connected, diameter at most 2, girth 3",
            CheckId::T06 => "girth is 3, 4 or infinite",
            CheckId::T07 => "M2(F) under transpose is the K2-join of the non-nilpotent part and K_|N|",
            CheckId::T08 => "universal vertices are nilpotents or projections orthogonal to other projections",
            CheckId::T09 => "R x R under swap is connected iff R is not an integral domain",
            CheckId::T10 => "abelian unital rings: complete iff Z2 x Z2 or every zero-divisor is nilpotent",
            CheckId::T11 => "abelian unital proper rings: star iff Z2 x D with D an integral domain",
            CheckId::T12 => "direct sums with componentwise involution: connected, diameter at most 4",
            CheckId::T13 => "rings with a non-trivial central projection: connected, diameter at most 4",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for CheckId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.code().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown check `{s}` (expected T01..T13)"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    /// Hypothesis not met, or no vertices.
    Vacuous,
    /// Ring above the order bound.
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Vacuous => "VACUOUS",
            Status::Skipped => "SKIPPED",
        })
    }
}

/// Evidence attached to a verdict. Elements are given by display name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Element { element: String },
    Pair { x: String, y: String },
    Neighborhood { vertex: String, neighbors: Vec<String> },
    Path { vertices: Vec<String> },
    Cycle { vertices: Vec<String> },
    Components { sizes: Vec<usize> },
    Invariants {
        connected: bool,
        diameter: Option<ExtendedNat>,
        girth: ExtendedNat,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCheckResult {
    pub id: CheckId,
    pub ring: String,
    pub status: Status,
    pub witness: Option<Witness>,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteBounds {
    pub max_order: usize,
}

impl Default for SuiteBounds {
    fn default() -> Self {
        SuiteBounds {
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

/// Lazily computed data shared by all checks on one ring.
pub(crate) struct RingContext<'a> {
    pub sr: &'a StarRing,
    pub census: Census,
    predicates: OnceCell<RingPredicates>,
    prime: OnceCell<ZdGraph>,
    star: OnceCell<ZdGraph>,
    prime_report: OnceCell<InvariantReport<Elem>>,
}

impl<'a> RingContext<'a> {
    pub fn new(sr: &'a StarRing) -> Self {
        RingContext {
            sr,
            census: Census::of(sr.ring()),
            predicates: OnceCell::new(),
            prime: OnceCell::new(),
            star: OnceCell::new(),
            prime_report: OnceCell::new(),
        }
    }

    pub fn predicates(&self) -> &RingPredicates {
        self.predicates.get_or_init(|| ring_predicates(self.sr))
    }

    pub fn prime(&self) -> &ZdGraph {
        self.prime.get_or_init(|| gamma_prime_with(self.sr, &self.census))
    }

    pub fn star(&self) -> &ZdGraph {
        self.star.get_or_init(|| gamma_star_with(self.sr, &self.census))
    }

    pub fn report(&self) -> &InvariantReport<Elem> {
        self.prime_report.get_or_init(|| invariant_report(self.prime().graph()))
    }

    pub fn name(&self, x: Elem) -> String {
        self.sr.ring().name(x)
    }
}

/// Runs one check on one ring.
pub fn run_check(id: CheckId, sr: &StarRing, bounds: &SuiteBounds) -> TheoremCheckResult {
    run_on_ring(&[id], sr, bounds).pop().expect("one result per check")
}

fn run_on_ring(ids: &[CheckId], sr: &StarRing, bounds: &SuiteBounds) -> Vec<TheoremCheckResult> {
    let ring = sr.describe();
    if sr.ring().order() > bounds.max_order {
        return ids
            .iter()
            .map(|&id| TheoremCheckResult {
                id,
                ring: ring.clone(),
                status: Status::Skipped,
                witness: None,
                detail: format!("order {} exceeds bound {}", sr.ring().order(), bounds.max_order),
            })
            .collect();
    }
    let ctx = RingContext::new(sr);
    ids.iter()
        .map(|&id| {
            let v = checks::evaluate(id, &ctx);
            TheoremCheckResult {
                id,
                ring: ring.clone(),
                status: v.status,
                witness: v.witness,
                detail: v.detail,
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub skipped: usize,
}

impl CheckSummary {
    /// Some run was attempted and every attempted run was vacuous.
    pub fn is_dead(&self) -> bool {
        self.pass == 0 && self.fail == 0 && self.vacuous > 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub results: Vec<TheoremCheckResult>,
    pub summary: Vec<(CheckId, CheckSummary)>,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &TheoremCheckResult> {
        self.results.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn dead_checks(&self) -> Vec<CheckId> {
        self.summary.iter().filter(|(_, s)| s.is_dead()).map(|(id, _)| *id).collect()
    }

    /// No FAIL verdicts and no check whose every run was vacuous.
    pub fn passed(&self) -> bool {
        self.failures().next().is_none() && self.dead_checks().is_empty()
    }

    pub fn summary_for(&self, id: CheckId) -> Option<&CheckSummary> {
        self.summary.iter().find(|(c, _)| *c == id).map(|(_, s)| s)
    }
}

/// Every requested check on every family member. Rings are processed in
/// parallel; results are ordered by check id, then by position in the
/// family list.
pub fn run_suite(families: &[RingFamily], ids: &[CheckId], bounds: &SuiteBounds) -> SuiteReport {
    let members: Vec<&StarRing> = families.iter().flat_map(|f| f.members.iter()).collect();
    let per_ring: Vec<Vec<TheoremCheckResult>> =
        members.par_iter().map(|sr| run_on_ring(ids, sr, bounds)).collect();
    let mut indexed: Vec<(usize, TheoremCheckResult)> = per_ring
        .into_iter()
        .enumerate()
        .flat_map(|(pos, rs)| rs.into_iter().map(move |r| (pos, r)))
        .collect();
    indexed.sort_by_key(|(pos, r)| (r.id, *pos));
    let results: Vec<TheoremCheckResult> = indexed.into_iter().map(|(_, r)| r).collect();

    let mut ids_sorted = ids.to_vec();
    ids_sorted.sort();
    ids_sorted.dedup();
    let summary = ids_sorted
        .into_iter()
        .map(|id| {
            let mut s = CheckSummary::default();
            for r in results.iter().filter(|r| r.id == id) {
                match r.status {
                    Status::Pass => s.pass += 1,
                    Status::Fail => s.fail += 1,
                    Status::Vacuous => s.vacuous += 1,
                    Status::Skipped => s.skipped += 1,
                }
            }
            (id, s)
        })
        .collect();
    SuiteReport { results, summary }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::ring::{build_product, build_zn, InvolutionKind};

    fn zn(n: usize) -> StarRing {
        StarRing::identity(Arc::new(build_zn(n))).unwrap()
    }

    fn square_swap(n: usize) -> StarRing {
        let z = Arc::new(build_zn(n));
        StarRing::with_kind(Arc::new(build_product(z.clone(), z)), InvolutionKind::Swap).unwrap()
    }

    #[test]
    fn check_ids_parse() {
        for id in CheckId::ALL {
            assert_eq!(id.code().parse::<CheckId>().unwrap(), id);
        }
        assert_eq!("t05".parse::<CheckId>().unwrap(), CheckId::T05);
        assert!("T14".parse::<CheckId>().is_err());
    }

    #[test]
    fn nilpotent_universality_on_z8() {
        let r = run_check(CheckId::T03, &zn(8), &SuiteBounds::default());
        assert_eq!(r.status, Status::Pass);
        assert_eq!(
            r.witness,
            Some(Witness::Neighborhood {
                vertex: "2".into(),
                neighbors: vec!["4".into(), "6".into()]
            })
        );
    }

    #[test]
    fn swap_products() {
        let r = run_check(CheckId::T09, &square_swap(3), &SuiteBounds::default());
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.witness, Some(Witness::Components { sizes: vec![2, 2] }));

        let r = run_check(CheckId::T09, &square_swap(4), &SuiteBounds::default());
        assert_eq!(r.status, Status::Pass);
        assert!(matches!(r.witness, Some(Witness::Path { .. })));
    }

    #[test]
    fn fields_are_vacuous() {
        for p in [2, 3, 5, 7] {
            for id in CheckId::ALL {
                let r = run_check(id, &zn(p), &SuiteBounds::default());
                assert_eq!(r.status, Status::Vacuous, "{id} on Z{p}");
            }
        }
    }

    #[test]
    fn oversize_rings_are_skipped() {
        let r = run_check(CheckId::T06, &zn(300), &SuiteBounds::default());
        assert_eq!(r.status, Status::Skipped);
        let r = run_check(CheckId::T06, &zn(300), &SuiteBounds { max_order: 300 });
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn suite_ordering_and_dead_checks() {
        let fam = RingFamily::new("small", vec![zn(9), zn(4), zn(7)]);
        let report = run_suite(&[fam], &[CheckId::T06, CheckId::T01], &SuiteBounds::default());
        let order: Vec<(CheckId, &str)> = report.results.iter().map(|r| (r.id, r.ring.as_str())).collect();
        assert_eq!(
            order,
            vec![
                (CheckId::T01, "Z9@id"),
                (CheckId::T01, "Z4@id"),
                (CheckId::T01, "Z7@id"),
                (CheckId::T06, "Z9@id"),
                (CheckId::T06, "Z4@id"),
                (CheckId::T06, "Z7@id"),
            ]
        );
        // none of these rings is reduced with zero-divisors
        assert_eq!(report.dead_checks(), vec![CheckId::T01]);
        assert!(!report.passed());
    }
}
