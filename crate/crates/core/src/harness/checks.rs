use std::collections::HashSet;

use super::{CheckId, RingContext, Status, Witness};
use crate::analysis::{components, distances_from, shape_tests, shortest_cycle, shortest_path, universal_vertices};
use crate::graph::{m2_field_decomposition, Graph};
use crate::ring::{Census, Elem, FiniteRing, InvolutionKind, Shape};

pub(crate) struct Verdict {
    pub status: Status,
    pub witness: Option<Witness>,
    pub detail: String,
}

fn pass(witness: Option<Witness>, detail: impl Into<String>) -> Verdict {
    Verdict {
        status: Status::Pass,
        witness,
        detail: detail.into(),
    }
}

fn fail(witness: Witness, detail: impl Into<String>) -> Verdict {
    Verdict {
        status: Status::Fail,
        witness: Some(witness),
        detail: detail.into(),
    }
}

fn vacuous(detail: impl Into<String>) -> Verdict {
    Verdict {
        status: Status::Vacuous,
        witness: None,
        detail: detail.into(),
    }
}

pub(crate) fn evaluate(id: CheckId, ctx: &RingContext<'_>) -> Verdict {
    if ctx.census.zero_divisors().is_empty() {
        return vacuous("no zero-divisors");
    }
    match id {
        CheckId::T01 => reduced_equality(ctx),
        CheckId::T02 => neighborhood_containment(ctx),
        CheckId::T03 => nilpotent_universality(ctx),
        CheckId::T04 => identity_involution_diameter(ctx),
        CheckId::T05 => matrix_ring(ctx),
        CheckId::T06 => girth_trichotomy(ctx),
        CheckId::T07 => m2_join(ctx),
        CheckId::T08 => universal_vertex_structure(ctx),
        CheckId::T09 => product_swap(ctx),
        CheckId::T10 => completeness(ctx),
        CheckId::T11 => star(ctx),
        CheckId::T12 => direct_sum_connectivity(ctx),
        CheckId::T13 => central_projection_connectivity(ctx),
    }
}

fn pair(ctx: &RingContext<'_>, x: Elem, y: Elem) -> Witness {
    Witness::Pair {
        x: ctx.name(x),
        y: ctx.name(y),
    }
}

fn names(ctx: &RingContext<'_>, g: &Graph<Elem>, positions: &[usize]) -> Vec<String> {
    positions.iter().map(|&v| ctx.name(*g.label(v))).collect()
}

fn invariants_witness(ctx: &RingContext<'_>) -> Witness {
    let r = ctx.report();
    Witness::Invariants {
        connected: r.is_connected,
        diameter: r.diameter,
        girth: r.girth,
    }
}

/// A pair in different components, or a shortest path longer than `bound`.
fn distance_violation(ctx: &RingContext<'_>, bound: u64) -> Option<Witness> {
    let g = ctx.prime().graph();
    for s in 0..g.vertex_count() {
        for (t, d) in distances_from(g, s).into_iter().enumerate() {
            match d {
                None => return Some(pair(ctx, *g.label(s), *g.label(t))),
                Some(d) if d > bound => {
                    let path = shortest_path(g, s, t).expect("reachable");
                    return Some(Witness::Path {
                        vertices: names(ctx, g, &path),
                    });
                }
                Some(_) => {}
            }
        }
    }
    None
}

fn connected_within(ctx: &RingContext<'_>, bound: u64) -> Verdict {
    match distance_violation(ctx, bound) {
        None => pass(
            Some(invariants_witness(ctx)),
            format!("diameter {}", ctx.report().diameter.expect("non-empty")),
        ),
        Some(w @ Witness::Pair { .. }) => fail(w, "vertices in different components"),
        Some(w) => fail(w, format!("shortest path longer than {bound}")),
    }
}

fn reduced_equality(ctx: &RingContext<'_>) -> Verdict {
    if !ctx.predicates().is_reduced {
        return vacuous("ring has non-zero nilpotents");
    }
    let (s, p) = (ctx.star().graph(), ctx.prime().graph());
    for (i, j) in p.edges().chain(s.edges()) {
        if s.has_edge(i, j) != p.has_edge(i, j) {
            return fail(pair(ctx, *p.label(i), *p.label(j)), "edge present in only one graph");
        }
    }
    pass(None, format!("{} shared edges", p.edge_count()))
}

fn neighborhood_containment(ctx: &RingContext<'_>) -> Verdict {
    let ring = ctx.sr.ring();
    let g = ctx.prime().graph();
    let n = g.vertex_count();
    let mut checked = 0;
    for v in 0..n {
        let x = *g.label(v);
        if ctx.census.is_nilpotent(x) {
            checked += 1;
            if let Some(y) = (0..n).find(|&w| w != v && !g.has_edge(v, w)) {
                return fail(pair(ctx, x, *g.label(y)), "nilpotent vertex misses a neighbor");
            }
        }
        for k in 2..=5u64 {
            let xk = ring.pow(x, k);
            let Some(u) = g.position(&xk).filter(|&u| u != v) else {
                continue;
            };
            checked += 1;
            // x^k is itself a neighbor of x but never of itself
            if let Some(y) = g.neighbors(v).find(|&y| y != u && !g.has_edge(u, y)) {
                return fail(pair(ctx, x, *g.label(y)), format!("neighbor of x is not a neighbor of x^{k}"));
            }
            if ctx.census.is_potent(x) {
                if let Some(y) = g.neighbors(u).find(|&y| y != v && !g.has_edge(v, y)) {
                    return fail(
                        pair(ctx, x, *g.label(y)),
                        format!("potent x: neighbor of x^{k} is not a neighbor of x"),
                    );
                }
            }
        }
    }
    if checked == 0 {
        return vacuous("no vertex has a distinct power among the vertices");
    }
    pass(None, format!("{checked} neighborhood inclusions"))
}

fn nilpotent_universality(ctx: &RingContext<'_>) -> Verdict {
    let g = ctx.prime().graph();
    let nilpotents: Vec<Elem> = ctx.census.nilpotents().collect();
    let Some(&first) = nilpotents.first() else {
        return vacuous("ring is reduced");
    };
    for &x in &nilpotents {
        let v = g.position(&x).expect("nilpotents are vertices");
        if let Some(w) = (0..g.vertex_count()).find(|&w| w != v && !g.has_edge(v, w)) {
            return fail(pair(ctx, x, *g.label(w)), "nilpotent vertex not universal");
        }
    }
    let comps = components(g);
    if comps.len() > 1 {
        return fail(
            Witness::Components {
                sizes: comps.iter().map(Vec::len).collect(),
            },
            "disconnected despite a non-zero nilpotent",
        );
    }
    let v = g.position(&first).expect("vertex");
    let neighbors: Vec<usize> = g.neighbors(v).collect();
    pass(
        Some(Witness::Neighborhood {
            vertex: ctx.name(first),
            neighbors: names(ctx, g, &neighbors),
        }),
        format!("{} universal nilpotents", nilpotents.len()),
    )
}

fn identity_involution_diameter(ctx: &RingContext<'_>) -> Verdict {
    if ctx.sr.ring().one().is_none() {
        return vacuous("ring has no identity");
    }
    if !ctx.sr.involution().is_identity() {
        return vacuous("involution is not the identity");
    }
    connected_within(ctx, 2)
}

fn matrix_ring(ctx: &RingContext<'_>) -> Verdict {
    let is_mn_zm = matches!(
        ctx.sr.ring().shape(),
        Shape::Matrix { size, base } if *size >= 2 && matches!(base.shape(), Shape::Modular(m) if *m >= 2)
    );
    if !is_mn_zm || *ctx.sr.kind() != InvolutionKind::Transpose {
        return vacuous("not M_n(Z_m) with transpose");
    }
    let verdict = connected_within(ctx, 2);
    if verdict.status != Status::Pass {
        return verdict;
    }
    let g = ctx.prime().graph();
    match shortest_cycle(g) {
        Some(c) if c.len() == 3 => verdict,
        Some(c) => fail(
            Witness::Cycle {
                vertices: names(ctx, g, &c),
            },
            format!("girth {}", c.len()),
        ),
        None => fail(invariants_witness(ctx), "no cycle"),
    }
}

fn girth_trichotomy(ctx: &RingContext<'_>) -> Verdict {
    let g = ctx.prime().graph();
    match shortest_cycle(g) {
        None => pass(Some(invariants_witness(ctx)), "girth inf"),
        Some(c) if c.len() <= 4 => pass(
            Some(Witness::Cycle {
                vertices: names(ctx, g, &c),
            }),
            format!("girth {}", c.len()),
        ),
        Some(c) => fail(
            Witness::Cycle {
                vertices: names(ctx, g, &c),
            },
            format!("girth {}", c.len()),
        ),
    }
}

fn m2_join(ctx: &RingContext<'_>) -> Verdict {
    let Ok(d) = m2_field_decomposition(ctx.sr) else {
        return vacuous("not M2 over a field with transpose");
    };
    let p = ctx.prime().graph();
    let to_p: Vec<usize> = d.join.labels().iter().map(|x| p.position(x).expect("same vertices")).collect();
    for (i, j) in d.join.edges() {
        if !p.has_edge(to_p[i], to_p[j]) {
            return fail(pair(ctx, *d.join.label(i), *d.join.label(j)), "join edge missing from gamma-prime");
        }
    }
    if d.join.edge_count() != p.edge_count() {
        let from_join = |x: &Elem| d.join.position(x).expect("same vertices");
        let (i, j) = p
            .edges()
            .find(|&(i, j)| !d.join.has_edge(from_join(p.label(i)), from_join(p.label(j))))
            .expect("edge counts differ");
        return fail(pair(ctx, *p.label(i), *p.label(j)), "gamma-prime edge missing from join");
    }
    pass(
        None,
        format!(
            "|gamma1| = {}, |N| = {}, {} edges",
            d.gamma1.vertex_count(),
            d.nilpotent_part.vertex_count(),
            p.edge_count()
        ),
    )
}

fn is_projection(ctx: &RingContext<'_>, e: Elem) -> bool {
    ctx.sr.ring().mul(e, e) == e && ctx.sr.star(e) == e
}

fn universal_vertex_structure(ctx: &RingContext<'_>) -> Verdict {
    let ring = ctx.sr.ring();
    let Some(one) = ring.one() else {
        return vacuous("ring has no identity");
    };
    let g = ctx.prime().graph();
    let universal: Vec<Elem> = universal_vertices(g).into_iter().map(|v| *g.label(v)).collect();
    if universal.is_empty() {
        return vacuous("no universal vertices");
    }
    let zero = ring.zero();
    let projections: Vec<Elem> = ring
        .elements()
        .filter(|&f| f != zero && f != one && is_projection(ctx, f))
        .collect();
    for &a in &universal {
        if ctx.census.is_nilpotent(a) {
            continue;
        }
        if !is_projection(ctx, a) {
            return fail(Witness::Element { element: ctx.name(a) }, "universal vertex is neither nilpotent nor a projection");
        }
        if let Some(&f) = projections
            .iter()
            .find(|&&f| f != a && (ring.mul(a, f) != zero || ring.mul(f, a) != zero))
        {
            return fail(pair(ctx, a, f), "universal projection not orthogonal to another projection");
        }
    }
    pass(None, format!("{} universal vertices", universal.len()))
}

/// Finite integral domain: commutative, unital, non-trivial, no zero-divisors.
fn is_integral_domain(ring: &FiniteRing) -> bool {
    ring.order() >= 2 && ring.one().is_some() && ring.is_commutative() && Census::of(ring).zero_divisors().is_empty()
}

fn product_swap(ctx: &RingContext<'_>) -> Verdict {
    let ring = ctx.sr.ring();
    let Shape::Product(l, _) = ring.shape() else {
        return vacuous("not a product");
    };
    if *ctx.sr.kind() != InvolutionKind::Swap || !l.is_commutative() {
        return vacuous("not R x R with swap over a commutative R");
    }
    let domain = is_integral_domain(l);
    let g = ctx.prime().graph();
    let comps = components(g);
    if !domain {
        if comps.len() > 1 {
            let (a, b) = (comps[0][0], comps[1][0]);
            return fail(pair(ctx, *g.label(a), *g.label(b)), "disconnected over a non-domain");
        }
        let last = g.vertex_count() - 1;
        let path = shortest_path(g, 0, last).expect("connected");
        return pass(
            Some(Witness::Path {
                vertices: names(ctx, g, &path),
            }),
            "connected over a non-domain",
        );
    }
    let sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
    if comps.len() != 2 {
        return fail(Witness::Components { sizes }, "expected two components over a domain");
    }
    let zero = l.zero();
    for comp in &comps {
        let side = |v: usize| ring.split(*g.label(v)).1 == zero;
        let first = side(comp[0]);
        if let Some(&v) = comp.iter().find(|&&v| side(v) != first) {
            return fail(pair(ctx, *g.label(comp[0]), *g.label(v)), "component mixes both axes");
        }
        if comp.len() != l.order() - 1 {
            return fail(Witness::Components { sizes }, "component is not a full axis");
        }
        for (i, &u) in comp.iter().enumerate() {
            if let Some(&w) = comp[i + 1..].iter().find(|&&w| !g.has_edge(u, w)) {
                return fail(pair(ctx, *g.label(u), *g.label(w)), "component is not complete");
            }
        }
    }
    pass(Some(Witness::Components { sizes }), "two complete axis components")
}

/// Whether `sr` is *-isomorphic to Z2 x Z2 with the identity involution.
fn is_z2_squared_with_identity(ctx: &RingContext<'_>) -> bool {
    let ring = ctx.sr.ring();
    if ring.order() != 4 || !ctx.sr.involution().is_identity() {
        return false;
    }
    // Z2 x Z2 on indices 2a + b
    let add = |x: usize, y: usize| x ^ y;
    let mul = |x: usize, y: usize| x & y;
    let mut perm = [0usize, 1, 2, 3];
    let mut found = false;
    permutations(&mut perm, 0, &mut |phi| {
        let ok = (0..4).all(|x| {
            (0..4).all(|y| {
                let (fx, fy) = (Elem::new(phi[x]), Elem::new(phi[y]));
                ring.add(fx, fy).index() == phi[add(x, y)] && ring.mul(fx, fy).index() == phi[mul(x, y)]
            })
        });
        found |= ok;
    });
    found
}

fn permutations(items: &mut [usize; 4], k: usize, visit: &mut impl FnMut(&[usize; 4])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, visit);
        items.swap(k, i);
    }
}

fn completeness(ctx: &RingContext<'_>) -> Verdict {
    let ring = ctx.sr.ring();
    if ring.one().is_none() || !ctx.predicates().is_abelian {
        return vacuous("not an abelian ring with identity");
    }
    let g = ctx.prime().graph();
    let complete = shape_tests(g).is_complete;
    let all_nilpotent = ctx.census.zero_divisors().iter().all(|&x| ctx.census.is_nilpotent(x));
    let z2_squared = is_z2_squared_with_identity(ctx);
    if complete && !(all_nilpotent || z2_squared) {
        let x = *ctx
            .census
            .zero_divisors()
            .iter()
            .find(|&&x| !ctx.census.is_nilpotent(x))
            .expect("some vertex is not nilpotent");
        return fail(Witness::Element { element: ctx.name(x) }, "complete with a non-nilpotent vertex");
    }
    if !complete && (all_nilpotent || z2_squared) {
        let n = g.vertex_count();
        let (u, w) = (0..n)
            .flat_map(|u| (u + 1..n).map(move |w| (u, w)))
            .find(|&(u, w)| !g.has_edge(u, w))
            .expect("not complete");
        return fail(pair(ctx, *g.label(u), *g.label(w)), "expected a complete graph");
    }
    if complete && ring.is_commutative() && g.vertex_count() > 2 {
        let zero = ring.zero();
        let in_z = |x: Elem| x == zero || ctx.census.is_zero_divisor(x);
        let z: Vec<Elem> = std::iter::once(zero).chain(ctx.census.zero_divisors().iter().copied()).collect();
        for &x in &z {
            if let Some(&y) = z.iter().find(|&&y| !in_z(ring.add(x, y))) {
                return fail(pair(ctx, x, y), "Z(R) not closed under addition");
            }
            if let Some(r) = ring.elements().find(|&r| !in_z(ring.mul(r, x))) {
                return fail(pair(ctx, r, x), "Z(R) not closed under multiplication by R");
            }
            if !in_z(ctx.sr.star(x)) {
                return fail(Witness::Element { element: ctx.name(x) }, "Z(R) not closed under the involution");
            }
        }
        return pass(None, "complete; Z(R) is a *-ideal");
    }
    let why = match (complete, z2_squared) {
        (true, true) => "complete, Z2 x Z2",
        (true, false) => "complete, every zero-divisor nilpotent",
        (false, _) => "not complete, some zero-divisor not nilpotent",
    };
    pass(None, why)
}

/// A central projection `e` with `|eR| = 2` and `(1-e)R` an integral domain.
fn z2_times_domain_split(ctx: &RingContext<'_>) -> Option<Elem> {
    let ring = ctx.sr.ring();
    let one = ring.one()?;
    let zero = ring.zero();
    ring.elements().find(|&e| {
        if e == zero || e == one || !is_projection(ctx, e) || !ring.is_central(e) {
            return false;
        }
        let e_r: HashSet<Elem> = ring.elements().map(|r| ring.mul(e, r)).collect();
        if e_r.len() != 2 {
            return false;
        }
        let f = ring.sub(one, e);
        let f_r: HashSet<Elem> = ring.elements().map(|r| ring.mul(f, r)).collect();
        let nonzero: Vec<Elem> = f_r.iter().copied().filter(|&a| a != zero).collect();
        !nonzero.is_empty()
            && nonzero
                .iter()
                .all(|&a| nonzero.iter().all(|&b| ring.mul(a, b) != zero && ring.mul(a, b) == ring.mul(b, a)))
    })
}

fn star(ctx: &RingContext<'_>) -> Verdict {
    let ring = ctx.sr.ring();
    let p = ctx.predicates();
    if ring.one().is_none() || !p.is_abelian || !p.has_proper_involution {
        return vacuous("not an abelian unital ring with proper involution");
    }
    let g = ctx.prime().graph();
    if g.vertex_count() < 3 {
        return vacuous("fewer than three vertices");
    }
    let center = shape_tests(g).star_center.map(|v| *g.label(v));
    let split = z2_times_domain_split(ctx);
    match (center, split) {
        (Some(c), Some(_)) => pass(Some(Witness::Element { element: ctx.name(c) }), "star, Z2 x domain"),
        (None, None) => pass(None, "not a star, no Z2 x domain splitting"),
        (Some(c), None) => fail(Witness::Element { element: ctx.name(c) }, "star without a Z2 x domain splitting"),
        (None, Some(e)) => fail(Witness::Element { element: ctx.name(e) }, "splits as Z2 x domain but not a star"),
    }
}

fn direct_sum_connectivity(ctx: &RingContext<'_>) -> Verdict {
    let Shape::Product(l, r) = ctx.sr.ring().shape() else {
        return vacuous("not a product");
    };
    if !ctx.sr.is_componentwise() {
        return vacuous("involution is not componentwise");
    }
    if Census::of(l).zero_divisors().is_empty() || Census::of(r).zero_divisors().is_empty() {
        return vacuous("a factor has no zero-divisors");
    }
    connected_within(ctx, 4)
}

fn central_projection_connectivity(ctx: &RingContext<'_>) -> Verdict {
    if !ctx.predicates().has_nontrivial_central_projection {
        return vacuous("no non-trivial central projection");
    }
    connected_within(ctx, 4)
}
