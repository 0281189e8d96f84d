//! DOT, edge-list and JSON rendering.

use std::fmt::Write as _;

use serde::Serialize;
use starzd::analysis::{ExtendedNat, InvariantReport};
use starzd::graph::ZdGraph;
use starzd::ring::StarRing;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Nodes are `n<element index>` labeled with element names, in index order.
pub fn emit_dot(sr: &StarRing, g: &ZdGraph) -> String {
    let ring = sr.ring();
    let graph = g.graph();
    let mut out = format!("graph {} {{\n", quote(&format!("{}({})", g.variant(), sr.describe())));
    for &v in graph.labels() {
        writeln!(out, "  n{} [label={}];", v.index(), quote(&ring.name(v))).unwrap();
    }
    for (a, b) in graph.edges() {
        writeln!(out, "  n{} -- n{};", graph.label(a).index(), graph.label(b).index()).unwrap();
    }
    out.push_str("}\n");
    out
}

/// One `a b` line per edge, by element name.
pub fn emit_edges(sr: &StarRing, g: &ZdGraph) -> String {
    let ring = sr.ring();
    let graph = g.graph();
    graph
        .edges()
        .map(|(a, b)| format!("{} {}\n", ring.name(*graph.label(a)), ring.name(*graph.label(b))))
        .collect()
}

#[derive(Serialize)]
struct GraphDoc {
    ring: String,
    involution: String,
    variant: String,
    vertices: Vec<String>,
    edges: Vec<[String; 2]>,
}

#[derive(Serialize)]
struct ReportDoc {
    ring: String,
    involution: String,
    variant: String,
    vertices: usize,
    edges: usize,
    components: usize,
    diameter: Option<ExtendedNat>,
    girth: ExtendedNat,
    is_complete: bool,
    is_star: bool,
    star_center: Option<String>,
    universal_vertices: Vec<String>,
    degree_sequence: Vec<usize>,
}

fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("plain data serializes")
}

/// The vertex and edge lists as JSON.
pub fn emit_graph_json(sr: &StarRing, g: &ZdGraph) -> String {
    let ring = sr.ring();
    let graph = g.graph();
    let name = |v: usize| ring.name(*graph.label(v));
    to_json(&GraphDoc {
        ring: ring.describe(),
        involution: sr.kind().to_string(),
        variant: g.variant().to_string(),
        vertices: (0..graph.vertex_count()).map(name).collect(),
        edges: graph.edges().map(|(a, b)| [name(a), name(b)]).collect(),
    })
}

/// `diameter` is `null` when there are no vertices.
pub fn emit_report(sr: &StarRing, g: &ZdGraph, inv: &InvariantReport<starzd::ring::Elem>) -> String {
    let ring = sr.ring();
    to_json(&ReportDoc {
        ring: ring.describe(),
        involution: sr.kind().to_string(),
        variant: g.variant().to_string(),
        vertices: inv.vertex_count,
        edges: inv.edge_count,
        components: inv.component_count,
        diameter: inv.diameter,
        girth: inv.girth,
        is_complete: inv.is_complete,
        is_star: inv.is_star,
        star_center: inv.star_center.map(|c| ring.name(c)),
        universal_vertices: inv.universal_vertices.iter().map(|&v| ring.name(v)).collect(),
        degree_sequence: inv.degree_sequence.clone(),
    })
}

#[cfg(test)]
mod tests {
    use serde_json::Value;
    use starzd::analysis::invariant_report;
    use starzd::graph::{build_variant, Variant};

    use super::*;
    use crate::spec::build_ring_spec;

    fn prime(spec: &str) -> (StarRing, ZdGraph) {
        let sr = build_ring_spec(spec).unwrap();
        let g = build_variant(&sr, Variant::GammaPrime).unwrap();
        (sr, g)
    }

    fn report(spec: &str) -> Value {
        let (sr, g) = prime(spec);
        serde_json::from_str(&emit_report(&sr, &g, &invariant_report(g.graph()))).unwrap()
    }

    #[test]
    fn dot_for_z8_triangle() {
        let (sr, g) = prime("Z8");
        assert_eq!(
            emit_dot(&sr, &g),
            "graph \"gamma-prime(Z8@id)\" {\n  n2 [label=\"2\"];\n  n4 [label=\"4\"];\n  n6 [label=\"6\"];\n  \
             n2 -- n4;\n  n2 -- n6;\n  n4 -- n6;\n}\n"
        );
    }

    #[test]
    fn dot_counts_and_empty() {
        let (sr, g) = prime("Z3xZ3@swap");
        let dot = emit_dot(&sr, &g);
        assert_eq!(dot.matches("[label=").count(), 4);
        assert_eq!(dot.matches(" -- ").count(), 2);
        assert!(dot.contains("label=\"(0,1)\""));

        let (sr, g) = prime("Z7");
        assert_eq!(emit_dot(&sr, &g), "graph \"gamma-prime(Z7@id)\" {\n}\n");
        assert_eq!(emit_edges(&sr, &g), "");
    }

    #[test]
    fn edges_by_name() {
        let (sr, g) = prime("Z3xZ3@swap");
        assert_eq!(emit_edges(&sr, &g), "(0,1) (0,2)\n(1,0) (2,0)\n");
    }

    #[test]
    fn report_keys_in_order() {
        let (sr, g) = prime("Z8");
        let text = emit_report(&sr, &g, &invariant_report(g.graph()));
        let keys = [
            "ring",
            "involution",
            "variant",
            "vertices",
            "edges",
            "components",
            "diameter",
            "girth",
            "is_complete",
            "is_star",
            "star_center",
            "universal_vertices",
            "degree_sequence",
        ];
        let positions: Vec<usize> = keys.iter().map(|k| text.find(&format!("\"{k}\":")).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v.as_object().unwrap().len(), keys.len());
    }

    #[test]
    fn report_values() {
        let v = report("Z8");
        assert_eq!(v["diameter"], 1);
        assert_eq!(v["girth"], 3);
        assert_eq!(v["is_complete"], true);
        assert_eq!(v["ring"], "Z8");
        assert_eq!(v["involution"], "id");

        let v = report("Z2xZ5@(id,id)");
        assert_eq!(v["is_star"], true);
        assert_eq!(v["star_center"], "(1,0)");

        let v = report("Z3xZ3@swap");
        assert_eq!(v["diameter"], "inf");
        assert_eq!(v["girth"], "inf");
        assert_eq!(v["components"], 2);

        let v = report("Z5");
        assert_eq!(v["diameter"], Value::Null);
        assert_eq!(v["star_center"], Value::Null);
    }

    #[test]
    fn graph_json_lists_names() {
        let (sr, g) = prime("Z8");
        let v: Value = serde_json::from_str(&emit_graph_json(&sr, &g)).unwrap();
        assert_eq!(v["vertices"], serde_json::json!(["2", "4", "6"]));
        assert_eq!(v["edges"][2], serde_json::json!(["4", "6"]));
    }
}
