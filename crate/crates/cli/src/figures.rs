//! Named reference graphs.

use starzd::graph::{build_variant, Variant};

use crate::emit::emit_dot;
use crate::spec::build_ring_spec;

pub struct Figure {
    pub name: &'static str,
    pub spec: &'static str,
    pub variant: Variant,
}

pub const FIGURES: [Figure; 6] = [
    Figure { name: "fig1a", spec: "Z8", variant: Variant::GammaStar },
    Figure { name: "fig1b", spec: "Z8", variant: Variant::GammaPrime },
    Figure { name: "fig-gamma-bar-m2z2", spec: "M2(Z2)@transpose", variant: Variant::GammaBar },
    Figure { name: "fig-gamma-prime-m2z2", spec: "M2(Z2)@transpose", variant: Variant::GammaPrime },
    Figure { name: "fig-gamma-star-m2z2", spec: "M2(Z2)@transpose", variant: Variant::GammaStar },
    Figure { name: "fig-z3z3", spec: "Z3xZ3@swap", variant: Variant::GammaPrime },
];

pub fn find_figure(name: &str) -> Option<&'static Figure> {
    FIGURES.iter().find(|f| f.name == name)
}

impl Figure {
    pub fn dot(&self) -> String {
        let sr = build_ring_spec(self.spec).expect("figure specs are valid");
        let g = build_variant(&sr, self.variant).expect("figure variants apply");
        emit_dot(&sr, &g)
    }
}
