pub mod analysis;
pub mod graph;
pub mod harness;
pub mod ring;
