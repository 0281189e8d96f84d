//! Ring spec parsing, table files, and output formats for the `starzd` binary.

pub mod emit;
pub mod figures;
pub mod spec;
pub mod tablefile;
