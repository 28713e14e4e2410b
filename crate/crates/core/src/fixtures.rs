//! Bundled appendix algebras.

use crate::fka::parse_algebra;
use crate::theories::UnaryExpansion;

pub const A3_FKA: &str = include_str!("../fixtures/a3.fka");
pub const A4_FKA: &str = include_str!("../fixtures/a4.fka");

/// Three-element chain algebra with a non-local predomain operation `d`.
pub fn a3() -> UnaryExpansion {
    parse_algebra(A3_FKA).expect("bundled a3.fka parses")
}

/// Four-element chain algebra with a predomain operation `d`.
pub fn a4() -> UnaryExpansion {
    parse_algebra(A4_FKA).expect("bundled a4.fka parses")
}
