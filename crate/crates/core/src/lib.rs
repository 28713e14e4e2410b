//! Finite-model workbench for Kleene algebras with tests.
//!
//! Finite algebras are dense operation tables over `0..n`. On top of them
//! the crate checks axiom suites (Kleene algebra, domain and antidomain,
//! one-sorted test operators, residuation), builds canonical expansions,
//! translates two-sorted KAT terms into the one-sorted language, decides
//! equations by exhaustive valuation, closes relational models, and searches
//! exhaustively for unary tables.

pub mod algebra;
pub mod appendix;
pub mod cli;
pub mod constructions;
pub mod engine;
pub mod fixtures;
pub mod fka;
pub mod relational;
pub mod report;
pub mod search;
pub mod semantics;
pub mod terms;
pub mod theories;

pub use algebra::{check_kleene, Elem, FiniteKleeneAlgebra, ModelError};
pub use constructions::{
    expand_ka_to_kat1, expand_ka_to_residuated_kat1, expand_kat_to_kat1, residual_table,
};
pub use fka::{parse_algebra, print_algebra};
pub use relational::{generate_relational_model, Relation, RelationalModel};
pub use report::{AxiomReport, AxiomResult, Witness};
pub use search::{enumerate_expansions, enumerate_small_kleene_algebras, SearchSpec};
pub use semantics::{check_translation_equivalence, kat1_equation_holds, kat_equation_holds};
pub use terms::{parse_equation, translate, Kat1Term, KatTerm, TestTerm};
pub use theories::{check_suite, SuiteId, TestAlgebra, UnaryExpansion, UnaryOp};
