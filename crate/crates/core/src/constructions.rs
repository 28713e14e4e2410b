//! Expansions of a Kleene algebra by test operators and residuals.

use thiserror::Error;

use crate::algebra::{Elem, FiniteKleeneAlgebra};
use crate::report::AxiomReport;
use crate::theories::{
    boolean_algebra_laws, check_axioms, check_two_sorted_kat, Complement, SuiteError,
    TestAlgebra, UnaryExpansion, UnaryOp,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("test set is not a Boolean subalgebra: failing {0:?}")]
    NotAKat(Vec<String>),
    #[error(transparent)]
    Suite(#[from] SuiteError),
}

/// The piecewise test operators every Kleene algebra admits:
/// `t(0) = 0` and `t(x) = 1` otherwise; `t'(1) = 0`, `t'(0) = 1`, and
/// `t'(x) = x` otherwise.
pub fn expand_ka_to_kat1(alg: &FiniteKleeneAlgebra) -> UnaryExpansion {
    let (zero, one) = (alg.zero(), alg.one());
    let t = alg
        .elements()
        .map(|x| if x == zero { zero } else { one })
        .collect();
    let tp = alg
        .elements()
        .map(|x| {
            if x == one {
                zero
            } else if x == zero {
                one
            } else {
                x
            }
        })
        .collect();
    UnaryExpansion::new(alg.clone())
        .with_unary(UnaryOp::T, t)
        .and_then(|e| e.with_unary(UnaryOp::TPrime, tp))
        .expect("tables over the carrier")
}

/// Expands a two-sorted KAT: `t` fixes tests and sends everything else to
/// `1`; `t'` negates tests and fixes everything else.
pub fn expand_kat_to_kat1(
    alg: &FiniteKleeneAlgebra,
    tests: &TestAlgebra,
) -> Result<UnaryExpansion, ConstructionError> {
    let report = check_two_sorted_kat(alg, tests);
    if !report.holds_all() {
        return Err(ConstructionError::NotAKat(
            report.failing_ids().into_iter().map(String::from).collect(),
        ));
    }
    let t = alg
        .elements()
        .map(|x| if tests.contains(x) { x } else { alg.one() })
        .collect();
    let tp = alg.elements().map(|x| tests.neg(x).unwrap_or(x)).collect();
    Ok(UnaryExpansion::new(alg.clone())
        .with_unary(UnaryOp::T, t)
        .and_then(|e| e.with_unary(UnaryOp::TPrime, tp))
        .expect("tables over the carrier"))
}

/// `x -> y` as the join of every `z` with `z·x <= y`, folded in index order.
///
/// Row-major: entry `x*n + y` holds `x -> y`.
pub fn residual_table(alg: &FiniteKleeneAlgebra) -> Vec<Elem> {
    let n = alg.size();
    let mut table = Vec::with_capacity(n * n);
    for x in alg.elements() {
        for y in alg.elements() {
            table.push(alg.sum(alg.elements().filter(|&z| alg.leq(alg.mul(z, x), y))));
        }
    }
    table
}

/// Piecewise `t`, the residual `->`, and the derived `t'(x) = t(t(x) -> 0)`.
pub fn expand_ka_to_residuated_kat1(alg: &FiniteKleeneAlgebra) -> UnaryExpansion {
    let n = alg.size();
    let arrow = residual_table(alg);
    let t = expand_ka_to_kat1(alg)
        .unary(UnaryOp::T)
        .expect("t present")
        .to_vec();
    let tp = alg
        .elements()
        .map(|x| t[arrow[t[x] * n + alg.zero()]])
        .collect();
    UnaryExpansion::new(alg.clone())
        .with_unary(UnaryOp::T, t)
        .and_then(|e| e.with_unary(UnaryOp::TPrime, tp))
        .and_then(|e| e.with_arrow(arrow))
        .expect("tables over the carrier")
}

/// Adds `d := a∘a` to an expansion carrying an antidomain table.
pub fn d_from_a(exp: &UnaryExpansion) -> Result<UnaryExpansion, SuiteError> {
    let a = exp.require(UnaryOp::A, "d-from-a")?;
    let d = a.iter().map(|&ax| a[ax]).collect();
    let mut out = exp.clone();
    out.set_unary(UnaryOp::D, d)?;
    Ok(out)
}

/// Idempotent, complemented elements of the negative cone, and whether they
/// form a Boolean subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegconeCandidates {
    pub members: Vec<Elem>,
    pub report: AxiomReport,
}

impl NegconeCandidates {
    pub fn is_boolean(&self) -> bool {
        self.report.holds_all()
    }
}

/// `{ x <= 1 | x·x = x, and some y <= 1 has x + y = 1, x·y = y·x = 0 }`.
pub fn negcone_boolean_candidates(alg: &FiniteKleeneAlgebra) -> NegconeCandidates {
    let (zero, one) = (alg.zero(), alg.one());
    let cone: Vec<Elem> = alg.elements().filter(|&x| alg.leq(x, one)).collect();
    let members: Vec<Elem> = cone
        .iter()
        .copied()
        .filter(|&x| alg.mul(x, x) == x)
        .filter(|&x| {
            cone.iter().any(|&y| {
                alg.add(x, y) == one && alg.mul(x, y) == zero && alg.mul(y, x) == zero
            })
        })
        .collect();
    let laws = boolean_algebra_laws(members.clone(), Complement::Exists);
    let report = check_axioms(&UnaryExpansion::new(alg.clone()), "negcone-boolean", &laws);
    NegconeCandidates { members, report }
}
