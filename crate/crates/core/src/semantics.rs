//! Evaluation of terms in finite models and brute-force equation checking.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::{Elem, FiniteKleeneAlgebra};
use crate::terms::{translate, Equation, Kat1Term, KatTerm, TestTerm};
use crate::theories::{test_image, SuiteError, TestAlgebra, UnaryExpansion, UnaryOp};

/// Default cap on the number of assignments an equation check may visit.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable {0} is unassigned")]
    Unassigned(String),
    #[error("test variable b{var} assigned {value}, which is not a test")]
    TestOutsideB { var: u32, value: Elem },
    #[error("element {0} is outside the carrier")]
    OutOfRange(Elem),
    #[error("model has no {0} table")]
    MissingTable(UnaryOp),
    #[error("test element {0} has no negation")]
    NoNegation(Elem),
    #[error("evaluation budget exceeded: {needed} assignments needed, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("not an expansion: image of t is {image:?} but the test set is {tests:?}")]
    NotAnExpansion { image: Vec<Elem>, tests: Vec<Elem> },
    #[error(transparent)]
    Suite(#[from] SuiteError),
}

/// Assignment of one-sorted variables `x_n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Valuation(pub BTreeMap<u32, Elem>);

impl Valuation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, var: u32, value: Elem) -> Self {
        self.0.insert(var, value);
        self
    }

    pub fn get(&self, var: u32) -> Option<Elem> {
        self.0.get(&var).copied()
    }
}

impl FromIterator<(u32, Elem)> for Valuation {
    fn from_iter<I: IntoIterator<Item = (u32, Elem)>>(iter: I) -> Self {
        Valuation(iter.into_iter().collect())
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(v, e)| format!("x{v}={e}")).collect();
        f.write_str(&parts.join(", "))
    }
}

/// Assignment of test variables `b_n` and program variables `p_n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct KatValuation {
    pub tests: BTreeMap<u32, Elem>,
    pub progs: BTreeMap<u32, Elem>,
}

impl KatValuation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_test(mut self, var: u32, value: Elem) -> Self {
        self.tests.insert(var, value);
        self
    }

    pub fn with_prog(mut self, var: u32, value: Elem) -> Self {
        self.progs.insert(var, value);
        self
    }
}

impl fmt::Display for KatValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // interleaved like the translation: p_n before b_n
        let mut parts: Vec<(u32, String)> = self
            .progs
            .iter()
            .map(|(v, e)| (2 * v, format!("p{v}={e}")))
            .chain(self.tests.iter().map(|(v, e)| (2 * v + 1, format!("b{v}={e}"))))
            .collect();
        parts.sort();
        let parts: Vec<String> = parts.into_iter().map(|(_, s)| s).collect();
        f.write_str(&parts.join(", "))
    }
}

/// A Kleene algebra with a distinguished test subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KatModel {
    pub algebra: FiniteKleeneAlgebra,
    pub tests: TestAlgebra,
}

impl KatModel {
    pub fn new(algebra: FiniteKleeneAlgebra, tests: TestAlgebra) -> Self {
        KatModel { algebra, tests }
    }

    /// The KAT induced by a one-sorted model: tests `t(K)`, negation `t'`.
    pub fn induced(exp: &UnaryExpansion) -> Result<Self, SuiteError> {
        Ok(KatModel {
            algebra: exp.base.clone(),
            tests: TestAlgebra::from_expansion(exp)?,
        })
    }
}

fn unary(exp: &UnaryExpansion, op: UnaryOp, x: Elem) -> Result<Elem, EvalError> {
    exp.apply(op, x).ok_or(EvalError::MissingTable(op))
}

/// Evaluates a one-sorted term; `t` and `t'` use the expansion's tables.
pub fn evaluate_kat1(
    exp: &UnaryExpansion,
    term: &Kat1Term,
    val: &Valuation,
) -> Result<Elem, EvalError> {
    let alg = &exp.base;
    Ok(match term {
        Kat1Term::Var(n) => {
            let v = val.get(*n).ok_or_else(|| EvalError::Unassigned(format!("x{n}")))?;
            if v >= alg.size() {
                return Err(EvalError::OutOfRange(v));
            }
            v
        }
        Kat1Term::Zero => alg.zero(),
        Kat1Term::One => alg.one(),
        Kat1Term::Plus(a, b) => alg.add(evaluate_kat1(exp, a, val)?, evaluate_kat1(exp, b, val)?),
        Kat1Term::Times(a, b) => alg.mul(evaluate_kat1(exp, a, val)?, evaluate_kat1(exp, b, val)?),
        Kat1Term::Star(a) => alg.star(evaluate_kat1(exp, a, val)?),
        Kat1Term::T(a) => unary(exp, UnaryOp::T, evaluate_kat1(exp, a, val)?)?,
        Kat1Term::TPrime(a) => unary(exp, UnaryOp::TPrime, evaluate_kat1(exp, a, val)?)?,
    })
}

fn evaluate_test(model: &KatModel, b: &TestTerm, val: &KatValuation) -> Result<Elem, EvalError> {
    let alg = &model.algebra;
    Ok(match b {
        TestTerm::Var(n) => {
            let v = *val
                .tests
                .get(n)
                .ok_or_else(|| EvalError::Unassigned(format!("b{n}")))?;
            if !model.tests.contains(v) {
                return Err(EvalError::TestOutsideB { var: *n, value: v });
            }
            v
        }
        TestTerm::Zero => alg.zero(),
        TestTerm::One => alg.one(),
        TestTerm::Not(b) => {
            let v = evaluate_test(model, b, val)?;
            model.tests.neg(v).ok_or(EvalError::NoNegation(v))?
        }
        TestTerm::And(b, c) => alg.mul(evaluate_test(model, b, val)?, evaluate_test(model, c, val)?),
        TestTerm::Or(b, c) => alg.add(evaluate_test(model, b, val)?, evaluate_test(model, c, val)?),
    })
}

/// Evaluates a KAT term; negation uses the model's test negation.
pub fn evaluate_kat(model: &KatModel, term: &KatTerm, val: &KatValuation) -> Result<Elem, EvalError> {
    let alg = &model.algebra;
    Ok(match term {
        KatTerm::ProgVar(n) => {
            let v = *val
                .progs
                .get(n)
                .ok_or_else(|| EvalError::Unassigned(format!("p{n}")))?;
            if v >= alg.size() {
                return Err(EvalError::OutOfRange(v));
            }
            v
        }
        KatTerm::FromTest(b) => evaluate_test(model, b, val)?,
        KatTerm::Plus(p, q) => alg.add(evaluate_kat(model, p, val)?, evaluate_kat(model, q, val)?),
        KatTerm::Times(p, q) => alg.mul(evaluate_kat(model, p, val)?, evaluate_kat(model, q, val)?),
        KatTerm::Star(p) => alg.star(evaluate_kat(model, p, val)?),
    })
}

/// Result of checking an equation in one finite model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<V> {
    Holds { checked: u64 },
    Fails { valuation: V, lhs: Elem, rhs: Elem },
}

impl<V> Verdict<V> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds { .. })
    }

    pub fn counterexample(&self) -> Option<&V> {
        match self {
            Verdict::Fails { valuation, .. } => Some(valuation),
            Verdict::Holds { .. } => None,
        }
    }
}

fn space_size(domains: &[usize]) -> u128 {
    domains.iter().fold(1u128, |acc, &d| acc.saturating_mul(d as u128))
}

fn ensure_budget(needed: u128, budget: u64) -> Result<(), EvalError> {
    if needed > budget as u128 {
        return Err(EvalError::BudgetExceeded { needed, budget });
    }
    Ok(())
}

/// Visits every tuple of `domains` in lexicographic order (first position
/// most significant) until `visit` returns `Ok(true)`. Returns the number of
/// tuples visited.
fn enumerate<E>(
    domains: &[Vec<Elem>],
    mut visit: impl FnMut(&[Elem]) -> Result<bool, E>,
) -> Result<u64, E> {
    if domains.iter().any(Vec::is_empty) {
        return Ok(0);
    }
    let k = domains.len();
    let mut idx = vec![0usize; k];
    let mut cur: Vec<Elem> = domains.iter().map(|d| d[0]).collect();
    let mut count = 0u64;
    loop {
        count += 1;
        if visit(&cur)? {
            return Ok(count);
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(count);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < domains[pos].len() {
                cur[pos] = domains[pos][idx[pos]];
                break;
            }
            idx[pos] = 0;
            cur[pos] = domains[pos][0];
        }
    }
}

/// Checks a one-sorted equation over every assignment of its variables.
pub fn kat1_equation_holds(
    exp: &UnaryExpansion,
    eq: &Equation<Kat1Term>,
    budget: u64,
) -> Result<Verdict<Valuation>, EvalError> {
    let vars: Vec<u32> = eq.lhs.vars().union(&eq.rhs.vars()).copied().collect();
    let carrier: Vec<Elem> = exp.base.elements().collect();
    let domains = vec![carrier; vars.len()];
    ensure_budget(space_size(&vec![exp.size(); vars.len()]), budget)?;
    let mut failure = None;
    let checked = enumerate(&domains, |vals| {
        let val: Valuation = vars.iter().copied().zip(vals.iter().copied()).collect();
        let lhs = evaluate_kat1(exp, &eq.lhs, &val)?;
        let rhs = evaluate_kat1(exp, &eq.rhs, &val)?;
        if lhs != rhs {
            failure = Some(Verdict::Fails {
                valuation: val,
                lhs,
                rhs,
            });
            return Ok::<_, EvalError>(true);
        }
        Ok(false)
    })?;
    Ok(failure.unwrap_or(Verdict::Holds { checked }))
}

/// KAT variables ordered as their translations: `p_n` at `2n`, `b_n` at `2n+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum KatVar {
    Prog(u32),
    Test(u32),
}

impl KatVar {
    fn key(self) -> u32 {
        match self {
            KatVar::Prog(n) => 2 * n,
            KatVar::Test(n) => 2 * n + 1,
        }
    }
}

fn kat_vars<'a>(terms: impl IntoIterator<Item = &'a KatTerm>) -> Vec<KatVar> {
    let mut vars: Vec<KatVar> = Vec::new();
    for term in terms {
        vars.extend(term.prog_vars().into_iter().map(KatVar::Prog));
        vars.extend(term.test_vars().into_iter().map(KatVar::Test));
    }
    vars.sort_by_key(|v| v.key());
    vars.dedup();
    vars
}

fn kat_valuation(vars: &[KatVar], vals: &[Elem]) -> KatValuation {
    let mut val = KatValuation::new();
    for (&var, &v) in vars.iter().zip(vals) {
        match var {
            KatVar::Prog(n) => val.progs.insert(n, v),
            KatVar::Test(n) => val.tests.insert(n, v),
        };
    }
    val
}

fn kat_domains(model: &KatModel, vars: &[KatVar]) -> Vec<Vec<Elem>> {
    vars.iter()
        .map(|var| match var {
            KatVar::Prog(_) => model.algebra.elements().collect(),
            KatVar::Test(_) => model.tests.members().to_vec(),
        })
        .collect()
}

/// Checks a KAT equation; test variables range over the test set only.
pub fn kat_equation_holds(
    model: &KatModel,
    eq: &Equation<KatTerm>,
    budget: u64,
) -> Result<Verdict<KatValuation>, EvalError> {
    let vars = kat_vars([&eq.lhs, &eq.rhs]);
    let domains = kat_domains(model, &vars);
    let sizes: Vec<usize> = domains.iter().map(Vec::len).collect();
    ensure_budget(space_size(&sizes), budget)?;
    let mut failure = None;
    let checked = enumerate(&domains, |vals| {
        let val = kat_valuation(&vars, vals);
        let lhs = evaluate_kat(model, &eq.lhs, &val)?;
        let rhs = evaluate_kat(model, &eq.rhs, &val)?;
        if lhs != rhs {
            failure = Some(Verdict::Fails {
                valuation: val,
                lhs,
                rhs,
            });
            return Ok::<_, EvalError>(true);
        }
        Ok(false)
    })?;
    Ok(failure.unwrap_or(Verdict::Holds { checked }))
}

/// A valuation pair on which a KAT term and its translation disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub kat_valuation: KatValuation,
    pub kat1_valuation: Valuation,
    pub kat_value: Elem,
    pub kat1_value: Elem,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] gives {} but [{}] gives {} for the translation",
            self.kat_valuation, self.kat_value, self.kat1_valuation, self.kat1_value
        )
    }
}

/// Outcome of comparing a KAT term with its translation in both directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranslationReport {
    /// KAT valuations checked (tests drawn from the test set).
    pub forward_checked: u64,
    /// One-sorted valuations checked (all variables over the carrier).
    pub backward_checked: u64,
    pub forward_mismatch: Option<Mismatch>,
    pub backward_mismatch: Option<Mismatch>,
}

impl TranslationReport {
    pub fn holds(&self) -> bool {
        self.forward_mismatch.is_none() && self.backward_mismatch.is_none()
    }
}

/// Compares `r` in `model` with its translation in `exp`, which must expand
/// `model` (the image of `t` equals the test set).
///
/// Forward: every KAT valuation `h` is paired with the one-sorted valuation
/// sending `x_{2n}` to `h(p_n)` and `x_{2n+1}` to `h(b_n)`. Backward: every
/// one-sorted valuation `v` is paired with the KAT valuation sending `p_n` to
/// `v(x_{2n})` and `b_n` to `t(v(x_{2n+1}))`, evaluated in the KAT induced by
/// `exp`.
pub fn check_translation_equivalence(
    model: &KatModel,
    exp: &UnaryExpansion,
    r: &KatTerm,
    budget: u64,
) -> Result<TranslationReport, EvalError> {
    let image = test_image(exp, UnaryOp::T)?;
    if image != model.tests.members() {
        return Err(EvalError::NotAnExpansion {
            image,
            tests: model.tests.members().to_vec(),
        });
    }
    let translated = translate(r);
    let vars = kat_vars([r]);

    let forward_domains = kat_domains(model, &vars);
    let forward_size = space_size(&forward_domains.iter().map(Vec::len).collect::<Vec<_>>());
    let backward_size = space_size(&vec![exp.size(); vars.len()]);
    ensure_budget(forward_size.saturating_add(backward_size), budget)?;

    let to_kat1 = |val: &KatValuation| -> Valuation {
        val.progs
            .iter()
            .map(|(&n, &v)| (2 * n, v))
            .chain(val.tests.iter().map(|(&n, &v)| (2 * n + 1, v)))
            .collect()
    };

    let mut forward_mismatch = None;
    let forward_checked = enumerate(&forward_domains, |vals| {
        let h = kat_valuation(&vars, vals);
        let v = to_kat1(&h);
        let kat_value = evaluate_kat(model, r, &h)?;
        let kat1_value = evaluate_kat1(exp, &translated, &v)?;
        if kat_value != kat1_value {
            forward_mismatch = Some(Mismatch {
                kat_valuation: h,
                kat1_valuation: v,
                kat_value,
                kat1_value,
            });
            return Ok::<_, EvalError>(true);
        }
        Ok(false)
    })?;

    let induced = KatModel::induced(exp)?;
    let carrier: Vec<Elem> = exp.base.elements().collect();
    let backward_domains = vec![carrier; vars.len()];
    let mut backward_mismatch = None;
    let backward_checked = enumerate(&backward_domains, |vals| {
        let mut v = Valuation::new();
        let mut h = KatValuation::new();
        for (&var, &e) in vars.iter().zip(vals) {
            v.0.insert(var.key(), e);
            match var {
                KatVar::Prog(n) => h.progs.insert(n, e),
                KatVar::Test(n) => h.tests.insert(n, unary(exp, UnaryOp::T, e)?),
            };
        }
        let kat1_value = evaluate_kat1(exp, &translated, &v)?;
        let kat_value = evaluate_kat(&induced, r, &h)?;
        if kat_value != kat1_value {
            backward_mismatch = Some(Mismatch {
                kat_valuation: h,
                kat1_valuation: v,
                kat_value,
                kat1_value,
            });
            return Ok::<_, EvalError>(true);
        }
        Ok(false)
    })?;

    Ok(TranslationReport {
        forward_checked,
        backward_checked,
        forward_mismatch,
        backward_mismatch,
    })
}
