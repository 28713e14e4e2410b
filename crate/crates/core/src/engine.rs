//! Brute-force evaluation of equations and quasi-equations over operation
//! tables.
//!
//! An [`Axiom`] is a universally quantified law over a fixed list of
//! variables. Checking it enumerates every assignment of those variables in
//! lexicographic order (first variable most significant) and records the
//! first failure.
//!
//! Unary tables may be *partial*: cells holding [`UNDEF`] are unknown. Lookups
//! through [`Ctx::unary`] then return `None`, and an axiom instance that
//! touches an unknown cell is undetermined rather than failing. The expansion
//! search relies on this to prune candidate tables early.

use crate::algebra::{Elem, FiniteKleeneAlgebra};
use crate::report::{AxiomResult, Witness};
use crate::theories::UnaryOp;

/// Marker for an unassigned cell of a partial unary table.
pub const UNDEF: Elem = usize::MAX;

/// Outcome of one axiom instance: both sides and whether the law holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Eval {
    pub lhs: Elem,
    pub rhs: Elem,
    pub ok: bool,
}

/// Read-only view of all tables an axiom may consult.
#[derive(Clone, Copy)]
pub struct Ctx<'a> {
    pub alg: &'a FiniteKleeneAlgebra,
    unary: [Option<&'a [Elem]>; UnaryOp::COUNT],
    arrow: Option<&'a [Elem]>,
}

impl<'a> Ctx<'a> {
    pub fn new(alg: &'a FiniteKleeneAlgebra) -> Self {
        Ctx {
            alg,
            unary: [None; UnaryOp::COUNT],
            arrow: None,
        }
    }

    pub fn with_unary(mut self, op: UnaryOp, table: &'a [Elem]) -> Self {
        self.unary[op.index()] = Some(table);
        self
    }

    pub fn with_arrow(mut self, table: &'a [Elem]) -> Self {
        self.arrow = Some(table);
        self
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        self.alg.zero()
    }

    #[inline]
    pub fn one(&self) -> Elem {
        self.alg.one()
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.alg.add(x, y)
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.alg.mul(x, y)
    }

    #[inline]
    pub fn star(&self, x: Elem) -> Elem {
        self.alg.star(x)
    }

    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.alg.leq(x, y)
    }

    /// `op(x)`, or `None` if the table is absent or the cell is unknown.
    #[inline]
    pub fn unary(&self, op: UnaryOp, x: Elem) -> Option<Elem> {
        let v = self.unary[op.index()]?[x];
        (v != UNDEF).then_some(v)
    }

    #[inline]
    pub fn arrow(&self, x: Elem, y: Elem) -> Option<Elem> {
        let n = self.alg.size();
        let v = self.arrow?[x * n + y];
        (v != UNDEF).then_some(v)
    }

    pub fn eq(&self, lhs: Elem, rhs: Elem) -> Eval {
        Eval {
            lhs,
            rhs,
            ok: lhs == rhs,
        }
    }

    pub fn le(&self, lhs: Elem, rhs: Elem) -> Eval {
        Eval {
            lhs,
            rhs,
            ok: self.leq(lhs, rhs),
        }
    }

    /// A quasi-equation: vacuously true when the premise fails.
    pub fn implies(&self, premise: bool, conclusion: Eval) -> Eval {
        Eval {
            ok: !premise || conclusion.ok,
            ..conclusion
        }
    }
}

/// The values every variable of an axiom ranges over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Domain {
    Carrier,
    Subset(Vec<Elem>),
}

type EvalFn = dyn Fn(&Ctx<'_>, &[Elem]) -> Option<Eval> + Send + Sync;

pub struct Axiom {
    pub id: &'static str,
    pub vars: &'static [&'static str],
    pub domain: Domain,
    eval: Box<EvalFn>,
}

impl std::fmt::Debug for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Axiom")
            .field("id", &self.id)
            .field("vars", &self.vars)
            .field("domain", &self.domain)
            .finish()
    }
}

impl Axiom {
    pub fn new(
        id: &'static str,
        vars: &'static [&'static str],
        eval: impl Fn(&Ctx<'_>, &[Elem]) -> Option<Eval> + Send + Sync + 'static,
    ) -> Self {
        Axiom {
            id,
            vars,
            domain: Domain::Carrier,
            eval: Box::new(eval),
        }
    }

    pub fn over(mut self, domain: Domain) -> Self {
        self.domain = domain;
        self
    }

    /// Evaluates a single instance; `None` when it depends on an unknown cell.
    pub fn eval_at(&self, ctx: &Ctx<'_>, values: &[Elem]) -> Option<Eval> {
        assert_eq!(values.len(), self.vars.len(), "arity mismatch for {}", self.id);
        (self.eval)(ctx, values)
    }

    fn values(&self, n: usize) -> Vec<Elem> {
        match &self.domain {
            Domain::Carrier => (0..n).collect(),
            Domain::Subset(members) => members.clone(),
        }
    }

    /// Visits assignments in lexicographic order until `visit` returns `true`.
    fn for_each_assignment(&self, n: usize, mut visit: impl FnMut(&[Elem]) -> bool) {
        let values = self.values(n);
        let k = self.vars.len();
        if k > 0 && values.is_empty() {
            return;
        }
        let mut idx = vec![0usize; k];
        let mut current: Vec<Elem> = idx.iter().map(|&i| values[i]).collect();
        loop {
            if visit(&current) {
                return;
            }
            // odometer step, last variable fastest
            let mut pos = k;
            loop {
                if pos == 0 {
                    return;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < values.len() {
                    current[pos] = values[idx[pos]];
                    break;
                }
                idx[pos] = 0;
                current[pos] = values[0];
            }
        }
    }

    /// Checks the axiom over all assignments of fully defined tables.
    pub fn check(&self, ctx: &Ctx<'_>) -> AxiomResult {
        let mut witness = None;
        self.for_each_assignment(ctx.alg.size(), |vals| {
            let e = self
                .eval_at(ctx, vals)
                .unwrap_or_else(|| panic!("axiom {} consulted an undefined cell", self.id));
            if e.ok {
                return false;
            }
            witness = Some(Witness {
                assignment: self
                    .vars
                    .iter()
                    .zip(vals)
                    .map(|(name, &v)| (name.to_string(), v))
                    .collect(),
                lhs: e.lhs,
                rhs: e.rhs,
            });
            true
        });
        AxiomResult {
            axiom: self.id.to_string(),
            holds: witness.is_none(),
            witness,
        }
    }

    /// True when some fully determined instance already fails.
    pub fn refuted(&self, ctx: &Ctx<'_>) -> bool {
        let mut refuted = false;
        self.for_each_assignment(ctx.alg.size(), |vals| {
            refuted = matches!(self.eval_at(ctx, vals), Some(e) if !e.ok);
            refuted
        });
        refuted
    }
}
