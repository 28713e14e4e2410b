//! Exhaustive search over unary tables and over small Kleene algebras.
//!
//! Expansion search walks table cells depth-first. After each assignment
//! every axiom instance whose cells are all fixed is evaluated, and a failing
//! instance prunes the whole subtree. Pruned subtrees are still counted, so a
//! finished search visits exactly `n^(n * tables)` candidates and an empty
//! result is a certificate that no expansion exists.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::algebra::{check_kleene, Elem, FiniteKleeneAlgebra};
use crate::engine::{Axiom, Ctx, UNDEF};
use crate::theories::{check_suite, equational_axioms, SuiteError, SuiteId, UnaryExpansion, UnaryOp};

/// Default cap on the a-priori candidate space of an expansion search.
pub const DEFAULT_SEARCH_BUDGET: u64 = 100_000_000;

/// Largest carrier [`enumerate_small_kleene_algebras`] supports.
pub const MAX_ENUMERATED_SIZE: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search space of {space} candidates exceeds budget {budget}")]
    BudgetExceeded { space: u128, budget: u64 },
    #[error("no tables to enumerate")]
    NoTables,
    #[error("algebra enumeration supports sizes up to {MAX_ENUMERATED_SIZE}, got {0}")]
    TooLarge(usize),
    #[error(transparent)]
    Suite(#[from] SuiteError),
}

#[derive(Clone, Debug)]
pub struct SearchSpec {
    /// Fixed tables; enumerated tables replace any table of the same name.
    pub base: UnaryExpansion,
    pub suite: SuiteId,
    pub tables: Vec<UnaryOp>,
    pub budget: u64,
}

impl SearchSpec {
    pub fn new(base: impl Into<UnaryExpansion>, suite: SuiteId, tables: &[UnaryOp]) -> Self {
        let mut tables = tables.to_vec();
        tables.dedup();
        SearchSpec {
            base: base.into(),
            suite,
            tables,
            budget: DEFAULT_SEARCH_BUDGET,
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    /// `n^(n * tables)`.
    pub fn space(&self) -> u128 {
        let n = self.base.size() as u128;
        let cells = (self.base.size() * self.tables.len()) as u32;
        n.checked_pow(cells).unwrap_or(u128::MAX)
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub found: Vec<UnaryExpansion>,
    /// Candidates accounted for, pruned ones included.
    pub visited: u128,
    pub space: u128,
}

impl SearchOutcome {
    pub fn is_exhaustive(&self) -> bool {
        self.visited == self.space
    }

    /// `visited/space`, e.g. `27/27`.
    pub fn certificate(&self) -> String {
        format!("{}/{}", self.visited, self.space)
    }
}

impl fmt::Display for SearchOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.found.is_empty() {
            write!(
                f,
                "NO EXPANSION EXISTS (exhaustive: {} candidates)",
                self.visited
            )
        } else {
            write!(
                f,
                "{} expansions found ({} candidates)",
                self.found.len(),
                self.certificate()
            )
        }
    }
}

struct Walker<'a> {
    spec: &'a SearchSpec,
    axioms: Option<Vec<Axiom>>,
    work: Vec<Vec<Elem>>,
    n: usize,
    visited: u128,
    found: Vec<UnaryExpansion>,
}

impl Walker<'_> {
    fn ctx(&self) -> Ctx<'_> {
        let mut ctx = Ctx::new(&self.spec.base.base);
        for (op, table) in self.spec.base.unary_tables() {
            if !self.spec.tables.contains(&op) {
                ctx = ctx.with_unary(op, table);
            }
        }
        for (op, table) in self.spec.tables.iter().zip(&self.work) {
            ctx = ctx.with_unary(*op, table);
        }
        if let Some(arrow) = self.spec.base.arrow() {
            ctx = ctx.with_arrow(arrow);
        }
        ctx
    }

    fn refuted(&self) -> bool {
        match &self.axioms {
            Some(axioms) => {
                let ctx = self.ctx();
                axioms.iter().any(|a| a.refuted(&ctx))
            }
            None => false,
        }
    }

    fn leaf(&mut self) -> Result<(), SearchError> {
        self.visited += 1;
        let mut exp = self.spec.base.clone();
        for (op, table) in self.spec.tables.iter().zip(&self.work) {
            exp.set_unary(*op, table.clone()).map_err(SuiteError::from)?;
        }
        let accept = match &self.axioms {
            Some(_) => true,
            None => check_suite(&exp, self.spec.suite)?.holds_all(),
        };
        if accept {
            self.found.push(exp);
        }
        Ok(())
    }

    fn walk(&mut self, cell: usize) -> Result<(), SearchError> {
        let total = self.work.len() * self.n;
        if self.refuted() {
            self.visited += (self.n as u128).pow((total - cell) as u32);
            return Ok(());
        }
        if cell == total {
            return self.leaf();
        }
        let (table, pos) = (cell / self.n, cell % self.n);
        for v in 0..self.n {
            self.work[table][pos] = v;
            self.walk(cell + 1)?;
        }
        self.work[table][pos] = UNDEF;
        Ok(())
    }
}

/// Enumerates every assignment of the requested tables and keeps those passing
/// the suite.
pub fn enumerate_expansions(spec: &SearchSpec) -> Result<SearchOutcome, SearchError> {
    if spec.tables.is_empty() {
        return Err(SearchError::NoTables);
    }
    let space = spec.space();
    if space > spec.budget as u128 {
        return Err(SearchError::BudgetExceeded {
            space,
            budget: spec.budget,
        });
    }
    let present = |op: UnaryOp| spec.base.has(op) || spec.tables.contains(&op);
    let axioms = equational_axioms(spec.suite, present, spec.base.arrow().is_some())?;
    if axioms.is_none() {
        // image-based suites report their own missing tables at the leaves;
        // surface that before walking
        if !present(UnaryOp::T) && !present(UnaryOp::A) && !present(UnaryOp::D) {
            return Err(SuiteError::MissingTable {
                table: "t".into(),
                suite: spec.suite.to_string(),
            }
            .into());
        }
    }
    let n = spec.base.size();
    let mut walker = Walker {
        spec,
        axioms,
        work: vec![vec![UNDEF; n]; spec.tables.len()],
        n,
        visited: 0,
        found: Vec::new(),
    };
    walker.walk(0)?;
    Ok(SearchOutcome {
        found: walker.found,
        visited: walker.visited,
        space,
    })
}

fn permutations(items: &[Elem]) -> Vec<Vec<Elem>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

fn encoding(alg: &FiniteKleeneAlgebra) -> Vec<Elem> {
    let mut code = alg.add_table().to_vec();
    code.extend_from_slice(alg.mul_table());
    code.extend_from_slice(alg.star_table());
    code
}

/// Least encoding over all relabelings fixing `0` and `1`.
fn canonical(alg: &FiniteKleeneAlgebra) -> FiniteKleeneAlgebra {
    let n = alg.size();
    let movable: Vec<Elem> = (0..n).filter(|&x| x != alg.zero() && x != alg.one()).collect();
    permutations(&movable)
        .into_iter()
        .map(|image| {
            let mut perm: Vec<Elem> = (0..n).collect();
            for (&from, &to) in movable.iter().zip(&image) {
                perm[from] = to;
            }
            alg.permuted(&perm)
        })
        .min_by_key(encoding)
        .expect("at least the identity relabeling")
}

/// Join tables of the partial orders on `0..n` with bottom `0` in which
/// every pair has a least upper bound.
fn semilattice_joins(n: usize) -> Vec<Vec<Elem>> {
    let pairs: Vec<(Elem, Elem)> = (1..n)
        .flat_map(|x| (1..n).map(move |y| (x, y)))
        .filter(|(x, y)| x != y)
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
            leq[x] = true; // 0 <= x
        }
        for (k, &(x, y)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                leq[x * n + y] = true;
            }
        }
        let le = |x: Elem, y: Elem| leq[x * n + y];
        let antisymmetric = (0..n).all(|x| (0..n).all(|y| x == y || !(le(x, y) && le(y, x))));
        let transitive = (0..n)
            .all(|x| (0..n).all(|y| !le(x, y) || (0..n).all(|z| !le(y, z) || le(x, z))));
        if !antisymmetric || !transitive {
            continue;
        }
        let mut join = Vec::with_capacity(n * n);
        let mut ok = true;
        'pairs: for x in 0..n {
            for y in 0..n {
                let upper: Vec<Elem> = (0..n).filter(|&u| le(x, u) && le(y, u)).collect();
                match upper.iter().find(|&&u| upper.iter().all(|&v| le(u, v))) {
                    Some(&lub) => join.push(lub),
                    None => {
                        ok = false;
                        break 'pairs;
                    }
                }
            }
        }
        if ok {
            out.push(join);
        }
    }
    out
}

fn all_tables(cells: usize, n: usize) -> impl Iterator<Item = Vec<Elem>> {
    let count = n.pow(cells as u32);
    (0..count).map(move |mut code| {
        let mut t = vec![0; cells];
        for cell in t.iter_mut().rev() {
            *cell = code % n;
            code /= n;
        }
        t
    })
}

/// Every Kleene algebra with at most `max_n` elements, up to isomorphism.
///
/// Candidates take `+` as the join of a semilattice order with bottom `0`,
/// fix the rows and columns of `0` and `1` in the `·` table, and range over
/// all remaining `·` cells and all `*` tables. Survivors of [`check_kleene`]
/// are reduced to a canonical relabeling fixing `0` and `1`.
pub fn enumerate_small_kleene_algebras(
    max_n: usize,
) -> Result<Vec<FiniteKleeneAlgebra>, SearchError> {
    if max_n > MAX_ENUMERATED_SIZE {
        return Err(SearchError::TooLarge(max_n));
    }
    let mut out = Vec::new();
    for n in 1..=max_n {
        if n == 1 {
            out.push(FiniteKleeneAlgebra::trivial());
            continue;
        }
        let free: Vec<(Elem, Elem)> = (2..n).flat_map(|x| (2..n).map(move |y| (x, y))).collect();
        let mut seen = BTreeSet::new();
        let mut found = Vec::new();
        for add in semilattice_joins(n) {
            for cells in all_tables(free.len(), n) {
                let mut mul = vec![0; n * n];
                for x in 0..n {
                    mul[n + x] = x;
                    mul[x * n + 1] = x;
                }
                for (&(x, y), &v) in free.iter().zip(&cells) {
                    mul[x * n + y] = v;
                }
                for star in all_tables(n, n) {
                    let alg = FiniteKleeneAlgebra::new("candidate", 0, 1, add.clone(), mul.clone(), star)
                        .expect("in-range tables");
                    if !check_kleene(&alg).holds_all() {
                        continue;
                    }
                    let canon = canonical(&alg);
                    if seen.insert(encoding(&canon)) {
                        found.push(canon);
                    }
                }
            }
        }
        found.sort_by_key(encoding);
        for (k, mut alg) in found.into_iter().enumerate() {
            alg.set_name(format!("ka{n}-{k}"));
            out.push(alg);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn no_antidomain_on_a3() {
        let spec = SearchSpec::new(fixtures::a3().base, SuiteId::Kad, &[UnaryOp::A]);
        let outcome = enumerate_expansions(&spec).unwrap();
        assert!(outcome.found.is_empty());
        assert_eq!(outcome.certificate(), "27/27");
        assert_eq!(
            outcome.to_string(),
            "NO EXPANSION EXISTS (exhaustive: 27 candidates)"
        );
    }

    #[test]
    fn kat1_expansions_of_a3_include_the_piecewise_one() {
        let spec = SearchSpec::new(fixtures::a3().base, SuiteId::Kat1, &[UnaryOp::T, UnaryOp::TPrime]);
        let outcome = enumerate_expansions(&spec).unwrap();
        assert!(outcome.is_exhaustive());
        assert_eq!(outcome.space, 729);
        assert!(outcome.found.iter().any(|e| {
            e.unary(UnaryOp::T) == Some(&[0, 1, 1][..])
                && e.unary(UnaryOp::TPrime) == Some(&[1, 0, 2][..])
        }));
    }

    #[test]
    fn trivial_algebra_has_one_expansion() {
        for suite in [SuiteId::Kat1, SuiteId::Skat, SuiteId::Kad] {
            let tables: &[UnaryOp] = if suite == SuiteId::Kad {
                &[UnaryOp::A]
            } else {
                &[UnaryOp::T, UnaryOp::TPrime]
            };
            let spec = SearchSpec::new(FiniteKleeneAlgebra::trivial(), suite, tables);
            let outcome = enumerate_expansions(&spec).unwrap();
            assert_eq!(outcome.found.len(), 1);
            assert_eq!(outcome.certificate(), "1/1");
        }
    }

    #[test]
    fn a3_domain_tables() {
        let d = |suite| {
            let spec = SearchSpec::new(fixtures::a3().base, suite, &[UnaryOp::D]);
            let outcome = enumerate_expansions(&spec).unwrap();
            assert!(outcome.is_exhaustive());
            outcome
                .found
                .iter()
                .map(|e| e.unary(UnaryOp::D).unwrap().to_vec())
                .collect::<Vec<_>>()
        };
        assert!(d(SuiteId::Predomain).contains(&vec![0, 1, 1]));
        assert!(!d(SuiteId::Domain).contains(&vec![0, 1, 1]));
    }

    #[test]
    fn image_based_suites_are_checked_at_leaves() {
        let spec = SearchSpec::new(
            fixtures::a3().base,
            SuiteId::BooleanTestImage,
            &[UnaryOp::T, UnaryOp::TPrime],
        );
        let outcome = enumerate_expansions(&spec).unwrap();
        assert_eq!(outcome.visited, 729);
        assert!(!outcome.found.is_empty());
    }

    #[test]
    fn budget_and_missing_tables() {
        let spec = SearchSpec::new(fixtures::a3().base, SuiteId::Kat1, &[UnaryOp::T, UnaryOp::TPrime])
            .with_budget(728);
        assert!(matches!(
            enumerate_expansions(&spec),
            Err(SearchError::BudgetExceeded { space: 729, budget: 728 })
        ));
        let spec = SearchSpec::new(fixtures::a3().base, SuiteId::Kat1, &[UnaryOp::T]);
        assert!(matches!(enumerate_expansions(&spec), Err(SearchError::Suite(_))));
        let spec = SearchSpec::new(fixtures::a3().base, SuiteId::Kat1, &[]);
        assert!(matches!(enumerate_expansions(&spec), Err(SearchError::NoTables)));
    }

    #[test]
    fn small_algebras() {
        let corpus = enumerate_small_kleene_algebras(2).unwrap();
        assert_eq!(corpus.len(), 2);
        let two = &corpus[1];
        assert_eq!(two.add_table(), &[0, 1, 1, 1]);
        assert_eq!(two.star_table(), &[1, 1]);
        assert!(enumerate_small_kleene_algebras(4).is_err());
    }

    #[test]
    fn semilattices_on_three_elements_are_the_two_chains() {
        assert_eq!(semilattice_joins(3).len(), 2);
        assert_eq!(semilattice_joins(2).len(), 1);
    }
}
