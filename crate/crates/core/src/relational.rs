//! Binary relations on a small finite set and the Kleene algebras they
//! generate.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{Elem, FiniteKleeneAlgebra};
use crate::theories::{UnaryExpansion, UnaryOp};

/// Largest supported base set; relations are packed into a `u64`.
pub const MAX_BASE: usize = 8;

/// Default limit on the size of a generated carrier.
pub const DEFAULT_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelError {
    #[error("base sizes differ: {0} vs {1}")]
    BaseMismatch(usize, usize),
    #[error("base size {0} unsupported (must be 1..={MAX_BASE})")]
    BaseSize(usize),
    #[error("pair ({0},{1}) out of range for base size {2}")]
    PairOutOfRange(usize, usize, usize),
    #[error("cannot parse relation: {0}")]
    Parse(String),
    #[error("closure exceeds cap of {0} relations")]
    CapExceeded(usize),
}

/// A relation on `{0, .., m-1}`; pair `(i, j)` is bit `i*m + j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    m: usize,
    bits: u64,
}

impl Relation {
    pub fn empty(m: usize) -> Result<Self, RelError> {
        if m == 0 || m > MAX_BASE {
            return Err(RelError::BaseSize(m));
        }
        Ok(Relation { m, bits: 0 })
    }

    pub fn identity(m: usize) -> Result<Self, RelError> {
        let mut r = Self::empty(m)?;
        for i in 0..m {
            r.insert(i, i);
        }
        Ok(r)
    }

    pub fn full(m: usize) -> Result<Self, RelError> {
        let mut r = Self::empty(m)?;
        for i in 0..m {
            for j in 0..m {
                r.insert(i, j);
            }
        }
        Ok(r)
    }

    pub fn from_pairs(m: usize, pairs: &[(usize, usize)]) -> Result<Self, RelError> {
        let mut r = Self::empty(m)?;
        for &(i, j) in pairs {
            if i >= m || j >= m {
                return Err(RelError::PairOutOfRange(i, j, m));
            }
            r.insert(i, j);
        }
        Ok(r)
    }

    pub fn base(&self) -> usize {
        self.m
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.bits >> (i * self.m + j) & 1 == 1
    }

    fn insert(&mut self, i: usize, j: usize) {
        self.bits |= 1 << (i * self.m + j);
    }

    fn row_nonempty(&self, i: usize) -> bool {
        let mask = ((1u64 << self.m) - 1) << (i * self.m);
        self.bits & mask != 0
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let m = self.m;
        (0..m * m)
            .filter(|&k| self.bits >> k & 1 == 1)
            .map(|k| (k / m, k % m))
            .collect()
    }

    pub fn is_subidentity(&self) -> bool {
        self.pairs().iter().all(|&(i, j)| i == j)
    }

    fn same_base(&self, other: &Relation) -> Result<(), RelError> {
        if self.m != other.m {
            return Err(RelError::BaseMismatch(self.m, other.m));
        }
        Ok(())
    }

    pub fn union(&self, other: &Relation) -> Result<Relation, RelError> {
        self.same_base(other)?;
        Ok(Relation {
            m: self.m,
            bits: self.bits | other.bits,
        })
    }

    /// Relational composition: `(i, k)` iff `(i, j)` in `self` and `(j, k)`
    /// in `other` for some `j`.
    pub fn compose(&self, other: &Relation) -> Result<Relation, RelError> {
        self.same_base(other)?;
        let m = self.m;
        let mut out = Relation { m, bits: 0 };
        for i in 0..m {
            for j in 0..m {
                if self.contains(i, j) {
                    let row = (other.bits >> (j * m)) & ((1u64 << m) - 1);
                    out.bits |= row << (i * m);
                }
            }
        }
        Ok(out)
    }

    /// Reflexive transitive closure, by squaring `id ∪ R` to a fixpoint.
    pub fn star(&self) -> Relation {
        let mut acc = Relation::identity(self.m)
            .expect("base already validated")
            .union(self)
            .expect("same base");
        loop {
            let next = acc.compose(&acc).expect("same base");
            if next == acc {
                return acc;
            }
            acc = next;
        }
    }

    /// Domain: `{(w, w) | exists v. (w, v) in R}`.
    pub fn t(&self) -> Relation {
        let mut out = Relation { m: self.m, bits: 0 };
        for i in 0..self.m {
            if self.row_nonempty(i) {
                out.insert(i, i);
            }
        }
        out
    }

    /// Antidomain: `{(w, w) | no v with (w, v) in R}`.
    pub fn tprime(&self) -> Relation {
        let mut out = Relation { m: self.m, bits: 0 };
        for i in 0..self.m {
            if !self.row_nonempty(i) {
                out.insert(i, i);
            }
        }
        out
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .pairs()
            .into_iter()
            .map(|(i, j)| format!("({i},{j})"))
            .collect();
        write!(f, "rel {} {{{}}}", self.m, pairs.join(","))
    }
}

impl FromStr for Relation {
    type Err = RelError;

    /// Parses `rel <m> {(i,j), ...}`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: &str| RelError::Parse(format!("{msg} in `{s}`"));
        let rest = s.trim().strip_prefix("rel").ok_or_else(|| bad("expected `rel`"))?;
        let (m, body) = rest
            .trim_start()
            .split_once('{')
            .ok_or_else(|| bad("expected `{`"))?;
        let m: usize = m.trim().parse().map_err(|_| bad("bad base size"))?;
        let body = body
            .trim_end()
            .strip_suffix('}')
            .ok_or_else(|| bad("expected `}`"))?;
        let cleaned: String = body.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pairs = Vec::new();
        if !cleaned.is_empty() {
            let inner = cleaned
                .strip_prefix('(')
                .and_then(|c| c.strip_suffix(')'))
                .ok_or_else(|| bad("expected pairs `(i,j)`"))?;
            for pair in inner.split("),(") {
                let (i, j) = pair.split_once(',').ok_or_else(|| bad("expected `i,j`"))?;
                let i = i.parse().map_err(|_| bad("bad index"))?;
                let j = j.parse().map_err(|_| bad("bad index"))?;
                pairs.push((i, j));
            }
        }
        Relation::from_pairs(m, &pairs)
    }
}

/// A finite relational Kleene algebra tabulated with its domain (`t`) and
/// antidomain (`t'`) operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationalModel {
    pub base: usize,
    /// Carrier in increasing bit order; index 0 is the empty relation.
    pub relations: Vec<Relation>,
    pub expansion: UnaryExpansion,
}

impl RelationalModel {
    pub fn index_of(&self, r: &Relation) -> Option<Elem> {
        self.relations.binary_search(r).ok()
    }

    pub fn relation(&self, e: Elem) -> Relation {
        self.relations[e]
    }

    pub fn subidentities(&self) -> Vec<Elem> {
        (0..self.relations.len())
            .filter(|&e| self.relations[e].is_subidentity())
            .collect()
    }
}

/// Closes `generators ∪ {∅, id}` under union, composition, star, `t` and
/// `t'`, then tabulates the result.
pub fn generate_relational_model(
    m: usize,
    generators: &[Relation],
    cap: usize,
) -> Result<RelationalModel, RelError> {
    let mut elems = vec![Relation::empty(m)?, Relation::identity(m)?];
    for g in generators {
        if g.m != m {
            return Err(RelError::BaseMismatch(m, g.m));
        }
        elems.push(*g);
    }
    elems.sort();
    elems.dedup();
    let mut seen: HashMap<u64, ()> = elems.iter().map(|r| (r.bits, ())).collect();
    if elems.len() > cap {
        return Err(RelError::CapExceeded(cap));
    }

    let mut i = 0;
    while i < elems.len() {
        let e = elems[i];
        let mut fresh = vec![e.star(), e.t(), e.tprime()];
        for &other in &elems[..=i] {
            fresh.push(e.union(&other)?);
            fresh.push(e.compose(&other)?);
            fresh.push(other.compose(&e)?);
        }
        for r in fresh {
            if seen.insert(r.bits, ()).is_none() {
                elems.push(r);
                if elems.len() > cap {
                    return Err(RelError::CapExceeded(cap));
                }
            }
        }
        i += 1;
    }

    elems.sort();
    let index: HashMap<u64, Elem> = elems.iter().enumerate().map(|(k, r)| (r.bits, k)).collect();
    let idx = |r: Relation| index[&r.bits];
    let n = elems.len();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for x in &elems {
        for y in &elems {
            add.push(idx(x.union(y)?));
            mul.push(idx(x.compose(y)?));
        }
    }
    let star = elems.iter().map(|r| idx(r.star())).collect();
    let alg = FiniteKleeneAlgebra::new(
        format!("rel-m{m}"),
        idx(Relation::empty(m)?),
        idx(Relation::identity(m)?),
        add,
        mul,
        star,
    )
    .expect("closure tables are in range");
    let expansion = UnaryExpansion::new(alg)
        .with_unary(UnaryOp::T, elems.iter().map(|r| idx(r.t())).collect())
        .and_then(|e| e.with_unary(UnaryOp::TPrime, elems.iter().map(|r| idx(r.tprime())).collect()))
        .expect("closure tables are in range");
    Ok(RelationalModel {
        base: m,
        relations: elems,
        expansion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theories::{check_suite, SuiteId};

    fn rel(m: usize, pairs: &[(usize, usize)]) -> Relation {
        Relation::from_pairs(m, pairs).unwrap()
    }

    #[test]
    fn star_and_compose() {
        let r = rel(2, &[(0, 1)]);
        assert_eq!(r.star(), rel(2, &[(0, 0), (1, 1), (0, 1)]));
        assert_eq!(r.compose(&r).unwrap(), Relation::empty(2).unwrap());
        let chain = rel(3, &[(0, 1), (1, 2)]);
        assert_eq!(
            chain.star(),
            rel(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (0, 2)])
        );
    }

    #[test]
    fn domain_and_antidomain() {
        let r = rel(2, &[(0, 1)]);
        assert_eq!(r.t(), rel(2, &[(0, 0)]));
        assert_eq!(r.tprime(), rel(2, &[(1, 1)]));
        let e = Relation::empty(3).unwrap();
        assert_eq!(e.t(), e);
        assert_eq!(e.tprime(), Relation::identity(3).unwrap());
        let f = Relation::full(3).unwrap();
        assert_eq!(f.t(), Relation::identity(3).unwrap());
        assert_eq!(f.tprime(), e);
    }

    #[test]
    fn base_mismatch() {
        let a = Relation::empty(2).unwrap();
        let b = Relation::empty(3).unwrap();
        assert_eq!(a.union(&b), Err(RelError::BaseMismatch(2, 3)));
        assert_eq!(a.compose(&b), Err(RelError::BaseMismatch(2, 3)));
        assert!(generate_relational_model(2, &[b], DEFAULT_CAP).is_err());
    }

    #[test]
    fn text_round_trip() {
        let r = rel(3, &[(0, 1), (2, 2)]);
        assert_eq!(r.to_string(), "rel 3 {(0,1),(2,2)}");
        assert_eq!("rel 3 {(0,1), (2,2)}".parse::<Relation>().unwrap(), r);
        assert_eq!("rel 2 {}".parse::<Relation>().unwrap(), Relation::empty(2).unwrap());
        assert!("rel 2 {(0,2)}".parse::<Relation>().is_err());
        assert!("rel 2 (0,1)".parse::<Relation>().is_err());
    }

    #[test]
    fn empty_generators_give_two_elements() {
        let model = generate_relational_model(2, &[], DEFAULT_CAP).unwrap();
        assert_eq!(model.relations.len(), 2);
        let exp = &model.expansion;
        assert_eq!(exp.unary(UnaryOp::T), Some(&[0, 1][..]));
        assert!(check_suite(exp, SuiteId::Kat1).unwrap().holds_all());
    }

    #[test]
    fn one_point_base() {
        let model = generate_relational_model(1, &[], DEFAULT_CAP).unwrap();
        assert_eq!(model.relations.len(), 2);
        for suite in [SuiteId::Kleene, SuiteId::Kat1, SuiteId::Skat] {
            assert!(check_suite(&model.expansion, suite).unwrap().holds_all());
        }
    }

    #[test]
    fn single_edge_closure() {
        let model = generate_relational_model(2, &[rel(2, &[(0, 1)])], DEFAULT_CAP).unwrap();
        // ∅, {00}, {01}, {00,01}, {11}, id, {01,11}, id ∪ {01}
        assert_eq!(model.relations.len(), 8);
        assert_eq!(model.subidentities().len(), 4);
        for suite in [SuiteId::Kleene, SuiteId::Skat] {
            let report = check_suite(&model.expansion, suite).unwrap();
            assert!(report.holds_all(), "{report}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = rel(2, &[(0, 1)]);
        assert_eq!(generate_relational_model(2, &[g], 5), Err(RelError::CapExceeded(5)));
    }
}
