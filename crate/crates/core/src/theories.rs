//! Axiom suites for the classes built on top of Kleene algebra: predomain and
//! domain operators, antidomain (KAD), one-sorted tests (`kat1`), their strong
//! extension (`skat`), residuated variants, and the Boolean algebra of tests.
//!
//! Every suite is checked by exhaustive enumeration over the finite carrier.
//! Inequalities `u <= v` are evaluated as `u + v = v`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{self, check_len, check_range, Elem, FiniteKleeneAlgebra, ModelError};
use crate::engine::{Axiom, Ctx, Domain, Eval, UNDEF};
use crate::report::AxiomReport;

/// Names of the unary operator tables an expansion may carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum UnaryOp {
    T,
    TPrime,
    A,
    D,
}

impl UnaryOp {
    pub const COUNT: usize = 4;
    pub const ALL: [UnaryOp; 4] = [UnaryOp::T, UnaryOp::TPrime, UnaryOp::A, UnaryOp::D];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn as_str(self) -> &'static str {
        match self {
            UnaryOp::T => "t",
            UnaryOp::TPrime => "t'",
            UnaryOp::A => "a",
            UnaryOp::D => "d",
        }
    }
}

impl fmt::Display for UnaryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for UnaryOp {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        UnaryOp::ALL
            .into_iter()
            .find(|op| op.as_str() == s)
            .ok_or_else(|| format!("unknown unary operator `{s}` (expected t, t', a or d)"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("missing table {table} for suite {suite}")]
    MissingTable { table: String, suite: String },
    #[error("negation leaves the test set: {x} maps to {value}")]
    NegLeavesTests { x: Elem, value: Elem },
    #[error("test set element {0} has no negation")]
    NegUndefined(Elem),
    #[error(transparent)]
    Model(#[from] ModelError),
}

fn missing(table: impl fmt::Display, suite: impl fmt::Display) -> SuiteError {
    SuiteError::MissingTable {
        table: table.to_string(),
        suite: suite.to_string(),
    }
}

/// A Kleene algebra together with unary tables and an optional residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnaryExpansion {
    pub base: FiniteKleeneAlgebra,
    tables: BTreeMap<UnaryOp, Vec<Elem>>,
    arrow: Option<Vec<Elem>>,
}

impl From<FiniteKleeneAlgebra> for UnaryExpansion {
    fn from(base: FiniteKleeneAlgebra) -> Self {
        UnaryExpansion::new(base)
    }
}

impl UnaryExpansion {
    pub fn new(base: FiniteKleeneAlgebra) -> Self {
        UnaryExpansion {
            base,
            tables: BTreeMap::new(),
            arrow: None,
        }
    }

    pub fn size(&self) -> usize {
        self.base.size()
    }

    /// Adds or replaces a unary table after validating its shape and range.
    pub fn set_unary(&mut self, op: UnaryOp, table: Vec<Elem>) -> Result<(), ModelError> {
        check_len(op.as_str(), &table, self.size())?;
        check_range(op.as_str(), &table, self.size())?;
        self.tables.insert(op, table);
        Ok(())
    }

    pub fn with_unary(mut self, op: UnaryOp, table: Vec<Elem>) -> Result<Self, ModelError> {
        self.set_unary(op, table)?;
        Ok(self)
    }

    pub fn remove_unary(&mut self, op: UnaryOp) -> Option<Vec<Elem>> {
        self.tables.remove(&op)
    }

    /// Sets the row-major `n*n` residual table, `arrow[x*n + y] = x -> y`.
    pub fn set_arrow(&mut self, table: Vec<Elem>) -> Result<(), ModelError> {
        let n = self.size();
        check_len("arrow", &table, n * n)?;
        check_range("arrow", &table, n)?;
        self.arrow = Some(table);
        Ok(())
    }

    pub fn with_arrow(mut self, table: Vec<Elem>) -> Result<Self, ModelError> {
        self.set_arrow(table)?;
        Ok(self)
    }

    pub fn unary(&self, op: UnaryOp) -> Option<&[Elem]> {
        self.tables.get(&op).map(Vec::as_slice)
    }

    pub fn apply(&self, op: UnaryOp, x: Elem) -> Option<Elem> {
        self.unary(op).map(|t| t[x])
    }

    pub fn arrow(&self) -> Option<&[Elem]> {
        self.arrow.as_deref()
    }

    pub fn unary_tables(&self) -> impl Iterator<Item = (UnaryOp, &[Elem])> {
        self.tables.iter().map(|(&op, t)| (op, t.as_slice()))
    }

    pub fn has(&self, op: UnaryOp) -> bool {
        self.tables.contains_key(&op)
    }

    pub fn require(&self, op: UnaryOp, suite: impl fmt::Display) -> Result<&[Elem], SuiteError> {
        self.unary(op).ok_or_else(|| missing(op, suite))
    }

    /// Evaluation context over all tables of this expansion.
    pub fn ctx(&self) -> Ctx<'_> {
        let mut ctx = Ctx::new(&self.base);
        for (op, table) in self.unary_tables() {
            ctx = ctx.with_unary(op, table);
        }
        if let Some(arrow) = self.arrow() {
            ctx = ctx.with_arrow(arrow);
        }
        ctx
    }
}

/// Stable identifiers of the axiom suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuiteId {
    /// `semiring` and `star` together.
    Kleene,
    Semiring,
    Star,
    Predomain,
    Domain,
    Kad,
    Kat1,
    Skat,
    ResiduatedKa,
    ResiduatedKat1,
    BooleanTestImage,
    TwoSortedKat,
}

impl SuiteId {
    pub const ALL: [SuiteId; 12] = [
        SuiteId::Kleene,
        SuiteId::Semiring,
        SuiteId::Star,
        SuiteId::Predomain,
        SuiteId::Domain,
        SuiteId::Kad,
        SuiteId::Kat1,
        SuiteId::Skat,
        SuiteId::ResiduatedKa,
        SuiteId::ResiduatedKat1,
        SuiteId::BooleanTestImage,
        SuiteId::TwoSortedKat,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteId::Kleene => "kleene",
            SuiteId::Semiring => "semiring",
            SuiteId::Star => "star",
            SuiteId::Predomain => "predomain",
            SuiteId::Domain => "domain",
            SuiteId::Kad => "kad",
            SuiteId::Kat1 => "kat1",
            SuiteId::Skat => "skat",
            SuiteId::ResiduatedKa => "residuated-ka",
            SuiteId::ResiduatedKat1 => "residuated-kat1",
            SuiteId::BooleanTestImage => "boolean-test-image",
            SuiteId::TwoSortedKat => "two-sorted-kat",
        }
    }

    /// Suites whose variables range over a set computed from the tables
    /// themselves, so they cannot be evaluated on partial tables.
    pub fn is_image_based(self) -> bool {
        matches!(self, SuiteId::BooleanTestImage | SuiteId::TwoSortedKat)
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = SuiteId::ALL.iter().map(|id| id.as_str()).collect();
                format!("unknown suite `{s}` (expected one of: {})", known.join(", "))
            })
    }
}

/// Which operator plays the role of a domain operator `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomainSource {
    Table(UnaryOp),
    /// `d(x) := a(a(x))`
    DoubleAntidomain,
}

impl DomainSource {
    fn apply(self, c: &Ctx<'_>, x: Elem) -> Option<Elem> {
        match self {
            DomainSource::Table(op) => c.unary(op, x),
            DomainSource::DoubleAntidomain => c.unary(UnaryOp::A, c.unary(UnaryOp::A, x)?),
        }
    }
}

const X: &[&str] = &["x"];
const XY: &[&str] = &["x", "y"];
const XYZ: &[&str] = &["x", "y", "z"];

/// Predomain laws for `d`, plus locality when `with_locality` is set.
///
/// Axiom ids: `d:left_preserver`, `d:sublocality`, `d:negcone`, `d:0`,
/// `d:additivity`, and `d:locality`.
pub fn domain_axioms(src: DomainSource, with_locality: bool) -> Vec<Axiom> {
    let mut axioms = vec![
        Axiom::new("d:left_preserver", X, move |c, v| {
            let x = v[0];
            Some(c.le(x, c.mul(src.apply(c, x)?, x)))
        }),
        Axiom::new("d:sublocality", XY, move |c, v| {
            let (x, y) = (v[0], v[1]);
            let lhs = src.apply(c, c.mul(x, y))?;
            let rhs = src.apply(c, c.mul(x, src.apply(c, y)?))?;
            Some(c.le(lhs, rhs))
        }),
        Axiom::new("d:negcone", X, move |c, v| Some(c.le(src.apply(c, v[0])?, c.one()))),
        Axiom::new("d:0", &[], move |c, _| Some(c.eq(src.apply(c, c.zero())?, c.zero()))),
        Axiom::new("d:additivity", XY, move |c, v| {
            let (x, y) = (v[0], v[1]);
            let lhs = src.apply(c, c.add(x, y))?;
            Some(c.eq(lhs, c.add(src.apply(c, x)?, src.apply(c, y)?)))
        }),
    ];
    if with_locality {
        axioms.push(Axiom::new("d:locality", XY, move |c, v| {
            let (x, y) = (v[0], v[1]);
            let lhs = src.apply(c, c.mul(x, y))?;
            let rhs = src.apply(c, c.mul(x, src.apply(c, y)?))?;
            Some(c.eq(lhs, rhs))
        }));
    }
    axioms
}

/// Locality of `t`: `t(x·t(y)) = t(x·y)`.
pub fn t_locality_axiom() -> Axiom {
    Axiom::new("t:locality", XY, |c, v| {
        let (x, y) = (v[0], v[1]);
        let t = |e| c.unary(UnaryOp::T, e);
        Some(c.eq(t(c.mul(x, t(y)?))?, t(c.mul(x, y))?))
    })
}

/// Antidomain laws. Axiom ids: `a:annihilate`, `a:dni`, `a:lem`.
pub fn kad_axioms() -> Vec<Axiom> {
    let a = |c: &Ctx<'_>, x| c.unary(UnaryOp::A, x);
    vec![
        Axiom::new("a:annihilate", X, move |c, v| {
            let x = v[0];
            Some(c.eq(c.mul(a(c, x)?, x), c.zero()))
        }),
        Axiom::new("a:dni", XY, move |c, v| {
            let (x, y) = (v[0], v[1]);
            let lhs = a(c, c.mul(x, y))?;
            let rhs = a(c, c.mul(x, a(c, a(c, y)?)?))?;
            Some(c.le(lhs, rhs))
        }),
        Axiom::new("a:lem", X, move |c, v| {
            let ax = a(c, v[0])?;
            Some(c.eq(c.add(ax, a(c, ax)?), c.one()))
        }),
    ]
}

fn t(c: &Ctx<'_>, x: Elem) -> Option<Elem> {
    c.unary(UnaryOp::T, x)
}

fn tp(c: &Ctx<'_>, x: Elem) -> Option<Elem> {
    c.unary(UnaryOp::TPrime, x)
}

/// The six laws on `t` alone shared by `kat1` and `residuated-kat1`.
fn t_core_axioms() -> Vec<Axiom> {
    vec![
        Axiom::new("t:0", &[], |c, _| Some(c.eq(t(c, c.zero())?, c.zero()))),
        Axiom::new("t:1", &[], |c, _| Some(c.eq(t(c, c.one())?, c.one()))),
        Axiom::new("t:weakly_additive", XY, |c, v| {
            let s = c.add(t(c, v[0])?, t(c, v[1])?);
            Some(c.eq(t(c, s)?, s))
        }),
        Axiom::new("t:multi", XY, |c, v| {
            let p = c.mul(t(c, v[0])?, t(c, v[1])?);
            Some(c.eq(t(c, p)?, p))
        }),
        Axiom::new("t:idem", X, |c, v| {
            let tx = t(c, v[0])?;
            Some(c.eq(c.mul(tx, tx), tx))
        }),
        Axiom::new("t:negcone", X, |c, v| Some(c.le(t(c, v[0])?, c.one()))),
    ]
}

/// The nine one-sorted test axioms, `t:0` through `t:cc`.
pub fn kat1_axioms() -> Vec<Axiom> {
    let mut axioms = t_core_axioms();
    axioms.extend([
        Axiom::new("t:lem", X, |c, v| {
            let tx = t(c, v[0])?;
            Some(c.le(c.one(), c.add(tp(c, tx)?, tx)))
        }),
        // `t'(t(x)) t(x) <= 0` with 0 the bottom element
        Axiom::new("t:ecq", X, |c, v| {
            let tx = t(c, v[0])?;
            Some(c.eq(c.mul(tp(c, tx)?, tx), c.zero()))
        }),
        Axiom::new("t:cc", X, |c, v| {
            let tpt = tp(c, t(c, v[0])?)?;
            Some(c.eq(tpt, t(c, tpt)?))
        }),
    ]);
    axioms
}

/// Additivity, left preservation, least left preservation and sublocality.
pub fn skat_extra_axioms() -> Vec<Axiom> {
    vec![
        Axiom::new("t:additivity", XY, |c, v| {
            let (x, y) = (v[0], v[1]);
            Some(c.eq(t(c, c.add(x, y))?, c.add(t(c, x)?, t(c, y)?)))
        }),
        Axiom::new("t:left_preserver", X, |c, v| {
            let x = v[0];
            Some(c.le(x, c.mul(t(c, x)?, x)))
        }),
        Axiom::new("t:least_left_preserver", XY, |c, v| {
            let tx = t(c, v[0])?;
            Some(c.le(t(c, c.mul(tx, v[1]))?, tx))
        }),
        Axiom::new("t:sublocality", XY, |c, v| {
            let (x, y) = (v[0], v[1]);
            Some(c.le(t(c, c.mul(x, y))?, t(c, c.mul(x, t(c, y)?))?))
        }),
    ]
}

/// `x·y <= z  iff  x <= y -> z`, reported with `x·y` and `y -> z` as sides.
pub fn residuation_axiom() -> Axiom {
    Axiom::new("r:residuation", XYZ, |c, v| {
        let (x, y, z) = (v[0], v[1], v[2]);
        let xy = c.mul(x, y);
        let yz = c.arrow(y, z)?;
        Some(Eval {
            lhs: xy,
            rhs: yz,
            ok: c.leq(xy, z) == c.leq(x, yz),
        })
    })
}

/// `t(x) -> 0` composed with `t`, the residuated complement of a test.
fn residual_complement(c: &Ctx<'_>, x: Elem) -> Option<Elem> {
    let tx = t(c, x)?;
    t(c, c.arrow(tx, c.zero())?)
}

/// `t:0`..`t:negcone` plus `r:lem` and `r:ecq`.
pub fn residuated_kat1_axioms() -> Vec<Axiom> {
    let mut axioms = t_core_axioms();
    axioms.extend([
        Axiom::new("r:lem", X, |c, v| {
            let tx = t(c, v[0])?;
            Some(c.le(c.one(), c.add(residual_complement(c, v[0])?, tx)))
        }),
        Axiom::new("r:ecq", X, |c, v| {
            let tx = t(c, v[0])?;
            Some(c.eq(c.mul(residual_complement(c, v[0])?, tx), c.zero()))
        }),
    ]);
    axioms
}

/// How complements are supplied to [`boolean_algebra_laws`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Complement {
    /// Dense table of length `n`; only entries for members are consulted.
    Given(Vec<Elem>),
    /// No table: require some member to be a complement.
    Exists,
}

/// Laws making `members` a bounded distributive lattice under `+` and `·`
/// that is closed under the algebra's operations and complemented.
///
/// Axiom ids: `contains-0`, `contains-1`, `closed-add`, `closed-mul`,
/// `closed-complement` (given complements only), `join-assoc`, `join-comm`,
/// `join-idem`, `meet-assoc`, `meet-comm`, `meet-idem`, `absorb-join`,
/// `absorb-meet`, `distrib-meet`, `distrib-join`, `bounded-top`,
/// `bounded-bottom`, then `complement-meet` and `complement-join` for given
/// complements or `complemented` otherwise.
pub fn boolean_algebra_laws(members: Vec<Elem>, complement: Complement) -> Vec<Axiom> {
    let mut mask = Vec::new();
    for &m in &members {
        if mask.len() <= m {
            mask.resize(m + 1, false);
        }
        mask[m] = true;
    }
    let member = move |x: Elem| mask.get(x).copied().unwrap_or(false);
    let dom = Domain::Subset(members.clone());

    let closure = |id, f: fn(&Ctx<'_>, Elem, Elem) -> Elem| {
        let member = member.clone();
        Axiom::new(id, XY, move |c, v| {
            let r = f(c, v[0], v[1]);
            Some(Eval {
                lhs: r,
                rhs: r,
                ok: member(r),
            })
        })
    };
    let contains = |id, pick: fn(&Ctx<'_>) -> Elem| {
        let member = member.clone();
        Axiom::new(id, &[], move |c, _| {
            let e = pick(c);
            Some(Eval {
                lhs: e,
                rhs: e,
                ok: member(e),
            })
        })
    };

    let mut laws = vec![
        contains("contains-0", |c| c.zero()),
        contains("contains-1", |c| c.one()),
        closure("closed-add", |c, x, y| c.add(x, y)),
        closure("closed-mul", |c, x, y| c.mul(x, y)),
    ];
    if let Complement::Given(neg) = &complement {
        let neg = neg.clone();
        let member = member.clone();
        laws.push(Axiom::new("closed-complement", X, move |_, v| {
            let r = neg[v[0]];
            Some(Eval {
                lhs: v[0],
                rhs: r,
                ok: r != UNDEF && member(r),
            })
        }));
    }
    laws.extend([
        Axiom::new("join-assoc", XYZ, |c, v| {
            let (x, y, z) = (v[0], v[1], v[2]);
            Some(c.eq(c.add(x, c.add(y, z)), c.add(c.add(x, y), z)))
        }),
        Axiom::new("join-comm", XY, |c, v| Some(c.eq(c.add(v[0], v[1]), c.add(v[1], v[0])))),
        Axiom::new("join-idem", X, |c, v| Some(c.eq(c.add(v[0], v[0]), v[0]))),
        Axiom::new("meet-assoc", XYZ, |c, v| {
            let (x, y, z) = (v[0], v[1], v[2]);
            Some(c.eq(c.mul(x, c.mul(y, z)), c.mul(c.mul(x, y), z)))
        }),
        Axiom::new("meet-comm", XY, |c, v| Some(c.eq(c.mul(v[0], v[1]), c.mul(v[1], v[0])))),
        Axiom::new("meet-idem", X, |c, v| Some(c.eq(c.mul(v[0], v[0]), v[0]))),
        Axiom::new("absorb-join", XY, |c, v| {
            let (x, y) = (v[0], v[1]);
            Some(c.eq(c.add(x, c.mul(x, y)), x))
        }),
        Axiom::new("absorb-meet", XY, |c, v| {
            let (x, y) = (v[0], v[1]);
            Some(c.eq(c.mul(x, c.add(x, y)), x))
        }),
        Axiom::new("distrib-meet", XYZ, |c, v| {
            let (x, y, z) = (v[0], v[1], v[2]);
            Some(c.eq(c.mul(x, c.add(y, z)), c.add(c.mul(x, y), c.mul(x, z))))
        }),
        Axiom::new("distrib-join", XYZ, |c, v| {
            let (x, y, z) = (v[0], v[1], v[2]);
            Some(c.eq(c.add(x, c.mul(y, z)), c.mul(c.add(x, y), c.add(x, z))))
        }),
        Axiom::new("bounded-top", X, |c, v| {
            let x = v[0];
            Some(Eval {
                lhs: c.mul(x, c.one()),
                rhs: c.add(x, c.one()),
                ok: c.mul(x, c.one()) == x && c.add(x, c.one()) == c.one(),
            })
        }),
        Axiom::new("bounded-bottom", X, |c, v| {
            let x = v[0];
            Some(Eval {
                lhs: c.add(x, c.zero()),
                rhs: c.mul(x, c.zero()),
                ok: c.add(x, c.zero()) == x && c.mul(x, c.zero()) == c.zero(),
            })
        }),
    ]);
    match complement {
        Complement::Given(neg) => {
            let neg2 = neg.clone();
            laws.push(Axiom::new("complement-meet", X, move |c, v| {
                let x = v[0];
                let nx = neg[x];
                if nx == UNDEF {
                    return Some(Eval { lhs: x, rhs: x, ok: false });
                }
                Some(c.eq(c.mul(nx, x), c.zero()))
            }));
            laws.push(Axiom::new("complement-join", X, move |c, v| {
                let x = v[0];
                let nx = neg2[x];
                if nx == UNDEF {
                    return Some(Eval { lhs: x, rhs: x, ok: false });
                }
                Some(c.eq(c.add(x, nx), c.one()))
            }));
        }
        Complement::Exists => {
            laws.push(Axiom::new("complemented", X, move |c, v| {
                let x = v[0];
                let ok = members.iter().any(|&y| {
                    c.mul(x, y) == c.zero() && c.mul(y, x) == c.zero() && c.add(x, y) == c.one()
                });
                Some(Eval { lhs: x, rhs: x, ok })
            }));
        }
    }
    laws.into_iter().map(|a| a.over(dom.clone())).collect()
}

/// Equational axioms of `suite`, or `None` for the image-based suites.
///
/// `present` reports which unary tables exist and `has_arrow` whether a
/// residual table exists.
pub fn equational_axioms(
    suite: SuiteId,
    present: impl Fn(UnaryOp) -> bool,
    has_arrow: bool,
) -> Result<Option<Vec<Axiom>>, SuiteError> {
    let need = |op: UnaryOp| if present(op) { Ok(()) } else { Err(missing(op, suite)) };
    let need_arrow = || if has_arrow { Ok(()) } else { Err(missing("arrow", suite)) };
    let domain_src = || {
        if present(UnaryOp::D) {
            Ok(DomainSource::Table(UnaryOp::D))
        } else if present(UnaryOp::A) {
            Ok(DomainSource::DoubleAntidomain)
        } else {
            Err(missing(UnaryOp::D, suite))
        }
    };
    let axioms = match suite {
        SuiteId::Kleene => {
            let mut axioms = algebra::semiring_axioms();
            axioms.extend(algebra::star_axioms());
            axioms
        }
        SuiteId::Semiring => algebra::semiring_axioms(),
        SuiteId::Star => algebra::star_axioms(),
        SuiteId::Predomain => domain_axioms(domain_src()?, false),
        SuiteId::Domain => domain_axioms(domain_src()?, true),
        SuiteId::Kad => {
            need(UnaryOp::A)?;
            kad_axioms()
        }
        SuiteId::Kat1 => {
            need(UnaryOp::T)?;
            need(UnaryOp::TPrime)?;
            kat1_axioms()
        }
        SuiteId::Skat => {
            need(UnaryOp::T)?;
            need(UnaryOp::TPrime)?;
            let mut axioms = kat1_axioms();
            axioms.extend(skat_extra_axioms());
            axioms
        }
        SuiteId::ResiduatedKa => {
            need_arrow()?;
            vec![residuation_axiom()]
        }
        SuiteId::ResiduatedKat1 => {
            need(UnaryOp::T)?;
            need_arrow()?;
            residuated_kat1_axioms()
        }
        SuiteId::BooleanTestImage | SuiteId::TwoSortedKat => return Ok(None),
    };
    Ok(Some(axioms))
}

/// Checks `suite` on `exp` by exhaustive enumeration.
pub fn check_suite(exp: &UnaryExpansion, suite: SuiteId) -> Result<AxiomReport, SuiteError> {
    match suite {
        SuiteId::BooleanTestImage => check_boolean_test_image(exp),
        SuiteId::TwoSortedKat => {
            let tests = TestAlgebra::from_expansion(exp)?;
            let mut report = check_two_sorted_kat(&exp.base, &tests);
            report.suite = suite.to_string();
            Ok(report)
        }
        _ => {
            let axioms = equational_axioms(suite, |op| exp.has(op), exp.arrow().is_some())?
                .expect("equational suite");
            Ok(algebra::run(suite.as_str(), &exp.ctx(), &axioms))
        }
    }
}

/// Runs an arbitrary list of axioms against `exp`.
pub fn check_axioms(exp: &UnaryExpansion, suite: &str, axioms: &[Axiom]) -> AxiomReport {
    algebra::run(suite, &exp.ctx(), axioms)
}

/// Image of a unary table, sorted and deduplicated.
pub fn test_image(exp: &UnaryExpansion, op: UnaryOp) -> Result<Vec<Elem>, SuiteError> {
    let table = exp.require(op, "test-image")?;
    let mut image = table.to_vec();
    image.sort_unstable();
    image.dedup();
    Ok(image)
}

/// Checks that the image of the test operator forms a Boolean algebra.
///
/// The test operator is `t` when present (complemented by `t'` if present),
/// otherwise `d := a∘a` complemented by `a`, otherwise a bare `d`. Without a
/// complement table, complements are searched for inside the image.
pub fn check_boolean_test_image(exp: &UnaryExpansion) -> Result<AxiomReport, SuiteError> {
    let suite = SuiteId::BooleanTestImage;
    let n = exp.size();
    let (image_table, complement): (Vec<Elem>, Complement) =
        if let Some(t) = exp.unary(UnaryOp::T) {
            let comp = match exp.unary(UnaryOp::TPrime) {
                Some(tp) => Complement::Given(tp.to_vec()),
                None => Complement::Exists,
            };
            (t.to_vec(), comp)
        } else if let Some(a) = exp.unary(UnaryOp::A) {
            ((0..n).map(|x| a[a[x]]).collect(), Complement::Given(a.to_vec()))
        } else if let Some(d) = exp.unary(UnaryOp::D) {
            (d.to_vec(), Complement::Exists)
        } else {
            return Err(missing(UnaryOp::T, suite));
        };
    let mut image = image_table;
    image.sort_unstable();
    image.dedup();
    let laws = boolean_algebra_laws(image, complement);
    Ok(algebra::run(suite.as_str(), &Ctx::new(&exp.base), &laws))
}

/// A candidate test subalgebra `B` with its negation, for two-sorted KAT.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TestAlgebra {
    members: Vec<Elem>,
    /// Dense length-`n` table; [`UNDEF`] outside `members`.
    neg: Vec<Elem>,
}

impl TestAlgebra {
    /// Builds `B` from `(b, neg(b))` pairs. Fails if a negation leaves `B`.
    pub fn new(alg: &FiniteKleeneAlgebra, pairs: &[(Elem, Elem)]) -> Result<Self, SuiteError> {
        let n = alg.size();
        let mut members: Vec<Elem> = pairs.iter().map(|&(b, _)| b).collect();
        check_range("tests", &members, n)?;
        members.sort_unstable();
        members.dedup();
        let mut neg = vec![UNDEF; n];
        for &(b, nb) in pairs {
            check_range("neg", &[nb], n)?;
            if members.binary_search(&nb).is_err() {
                return Err(SuiteError::NegLeavesTests { x: b, value: nb });
            }
            neg[b] = nb;
        }
        Ok(TestAlgebra { members, neg })
    }

    /// `B = {0, 1}` with `0` and `1` swapped.
    pub fn zero_one(alg: &FiniteKleeneAlgebra) -> Self {
        let (z, o) = (alg.zero(), alg.one());
        Self::new(alg, &[(z, o), (o, z)]).expect("{0,1} is closed under swap")
    }

    /// `B = t(K)` with `t'` as negation.
    pub fn from_expansion(exp: &UnaryExpansion) -> Result<Self, SuiteError> {
        let suite = SuiteId::TwoSortedKat;
        let tp = exp.require(UnaryOp::TPrime, suite)?;
        exp.require(UnaryOp::T, suite)?;
        let image = test_image(exp, UnaryOp::T)?;
        let pairs: Vec<(Elem, Elem)> = image.iter().map(|&b| (b, tp[b])).collect();
        Self::new(&exp.base, &pairs)
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Negation of a member; `None` outside `B`.
    pub fn neg(&self, x: Elem) -> Option<Elem> {
        self.neg.get(x).copied().filter(|&v| v != UNDEF)
    }

    pub fn neg_table(&self) -> &[Elem] {
        &self.neg
    }
}

/// Checks that `B` contains `0`, `1`, is closed under `+` and `·`, and forms
/// a Boolean algebra with the given negation.
pub fn check_two_sorted_kat(alg: &FiniteKleeneAlgebra, tests: &TestAlgebra) -> AxiomReport {
    let laws = boolean_algebra_laws(
        tests.members.clone(),
        Complement::Given(tests.neg.clone()),
    );
    algebra::run(SuiteId::TwoSortedKat.as_str(), &Ctx::new(alg), &laws)
}
