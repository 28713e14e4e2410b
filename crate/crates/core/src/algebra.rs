//! Finite Kleene algebras given by full operation tables.

use thiserror::Error;

use crate::engine::{Axiom, Ctx};
use crate::report::AxiomReport;

/// An element of a finite carrier, as a dense index `0..n`.
pub type Elem = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("carrier size must be positive")]
    EmptyCarrier,
    #[error("{table} table has {found} entries, expected {expected}")]
    Shape {
        table: String,
        expected: usize,
        found: usize,
    },
    #[error("index out of range: {table} contains {value} but size is {size}")]
    IndexOutOfRange {
        table: String,
        value: usize,
        size: usize,
    },
    #[error("zero and one must differ when size >= 2")]
    ZeroIsOne,
}

/// Carrier `0..n` with tables for `+`, `·`, `*` and the constants `0`, `1`.
///
/// Construction only validates shape and ranges. Whether the tables form a
/// Kleene algebra is decided by [`check_kleene`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteKleeneAlgebra {
    name: String,
    n: usize,
    zero: Elem,
    one: Elem,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    star: Vec<Elem>,
}

pub(crate) fn check_range(table: &str, values: &[Elem], n: usize) -> Result<(), ModelError> {
    match values.iter().find(|&&v| v >= n) {
        Some(&value) => Err(ModelError::IndexOutOfRange {
            table: table.to_string(),
            value,
            size: n,
        }),
        None => Ok(()),
    }
}

pub(crate) fn check_len(table: &str, values: &[Elem], expected: usize) -> Result<(), ModelError> {
    if values.len() != expected {
        return Err(ModelError::Shape {
            table: table.to_string(),
            expected,
            found: values.len(),
        });
    }
    Ok(())
}

impl FiniteKleeneAlgebra {
    /// Builds an algebra from row-major `n*n` tables for `+` and `·`.
    pub fn new(
        name: impl Into<String>,
        zero: Elem,
        one: Elem,
        add: Vec<Elem>,
        mul: Vec<Elem>,
        star: Vec<Elem>,
    ) -> Result<Self, ModelError> {
        let n = star.len();
        if n == 0 {
            return Err(ModelError::EmptyCarrier);
        }
        check_len("add", &add, n * n)?;
        check_len("mul", &mul, n * n)?;
        check_range("zero", &[zero], n)?;
        check_range("one", &[one], n)?;
        check_range("add", &add, n)?;
        check_range("mul", &mul, n)?;
        check_range("star", &star, n)?;
        if n >= 2 && zero == one {
            return Err(ModelError::ZeroIsOne);
        }
        Ok(FiniteKleeneAlgebra {
            name: name.into(),
            n,
            zero,
            one,
            add,
            mul,
            star,
        })
    }

    /// Convenience constructor from nested rows.
    pub fn from_rows(
        name: impl Into<String>,
        zero: Elem,
        one: Elem,
        add: &[Vec<Elem>],
        mul: &[Vec<Elem>],
        star: &[Elem],
    ) -> Result<Self, ModelError> {
        let n = star.len();
        for (table, rows) in [("add", add), ("mul", mul)] {
            if rows.len() != n {
                return Err(ModelError::Shape {
                    table: format!("{table} rows"),
                    expected: n,
                    found: rows.len(),
                });
            }
            for row in rows {
                check_len(table, row, n)?;
            }
        }
        Self::new(name, zero, one, add.concat(), mul.concat(), star.to_vec())
    }

    /// The one-point algebra with `0 = 1`.
    pub fn trivial() -> Self {
        Self::new("trivial", 0, 0, vec![0], vec![0], vec![0]).expect("trivial algebra")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.add[x * self.n + y]
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mul[x * self.n + y]
    }

    #[inline]
    pub fn star(&self, x: Elem) -> Elem {
        self.star[x]
    }

    /// The semiring order: `x <= y` iff `x + y = y`.
    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.add(x, y) == y
    }

    pub fn add_table(&self) -> &[Elem] {
        &self.add
    }

    pub fn mul_table(&self) -> &[Elem] {
        &self.mul
    }

    pub fn star_table(&self) -> &[Elem] {
        &self.star
    }

    /// Join of a set of elements, folding `+` in the given order. The empty
    /// join is `0`.
    pub fn sum<I: IntoIterator<Item = Elem>>(&self, items: I) -> Elem {
        items.into_iter().fold(self.zero, |acc, x| self.add(acc, x))
    }

    /// Join of the whole carrier.
    pub fn top(&self) -> Elem {
        self.sum(self.elements())
    }

    pub fn order(&self) -> ElementOrder {
        ElementOrder::of(self)
    }

    /// Applies an element permutation: element `x` becomes `perm[x]`.
    pub fn permuted(&self, perm: &[Elem]) -> Self {
        let n = self.n;
        assert_eq!(perm.len(), n);
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        let mut star = vec![0; n];
        for x in 0..n {
            star[perm[x]] = perm[self.star(x)];
            for y in 0..n {
                add[perm[x] * n + perm[y]] = perm[self.add(x, y)];
                mul[perm[x] * n + perm[y]] = perm[self.mul(x, y)];
            }
        }
        FiniteKleeneAlgebra {
            name: self.name.clone(),
            n,
            zero: perm[self.zero],
            one: perm[self.one],
            add,
            mul,
            star,
        }
    }
}

/// The semiring order as an explicit boolean matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementOrder {
    n: usize,
    leq: Vec<bool>,
}

impl ElementOrder {
    pub fn of(alg: &FiniteKleeneAlgebra) -> Self {
        let n = alg.size();
        let leq = (0..n * n).map(|i| alg.leq(i / n, i % n)).collect();
        ElementOrder { n, leq }
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x * self.n + y]
    }

    pub fn is_partial_order(&self) -> bool {
        let n = self.n;
        let reflexive = (0..n).all(|x| self.leq(x, x));
        let antisymmetric = (0..n)
            .all(|x| (0..n).all(|y| x == y || !(self.leq(x, y) && self.leq(y, x))));
        let transitive = (0..n).all(|x| {
            (0..n).all(|y| !self.leq(x, y) || (0..n).all(|z| !self.leq(y, z) || self.leq(x, z)))
        });
        reflexive && antisymmetric && transitive
    }

    pub fn is_bottom(&self, b: Elem) -> bool {
        (0..self.n).all(|x| self.leq(b, x))
    }
}

/// Laws of an idempotent semiring.
pub fn semiring_axioms() -> Vec<Axiom> {
    const XYZ: &[&str] = &["x", "y", "z"];
    const XY: &[&str] = &["x", "y"];
    const X: &[&str] = &["x"];
    vec![
        Axiom::new("add-assoc", XYZ, |c, v| {
            let (x, y, z) = (v[0], v[1], v[2]);
            Some(c.eq(c.add(x, c.add(y, z)), c.add(c.add(x, y), z)))
        }),
        Axiom::new("add-comm", XY, |c, v| Some(c.eq(c.add(v[0], v[1]), c.add(v[1], v[0])))),
        Axiom::new("add-idem", X, |c, v| Some(c.eq(c.add(v[0], v[0]), v[0]))),
        Axiom::new("add-zero", X, |c, v| Some(c.eq(c.add(v[0], c.zero()), v[0]))),
        Axiom::new("mul-assoc", XYZ, |c, v| {
            let (x, y, z) = (v[0], v[1], v[2]);
            Some(c.eq(c.mul(x, c.mul(y, z)), c.mul(c.mul(x, y), z)))
        }),
        Axiom::new("mul-one-left", X, |c, v| Some(c.eq(c.mul(c.one(), v[0]), v[0]))),
        Axiom::new("mul-one-right", X, |c, v| Some(c.eq(c.mul(v[0], c.one()), v[0]))),
        Axiom::new("mul-zero-left", X, |c, v| Some(c.eq(c.mul(c.zero(), v[0]), c.zero()))),
        Axiom::new("mul-zero-right", X, |c, v| Some(c.eq(c.mul(v[0], c.zero()), c.zero()))),
        Axiom::new("distrib-left", XYZ, |c, v| {
            let (x, y, z) = (v[0], v[1], v[2]);
            Some(c.eq(c.mul(x, c.add(y, z)), c.add(c.mul(x, y), c.mul(x, z))))
        }),
        Axiom::new("distrib-right", XYZ, |c, v| {
            let (x, y, z) = (v[0], v[1], v[2]);
            Some(c.eq(c.mul(c.add(x, y), z), c.add(c.mul(x, z), c.mul(y, z))))
        }),
    ]
}

/// The two unfold laws and the two induction quasi-equations for `*`.
pub fn star_axioms() -> Vec<Axiom> {
    vec![
        Axiom::new("star-unfold-left", &["x"], |c, v| {
            let x = v[0];
            let s = c.star(x);
            Some(c.le(c.add(c.one(), c.mul(x, s)), s))
        }),
        Axiom::new("star-unfold-right", &["x"], |c, v| {
            let x = v[0];
            let s = c.star(x);
            Some(c.le(c.add(c.one(), c.mul(s, x)), s))
        }),
        Axiom::new("star-induct-left", &["x", "y", "z"], |c, v| {
            let (x, y, z) = (v[0], v[1], v[2]);
            let premise = c.leq(c.add(y, c.mul(x, z)), z);
            Some(c.implies(premise, c.le(c.mul(c.star(x), y), z)))
        }),
        Axiom::new("star-induct-right", &["x", "y", "z"], |c, v| {
            let (x, y, z) = (v[0], v[1], v[2]);
            let premise = c.leq(c.add(y, c.mul(z, x)), z);
            Some(c.implies(premise, c.le(c.mul(y, c.star(x)), z)))
        }),
    ]
}

pub(crate) fn run(suite: &str, ctx: &Ctx<'_>, axioms: &[Axiom]) -> AxiomReport {
    AxiomReport {
        suite: suite.to_string(),
        results: axioms.iter().map(|a| a.check(ctx)).collect(),
    }
}

/// Checks every semiring law and every star law by exhaustive enumeration.
pub fn check_kleene(alg: &FiniteKleeneAlgebra) -> AxiomReport {
    let mut axioms = semiring_axioms();
    axioms.extend(star_axioms());
    run("kleene", &Ctx::new(alg), &axioms)
}
