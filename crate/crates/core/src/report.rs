//! Per-axiom verdicts produced by every checker in the crate.

use std::fmt;

use serde::Serialize;

use crate::algebra::Elem;

/// A falsifying assignment for one axiom, together with the two sides that
/// disagreed under it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub assignment: Vec<(String, Elem)>,
    pub lhs: Elem,
    pub rhs: Elem,
}

impl Witness {
    /// Value bound to variable `name`, if it occurs in the assignment.
    pub fn value(&self, name: &str) -> Option<Elem> {
        self.assignment
            .iter()
            .find(|(var, _)| var == name)
            .map(|&(_, v)| v)
    }

    /// Assignment values in variable order.
    pub fn values(&self) -> Vec<Elem> {
        self.assignment.iter().map(|&(_, v)| v).collect()
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.assignment.is_empty() {
            write!(f, "(no variables)")?;
        } else {
            let parts: Vec<String> = self
                .assignment
                .iter()
                .map(|(var, v)| format!("{var}={v}"))
                .collect();
            write!(f, "{}", parts.join(", "))?;
        }
        write!(f, " [lhs {}, rhs {}]", self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub axiom: String,
    pub holds: bool,
    /// First failing assignment in lexicographic order; present iff `!holds`.
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub suite: String,
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn new(suite: impl Into<String>) -> Self {
        AxiomReport {
            suite: suite.into(),
            results: Vec::new(),
        }
    }

    pub fn holds_all(&self) -> bool {
        self.results.iter().all(|r| r.holds)
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }

    /// Whether the named axiom was checked and holds.
    pub fn holds(&self, axiom: &str) -> bool {
        self.get(axiom).is_some_and(|r| r.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.results.iter().filter(|r| !r.holds)
    }

    pub fn failing_ids(&self) -> Vec<&str> {
        self.failures().map(|r| r.axiom.as_str()).collect()
    }

    /// Appends the results of `other`, keeping this report's suite name.
    pub fn extend(&mut self, other: AxiomReport) {
        self.results.extend(other.results);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .results
            .iter()
            .map(|r| r.axiom.len())
            .max()
            .unwrap_or(0)
            .max(5);
        writeln!(f, "suite {}", self.suite)?;
        for r in &self.results {
            let verdict = if r.holds { "holds" } else { "FAILS" };
            match &r.witness {
                Some(w) => writeln!(f, "  {:<width$}  {verdict}  {w}", r.axiom)?,
                None => writeln!(f, "  {:<width$}  {verdict}", r.axiom)?,
            }
        }
        let failed = self.failures().count();
        write!(
            f,
            "{} of {} axioms hold",
            self.results.len() - failed,
            self.results.len()
        )
    }
}
