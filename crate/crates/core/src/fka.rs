//! The `.fka` text format for finite algebras and their expansions.
//!
//! ```text
//! # comments run to end of line
//! algebra a3
//! size 3
//! zero 0
//! one 1
//! add
//! 0 1 2
//! 1 1 1
//! 2 1 2
//! mul
//! 0 0 0
//! 0 1 2
//! 0 2 0
//! star
//! 1 1 1
//! unary d
//! 0 1 1
//! binary arrow
//! ...n rows...
//! ```
//!
//! Parsing checks shape and index ranges only; axioms are checked separately.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::algebra::{Elem, FiniteKleeneAlgebra, ModelError};
use crate::theories::{UnaryExpansion, UnaryOp};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FkaError {
    #[error("line {line}: syntax error: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: index out of range: {value} (size {size})")]
    IndexOutOfRange { line: usize, value: usize, size: usize },
    #[error("line {line}: duplicate section `{section}`")]
    DuplicateSection { line: usize, section: String },
    #[error("missing required section `{0}`")]
    MissingSection(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

struct Lines<'a> {
    inner: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let inner = text
            .lines()
            .enumerate()
            .filter_map(|(i, raw)| {
                let content = raw.split('#').next().unwrap_or("");
                let words: Vec<&str> = content.split_whitespace().collect();
                (!words.is_empty()).then_some((i + 1, words))
            })
            .collect();
        Lines { inner, pos: 0 }
    }

    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        let item = self.inner.get(self.pos).cloned();
        self.pos += 1;
        item
    }
}

fn syntax(line: usize, msg: impl Into<String>) -> FkaError {
    FkaError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn parse_index(line: usize, word: &str, size: Option<usize>) -> Result<Elem, FkaError> {
    let value: usize = word
        .parse()
        .map_err(|_| syntax(line, format!("expected an element index, found `{word}`")))?;
    match size {
        Some(size) if value >= size => Err(FkaError::IndexOutOfRange { line, value, size }),
        _ => Ok(value),
    }
}

fn read_rows(
    lines: &mut Lines<'_>,
    header_line: usize,
    rows: usize,
    n: usize,
) -> Result<Vec<Elem>, FkaError> {
    let mut out = Vec::with_capacity(rows * n);
    for _ in 0..rows {
        let (line, words) = lines
            .next()
            .ok_or_else(|| syntax(header_line, "unexpected end of file inside table"))?;
        if words.len() != n {
            return Err(syntax(line, format!("expected {n} entries, found {}", words.len())));
        }
        for w in words {
            out.push(parse_index(line, w, Some(n))?);
        }
    }
    Ok(out)
}

/// Parses `.fka` text into an algebra with any unary and residual tables.
pub fn parse_algebra(text: &str) -> Result<UnaryExpansion, FkaError> {
    let mut lines = Lines::new(text);
    let (line, words) = lines
        .next()
        .ok_or_else(|| FkaError::MissingSection("algebra".into()))?;
    let name = match words.as_slice() {
        ["algebra", name] => name.to_string(),
        _ => return Err(syntax(line, "expected `algebra <name>` as first line")),
    };

    let mut seen: HashSet<String> = HashSet::new();
    let mut size = None;
    let mut zero = None;
    let mut one = None;
    let mut add = None;
    let mut mul = None;
    let mut star = None;
    let mut unary: Vec<(UnaryOp, Vec<Elem>)> = Vec::new();
    let mut arrow = None;

    while let Some((line, words)) = lines.next() {
        let section = match words.as_slice() {
            ["unary", op] | ["binary", op] => format!("{} {op}", words[0]),
            [kw, ..] => kw.to_string(),
            [] => unreachable!("blank lines are skipped"),
        };
        if !seen.insert(section.clone()) {
            return Err(FkaError::DuplicateSection { line, section });
        }
        let need_size = |what: &str| {
            size.ok_or_else(|| syntax(line, format!("`{what}` must come after `size`")))
        };
        match words.as_slice() {
            ["size", n] => {
                let n = parse_index(line, n, None)?;
                if n == 0 {
                    return Err(syntax(line, "size must be positive"));
                }
                size = Some(n);
            }
            ["zero", i] => zero = Some(parse_index(line, i, Some(need_size("zero")?))?),
            ["one", i] => one = Some(parse_index(line, i, Some(need_size("one")?))?),
            ["add"] => {
                let n = need_size("add")?;
                add = Some(read_rows(&mut lines, line, n, n)?);
            }
            ["mul"] => {
                let n = need_size("mul")?;
                mul = Some(read_rows(&mut lines, line, n, n)?);
            }
            ["star"] => {
                let n = need_size("star")?;
                star = Some(read_rows(&mut lines, line, 1, n)?);
            }
            ["unary", op] => {
                let op: UnaryOp = op.parse().map_err(|e: String| syntax(line, e))?;
                let n = need_size("unary")?;
                unary.push((op, read_rows(&mut lines, line, 1, n)?));
            }
            ["binary", "arrow"] => {
                let n = need_size("binary")?;
                arrow = Some(read_rows(&mut lines, line, n, n)?);
            }
            ["binary", other] => {
                return Err(syntax(line, format!("unknown binary table `{other}`")));
            }
            _ => return Err(syntax(line, format!("unexpected `{}`", words.join(" ")))),
        }
    }

    fn require<T>(v: Option<T>, what: &str) -> Result<T, FkaError> {
        v.ok_or_else(|| FkaError::MissingSection(what.into()))
    }
    let size = require(size, "size")?;
    let alg = FiniteKleeneAlgebra::new(
        name,
        require(zero, "zero")?,
        require(one, "one")?,
        require(add, "add")?,
        require(mul, "mul")?,
        require(star, "star")?,
    )?;
    debug_assert_eq!(alg.size(), size);
    let mut exp = UnaryExpansion::new(alg);
    for (op, table) in unary {
        exp.set_unary(op, table)?;
    }
    if let Some(arrow) = arrow {
        exp.set_arrow(arrow)?;
    }
    Ok(exp)
}

fn write_rows(out: &mut String, table: &[Elem], n: usize) {
    for row in table.chunks(n) {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
}

/// Renders an expansion in `.fka` form; [`parse_algebra`] inverts it.
pub fn print_algebra(exp: &UnaryExpansion) -> String {
    let alg = &exp.base;
    let n = alg.size();
    let mut out = String::new();
    let _ = writeln!(out, "algebra {}", alg.name());
    let _ = writeln!(out, "size {n}");
    let _ = writeln!(out, "zero {}", alg.zero());
    let _ = writeln!(out, "one {}", alg.one());
    out.push_str("add\n");
    write_rows(&mut out, alg.add_table(), n);
    out.push_str("mul\n");
    write_rows(&mut out, alg.mul_table(), n);
    out.push_str("star\n");
    write_rows(&mut out, alg.star_table(), n);
    for (op, table) in exp.unary_tables() {
        let _ = writeln!(out, "unary {op}");
        write_rows(&mut out, table, n);
    }
    if let Some(arrow) = exp.arrow() {
        out.push_str("binary arrow\n");
        write_rows(&mut out, arrow, n);
    }
    out
}
