//! Term languages: two-sorted KAT terms and one-sorted terms over `t`, `t'`,
//! their concrete syntax, and the translation between them.
//!
//! Concrete syntax, loosest to tightest binding:
//!
//! ```text
//! sum     := product ('+' product)*
//! product := unary (';' unary)*
//! unary   := '~' unary | postfix
//! postfix := atom '*'*
//! atom    := var | '0' | '1' | '(' sum ')' | 't(' sum ')' | "t'(" sum ')'
//! ```
//!
//! KAT terms use test variables `b0 b1 ..` and program variables `p0 p1 ..`;
//! one-sorted terms use `x0 x1 ..`. Both binary operators associate to the
//! left.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("syntax error at column {col}: {msg}")]
    Syntax { col: usize, msg: String },
    #[error("sort error: {0}")]
    Sort(String),
}

/// Test-sorted KAT terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TestTerm {
    Var(u32),
    Zero,
    One,
    Not(Box<TestTerm>),
    And(Box<TestTerm>, Box<TestTerm>),
    Or(Box<TestTerm>, Box<TestTerm>),
}

/// Program-sorted KAT terms. Every test is a program via `FromTest`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum KatTerm {
    ProgVar(u32),
    FromTest(TestTerm),
    Plus(Box<KatTerm>, Box<KatTerm>),
    Times(Box<KatTerm>, Box<KatTerm>),
    Star(Box<KatTerm>),
}

/// Terms of the one-sorted language with `t` and `t'`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Kat1Term {
    Var(u32),
    Zero,
    One,
    Plus(Box<Kat1Term>, Box<Kat1Term>),
    Times(Box<Kat1Term>, Box<Kat1Term>),
    Star(Box<Kat1Term>),
    T(Box<Kat1Term>),
    TPrime(Box<Kat1Term>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Equation<T> {
    pub lhs: T,
    pub rhs: T,
}

impl<T> Equation<T> {
    pub fn new(lhs: T, rhs: T) -> Self {
        Equation { lhs, rhs }
    }

    pub fn flipped(self) -> Self {
        Equation {
            lhs: self.rhs,
            rhs: self.lhs,
        }
    }
}

impl<T: fmt::Display> fmt::Display for Equation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

impl TestTerm {
    pub fn negate(b: TestTerm) -> Self {
        TestTerm::Not(Box::new(b))
    }

    pub fn and(b: TestTerm, c: TestTerm) -> Self {
        TestTerm::And(Box::new(b), Box::new(c))
    }

    pub fn or(b: TestTerm, c: TestTerm) -> Self {
        TestTerm::Or(Box::new(b), Box::new(c))
    }

    fn collect_vars(&self, out: &mut BTreeSet<u32>) {
        match self {
            TestTerm::Var(n) => {
                out.insert(*n);
            }
            TestTerm::Zero | TestTerm::One => {}
            TestTerm::Not(b) => b.collect_vars(out),
            TestTerm::And(b, c) | TestTerm::Or(b, c) => {
                b.collect_vars(out);
                c.collect_vars(out);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            TestTerm::Var(_) | TestTerm::Zero | TestTerm::One => 0,
            TestTerm::Not(b) => 1 + b.depth(),
            TestTerm::And(b, c) | TestTerm::Or(b, c) => 1 + b.depth().max(c.depth()),
        }
    }
}

impl KatTerm {
    pub fn test(b: TestTerm) -> Self {
        KatTerm::FromTest(b)
    }

    /// `p + q`, staying in the test sort when both operands are tests.
    pub fn plus(p: KatTerm, q: KatTerm) -> Self {
        match (p, q) {
            (KatTerm::FromTest(b), KatTerm::FromTest(c)) => KatTerm::FromTest(TestTerm::or(b, c)),
            (p, q) => KatTerm::Plus(Box::new(p), Box::new(q)),
        }
    }

    /// `p ; q`, staying in the test sort when both operands are tests.
    pub fn times(p: KatTerm, q: KatTerm) -> Self {
        match (p, q) {
            (KatTerm::FromTest(b), KatTerm::FromTest(c)) => KatTerm::FromTest(TestTerm::and(b, c)),
            (p, q) => KatTerm::Times(Box::new(p), Box::new(q)),
        }
    }

    pub fn star(p: KatTerm) -> Self {
        KatTerm::Star(Box::new(p))
    }

    pub fn as_test(&self) -> Option<&TestTerm> {
        match self {
            KatTerm::FromTest(b) => Some(b),
            _ => None,
        }
    }

    pub fn test_vars(&self) -> BTreeSet<u32> {
        let mut tests = BTreeSet::new();
        let mut progs = BTreeSet::new();
        self.collect_vars(&mut tests, &mut progs);
        tests
    }

    pub fn prog_vars(&self) -> BTreeSet<u32> {
        let mut tests = BTreeSet::new();
        let mut progs = BTreeSet::new();
        self.collect_vars(&mut tests, &mut progs);
        progs
    }

    fn collect_vars(&self, tests: &mut BTreeSet<u32>, progs: &mut BTreeSet<u32>) {
        match self {
            KatTerm::ProgVar(n) => {
                progs.insert(*n);
            }
            KatTerm::FromTest(b) => b.collect_vars(tests),
            KatTerm::Plus(p, q) | KatTerm::Times(p, q) => {
                p.collect_vars(tests, progs);
                q.collect_vars(tests, progs);
            }
            KatTerm::Star(p) => p.collect_vars(tests, progs),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            KatTerm::ProgVar(_) => 0,
            KatTerm::FromTest(b) => b.depth(),
            KatTerm::Plus(p, q) | KatTerm::Times(p, q) => 1 + p.depth().max(q.depth()),
            KatTerm::Star(p) => 1 + p.depth(),
        }
    }
}

impl Kat1Term {
    pub fn plus(a: Kat1Term, b: Kat1Term) -> Self {
        Kat1Term::Plus(Box::new(a), Box::new(b))
    }

    pub fn times(a: Kat1Term, b: Kat1Term) -> Self {
        Kat1Term::Times(Box::new(a), Box::new(b))
    }

    pub fn star(a: Kat1Term) -> Self {
        Kat1Term::Star(Box::new(a))
    }

    pub fn t(a: Kat1Term) -> Self {
        Kat1Term::T(Box::new(a))
    }

    pub fn tprime(a: Kat1Term) -> Self {
        Kat1Term::TPrime(Box::new(a))
    }

    pub fn vars(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<u32>) {
        match self {
            Kat1Term::Var(n) => {
                out.insert(*n);
            }
            Kat1Term::Zero | Kat1Term::One => {}
            Kat1Term::Plus(a, b) | Kat1Term::Times(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Kat1Term::Star(a) | Kat1Term::T(a) | Kat1Term::TPrime(a) => a.collect_vars(out),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Kat1Term::Var(_) | Kat1Term::Zero | Kat1Term::One => 0,
            Kat1Term::Plus(a, b) | Kat1Term::Times(a, b) => 1 + a.depth().max(b.depth()),
            Kat1Term::Star(a) | Kat1Term::T(a) | Kat1Term::TPrime(a) => 1 + a.depth(),
        }
    }
}

fn translate_test(b: &TestTerm) -> Kat1Term {
    match b {
        TestTerm::Var(n) => Kat1Term::t(Kat1Term::Var(2 * n + 1)),
        TestTerm::Zero => Kat1Term::t(Kat1Term::Zero),
        TestTerm::One => Kat1Term::t(Kat1Term::One),
        TestTerm::Not(b) => Kat1Term::tprime(translate_test(b)),
        TestTerm::And(b, c) => Kat1Term::times(translate_test(b), translate_test(c)),
        TestTerm::Or(b, c) => Kat1Term::plus(translate_test(b), translate_test(c)),
    }
}

/// Translates a KAT term into the one-sorted language.
///
/// Program variable `p_n` becomes `x_{2n}`, test variable `b_n` becomes
/// `t(x_{2n+1})`, the constants become `t(0)` and `t(1)`, negation becomes
/// `t'`, and the remaining operators are mapped homomorphically.
pub fn translate(p: &KatTerm) -> Kat1Term {
    match p {
        KatTerm::ProgVar(n) => Kat1Term::Var(2 * n),
        KatTerm::FromTest(b) => translate_test(b),
        KatTerm::Plus(p, q) => Kat1Term::plus(translate(p), translate(q)),
        KatTerm::Times(p, q) => Kat1Term::times(translate(p), translate(q)),
        KatTerm::Star(p) => Kat1Term::star(translate(p)),
    }
}

pub fn translate_equation(eq: &Equation<KatTerm>) -> Equation<Kat1Term> {
    Equation::new(translate(&eq.lhs), translate(&eq.rhs))
}

// ---------------------------------------------------------------------------
// printing

const SUM: u8 = 0;
const PRODUCT: u8 = 1;
const UNARY: u8 = 2;
const ATOM: u8 = 3;

fn paren(
    f: &mut fmt::Formatter<'_>,
    needed: bool,
    body: impl FnOnce(&mut fmt::Formatter<'_>) -> fmt::Result,
) -> fmt::Result {
    if needed {
        f.write_str("(")?;
        body(f)?;
        f.write_str(")")
    } else {
        body(f)
    }
}

impl TestTerm {
    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, ctx: u8) -> fmt::Result {
        match self {
            TestTerm::Var(n) => write!(f, "b{n}"),
            TestTerm::Zero => f.write_str("0"),
            TestTerm::One => f.write_str("1"),
            TestTerm::Not(b) => paren(f, ctx > UNARY, |f| {
                f.write_str("~")?;
                b.fmt_prec(f, UNARY)
            }),
            TestTerm::And(b, c) => paren(f, ctx > PRODUCT, |f| {
                b.fmt_prec(f, PRODUCT)?;
                f.write_str(" ; ")?;
                c.fmt_prec(f, UNARY)
            }),
            TestTerm::Or(b, c) => paren(f, ctx > SUM, |f| {
                b.fmt_prec(f, SUM)?;
                f.write_str(" + ")?;
                c.fmt_prec(f, PRODUCT)
            }),
        }
    }
}

impl KatTerm {
    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, ctx: u8) -> fmt::Result {
        match self {
            KatTerm::ProgVar(n) => write!(f, "p{n}"),
            KatTerm::FromTest(b) => b.fmt_prec(f, ctx),
            KatTerm::Plus(p, q) => paren(f, ctx > SUM, |f| {
                p.fmt_prec(f, SUM)?;
                f.write_str(" + ")?;
                q.fmt_prec(f, PRODUCT)
            }),
            KatTerm::Times(p, q) => paren(f, ctx > PRODUCT, |f| {
                p.fmt_prec(f, PRODUCT)?;
                f.write_str(" ; ")?;
                q.fmt_prec(f, UNARY)
            }),
            KatTerm::Star(p) => {
                p.fmt_prec(f, ATOM)?;
                f.write_str("*")
            }
        }
    }
}

impl Kat1Term {
    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, ctx: u8) -> fmt::Result {
        match self {
            Kat1Term::Var(n) => write!(f, "x{n}"),
            Kat1Term::Zero => f.write_str("0"),
            Kat1Term::One => f.write_str("1"),
            Kat1Term::Plus(a, b) => paren(f, ctx > SUM, |f| {
                a.fmt_prec(f, SUM)?;
                f.write_str(" + ")?;
                b.fmt_prec(f, PRODUCT)
            }),
            Kat1Term::Times(a, b) => paren(f, ctx > PRODUCT, |f| {
                a.fmt_prec(f, PRODUCT)?;
                f.write_str(" ; ")?;
                b.fmt_prec(f, UNARY)
            }),
            Kat1Term::Star(a) => {
                a.fmt_prec(f, ATOM)?;
                f.write_str("*")
            }
            Kat1Term::T(a) => {
                f.write_str("t(")?;
                a.fmt_prec(f, SUM)?;
                f.write_str(")")
            }
            Kat1Term::TPrime(a) => {
                f.write_str("t'(")?;
                a.fmt_prec(f, SUM)?;
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for TestTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, SUM)
    }
}

impl fmt::Display for KatTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, SUM)
    }
}

impl fmt::Display for Kat1Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, SUM)
    }
}

pub fn print_term<T: fmt::Display>(term: &T) -> String {
    term.to_string()
}

// ---------------------------------------------------------------------------
// parsing

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Var(char, u32),
    Zero,
    One,
    Plus,
    Semi,
    Star,
    Tilde,
    LParen,
    RParen,
    T,
    TPrime,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, TermError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        let simple = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0' => Some(Tok::Zero),
            '1' => Some(Tok::One),
            '+' => Some(Tok::Plus),
            ';' => Some(Tok::Semi),
            '*' => Some(Tok::Star),
            '~' => Some(Tok::Tilde),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push((col, tok));
            i += 1;
            continue;
        }
        if !c.is_ascii_alphabetic() {
            return Err(TermError::Syntax {
                col,
                msg: format!("unexpected character `{c}`"),
            });
        }
        let start = i;
        i += 1;
        while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '\'') {
            i += 1;
        }
        let word: String = chars[start..i].iter().collect();
        let tok = match word.as_str() {
            "t" => Tok::T,
            "t'" => Tok::TPrime,
            _ => {
                let kind = word.chars().next().unwrap();
                let index = &word[1..];
                match (kind, index.parse::<u32>()) {
                    ('b' | 'p' | 'x', Ok(n)) => Tok::Var(kind, n),
                    _ => {
                        return Err(TermError::Syntax {
                            col,
                            msg: format!("unknown identifier `{word}`"),
                        })
                    }
                }
            }
        };
        out.push((col, tok));
    }
    Ok(out)
}

/// Untyped syntax tree shared by both languages.
#[derive(Debug)]
enum Syn {
    Var(char, u32),
    Zero,
    One,
    Plus(Box<Syn>, Box<Syn>),
    Times(Box<Syn>, Box<Syn>),
    Star(Box<Syn>),
    Not(Box<Syn>),
    T(Box<Syn>),
    TPrime(Box<Syn>),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).map(|&(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |&(c, _)| c)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, TermError> {
        Err(TermError::Syntax {
            col: self.col(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), TermError> {
        if self.peek() == Some(tok) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn sum(&mut self) -> Result<Syn, TermError> {
        let mut lhs = self.product()?;
        while self.peek() == Some(Tok::Plus) {
            self.pos += 1;
            let rhs = self.product()?;
            lhs = Syn::Plus(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<Syn, TermError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(Tok::Semi) {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Syn::Times(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Syn, TermError> {
        if self.peek() == Some(Tok::Tilde) {
            self.pos += 1;
            return Ok(Syn::Not(Box::new(self.unary()?)));
        }
        let mut term = self.atom()?;
        while self.peek() == Some(Tok::Star) {
            self.pos += 1;
            term = Syn::Star(Box::new(term));
        }
        Ok(term)
    }

    fn atom(&mut self) -> Result<Syn, TermError> {
        let tok = match self.peek() {
            Some(tok) => tok,
            None => return self.err("unexpected end of input"),
        };
        self.pos += 1;
        match tok {
            Tok::Var(kind, n) => Ok(Syn::Var(kind, n)),
            Tok::Zero => Ok(Syn::Zero),
            Tok::One => Ok(Syn::One),
            Tok::LParen => {
                let inner = self.sum()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::T | Tok::TPrime => {
                self.expect(Tok::LParen, "`(` after t")?;
                let inner = Box::new(self.sum()?);
                self.expect(Tok::RParen, "`)`")?;
                Ok(if tok == Tok::T {
                    Syn::T(inner)
                } else {
                    Syn::TPrime(inner)
                })
            }
            _ => {
                self.pos -= 1;
                self.err("expected a term")
            }
        }
    }
}

fn parse_syn(text: &str) -> Result<Syn, TermError> {
    let toks = lex(text)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        end_col: text.chars().count() + 1,
    };
    let syn = parser.sum()?;
    if parser.pos < parser.toks.len() {
        return parser.err("unexpected trailing input");
    }
    Ok(syn)
}

fn to_kat(syn: Syn) -> Result<KatTerm, TermError> {
    Ok(match syn {
        Syn::Var('b', n) => KatTerm::FromTest(TestTerm::Var(n)),
        Syn::Var('p', n) => KatTerm::ProgVar(n),
        Syn::Var(kind, n) => {
            return Err(TermError::Sort(format!(
                "`{kind}{n}` is not a KAT variable (use b<n> or p<n>)"
            )))
        }
        Syn::Zero => KatTerm::FromTest(TestTerm::Zero),
        Syn::One => KatTerm::FromTest(TestTerm::One),
        Syn::Plus(a, b) => KatTerm::plus(to_kat(*a)?, to_kat(*b)?),
        Syn::Times(a, b) => KatTerm::times(to_kat(*a)?, to_kat(*b)?),
        Syn::Star(a) => KatTerm::star(to_kat(*a)?),
        Syn::Not(a) => match to_kat(*a)? {
            KatTerm::FromTest(b) => KatTerm::FromTest(TestTerm::negate(b)),
            _ => return Err(TermError::Sort("negation applies only to tests".into())),
        },
        Syn::T(_) | Syn::TPrime(_) => {
            return Err(TermError::Sort("t and t' are not KAT operators".into()))
        }
    })
}

fn to_kat1(syn: Syn) -> Result<Kat1Term, TermError> {
    Ok(match syn {
        Syn::Var('x', n) => Kat1Term::Var(n),
        Syn::Var(kind, n) => {
            return Err(TermError::Sort(format!(
                "`{kind}{n}` is not a one-sorted variable (use x<n>)"
            )))
        }
        Syn::Zero => Kat1Term::Zero,
        Syn::One => Kat1Term::One,
        Syn::Plus(a, b) => Kat1Term::plus(to_kat1(*a)?, to_kat1(*b)?),
        Syn::Times(a, b) => Kat1Term::times(to_kat1(*a)?, to_kat1(*b)?),
        Syn::Star(a) => Kat1Term::star(to_kat1(*a)?),
        Syn::T(a) => Kat1Term::t(to_kat1(*a)?),
        Syn::TPrime(a) => Kat1Term::tprime(to_kat1(*a)?),
        Syn::Not(_) => {
            return Err(TermError::Sort(
                "negation `~` is not part of the one-sorted language; use t'(..)".into(),
            ))
        }
    })
}

/// Parses a two-sorted KAT term. Operands that are both tests stay tests.
pub fn parse_kat_term(text: &str) -> Result<KatTerm, TermError> {
    to_kat(parse_syn(text)?)
}

pub fn parse_kat1_term(text: &str) -> Result<Kat1Term, TermError> {
    to_kat1(parse_syn(text)?)
}

fn split_equation(text: &str) -> Result<(&str, &str), TermError> {
    let mut parts = text.splitn(3, '=');
    match (parts.next(), parts.next(), parts.next()) {
        (Some(l), Some(r), None) => Ok((l, r)),
        (_, None, _) => Err(TermError::Syntax {
            col: text.chars().count() + 1,
            msg: "expected `lhs = rhs`".into(),
        }),
        _ => Err(TermError::Syntax {
            col: 1,
            msg: "more than one `=`".into(),
        }),
    }
}

pub fn parse_kat_equation(text: &str) -> Result<Equation<KatTerm>, TermError> {
    let (l, r) = split_equation(text)?;
    Ok(Equation::new(parse_kat_term(l)?, parse_kat_term(r)?))
}

pub fn parse_kat1_equation(text: &str) -> Result<Equation<Kat1Term>, TermError> {
    let (l, r) = split_equation(text)?;
    Ok(Equation::new(parse_kat1_term(l)?, parse_kat1_term(r)?))
}

/// An equation in whichever language its variables belong to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyEquation {
    Kat(Equation<KatTerm>),
    Kat1(Equation<Kat1Term>),
}

/// Parses an equation, choosing the KAT language when it mentions `b`/`p`
/// variables or `~`, and the one-sorted language otherwise.
pub fn parse_equation(text: &str) -> Result<AnyEquation, TermError> {
    let (l, r) = split_equation(text)?;
    let kat_like = lex(l)?
        .into_iter()
        .chain(lex(r)?)
        .any(|(_, tok)| matches!(tok, Tok::Var('b' | 'p', _) | Tok::Tilde));
    if kat_like {
        Ok(AnyEquation::Kat(parse_kat_equation(text)?))
    } else {
        Ok(AnyEquation::Kat1(parse_kat1_equation(text)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_kat_terms() {
        assert_eq!(
            parse_kat_term("b0 ; p1*").unwrap(),
            KatTerm::Times(
                Box::new(KatTerm::FromTest(TestTerm::Var(0))),
                Box::new(KatTerm::star(KatTerm::ProgVar(1)))
            )
        );
        assert_eq!(
            parse_kat_term("~p0"),
            Err(TermError::Sort("negation applies only to tests".into()))
        );
        assert!(matches!(parse_kat_term("~b0*"), Err(TermError::Sort(_))));
        assert_eq!(
            parse_kat_term("~(b0 + b1)").unwrap(),
            KatTerm::FromTest(TestTerm::negate(TestTerm::or(TestTerm::Var(0), TestTerm::Var(1))))
        );
    }

    #[test]
    fn parses_kat1_terms() {
        assert_eq!(
            parse_kat1_term("t'(t(x2))").unwrap(),
            Kat1Term::tprime(Kat1Term::t(Kat1Term::Var(2)))
        );
        assert!(matches!(parse_kat1_term("~x0"), Err(TermError::Sort(_))));
        assert!(matches!(parse_kat1_term("b0"), Err(TermError::Sort(_))));
    }

    #[test]
    fn precedence_and_associativity() {
        let t = parse_kat1_term("x0 + x1 ; x2*").unwrap();
        assert_eq!(
            t,
            Kat1Term::plus(
                Kat1Term::Var(0),
                Kat1Term::times(Kat1Term::Var(1), Kat1Term::star(Kat1Term::Var(2)))
            )
        );
        let t = parse_kat1_term("x0 ; x1 ; x2").unwrap();
        assert_eq!(
            t,
            Kat1Term::times(
                Kat1Term::times(Kat1Term::Var(0), Kat1Term::Var(1)),
                Kat1Term::Var(2)
            )
        );
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse_kat1_term("x0 +"), Err(TermError::Syntax { col: 5, .. })));
        assert!(matches!(parse_kat1_term("(x0"), Err(TermError::Syntax { .. })));
        assert!(matches!(parse_kat1_term("x0 x1"), Err(TermError::Syntax { col: 4, .. })));
        assert!(matches!(parse_kat1_term("y0"), Err(TermError::Syntax { col: 1, .. })));
        assert!(matches!(parse_kat1_term("x0 & x1"), Err(TermError::Syntax { col: 4, .. })));
        assert!(matches!(parse_kat1_term("t x0"), Err(TermError::Syntax { .. })));
    }

    #[test]
    fn printing() {
        assert_eq!(Kat1Term::t(Kat1Term::Var(3)).to_string(), "t(x3)");
        assert_eq!(
            Kat1Term::star(Kat1Term::plus(Kat1Term::Var(0), Kat1Term::Var(2))).to_string(),
            "(x0 + x2)*"
        );
        assert_eq!(
            Kat1Term::plus(
                Kat1Term::Var(0),
                Kat1Term::plus(Kat1Term::Var(1), Kat1Term::Var(2))
            )
            .to_string(),
            "x0 + (x1 + x2)"
        );
        let k = KatTerm::star(KatTerm::test(TestTerm::negate(TestTerm::Var(0))));
        assert_eq!(k.to_string(), "(~b0)*");
        assert_eq!(parse_kat_term("(~b0)*").unwrap(), k);
    }

    #[test]
    fn translation_clauses() {
        assert_eq!(
            translate(&KatTerm::test(TestTerm::Var(0))),
            Kat1Term::t(Kat1Term::Var(1))
        );
        assert_eq!(
            translate(&KatTerm::test(TestTerm::negate(TestTerm::Var(1)))),
            Kat1Term::tprime(Kat1Term::t(Kat1Term::Var(3)))
        );
        let p = KatTerm::Times(
            Box::new(KatTerm::ProgVar(2)),
            Box::new(KatTerm::test(TestTerm::Zero)),
        );
        assert_eq!(
            translate(&p),
            Kat1Term::times(Kat1Term::Var(4), Kat1Term::t(Kat1Term::Zero))
        );
        assert_eq!(translate(&KatTerm::test(TestTerm::One)).to_string(), "t(1)");
        assert_eq!(
            translate(&parse_kat_term("p0 ; b1*").unwrap()).to_string(),
            "x0 ; t(x3)*"
        );
        assert_eq!(translate(&parse_kat_term("~b0").unwrap()).to_string(), "t'(t(x1))");
    }

    #[test]
    fn equation_language_detection() {
        assert!(matches!(parse_equation("b0 ; p0 = p0"), Ok(AnyEquation::Kat(_))));
        assert!(matches!(parse_equation("t(x0) = x0"), Ok(AnyEquation::Kat1(_))));
        assert!(parse_equation("x0").is_err());
        assert!(parse_equation("x0 = x0 = x0").is_err());
    }
}
