//! Command-line front end. Every command is a pure function of its arguments
//! and input files, returning an exit code plus the text to print.
//!
//! Exit codes: `0` the property holds (or the command succeeded), `1` it
//! fails, `2` usage, parse, or model errors.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::appendix;
use crate::constructions::{expand_ka_to_kat1, expand_ka_to_residuated_kat1};
use crate::fka::{parse_algebra, print_algebra};
use crate::search::{enumerate_expansions, SearchSpec, DEFAULT_SEARCH_BUDGET};
use crate::semantics::{kat1_equation_holds, kat_equation_holds, KatModel, Verdict, DEFAULT_BUDGET};
use crate::terms::{parse_equation, parse_kat_term, print_term, translate, AnyEquation};
use crate::theories::{check_suite, SuiteId, UnaryExpansion, UnaryOp};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "katlab", version, about = "Finite-model workbench for Kleene algebras with tests")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check an axiom suite against a model.
    Check {
        #[arg(long)]
        suite: SuiteId,
        file: PathBuf,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Add test (and residual) tables to a model and print the result.
    Expand {
        #[arg(long, value_enum)]
        to: ExpandTarget,
        file: PathBuf,
        /// Write to this file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Translate a two-sorted KAT term into the one-sorted language.
    Translate { term: String },
    /// Decide an equation in a model by exhaustive valuation.
    Holds {
        file: PathBuf,
        equation: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Enumerate unary tables for a model against a suite.
    Search {
        #[arg(long)]
        suite: SuiteId,
        /// Comma-separated table names, e.g. `a` or `t,t'`.
        #[arg(long, value_delimiter = ',', required = true)]
        tables: Vec<UnaryOp>,
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// Run the verification battery on the bundled counter-example algebras.
    AppendixVerify {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExpandTarget {
    Kat1,
    Residuated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(code: i32, stdout: impl Into<String>) -> Self {
        CliOutput {
            code,
            stdout: stdout.into(),
            stderr: String::new(),
        }
    }

    fn error(msg: impl std::fmt::Display) -> Self {
        CliOutput {
            code: EXIT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn load(path: &Path) -> Result<UnaryExpansion, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_algebra(&text).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn cmd_check(file: &Path, suite: SuiteId, json: bool) -> CliOutput {
    let exp = match load(file) {
        Ok(exp) => exp,
        Err(e) => return CliOutput::error(e),
    };
    match check_suite(&exp, suite) {
        Ok(report) => {
            let code = if report.holds_all() { EXIT_HOLDS } else { EXIT_FAILS };
            let text = if json { report.to_json() } else { report.to_string() };
            CliOutput::ok(code, with_newline(text))
        }
        Err(e) => CliOutput::error(e),
    }
}

pub fn cmd_expand(file: &Path, to: ExpandTarget, output: Option<&Path>) -> CliOutput {
    let exp = match load(file) {
        Ok(exp) => exp,
        Err(e) => return CliOutput::error(e),
    };
    let added = match to {
        ExpandTarget::Kat1 => expand_ka_to_kat1(&exp.base),
        ExpandTarget::Residuated => expand_ka_to_residuated_kat1(&exp.base),
    };
    let mut out = exp;
    for (op, table) in added.unary_tables() {
        out.set_unary(op, table.to_vec()).expect("same carrier");
    }
    if let Some(arrow) = added.arrow() {
        out.set_arrow(arrow.to_vec()).expect("same carrier");
    }
    let text = print_algebra(&out);
    match output {
        Some(path) => match fs::write(path, &text) {
            Ok(()) => CliOutput::ok(EXIT_HOLDS, format!("wrote {}\n", path.display())),
            Err(e) => CliOutput::error(format!("{}: {e}", path.display())),
        },
        None => CliOutput::ok(EXIT_HOLDS, text),
    }
}

pub fn cmd_translate(term: &str) -> CliOutput {
    match parse_kat_term(term) {
        Ok(t) => CliOutput::ok(EXIT_HOLDS, format!("{}\n", print_term(&translate(&t)))),
        Err(e) => CliOutput::error(e),
    }
}

fn verdict_output<V: std::fmt::Display>(verdict: Verdict<V>) -> CliOutput {
    match verdict {
        Verdict::Holds { checked } => {
            CliOutput::ok(EXIT_HOLDS, format!("holds ({checked} valuations checked)\n"))
        }
        Verdict::Fails { valuation, lhs, rhs } => CliOutput::ok(
            EXIT_FAILS,
            format!("fails at {valuation}: lhs = {lhs}, rhs = {rhs}\n"),
        ),
    }
}

pub fn cmd_holds(file: &Path, equation: &str, budget: u64) -> CliOutput {
    let exp = match load(file) {
        Ok(exp) => exp,
        Err(e) => return CliOutput::error(e),
    };
    let eq = match parse_equation(equation) {
        Ok(eq) => eq,
        Err(e) => return CliOutput::error(e),
    };
    let result = match eq {
        AnyEquation::Kat1(eq) => kat1_equation_holds(&exp, &eq, budget).map(verdict_output),
        AnyEquation::Kat(eq) => KatModel::induced(&exp)
            .map_err(Into::into)
            .and_then(|model| kat_equation_holds(&model, &eq, budget))
            .map(verdict_output),
    };
    result.unwrap_or_else(CliOutput::error)
}

pub fn cmd_search(file: &Path, suite: SuiteId, tables: &[UnaryOp], budget: u64) -> CliOutput {
    let exp = match load(file) {
        Ok(exp) => exp,
        Err(e) => return CliOutput::error(e),
    };
    let spec = SearchSpec::new(exp, suite, tables).with_budget(budget);
    let outcome = match enumerate_expansions(&spec) {
        Ok(outcome) => outcome,
        Err(e) => return CliOutput::error(e),
    };
    let mut text = String::new();
    for (i, found) in outcome.found.iter().enumerate() {
        let cols: Vec<String> = tables
            .iter()
            .map(|&op| {
                let row: Vec<String> = found
                    .unary(op)
                    .expect("enumerated table")
                    .iter()
                    .map(|v| v.to_string())
                    .collect();
                format!("{op} = {}", row.join(" "))
            })
            .collect();
        text.push_str(&format!("#{i}: {}\n", cols.join("; ")));
    }
    text.push_str(&format!("{outcome}\n"));
    let code = if outcome.found.is_empty() { EXIT_FAILS } else { EXIT_HOLDS };
    CliOutput::ok(code, text)
}

pub fn cmd_appendix_verify(json: bool) -> CliOutput {
    match appendix::verify_bundled() {
        Ok(report) => {
            let code = if report.passed() { EXIT_HOLDS } else { EXIT_FAILS };
            let text = if json { report.to_json() } else { report.to_string() };
            CliOutput::ok(code, with_newline(text))
        }
        Err(e) => CliOutput::error(e),
    }
}

pub fn execute(cli: Cli) -> CliOutput {
    match cli.command {
        Command::Check { suite, file, json } => cmd_check(&file, suite, json),
        Command::Expand { to, file, output } => cmd_expand(&file, to, output.as_deref()),
        Command::Translate { term } => cmd_translate(&term),
        Command::Holds { file, equation, budget } => cmd_holds(&file, &equation, budget),
        Command::Search {
            suite,
            tables,
            file,
            budget,
        } => cmd_search(&file, suite, &tables, budget),
        Command::AppendixVerify { json } => cmd_appendix_verify(json),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                CliOutput {
                    code: EXIT_ERROR,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                CliOutput::ok(EXIT_HOLDS, rendered)
            }
        }
    }
}
