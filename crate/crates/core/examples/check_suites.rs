//! Parses an algebra in `.fka` text and checks a few axiom suites on it.
//!
//! $ cargo run --example check_suites [path/to/model.fka]

use katlab::{check_suite, fixtures, parse_algebra, SuiteId};

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable file"),
        None => fixtures::A3_FKA.to_string(),
    };
    let exp = parse_algebra(&text).expect("valid .fka");
    for suite in [SuiteId::Kleene, SuiteId::Predomain, SuiteId::Domain] {
        let report = check_suite(&exp, suite).expect("tables present");
        println!("{report}\n");
    }
}
