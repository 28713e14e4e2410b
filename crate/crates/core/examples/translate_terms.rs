//! Parses KAT terms, translates them to the one-sorted language, and checks
//! an equation in a finite model.

use katlab::constructions::expand_ka_to_kat1;
use katlab::semantics::{kat1_equation_holds, DEFAULT_BUDGET};
use katlab::terms::{parse_kat1_equation, parse_kat_term, print_term};
use katlab::{fixtures, translate};

fn main() {
    for text in ["~b0", "1", "p0 ; b1*", "b0 ; p0 + ~b0 ; p1", "(b0 ; p0)* ; ~b0"] {
        let term = parse_kat_term(text).unwrap();
        println!("{text:<22} => {}", print_term(&translate(&term)));
    }

    let exp = expand_ka_to_kat1(&fixtures::a3().base);
    for text in ["t(t(x0)) = t(x0)", "t(x0 ; x1) = t(x0 ; t(x1))", "x0 ; x0 = x0"] {
        let eq = parse_kat1_equation(text).unwrap();
        match kat1_equation_holds(&exp, &eq, DEFAULT_BUDGET).unwrap() {
            katlab::semantics::Verdict::Holds { checked } => println!("{text}: holds ({checked} valuations)"),
            katlab::semantics::Verdict::Fails { valuation, lhs, rhs } => {
                println!("{text}: fails at {valuation} ({lhs} vs {rhs})")
            }
        }
    }
}
