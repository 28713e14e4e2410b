//! Residuals of a finite Kleene algebra and the residuated test expansion
//! with `t'(x) = t(t(x) -> 0)`.

use katlab::constructions::expand_ka_to_residuated_kat1;
use katlab::{check_suite, fixtures, SuiteId, UnaryOp};

fn main() {
    let exp = expand_ka_to_residuated_kat1(&fixtures::a3().base);
    let n = exp.size();
    let arrow = exp.arrow().unwrap();
    println!("x -> y");
    for x in 0..n {
        let row: Vec<String> = (0..n).map(|y| arrow[x * n + y].to_string()).collect();
        println!("  {x}: {}", row.join(" "));
    }
    println!("t  = {:?}", exp.unary(UnaryOp::T).unwrap());
    println!("t' = {:?}", exp.unary(UnaryOp::TPrime).unwrap());
    for suite in [SuiteId::ResiduatedKa, SuiteId::ResiduatedKat1, SuiteId::Kat1] {
        println!("{suite}: {}", check_suite(&exp, suite).unwrap().holds_all());
    }
}
