//! Exhaustive search for unary tables. An empty result with a full
//! certificate proves no expansion of the base exists.

use katlab::search::{enumerate_expansions, SearchSpec};
use katlab::{fixtures, SuiteId, UnaryOp};

fn main() {
    let a3 = fixtures::a3().base;
    let kad = enumerate_expansions(&SearchSpec::new(a3.clone(), SuiteId::Kad, &[UnaryOp::A])).unwrap();
    println!("kad over a: {kad}");

    let kat1 = enumerate_expansions(&SearchSpec::new(a3.clone(), SuiteId::Kat1, &[UnaryOp::T, UnaryOp::TPrime]))
        .unwrap();
    println!("kat1 over t, t': {kat1}");
    for exp in &kat1.found {
        println!("  t = {:?}, t' = {:?}", exp.unary(UnaryOp::T).unwrap(), exp.unary(UnaryOp::TPrime).unwrap());
    }

    for suite in [SuiteId::Predomain, SuiteId::Domain] {
        let out = enumerate_expansions(&SearchSpec::new(a3.clone(), suite, &[UnaryOp::D])).unwrap();
        let tables: Vec<_> = out.found.iter().map(|e| e.unary(UnaryOp::D).unwrap().to_vec()).collect();
        println!("{suite} over d: {tables:?}");
    }
}
