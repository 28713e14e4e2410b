//! Expands Kleene algebras to one-sorted KAt models: the piecewise tables
//! any algebra admits, and the tables induced by a two-sorted test algebra.

use katlab::constructions::{expand_ka_to_kat1, expand_kat_to_kat1};
use katlab::{check_suite, fixtures, print_algebra, SuiteId, TestAlgebra};

fn main() {
    let a4 = fixtures::a4().base;
    let exp = expand_ka_to_kat1(&a4);
    print!("{}", print_algebra(&exp));
    println!("kat1: {}", check_suite(&exp, SuiteId::Kat1).unwrap().holds_all());
    println!("skat: {}", check_suite(&exp, SuiteId::Skat).unwrap().holds_all());

    let a3 = fixtures::a3().base;
    let from_kat = expand_kat_to_kat1(&a3, &TestAlgebra::zero_one(&a3)).unwrap();
    println!("\nA3 with tests {{0,1}}:");
    print!("{}", print_algebra(&from_kat));
}
