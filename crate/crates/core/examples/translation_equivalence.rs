//! Compares a KAT term with its translation in both valuation directions.

use katlab::constructions::expand_kat_to_kat1;
use katlab::semantics::{check_translation_equivalence, KatModel, DEFAULT_BUDGET};
use katlab::terms::parse_kat_term;
use katlab::{fixtures, TestAlgebra};

fn main() {
    let alg = fixtures::a4().base;
    let model = KatModel::new(alg.clone(), TestAlgebra::zero_one(&alg));
    let exp = expand_kat_to_kat1(&alg, &model.tests).unwrap();
    for text in ["b0 ; p0", "(b0 ; p0 + ~b0 ; p1)*", "~(b0 + b1) ; p0 ; b1"] {
        let term = parse_kat_term(text).unwrap();
        let report = check_translation_equivalence(&model, &exp, &term, DEFAULT_BUDGET).unwrap();
        println!(
            "{text:<24} agree={} forward={} backward={}",
            report.holds(),
            report.forward_checked,
            report.backward_checked
        );
    }
}
