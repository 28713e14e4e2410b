mod common;

use std::collections::BTreeSet;

use katlab::constructions::{d_from_a, expand_ka_to_kat1, expand_ka_to_residuated_kat1};
use katlab::relational::Relation;
use katlab::search::{enumerate_expansions, SearchSpec};
use katlab::semantics::{kat1_equation_holds, DEFAULT_BUDGET};
use katlab::terms::{
    parse_kat1_term, parse_kat_term, print_term, translate, Equation, Kat1Term, KatTerm, TestTerm,
};
use katlab::{check_suite, fka, SuiteId, UnaryExpansion, UnaryOp};
use proptest::prelude::*;

fn test_term() -> impl Strategy<Value = TestTerm> {
    let leaf = prop_oneof![
        Just(TestTerm::Zero),
        Just(TestTerm::One),
        (0u32..3).prop_map(TestTerm::Var),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(TestTerm::negate),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| TestTerm::and(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| TestTerm::or(a, b)),
        ]
    })
}

/// Terms built with the folding constructors, the form the parser produces.
fn kat_term() -> impl Strategy<Value = KatTerm> {
    let leaf = prop_oneof![
        (0u32..3).prop_map(KatTerm::ProgVar),
        test_term().prop_map(KatTerm::test),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(p, q)| KatTerm::plus(p, q)),
            (inner.clone(), inner.clone()).prop_map(|(p, q)| KatTerm::times(p, q)),
            inner.prop_map(KatTerm::star),
        ]
    })
}

fn kat1_term() -> impl Strategy<Value = Kat1Term> {
    let leaf = prop_oneof![
        Just(Kat1Term::Zero),
        Just(Kat1Term::One),
        (0u32..3).prop_map(Kat1Term::Var),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Kat1Term::plus(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Kat1Term::times(a, b)),
            inner.clone().prop_map(Kat1Term::star),
            inner.clone().prop_map(Kat1Term::t),
            inner.prop_map(Kat1Term::tprime),
        ]
    })
}

fn relation(m: usize) -> impl Strategy<Value = Relation> {
    proptest::collection::vec((0..m, 0..m), 0..=m * m)
        .prop_map(move |pairs| Relation::from_pairs(m, &pairs).unwrap())
}

fn oracle_star(r: &Relation) -> BTreeSet<(usize, usize)> {
    let m = r.base();
    let mut reach = vec![vec![false; m]; m];
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
    }
    for (i, j) in r.pairs() {
        reach[i][j] = true;
    }
    for k in 0..m {
        for i in 0..m {
            for j in 0..m {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    (0..m)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .filter(|&(i, j)| reach[i][j])
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn kat_terms_round_trip(t in kat_term()) {
        let printed = print_term(&t);
        prop_assert_eq!(parse_kat_term(&printed).unwrap(), t);
    }

    #[test]
    fn kat1_terms_round_trip(t in kat1_term()) {
        let printed = print_term(&t);
        prop_assert_eq!(parse_kat1_term(&printed).unwrap(), t);
    }

    #[test]
    fn translation_is_injective(a in kat_term(), b in kat_term()) {
        prop_assert_eq!(a == b, translate(&a) == translate(&b));
    }

    #[test]
    fn translation_puts_programs_on_even_and_tests_on_odd_indices(t in kat_term()) {
        // program variables land on even indices, tests on odd ones
        let vars = translate(&t).vars();
        let expected: BTreeSet<u32> = t
            .prog_vars()
            .into_iter()
            .map(|n| 2 * n)
            .chain(t.test_vars().into_iter().map(|n| 2 * n + 1))
            .collect();
        prop_assert_eq!(vars, expected);
    }

    #[test]
    fn reflexive_equations_hold(t in kat1_term()) {
        let exp = expand_ka_to_kat1(&katlab::fixtures::a4().base);
        let eq = Equation::new(t.clone(), t);
        prop_assert!(kat1_equation_holds(&exp, &eq, DEFAULT_BUDGET).unwrap().holds());
    }

    #[test]
    fn relational_star_is_reflexive_transitive_closure(r in relation(4)) {
        let star: BTreeSet<_> = r.star().pairs().into_iter().collect();
        prop_assert_eq!(star, oracle_star(&r));
    }

    #[test]
    fn relational_compose_matches_pairs(r in relation(3), s in relation(3)) {
        let expected: BTreeSet<_> = r
            .pairs()
            .into_iter()
            .flat_map(|(i, j)| s.pairs().into_iter().filter(move |&(k, _)| k == j).map(move |(_, l)| (i, l)))
            .collect();
        let got: BTreeSet<_> = r.compose(&s).unwrap().pairs().into_iter().collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn relational_domain_and_antidomain_partition_identity(r in relation(4)) {
        let t = r.t();
        let tp = r.tprime();
        prop_assert!(t.is_subidentity() && tp.is_subidentity());
        prop_assert_eq!(t.union(&tp).unwrap(), Relation::identity(4).unwrap());
        prop_assert!(t.compose(&tp).unwrap().pairs().is_empty());
    }

    #[test]
    fn relation_text_round_trip(r in relation(3)) {
        prop_assert_eq!(r.to_string().parse::<Relation>().unwrap(), r);
    }
}

#[test]
fn kat1_expansions_have_idempotent_t() {
    for alg in common::ka_corpus() {
        let spec = SearchSpec::new(alg.clone(), SuiteId::Kat1, &[UnaryOp::T, UnaryOp::TPrime]);
        for exp in enumerate_expansions(&spec).unwrap().found {
            let t = exp.unary(UnaryOp::T).unwrap();
            assert!(alg.elements().all(|x| t[t[x]] == t[x]), "{}", alg.name());
        }
    }
}

#[test]
fn every_kad_is_a_kat1() {
    let mut seen = 0;
    for alg in common::ka_corpus() {
        let spec = SearchSpec::new(alg.clone(), SuiteId::Kad, &[UnaryOp::A]);
        for exp in enumerate_expansions(&spec).unwrap().found {
            let with_d = d_from_a(&exp).unwrap();
            let d = with_d.unary(UnaryOp::D).unwrap().to_vec();
            let a = with_d.unary(UnaryOp::A).unwrap().to_vec();
            let kat1 = UnaryExpansion::new(alg.clone())
                .with_unary(UnaryOp::T, d)
                .unwrap()
                .with_unary(UnaryOp::TPrime, a)
                .unwrap();
            assert!(check_suite(&kat1, SuiteId::Kat1).unwrap().holds_all(), "{}", alg.name());
            seen += 1;
        }
    }
    assert!(seen > 0);
}

#[test]
fn skat_implies_kat1() {
    for alg in common::ka_corpus() {
        let spec = SearchSpec::new(alg.clone(), SuiteId::Skat, &[UnaryOp::T, UnaryOp::TPrime]);
        for exp in enumerate_expansions(&spec).unwrap().found {
            assert!(check_suite(&exp, SuiteId::Kat1).unwrap().holds_all());
        }
    }
}

#[test]
fn residuated_kat1_with_derived_negation_is_kat1() {
    for alg in common::ka_corpus() {
        let exp = expand_ka_to_residuated_kat1(&alg);
        assert!(check_suite(&exp, SuiteId::ResiduatedKat1).unwrap().holds_all());
        assert!(check_suite(&exp, SuiteId::Kat1).unwrap().holds_all());
    }
}

#[test]
fn reports_are_deterministic() {
    let a3 = katlab::fixtures::a3();
    for suite in [SuiteId::Kleene, SuiteId::Predomain, SuiteId::Domain] {
        assert_eq!(check_suite(&a3, suite).unwrap(), check_suite(&a3, suite).unwrap());
    }
}

#[test]
fn fka_round_trips_corpus_and_relational_models() {
    for alg in common::ka_corpus() {
        let exp = expand_ka_to_residuated_kat1(&alg);
        assert_eq!(fka::parse_algebra(&fka::print_algebra(&exp)).unwrap(), exp);
    }
    let model = common::edge_model();
    let text = fka::print_algebra(&model.expansion);
    assert_eq!(fka::parse_algebra(&text).unwrap(), model.expansion);
}

#[test]
fn patched_star_is_caught() {
    let a3 = katlab::fixtures::a3().base;
    let mut star = a3.star_table().to_vec();
    star[2] = 2;
    let patched =
        katlab::FiniteKleeneAlgebra::new("patched", 0, 1, a3.add_table().to_vec(), a3.mul_table().to_vec(), star)
            .unwrap();
    assert!(!katlab::check_kleene(&patched).holds_all());
    assert!(!common::oracle_is_ka(3, 0, 1, patched.add_table(), patched.mul_table(), patched.star_table()));
}
