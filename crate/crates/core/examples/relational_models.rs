//! Closes a set of binary relations into a finite relational Kleene algebra
//! with domain and antidomain, then checks it and exports it as `.fka`.

use katlab::relational::DEFAULT_CAP;
use katlab::{check_suite, generate_relational_model, print_algebra, Relation, SuiteId};

fn main() {
    let gens: Vec<Relation> = ["rel 3 {(0,1),(1,2)}", "rel 3 {(2,2)}"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let model = generate_relational_model(3, &gens, DEFAULT_CAP).unwrap();
    println!("{} relations, {} subidentities", model.relations.len(), model.subidentities().len());
    for suite in [SuiteId::Kleene, SuiteId::Skat, SuiteId::BooleanTestImage] {
        println!("{suite}: {}", check_suite(&model.expansion, suite).unwrap().holds_all());
    }

    let edge = generate_relational_model(2, &["rel 2 {(0,1)}".parse().unwrap()], DEFAULT_CAP).unwrap();
    for (i, r) in edge.relations.iter().enumerate() {
        println!("{i}: {r}");
    }
    print!("{}", print_algebra(&edge.expansion));
}
