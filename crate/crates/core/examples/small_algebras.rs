//! Every Kleene algebra with at most three elements, up to isomorphism.

use katlab::{enumerate_small_kleene_algebras, print_algebra, UnaryExpansion};

fn main() {
    let corpus = enumerate_small_kleene_algebras(3).unwrap();
    println!("{} algebras\n", corpus.len());
    for alg in corpus {
        println!("{}", print_algebra(&UnaryExpansion::new(alg)));
    }
}
