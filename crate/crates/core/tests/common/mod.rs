//! Independent oracles and corpora shared by the integration tests.
//!
//! Oracles here recompute facts from raw tables with their own loops; they
//! deliberately avoid the library's axiom engine.

#![allow(dead_code)]

use std::collections::BTreeSet;

use katlab::relational::{generate_relational_model, RelError, Relation, RelationalModel};
use katlab::semantics::KatModel;
use katlab::terms::{KatTerm, TestTerm};
use katlab::{FiniteKleeneAlgebra, TestAlgebra, UnaryExpansion};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Tables = (Vec<usize>, Vec<usize>, Vec<usize>);

/// Closure cap used for generated relational corpora.
pub const RELATIONAL_CAP: usize = 128;

/// Checks every Kleene algebra law directly on raw tables.
pub fn oracle_is_ka(n: usize, zero: usize, one: usize, add: &[usize], mul: &[usize], star: &[usize]) -> bool {
    let a = |x: usize, y: usize| add[x * n + y];
    let m = |x: usize, y: usize| mul[x * n + y];
    let le = |x: usize, y: usize| a(x, y) == y;
    let r = 0..n;
    for x in r.clone() {
        if a(x, x) != x || a(x, zero) != x || m(one, x) != x || m(x, one) != x {
            return false;
        }
        if m(zero, x) != zero || m(x, zero) != zero {
            return false;
        }
        let s = star[x];
        if !le(a(one, m(x, s)), s) || !le(a(one, m(s, x)), s) {
            return false;
        }
        for y in r.clone() {
            if a(x, y) != a(y, x) {
                return false;
            }
            // induction: x·y <= y implies x*·y <= y, and y·x <= y implies y·x* <= y
            if le(m(x, y), y) && !le(m(s, y), y) {
                return false;
            }
            if le(m(y, x), y) && !le(m(y, s), y) {
                return false;
            }
            for z in r.clone() {
                if a(a(x, y), z) != a(x, a(y, z)) || m(m(x, y), z) != m(x, m(y, z)) {
                    return false;
                }
                if m(x, a(y, z)) != a(m(x, y), m(x, z)) || m(a(x, y), z) != a(m(x, z), m(y, z)) {
                    return false;
                }
            }
        }
    }
    true
}

fn all_tables(cells: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..cells {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

fn relabel(n: usize, perm: &[usize], (add, mul, star): &Tables) -> Tables {
    let mut a = vec![0; n * n];
    let mut m = vec![0; n * n];
    let mut s = vec![0; n];
    for x in 0..n {
        s[perm[x]] = perm[star[x]];
        for y in 0..n {
            a[perm[x] * n + perm[y]] = perm[add[x * n + y]];
            m[perm[x] * n + perm[y]] = perm[mul[x * n + y]];
        }
    }
    (a, m, s)
}

fn perms_fixing_01(n: usize) -> Vec<Vec<usize>> {
    let movable: Vec<usize> = (2..n).collect();
    permute(&movable)
        .into_iter()
        .map(|tail| [vec![0, 1], tail].concat())
        .collect()
}

fn permute(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permute(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

/// Kleene algebras on `n` elements (zero `0`, one `1`, or the one-point
/// algebra) up to isomorphism, by brute force over every addition and
/// multiplication table.
pub fn oracle_ka_iso_classes(n: usize) -> BTreeSet<Tables> {
    let mut classes = BTreeSet::new();
    if n == 1 {
        classes.insert((vec![0], vec![0], vec![0]));
        return classes;
    }
    let (zero, one) = (0, 1);
    let adds: Vec<Vec<usize>> = all_tables(n * n, n)
        .into_iter()
        .filter(|a| {
            (0..n).all(|x| {
                a[x * n + x] == x
                    && a[x * n + zero] == x
                    && (0..n).all(|y| {
                        a[x * n + y] == a[y * n + x]
                            && (0..n).all(|z| a[a[x * n + y] * n + z] == a[x * n + a[y * n + z]])
                    })
            })
        })
        .collect();
    let muls: Vec<Vec<usize>> = all_tables(n * n, n)
        .into_iter()
        .filter(|m| {
            (0..n).all(|x| {
                m[one * n + x] == x
                    && m[x * n + one] == x
                    && m[zero * n + x] == zero
                    && m[x * n + zero] == zero
                    && (0..n).all(|y| (0..n).all(|z| m[m[x * n + y] * n + z] == m[x * n + m[y * n + z]]))
            })
        })
        .collect();
    let stars = all_tables(n, n);
    let perms = perms_fixing_01(n);
    for add in &adds {
        for mul in &muls {
            for star in &stars {
                if oracle_is_ka(n, zero, one, add, mul, star) {
                    let t = (add.clone(), mul.clone(), star.clone());
                    let canon = perms.iter().map(|p| relabel(n, p, &t)).min().unwrap();
                    classes.insert(canon);
                }
            }
        }
    }
    classes
}

/// The library corpus of Kleene algebras with at most three elements.
pub fn ka_corpus() -> Vec<FiniteKleeneAlgebra> {
    katlab::enumerate_small_kleene_algebras(3).expect("n <= 3 is supported")
}

/// Relational domain computed from the pair list.
pub fn oracle_domain(r: &Relation) -> BTreeSet<(usize, usize)> {
    r.pairs().into_iter().map(|(i, _)| (i, i)).collect()
}

/// Generator sets for the relational corpus: every set of at most three
/// relations on a one- or two-point base, and a seeded sample on three
/// points. Models above [`RELATIONAL_CAP`] are skipped.
pub fn relational_corpus() -> Vec<RelationalModel> {
    let mut out = Vec::new();
    for m in 1..=2usize {
        let all: Vec<Relation> = (0u64..1 << (m * m))
            .map(|bits| {
                let pairs: Vec<(usize, usize)> = (0..m * m)
                    .filter(|k| bits >> k & 1 == 1)
                    .map(|k| (k / m, k % m))
                    .collect();
                Relation::from_pairs(m, &pairs).unwrap()
            })
            .collect();
        let k = all.len();
        let mut sets: Vec<Vec<Relation>> = vec![vec![]];
        for i in 0..k {
            sets.push(vec![all[i]]);
            for j in i + 1..k {
                sets.push(vec![all[i], all[j]]);
                for l in j + 1..k {
                    sets.push(vec![all[i], all[j], all[l]]);
                }
            }
        }
        for gens in sets {
            push_model(&mut out, m, &gens);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for _ in 0..120 {
        let count = rng.gen_range(1..=3);
        let gens: Vec<Relation> = (0..count)
            .map(|_| {
                let pairs: Vec<(usize, usize)> = (0..9)
                    .filter(|_| rng.gen_bool(0.25))
                    .map(|k| (k / 3, k % 3))
                    .collect();
                Relation::from_pairs(3, &pairs).unwrap()
            })
            .collect();
        push_model(&mut out, 3, &gens);
    }
    out
}

fn push_model(out: &mut Vec<RelationalModel>, m: usize, gens: &[Relation]) {
    match generate_relational_model(m, gens, RELATIONAL_CAP) {
        Ok(model) => out.push(model),
        Err(RelError::CapExceeded(_)) => {}
        Err(e) => panic!("unexpected relational error: {e}"),
    }
}

/// Subidentities of a relational model with complement relative to the
/// identity.
pub fn relational_tests(model: &RelationalModel) -> TestAlgebra {
    let id = Relation::identity(model.base).unwrap();
    let pairs: Vec<(usize, usize)> = model
        .subidentities()
        .into_iter()
        .map(|x| {
            let r = model.relation(x);
            let comp: Vec<(usize, usize)> = id.pairs().into_iter().filter(|p| !r.contains(p.0, p.1)).collect();
            let neg = Relation::from_pairs(model.base, &comp).unwrap();
            (x, model.index_of(&neg).expect("closure contains complements"))
        })
        .collect();
    TestAlgebra::new(&model.expansion.base, &pairs).unwrap()
}

/// The relational KAT on two points generated by the edge `(0,1)`.
pub fn edge_model() -> RelationalModel {
    let edge = Relation::from_pairs(2, &[(0, 1)]).unwrap();
    generate_relational_model(2, &[edge], RELATIONAL_CAP).unwrap()
}

/// Fixture KATs: A3 and A4 with tests {0,1}, and the edge model with every
/// subidentity as a test.
pub fn fixture_kats() -> Vec<(String, KatModel)> {
    let a3 = katlab::fixtures::a3().base;
    let a4 = katlab::fixtures::a4().base;
    let edge = edge_model();
    vec![
        ("a3".into(), KatModel::new(a3.clone(), TestAlgebra::zero_one(&a3))),
        ("a4".into(), KatModel::new(a4.clone(), TestAlgebra::zero_one(&a4))),
        (
            "rel2-edge".into(),
            KatModel::new(edge.expansion.base.clone(), relational_tests(&edge)),
        ),
    ]
}

fn random_test(rng: &mut ChaCha8Rng, depth: usize) -> TestTerm {
    if depth == 0 || rng.gen_bool(0.4) {
        return match rng.gen_range(0..6) {
            0 => TestTerm::Zero,
            1 => TestTerm::One,
            k => TestTerm::Var((k % 2) as u32),
        };
    }
    match rng.gen_range(0..3) {
        0 => TestTerm::negate(random_test(rng, depth - 1)),
        1 => TestTerm::and(random_test(rng, depth - 1), random_test(rng, depth - 1)),
        _ => TestTerm::or(random_test(rng, depth - 1), random_test(rng, depth - 1)),
    }
}

/// Random KAT term of depth at most `depth` over `b0 b1 p0 p1`.
pub fn random_kat_term(rng: &mut ChaCha8Rng, depth: usize) -> KatTerm {
    if depth == 0 || rng.gen_bool(0.25) {
        return if rng.gen_bool(0.5) {
            KatTerm::ProgVar(rng.gen_range(0..2))
        } else {
            KatTerm::FromTest(random_test(rng, depth))
        };
    }
    match rng.gen_range(0..4) {
        0 => KatTerm::Plus(
            Box::new(random_kat_term(rng, depth - 1)),
            Box::new(random_kat_term(rng, depth - 1)),
        ),
        1 => KatTerm::Times(
            Box::new(random_kat_term(rng, depth - 1)),
            Box::new(random_kat_term(rng, depth - 1)),
        ),
        2 => KatTerm::Star(Box::new(random_kat_term(rng, depth - 1))),
        _ => KatTerm::FromTest(random_test(rng, depth)),
    }
}

/// `count` distinct random terms from a fixed seed.
pub fn kat_term_corpus(seed: u64, count: usize, depth: usize) -> Vec<KatTerm> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    while out.len() < count {
        let t = random_kat_term(&mut rng, depth);
        if seen.insert(t.to_string()) {
            out.push(t);
        }
    }
    out
}

/// Checks the Boolean-algebra facts about `image(t)` directly: closure under
/// `+`, `·`, `t'`, and the complement laws.
pub fn oracle_test_image_boolean(exp: &UnaryExpansion) -> bool {
    let alg = &exp.base;
    let t = exp.unary(katlab::UnaryOp::T).unwrap();
    let tp = exp.unary(katlab::UnaryOp::TPrime).unwrap();
    let image: BTreeSet<usize> = t.iter().copied().collect();
    image.iter().all(|&x| {
        image.contains(&tp[x])
            && alg.mul(tp[x], x) == alg.zero()
            && alg.add(x, tp[x]) == alg.one()
            && image
                .iter()
                .all(|&y| image.contains(&alg.add(x, y)) && image.contains(&alg.mul(x, y)) && alg.mul(x, y) == alg.mul(y, x))
    })
}
