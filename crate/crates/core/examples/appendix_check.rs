//! Runs the counter-example battery on the bundled A3 and A4 tables.
//!
//! $ cargo run --example appendix_check

fn main() {
    let report = katlab::appendix::verify_bundled().expect("bundled fixtures parse");
    println!("{report}");
}
