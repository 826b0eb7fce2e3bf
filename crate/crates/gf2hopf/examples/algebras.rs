//! Enumerate unital associative algebras of one dimension and sort them into
//! isomorphism classes.
//!
//! `cargo run --release --example algebras -- 3`

use gf2hopf::enumerate::{classify_algebras, enumerate_algebras};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let all = enumerate_algebras(n);
    let classes = classify_algebras(&all);
    println!("n={n}: {} standard-form algebras in {} classes", all.len(), classes.classes.len());
    for c in &classes.classes {
        let kind = if c.is_commutative() { "commutative" } else { "noncommutative" };
        println!("{:>3}  orbit {:>4}  {kind:<14}  {}", c.label, c.orbit_size, c.relations_doc);
    }
}
