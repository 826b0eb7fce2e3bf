//! Isomorphism classes of bialgebras and Hopf algebras, and the quiver of
//! algebra -> dual algebra arrows as Graphviz.
//!
//! `cargo run --release --example census -- 4 > quiver.dot`

use gf2hopf::hopfdual::{build_quiver, Census};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for d in 2..=n {
        let (a, b, h) = Census::get(d).totals();
        eprintln!("n={d}: {a} algebras, {b} bialgebras, {h} Hopf algebras");
    }
    let q = build_quiver(n);
    for a in &q.arrows {
        eprintln!("  {:>2} -> {:<2} {}/{}", a.source, a.target, a.multiplicity, a.hopf_multiplicity);
    }
    print!("{}", q.to_dot());
}
