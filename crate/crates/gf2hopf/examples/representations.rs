//! Small representations of the self-dual noncommutative Hopf algebra and
//! their tensor products.
//!
//! `cargo run --release --example representations`

use gf2hopf::fixtures;
use gf2hopf::repsearch::{
    decompose, dsl2_atoms, enumerate_reps, regular_rep, rep_equivalence_classes, tensor_table, DSL2_ATOM_LABELS,
};
use gf2hopf::structure::HopfAlgebra;

fn main() {
    let h = HopfAlgebra::from_bialgebra(fixtures::dsl2().1).expect("Hopf algebra");
    for k in 1..=3 {
        let reps = enumerate_reps(h.alg(), k);
        println!("k={k}: {} representations, {} up to equivalence", reps.len(), rep_equivalence_classes(&reps).len());
    }
    let atoms = dsl2_atoms();
    let t = tensor_table(&h, &atoms, &DSL2_ATOM_LABELS);
    print!("{:>4}", "");
    for l in &t.labels {
        print!("{l:>8}");
    }
    println!();
    for (l, row) in t.labels.iter().zip(&t.entries) {
        print!("{l:>4}");
        for e in row {
            print!("{:>8}", e.as_ref().map_or("?".into(), |v| v.join("+")));
        }
        println!();
    }
    let regular = decompose(&regular_rep(h.alg()), &atoms)
        .map(|v| v.iter().map(|&i| DSL2_ATOM_LABELS[i]).collect::<Vec<_>>().join("+"));
    println!("regular = {}", regular.unwrap_or_else(|| "?".into()));
}
