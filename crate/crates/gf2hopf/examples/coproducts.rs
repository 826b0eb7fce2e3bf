//! All bialgebra coproducts on one catalog algebra, with the dual type and
//! antipode of each.
//!
//! `cargo run --release --example coproducts -- 3 D`

use gf2hopf::catalog;
use gf2hopf::coproducts::solve_coproducts;
use gf2hopf::structure::BasisNames;

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let label = args.next().unwrap_or_else(|| "D".into());
    let Some(entry) = catalog::entry(n, &label) else {
        eprintln!("no algebra {label} in dimension {n}");
        std::process::exit(2);
    };
    let names = BasisNames::standard(n);
    let set = solve_coproducts(&entry.table_form());
    println!("{label}: {} coproducts, {} with antipode", set.solutions.len(), set.hopf_count());
    for s in &set.solutions {
        let eps = names.format_vector(s.coalg.eps_bits());
        let hopf = if s.hopf() { "Hopf" } else { "" };
        println!("  eps={eps:<8} {:<60} dual {:<3} {hopf}", s.coalg.describe(&names), s.coalg_type);
    }
}
