//! Quasitriangular structures on the dimension-4 Hopf algebra of a given
//! algebra -> dual type.
//!
//! `cargo run --release --example quasitriangular -- D D`

use gf2hopf::hopfdual::Census;
use gf2hopf::qtri::{enumerate_quasitriangular, yang_baxter};
use gf2hopf::structure::BasisNames;

fn main() {
    let mut args = std::env::args().skip(1);
    let alg = args.next().unwrap_or_else(|| "E".into());
    let ty = args.next().unwrap_or_else(|| "E".into());
    let census = Census::get(4);
    let Some(class) = census.hopf_classes().find(|c| c.algebra_label == alg && c.coalgebra_type == ty) else {
        eprintln!("no Hopf algebra of type {alg} -> {ty}");
        std::process::exit(2);
    };
    let b = class.bialgebra();
    let names = BasisNames::standard(4);
    println!("{alg} -> {ty}: {}", b.coalg.describe(&names));
    for q in enumerate_quasitriangular(&b) {
        println!(
            "  R = {:<40} {:?}{} ybe={}",
            names.format_square(q.r.coeffs),
            q.klass,
            if q.factorisable { " factorisable" } else { "" },
            yang_baxter(&b.alg, q.r.coeffs)
        );
    }
}
