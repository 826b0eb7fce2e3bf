//! Integral, Fourier transform and transport for rows of the bundled
//! dimension-4 table, and the holonomy of a closed path of transports.
//!
//! `cargo run --release --example fourier -- E.5 G.6 L.6`

use gf2hopf::fixtures;
use gf2hopf::fourier::{fourier_transport, holonomy, integral_support, TransportArrow};
use gf2hopf::structure::HopfAlgebra;

fn main() {
    let mut labels: Vec<String> = std::env::args().skip(1).collect();
    if labels.is_empty() {
        labels = ["E.38", "P.3", "G.1"].map(String::from).to_vec();
    }
    let mut path = Vec::new();
    for label in &labels {
        let Some(row) = fixtures::n4_row(label) else {
            eprintln!("no row {label}");
            std::process::exit(2);
        };
        let h = HopfAlgebra::from_bialgebra(row.bialgebra().expect("row parses")).expect("row is Hopf");
        let d = fourier_transport(&h, &row.identification().expect("identification")).expect("transport");
        let names = row.names();
        let support: String = integral_support(&d.integral).into_iter().map(|i| names.name(i)).collect();
        let t = d.transport.expect("transport");
        println!("{label}: -> {}  integral on {{{support}}}", d.target);
        println!("  F {:?}", d.f.to_strings());
        println!("  T {:?}", t.to_strings());
        let (source, target) = row.type_pair().expect("type pair");
        path.push(TransportArrow { source, target, matrix: t });
    }
    match holonomy(&path) {
        Ok((m, order)) => println!("holonomy {:?} order {order:?}", m.to_strings()),
        Err(e) => println!("no holonomy: {e}"),
    }
}
