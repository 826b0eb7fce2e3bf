//! Run the full pipeline into a directory and re-verify what it wrote.
//!
//! `cargo run --release --example pipeline -- out`

use gf2hopf::pipeline::{self, RunConfig, Stage};

fn main() -> Result<(), pipeline::PipelineError> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "out".into());
    let mut config = RunConfig::new(vec![2, 3, 4], Stage::All, &out);
    config.cache = Some(RunConfig::default_cache(config.out.as_path()));
    let report = pipeline::run(&config)?;
    for s in &report.summaries {
        println!("n={} {:?} matches={}", s.dim, s.found, s.matches);
    }
    let v = pipeline::verify(config.out.as_path())?;
    println!("verified {} records, {} failures", v.checked, v.failures.len());
    Ok(())
}
