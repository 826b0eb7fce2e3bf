use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gf2hopf::pipeline::{self, Mode, PipelineError, RunConfig, Stage};

#[derive(Parser)]
#[command(
    name = "gf2hopf",
    version,
    about = "Small algebras, bialgebras and Hopf algebras over F2",
    after_help = "The raw-solution cache lives in $GF2HOPF_CACHE, or <out>/.cache when unset."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute and write the selected stage for each dimension.
    Run(RunArgs),
    /// Re-check an emitted dataset, a directory of them, or a reference table.
    Verify {
        path: PathBuf,
    },
    /// Write the bundled reference tables.
    Export {
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Dimension; repeat or comma-separate for several.
    #[arg(long = "dim", value_delimiter = ',', required = true)]
    dims: Vec<usize>,
    /// algebras | coproducts | classify | quiver | fourier | qtri | reps | all
    #[arg(long, default_value = "all")]
    stage: String,
    /// Catalog label, coproducts stage only.
    #[arg(long)]
    algebra: Option<String>,
    /// computed | fixture
    #[arg(long, default_value = "computed")]
    mode: String,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Ignore and do not write the raw-solution cache.
    #[arg(long)]
    no_cache: bool,
}

fn config(a: RunArgs) -> Result<RunConfig, PipelineError> {
    let cache = (!a.no_cache).then(|| RunConfig::default_cache(&a.out));
    let stage: Stage = a.stage.parse()?;
    Ok(RunConfig {
        dims: a.dims,
        stage,
        algebra: a.algebra,
        mode: a.mode.parse::<Mode>()?,
        jobs: a.jobs,
        out: a.out,
        cache,
    })
}

fn fail(e: &PipelineError) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        PipelineError::Usage(_) => ExitCode::from(2),
        _ => ExitCode::from(1),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match cli.command {
        Command::Run(args) => {
            let report = match config(args).and_then(|c| pipeline::run(&c)) {
                Ok(r) => r,
                Err(e) => return fail(&e),
            };
            for p in &report.written {
                println!("wrote {}", p.display());
            }
            for s in &report.summaries {
                let f = &s.found;
                println!(
                    "n={}: {} algebras, {} bialgebras, {} Hopf, {} quasitriangular pairs [{}]",
                    s.dim,
                    f.algebras,
                    f.bialgebras,
                    f.hopf,
                    f.qt_pairs,
                    if s.matches { "ok" } else { "MISMATCH" }
                );
            }
            if report.all_match() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Verify { path } => match pipeline::verify(&path) {
            Ok(r) => {
                for f in &r.failures {
                    println!("FAIL {f}");
                }
                println!("{} records, {} failures", r.checked, r.failures.len());
                if r.failures.is_empty() {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(e @ PipelineError::Schema(_)) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
            Err(e) => fail(&e),
        },
        Command::Export { out } => match pipeline::export(&out) {
            Ok(files) => {
                for p in files {
                    println!("wrote {}", p.display());
                }
                ExitCode::SUCCESS
            }
            Err(e) => fail(&e),
        },
    }
}
