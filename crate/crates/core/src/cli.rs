//! Command-line front end for the benchmark harness.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::Parser;

use crate::error::{Error, Result};
use crate::evolution;
use crate::harness::{self, ExperimentSpec};
use crate::objectives::{self, Objective};
use crate::variant::VariantConfig;

#[derive(Parser, Debug)]
#[command(
    name = "mep-bench",
    version,
    about = "Benchmark self-adaptive evolutionary programming variants"
)]
struct Args {
    /// Test function: F1, F6, F9, or "all"
    #[arg(long, default_value = "all")]
    function: String,

    /// Comma-separated variant labels (MEP, MEP+RS, MEP+DM, MEP+RS+DM) or "all"
    #[arg(long, default_value = "all")]
    variants: String,

    /// Replicate runs per variant; replicate r uses seed + r
    #[arg(long, default_value_t = harness::DEFAULT_REPLICATES)]
    replicates: usize,

    /// Base seed shared by all variants, so comparisons are paired
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Generation cap per run
    #[arg(long, default_value_t = evolution::DEFAULT_MAX_GENERATIONS)]
    generations: usize,

    /// Survivors kept each generation
    #[arg(long, default_value_t = evolution::DEFAULT_SURVIVORS)]
    survivors: usize,

    /// Progeny per survivor
    #[arg(long, default_value_t = evolution::DEFAULT_PROGENY_PER_SURVIVOR)]
    progeny: usize,

    /// Stop a run once best fitness is within this distance of the optimum
    #[arg(long, default_value_t = evolution::DEFAULT_CONVERGENCE_THRESHOLD)]
    threshold: f64,

    /// Initial sigma as a fraction of the mean init-box width
    #[arg(long, default_value_t = evolution::DEFAULT_SIGMA0_FRACTION)]
    sigma0_fraction: f64,

    /// Output directory for the CSV files
    #[arg(long, default_value = ".")]
    out: PathBuf,

    /// List the built-in functions and exit
    #[arg(long)]
    list_functions: bool,
}

/// Parse `argv`, run the requested experiments, and return the process exit
/// code: 0 on success, 2 on usage errors, 1 on runtime errors.
pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&args) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_usage() {
                2
            } else {
                1
            }
        }
    }
}

fn execute(args: &Args) -> Result<()> {
    if args.list_functions {
        for objective in objectives::registry() {
            let (lo, hi) = objective.init_box()[0];
            println!(
                "{}  dim {}  init box [{}, {}]^{}",
                objective.name(),
                objective.dim(),
                lo,
                hi,
                objective.dim()
            );
        }
        return Ok(());
    }

    let functions = resolve_functions(&args.function)?;
    let variants = parse_variants(&args.variants)?;
    let mut results = Vec::with_capacity(functions.len());
    for objective in functions {
        let spec = ExperimentSpec {
            objective,
            variants: variants.clone(),
            replicates: args.replicates,
            base_seed: args.seed,
            survivors: args.survivors,
            progeny_per_survivor: args.progeny,
            max_generations: args.generations,
            convergence_threshold: args.threshold,
            sigma0_fraction: args.sigma0_fraction,
        };
        let result = harness::run_experiment(&spec)?;
        let (median_path, runs_path) = harness::emit_csv(&result, &args.out)?;
        eprintln!("wrote {} and {}", median_path.display(), runs_path.display());
        results.push(result);
    }
    print!("{}", harness::emit_summary(&results)?);
    Ok(())
}

fn resolve_functions(name: &str) -> Result<Vec<Objective>> {
    if name.eq_ignore_ascii_case("all") {
        return Ok(objectives::registry());
    }
    objectives::by_name(name)
        .map(|o| vec![o])
        .ok_or_else(|| Error::UnknownObjective {
            name: name.into(),
            valid: "F1, F6, F9, all".into(),
        })
}

fn parse_variants(list: &str) -> Result<Vec<VariantConfig>> {
    if list.eq_ignore_ascii_case("all") {
        return Ok(VariantConfig::all().to_vec());
    }
    let variants: Vec<VariantConfig> = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(VariantConfig::from_label)
        .collect::<Result<_>>()?;
    if variants.is_empty() {
        return Err(Error::InvalidConfig("variant list is empty".into()));
    }
    Ok(variants)
}
