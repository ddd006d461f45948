//! Replicated benchmark runs, median aggregation, CSV and summary output.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::evolution::{self, ConvergenceCurve, RunConfig};
use crate::objectives::Objective;
use crate::variant::VariantConfig;

pub const DEFAULT_REPLICATES: usize = 10;

/// A batch of replicated runs: one objective, several variants, paired seeds.
///
/// Replicate `r` uses seed `base_seed + r` for every variant, so variants are
/// compared on the same initial populations.
#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    pub objective: Objective,
    pub variants: Vec<VariantConfig>,
    pub replicates: usize,
    pub base_seed: u64,
    pub survivors: usize,
    pub progeny_per_survivor: usize,
    pub max_generations: usize,
    pub convergence_threshold: f64,
    pub sigma0_fraction: f64,
}

impl ExperimentSpec {
    /// All four variants with the default run settings.
    pub fn new(objective: Objective) -> Self {
        Self {
            objective,
            variants: VariantConfig::all().to_vec(),
            replicates: DEFAULT_REPLICATES,
            base_seed: 0,
            survivors: evolution::DEFAULT_SURVIVORS,
            progeny_per_survivor: evolution::DEFAULT_PROGENY_PER_SURVIVOR,
            max_generations: evolution::DEFAULT_MAX_GENERATIONS,
            convergence_threshold: evolution::DEFAULT_CONVERGENCE_THRESHOLD,
            sigma0_fraction: evolution::DEFAULT_SIGMA0_FRACTION,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.replicates == 0 {
            return Err(Error::InvalidConfig("replicates must be at least 1".into()));
        }
        if self.variants.is_empty() {
            return Err(Error::InvalidConfig("variant set must be non-empty".into()));
        }
        Ok(())
    }

    pub fn run_config(&self, variant: VariantConfig, replicate: usize) -> RunConfig {
        let mut cfg = RunConfig::new(
            self.objective.clone(),
            variant,
            self.base_seed.wrapping_add(replicate as u64),
        );
        cfg.survivors = self.survivors;
        cfg.progeny_per_survivor = self.progeny_per_survivor;
        cfg.max_generations = self.max_generations;
        cfg.convergence_threshold = self.convergence_threshold;
        cfg.sigma0_fraction = self.sigma0_fraction;
        cfg
    }
}

/// Per-generation medians of best fitness across replicates for one variant.
#[derive(Debug, Clone, PartialEq)]
pub struct MedianCurve {
    pub label: String,
    pub values: Vec<f64>,
}

impl MedianCurve {
    /// Value at generation `g`, carrying the final value forward past the end.
    pub fn value_at(&self, g: usize) -> f64 {
        self.values
            .get(g)
            .copied()
            .unwrap_or_else(|| *self.values.last().expect("median curve is never empty"))
    }
}

/// One replicate's curve, kept for the raw CSV.
#[derive(Debug, Clone)]
pub struct RunRecord {
    pub variant: String,
    pub replicate: usize,
    pub curve: ConvergenceCurve,
}

#[derive(Debug, Clone)]
pub struct ExperimentResult {
    pub function: String,
    pub medians: Vec<MedianCurve>,
    pub runs: Vec<RunRecord>,
}

/// Standard median; an even count averages the two central order statistics.
pub fn median(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::EmptyInput("median of an empty list".into()));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    Ok(if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    })
}

/// Median across replicate curves at each generation. Runs that stopped early
/// are padded by carrying their final value forward, so the result is defined
/// out to the longest run.
pub fn aggregate_median(label: &str, curves: &[ConvergenceCurve]) -> Result<MedianCurve> {
    let len = curves
        .iter()
        .map(|c| c.best_fitness.len())
        .max()
        .ok_or_else(|| Error::EmptyInput("no curves to aggregate".into()))?;
    let mut values = Vec::with_capacity(len);
    for g in 0..len {
        let at_g: Vec<f64> = curves
            .iter()
            .map(|c| {
                c.best_fitness
                    .get(g)
                    .copied()
                    .unwrap_or_else(|| *c.best_fitness.last().expect("curve is never empty"))
            })
            .collect();
        values.push(median(&at_g)?);
    }
    Ok(MedianCurve {
        label: label.into(),
        values,
    })
}

/// Run every (variant, replicate) combination and aggregate median curves.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentResult> {
    spec.validate()?;
    let mut medians = Vec::with_capacity(spec.variants.len());
    let mut runs = Vec::with_capacity(spec.variants.len() * spec.replicates);
    for &variant in &spec.variants {
        let mut curves = Vec::with_capacity(spec.replicates);
        for replicate in 0..spec.replicates {
            let cfg = spec.run_config(variant, replicate);
            let curve = evolution::run(&cfg)?;
            runs.push(RunRecord {
                variant: variant.name().into(),
                replicate,
                curve: curve.clone(),
            });
            curves.push(curve);
        }
        medians.push(aggregate_median(variant.name(), &curves)?);
    }
    Ok(ExperimentResult {
        function: spec.objective.name().into(),
        medians,
        runs,
    })
}

/// Full round-trip precision, scientific notation, '.' decimal separator.
fn format_value(v: f64) -> String {
    format!("{v:e}")
}

/// Write `<function>_median.csv` and `<function>_runs.csv` into `dir`.
///
/// The median file has one column per variant and one row per generation
/// (shorter median curves carry their final value forward); the runs file
/// holds every replicate's raw curve.
pub fn emit_csv(result: &ExperimentResult, dir: &Path) -> Result<(PathBuf, PathBuf)> {
    if result.medians.is_empty() {
        return Err(Error::EmptyInput("no median curves to write".into()));
    }
    fs::create_dir_all(dir)?;
    let median_path = dir.join(format!("{}_median.csv", result.function));
    let runs_path = dir.join(format!("{}_runs.csv", result.function));

    let mut text = String::from("generation");
    for m in &result.medians {
        text.push(',');
        text.push_str(&m.label);
    }
    text.push('\n');
    let rows = result
        .medians
        .iter()
        .map(|m| m.values.len())
        .max()
        .unwrap_or(0);
    for g in 0..rows {
        text.push_str(&g.to_string());
        for m in &result.medians {
            text.push(',');
            text.push_str(&format_value(m.value_at(g)));
        }
        text.push('\n');
    }
    fs::write(&median_path, text)?;

    let mut text = String::from("variant,replicate,generation,best_fitness\n");
    for run in &result.runs {
        for (g, v) in run.curve.best_fitness.iter().enumerate() {
            text.push_str(&format!(
                "{},{},{},{}\n",
                run.variant,
                run.replicate,
                g,
                format_value(*v)
            ));
        }
    }
    fs::write(&runs_path, text)?;
    Ok((median_path, runs_path))
}

/// Plain-text table: one row per function, one column per variant label,
/// cells showing the final median best fitness to two significant digits.
pub fn emit_summary(results: &[ExperimentResult]) -> Result<String> {
    let mut labels: Vec<&str> = Vec::new();
    for result in results {
        for m in &result.medians {
            if !labels.contains(&m.label.as_str()) {
                labels.push(&m.label);
            }
        }
    }
    if labels.is_empty() {
        return Err(Error::EmptyInput("no results to summarize".into()));
    }

    let mut table: Vec<Vec<String>> = Vec::with_capacity(results.len() + 1);
    let mut header = vec!["function".to_string()];
    header.extend(labels.iter().map(|l| l.to_string()));
    table.push(header);
    for result in results {
        let mut row = vec![result.function.clone()];
        for label in &labels {
            let cell = result
                .medians
                .iter()
                .find(|m| m.label == *label)
                .map(|m| format_cell(*m.values.last().expect("median curve is never empty")))
                .unwrap_or_else(|| "-".into());
            row.push(cell);
        }
        table.push(row);
    }

    let columns = table[0].len();
    let widths: Vec<usize> = (0..columns)
        .map(|c| table.iter().map(|row| row[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &table {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    Ok(out)
}

fn format_cell(v: f64) -> String {
    if v == 0.0 {
        "0".into()
    } else {
        format!("{v:.1e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objectives;

    fn small_spec() -> ExperimentSpec {
        let mut spec = ExperimentSpec::new(objectives::by_name("F1").unwrap());
        spec.replicates = 3;
        spec.max_generations = 5;
        spec.survivors = 5;
        spec.progeny_per_survivor = 3;
        spec.base_seed = 11;
        spec
    }

    #[test]
    fn median_conventions() {
        assert_eq!(median(&[3.0, 1.0, 2.0]).unwrap(), 2.0);
        assert_eq!(median(&[1.0, 2.0, 3.0, 4.0]).unwrap(), 2.5);
        assert_eq!(median(&[5.0]).unwrap(), 5.0);
        assert!(median(&[]).is_err());
    }

    #[test]
    fn aggregation_carries_short_runs_forward() {
        let short = ConvergenceCurve {
            best_fitness: vec![4.0, 1.0],
            generations_to_threshold: Some(1),
            evaluations_used: 10,
        };
        let long = ConvergenceCurve {
            best_fitness: vec![6.0, 5.0, 3.0],
            generations_to_threshold: None,
            evaluations_used: 15,
        };
        let m = aggregate_median("MEP", &[short, long]).unwrap();
        assert_eq!(m.values, vec![5.0, 3.0, 2.0]);
        assert_eq!(m.value_at(10), 2.0);
    }

    #[test]
    fn experiment_produces_non_increasing_medians_per_variant() {
        let mut spec = ExperimentSpec::new(objectives::by_name("F1").unwrap());
        spec.base_seed = 42;
        let result = run_experiment(&spec).unwrap();
        assert_eq!(result.medians.len(), 4);
        assert_eq!(result.runs.len(), 40);
        for m in &result.medians {
            assert!(
                m.values.windows(2).all(|w| w[1] <= w[0]),
                "median curve for {} increased",
                m.label
            );
        }
    }

    #[test]
    fn single_replicate_median_equals_the_run() {
        let mut spec = small_spec();
        spec.replicates = 1;
        spec.variants = vec![VariantConfig::mep()];
        let result = run_experiment(&spec).unwrap();
        assert_eq!(result.medians[0].values, result.runs[0].curve.best_fitness);
    }

    #[test]
    fn csv_layout_and_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let tiny = 1e-71;
        let result = ExperimentResult {
            function: "F1".into(),
            medians: vec![
                MedianCurve {
                    label: "MEP".into(),
                    values: vec![1.0, 0.5, tiny],
                },
                MedianCurve {
                    label: "MEP+RS".into(),
                    values: vec![2.0, 1.5, 1.25],
                },
            ],
            runs: vec![RunRecord {
                variant: "MEP".into(),
                replicate: 0,
                curve: ConvergenceCurve {
                    best_fitness: vec![1.0, tiny],
                    generations_to_threshold: Some(1),
                    evaluations_used: 10,
                },
            }],
        };
        let (median_path, runs_path) = emit_csv(&result, dir.path()).unwrap();
        let text = std::fs::read_to_string(&median_path).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[0], "generation,MEP,MEP+RS");
        let last: Vec<&str> = lines[3].split(',').collect();
        assert_eq!(last[0], "2");
        assert_eq!(last[1].parse::<f64>().unwrap().to_bits(), tiny.to_bits());
        assert!(text.ends_with('\n'));

        let runs_text = std::fs::read_to_string(&runs_path).unwrap();
        assert!(runs_text.starts_with("variant,replicate,generation,best_fitness\n"));
        assert_eq!(runs_text.lines().count(), 3);
    }

    #[test]
    fn empty_results_produce_no_files() {
        let dir = tempfile::tempdir().unwrap();
        let empty = ExperimentResult {
            function: "F1".into(),
            medians: vec![],
            runs: vec![],
        };
        assert!(emit_csv(&empty, dir.path()).is_err());
        assert!(!dir.path().join("F1_median.csv").exists());
    }

    #[test]
    fn reruns_are_byte_identical() {
        let spec = small_spec();
        let dir_a = tempfile::tempdir().unwrap();
        let dir_b = tempfile::tempdir().unwrap();
        let (ma, ra) = emit_csv(&run_experiment(&spec).unwrap(), dir_a.path()).unwrap();
        let (mb, rb) = emit_csv(&run_experiment(&spec).unwrap(), dir_b.path()).unwrap();
        assert_eq!(std::fs::read(ma).unwrap(), std::fs::read(mb).unwrap());
        assert_eq!(std::fs::read(ra).unwrap(), std::fs::read(rb).unwrap());
    }

    #[test]
    fn summary_layout() {
        let result = |function: &str, cells: Vec<(&str, f64)>| ExperimentResult {
            function: function.into(),
            medians: cells
                .into_iter()
                .map(|(label, v)| MedianCurve {
                    label: label.into(),
                    values: vec![1.0, v],
                })
                .collect(),
            runs: vec![],
        };
        let results = vec![
            result("F1", vec![("MEP", 3.27e-71), ("MEP+RS", 0.0)]),
            result("F6", vec![("MEP", 0.0)]),
        ];
        let text = emit_summary(&results).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("function"));
        assert!(lines[0].contains("MEP") && lines[0].contains("MEP+RS"));
        assert!(lines[1].contains("3.3e-71"), "{}", lines[1]);
        assert!(lines[1].contains('0'));
        assert!(lines[2].contains("F6"));
        assert!(lines[2].contains('-'), "missing cell shows a dash");

        let single = vec![result("F9", vec![("MEP+RS+DM", 5.0e-9)])];
        let text = emit_summary(&single).unwrap();
        assert_eq!(text.lines().count(), 2);
        assert!(text.contains("5.0e-9"));

        assert!(emit_summary(&[]).is_err());
    }

    #[test]
    fn summary_cells_match_final_median_rows() {
        let spec = small_spec();
        let result = run_experiment(&spec).unwrap();
        let text = emit_summary(std::slice::from_ref(&result)).unwrap();
        let row = text.lines().nth(1).unwrap();
        for m in &result.medians {
            assert!(row.contains(&format_cell(*m.values.last().unwrap())));
        }
    }
}
