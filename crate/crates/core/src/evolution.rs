//! The generational loop: initialization, spawning, truncation selection,
//! stopping.

use crate::error::{Error, Result};
use crate::individual::{Individual, MutationState};
use crate::mutation::spawn;
use crate::objectives::Objective;
use crate::rng::{DeviateSource, RandomStream};
use crate::variant::VariantConfig;
use crate::vector::ParameterVector;

pub const DEFAULT_SURVIVORS: usize = 20;
pub const DEFAULT_PROGENY_PER_SURVIVOR: usize = 9;
pub const DEFAULT_MAX_GENERATIONS: usize = 50;
pub const DEFAULT_CONVERGENCE_THRESHOLD: f64 = 1e-8;
pub const DEFAULT_SIGMA0_FRACTION: f64 = 0.1;

/// Settings for a single evolutionary run. Defaults give the standard
/// 20-survivor, 9-progeny setup (a 200-member pool each generation).
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub survivors: usize,
    pub progeny_per_survivor: usize,
    pub max_generations: usize,
    /// Stop once best fitness is within this distance of the optimum value;
    /// `f64::INFINITY` disables early stopping.
    pub convergence_threshold: f64,
    pub seed: u64,
    /// Initial sigma as a fraction of the mean init-box width.
    pub sigma0_fraction: f64,
    pub objective: Objective,
    pub variant: VariantConfig,
}

impl RunConfig {
    pub fn new(objective: Objective, variant: VariantConfig, seed: u64) -> Self {
        Self {
            survivors: DEFAULT_SURVIVORS,
            progeny_per_survivor: DEFAULT_PROGENY_PER_SURVIVOR,
            max_generations: DEFAULT_MAX_GENERATIONS,
            convergence_threshold: DEFAULT_CONVERGENCE_THRESHOLD,
            seed,
            sigma0_fraction: DEFAULT_SIGMA0_FRACTION,
            objective,
            variant,
        }
    }

    /// Survivors plus their progeny: 200 under defaults.
    pub fn population_size(&self) -> usize {
        self.survivors * (1 + self.progeny_per_survivor)
    }

    pub fn validate(&self) -> Result<()> {
        if self.survivors == 0 {
            return Err(Error::InvalidConfig("survivors must be at least 1".into()));
        }
        if self.progeny_per_survivor == 0 {
            return Err(Error::InvalidConfig(
                "progeny_per_survivor must be at least 1".into(),
            ));
        }
        if self.max_generations == 0 {
            return Err(Error::InvalidConfig(
                "max_generations must be at least 1".into(),
            ));
        }
        if self.convergence_threshold.is_nan() || self.convergence_threshold < 0.0 {
            return Err(Error::InvalidConfig(
                "convergence_threshold must be nonnegative".into(),
            ));
        }
        if !(self.sigma0_fraction >= 0.0 && self.sigma0_fraction.is_finite()) {
            return Err(Error::InvalidConfig(
                "sigma0_fraction must be nonnegative and finite".into(),
            ));
        }
        self.variant.validate()
    }
}

/// Best-fitness trajectory of one run. Index 0 is the initial population,
/// before any mutation; pooled truncation selection makes the series
/// non-increasing.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceCurve {
    pub best_fitness: Vec<f64>,
    /// First generation index at which best fitness came within the
    /// convergence threshold of the optimum, if it ever did.
    pub generations_to_threshold: Option<usize>,
    pub evaluations_used: usize,
}

impl ConvergenceCurve {
    pub fn final_best(&self) -> f64 {
        *self.best_fitness.last().expect("curve is never empty")
    }

    pub fn generations_run(&self) -> usize {
        self.best_fitness.len() - 1
    }

    pub fn is_non_increasing(&self) -> bool {
        self.best_fitness.windows(2).all(|w| w[1] <= w[0])
    }
}

/// Create and evaluate the founder population: `survivors` individuals with
/// x uniform in the init box, sigma at `sigma0_fraction` of the mean box
/// width, and a zero direction vector (no initial directional bias).
pub fn init_population<R: DeviateSource>(
    cfg: &RunConfig,
    rng: &mut R,
) -> Result<Vec<Individual>> {
    let init_box = cfg.objective.init_box();
    let dim = cfg.objective.dim();
    let mean_width = init_box.iter().map(|(lo, hi)| hi - lo).sum::<f64>() / dim as f64;
    let sigma0 = (cfg.sigma0_fraction * mean_width).max(cfg.variant.sigma_floor);
    let mut founders = Vec::with_capacity(cfg.survivors);
    for _ in 0..cfg.survivors {
        let x: Vec<f64> = init_box
            .iter()
            .map(|(lo, hi)| lo + rng.uniform01() * (hi - lo))
            .collect();
        let mut founder = Individual::from_parts(
            ParameterVector::from_computed(x),
            MutationState {
                sigma: sigma0,
                k: ParameterVector::zeros(dim),
            },
        );
        founder.evaluate(&cfg.objective)?;
        founders.push(founder);
    }
    Ok(founders)
}

/// Spawn `progeny_per_survivor` children from every parent, evaluate each
/// child once, and truncate the pooled parents and children to the best
/// `survivors`.
///
/// Parents compete with children, which guarantees the best fitness never
/// increases. The returned survivors are sorted ascending by fitness; the
/// stable sort breaks ties in favor of parents, then earlier pool order.
pub fn step_generation<R: DeviateSource>(
    parents: &[Individual],
    cfg: &RunConfig,
    rng: &mut R,
) -> Result<Vec<Individual>> {
    debug_assert_eq!(parents.len(), cfg.survivors);
    debug_assert!(parents.iter().all(|p| p.fitness().is_some()));
    let mut pool = Vec::with_capacity(cfg.population_size());
    pool.extend_from_slice(parents);
    for parent in parents {
        for _ in 0..cfg.progeny_per_survivor {
            let mut child = spawn(parent, &cfg.variant, rng);
            child.evaluate(&cfg.objective)?;
            pool.push(child);
        }
    }
    pool.sort_by(|a, b| {
        a.fitness()
            .expect("pool is fully evaluated")
            .total_cmp(&b.fitness().expect("pool is fully evaluated"))
    });
    pool.truncate(cfg.survivors);
    Ok(pool)
}

/// Run the generational loop to convergence or the generation cap.
pub fn run(cfg: &RunConfig) -> Result<ConvergenceCurve> {
    run_observed(cfg, |_, _| ())
}

/// Like [`run`], additionally invoking `observe(generation, survivors)` after
/// initialization (generation 0) and after every completed generation.
pub fn run_observed<F>(cfg: &RunConfig, mut observe: F) -> Result<ConvergenceCurve>
where
    F: FnMut(usize, &[Individual]),
{
    cfg.validate()?;
    let mut rng = RandomStream::from_seed(cfg.seed);
    let mut parents = init_population(cfg, &mut rng)?;
    let mut evaluations = cfg.survivors;
    let mut best_fitness = vec![best_of(&parents)];
    observe(0, &parents);

    // an infinite threshold would otherwise trip immediately; treat it as
    // "never stop early"
    let target = cfg.objective.optimum_value() + cfg.convergence_threshold;
    let converged = |best: f64| cfg.convergence_threshold.is_finite() && best <= target;

    let mut generations_to_threshold = converged(best_fitness[0]).then_some(0);
    let mut generation = 0;
    while generations_to_threshold.is_none() && generation < cfg.max_generations {
        parents = step_generation(&parents, cfg, &mut rng)?;
        evaluations += cfg.survivors * cfg.progeny_per_survivor;
        generation += 1;
        let best = parents[0].fitness().expect("survivors are evaluated");
        best_fitness.push(best);
        observe(generation, &parents);
        if converged(best) {
            generations_to_threshold = Some(generation);
        }
    }
    Ok(ConvergenceCurve {
        best_fitness,
        generations_to_threshold,
        evaluations_used: evaluations,
    })
}

fn best_of(population: &[Individual]) -> f64 {
    population
        .iter()
        .map(|i| i.fitness().expect("population is evaluated"))
        .fold(f64::INFINITY, f64::min)
}
