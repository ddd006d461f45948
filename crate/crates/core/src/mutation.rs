//! Mutation and meta-mutation operators.
//!
//! Every operator is a pure function from (parent state, deviate stream) to a
//! child value: the parent is never modified and the fitness cache is neither
//! read nor written. Four spawn operators cover the feature combinations:
//!
//! * [`spawn_plain`] — sigma is redrawn from an exponential whose mean is the
//!   parent sigma, then x takes an isotropic gaussian step at the new rate.
//! * [`spawn_recorded`] — same step, but the child's sigma is set to the
//!   magnitude of the realized displacement instead of the drawn rate.
//! * [`spawn_directional`] — (sigma, k) are meta-mutated first, then x moves
//!   by an isotropic component plus `lambda * k` with `lambda ~ N(1, 1)`.
//! * [`spawn_directional_recorded`] — (sigma, k) are meta-mutated and the new
//!   k *is* the step: x moves by exactly k, so the direction vector records
//!   the displacement that selection then acts on.
//!
//! The sigma meta-mutation is self-similar: scaling (sigma, k) by any c > 0
//! scales the output distribution by exactly c, so the algorithms are scale
//! invariant. It is also orientation independent because the per-component
//! noise is isotropic and k only enters through its norm and a shared scalar
//! multiplier.

use crate::individual::{Individual, MutationState};
use crate::rng::DeviateSource;
use crate::variant::VariantConfig;
use crate::vector::ParameterVector;

/// Realized parent-to-child displacement, componentwise `child - parent` as
/// evaluated in floating point.
#[derive(Debug, Clone, PartialEq)]
pub struct StepRecord {
    pub delta: ParameterVector,
}

impl StepRecord {
    pub fn between(parent: &ParameterVector, child: &ParameterVector) -> Self {
        debug_assert_eq!(parent.len(), child.len());
        let delta = child
            .iter()
            .zip(parent.iter())
            .map(|(c, p)| c - p)
            .collect();
        Self {
            delta: ParameterVector::from_computed(delta),
        }
    }

    pub fn magnitude(&self) -> f64 {
        self.delta.norm()
    }
}

/// Redraw sigma from an exponential distribution with mean
/// `sigma + coupling_fraction * k_norm`, clamped below by the sigma floor.
///
/// The expected value of the unclamped draw equals the mean, so in the
/// absence of selection the rate performs an unbiased multiplicative walk.
pub fn sample_sigma<R: DeviateSource>(
    sigma: f64,
    k_norm: f64,
    cfg: &VariantConfig,
    rng: &mut R,
) -> f64 {
    debug_assert!(sigma >= 0.0 && k_norm >= 0.0);
    let mean = sigma + cfg.coupling_fraction * k_norm;
    // u in [0, 1) keeps ln(1 - u) finite; u = 0 yields a zero draw that the
    // floor absorbs
    let u = rng.uniform01();
    let drawn = -mean * (1.0 - u).ln();
    drawn.max(cfg.sigma_floor)
}

/// Meta-mutate (sigma, k): sigma is redrawn first, one shared lambda scales
/// every k component, and the fresh sigma feeds the per-component noise.
///
/// Sharing lambda is what keeps the direction coherent; the isotropic noise
/// on top lets the preferred direction drift.
pub fn meta_mutate_direction<R: DeviateSource>(
    state: &MutationState,
    cfg: &VariantConfig,
    rng: &mut R,
) -> MutationState {
    let sigma = sample_sigma(state.sigma, state.k.norm(), cfg, rng);
    let lambda = rng.gaussian(cfg.lambda_mean, cfg.lambda_sd);
    let k = state
        .k
        .iter()
        .map(|&ki| rng.gaussian(0.0, sigma) + lambda * ki)
        .collect();
    MutationState {
        sigma,
        k: ParameterVector::from_computed(k),
    }
}

/// The directional x-update for a fixed (sigma, k): per component an
/// isotropic gaussian plus `lambda * k_i`, with one lambda draw shared across
/// components.
pub fn directional_step<R: DeviateSource>(
    x: &ParameterVector,
    state: &MutationState,
    cfg: &VariantConfig,
    rng: &mut R,
) -> ParameterVector {
    let lambda = rng.gaussian(cfg.lambda_mean, cfg.lambda_sd);
    let moved = x
        .iter()
        .zip(state.k.iter())
        .map(|(&xi, &ki)| xi + rng.gaussian(0.0, state.sigma) + lambda * ki)
        .collect();
    ParameterVector::from_computed(moved)
}

/// Conventional meta-mutation: redraw sigma, take an isotropic step.
pub fn spawn_plain<R: DeviateSource>(
    parent: &Individual,
    cfg: &VariantConfig,
    rng: &mut R,
) -> Individual {
    debug_assert!(!cfg.recorded_step && !cfg.directional);
    let sigma = sample_sigma(parent.mutation().sigma, 0.0, cfg, rng);
    let x = parent
        .x()
        .iter()
        .map(|&xi| xi + rng.gaussian(0.0, sigma))
        .collect();
    Individual::from_parts(
        ParameterVector::from_computed(x),
        MutationState {
            sigma,
            k: ParameterVector::zeros(parent.dim()),
        },
    )
}

/// Recorded step: as [`spawn_plain`], but the child's mutation rate becomes
/// the magnitude of the realized displacement, so lineages that improved by
/// small steps keep exploring with small steps.
pub fn spawn_recorded<R: DeviateSource>(
    parent: &Individual,
    cfg: &VariantConfig,
    rng: &mut R,
) -> Individual {
    debug_assert!(cfg.recorded_step && !cfg.directional);
    let sigma = sample_sigma(parent.mutation().sigma, 0.0, cfg, rng);
    let x = parent
        .x()
        .iter()
        .map(|&xi| xi + rng.gaussian(0.0, sigma))
        .collect();
    let x = ParameterVector::from_computed(x);
    // record the realized displacement, not the drawn one, so the stored
    // rate equals ||child.x - parent.x|| in float arithmetic
    let step = StepRecord::between(parent.x(), &x);
    let recorded = step.magnitude().max(cfg.sigma_floor);
    Individual::from_parts(
        x,
        MutationState {
            sigma: recorded,
            k: ParameterVector::zeros(parent.dim()),
        },
    )
}

/// Directional mutation: meta-mutate (sigma, k), then move x with the child's
/// fresh parameters. The x-update draws its own lambda, separate from the one
/// used inside the meta-mutation.
pub fn spawn_directional<R: DeviateSource>(
    parent: &Individual,
    cfg: &VariantConfig,
    rng: &mut R,
) -> Individual {
    debug_assert!(!cfg.recorded_step && cfg.directional);
    let state = meta_mutate_direction(parent.mutation(), cfg, rng);
    let x = directional_step(parent.x(), &state, cfg, rng);
    Individual::from_parts(x, state)
}

/// Recorded step with directional mutation: meta-mutate (sigma, k) and move x
/// by exactly k, no extra noise. The stored k is the realized displacement,
/// so `child.x - parent.x == child.k` holds bit-exactly.
pub fn spawn_directional_recorded<R: DeviateSource>(
    parent: &Individual,
    cfg: &VariantConfig,
    rng: &mut R,
) -> Individual {
    debug_assert!(cfg.recorded_step && cfg.directional);
    let state = meta_mutate_direction(parent.mutation(), cfg, rng);
    let x = parent
        .x()
        .iter()
        .zip(state.k.iter())
        .map(|(&xi, &ki)| xi + ki)
        .collect();
    let x = ParameterVector::from_computed(x);
    let step = StepRecord::between(parent.x(), &x);
    Individual::from_parts(
        x,
        MutationState {
            sigma: state.sigma,
            k: step.delta,
        },
    )
}

/// Spawn one child, dispatching on the variant flags.
pub fn spawn<R: DeviateSource>(
    parent: &Individual,
    cfg: &VariantConfig,
    rng: &mut R,
) -> Individual {
    match (cfg.recorded_step, cfg.directional) {
        (false, false) => spawn_plain(parent, cfg, rng),
        (true, false) => spawn_recorded(parent, cfg, rng),
        (false, true) => spawn_directional(parent, cfg, rng),
        (true, true) => spawn_directional_recorded(parent, cfg, rng),
    }
}
