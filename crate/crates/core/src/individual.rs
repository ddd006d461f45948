use crate::error::{Error, Result};
use crate::objectives::Objective;
use crate::vector::ParameterVector;

/// Heritable mutation-control parameters.
///
/// `sigma` is the magnitude of the omni-directional (isotropic gaussian)
/// component; `k` is the directional component, restricted to a line through
/// the current point. An all-zero `k` is legal and means purely
/// omni-directional mutation.
#[derive(Debug, Clone, PartialEq)]
pub struct MutationState {
    pub sigma: f64,
    pub k: ParameterVector,
}

impl MutationState {
    pub fn new(sigma: f64, k: ParameterVector) -> Result<Self> {
        if !sigma.is_finite() {
            return Err(Error::NonFinite {
                context: "sigma".into(),
            });
        }
        if sigma < 0.0 {
            return Err(Error::InvalidConfig("sigma must be nonnegative".into()));
        }
        Ok(Self { sigma, k })
    }

    pub fn dim(&self) -> usize {
        self.k.len()
    }
}

/// One population member: solution vector, mutation parameters, and a fitness
/// cache filled by [`Individual::evaluate`].
///
/// Fields are private so the cache can never go stale: `x` is immutable after
/// construction and the only way to set fitness is to evaluate the objective.
#[derive(Debug, Clone, PartialEq)]
pub struct Individual {
    x: ParameterVector,
    mutation: MutationState,
    fitness: Option<f64>,
}

impl Individual {
    /// Build an unevaluated individual; `x` and `k0` must have equal length
    /// and `sigma0` must be nonnegative.
    pub fn new(x: ParameterVector, sigma0: f64, k0: ParameterVector) -> Result<Self> {
        if x.len() != k0.len() {
            return Err(Error::DimensionMismatch {
                expected: x.len(),
                actual: k0.len(),
            });
        }
        let mutation = MutationState::new(sigma0, k0)?;
        Ok(Self {
            x,
            mutation,
            fitness: None,
        })
    }

    /// Internal constructor for spawn operators; skips validation.
    pub(crate) fn from_parts(x: ParameterVector, mutation: MutationState) -> Self {
        debug_assert_eq!(x.len(), mutation.k.len());
        Self {
            x,
            mutation,
            fitness: None,
        }
    }

    pub fn x(&self) -> &ParameterVector {
        &self.x
    }

    pub fn mutation(&self) -> &MutationState {
        &self.mutation
    }

    /// Cached objective value; `None` until evaluated.
    pub fn fitness(&self) -> Option<f64> {
        self.fitness
    }

    pub fn dim(&self) -> usize {
        self.x.len()
    }

    /// Evaluate the objective at `x` and cache the value. Exactly one
    /// objective call per invocation; a non-finite result is an error.
    pub fn evaluate(&mut self, objective: &Objective) -> Result<f64> {
        if objective.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: objective.dim(),
                actual: self.dim(),
            });
        }
        let value = objective.eval(&self.x);
        if !value.is_finite() {
            return Err(Error::Evaluation(format!(
                "{} returned {} at x = {:?}",
                objective.name(),
                value,
                self.x.as_slice()
            )));
        }
        self.fitness = Some(value);
        Ok(value)
    }
}
