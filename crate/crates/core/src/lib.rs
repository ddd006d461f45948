//! Self-adaptive evolutionary programming with recorded-step and directional
//! mutation.
//!
//! The library evolves fixed-length real parameter vectors under four mutation
//! variants: conventional meta-evolution (`MEP`), recorded step (`MEP+RS`),
//! directional mutation (`MEP+DM`), and both combined (`MEP+RS+DM`). Every
//! individual carries its own mutation parameters — an omni-directional rate
//! `sigma` and a direction vector `k` — which evolve under the same selection
//! pressure as the solution itself. The directional variants bias mutation
//! along `k`, which is what lets populations make progress along narrow
//! valleys that defeat purely isotropic mutation.
//!
//! [`harness`] drives replicated benchmark runs over the bundled test
//! functions (`F1`, `F6`, `F9`) and writes per-generation convergence curves
//! as CSV; the `mep-bench` binary is the command-line front end. All runs are
//! deterministic given a seed.

pub mod cli;
pub mod error;
pub mod evolution;
pub mod harness;
pub mod individual;
pub mod mutation;
pub mod objectives;
pub mod rng;
pub mod testing;
pub mod variant;
pub mod vector;

pub use error::{Error, Result};
pub use evolution::{ConvergenceCurve, RunConfig};
pub use harness::{ExperimentResult, ExperimentSpec, MedianCurve};
pub use individual::{Individual, MutationState};
pub use objectives::Objective;
pub use rng::{DeviateSource, RandomStream};
pub use variant::VariantConfig;
pub use vector::ParameterVector;
