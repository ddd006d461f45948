use crate::error::{Error, Result};

/// Lower clamp for every meta-mutated sigma. Tiny enough that it can never
/// influence fitness above the convergence threshold, but it keeps a lineage
/// whose exponential draw came out zero from freezing forever.
pub const SIGMA_FLOOR: f64 = 1e-300;

/// Weight of |k| in the sigma meta-mutation mean. The cross coupling keeps
/// mutation from becoming purely directional.
pub const COUPLING_FRACTION: f64 = 0.1;

/// Which mutation features are active, plus the strategy constants.
///
/// The four flag combinations are the variants compared by the benchmark
/// harness: `MEP`, `MEP+RS`, `MEP+DM` and `MEP+RS+DM`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VariantConfig {
    pub recorded_step: bool,
    pub directional: bool,
    pub coupling_fraction: f64,
    pub lambda_mean: f64,
    pub lambda_sd: f64,
    pub sigma_floor: f64,
}

impl Default for VariantConfig {
    fn default() -> Self {
        Self::new(false, false)
    }
}

impl VariantConfig {
    pub fn new(recorded_step: bool, directional: bool) -> Self {
        Self {
            recorded_step,
            directional,
            coupling_fraction: COUPLING_FRACTION,
            lambda_mean: 1.0,
            lambda_sd: 1.0,
            sigma_floor: SIGMA_FLOOR,
        }
    }

    pub fn mep() -> Self {
        Self::new(false, false)
    }

    pub fn mep_rs() -> Self {
        Self::new(true, false)
    }

    pub fn mep_dm() -> Self {
        Self::new(false, true)
    }

    pub fn mep_rs_dm() -> Self {
        Self::new(true, true)
    }

    /// The four variants in table order.
    pub fn all() -> [Self; 4] {
        [Self::mep(), Self::mep_rs(), Self::mep_dm(), Self::mep_rs_dm()]
    }

    pub fn name(&self) -> &'static str {
        match (self.recorded_step, self.directional) {
            (false, false) => "MEP",
            (true, false) => "MEP+RS",
            (false, true) => "MEP+DM",
            (true, true) => "MEP+RS+DM",
        }
    }

    /// Parse a variant label, case-insensitively.
    pub fn from_label(label: &str) -> Result<Self> {
        match label.to_ascii_uppercase().as_str() {
            "MEP" => Ok(Self::mep()),
            "MEP+RS" => Ok(Self::mep_rs()),
            "MEP+DM" => Ok(Self::mep_dm()),
            "MEP+RS+DM" => Ok(Self::mep_rs_dm()),
            _ => Err(Error::UnknownVariant {
                name: label.into(),
                valid: "MEP, MEP+RS, MEP+DM, MEP+RS+DM".into(),
            }),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.coupling_fraction > 0.0 && self.coupling_fraction.is_finite()) {
            return Err(Error::InvalidConfig(
                "coupling_fraction must be positive and finite".into(),
            ));
        }
        if !(self.lambda_sd > 0.0 && self.lambda_sd.is_finite()) {
            return Err(Error::InvalidConfig(
                "lambda_sd must be positive and finite".into(),
            ));
        }
        if !self.lambda_mean.is_finite() {
            return Err(Error::InvalidConfig("lambda_mean must be finite".into()));
        }
        if !(self.sigma_floor > 0.0 && self.sigma_floor.is_finite()) {
            return Err(Error::InvalidConfig(
                "sigma_floor must be positive and finite".into(),
            ));
        }
        Ok(())
    }
}
