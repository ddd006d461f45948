//! Benchmark test functions with their metadata.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::vector::ParameterVector;

type EvalFn = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// A test function plus the metadata the evolution loop and harness need:
/// initialization box, known optimum, and dimension (taken from the box).
///
/// Objectives are pure and deterministic; evaluation counting is the caller's
/// business. The init box is configuration — [`Objective::with_init_box`]
/// swaps it without touching the function.
#[derive(Clone)]
pub struct Objective {
    name: String,
    init_box: Vec<(f64, f64)>,
    optimum_value: f64,
    optimum_point: ParameterVector,
    eval: EvalFn,
}

impl Objective {
    /// The optimum must evaluate to `optimum_value` within 1e-12 absolute.
    pub fn new(
        name: impl Into<String>,
        eval: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
        init_box: Vec<(f64, f64)>,
        optimum_value: f64,
        optimum_point: ParameterVector,
    ) -> Result<Self> {
        let name = name.into();
        validate_box(&init_box)?;
        if init_box.len() != optimum_point.len() {
            return Err(Error::DimensionMismatch {
                expected: init_box.len(),
                actual: optimum_point.len(),
            });
        }
        let at_optimum = eval(optimum_point.as_slice());
        if (at_optimum - optimum_value).abs() > 1e-12 {
            return Err(Error::InvalidConfig(format!(
                "{name}: optimum point evaluates to {at_optimum}, expected {optimum_value}"
            )));
        }
        Ok(Self {
            name,
            init_box,
            optimum_value,
            optimum_point,
            eval: Arc::new(eval),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.init_box.len()
    }

    pub fn init_box(&self) -> &[(f64, f64)] {
        &self.init_box
    }

    pub fn optimum_value(&self) -> f64 {
        self.optimum_value
    }

    pub fn optimum_point(&self) -> &ParameterVector {
        &self.optimum_point
    }

    pub fn eval(&self, x: &ParameterVector) -> f64 {
        (self.eval)(x.as_slice())
    }

    /// Replace the initialization box; the dimension must not change.
    pub fn with_init_box(mut self, init_box: Vec<(f64, f64)>) -> Result<Self> {
        validate_box(&init_box)?;
        if init_box.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: init_box.len(),
            });
        }
        self.init_box = init_box;
        Ok(self)
    }
}

impl fmt::Debug for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Objective")
            .field("name", &self.name)
            .field("dim", &self.dim())
            .field("init_box", &self.init_box)
            .field("optimum_value", &self.optimum_value)
            .finish()
    }
}

fn validate_box(init_box: &[(f64, f64)]) -> Result<()> {
    if init_box.is_empty() {
        return Err(Error::InvalidConfig("init box needs at least one axis".into()));
    }
    for &(lo, hi) in init_box {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidConfig(format!(
                "init box interval [{lo}, {hi}] is not a finite lo < hi range"
            )));
        }
    }
    Ok(())
}

/// Symmetric three-dimensional quadratic bowl.
pub fn f1(x: f64, y: f64, z: f64) -> f64 {
    x * x + y * y + z * z
}

/// Bohachevsky multi-modal bowl.
pub fn f6(x: f64, y: f64) -> f64 {
    x * x + 2.0 * y * y - 0.3 * (3.0 * PI * x).cos() - 0.4 * (4.0 * PI * y).cos() + 0.7
}

/// Narrow two-dimensional quadratic valley whose major axis runs along y = x.
pub fn f9(x: f64, y: f64) -> f64 {
    let s = x + y;
    let d = 100.0 * y - 100.0 * x;
    s * s + d * d
}

/// The built-in objectives: F1, F6 and F9.
pub fn registry() -> Vec<Objective> {
    vec![
        Objective::new(
            "F1",
            |v| f1(v[0], v[1], v[2]),
            vec![(-5.12, 5.12); 3],
            0.0,
            ParameterVector::zeros(3),
        )
        .expect("F1 metadata is consistent"),
        Objective::new(
            "F6",
            |v| f6(v[0], v[1]),
            vec![(-50.0, 50.0); 2],
            0.0,
            ParameterVector::zeros(2),
        )
        .expect("F6 metadata is consistent"),
        Objective::new(
            "F9",
            |v| f9(v[0], v[1]),
            vec![(-20.0, 20.0); 2],
            0.0,
            ParameterVector::zeros(2),
        )
        .expect("F9 metadata is consistent"),
    ]
}

/// Look up a built-in objective by name, case-insensitively.
pub fn by_name(name: &str) -> Option<Objective> {
    registry()
        .into_iter()
        .find(|o| o.name().eq_ignore_ascii_case(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f1_values() {
        assert_eq!(f1(0.0, 0.0, 0.0), 0.0);
        assert_eq!(f1(1.0, 2.0, 3.0), 14.0);
        assert_eq!(f1(-1.0, -2.0, -3.0), 14.0);
    }

    #[test]
    fn f6_values() {
        // exact zero is unreachable in floats; the summation order leaves
        // one unit of round-off
        assert!(f6(0.0, 0.0).abs() < 1e-12, "{}", f6(0.0, 0.0));
        assert!((f6(0.5, 0.25) - 1.475).abs() < 1e-12, "{}", f6(0.5, 0.25));
        for (x, y) in [(0.3, 1.7), (-4.2, 2.9), (13.0, -27.5)] {
            assert_eq!(f6(x, y), f6(-x, -y));
        }
    }

    #[test]
    fn f9_values() {
        assert_eq!(f9(0.0, 0.0), 0.0);
        assert_eq!(f9(1.0, 1.0), 4.0);
        assert_eq!(f9(1.0, -1.0), 40000.0);
    }

    #[test]
    fn f9_anisotropy_ratio() {
        assert_eq!(f9(1.0, -1.0) / f9(1.0, 1.0), 1e4);
    }

    #[test]
    fn registry_contents() {
        let names: Vec<String> = registry().iter().map(|o| o.name().to_string()).collect();
        assert_eq!(names, ["F1", "F6", "F9"]);
        let f1 = by_name("f1").unwrap();
        assert_eq!(f1.dim(), 3);
        assert_eq!(f1.init_box(), &[(-5.12, 5.12); 3]);
        let f9 = by_name("F9").unwrap();
        assert_eq!(f9.optimum_value(), 0.0);
        assert_eq!(f9.optimum_point().as_slice(), &[0.0, 0.0]);
        assert!(by_name("F7").is_none());
    }

    #[test]
    fn objectives_nonnegative_on_grid() {
        // ~1e6 points per function; the grids have an even point count per
        // axis so the exact origin (where f6 dips to -1e-16 in floats) is
        // never sampled
        let grid = |lo: f64, hi: f64, n: usize| {
            (0..n).map(move |i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        };
        for x in grid(-5.12, 5.12, 100) {
            for y in grid(-5.12, 5.12, 100) {
                for z in grid(-5.12, 5.12, 100) {
                    let v = f1(x, y, z);
                    assert!(v >= 0.0 && v.is_finite());
                }
            }
        }
        for x in grid(-50.0, 50.0, 1000) {
            for y in grid(-50.0, 50.0, 1000) {
                let v = f6(x, y);
                assert!(v >= 0.0 && v.is_finite(), "f6({x}, {y}) = {v}");
            }
        }
        for x in grid(-20.0, 20.0, 1000) {
            for y in grid(-20.0, 20.0, 1000) {
                let v = f9(x, y);
                assert!(v >= 0.0 && v.is_finite());
            }
        }
    }

    #[test]
    fn custom_objectives_are_supported() {
        // any dimension works, e.g. a 30-dimensional bowl
        let bowl = Objective::new(
            "BOWL30",
            |v| v.iter().map(|x| x * x).sum(),
            vec![(-1.0, 1.0); 30],
            0.0,
            ParameterVector::zeros(30),
        )
        .unwrap();
        assert_eq!(bowl.dim(), 30);

        let bad = Objective::new(
            "BAD",
            |v| v[0] + 1.0,
            vec![(-1.0, 1.0)],
            0.0,
            ParameterVector::zeros(1),
        );
        assert!(bad.is_err());

        let rebox = by_name("F9").unwrap().with_init_box(vec![(-1.0, 1.0); 2]).unwrap();
        assert_eq!(rebox.init_box(), &[(-1.0, 1.0); 2]);
        assert!(by_name("F9")
            .unwrap()
            .with_init_box(vec![(-1.0, 1.0); 3])
            .is_err());
    }
}
