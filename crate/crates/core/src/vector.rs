use crate::error::{Error, Result};

/// Fixed-length vector of finite parameter values in problem units.
///
/// The length is set at construction and never changes; every entry is
/// finite. Both the solution vector `x` and the direction vector `k` use this
/// type.
#[derive(Debug, Clone, PartialEq)]
pub struct ParameterVector(Vec<f64>);

impl ParameterVector {
    /// Validating constructor: rejects empty vectors and non-finite entries.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidConfig(
                "parameter vector needs at least one entry".into(),
            ));
        }
        if !values.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFinite {
                context: "parameter vector".into(),
            });
        }
        Ok(Self(values))
    }

    /// All-zero vector of length `n >= 1`.
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "parameter vector needs at least one entry");
        Self(vec![0.0; n])
    }

    /// Internal constructor for values produced by our own arithmetic.
    pub(crate) fn from_computed(values: Vec<f64>) -> Self {
        debug_assert!(!values.is_empty());
        debug_assert!(
            values.iter().all(|v| v.is_finite()),
            "computed parameter vector has a non-finite entry: {values:?}"
        );
        Self(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.0.iter()
    }

    /// Euclidean norm, accumulated in index order.
    pub fn norm(&self) -> f64 {
        self.0.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

impl std::ops::Index<usize> for ParameterVector {
    type Output = f64;

    fn index(&self, index: usize) -> &f64 {
        &self.0[index]
    }
}

impl<'a> IntoIterator for &'a ParameterVector {
    type Item = &'a f64;
    type IntoIter = std::slice::Iter<'a, f64>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_non_finite() {
        assert!(ParameterVector::new(vec![]).is_err());
        assert!(ParameterVector::new(vec![1.0, f64::NAN]).is_err());
        assert!(ParameterVector::new(vec![f64::INFINITY]).is_err());
        assert!(ParameterVector::new(vec![0.0, -3.5]).is_ok());
    }

    #[test]
    fn norm_is_euclidean() {
        let v = ParameterVector::new(vec![3.0, 4.0]).unwrap();
        assert_eq!(v.norm(), 5.0);
        assert_eq!(ParameterVector::zeros(3).norm(), 0.0);
    }
}
