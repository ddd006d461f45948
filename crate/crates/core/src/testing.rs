//! Deviate scripting and small statistics helpers shared by the test suites.
//!
//! Production code never touches this module. It exists so unit, property and
//! acceptance tests can pin individual draws and share Monte Carlo plumbing.

use std::collections::VecDeque;

use crate::rng::DeviateSource;

/// Replays queued deviates verbatim, ignoring the requested distribution
/// parameters. Panics when a queue runs dry.
#[derive(Debug, Default)]
pub struct ScriptedStream {
    uniforms: VecDeque<f64>,
    gaussians: VecDeque<f64>,
}

impl ScriptedStream {
    pub fn new(uniforms: Vec<f64>, gaussians: Vec<f64>) -> Self {
        Self {
            uniforms: uniforms.into(),
            gaussians: gaussians.into(),
        }
    }
}

impl DeviateSource for ScriptedStream {
    fn uniform01(&mut self) -> f64 {
        self.uniforms
            .pop_front()
            .expect("scripted uniform01 queue exhausted")
    }

    fn gaussian(&mut self, _mean: f64, _sd: f64) -> f64 {
        self.gaussians
            .pop_front()
            .expect("scripted gaussian queue exhausted")
    }
}

/// Pins every `uniform01` draw to a constant while gaussian draws pass
/// through to the wrapped stream.
#[derive(Debug)]
pub struct PinnedUniform<'a, R: DeviateSource> {
    pub value: f64,
    pub inner: &'a mut R,
}

impl<R: DeviateSource> DeviateSource for PinnedUniform<'_, R> {
    fn uniform01(&mut self) -> f64 {
        self.value
    }

    fn gaussian(&mut self, mean: f64, sd: f64) -> f64 {
        self.inner.gaussian(mean, sd)
    }
}

pub fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Unbiased sample standard deviation.
pub fn sample_sd(xs: &[f64]) -> f64 {
    let m = mean(xs);
    let ss = xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>();
    (ss / (xs.len() - 1) as f64).sqrt()
}

/// Two-sample Kolmogorov-Smirnov statistic: the largest gap between the two
/// empirical distribution functions.
pub fn ks_statistic(a: &[f64], b: &[f64]) -> f64 {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let (n, m) = (a.len(), b.len());
    let (mut i, mut j) = (0usize, 0usize);
    let mut d = 0.0f64;
    while i < n && j < m {
        let x = a[i].min(b[j]);
        while i < n && a[i] <= x {
            i += 1;
        }
        while j < m && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / n as f64 - j as f64 / m as f64).abs());
    }
    d
}

/// Critical value for the two-sample KS test at significance `alpha`
/// (asymptotic form).
pub fn ks_critical(alpha: f64, n: usize, m: usize) -> f64 {
    let c = (-(alpha / 2.0).ln() / 2.0).sqrt();
    c * ((n + m) as f64 / (n as f64 * m as f64)).sqrt()
}

/// Sample moments of paired samples with delta-method standard errors, for
/// "within 3 standard errors" comparisons of means and covariance entries.
#[derive(Debug, Clone, Copy)]
pub struct Moments2 {
    pub mean: [f64; 2],
    pub mean_se: [f64; 2],
    pub cov: [[f64; 2]; 2],
    pub cov_se: [[f64; 2]; 2],
}

pub fn moments2(samples: &[[f64; 2]]) -> Moments2 {
    let n = samples.len();
    assert!(n >= 2);
    let nf = n as f64;
    let mut mean = [0.0f64; 2];
    for s in samples {
        mean[0] += s[0];
        mean[1] += s[1];
    }
    mean[0] /= nf;
    mean[1] /= nf;

    let mut cov = [[0.0f64; 2]; 2];
    let mut prod_sq = [[0.0f64; 2]; 2];
    let mut var = [0.0f64; 2];
    for s in samples {
        let d = [s[0] - mean[0], s[1] - mean[1]];
        for i in 0..2 {
            var[i] += d[i] * d[i];
            for j in 0..2 {
                let p = d[i] * d[j];
                cov[i][j] += p;
                prod_sq[i][j] += p * p;
            }
        }
    }
    let mut cov_se = [[0.0f64; 2]; 2];
    for i in 0..2 {
        var[i] /= nf - 1.0;
        for j in 0..2 {
            let c = cov[i][j] / nf;
            // variance of the product terms around their mean
            let v = (prod_sq[i][j] / nf - c * c).max(0.0);
            cov_se[i][j] = (v / nf).sqrt();
            cov[i][j] /= nf - 1.0;
        }
    }
    let mean_se = [(var[0] / nf).sqrt(), (var[1] / nf).sqrt()];
    Moments2 {
        mean,
        mean_se,
        cov,
        cov_se,
    }
}
