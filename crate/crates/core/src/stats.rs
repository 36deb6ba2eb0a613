//! Empirical distributions, Kolmogorov-Smirnov distances and covariance
//! estimates with batch-means error bars.

use crate::error::{Error, Result};

/// Smallest number of batches used for batch-means errors.
pub const MIN_BATCHES: usize = 8;

/// A non-empty sample, sorted ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalDistribution {
    sorted: Vec<f64>,
}

impl EmpiricalDistribution {
    pub fn new(mut samples: Vec<f64>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptySample);
        }
        if let Some(bad) = samples.iter().find(|x| !x.is_finite()) {
            return Err(Error::NonFinite(format!("sample value {bad}")));
        }
        samples.sort_by(f64::total_cmp);
        Ok(Self { sorted: samples })
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.sorted
    }

    /// Fraction of samples `<= s`.
    pub fn ecdf(&self, s: f64) -> f64 {
        self.sorted.partition_point(|&x| x <= s) as f64 / self.len() as f64
    }

    /// `sup_i max(|i/n - F(x_i)|, |(i-1)/n - F(x_i)|)` over the order
    /// statistics `x_1 <= … <= x_n`.
    pub fn ks_distance<F: FnMut(f64) -> f64>(&self, mut cdf: F) -> f64 {
        let n = self.len() as f64;
        self.sorted
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                let f = cdf(x);
                ((i + 1) as f64 / n - f).abs().max((i as f64 / n - f).abs())
            })
            .fold(0.0, f64::max)
    }

    /// Unbiased mean and variance with jackknife standard errors.
    pub fn moments(&self) -> Result<Moments> {
        moments(&self.sorted)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Moments {
    pub mean: f64,
    pub variance: f64,
    pub mean_stderr: f64,
    pub variance_stderr: f64,
}

/// Mean and `n - 1` variance of `xs`, each with its delete-one jackknife
/// standard error (closed form, `O(n)`).
pub fn moments(xs: &[f64]) -> Result<Moments> {
    let n = xs.len();
    if n < 2 {
        return Err(Error::TooFewSamples { needed: 2, got: n });
    }
    let nf = n as f64;
    let mean = xs.iter().sum::<f64>() / nf;
    let ss: f64 = xs.iter().map(|x| (x - mean).powi(2)).sum();
    let variance = ss / (nf - 1.0);
    let mean_stderr = (variance / nf).sqrt();
    if n < 3 {
        return Ok(Moments { mean, variance, mean_stderr, variance_stderr: f64::NAN });
    }
    // leave-one-out variances: (ss - n/(n-1) d²) / (n-2), d = x - mean
    let loo: Vec<f64> = xs
        .iter()
        .map(|x| {
            let d = x - mean;
            (ss - nf / (nf - 1.0) * d * d) / (nf - 2.0)
        })
        .collect();
    let loo_mean = loo.iter().sum::<f64>() / nf;
    let spread: f64 = loo.iter().map(|v| (v - loo_mean).powi(2)).sum();
    let variance_stderr = ((nf - 1.0) / nf * spread).sqrt();
    Ok(Moments { mean, variance, mean_stderr, variance_stderr })
}

/// `Cov(X(u), X(0))` over replicas, with a batch-means error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovarianceEstimate {
    pub u: f64,
    pub value: f64,
    pub stderr: f64,
    pub batches: usize,
}

/// Sample covariance of coordinate `u_index` with coordinate 0 across
/// `paths` (one vector per replica, all of the same length), labelled by
/// `u_grid[u_index]`. The replicas are cut into `batches >= 8` equal
/// consecutive batches (a remainder is dropped from the error estimate
/// only); the standard error is the spread of the batch covariances over
/// `√batches`.
pub fn path_covariance(paths: &[Vec<f64>], u_grid: &[f64], u_index: usize, batches: usize) -> Result<CovarianceEstimate> {
    let batches = batches.max(MIN_BATCHES);
    if paths.len() < 2 * batches {
        return Err(Error::TooFewSamples { needed: 2 * batches, got: paths.len() });
    }
    if u_index >= u_grid.len() || paths.iter().any(|p| p.len() != u_grid.len()) {
        return Err(Error::InvalidGrid("path length does not match the u grid".into()));
    }
    let pairs: Vec<(f64, f64)> = paths.iter().map(|p| (p[0], p[u_index])).collect();
    let value = covariance(&pairs);
    let size = pairs.len() / batches;
    let per_batch: Vec<f64> = pairs.chunks_exact(size).take(batches).map(covariance).collect();
    let b = batches as f64;
    let mean = per_batch.iter().sum::<f64>() / b;
    let var = per_batch.iter().map(|c| (c - mean).powi(2)).sum::<f64>() / (b - 1.0);
    Ok(CovarianceEstimate { u: u_grid[u_index], value, stderr: (var / b).sqrt(), batches })
}

fn covariance(pairs: &[(f64, f64)]) -> f64 {
    let n = pairs.len() as f64;
    let mx = pairs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pairs.iter().map(|p| p.1).sum::<f64>() / n;
    pairs.iter().map(|&(x, y)| (x - mx) * (y - my)).sum::<f64>() / (n - 1.0)
}
