//! Truncated power-law samplers.

use alloc::vec::Vec;
use libm::{floor, pow};
use rand::Rng;

use crate::{Error, Result};

/// `count` i.i.d. integers on `[min, max]` with `P(x) ∝ x^(−exponent)`.
pub fn sample_truncated_power_law<R: Rng + ?Sized>(
    exponent: f64,
    min: usize,
    max: usize,
    count: usize,
    rng: &mut R,
) -> Vec<usize> {
    DiscretePowerLaw::new(exponent, min, max).sample_n(count, rng)
}

/// Exact inverse-CDF sampler over an integer support.
#[derive(Debug, Clone)]
pub struct DiscretePowerLaw {
    min: usize,
    cdf: Vec<f64>,
}

impl DiscretePowerLaw {
    pub fn new(exponent: f64, min: usize, max: usize) -> DiscretePowerLaw {
        assert!(1 <= min && min <= max, "power-law support [{min}, {max}] is empty or contains 0");
        let mut acc = 0.0;
        let mut cdf: Vec<f64> = (min..=max)
            .map(|x| {
                acc += pow(x as f64, -exponent);
                acc
            })
            .collect();
        for c in &mut cdf {
            *c /= acc;
        }
        DiscretePowerLaw { min, cdf }
    }

    /// `P(X = x)`.
    pub fn pmf(&self, x: usize) -> f64 {
        if x < self.min || x >= self.min + self.cdf.len() {
            return 0.0;
        }
        let i = x - self.min;
        self.cdf[i] - if i == 0 { 0.0 } else { self.cdf[i - 1] }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        let u: f64 = rng.gen();
        let i = self.cdf.partition_point(|&c| c <= u).min(self.cdf.len() - 1);
        self.min + i
    }

    pub fn sample_n<R: Rng + ?Sized>(&self, count: usize, rng: &mut R) -> Vec<usize> {
        (0..count).map(|_| self.sample(rng)).collect()
    }
}

/// Continuous power law on `[lower, upper]` whose samples are rounded to the
/// nearest integer. The real-valued `lower` lets the mean of the rounded
/// variable be tuned continuously.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoundedPowerLaw {
    exponent: f64,
    lower: f64,
    upper: f64,
}

impl RoundedPowerLaw {
    pub fn new(exponent: f64, lower: f64, upper: f64) -> RoundedPowerLaw {
        assert!(exponent != 1.0 && 0.0 < lower && lower <= upper);
        RoundedPowerLaw { exponent, lower, upper }
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    fn cdf(&self, x: f64) -> f64 {
        let e = 1.0 - self.exponent;
        let lo = pow(self.lower, e);
        let hi = pow(self.upper, e);
        if hi == lo {
            return 1.0;
        }
        ((lo - pow(x.clamp(self.lower, self.upper), e)) / (lo - hi)).clamp(0.0, 1.0)
    }

    /// `E[round(X)]`, evaluated bin by bin from the CDF.
    pub fn rounded_mean(&self) -> f64 {
        if self.lower == self.upper {
            return floor(self.lower + 0.5);
        }
        let first = floor(self.lower + 0.5) as usize;
        let last = floor(self.upper + 0.5) as usize;
        (first..=last)
            .map(|k| {
                let k_f = k as f64;
                let mass = self.cdf(k_f + 0.5) - self.cdf(k_f - 0.5);
                k_f * mass
            })
            .sum()
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        let u: f64 = rng.gen();
        let e = 1.0 - self.exponent;
        let lo = pow(self.lower, e);
        let hi = pow(self.upper, e);
        let x = pow(lo - u * (lo - hi), 1.0 / e);
        (floor(x + 0.5) as usize).clamp(floor(self.lower + 0.5).max(1.0) as usize, floor(self.upper) as usize)
    }

    /// Finds the lower cut-off whose rounded mean equals `target_mean`.
    pub fn with_mean(exponent: f64, upper: f64, target_mean: f64) -> Result<RoundedPowerLaw> {
        let at = |lower: f64| RoundedPowerLaw::new(exponent, lower, upper).rounded_mean();
        let (mut lo, mut hi) = (1.0, upper);
        if !(at(lo) <= target_mean && target_mean < at(hi)) {
            return Err(Error::Infeasible(alloc::format!(
                "no lower cut-off gives mean {target_mean} with exponent {exponent} and maximum {upper}"
            )));
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if at(mid) < target_mean {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(RoundedPowerLaw::new(exponent, 0.5 * (lo + hi), upper))
    }
}
