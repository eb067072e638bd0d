//! Log-densities, delay-distribution discretization, and seeded samplers.
//!
//! Gamma distributions follow the mean/coefficient-of-variation convention
//! used throughout the model; the negative binomial is parameterized by its
//! mean and overdispersion (variance = mu + mu^2/psi).

pub mod delay;
pub mod densities;
pub mod sample;

pub use delay::{discretize_delay, infection_to_death_pmf, DelayPMF};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum StatsError {
    #[error("{what} must be positive, got {value}")]
    NonPositive { what: &'static str, value: f64 },
    #[error("{what} must be nonnegative, got {value}")]
    Negative { what: &'static str, value: f64 },
    #[error("horizon must be >= 1, got {0}")]
    BadHorizon(usize),
}

/// A Gamma distribution given by its mean and coefficient of variation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaMeanCV {
    pub mean: f64,
    pub cv: f64,
}

impl GammaMeanCV {
    pub fn new(mean: f64, cv: f64) -> Result<Self, StatsError> {
        if !(mean > 0.0) {
            return Err(StatsError::NonPositive {
                what: "gamma mean",
                value: mean,
            });
        }
        if !(cv > 0.0) {
            return Err(StatsError::NonPositive {
                what: "gamma cv",
                value: cv,
            });
        }
        Ok(GammaMeanCV { mean, cv })
    }

    /// Conventional (shape, rate) parameters: shape = 1/cv^2, rate = shape/mean.
    pub fn shape_rate(&self) -> (f64, f64) {
        let shape = 1.0 / (self.cv * self.cv);
        (shape, shape / self.mean)
    }

    /// Density at x (zero for x <= 0).
    pub fn density(&self, x: f64) -> f64 {
        let (shape, rate) = self.shape_rate();
        if x <= 0.0 {
            return 0.0;
        }
        (shape * rate.ln() - crate::special::lgamma(shape) + (shape - 1.0) * x.ln() - rate * x)
            .exp()
    }
}

/// Converts a mean/CV Gamma specification to (shape, rate).
pub fn mean_cv_to_shape_rate(mean: f64, cv: f64) -> Result<(f64, f64), StatsError> {
    Ok(GammaMeanCV::new(mean, cv)?.shape_rate())
}

/// Negative binomial given by mean `mu` and overdispersion `psi`
/// (variance = mu + mu^2/psi).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NegBinMuPsi {
    pub mu: f64,
    pub psi: f64,
}

impl NegBinMuPsi {
    pub fn new(mu: f64, psi: f64) -> Result<Self, StatsError> {
        if !(mu >= 0.0) {
            return Err(StatsError::Negative {
                what: "negative binomial mean",
                value: mu,
            });
        }
        if !(psi > 0.0) {
            return Err(StatsError::NonPositive {
                what: "negative binomial overdispersion",
                value: psi,
            });
        }
        Ok(NegBinMuPsi { mu, psi })
    }

    pub fn variance(&self) -> f64 {
        self.mu + self.mu * self.mu / self.psi
    }
}

/// A log-density value carrying a flag that distinguishes a domain exit
/// (the argument left the support) from ordinary numeric underflow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogDensity {
    pub value: f64,
    pub domain_exit: bool,
}

impl LogDensity {
    fn finite(value: f64) -> Self {
        LogDensity {
            value,
            domain_exit: false,
        }
    }

    fn domain_exit() -> Self {
        LogDensity {
            value: f64::NEG_INFINITY,
            domain_exit: true,
        }
    }
}

impl From<LogDensity> for f64 {
    fn from(d: LogDensity) -> f64 {
        d.value
    }
}

/// Log density of Gamma(mean, cv) at x; x <= 0 is a domain exit.
pub fn logpdf_gamma_meancv(x: f64, p: &GammaMeanCV) -> LogDensity {
    if x <= 0.0 {
        return LogDensity::domain_exit();
    }
    let (shape, rate) = p.shape_rate();
    LogDensity::finite(densities::gamma_lpdf_fixed(x, shape, rate))
}

/// Log density of Normal(mu, sigma) at x.
pub fn logpdf_normal(x: f64, mu: f64, sigma: f64) -> LogDensity {
    if !(sigma > 0.0) {
        return LogDensity::domain_exit();
    }
    LogDensity::finite(densities::normal_lpdf_fixed(x, mu, sigma))
}

/// Log density of the positive half-normal |N(0, sigma)| at x >= 0.
pub fn logpdf_halfnormal(x: f64, sigma: f64) -> LogDensity {
    if !(sigma > 0.0) || x < 0.0 {
        return LogDensity::domain_exit();
    }
    LogDensity::finite(densities::halfnormal_lpdf_fixed(x, sigma))
}

/// Log density of the folded normal |N(mu, sigma)| at x >= 0; reduces to the
/// half-normal when mu = 0.
pub fn logpdf_folded_normal(x: f64, mu: f64, sigma: f64) -> LogDensity {
    if !(sigma > 0.0) || x < 0.0 {
        return LogDensity::domain_exit();
    }
    LogDensity::finite(densities::folded_normal_lpdf(x, mu, sigma))
}

/// Log density of Exponential with the given rate at x >= 0.
pub fn logpdf_exponential_rate(x: f64, rate: f64) -> LogDensity {
    if !(rate > 0.0) || x < 0.0 {
        return LogDensity::domain_exit();
    }
    LogDensity::finite(rate.ln() - rate * x)
}

/// Log pmf of the negative binomial with mean mu and overdispersion psi.
/// At mu = 0 this degenerates to a point mass at zero.
pub fn logpmf_negbinomial(y: u64, d: &NegBinMuPsi) -> LogDensity {
    if d.mu == 0.0 {
        return if y == 0 {
            LogDensity::finite(0.0)
        } else {
            LogDensity::domain_exit()
        };
    }
    LogDensity::finite(densities::negbin_lpmf(y, d.mu, d.psi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::delay::adaptive_simpson;

    #[test]
    fn mean_cv_round_trip() {
        for &(mean, cv) in &[(1.0, 1.0), (5.1, 0.86), (17.8, 0.45), (6.5, 0.62), (0.3, 2.0)] {
            let (shape, rate) = mean_cv_to_shape_rate(mean, cv).unwrap();
            let back_mean = shape / rate;
            let back_cv = 1.0 / shape.sqrt();
            assert!((back_mean - mean).abs() < 1e-12);
            assert!((back_cv - cv).abs() < 1e-12);
        }
    }

    #[test]
    fn cv_one_is_exponential() {
        let (shape, rate) = mean_cv_to_shape_rate(1.0, 1.0).unwrap();
        assert!((shape - 1.0).abs() < 1e-15);
        assert!((rate - 1.0).abs() < 1e-15);
    }

    #[test]
    fn paper_delay_parameters() {
        // Frozen from the shape = 1/cv^2, rate = shape/mean identities,
        // cross-checked by the Monte Carlo moment test in `sample`.
        let (shape, rate) = mean_cv_to_shape_rate(5.1, 0.86).unwrap();
        assert!((shape - 1.352_082_206_598_161_2).abs() < 1e-12);
        assert!((rate - 0.265_114_158_156_502_2).abs() < 1e-12);
        let (shape, rate) = mean_cv_to_shape_rate(17.8, 0.45).unwrap();
        assert!((shape - 4.938_271_604_938_271).abs() < 1e-12);
        assert!((rate - 0.277_430_988_030_240_0).abs() < 1e-12);
    }

    #[test]
    fn rejects_non_positive_parameters() {
        assert!(mean_cv_to_shape_rate(0.0, 1.0).is_err());
        assert!(mean_cv_to_shape_rate(1.0, -0.5).is_err());
        assert!(NegBinMuPsi::new(1.0, 0.0).is_err());
        assert!(NegBinMuPsi::new(-1.0, 1.0).is_err());
    }

    #[test]
    fn gamma_logpdf_exponential_case() {
        let p = GammaMeanCV::new(1.0, 1.0).unwrap();
        let d = logpdf_gamma_meancv(2.0, &p);
        assert!(!d.domain_exit);
        assert!((d.value - (-2.0)).abs() < 1e-12);
    }

    #[test]
    fn gamma_logpdf_domain_exit_flag() {
        let p = GammaMeanCV::new(5.1, 0.86).unwrap();
        let d = logpdf_gamma_meancv(0.0, &p);
        assert!(d.domain_exit);
        assert_eq!(d.value, f64::NEG_INFINITY);
        // vanishing but in-domain density is not a domain exit
        let d = logpdf_gamma_meancv(1e-300, &p);
        assert!(!d.domain_exit);
    }

    #[test]
    fn gamma_density_normalizes_by_quadrature() {
        // Oracle: adaptive quadrature of exp(logpdf) over the support.
        let p = GammaMeanCV::new(5.1, 0.86).unwrap();
        let total = adaptive_simpson(&|x| p.density(x), 0.0, 300.0, 1e-10);
        assert!((total - 1.0).abs() < 1e-8, "total {total}");
        // And the pdf at the mean agrees with the density helper.
        let d = logpdf_gamma_meancv(5.1, &p);
        assert!((d.value.exp() - p.density(5.1)).abs() < 1e-12);
    }

    #[test]
    fn gamma_vanishes_at_origin_for_shape_above_one() {
        let p = GammaMeanCV::new(5.1, 0.86).unwrap(); // shape 1.35 > 1
        let mut last = logpdf_gamma_meancv(1e-2, &p).value;
        for &x in &[1e-3, 1e-4, 1e-5] {
            let v = logpdf_gamma_meancv(x, &p).value;
            assert!(v < last, "density should decrease toward 0");
            last = v;
        }
    }

    #[test]
    fn halfnormal_at_zero_closed_form() {
        // log(2 / (sigma sqrt(2 pi))), cross-checked by quadrature below.
        let d = logpdf_halfnormal(0.0, 5.0);
        let expected = (2.0 / (5.0 * (2.0 * std::f64::consts::PI).sqrt())).ln();
        assert!((d.value - expected).abs() < 1e-12);
        let total = adaptive_simpson(&|x| logpdf_halfnormal(x, 5.0).value.exp(), 0.0, 80.0, 1e-10);
        assert!((total - 1.0).abs() < 1e-8);
    }

    #[test]
    fn folded_normal_normalizes_and_matches_halfnormal_at_zero_location() {
        let total = adaptive_simpson(
            &|x| logpdf_folded_normal(x, 3.28, 0.4).value.exp(),
            0.0,
            20.0,
            1e-10,
        );
        assert!((total - 1.0).abs() < 1e-8, "total {total}");
        for &x in &[0.1, 1.0, 2.5] {
            let a = logpdf_folded_normal(x, 0.0, 1.3).value;
            let b = logpdf_halfnormal(x, 1.3).value;
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn exponential_rate_at_zero() {
        let d = logpdf_exponential_rate(0.0, 0.03);
        assert!((d.value - 0.03f64.ln()).abs() < 1e-12);
        assert!((d.value - (-3.506_557_897_319_982)).abs() < 1e-9);
    }

    #[test]
    fn standard_normal_at_zero() {
        let d = logpdf_normal(0.0, 0.0, 1.0);
        assert!((d.value - (-0.918_938_533_204_672_7)).abs() < 1e-12);
    }

    #[test]
    fn negbinomial_zero_count_closed_form() {
        // pmf(0) = (psi / (psi + mu))^psi
        let d = NegBinMuPsi::new(2.0, 1.0).unwrap();
        let lp = logpmf_negbinomial(0, &d);
        assert!((lp.value - (1.0f64 / 3.0).ln()).abs() < 1e-12);
    }

    #[test]
    fn negbinomial_degenerate_at_zero_mean() {
        let d = NegBinMuPsi::new(0.0, 1.0).unwrap();
        assert_eq!(logpmf_negbinomial(0, &d).value, 0.0);
        let lp = logpmf_negbinomial(3, &d);
        assert_eq!(lp.value, f64::NEG_INFINITY);
        assert!(lp.domain_exit);
    }

    #[test]
    fn negbinomial_poisson_limit() {
        // psi -> infinity recovers Poisson(mu).
        let d = NegBinMuPsi::new(2.0, 1e8).unwrap();
        let poisson = |y: u64, lambda: f64| {
            y as f64 * lambda.ln() - lambda - crate::special::lgamma(y as f64 + 1.0)
        };
        let lp = logpmf_negbinomial(3, &d).value;
        assert!((lp - poisson(3, 2.0)).abs() < 1e-6);
    }

    #[test]
    fn negbinomial_sums_to_one() {
        for &(mu, psi) in &[(0.5, 2.0), (5.0, 1.0), (50.0, 10.0)] {
            let d = NegBinMuPsi::new(mu, psi).unwrap();
            // Y_max chosen far into the tail.
            let y_max = (mu + 40.0 * d.variance().sqrt()).ceil() as u64 + 200;
            let total: f64 = (0..=y_max)
                .map(|y| logpmf_negbinomial(y, &d).value.exp())
                .sum();
            assert!((total - 1.0).abs() < 1e-8, "(mu={mu}, psi={psi}): {total}");
        }
    }

    #[test]
    fn negbinomial_variance_identity() {
        let d = NegBinMuPsi::new(2.0, 4.0).unwrap();
        assert!((d.variance() - 3.0).abs() < 1e-15);
        assert!(d.variance() > d.mu);
    }

    #[test]
    fn log_densities_continuous_in_parameters() {
        // Dense sweeps: neighboring parameter values produce nearby
        // log-densities (no branch discontinuities in the interior).
        let n = 400;
        for i in 0..n {
            let psi0 = 0.1 + 10.0 * i as f64 / n as f64;
            let psi1 = psi0 + 10.0 / n as f64;
            let a = logpmf_negbinomial(7, &NegBinMuPsi::new(3.0, psi0).unwrap()).value;
            let b = logpmf_negbinomial(7, &NegBinMuPsi::new(3.0, psi1).unwrap()).value;
            assert!((a - b).abs() < 0.05, "jump at psi={psi0}");
        }
        for i in 0..n {
            let cv0 = 0.2 + 2.0 * i as f64 / n as f64;
            let cv1 = cv0 + 2.0 / n as f64;
            let a = logpdf_gamma_meancv(2.0, &GammaMeanCV::new(5.0, cv0).unwrap()).value;
            let b = logpdf_gamma_meancv(2.0, &GammaMeanCV::new(5.0, cv1).unwrap()).value;
            assert!((a - b).abs() < 0.1, "jump at cv={cv0}");
        }
    }
}
