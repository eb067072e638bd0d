//! Density kernels generic over the scalar type, so the same expressions
//! serve plain evaluation and taped differentiation.
//!
//! Parameter validity (positive scales and the like) is the caller's
//! responsibility here; the wrappers in the parent module and the transform
//! layer in `posterior` enforce it.

use crate::graddiff::Real;
use crate::special::lgamma;

const LN_2PI: f64 = 1.837_877_066_409_345_5;

/// log Normal(x | mu, sigma) with constant location and scale.
pub fn normal_lpdf_fixed<R: Real>(x: R, mu: f64, sigma: f64) -> R {
    let z = x.add_c(-mu).mul_c(1.0 / sigma);
    z.square().mul_c(-0.5).add_c(-sigma.ln() - 0.5 * LN_2PI)
}

/// log Normal(x | mu, sigma) with every argument live.
pub fn normal_lpdf<R: Real>(x: R, mu: R, sigma: R) -> R {
    let z = (x - mu) / sigma;
    z.square().mul_c(-0.5) - sigma.ln() + x.lit(-0.5 * LN_2PI)
}

/// log half-normal |N(0, sigma)| at x >= 0, constant sigma.
pub fn halfnormal_lpdf_fixed<R: Real>(x: R, sigma: f64) -> R {
    let z = x.mul_c(1.0 / sigma);
    z.square()
        .mul_c(-0.5)
        .add_c(2.0f64.ln() - sigma.ln() - 0.5 * LN_2PI)
}

/// log half-normal |N(0, sigma)| at x >= 0 with live sigma.
pub fn halfnormal_lpdf_live_sigma<R: Real>(x: R, sigma: R) -> R {
    let z = x / sigma;
    z.square().mul_c(-0.5) - sigma.ln() + x.lit(2.0f64.ln() - 0.5 * LN_2PI)
}

/// log folded normal |N(mu, sigma)| at x >= 0:
/// log(phi((x-mu)/sigma) + phi((x+mu)/sigma)) - log sigma, computed with a
/// log-sum-exp arrangement that never overflows (for x, mu >= 0 the near
/// branch dominates).
pub fn folded_normal_lpdf<R: Real>(x: R, mu: f64, sigma: f64) -> R {
    let a = x.add_c(-mu).mul_c(1.0 / sigma).square().mul_c(-0.5);
    let b = x.add_c(mu).mul_c(1.0 / sigma).square().mul_c(-0.5);
    a + (b - a).exp().log1p().add_c(-sigma.ln() - 0.5 * LN_2PI)
}

/// Folded normal with live scale (the R0 prior, whose scale kappa is a
/// model parameter).
pub fn folded_normal_lpdf_live_sigma<R: Real>(x: R, mu: f64, sigma: R) -> R {
    let a = (x.add_c(-mu) / sigma).square().mul_c(-0.5);
    let b = (x.add_c(mu) / sigma).square().mul_c(-0.5);
    a + (b - a).exp().log1p() - sigma.ln() + x.lit(-0.5 * LN_2PI)
}

/// log Exponential(x | rate) with constant rate, x >= 0.
pub fn exponential_lpdf_fixed<R: Real>(x: R, rate: f64) -> R {
    x.mul_c(-rate).add_c(rate.ln())
}

/// log Exponential(x | rate) with live rate, x >= 0.
pub fn exponential_lpdf<R: Real>(x: R, rate: R) -> R {
    rate.ln() - rate * x
}

/// log Gamma(x | shape, rate) with constant parameters, x > 0.
pub fn gamma_lpdf_fixed<R: Real>(x: R, shape: f64, rate: f64) -> R {
    x.ln()
        .mul_c(shape - 1.0)
        .add_c(shape * rate.ln() - lgamma(shape))
        - x.mul_c(rate)
}

/// log NegativeBinomial(y | mu, psi) in the mean/overdispersion
/// parameterization, for a fixed observed count y and live mu > 0, psi > 0:
///
/// lgamma(y+psi) - lgamma(psi) - lgamma(y+1)
///   + psi (log psi - log(psi+mu)) + y (log mu - log(psi+mu))
pub fn negbin_lpmf<R: Real>(y: u64, mu: R, psi: R) -> R {
    let log_denom = (psi + mu).ln();
    let base = psi * (psi.ln() - log_denom);
    if y == 0 {
        return base;
    }
    let yf = y as f64;
    let with_mu = base + (mu.ln() - log_denom).mul_c(yf);
    psi.add_c(yf).lgamma() - psi.lgamma() + with_mu.add_c(-lgamma(yf + 1.0))
}
