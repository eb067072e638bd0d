//! Seeded draws from the model's distributions.
//!
//! All sampling goes through a counter-based ChaCha generator so that runs
//! are bit-reproducible from a base seed; concurrent chains get independent
//! streams via `chain_rng(base_seed, chain_index)`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp, Gamma, Normal, Poisson};

use super::{GammaMeanCV, NegBinMuPsi, StatsError};

pub type ModelRng = ChaCha8Rng;

/// Deterministic per-chain generator: seed = base_seed + chain_index.
pub fn chain_rng(base_seed: u64, chain_index: u64) -> ModelRng {
    ChaCha8Rng::seed_from_u64(base_seed.wrapping_add(chain_index))
}

/// Shift applied to the intervention-effect prior:
/// alpha_k ~ Gamma(shape 1/6, scale 1) - log(1.05)/6.
pub fn intervention_prior_shift() -> f64 {
    1.05f64.ln() / 6.0
}

pub fn sample_normal(rng: &mut ModelRng, mu: f64, sigma: f64) -> Result<f64, StatsError> {
    if !(sigma > 0.0) {
        return Err(StatsError::NonPositive {
            what: "normal sigma",
            value: sigma,
        });
    }
    Ok(Normal::new(mu, sigma).expect("validated").sample(rng))
}

/// |N(0, sigma)|.
pub fn sample_halfnormal(rng: &mut ModelRng, sigma: f64) -> Result<f64, StatsError> {
    Ok(sample_normal(rng, 0.0, sigma)?.abs())
}

/// |N(mu, sigma)| (the paper's positive half-normal of a shifted mean).
pub fn sample_folded_normal(rng: &mut ModelRng, mu: f64, sigma: f64) -> Result<f64, StatsError> {
    Ok(sample_normal(rng, mu, sigma)?.abs())
}

pub fn sample_gamma_meancv(rng: &mut ModelRng, p: &GammaMeanCV) -> f64 {
    let (shape, rate) = p.shape_rate();
    Gamma::new(shape, 1.0 / rate).expect("validated").sample(rng)
}

pub fn sample_exponential_rate(rng: &mut ModelRng, rate: f64) -> Result<f64, StatsError> {
    if !(rate > 0.0) {
        return Err(StatsError::NonPositive {
            what: "exponential rate",
            value: rate,
        });
    }
    Ok(Exp::new(rate).expect("validated").sample(rng))
}

/// One draw from the intervention-effect prior
/// Gamma(shape 1/6, scale 1) - log(1.05)/6.
pub fn sample_intervention_effect(rng: &mut ModelRng) -> f64 {
    Gamma::new(1.0 / 6.0, 1.0).expect("fixed").sample(rng) - intervention_prior_shift()
}

/// Negative binomial via its Gamma-Poisson mixture representation.
pub fn sample_negbinomial(rng: &mut ModelRng, d: &NegBinMuPsi) -> u64 {
    if d.mu == 0.0 {
        return 0;
    }
    let lambda: f64 = Gamma::new(d.psi, d.mu / d.psi)
        .expect("validated")
        .sample(rng);
    if lambda <= 0.0 {
        return 0;
    }
    Poisson::new(lambda).expect("positive").sample(rng) as u64
}

/// Kolmogorov-Smirnov distance between an empirical sample (any order) and a
/// reference CDF.
pub fn ks_distance(sample: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    let mut sorted = sample.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("non-NaN sample"));
    let n = sorted.len() as f64;
    let mut d = 0.0f64;
    for (i, &x) in sorted.iter().enumerate() {
        let f = cdf(x);
        let hi = (i + 1) as f64 / n - f;
        let lo = f - i as f64 / n;
        d = d.max(hi.max(lo));
    }
    d
}
