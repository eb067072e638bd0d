//! Discretization of continuous delay densities to daily probability masses.
//!
//! A continuous delay density on [0, inf) is binned to days with the first
//! bin covering [0, 1.5) and bin s covering [s - 0.5, s + 0.5) for s >= 2,
//! each bin integrated by adaptive quadrature to 1e-9 absolute.

use super::{GammaMeanCV, StatsError};

/// Daily probability mass over delays, indexed by day s = 1..=horizon.
#[derive(Debug, Clone, PartialEq)]
pub struct DelayPMF {
    weights: Vec<f64>,
    warning: Option<String>,
}

impl DelayPMF {
    /// Builds from raw per-day weights (index 0 holds day 1). Enforces
    /// nonnegativity and total mass <= 1 + 1e-9.
    pub fn from_weights(weights: Vec<f64>, warning: Option<String>) -> Self {
        assert!(!weights.is_empty(), "delay pmf needs at least one day");
        let total: f64 = weights.iter().sum();
        assert!(
            weights.iter().all(|&w| w >= 0.0),
            "negative delay weight"
        );
        assert!(total <= 1.0 + 1e-9, "delay mass exceeds 1: {total}");
        DelayPMF { weights, warning }
    }

    pub fn horizon(&self) -> usize {
        self.weights.len()
    }

    /// Mass at day s (1-based); zero beyond the horizon.
    pub fn w(&self, s: usize) -> f64 {
        if s == 0 || s > self.weights.len() {
            0.0
        } else {
            self.weights[s - 1]
        }
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn total_mass(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// Mean delay in days of the discretized mass (not renormalized).
    pub fn mean_days(&self) -> f64 {
        self.weights
            .iter()
            .enumerate()
            .map(|(i, w)| (i + 1) as f64 * w)
            .sum()
    }

    /// Attached warning when the horizon missed too much mass.
    pub fn warning(&self) -> Option<&str> {
        self.warning.as_deref()
    }
}

/// Adaptive Simpson quadrature with an absolute tolerance.
pub fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &impl Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(fa, flm, fm, a, m);
        let right = simpson(fm, frm, fb, m, b);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        recurse(f, a, m, fa, flm, fm, left, tol * 0.5, depth - 1)
            + recurse(f, m, b, fm, frm, fb, right, tol * 0.5, depth - 1)
    }
    if a == b {
        return 0.0;
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(fa, fm, fb, a, b);
    recurse(f, a, b, fa, fm, fb, whole, tol, 48)
}

/// Discretizes a continuous delay density to a daily PMF over
/// s = 1..=horizon. Attaches a warning when the horizon captures less than
/// 99.9% of the mass.
pub fn discretize_delay(
    density: impl Fn(f64) -> f64,
    horizon: usize,
) -> Result<DelayPMF, StatsError> {
    if horizon < 1 {
        return Err(StatsError::BadHorizon(horizon));
    }
    let mut weights = Vec::with_capacity(horizon);
    weights.push(adaptive_simpson(&density, 0.0, 1.5, 1e-9));
    for s in 2..=horizon {
        let lo = s as f64 - 0.5;
        let hi = s as f64 + 0.5;
        weights.push(adaptive_simpson(&density, lo, hi, 1e-9));
    }
    // Quadrature wiggle can leave a bin a hair below zero; clamp it.
    for w in &mut weights {
        if *w < 0.0 && *w > -1e-12 {
            *w = 0.0;
        }
    }
    let total: f64 = weights.iter().sum();
    let warning = (total < 0.999).then(|| {
        format!("horizon {horizon} captures only {total:.6} of the delay mass (< 0.999)")
    });
    Ok(DelayPMF::from_weights(weights, warning))
}

/// The infection-to-death delay: the sum of the infection-to-onset
/// Gamma(mean 5.1, cv 0.86) and the onset-to-death Gamma(mean 17.8, cv 0.45),
/// convolved numerically on a 0.01-day grid and then binned to days.
pub fn infection_to_death_pmf(horizon: usize) -> Result<DelayPMF, StatsError> {
    let onset = GammaMeanCV::new(5.1, 0.86).expect("fixed parameters");
    let death = GammaMeanCV::new(17.8, 0.45).expect("fixed parameters");
    convolved_delay_pmf(&onset, &death, horizon)
}

/// Numeric convolution of two Gamma delay densities, binned per
/// `discretize_delay`'s rule. Grid step is 0.01 day; per-cell masses use
/// Simpson's rule so cell-level error stays far below the binning tolerance.
pub fn convolved_delay_pmf(
    first: &GammaMeanCV,
    second: &GammaMeanCV,
    horizon: usize,
) -> Result<DelayPMF, StatsError> {
    if horizon < 1 {
        return Err(StatsError::BadHorizon(horizon));
    }
    const STEP: f64 = 0.01;
    // Need the convolved mass out to horizon + 0.5 days.
    let cells = ((horizon as f64 + 0.5) / STEP).round() as usize;

    let cell_masses = |d: &GammaMeanCV| -> Vec<f64> {
        let mut m = Vec::with_capacity(cells);
        for k in 0..cells {
            let a = k as f64 * STEP;
            let mid = a + 0.5 * STEP;
            let b = a + STEP;
            m.push(STEP / 6.0 * (d.density(a) + 4.0 * d.density(mid) + d.density(b)));
        }
        m
    };
    let fa = cell_masses(first);
    let fb = cell_masses(second);

    // Truncate the first factor where its remaining tail is negligible.
    let total_a: f64 = fa.iter().sum();
    let mut cum = 0.0;
    let mut a_len = fa.len();
    for (i, &m) in fa.iter().enumerate() {
        cum += m;
        if total_a - cum < 1e-13 {
            a_len = i + 1;
            break;
        }
    }

    let mut conv = vec![0.0f64; cells];
    for (i, &ma) in fa.iter().take(a_len).enumerate() {
        if ma == 0.0 {
            continue;
        }
        for (j, &mb) in fb.iter().take(cells - i).enumerate() {
            conv[i + j] += ma * mb;
        }
    }

    // Cell k carries mass near (k+1)*STEP; bin 1 is (0, 1.5], bin s is
    // (s-0.5, s+0.5].
    let per_day = (1.0 / STEP).round() as usize;
    let mut weights = Vec::with_capacity(horizon);
    let first_bin_cells = per_day + per_day / 2; // up to 1.5 days
    weights.push(conv[..first_bin_cells.min(cells)].iter().sum());
    for s in 2..=horizon {
        let lo = (s - 1) * per_day + per_day / 2;
        let hi = (s * per_day + per_day / 2).min(cells);
        weights.push(conv[lo..hi].iter().sum());
    }
    let total: f64 = weights.iter().sum();
    let warning = (total < 0.999).then(|| {
        format!("horizon {horizon} captures only {total:.6} of the delay mass (< 0.999)")
    });
    Ok(DelayPMF::from_weights(weights, warning))
}
