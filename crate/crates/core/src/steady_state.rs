//! Closed-form stationary equilibrium.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::ModelParams;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SteadyState {
    pub p_star: f64,
    pub h_star: f64,
    pub k_star: f64,
    pub y_star: f64,
    pub w_star: f64,
    /// Lifetime welfare; `-inf` when `tau = 1` (zero old-age consumption).
    pub u_star: f64,
    pub c1_star: f64,
    pub c2_star: f64,
}

impl SteadyState {
    /// Whether the model's maintained assumption `P* > 1` holds.
    pub fn pollution_above_one(&self) -> bool {
        self.p_star > 1.0
    }
}

pub fn pollution(p: &ModelParams) -> f64 {
    p.emission_abatement_ratio().powf(p.gamma) / p.mu
}

pub fn health(p: &ModelParams) -> f64 {
    let scale = p.eta * p.theta * p.mu.powf(p.phi) / p.xi;
    scale * ((1.0 - p.beta) * p.tau / p.z).powf(p.phi * p.gamma)
}

/// Per-worker output `Phi * B^{a/(1-a)} * (1-beta)^{phi gamma eps}` with `B`
/// the income share.
pub fn output(p: &ModelParams) -> f64 {
    let d = p.derive();
    let a = p.alpha;
    d.phi_big * p.income_share().powf(a / (1.0 - a)) * (1.0 - p.beta).powf(d.phi_gamma_eps)
}

pub fn solve(p: &ModelParams) -> SteadyState {
    let delta = p.savings_propensity();
    let b = p.income_share();
    let p_star = pollution(p);
    let h_star = health(p);
    let k_star = (delta * b * p.a_tfp).powf(1.0 / (1.0 - p.alpha)) * h_star.powf(p.epsilon);
    let y_star = output(p);
    let w_star = (1.0 - p.alpha) * (1.0 - p.tau) * y_star;
    let c1_star = (1.0 - delta) * b * y_star;
    // R* k* collapses to the capital share of after-tax output.
    let c2_star = p.alpha * (1.0 - p.tau) * y_star;
    SteadyState {
        p_star,
        h_star,
        k_star,
        y_star,
        w_star,
        u_star: welfare_unchecked(p),
        c1_star,
        c2_star,
    }
}

/// Steady-state lifetime welfare as a constant term plus `ln Omega(beta)`.
pub fn welfare(p: &ModelParams) -> Result<f64> {
    if p.tau >= 1.0 {
        return Err(Error::ZeroOldAgeConsumption);
    }
    Ok(welfare_unchecked(p))
}

fn welfare_unchecked(p: &ModelParams) -> f64 {
    let d = p.derive();
    let delta = d.delta;
    let a = p.alpha;
    let level = (1.0 - delta).ln()
        + d.phi_big.ln() / (1.0 - delta)
        + (delta / (1.0 - delta)) * (a * (1.0 - p.tau)).ln();
    level + ln_omega(p)
}

/// `ln Omega(beta)`: the part of welfare that moves with the recycling share.
pub fn ln_omega(p: &ModelParams) -> f64 {
    let delta = p.savings_propensity();
    let a = p.alpha;
    let income_exp = a / ((1.0 - a) * (1.0 - delta)) + 1.0;
    let abatement_exp = p.phi_gamma_eps() / (1.0 - delta);
    income_exp * p.income_share().ln() + abatement_exp * (1.0 - p.beta).ln()
}
