//! Structural parameters of the economy and the composites derived from them.
//!
//! Cohort size is normalized to one, so every quantity in the crate is per
//! worker.

use serde::{Deserialize, Serialize};

use crate::error::ParamError;

/// Structural parameters. Construct freely, then call [`ModelParams::validate`]
/// before handing the set to any model routine.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    /// Capital share of output, in (0,1).
    pub alpha: f64,
    /// Environmental tax rate on output, in (0,1].
    pub tau: f64,
    /// Share of tax revenue returned to labor income, in [0,1).
    pub beta: f64,
    /// Elasticity of pollution with respect to the emissions/abatement ratio.
    pub gamma: f64,
    /// Natural pollution absorption rate, in (0,1).
    pub mu: f64,
    /// Polluting capacity of the technology, in (0,1).
    pub z: f64,
    /// Exogenous public health expenditure share.
    pub theta: f64,
    /// Productivity of the health sector.
    pub eta: f64,
    /// Scale of health damage.
    pub xi: f64,
    /// Influence of pollution on public health; zero switches the feedback off.
    pub phi: f64,
    /// Effect of health on labor productivity.
    pub epsilon: f64,
    /// Subjective discount rate.
    pub rho: f64,
    /// Total factor productivity.
    pub a_tfp: f64,
}

/// Quantities that depend only on [`ModelParams`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DerivedParams {
    /// Savings propensity `1 / (2 + rho)`.
    pub delta: f64,
    /// Health-feedback strength `phi * gamma * epsilon`.
    pub phi_gamma_eps: f64,
    /// Output scale `A^{1/(1-a)} delta^{a/(1-a)} (eta theta mu^phi / xi)^eps (tau/z)^{phi gamma eps}`.
    pub phi_big: f64,
}

#[derive(Clone, Copy)]
enum Bound {
    Open,
    Closed,
}

struct Range {
    lo: f64,
    lo_bound: Bound,
    hi: f64,
    hi_bound: Bound,
    label: &'static str,
}

impl Range {
    const fn new(lo: f64, lo_bound: Bound, hi: f64, hi_bound: Bound, label: &'static str) -> Self {
        Range {
            lo,
            lo_bound,
            hi,
            hi_bound,
            label,
        }
    }

    fn contains(&self, x: f64) -> bool {
        let above = match self.lo_bound {
            Bound::Open => x > self.lo,
            Bound::Closed => x >= self.lo,
        };
        let below = match self.hi_bound {
            Bound::Open => x < self.hi,
            Bound::Closed => x <= self.hi,
        };
        above && below
    }
}

use Bound::{Closed, Open};

const UNIT_OPEN: Range = Range::new(0.0, Open, 1.0, Open, "(0,1)");
const POSITIVE: Range = Range::new(0.0, Open, f64::INFINITY, Open, "(0,inf)");
const NON_NEGATIVE: Range = Range::new(0.0, Closed, f64::INFINITY, Open, "[0,inf)");

/// Field names in canonical order, as used in scenario files.
pub const FIELD_NAMES: [&str; 13] = [
    "alpha", "tau", "beta", "gamma", "mu", "z", "theta", "eta", "xi", "phi", "epsilon", "rho",
    "a_tfp",
];

fn range_of(field: &str) -> Option<Range> {
    Some(match field {
        "alpha" => UNIT_OPEN,
        "tau" => Range::new(0.0, Open, 1.0, Closed, "(0,1]"),
        "beta" => Range::new(0.0, Closed, 1.0, Open, "[0,1)"),
        "gamma" => POSITIVE,
        "mu" => UNIT_OPEN,
        "z" => UNIT_OPEN,
        "theta" => POSITIVE,
        "eta" => POSITIVE,
        "xi" => POSITIVE,
        "phi" => NON_NEGATIVE,
        "epsilon" => NON_NEGATIVE,
        "rho" => POSITIVE,
        "a_tfp" => POSITIVE,
        _ => return None,
    })
}

/// Checks a single named value against its admissible interval.
pub fn check_field(field: &'static str, value: f64) -> Result<f64, ParamError> {
    let range = range_of(field).ok_or_else(|| ParamError::UnknownField(field.to_string()))?;
    if !value.is_finite() {
        return Err(ParamError::NonFinite { field, value });
    }
    if !range.contains(value) {
        return Err(ParamError::OutOfRange {
            field,
            interval: range.label,
            value,
        });
    }
    Ok(value)
}

/// Maps a user-supplied name onto the static field name.
pub fn canonical_field(name: &str) -> Option<&'static str> {
    FIELD_NAMES.iter().copied().find(|f| *f == name)
}

impl ModelParams {
    /// Returns `self` unchanged iff every field lies in its interval.
    pub fn validate(self) -> Result<Self, ParamError> {
        for (name, value) in FIELD_NAMES.iter().zip(self.values()) {
            check_field(name, value)?;
        }
        Ok(self)
    }

    /// Values in [`FIELD_NAMES`] order.
    pub fn values(&self) -> [f64; 13] {
        [
            self.alpha,
            self.tau,
            self.beta,
            self.gamma,
            self.mu,
            self.z,
            self.theta,
            self.eta,
            self.xi,
            self.phi,
            self.epsilon,
            self.rho,
            self.a_tfp,
        ]
    }

    pub fn get(&self, name: &str) -> Result<f64, ParamError> {
        let idx = FIELD_NAMES
            .iter()
            .position(|f| *f == name)
            .ok_or_else(|| ParamError::UnknownField(name.to_string()))?;
        Ok(self.values()[idx])
    }

    /// Returns a copy with `name` set to `value`. The copy is not validated.
    pub fn with(&self, name: &str, value: f64) -> Result<Self, ParamError> {
        let mut p = *self;
        let slot = match name {
            "alpha" => &mut p.alpha,
            "tau" => &mut p.tau,
            "beta" => &mut p.beta,
            "gamma" => &mut p.gamma,
            "mu" => &mut p.mu,
            "z" => &mut p.z,
            "theta" => &mut p.theta,
            "eta" => &mut p.eta,
            "xi" => &mut p.xi,
            "phi" => &mut p.phi,
            "epsilon" => &mut p.epsilon,
            "rho" => &mut p.rho,
            "a_tfp" => &mut p.a_tfp,
            _ => return Err(ParamError::UnknownField(name.to_string())),
        };
        *slot = value;
        Ok(p)
    }

    pub fn with_beta(&self, beta: f64) -> Self {
        ModelParams { beta, ..*self }
    }

    pub fn with_tau(&self, tau: f64) -> Self {
        ModelParams { tau, ..*self }
    }

    pub fn derive(&self) -> DerivedParams {
        let delta = self.savings_propensity();
        let pge = self.phi_gamma_eps();
        let a = self.alpha;
        let health_scale = self.eta * self.theta * self.mu.powf(self.phi) / self.xi;
        let phi_big = self.a_tfp.powf(1.0 / (1.0 - a))
            * delta.powf(a / (1.0 - a))
            * health_scale.powf(self.epsilon)
            * (self.tau / self.z).powf(pge);
        DerivedParams {
            delta,
            phi_gamma_eps: pge,
            phi_big,
        }
    }

    pub fn savings_propensity(&self) -> f64 {
        1.0 / (2.0 + self.rho)
    }

    pub fn phi_gamma_eps(&self) -> f64 {
        self.phi * self.gamma * self.epsilon
    }

    /// Labor income net of tax plus the lump-sum transfer, per unit of
    /// output: `(1-alpha)(1-tau) + beta tau`.
    pub fn income_share(&self) -> f64 {
        (1.0 - self.alpha) * (1.0 - self.tau) + self.beta * self.tau
    }

    /// Emissions over abatement, `z / ((1-beta) tau)`. Both scale with output,
    /// so the ratio is a constant of the parameters.
    pub fn emission_abatement_ratio(&self) -> f64 {
        self.z / ((1.0 - self.beta) * self.tau)
    }

    /// Public health for a given pollution stock.
    pub fn health(&self, pollution: f64) -> f64 {
        self.eta * self.theta / (self.xi * pollution.powf(self.phi))
    }

    /// Per-worker output for given capital and health.
    pub fn output(&self, k: f64, health: f64) -> f64 {
        self.a_tfp * k.powf(self.alpha) * health.powf(self.epsilon * (1.0 - self.alpha))
    }
}
