//! Recycling-share thresholds and the regime classification.
//!
//! Raising `beta` shifts revenue from abatement to labor income. That lowers
//! health (and so productivity) but raises disposable income, savings and
//! capital. Output peaks at `beta_hat`; welfare, which also values the
//! income gain directly, peaks at `beta_hat_u >= beta_hat`. Each threshold
//! is zero when the tax rate sits at or below its cutoff.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::{check_field, ModelParams};
use crate::steady_state;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Regime {
    /// Both thresholds are zero: any transfer lowers output and welfare.
    I,
    /// Only welfare benefits from a positive transfer share.
    II,
    /// Both thresholds are interior, `0 < beta_hat < beta_hat_u`.
    III,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::I => "I",
            Regime::II => "II",
            Regime::III => "III",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolicyReport {
    pub tau_cutoff_y: f64,
    pub tau_cutoff_u: f64,
    pub beta_hat: f64,
    pub beta_hat_u: f64,
    pub regime: Regime,
    pub gap: f64,
    /// Set when pollution does not feed back into productivity
    /// (`phi gamma eps = 0`). Output and welfare then rise monotonically in
    /// `beta`, there is no interior maximizer, and both thresholds are
    /// reported as their supremum 1.
    pub monotone_increasing: bool,
}

/// Tax rate above which the output-maximizing share is interior.
pub fn tau_cutoff_y(p: &ModelParams) -> f64 {
    let drag = p.phi_gamma_eps() * (1.0 - p.alpha).powi(2);
    drag / (p.alpha + drag)
}

/// Tax rate above which the welfare-maximizing share is interior.
pub fn tau_cutoff_u(p: &ModelParams) -> f64 {
    let delta = p.savings_propensity();
    let drag = p.phi_gamma_eps() * (1.0 - p.alpha).powi(2);
    drag / (delta * p.alpha + 1.0 - delta + drag)
}

/// `(dy*/dbeta) / y*`: the marginal capital gain from a larger transfer
/// minus the marginal productivity loss from less abatement.
pub fn output_semi_elasticity(p: &ModelParams, beta: f64) -> f64 {
    let q = p.with_beta(beta);
    let a = p.alpha;
    a * p.tau / ((1.0 - a) * q.income_share()) - p.phi_gamma_eps() / (1.0 - beta)
}

/// Marginal effect of the recycling share on steady-state output per
/// worker. `p.beta` is ignored in favour of `beta`.
pub fn dy_dbeta(p: &ModelParams, beta: f64) -> f64 {
    steady_state::output(&p.with_beta(beta)) * output_semi_elasticity(p, beta)
}

/// Marginal effect of the recycling share on steady-state lifetime welfare.
/// Requires `tau < 1`.
pub fn du_dbeta(p: &ModelParams, beta: f64) -> f64 {
    let delta = p.savings_propensity();
    let a = p.alpha;
    let q = p.with_beta(beta);
    p.tau * (1.0 + a * delta - delta) / (q.income_share() * (1.0 - a) * (1.0 - delta))
        - p.phi_gamma_eps() / ((1.0 - delta) * (1.0 - beta))
}

/// Output-maximizing recycling share. Returns 0 at or below
/// [`tau_cutoff_y`], and 1 (the supremum) when the health feedback is off.
pub fn beta_hat(p: &ModelParams) -> f64 {
    if p.tau <= tau_cutoff_y(p) {
        return 0.0;
    }
    let pge = p.phi_gamma_eps();
    let odds = p.alpha / (1.0 - p.alpha);
    (odds - pge * (1.0 - p.alpha) * (1.0 / p.tau - 1.0)) / (odds + pge)
}

/// Welfare-maximizing recycling share. Returns 0 at or below
/// [`tau_cutoff_u`], and 1 (the supremum) when the health feedback is off.
pub fn beta_hat_u(p: &ModelParams) -> f64 {
    if p.tau <= tau_cutoff_u(p) {
        return 0.0;
    }
    let pge = p.phi_gamma_eps();
    let delta = p.savings_propensity();
    let odds = p.alpha / (1.0 - p.alpha);
    (odds + 1.0 - delta - pge * (1.0 - p.alpha) * (1.0 / p.tau - 1.0)) / (odds + pge + 1.0 - delta)
}

/// Regime from the cutoffs. A tax rate equal to a cutoff belongs to the
/// lower regime.
pub fn regime(p: &ModelParams) -> Regime {
    if p.tau <= tau_cutoff_u(p) {
        Regime::I
    } else if p.tau <= tau_cutoff_y(p) {
        Regime::II
    } else {
        Regime::III
    }
}

/// Regime read off the signs of both marginal effects as `beta -> 0`,
/// without going through the cutoff formulas.
pub fn regime_by_marginal_signs(p: &ModelParams) -> Regime {
    if output_semi_elasticity(p, 0.0) > 0.0 {
        Regime::III
    } else if du_dbeta(p, 0.0) > 0.0 {
        Regime::II
    } else {
        Regime::I
    }
}

pub fn classify(p: &ModelParams) -> PolicyReport {
    let beta_hat = beta_hat(p);
    let beta_hat_u = beta_hat_u(p);
    PolicyReport {
        tau_cutoff_y: tau_cutoff_y(p),
        tau_cutoff_u: tau_cutoff_u(p),
        beta_hat,
        beta_hat_u,
        regime: regime(p),
        gap: beta_hat_u - beta_hat,
        monotone_increasing: p.phi_gamma_eps() == 0.0,
    }
}

/// Closed form of `beta_hat_u - beta_hat`, valid only in regime III.
pub fn gap(p: &ModelParams) -> Result<f64> {
    let r = regime(p);
    if r != Regime::III {
        return Err(Error::NotRegimeThree(r));
    }
    let pge = p.phi_gamma_eps();
    let delta = p.savings_propensity();
    let a = p.alpha;
    let odds = a / (1.0 - a);
    let num = pge * (1.0 - delta) * (p.tau + (1.0 - a) * (1.0 - p.tau));
    let den = p.tau * (odds + pge + 1.0 - delta) * (odds + pge);
    Ok(num / den)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sign {
    Positive,
    Negative,
    Zero,
}

impl Sign {
    pub fn of(x: f64) -> Sign {
        if x > 0.0 {
            Sign::Positive
        } else if x < 0.0 {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
            Sign::Zero => "0",
        })
    }
}

/// Signs of the partial derivatives of `beta_hat`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ComparativeStatics {
    pub alpha: Sign,
    pub tau: Sign,
    pub phi: Sign,
    pub epsilon: Sign,
    pub gamma: Sign,
}

impl ComparativeStatics {
    pub fn as_array(&self) -> [Sign; 5] {
        [self.alpha, self.tau, self.phi, self.epsilon, self.gamma]
    }
}

pub const STATICS_PARAMS: [&str; 5] = ["alpha", "tau", "phi", "epsilon", "gamma"];

/// Central finite-difference signs of `beta_hat` with respect to each of
/// [`STATICS_PARAMS`]. Every perturbed parameter set must stay valid and in
/// regime III with a live health feedback.
pub fn comparative_statics(p: &ModelParams, bump: f64) -> Result<ComparativeStatics> {
    if !(bump > 0.0 && bump.is_finite()) {
        return Err(Error::InvalidArgument {
            name: "bump",
            reason: format!("must be positive and finite, got {bump}"),
        });
    }
    let mut signs = [Sign::Zero; 5];
    for (slot, &name) in signs.iter_mut().zip(STATICS_PARAMS.iter()) {
        let base = p.get(name)?;
        let mut shifted = [0.0; 2];
        for (out, dir) in shifted.iter_mut().zip([1.0, -1.0]) {
            let q = p.with(name, base + dir * bump)?;
            check_field(name, q.get(name)?).map_err(|e| Error::Perturbation {
                param: name,
                reason: e.to_string(),
            })?;
            let r = regime(&q);
            if r != Regime::III || q.phi_gamma_eps() == 0.0 {
                return Err(Error::Perturbation {
                    param: name,
                    reason: format!(
                        "leaves regime III (now {r}, tau cutoff {})",
                        tau_cutoff_y(&q)
                    ),
                });
            }
            *out = beta_hat(&q);
        }
        *slot = Sign::of((shifted[0] - shifted[1]) / (2.0 * bump));
    }
    let [alpha, tau, phi, epsilon, gamma] = signs;
    Ok(ComparativeStatics {
        alpha,
        tau,
        phi,
        epsilon,
        gamma,
    })
}
