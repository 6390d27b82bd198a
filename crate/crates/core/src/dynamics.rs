//! Forward simulation of the period-by-period transition map.
//!
//! Capital fully depreciates, so next period's capital is this period's
//! savings. Pollution follows an affine recursion whose intercept depends
//! only on parameters, and health is read off the current pollution stock.

use std::io::{self, Write};

use serde::Serialize;

use crate::error::{Error, ParamError, Result};
use crate::format::g17;
use crate::params::ModelParams;

/// One period of the economy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EconState {
    pub t: u64,
    pub k: f64,
    pub pollution: f64,
    pub health: f64,
    pub y: f64,
    pub wage: f64,
    pub interest: f64,
    pub c_young: f64,
    pub savings: f64,
}

impl EconState {
    /// Builds a self-consistent state from capital and pollution: health,
    /// output, factor prices and the young cohort's choices all follow.
    pub fn from_stocks(p: &ModelParams, t: u64, k: f64, pollution: f64) -> Result<Self> {
        let health = p.health(pollution);
        let y = p.output(k, health);
        let wage = (1.0 - p.alpha) * (1.0 - p.tau) * y;
        let interest = p.a_tfp
            * (1.0 - p.tau)
            * p.alpha
            * k.powf(p.alpha - 1.0)
            * health.powf(p.epsilon * (1.0 - p.alpha));
        let income = wage + p.beta * p.tau * y;
        let delta = p.savings_propensity();
        let savings = delta * income;
        let c_young = income - savings;

        let state = EconState {
            t,
            k,
            pollution,
            health,
            y,
            wage,
            interest,
            c_young,
            savings,
        };
        if let Some(quantity) = state.first_non_finite() {
            return Err(Error::NonFinite {
                quantity,
                period: t,
            });
        }
        Ok(state)
    }

    /// Initial state with health computed from `p0`.
    pub fn initial(p: &ModelParams, k0: f64, p0: f64) -> Result<Self> {
        positive("k0", k0)?;
        positive("p0", p0)?;
        Self::from_stocks(p, 0, k0, p0)
    }

    fn first_non_finite(&self) -> Option<&'static str> {
        [
            ("k", self.k),
            ("P", self.pollution),
            ("h", self.health),
            ("y", self.y),
            ("w", self.wage),
            ("R", self.interest),
            ("c1", self.c_young),
            ("s", self.savings),
        ]
        .into_iter()
        .find(|(_, v)| !v.is_finite())
        .map(|(name, _)| name)
    }
}

fn positive(field: &'static str, value: f64) -> Result<f64, ParamError> {
    if !value.is_finite() {
        Err(ParamError::NonFinite { field, value })
    } else if value <= 0.0 {
        Err(ParamError::OutOfRange {
            field,
            interval: "(0,inf)",
            value,
        })
    } else {
        Ok(value)
    }
}

/// Advances the economy one period.
pub fn step(p: &ModelParams, s: &EconState) -> Result<EconState> {
    let pollution = p.emission_abatement_ratio().powf(p.gamma) + (1.0 - p.mu) * s.pollution;
    let k = s.savings;
    EconState::from_stocks(p, s.t + 1, k, pollution)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimConfig {
    pub max_periods: usize,
    /// Absolute tolerance on both the capital and the pollution increments.
    pub tol: f64,
}

impl Default for SimConfig {
    fn default() -> Self {
        SimConfig {
            max_periods: 10_000,
            tol: 1e-12,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trajectory {
    pub states: Vec<EconState>,
    pub converged: bool,
    /// `max(|dk|, |dP|)` over the last step; NaN when no step was taken.
    pub residual: f64,
}

pub const CSV_HEADER: &str = "t,k,P,h,y,w,R,c1,s";

impl Trajectory {
    pub fn last(&self) -> &EconState {
        self.states
            .last()
            .expect("trajectory holds the initial state")
    }

    /// Number of transitions taken.
    pub fn periods(&self) -> usize {
        self.states.len() - 1
    }

    /// True if any state violates the model's maintained `P > 1` assumption.
    pub fn pollution_at_or_below_one(&self) -> bool {
        self.states.iter().any(|s| s.pollution <= 1.0)
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "{CSV_HEADER}")?;
        for s in &self.states {
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                s.t,
                g17(s.k),
                g17(s.pollution),
                g17(s.health),
                g17(s.y),
                g17(s.wage),
                g17(s.interest),
                g17(s.c_young),
                g17(s.savings)
            )?;
        }
        Ok(())
    }
}

/// Iterates [`step`] from `(k0, p0)` until both increments fall within
/// `cfg.tol` or `cfg.max_periods` transitions have been taken.
pub fn simulate(p: &ModelParams, k0: f64, p0: f64, cfg: &SimConfig) -> Result<Trajectory> {
    if !(cfg.tol > 0.0 && cfg.tol.is_finite()) {
        return Err(Error::InvalidArgument {
            name: "tol",
            reason: format!("must be positive and finite, got {}", cfg.tol),
        });
    }
    let mut states = vec![EconState::initial(p, k0, p0)?];
    let mut residual = f64::NAN;
    let mut converged = false;

    for _ in 0..cfg.max_periods {
        let prev = *states.last().unwrap();
        let next = step(p, &prev).map_err(|e| match e {
            Error::NonFinite { quantity, .. } => Error::Diverged {
                quantity,
                last: Box::new(prev),
            },
            other => other,
        })?;
        residual = (next.k - prev.k)
            .abs()
            .max((next.pollution - prev.pollution).abs());
        states.push(next);
        if residual <= cfg.tol {
            converged = true;
            break;
        }
    }

    Ok(Trajectory {
        states,
        converged,
        residual,
    })
}

/// Lifetime utility of the cohort born in `s_t`. Savings earn the interest
/// factor of the following period, `c2 = R_{t+1} s_t`.
pub fn cohort_welfare(p: &ModelParams, s_t: &EconState, s_t1: &EconState) -> Result<f64> {
    let c1 = s_t.c_young;
    if c1 <= 0.0 || c1.is_nan() {
        return Err(Error::WelfareUndefined {
            which: "young",
            value: c1,
        });
    }
    let c2 = s_t1.interest * s_t.savings;
    if c2 <= 0.0 || c2.is_nan() {
        return Err(Error::WelfareUndefined {
            which: "old-age",
            value: c2,
        });
    }
    Ok(c1.ln() + c2.ln() / (1.0 + p.rho))
}
