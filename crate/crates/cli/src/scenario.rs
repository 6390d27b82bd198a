//! Scenario files: one `name = value` per line, `#` starts a comment.
//!
//! All thirteen model parameters are required. `k0`, `p0`, `max_periods`
//! and `tol` are optional; `p0` defaults to the steady-state pollution stock.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use ecotax_core::dynamics::SimConfig;
use ecotax_core::format::g17;
use ecotax_core::params::{canonical_field, FIELD_NAMES};
use ecotax_core::{steady_state, ModelParams, ParamError};
use serde::Serialize;
use thiserror::Error;

pub const DEFAULT_K0: f64 = 0.01;
const OPTIONAL_KEYS: [&str; 4] = ["k0", "p0", "max_periods", "tol"];

#[derive(Debug, Error, PartialEq)]
pub enum ScenarioError {
    #[error("line {line}: expected `name = value`, got `{text}`")]
    Syntax { line: usize, text: String },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: duplicate key `{key}`")]
    Duplicate { line: usize, key: String },
    #[error("line {line}: {key} has unparsable value `{value}`")]
    BadNumber {
        line: usize,
        key: String,
        value: String,
    },
    #[error("missing required key `{0}`")]
    Missing(&'static str),
    #[error(transparent)]
    Param(#[from] ParamError),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Scenario {
    pub params: ModelParams,
    pub k0: f64,
    pub p0: f64,
    pub max_periods: usize,
    pub tol: f64,
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Self, ScenarioError> {
        let mut values: BTreeMap<&str, (usize, &str)> = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .filter(|(k, v)| !k.is_empty() && !v.is_empty())
                .ok_or_else(|| ScenarioError::Syntax {
                    line,
                    text: raw.trim().to_string(),
                })?;
            let key = canonical_field(key)
                .or_else(|| OPTIONAL_KEYS.iter().copied().find(|k| *k == key))
                .ok_or_else(|| ScenarioError::UnknownKey {
                    line,
                    key: key.to_string(),
                })?;
            if values.insert(key, (line, value)).is_some() {
                return Err(ScenarioError::Duplicate {
                    line,
                    key: key.to_string(),
                });
            }
        }

        let number = |key: &'static str| -> Result<Option<f64>, ScenarioError> {
            values
                .get(key)
                .map(|&(line, v)| {
                    v.parse::<f64>().map_err(|_| ScenarioError::BadNumber {
                        line,
                        key: key.to_string(),
                        value: v.to_string(),
                    })
                })
                .transpose()
        };

        let mut params = [0.0; 13];
        for (slot, name) in params.iter_mut().zip(FIELD_NAMES) {
            *slot = number(name)?.ok_or(ScenarioError::Missing(name))?;
        }
        let [alpha, tau, beta, gamma, mu, z, theta, eta, xi, phi, epsilon, rho, a_tfp] = params;
        let params = ModelParams {
            alpha,
            tau,
            beta,
            gamma,
            mu,
            z,
            theta,
            eta,
            xi,
            phi,
            epsilon,
            rho,
            a_tfp,
        }
        .validate()?;

        let defaults = SimConfig::default();
        let max_periods = match values.get("max_periods") {
            Some(&(line, v)) => v.parse::<usize>().map_err(|_| ScenarioError::BadNumber {
                line,
                key: "max_periods".to_string(),
                value: v.to_string(),
            })?,
            None => defaults.max_periods,
        };
        let scenario = Scenario {
            params,
            k0: number("k0")?.unwrap_or(DEFAULT_K0),
            p0: number("p0")?.unwrap_or_else(|| steady_state::pollution(&params)),
            max_periods,
            tol: number("tol")?.unwrap_or(defaults.tol),
        };
        scenario.check()?;
        Ok(scenario)
    }

    fn check(&self) -> Result<(), ParamError> {
        for (field, value) in [("k0", self.k0), ("p0", self.p0), ("tol", self.tol)] {
            if !value.is_finite() {
                return Err(ParamError::NonFinite { field, value });
            }
            if value <= 0.0 {
                return Err(ParamError::OutOfRange {
                    field,
                    interval: "(0,inf)",
                    value,
                });
            }
        }
        Ok(())
    }

    pub fn sim_config(&self) -> SimConfig {
        SimConfig {
            max_periods: self.max_periods,
            tol: self.tol,
        }
    }

    /// Every key with its resolved value, in a fixed order.
    pub fn to_canonical_string(&self) -> String {
        let mut out = String::new();
        for (name, value) in FIELD_NAMES.iter().zip(self.params.values()) {
            writeln!(out, "{name} = {}", g17(value)).unwrap();
        }
        writeln!(out, "k0 = {}", g17(self.k0)).unwrap();
        writeln!(out, "p0 = {}", g17(self.p0)).unwrap();
        writeln!(out, "max_periods = {}", self.max_periods).unwrap();
        writeln!(out, "tol = {}", g17(self.tol)).unwrap();
        out
    }
}
