//! Two-period overlapping-generations economy in which pollution lowers
//! public health and, through it, labor productivity. An environmental tax
//! on output is recycled partly as a lump-sum transfer to workers (share
//! `beta`) and partly into pollution abatement (share `1 - beta`).
//!
//! The crate is split along the lines of the model:
//!
//! * [`params`] validates structural parameters and derives composites.
//! * [`dynamics`] iterates the period-by-period transition map.
//! * [`steady_state`] evaluates the closed-form stationary equilibrium.
//! * [`policy`] holds the recycling-share thresholds, their tax-rate
//!   cutoffs, the marginal effects of `beta`, and the regime classifier.
//! * [`optimizer`] is a derivative-free numerical oracle used to audit the
//!   analytic results.

pub mod dynamics;
pub mod error;
pub mod format;
pub mod optimizer;
pub mod params;
pub mod policy;
pub mod steady_state;

pub use dynamics::{cohort_welfare, simulate, step, EconState, SimConfig, Trajectory};
pub use error::{Error, ParamError, Result};
pub use optimizer::{central_diff, maximize_on_unit_interval, ScalarMaxResult};
pub use params::{DerivedParams, ModelParams};
pub use policy::{classify, ComparativeStatics, PolicyReport, Regime, Sign};
pub use steady_state::{solve, welfare, SteadyState};
