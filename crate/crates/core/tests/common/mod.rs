#![allow(dead_code)]

use ecotax_core::policy::{tau_cutoff_u, tau_cutoff_y};
use ecotax_core::{ModelParams, Regime};
use rand::Rng;

/// Valid parameters with a moderate steady state: `1 < P* < 200`.
pub fn draw<R: Rng>(rng: &mut R) -> ModelParams {
    loop {
        let p = ModelParams {
            alpha: rng.random_range(0.2..0.8),
            tau: rng.random_range(0.1..0.95),
            beta: rng.random_range(0.0..0.8),
            gamma: rng.random_range(0.5..1.5),
            mu: rng.random_range(0.1..0.9),
            z: rng.random_range(0.05..0.5),
            theta: rng.random_range(0.1..1.0),
            eta: rng.random_range(0.5..2.0),
            xi: rng.random_range(0.1..1.0),
            phi: rng.random_range(0.0..2.0),
            epsilon: rng.random_range(0.0..2.0),
            rho: rng.random_range(0.1..3.0),
            a_tfp: rng.random_range(0.5..2.0),
        };
        let p_star = (p.z / ((1.0 - p.beta) * p.tau)).powf(p.gamma) / p.mu;
        if p.validate().is_ok() && p_star > 1.0 && p_star < 200.0 {
            return p;
        }
    }
}

/// Parameters with `tau` placed strictly inside the requested regime.
pub fn draw_in_regime<R: Rng>(rng: &mut R, regime: Regime) -> ModelParams {
    loop {
        let mut p = draw(rng);
        p.phi = rng.random_range(0.2..2.0);
        p.epsilon = rng.random_range(0.2..2.0);
        let (cu, cy) = (tau_cutoff_u(&p), tau_cutoff_y(&p));
        let (lo, hi) = match regime {
            Regime::I => (0.0, cu),
            Regime::II => (cu, cy),
            Regime::III => (cy, 0.98),
        };
        if hi - lo < 0.02 {
            continue;
        }
        let pad = 0.05 * (hi - lo);
        p.tau = rng.random_range(lo + pad..hi - pad);
        if p.validate().is_ok() {
            return p;
        }
    }
}
