//! Derivative-free scalar maximization on `[0, 1)` and central differences.
//!
//! These routines know nothing about the economy; they serve as the
//! independent numerical check on the analytic thresholds and derivatives.

use crate::error::{Error, Result};

/// The search stops this far short of 1, where `ln(1 - beta)` blows up.
pub const UNIT_MARGIN: f64 = 1e-9;
/// Points in the coarse scan that picks the bracketing cell.
pub const GRID_POINTS: usize = 1024;
pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_STEP: f64 = 1e-6;

const INV_PHI: f64 = 0.618_033_988_749_894_8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarMaxResult {
    pub arg_max: f64,
    pub max_value: f64,
    pub evaluations: usize,
    pub bracket_width: f64,
}

struct Counted<F> {
    f: F,
    evaluations: usize,
}

impl<F: FnMut(f64) -> f64> Counted<F> {
    fn eval(&mut self, x: f64) -> Result<f64> {
        self.evaluations += 1;
        let v = (self.f)(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFiniteObjective { beta: x, value: v })
        }
    }
}

/// Maximizes `objective` over `[0, 1 - UNIT_MARGIN]`.
///
/// A uniform scan picks the best grid point; golden-section search then
/// narrows the two cells around it until the bracket is no wider than
/// `tol`. If the bracket touches an end of the interval, that end point is
/// also a candidate, so monotone objectives report the boundary exactly.
pub fn maximize_on_unit_interval<F>(objective: F, tol: f64) -> Result<ScalarMaxResult>
where
    F: FnMut(f64) -> f64,
{
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidArgument {
            name: "tol",
            reason: format!("must be positive and finite, got {tol}"),
        });
    }
    let mut f = Counted {
        f: objective,
        evaluations: 0,
    };
    let upper = 1.0 - UNIT_MARGIN;
    let cell = upper / (GRID_POINTS - 1) as f64;
    let grid_x = |i: usize| {
        if i == GRID_POINTS - 1 {
            upper
        } else {
            i as f64 * cell
        }
    };

    let mut best = (0, f64::NEG_INFINITY);
    for i in 0..GRID_POINTS {
        let v = f.eval(grid_x(i))?;
        if v > best.1 {
            best = (i, v);
        }
    }
    let (i, grid_best) = best;
    let mut lo = grid_x(i.saturating_sub(1));
    let mut hi = grid_x((i + 1).min(GRID_POINTS - 1));

    let mut candidates = vec![(grid_x(i), grid_best)];
    if hi - lo > tol {
        let mut c = hi - INV_PHI * (hi - lo);
        let mut d = lo + INV_PHI * (hi - lo);
        let mut fc = f.eval(c)?;
        let mut fd = f.eval(d)?;
        while hi - lo > tol {
            if fc >= fd {
                hi = d;
                d = c;
                fd = fc;
                c = hi - INV_PHI * (hi - lo);
                fc = f.eval(c)?;
            } else {
                lo = c;
                c = d;
                fc = fd;
                d = lo + INV_PHI * (hi - lo);
                fd = f.eval(d)?;
            }
        }
        let mid = 0.5 * (lo + hi);
        candidates.push((mid, f.eval(mid)?));
        candidates.push((c, fc));
        candidates.push((d, fd));
    }
    if lo == 0.0 {
        candidates.push((0.0, f.eval(0.0)?));
    }
    if hi == upper {
        candidates.push((upper, f.eval(upper)?));
    }

    // First maximal candidate wins, so ties keep the grid point.
    let (arg_max, max_value) =
        candidates
            .into_iter()
            .fold((f64::NAN, f64::NEG_INFINITY), |acc, c| {
                if c.1 > acc.1 {
                    c
                } else {
                    acc
                }
            });

    Ok(ScalarMaxResult {
        arg_max,
        max_value,
        evaluations: f.evaluations,
        bracket_width: hi - lo,
    })
}

/// `(f(x + h) - f(x - h)) / 2h`.
pub fn central_diff<F>(mut objective: F, x: f64, h: f64) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidArgument {
            name: "h",
            reason: format!("must be positive and finite, got {h}"),
        });
    }
    let up = objective(x + h);
    if !up.is_finite() {
        return Err(Error::NonFiniteObjective {
            beta: x + h,
            value: up,
        });
    }
    let down = objective(x - h);
    if !down.is_finite() {
        return Err(Error::NonFiniteObjective {
            beta: x - h,
            value: down,
        });
    }
    Ok((up - down) / (2.0 * h))
}

/// Moves `x` so that `x +/- h` stays inside `[0, 1 - UNIT_MARGIN]`.
pub fn clamp_for_diff(x: f64, h: f64) -> f64 {
    x.clamp(h, 1.0 - UNIT_MARGIN - h)
}
