use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;

use ecotax_core::format::g17;
use ecotax_core::optimizer::{maximize_on_unit_interval, DEFAULT_TOL};
use ecotax_core::params::canonical_field;
use ecotax_core::policy::{self, Regime};
use ecotax_core::{simulate, steady_state, ModelParams};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::{Cli, CliError, Command, Scenario};

type Result<T> = std::result::Result<T, CliError>;

pub const SWEEP_OUTPUTS: [&str; 7] = [
    "y_star", "u_star", "w_star", "h_star", "p_star", "dy_dbeta", "du_dbeta",
];

const DEFAULT_TAU_GRID: &str = "0.001:1:1000";

pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    let path = cli
        .scenario
        .as_deref()
        .ok_or_else(|| CliError::Validation("--scenario <path> is required".into()))?;
    let text = fs::read_to_string(path).map_err(|e| {
        CliError::Validation(format!("cannot read scenario {}: {e}", path.display()))
    })?;
    let mut scenario = Scenario::parse(&text)?;
    if let Some(tol) = cli.tol.filter(|_| cli.command == Command::Simulate) {
        scenario.tol = tol;
    }
    if let Some(n) = cli.max_periods {
        scenario.max_periods = n;
    }

    match cli.command {
        Command::Validate => validate(cli, &scenario, stdout),
        Command::Simulate => run_simulation(cli, &scenario, stdout, stderr),
        Command::Steady => steady(&scenario, stdout, stderr),
        Command::Thresholds => print_json(stdout, &policy::classify(&scenario.params)),
        Command::Sweep => sweep(cli, &scenario, stdout),
        Command::Optimize => optimize(cli, &scenario, stdout),
        Command::Regimes => regimes(cli, &scenario, stdout),
    }
}

fn print_json<T: Serialize>(stdout: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Output(e.to_string()))?;
    writeln!(stdout, "{text}").map_err(|e| CliError::Output(e.to_string()))
}

fn write_stream(out: &mut dyn Write, content: &str) -> Result<()> {
    out.write_all(content.as_bytes())
        .map_err(|e| CliError::Output(e.to_string()))
}

/// Writes the whole artifact in one go; a failed write leaves no file behind.
fn write_artifact(path: &Path, content: &str) -> Result<()> {
    fs::write(path, content).map_err(|e| {
        let _ = fs::remove_file(path);
        CliError::Output(format!("cannot write {}: {e}", path.display()))
    })
}

fn validate(cli: &Cli, scenario: &Scenario, stdout: &mut dyn Write) -> Result<()> {
    if cli.json {
        print_json(stdout, scenario)
    } else {
        write_stream(stdout, &scenario.to_canonical_string())
    }
}

fn run_simulation(
    cli: &Cli,
    s: &Scenario,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<()> {
    let traj = simulate(&s.params, s.k0, s.p0, &s.sim_config())?;
    let mut csv = Vec::new();
    traj.write_csv(&mut csv)
        .map_err(|e| CliError::Output(e.to_string()))?;
    let csv = String::from_utf8(csv).expect("ascii csv");

    if traj.pollution_at_or_below_one() {
        let _ = writeln!(
            stderr,
            "warning: pollution stock P <= 1 along the trajectory"
        );
    }
    let summary = format!(
        "converged={} periods={} residual={}",
        traj.converged,
        traj.periods(),
        g17(traj.residual)
    );
    match &cli.out {
        Some(path) => {
            write_artifact(path, &csv)?;
            if cli.json {
                print_json(
                    stdout,
                    &json!({
                        "converged": traj.converged,
                        "periods": traj.periods(),
                        "residual": traj.residual,
                    }),
                )
            } else {
                write_stream(stdout, &format!("{summary}\n"))
            }
        }
        None => {
            write_stream(stdout, &csv)?;
            writeln!(stderr, "{summary}").map_err(|e| CliError::Output(e.to_string()))
        }
    }
}

fn steady(s: &Scenario, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    let ss = steady_state::solve(&s.params);
    if !ss.pollution_above_one() {
        let _ = writeln!(stderr, "warning: steady-state pollution stock P* <= 1");
    }
    print_json(stdout, &ss)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub from: f64,
    pub to: f64,
    pub steps: usize,
}

impl Grid {
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || CliError::Validation(format!("--grid expects from:to:steps, got `{text}`"));
        let parts: Vec<&str> = text.split(':').collect();
        let [from, to, steps] = parts.as_slice() else {
            return Err(bad());
        };
        let from: f64 = from.trim().parse().map_err(|_| bad())?;
        let to: f64 = to.trim().parse().map_err(|_| bad())?;
        let steps: usize = steps.trim().parse().map_err(|_| bad())?;
        if steps < 2 {
            return Err(CliError::Validation(format!(
                "--grid needs at least 2 steps, got {steps}"
            )));
        }
        if !from.is_finite() || !to.is_finite() {
            return Err(bad());
        }
        Ok(Grid { from, to, steps })
    }

    pub fn points(&self) -> Vec<f64> {
        let last = self.steps - 1;
        (0..self.steps)
            .map(|i| {
                if i == last {
                    self.to
                } else {
                    self.from + (self.to - self.from) * i as f64 / last as f64
                }
            })
            .collect()
    }
}

fn sweep_point(p: &ModelParams, outputs: &[&str]) -> Result<Vec<f64>> {
    let ss = steady_state::solve(p);
    outputs
        .iter()
        .map(|&name| {
            Ok(match name {
                "y_star" => ss.y_star,
                "u_star" => steady_state::welfare(p)?,
                "w_star" => ss.w_star,
                "h_star" => ss.h_star,
                "p_star" => ss.p_star,
                "dy_dbeta" => policy::dy_dbeta(p, p.beta),
                "du_dbeta" => {
                    if p.tau >= 1.0 {
                        return Err(CliError::Numeric("du_dbeta requires tau < 1".into()));
                    }
                    policy::du_dbeta(p, p.beta)
                }
                _ => unreachable!("outputs are checked before the sweep"),
            })
        })
        .collect()
}

fn sweep(cli: &Cli, s: &Scenario, stdout: &mut dyn Write) -> Result<()> {
    let name = cli
        .param
        .as_deref()
        .ok_or_else(|| CliError::Validation("sweep requires --param <name>".into()))?;
    let name = canonical_field(name)
        .ok_or_else(|| CliError::Validation(format!("unknown parameter `{name}`")))?;
    let grid = Grid::parse(
        cli.grid
            .as_deref()
            .ok_or_else(|| CliError::Validation("sweep requires --grid from:to:steps".into()))?,
    )?;
    let outputs: Vec<&str> = match &cli.outputs {
        None => SWEEP_OUTPUTS.to_vec(),
        Some(list) => list
            .iter()
            .map(|o| {
                SWEEP_OUTPUTS
                    .iter()
                    .copied()
                    .find(|k| k == o)
                    .ok_or_else(|| {
                        CliError::Validation(format!(
                            "unknown output `{o}`; choose from {}",
                            SWEEP_OUTPUTS.join(",")
                        ))
                    })
            })
            .collect::<Result<_>>()?,
    };

    let points = grid.points();
    let grid_params = points
        .iter()
        .map(|&v| Ok(s.params.with(name, v)?.validate()?))
        .collect::<Result<Vec<_>>>()?;
    let rows = grid_params
        .par_iter()
        .map(|p| sweep_point(p, &outputs))
        .collect::<Result<Vec<_>>>()?;

    let mut csv = format!("value,{}\n", outputs.join(","));
    for (v, row) in points.iter().zip(rows) {
        csv.push_str(&g17(*v));
        for x in row {
            csv.push(',');
            csv.push_str(&g17(x));
        }
        csv.push('\n');
    }
    match &cli.out {
        Some(path) => write_artifact(path, &csv),
        None => write_stream(stdout, &csv),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OptimizeAudit {
    pub argmax_y: f64,
    pub beta_hat: f64,
    pub argmax_u: f64,
    pub beta_hat_u: f64,
    pub max_abs_gap: f64,
}

pub fn optimize_audit(p: &ModelParams, tol: f64) -> Result<OptimizeAudit> {
    steady_state::welfare(p)?;
    let y = maximize_on_unit_interval(|b| steady_state::output(&p.with_beta(b)), tol)?;
    let u = maximize_on_unit_interval(
        |b| steady_state::welfare(&p.with_beta(b)).unwrap_or(f64::NAN),
        tol,
    )?;
    let beta_hat = policy::beta_hat(p);
    let beta_hat_u = policy::beta_hat_u(p);
    Ok(OptimizeAudit {
        argmax_y: y.arg_max,
        beta_hat,
        argmax_u: u.arg_max,
        beta_hat_u,
        max_abs_gap: (y.arg_max - beta_hat)
            .abs()
            .max((u.arg_max - beta_hat_u).abs()),
    })
}

fn optimize(cli: &Cli, s: &Scenario, stdout: &mut dyn Write) -> Result<()> {
    let audit = optimize_audit(&s.params, cli.tol.unwrap_or(DEFAULT_TOL))?;
    print_json(stdout, &audit)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Boundary {
    pub from: Regime,
    pub to: Regime,
    pub tau: f64,
    pub analytic: f64,
}

/// Scans `tau` over the grid, classifying each point by the signs of the
/// marginal effects at `beta = 0`, and bisects every regime change down to
/// adjacent floating-point values.
pub fn regime_boundaries(p: &ModelParams, grid: &[f64]) -> Vec<Boundary> {
    let regime_at = |tau: f64| policy::regime_by_marginal_signs(&p.with_tau(tau));
    let mut found = Vec::new();
    for w in grid.windows(2) {
        let (mut lo, hi_end) = (w[0], w[1]);
        let target = regime_at(hi_end);
        while regime_at(lo) != target {
            let from = regime_at(lo);
            let mut hi = hi_end;
            loop {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if regime_at(mid) == from {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let to = regime_at(hi);
            let analytic = match (from, to) {
                (Regime::I, Regime::II) => policy::tau_cutoff_u(p),
                _ => policy::tau_cutoff_y(p),
            };
            found.push(Boundary {
                from,
                to,
                tau: 0.5 * (lo + hi),
                analytic,
            });
            lo = hi;
        }
    }
    found
}

fn regimes(cli: &Cli, s: &Scenario, stdout: &mut dyn Write) -> Result<()> {
    let grid = Grid::parse(cli.grid.as_deref().unwrap_or(DEFAULT_TAU_GRID))?;
    let points = grid.points();
    for &tau in &points {
        ecotax_core::params::check_field("tau", tau)?;
    }
    let boundaries = regime_boundaries(&s.params, &points);
    let cutoff_u = policy::tau_cutoff_u(&s.params);
    let cutoff_y = policy::tau_cutoff_y(&s.params);

    if cli.json {
        return print_json(
            stdout,
            &json!({
                "tau_cutoff_u": cutoff_u,
                "tau_cutoff_y": cutoff_y,
                "boundaries": boundaries,
            }),
        );
    }
    let mut text = format!(
        "tau_cutoff_u={} tau_cutoff_y={}\n",
        g17(cutoff_u),
        g17(cutoff_y)
    );
    for b in &boundaries {
        writeln!(
            text,
            "boundary {}->{} tau={} analytic={} abs_diff={}",
            b.from,
            b.to,
            g17(b.tau),
            g17(b.analytic),
            g17((b.tau - b.analytic).abs())
        )
        .unwrap();
    }
    if boundaries.is_empty() {
        let r = policy::regime_by_marginal_signs(&s.params.with_tau(points[0]));
        writeln!(text, "no regime change on grid; regime {r} throughout").unwrap();
    }
    write_stream(stdout, &text)
}
