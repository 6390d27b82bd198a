use ecotax_core::dynamics::{simulate, EconState, SimConfig};
use ecotax_core::policy::{
    self, beta_hat, beta_hat_u, classify, du_dbeta, dy_dbeta, tau_cutoff_u, tau_cutoff_y,
};
use ecotax_core::steady_state::solve;
use ecotax_core::{ModelParams, Regime};
use proptest::prelude::*;

prop_compose! {
    fn params()(
        alpha in 0.05..0.95f64,
        tau in 0.01..1.0f64,
        beta in 0.0..0.95f64,
        gamma in 0.1..3.0f64,
        mu in 0.01..0.99f64,
        z in 0.01..0.99f64,
        theta in 0.05..2.0f64,
        eta in 0.1..3.0f64,
        xi in 0.05..2.0f64,
        phi in 0.0..3.0f64,
        epsilon in 0.0..3.0f64,
        rho in 0.01..5.0f64,
        a_tfp in 0.1..5.0f64,
    ) -> ModelParams {
        ModelParams { alpha, tau, beta, gamma, mu, z, theta, eta, xi, phi, epsilon, rho, a_tfp }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn validate_is_idempotent(p in params()) {
        let once = p.validate().unwrap();
        prop_assert_eq!(once.validate().unwrap(), once);
    }

    #[test]
    fn derived_params_in_range(p in params(), beta in 0.0..0.99f64, tau in 0.01..1.0f64) {
        let d = p.derive();
        prop_assert!(d.delta > 0.0 && d.delta < 0.5);
        prop_assert!(d.phi_big.is_finite() && d.phi_big > 0.0);
        prop_assert_eq!(p.with_beta(beta).with_tau(tau).derive().delta, d.delta);
    }

    #[test]
    fn pollution_gap_shrinks_geometrically(p in params(), a in 0.1..50.0f64, b in 0.1..50.0f64) {
        let cfg = SimConfig { max_periods: 40, tol: 1e-300 };
        let ta = simulate(&p, 0.5, a, &cfg).unwrap();
        let tb = simulate(&p, 0.5, b, &cfg).unwrap();
        for (t, (sa, sb)) in ta.states.iter().zip(&tb.states).enumerate() {
            let expected = (1.0 - p.mu).powi(t as i32) * (a - b).abs();
            let got = (sa.pollution - sb.pollution).abs();
            prop_assert!((got - expected).abs() <= 1e-12 * (1.0 + sa.pollution.abs() + sb.pollution.abs()));
        }
    }

    #[test]
    fn identities_hold_along_trajectories(p in params(), k0 in 0.01..3.0f64, p0 in 0.5..20.0f64) {
        let traj = simulate(&p, k0, p0, &SimConfig { max_periods: 30, tol: 1e-300 }).unwrap();
        let ratio = p.emission_abatement_ratio();
        for w in traj.states.windows(2) {
            let (s, next) = (&w[0], &w[1]);
            let income = s.wage + p.beta * p.tau * s.y;
            prop_assert!((s.c_young + s.savings - income).abs() <= 1e-12 * income);
            prop_assert!((s.wage + s.interest * s.k - (1.0 - p.tau) * s.y).abs() <= 1e-12 * s.y);
            prop_assert!((p.output(s.k, s.health) - s.y).abs() <= 1e-12 * s.y);
            let accumulated = p.savings_propensity() * p.income_share() * s.y;
            prop_assert!((next.k - accumulated).abs() <= 1e-12 * accumulated);
            // Emissions z*y over abatement (1-beta)*tau*y.
            let ed = (p.z * s.y) / ((1.0 - p.beta) * p.tau * s.y);
            prop_assert!((ed / ratio - 1.0).abs() <= 1e-14);
        }
    }

    #[test]
    fn steady_state_is_a_fixed_point(p in params()) {
        let ss = solve(&p);
        let s = EconState::initial(&p, ss.k_star, ss.p_star).unwrap();
        let next = ecotax_core::step(&p, &s).unwrap();
        prop_assert!((next.k / ss.k_star - 1.0).abs() <= 1e-12);
        prop_assert!((next.pollution / ss.p_star - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn thresholds_ordered_and_below_one(p in params()) {
        prop_assume!(p.phi_gamma_eps() > 0.0);
        let (bh, bu) = (beta_hat(&p), beta_hat_u(&p));
        prop_assert!((0.0..1.0).contains(&bh));
        prop_assert!((0.0..1.0).contains(&bu));
        prop_assert!(bu >= bh);
        prop_assert!(tau_cutoff_u(&p) <= tau_cutoff_y(&p));
        let r = classify(&p);
        match r.regime {
            Regime::I => prop_assert!(bh == 0.0 && bu == 0.0),
            Regime::II => prop_assert!(bu > 0.0 && bh == 0.0),
            Regime::III => prop_assert!(bu > bh && bh > 0.0),
        }
    }

    #[test]
    fn derivative_signs_bracket_thresholds(p in params()) {
        prop_assume!(p.phi_gamma_eps() > 0.0 && p.tau < 1.0);
        let (bh, bu) = (beta_hat(&p), beta_hat_u(&p));
        for i in 0..200 {
            let b = i as f64 / 200.0;
            let sy = policy::output_semi_elasticity(&p, b);
            let du = du_dbeta(&p, b);
            // Skip a sliver around each root where rounding decides the sign.
            if (b - bh).abs() > 1e-9 {
                prop_assert_eq!(sy > 0.0, b < bh, "beta {} beta_hat {}", b, bh);
                prop_assert_eq!(dy_dbeta(&p, b) > 0.0, b < bh);
            }
            if (b - bu).abs() > 1e-9 {
                prop_assert_eq!(du > 0.0, b < bu, "beta {} beta_hat_u {}", b, bu);
            }
        }
    }

    #[test]
    fn marginal_sign_regime_agrees_with_cutoffs(p in params()) {
        let tu = tau_cutoff_u(&p);
        let ty = tau_cutoff_y(&p);
        prop_assume!((p.tau - tu).abs() > 1e-9 && (p.tau - ty).abs() > 1e-9);
        prop_assert_eq!(policy::regime_by_marginal_signs(&p), policy::regime(&p));
    }

    #[test]
    fn gap_formula_matches_difference(p in params()) {
        prop_assume!(p.phi_gamma_eps() > 0.0 && policy::regime(&p) == Regime::III);
        let g = policy::gap(&p).unwrap();
        prop_assert!(g > 0.0);
        prop_assert!((g - (beta_hat_u(&p) - beta_hat(&p))).abs() <= 1e-12);
    }
}
