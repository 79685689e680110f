//! Shared helpers for the integration suites: an independent numeric
//! oracle for the extended-footprint geometry, and the seeded scenario
//! set used by the pipeline checks.
//!
//! Each integration binary uses its own subset of these helpers.
#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use hapnet_core::{
    design_network, generate_scenario, CostParams, DesignOptions, EnergyParams, LinkBudgetParams,
    NetworkPlan, OptimizerInputs, Scenario,
};

/// Extended coverage radius by direct 3-D construction, independent of the
/// closed form under test.
///
/// The platform sits at `(0, 0, h)` with the principal cone pointing
/// straight down. One supplementary cone of half-angle `beta/2` is tilted
/// in the bisector plane of its ground sector so that it passes through the
/// point `K` where neighbouring footprints cross the principal circle
/// (azimuth `pi/m`). The tilt is found by bisection on the outward branch,
/// and the joint point `J` by bisection on the parameter of the ground ray
/// through `K`.
pub fn oracle_extended_radius(h: f64, alpha: f64, m: u32, beta: f64) -> Option<f64> {
    let r_alpha = h * (alpha / 2.0).tan();
    let c = (PI / m as f64).cos();
    let target = (beta / 2.0).cos();
    let norm = (r_alpha * r_alpha + h * h).sqrt();

    // Tilt phi of the cone axis from nadir: angle(K - A, d(phi)) = beta/2,
    // with d = (sin phi, 0, -cos phi) and K - A = (r_alpha c, r_alpha s, -h).
    let g = |phi: f64| (r_alpha * c * phi.sin() + h * phi.cos()) / norm - target;
    let phi_peak = (r_alpha * c / h).atan();
    if g(phi_peak) < 0.0 {
        return None; // cone too narrow to reach K at any tilt
    }
    if g(FRAC_PI_2) > 0.0 {
        return None; // still inside the cone at horizontal tilt
    }
    let (mut lo, mut hi) = (phi_peak, FRAC_PI_2);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if g(mid) >= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let phi = 0.5 * (lo + hi);

    // J: second crossing of the cone by the ground ray through K.
    let q = |t: f64| (t * c * phi.sin() + h * phi.cos()) / (t * t + h * h).sqrt() - target;
    let mut t_lo = r_alpha * (1.0 + 1e-9);
    if q(t_lo) <= 0.0 {
        return None; // the ray exits the cone inward of K
    }
    let mut t_hi = r_alpha * 1.5;
    let t_cap = h * 89.9f64.to_radians().tan();
    while q(t_hi) > 0.0 {
        t_hi *= 1.5;
        if t_hi > t_cap {
            return None; // never exits below the horizon
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (t_lo + t_hi);
        if q(mid) > 0.0 {
            t_lo = mid;
        } else {
            t_hi = mid;
        }
    }
    Some(0.5 * (t_lo + t_hi))
}

/// The 19 scenario sizes exercised by the pipeline checks.
pub const SCENARIO_SIZES: [u32; 19] = [
    480, 588, 763, 854, 998, 1005, 1150, 1345, 1477, 1523, 1675, 1736, 1911, 2009, 2135, 2304,
    2325, 2491, 2753,
];

pub struct DesignCase {
    pub n: u32,
    pub seed: u64,
    pub w: u32,
    pub e_kwh: f64,
    pub inputs: OptimizerInputs,
    pub scenario: Scenario,
    pub plan: NetworkPlan,
}

pub fn design_options() -> DesignOptions {
    DesignOptions::default()
}

pub fn inputs_for(n: u32, w: u32, e_kwh: f64) -> OptimizerInputs {
    OptimizerInputs {
        link: LinkBudgetParams::default(),
        energy: EnergyParams {
            e_solar: e_kwh * 1000.0,
            ..EnergyParams::default()
        },
        cost: CostParams::default(),
        v_max: 10,
        w,
        n_nodes: n as u64,
        area: 1e10,
    }
}

/// All 19 scenarios designed under three settings: (w=40, 50 kWh),
/// (w=80, 50 kWh) and (w=40, 42 kWh). Built once, shared by the pipeline
/// criteria, together with the wall-clock time the build took.
pub fn design_suite() -> &'static (Vec<DesignCase>, Duration) {
    static SUITE: OnceLock<(Vec<DesignCase>, Duration)> = OnceLock::new();
    SUITE.get_or_init(|| {
        let started = Instant::now();
        let opts = design_options();
        let mut cases = Vec::new();
        for (i, &n) in SCENARIO_SIZES.iter().enumerate() {
            let seed = 1000 + i as u64;
            let scenario = generate_scenario(n, 1e5, opts.wavelength_capacity, seed)
                .expect("scenario generation");
            for (w, e_kwh) in [(40u32, 50.0f64), (80, 50.0), (40, 42.0)] {
                let inputs = inputs_for(n, w, e_kwh);
                let plan = design_network(&inputs, &scenario, &opts)
                    .unwrap_or_else(|e| panic!("design failed for n={n} w={w} E={e_kwh}: {e}"));
                cases.push(DesignCase {
                    n,
                    seed,
                    w,
                    e_kwh,
                    inputs,
                    scenario: scenario.clone(),
                    plan,
                });
            }
        }
        (cases, started.elapsed())
    })
}
