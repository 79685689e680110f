//! Exhaustive grid search for the cheapest bundle configuration.
//!
//! The search walks the principal beam width down from its receiver-floor
//! maximum and, for every supplementary-transceiver count the solar budget
//! allows, takes the widest feasible supplementary beam. Each candidate is
//! priced by an overestimate of the network day rate: the number of square
//! grid cells needed to tile the service area (a cell must fit inside a
//! footprint and may hold at most one wavelength's worth of ground nodes
//! per channel) times the full day rate of one platform.

use crate::angle::Angle;
use crate::coverage::{extended_radius, slant_distance_to_j, MfsoConfig};
use crate::energy::EnergyParams;
use crate::error::{PlanError, Result};
use crate::link_budget::{
    border_power_principal, principal_radius, received_power, watts_to_dbm, LinkBudgetParams,
};

/// Everything the configuration search needs to price a candidate.
#[derive(Debug, Clone, PartialEq)]
pub struct OptimizerInputs {
    pub link: LinkBudgetParams,
    pub energy: EnergyParams,
    pub cost: crate::energy::CostParams,
    /// Cap on inter-platform links per platform.
    pub v_max: u32,
    /// Wavelengths per WDM link; also the ground-node capacity of a platform.
    pub w: u32,
    /// Number of ground nodes in the service area.
    pub n_nodes: u64,
    /// Service area in m².
    pub area: f64,
}

impl OptimizerInputs {
    pub fn validate(&self) -> Result<()> {
        self.link.validate()?;
        self.energy.validate()?;
        self.cost.validate()?;
        if self.w < 1 {
            return Err(PlanError::InvalidParameter {
                name: "w",
                value: self.w as f64,
                requirement: ">= 1",
            });
        }
        if !self.area.is_finite() || self.area <= 0.0 {
            return Err(PlanError::InvalidParameter {
                name: "area",
                value: self.area,
                requirement: "> 0",
            });
        }
        Ok(())
    }
}

/// Result of the configuration search.
#[derive(Debug, Clone, PartialEq)]
pub struct OptimalConfig {
    pub cfg: MfsoConfig,
    /// Coverage radius credited to the configuration (used as the
    /// clustering radius downstream).
    pub r_ext: f64,
    /// Platform-count overestimate at that radius.
    pub k_hat: u64,
    /// Day-rate estimate the search minimized.
    pub estimated_cost: f64,
}

// The receiver floor is quoted at 0.1 dBm resolution; the principal-beam
// scan compares both sides at that resolution.
fn round_decidbel(dbm: f64) -> f64 {
    (dbm * 10.0).round() / 10.0
}

/// Largest grid multiple of `step` whose border power still meets the
/// receiver floor. The feasible set is a prefix of the grid (border power
/// falls monotonically with the beam width), so the scan stops at the first
/// violation.
pub fn alpha_max(link: &LinkBudgetParams, step: Angle) -> Result<Angle> {
    if !step.radians().is_finite() || step.radians() <= 0.0 {
        return Err(PlanError::InvalidParameter {
            name: "step",
            value: step.degrees(),
            requirement: "> 0",
        });
    }
    let floor = round_decidbel(watts_to_dbm(link.rho_rx));
    let mut last: Option<u64> = None;
    let mut k = 1u64;
    loop {
        let alpha_deg = k as f64 * step.degrees();
        if alpha_deg >= 180.0 {
            break;
        }
        let p = border_power_principal(link, Angle::from_degrees(alpha_deg))?;
        if round_decidbel(watts_to_dbm(p)) >= floor {
            last = Some(k);
        } else {
            break;
        }
        k += 1;
    }
    last.map(|k| Angle::from_degrees(k as f64 * step.degrees()))
        .ok_or(PlanError::NoFeasibleAlpha)
}

/// Largest grid multiple of `step` at which a ring of `m` supplementary
/// beams still closes its link budget, scanning upward from one step.
///
/// Grid points below the joint-point reachability bound are skipped; after
/// the first workable width the scan ends at the first violation (power,
/// geometry or horizon) and returns the previous grid point. The power test
/// demands headroom: the budget must close with spreading and attenuation
/// reckoned over twice the joint slant range.
pub fn beta_max(link: &LinkBudgetParams, alpha: Angle, m: u32, step: Angle) -> Result<Angle> {
    if m < 1 {
        return Err(PlanError::InvalidParameter {
            name: "m",
            value: m as f64,
            requirement: ">= 1",
        });
    }
    if !step.radians().is_finite() || step.radians() <= 0.0 {
        return Err(PlanError::InvalidParameter {
            name: "step",
            value: step.degrees(),
            requirement: "> 0",
        });
    }
    let mut last: Option<u64> = None;
    let mut k = 1u64;
    loop {
        let beta_deg = k as f64 * step.degrees();
        if beta_deg >= 180.0 {
            break;
        }
        let beta = Angle::from_degrees(beta_deg);
        match extended_radius(link, &MfsoConfig::ring(alpha, m, beta)) {
            Err(PlanError::GeometryInfeasible { .. }) if last.is_none() => {}
            Err(_) => break,
            Ok(r_ext) => {
                let margined = received_power(link, 2.0 * slant_distance_to_j(link, r_ext), beta)?;
                if margined >= link.rho_rx {
                    last = Some(k);
                } else {
                    break;
                }
            }
        }
        k += 1;
    }
    last.map(|k| Angle::from_degrees(k as f64 * step.degrees()))
        .ok_or(PlanError::NoFeasibleBeta {
            alpha_deg: alpha.degrees(),
            m,
        })
}

/// Most supplementary transceivers the daily solar harvest can power when
/// the platform also runs `v_max` inter-platform transceivers. Negative
/// headroom clamps to zero; whether even the bare configuration fits is a
/// separate `solar_feasible` question.
pub fn m_upper_bound(energy: &EnergyParams, v_max: u32) -> u32 {
    let v = v_max as f64;
    let fixed = v * energy.mu_fso * energy.rho_avion
        + v * energy.rho_inter
        + energy.mu_hap * energy.rho_avion
        + energy.rho_pat;
    let per_serving = energy.mu_fso * energy.rho_avion + energy.rho_hcm + energy.rho_fso_tx;
    let bound = (energy.e_solar / 24.0 - fixed) / per_serving - 1.0;
    bound.floor().max(0.0) as u32
}

/// Platform-count overestimate: enough platforms for one per `w` ground
/// nodes, and enough square cells of diagonal `2 * r_ext` to tile the area.
pub fn estimate_hap_count(r_ext: f64, inputs: &OptimizerInputs) -> u64 {
    debug_assert!(r_ext > 0.0);
    let node_term = inputs.n_nodes as f64 / inputs.w as f64;
    let area_term = inputs.area / (2.0 * r_ext * r_ext);
    node_term.max(area_term).ceil() as u64
}

/// Day-rate overestimate for `k_hat` platforms, each carrying `m + 1`
/// serving transceivers and up to `v_max` inter-platform transceivers.
pub fn estimate_cost(k_hat: u64, m: u32, inputs: &OptimizerInputs) -> f64 {
    let c = &inputs.cost;
    k_hat as f64
        * (c.amort_hap
            + (m as f64 + inputs.v_max as f64 + 1.0) * c.amort_fso
            + c.maint_onetime / c.maint_cycle_days)
}

/// Side length of the square tiling cell: it must fit inside a footprint of
/// radius `r_ext` and must not be expected to hold more than `w` uniformly
/// spread ground nodes.
fn cell_side(r_ext: f64, inputs: &OptimizerInputs) -> f64 {
    let capacity_side = (inputs.area * inputs.w as f64 / inputs.n_nodes.max(1) as f64).sqrt();
    capacity_side.min(std::f64::consts::SQRT_2 * r_ext)
}

/// Number of whole tiling cells covering the square service area.
pub fn grid_cell_count(r_ext: f64, inputs: &OptimizerInputs) -> u64 {
    let per_side = (inputs.area.sqrt() / cell_side(r_ext, inputs)).ceil() as u64;
    per_side * per_side
}

/// The objective the search minimizes: whole-cell platform count times the
/// full day rate of one platform.
pub fn candidate_cost(r_ext: f64, m: u32, inputs: &OptimizerInputs) -> f64 {
    let c = &inputs.cost;
    grid_cell_count(r_ext, inputs) as f64
        * (c.amort_hap
            + (m as f64 + inputs.v_max as f64 + 1.0) * c.amort_fso
            + c.maint_onetime / c.maint_cycle_days)
}

/// Coverage radius credited to a ring configuration whose scan returned
/// `beta`: the footprint one scan step beyond the last margined width. The
/// ring power at that radius still clears the receiver floor — the scan
/// margin covers the extra step.
pub fn coverage_radius(
    link: &LinkBudgetParams,
    alpha: Angle,
    m: u32,
    beta: Angle,
    step: Angle,
) -> Result<f64> {
    extended_radius(link, &MfsoConfig::ring(alpha, m, beta + step))
}

/// Exhaustive search over the (alpha, m) grid. For each pair the widest
/// margined supplementary beam is taken, the candidate is priced, and the
/// cheapest configuration wins. Ties prefer fewer supplementary
/// transceivers, then the wider principal beam, making the result
/// independent of scan order.
pub fn find_optimal_mfso(inputs: &OptimizerInputs, step: Angle) -> Result<OptimalConfig> {
    inputs.validate()?;
    let a_max = alpha_max(&inputs.link, step)?;
    let m_max = m_upper_bound(&inputs.energy, inputs.v_max);
    let steps = (a_max.degrees() / step.degrees()).round() as u64;

    // (cost, m, -alpha index) with the winning candidate's payload
    let mut best: Option<((f64, u32, i64), MfsoConfig, f64)> = None;

    for ka in (1..=steps).rev() {
        let alpha = Angle::from_degrees(ka as f64 * step.degrees());
        let r_alpha = principal_radius(&inputs.link, alpha)?;
        for m in 0..=m_max {
            let (cfg, r) = if m == 0 {
                (MfsoConfig::single(alpha), r_alpha)
            } else {
                let beta = match beta_max(&inputs.link, alpha, m, step) {
                    Ok(beta) => beta,
                    Err(PlanError::NoFeasibleBeta { .. }) => continue,
                    Err(e) => return Err(e),
                };
                let r = match coverage_radius(&inputs.link, alpha, m, beta, step) {
                    Ok(r) => r,
                    Err(PlanError::GeometryInfeasible { .. } | PlanError::BeyondHorizon { .. }) => {
                        continue
                    }
                    Err(e) => return Err(e),
                };
                if r < r_alpha {
                    // the ring fails to push coverage past the principal circle
                    continue;
                }
                (MfsoConfig::ring(alpha, m, beta), r)
            };
            let cost = candidate_cost(r, m, inputs);
            let key = (cost, m, -(ka as i64));
            if best.as_ref().is_none_or(|(bk, _, _)| key < *bk) {
                best = Some((key, cfg, r));
            }
        }
    }

    let ((cost, _, _), cfg, r_ext) = best.ok_or(PlanError::NoFeasibleAlpha)?;
    Ok(OptimalConfig {
        k_hat: estimate_hap_count(r_ext, inputs),
        estimated_cost: cost,
        cfg,
        r_ext,
    })
}
