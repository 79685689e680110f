//! Daily platform energy draw, the solar budget check, and the network
//! day-rate cost model.
//!
//! A platform keeps flying on `rho_avion` watts per kilogram of all-up mass,
//! runs one pointing/acquisition/tracking system for the serving bundle,
//! and spends per-transceiver power on lasers plus heating/cooling/
//! management. Inter-platform transceivers are accounted all-in. Platforms
//! run on harvested solar energy alone, so a configuration is only viable
//! when the 24 h draw fits the daily harvest.
//!
//! Costs are per day and unitless: platform and transceiver amortization
//! rates plus a one-time maintenance charge spread over the maintenance
//! cycle.

use crate::error::{PlanError, Result};

/// Platform masses, per-subsystem power draws and the daily solar harvest.
///
/// Units: powers W (per kg for `rho_avion`), masses kg, energy Wh/day.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyParams {
    /// Avionics power per unit of carried mass.
    pub rho_avion: f64,
    /// Pointing/acquisition/tracking system, one per platform.
    pub rho_pat: f64,
    /// Heating, cooling and management per serving transceiver.
    pub rho_hcm: f64,
    /// Laser source of a serving transceiver.
    pub rho_fso_tx: f64,
    /// Inter-platform transceiver, all-in (laser + HCM + its own PAT).
    pub rho_inter: f64,
    /// Platform mass excluding transceivers.
    pub mu_hap: f64,
    /// Mass of one transceiver.
    pub mu_fso: f64,
    /// Minimum daily harvested solar energy.
    pub e_solar: f64,
}

impl Default for EnergyParams {
    fn default() -> Self {
        EnergyParams {
            rho_avion: 2.0,
            rho_pat: 15.0,
            rho_hcm: 20.0,
            rho_fso_tx: 1.0,
            rho_inter: 35.1,
            mu_hap: 500.0,
            mu_fso: 6.3,
            e_solar: 50_000.0,
        }
    }
}

impl EnergyParams {
    pub fn validate(&self) -> Result<()> {
        let checks = [
            ("rho_avion", self.rho_avion),
            ("rho_pat", self.rho_pat),
            ("rho_hcm", self.rho_hcm),
            ("rho_fso_tx", self.rho_fso_tx),
            ("rho_inter", self.rho_inter),
            ("mu_hap", self.mu_hap),
            ("mu_fso", self.mu_fso),
            ("e_solar", self.e_solar),
        ];
        for (name, value) in checks {
            if !value.is_finite() || value < 0.0 {
                return Err(PlanError::InvalidParameter {
                    name,
                    value,
                    requirement: ">= 0",
                });
            }
        }
        Ok(())
    }
}

/// Amortization and maintenance constants (per-day rates, days).
#[derive(Debug, Clone, PartialEq)]
pub struct CostParams {
    /// Daily amortization of one platform.
    pub amort_hap: f64,
    /// Daily amortization of one transceiver.
    pub amort_fso: f64,
    /// One-time cost of lowering, servicing and reinstalling a platform.
    pub maint_onetime: f64,
    /// Maintenance cycle length in days.
    pub maint_cycle_days: f64,
}

impl Default for CostParams {
    fn default() -> Self {
        CostParams {
            amort_hap: 100.0,
            amort_fso: 10.0,
            maint_onetime: 1000.0,
            maint_cycle_days: 365.0,
        }
    }
}

impl CostParams {
    pub fn validate(&self) -> Result<()> {
        let checks = [
            ("amort_hap", self.amort_hap),
            ("amort_fso", self.amort_fso),
            ("maint_onetime", self.maint_onetime),
            ("maint_cycle_days", self.maint_cycle_days),
        ];
        for (name, value) in checks {
            if !value.is_finite() || value <= 0.0 {
                return Err(PlanError::InvalidParameter {
                    name,
                    value,
                    requirement: "> 0",
                });
            }
        }
        Ok(())
    }
}

/// Daily network cost split into its components. Solar energy is free, so
/// the total is amortization plus maintenance.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct CostBreakdown {
    pub amortization: f64,
    pub maintenance: f64,
    pub total: f64,
    /// Number of platforms billed.
    pub k: u64,
    /// Number of inter-platform links billed (two transceivers each).
    pub l_inter: u64,
    /// Supplementary transceivers per platform.
    pub m: u32,
}

/// 24-hour energy draw (Wh) of one platform carrying `n_serving` serving
/// transceivers and `n_inter` inter-platform transceivers.
pub fn daily_energy(energy: &EnergyParams, n_serving: u32, n_inter: u32) -> f64 {
    let ns = n_serving as f64;
    let ni = n_inter as f64;
    let avionics = (energy.mu_hap + (ns + ni) * energy.mu_fso) * energy.rho_avion;
    let serving = ns * (energy.rho_fso_tx + energy.rho_hcm) + energy.rho_pat;
    let inter = energy.rho_inter * ni;
    (avionics + serving + inter) * 24.0
}

/// Whether the 24-hour draw fits the daily solar harvest.
pub fn solar_feasible(energy: &EnergyParams, n_serving: u32, n_inter: u32) -> bool {
    daily_energy(energy, n_serving, n_inter) <= energy.e_solar
}

/// Daily network cost of `k` platforms, each with `m + 1` serving
/// transceivers, joined by `l_inter` inter-platform links.
pub fn network_cost(cost: &CostParams, k: u64, m: u32, l_inter: u64) -> CostBreakdown {
    let per_hap_amort = cost.amort_hap + (m as f64 + 1.0) * cost.amort_fso;
    let amortization = k as f64 * per_hap_amort + 2.0 * l_inter as f64 * cost.amort_fso;
    let maintenance = k as f64 * cost.maint_onetime / cost.maint_cycle_days;
    CostBreakdown {
        amortization,
        maintenance,
        total: amortization + maintenance,
        k,
        l_inter,
        m,
    }
}

/// Least number of platforms that can serve `n_nodes` ground nodes when a
/// platform serves at most `w` of them (one wavelength each).
pub fn hap_lower_bound(n_nodes: u64, w: u32) -> u64 {
    n_nodes.div_ceil(w as u64)
}

/// The same bound as a real-valued ratio, for plotting against integer
/// platform counts.
pub fn hap_lower_bound_ratio(n_nodes: u64, w: u32) -> f64 {
    n_nodes as f64 / w as f64
}
