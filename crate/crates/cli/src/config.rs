//! Run configuration: a JSON file with defaults for every knob, overridden
//! field-by-field by command-line flags.
//!
//! Boundary units are human-facing: angles in degrees, distances in
//! metres, solar energy in kWh/day. Conversions to the library's internal
//! units happen here.

use std::path::{Path, PathBuf};

use hapnet_core::{
    Angle, CostParams, DesignOptions, EnergyParams, LinkBudgetParams, OptimizerInputs,
};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct LinkConfig {
    pub sigma_per_m: f64,
    pub p_tx_w: f64,
    pub r_rx_m: f64,
    pub rho_rx_w: f64,
    pub elevation_m: f64,
}

impl Default for LinkConfig {
    fn default() -> Self {
        let p = LinkBudgetParams::default();
        LinkConfig {
            sigma_per_m: p.sigma,
            p_tx_w: p.p_tx,
            r_rx_m: p.r_rx,
            rho_rx_w: p.rho_rx,
            elevation_m: p.h,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct EnergyConfig {
    pub rho_avion_w_per_kg: f64,
    pub rho_pat_w: f64,
    pub rho_hcm_w: f64,
    pub rho_fso_tx_w: f64,
    pub rho_inter_w: f64,
    pub mu_hap_kg: f64,
    pub mu_fso_kg: f64,
    pub e_solar_kwh: f64,
}

impl Default for EnergyConfig {
    fn default() -> Self {
        let e = EnergyParams::default();
        EnergyConfig {
            rho_avion_w_per_kg: e.rho_avion,
            rho_pat_w: e.rho_pat,
            rho_hcm_w: e.rho_hcm,
            rho_fso_tx_w: e.rho_fso_tx,
            rho_inter_w: e.rho_inter,
            mu_hap_kg: e.mu_hap,
            mu_fso_kg: e.mu_fso,
            e_solar_kwh: e.e_solar / 1000.0,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct CostConfig {
    pub amort_hap_per_day: f64,
    pub amort_fso_per_day: f64,
    pub maint_onetime: f64,
    pub maint_cycle_days: f64,
}

impl Default for CostConfig {
    fn default() -> Self {
        let c = CostParams::default();
        CostConfig {
            amort_hap_per_day: c.amort_hap,
            amort_fso_per_day: c.amort_fso,
            maint_onetime: c.maint_onetime,
            maint_cycle_days: c.maint_cycle_days,
        }
    }
}

/// Sweep axes for the `tables` and `design` commands. An empty axis means
/// the command falls back to the scalar value (or emits a header-only CSV
/// where a sweep is mandatory).
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SweepConfig {
    pub e_solar_kwh: Vec<f64>,
    pub w: Vec<u32>,
    pub r_rx_m: Vec<f64>,
    pub n_nodes: Vec<u32>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            e_solar_kwh: vec![
                42.0, 50.0, 75.0, 100.0, 125.0, 150.0, 175.0, 200.0, 225.0, 250.0, 275.0, 290.0,
            ],
            w: vec![40, 80],
            r_rx_m: vec![2.0, 4.0],
            n_nodes: vec![
                480, 588, 763, 854, 998, 1005, 1150, 1345, 1477, 1523, 1675, 1736, 1911, 2009,
                2135, 2304, 2325, 2491, 2753,
            ],
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    pub link: LinkConfig,
    pub energy: EnergyConfig,
    pub cost: CostConfig,
    /// Wavelengths per WDM link.
    pub w: u32,
    /// Initial cap on inter-platform links per platform.
    pub v_init: u32,
    /// Beam-width scan resolution, degrees.
    pub step_deg: f64,
    pub n_nodes: u32,
    pub area_side_m: f64,
    pub seed: u64,
    pub wavelength_capacity_gbps: f64,
    pub l_hh_m: f64,
    pub v_ceiling: u32,
    /// Optional scenario file; when set, `design` reads it instead of
    /// generating one.
    pub scenario_file: Option<PathBuf>,
    pub sweep: SweepConfig,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            link: LinkConfig::default(),
            energy: EnergyConfig::default(),
            cost: CostConfig::default(),
            w: 80,
            v_init: 10,
            step_deg: 1.0,
            n_nodes: 480,
            area_side_m: 1e5,
            seed: 1,
            wavelength_capacity_gbps: 1.0,
            l_hh_m: 88_000.0,
            v_ceiling: 64,
            scenario_file: None,
            sweep: SweepConfig::default(),
        }
    }
}

impl RunConfig {
    pub fn load(path: Option<&Path>) -> Result<RunConfig, CliError> {
        match path {
            None => Ok(RunConfig::default()),
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    CliError::Config(format!("cannot read {}: {e}", path.display()))
                })?;
                serde_json::from_str(&text)
                    .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
            }
        }
    }

    pub fn link_params(&self) -> LinkBudgetParams {
        LinkBudgetParams {
            sigma: self.link.sigma_per_m,
            p_tx: self.link.p_tx_w,
            r_rx: self.link.r_rx_m,
            rho_rx: self.link.rho_rx_w,
            h: self.link.elevation_m,
        }
    }

    pub fn energy_params(&self) -> EnergyParams {
        EnergyParams {
            rho_avion: self.energy.rho_avion_w_per_kg,
            rho_pat: self.energy.rho_pat_w,
            rho_hcm: self.energy.rho_hcm_w,
            rho_fso_tx: self.energy.rho_fso_tx_w,
            rho_inter: self.energy.rho_inter_w,
            mu_hap: self.energy.mu_hap_kg,
            mu_fso: self.energy.mu_fso_kg,
            e_solar: self.energy.e_solar_kwh * 1000.0,
        }
    }

    pub fn cost_params(&self) -> CostParams {
        CostParams {
            amort_hap: self.cost.amort_hap_per_day,
            amort_fso: self.cost.amort_fso_per_day,
            maint_onetime: self.cost.maint_onetime,
            maint_cycle_days: self.cost.maint_cycle_days,
        }
    }

    pub fn optimizer_inputs(&self) -> OptimizerInputs {
        OptimizerInputs {
            link: self.link_params(),
            energy: self.energy_params(),
            cost: self.cost_params(),
            v_max: self.v_init,
            w: self.w,
            n_nodes: self.n_nodes as u64,
            area: self.area_side_m * self.area_side_m,
        }
    }

    pub fn design_options(&self) -> DesignOptions {
        DesignOptions {
            l_hh: self.l_hh_m,
            v_ceiling: self.v_ceiling,
            wavelength_capacity: self.wavelength_capacity_gbps,
            step: self.step(),
        }
    }

    pub fn step(&self) -> Angle {
        Angle::from_degrees(self.step_deg)
    }
}
