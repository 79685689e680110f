//! Deterministic CSV/JSON formatting so identical runs produce identical
//! bytes.

use hapnet_core::{CostBreakdown, NetworkPlan, OptimalConfig};
use serde::Serialize;

/// Degrees with up to six decimals, trailing zeros trimmed: grid multiples
/// print as plain integers.
pub fn fmt_deg(deg: f64) -> String {
    let s = format!("{deg:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    s.to_string()
}

/// Metres with one decimal.
pub fn fmt_m(x: f64) -> String {
    format!("{x:.1}")
}

/// Cost rates with two decimals.
pub fn fmt_cost(x: f64) -> String {
    format!("{x:.2}")
}

/// Plain numbers with up to six decimals, trimmed.
pub fn fmt_num(x: f64) -> String {
    let s = format!("{x:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    s.to_string()
}

/// One CSV row describing an optimal configuration:
/// `alpha_deg,m,beta_deg,r_ext_m,k_hat,cost_estimate`.
pub fn config_row(opt: &OptimalConfig, cost_estimate: f64) -> String {
    let beta = opt
        .cfg
        .beta
        .map(|b| fmt_deg(b.degrees()))
        .unwrap_or_else(|| "-".to_string());
    format!(
        "{},{},{},{},{},{}",
        fmt_deg(opt.cfg.alpha.degrees()),
        opt.cfg.m,
        beta,
        fmt_m(opt.r_ext),
        opt.k_hat,
        fmt_cost(cost_estimate),
    )
}

#[derive(Serialize)]
pub struct ConfigReport {
    pub alpha_deg: f64,
    pub m: u32,
    pub beta_deg: Option<f64>,
    pub r_ext_m: f64,
    pub k_hat: u64,
    pub estimated_cost: f64,
}

impl From<&OptimalConfig> for ConfigReport {
    fn from(opt: &OptimalConfig) -> Self {
        ConfigReport {
            alpha_deg: opt.cfg.alpha.degrees(),
            m: opt.cfg.m,
            beta_deg: opt.cfg.beta.map(|b| b.degrees()),
            r_ext_m: opt.r_ext,
            k_hat: opt.k_hat,
            estimated_cost: opt.estimated_cost,
        }
    }
}

/// The plan JSON emitted by `design`.
#[derive(Serialize)]
pub struct PlanReport<'a> {
    pub scenario: &'a hapnet_core::ScenarioSummary,
    pub v_used: u32,
    pub config: ConfigReport,
    pub cost: &'a CostBreakdown,
    pub clusters: &'a [hapnet_core::Cluster],
    pub haps: &'a [hapnet_core::Hap],
    pub links: &'a [hapnet_core::Link],
    pub lightpaths: &'a [hapnet_core::Lightpath],
}

impl<'a> PlanReport<'a> {
    pub fn new(plan: &'a NetworkPlan) -> Self {
        PlanReport {
            scenario: &plan.scenario,
            v_used: plan.v_used,
            config: ConfigReport::from(&plan.config),
            cost: &plan.cost,
            clusters: &plan.clusters,
            haps: &plan.topology.haps,
            links: &plan.topology.links,
            lightpaths: &plan.topology.lightpaths,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plan serialization cannot fail")
    }
}
