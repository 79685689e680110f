use std::path::Path;

use hapnet_core::{
    alpha_max, beta_max, coverage_radius, estimate_cost, find_optimal_mfso, m_upper_bound,
    principal_radius, PlanError,
};

use crate::config::RunConfig;
use crate::report::{config_row, fmt_deg, fmt_m, fmt_num};
use crate::CliError;

/// Emit the three sweep tables as CSV files into `out_dir`:
///
/// - `single_transceiver.csv` — maximum principal beam width and footprint
///   radius per receiver aperture;
/// - `max_extended_coverage.csv` — the widest achievable footprint per
///   solar energy level (and aperture), using the largest ring the energy
///   budget allows;
/// - `optimal_configs.csv` — the cost-optimal configuration per
///   (energy, wavelength count, node count) sweep point.
pub fn run(cfg: &RunConfig, out_dir: &Path) -> Result<(), CliError> {
    super::write_file(out_dir, "single_transceiver.csv", &single_transceiver(cfg)?)?;
    super::write_file(out_dir, "max_extended_coverage.csv", &max_extended(cfg)?)?;
    super::write_file(out_dir, "optimal_configs.csv", &optimal_configs(cfg)?)?;
    Ok(())
}

fn single_transceiver(cfg: &RunConfig) -> Result<String, CliError> {
    let mut out = String::from("r_rx_m,alpha_max_deg,coverage_radius_m\n");
    for &r_rx in &cfg.sweep.r_rx_m {
        let mut link = cfg.link_params();
        link.r_rx = r_rx;
        let alpha = alpha_max(&link, cfg.step()).map_err(annotate("r_rx", r_rx))?;
        let radius = principal_radius(&link, alpha).map_err(annotate("r_rx", r_rx))?;
        out.push_str(&format!(
            "{},{},{}\n",
            fmt_num(r_rx),
            fmt_deg(alpha.degrees()),
            fmt_m(radius)
        ));
    }
    Ok(out)
}

/// Coverage radius of the largest ring the solar budget allows; falls back
/// to the plain principal footprint when no ring extends coverage.
fn widest_footprint(
    cfg: &RunConfig,
    link: &hapnet_core::LinkBudgetParams,
    m_max: u32,
) -> Result<f64, CliError> {
    let step = cfg.step();
    let alpha = alpha_max(link, step)?;
    let r_alpha = principal_radius(link, alpha)?;
    if m_max == 0 {
        return Ok(r_alpha);
    }
    let r = match beta_max(link, alpha, m_max, step) {
        Ok(beta) => match coverage_radius(link, alpha, m_max, beta, step) {
            Ok(r) => r,
            Err(PlanError::GeometryInfeasible { .. } | PlanError::BeyondHorizon { .. }) => r_alpha,
            Err(e) => return Err(e.into()),
        },
        Err(PlanError::NoFeasibleBeta { .. }) => r_alpha,
        Err(e) => return Err(e.into()),
    };
    Ok(r.max(r_alpha))
}

fn max_extended(cfg: &RunConfig) -> Result<String, CliError> {
    let mut header = String::from("e_solar_kwh,m_max");
    for &r_rx in &cfg.sweep.r_rx_m {
        header.push_str(&format!(",r_ext_m_rrx{}", fmt_num(r_rx)));
    }
    header.push('\n');
    let mut out = header;
    for &e_kwh in &cfg.sweep.e_solar_kwh {
        let mut energy = cfg.energy_params();
        energy.e_solar = e_kwh * 1000.0;
        let m_max = m_upper_bound(&energy, cfg.v_init);
        let mut row = format!("{},{}", fmt_num(e_kwh), m_max);
        for &r_rx in &cfg.sweep.r_rx_m {
            let mut link = cfg.link_params();
            link.r_rx = r_rx;
            let r = widest_footprint(cfg, &link, m_max).map_err(|e| match e {
                CliError::Infeasible(msg) => {
                    CliError::Infeasible(format!("E={e_kwh} kWh, r_rx={r_rx}: {msg}"))
                }
                other => other,
            })?;
            row.push_str(&format!(",{}", fmt_m(r)));
        }
        row.push('\n');
        out.push_str(&row);
    }
    Ok(out)
}

fn optimal_configs(cfg: &RunConfig) -> Result<String, CliError> {
    let mut out =
        String::from("e_solar_kwh,w,n_nodes,alpha_deg,m,beta_deg,r_ext_m,k_hat,cost_estimate\n");
    for &e_kwh in &cfg.sweep.e_solar_kwh {
        for &w in &cfg.sweep.w {
            for &n in &cfg.sweep.n_nodes {
                let mut inputs = cfg.optimizer_inputs();
                inputs.energy.e_solar = e_kwh * 1000.0;
                inputs.w = w;
                inputs.n_nodes = n as u64;
                let opt = find_optimal_mfso(&inputs, cfg.step()).map_err(|e| {
                    CliError::Infeasible(format!("E={e_kwh} kWh, w={w}, n={n}: {e}"))
                })?;
                let cost = estimate_cost(opt.k_hat, opt.cfg.m, &inputs);
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    fmt_num(e_kwh),
                    w,
                    n,
                    config_row(&opt, cost)
                ));
            }
        }
    }
    Ok(out)
}

fn annotate(name: &'static str, value: f64) -> impl Fn(PlanError) -> CliError {
    move |e| match CliError::from(e) {
        CliError::Infeasible(msg) => CliError::Infeasible(format!("{name}={value}: {msg}")),
        other => other,
    }
}
