use hapnet_core::{estimate_cost, find_optimal_mfso, solar_feasible, PlanError};

use crate::config::RunConfig;
use crate::report::config_row;
use crate::CliError;

/// Print the optimal configuration as a CSV header plus one row.
pub fn run(cfg: &RunConfig) -> Result<(), CliError> {
    let inputs = cfg.optimizer_inputs();
    let opt = find_optimal_mfso(&inputs, cfg.step())?;
    // the ring bound clamps at zero; reject outright when even the bare
    // platform exceeds the harvest
    if !solar_feasible(&inputs.energy, opt.cfg.m + 1, inputs.v_max) {
        return Err(PlanError::SolarInfeasible {
            v_max: inputs.v_max,
        }
        .into());
    }
    let cost = estimate_cost(opt.k_hat, opt.cfg.m, &inputs);
    println!("alpha_deg,m,beta_deg,r_ext_m,k_hat,cost_estimate");
    println!("{}", config_row(&opt, cost));
    Ok(())
}
