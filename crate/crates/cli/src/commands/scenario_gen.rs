use std::path::Path;

use hapnet_core::generate_scenario;

use crate::config::RunConfig;
use crate::CliError;

/// Generate a scenario file from the configured node count, area and seed.
pub fn run(cfg: &RunConfig, output: Option<&Path>, out_dir: &Path) -> Result<(), CliError> {
    let scenario = generate_scenario(
        cfg.n_nodes,
        cfg.area_side_m,
        cfg.wavelength_capacity_gbps,
        cfg.seed,
    )?;
    let json = scenario.to_json();
    let path = match output {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent).map_err(|e| {
                    CliError::Config(format!("cannot create {}: {e}", parent.display()))
                })?;
            }
            std::fs::write(path, &json)
                .map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display())))?;
            path.to_path_buf()
        }
        None => {
            let name = format!("scenario_n{}_seed{}.json", cfg.n_nodes, cfg.seed);
            super::write_file(out_dir, &name, &json)?;
            out_dir.join(name)
        }
    };
    println!("scenario written to {}", path.display());
    Ok(())
}
