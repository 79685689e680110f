use std::path::Path;

use hapnet_core::{
    design_network, estimate_hap_count, generate_scenario, hap_lower_bound, hap_lower_bound_ratio,
    validate_plan, NetworkPlan, Scenario,
};

use crate::config::RunConfig;
use crate::report::{fmt_cost, fmt_deg, fmt_m, fmt_num, PlanReport};
use crate::CliError;

struct RunPoint {
    n: u32,
    w: u32,
    seed: u64,
}

struct RunOutput {
    point: RunPoint,
    plan: NetworkPlan,
}

/// Run the design pipeline and write one plan JSON per sweep point plus a
/// summary CSV series.
///
/// With a scenario file the pipeline runs once on it. Otherwise scenarios
/// are generated from the seed for every node count in the sweep (seed
/// offset by the list position) and every wavelength count in the sweep;
/// sweep points run concurrently and outputs are emitted in sorted order.
pub fn run(cfg: &RunConfig, out_dir: &Path) -> Result<(), CliError> {
    let points: Vec<(RunPoint, Scenario)> = match &cfg.scenario_file {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
            let scenario = Scenario::from_json(&text)?;
            let point = RunPoint {
                n: scenario.nodes.len() as u32,
                w: cfg.w,
                seed: scenario.seed,
            };
            vec![(point, scenario)]
        }
        None => {
            let sizes = if cfg.sweep.n_nodes.is_empty() {
                vec![cfg.n_nodes]
            } else {
                cfg.sweep.n_nodes.clone()
            };
            let widths = if cfg.sweep.w.is_empty() {
                vec![cfg.w]
            } else {
                cfg.sweep.w.clone()
            };
            let mut points = Vec::new();
            for (i, &n) in sizes.iter().enumerate() {
                let seed = cfg.seed + i as u64;
                let scenario =
                    generate_scenario(n, cfg.area_side_m, cfg.wavelength_capacity_gbps, seed)?;
                for &w in &widths {
                    points.push((RunPoint { n, w, seed }, scenario.clone()));
                }
            }
            points
        }
    };

    let opts = cfg.design_options();
    let mut outputs: Vec<Result<RunOutput, CliError>> = Vec::with_capacity(points.len());
    std::thread::scope(|scope| {
        let handles: Vec<_> = points
            .into_iter()
            .map(|(point, scenario)| {
                let opts = &opts;
                scope.spawn(move || {
                    let mut inputs = cfg.optimizer_inputs();
                    inputs.w = point.w;
                    inputs.n_nodes = scenario.nodes.len() as u64;
                    inputs.area = scenario.area_side * scenario.area_side;
                    let plan = design_network(&inputs, &scenario, opts).map_err(|e| {
                        CliError::from(e) // annotated below with the point
                    })?;
                    let problems = validate_plan(&plan, &inputs, &scenario, opts);
                    if !problems.is_empty() {
                        return Err(CliError::Invariant(format!(
                            "n={} w={}: {}",
                            point.n,
                            point.w,
                            problems.join("; ")
                        )));
                    }
                    Ok(RunOutput { point, plan })
                })
            })
            .collect();
        for handle in handles {
            outputs.push(handle.join().expect("design worker panicked"));
        }
    });

    let mut runs = Vec::with_capacity(outputs.len());
    for out in outputs {
        runs.push(out?);
    }
    runs.sort_by_key(|r| (r.point.n, r.point.w, r.point.seed));

    let mut series = String::from(
        "n_nodes,w,e_solar_kwh,seed,v_used,alpha_deg,m,beta_deg,r_ext_m,k,k_hat,lower_bound,lower_bound_ratio,l_inter,avg_degree,cost_total\n",
    );
    for run in &runs {
        let plan = &run.plan;
        let mut inputs = cfg.optimizer_inputs();
        inputs.w = run.point.w;
        inputs.n_nodes = plan.scenario.n_nodes;
        inputs.area = plan.scenario.area_side * plan.scenario.area_side;
        let k = plan.clusters.len() as u64;
        let l = plan.topology.links.len() as u64;
        let beta = plan
            .config
            .cfg
            .beta
            .map(|b| fmt_deg(b.degrees()))
            .unwrap_or_else(|| "-".into());
        series.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            run.point.n,
            run.point.w,
            fmt_num(cfg.energy.e_solar_kwh),
            run.point.seed,
            plan.v_used,
            fmt_deg(plan.config.cfg.alpha.degrees()),
            plan.config.cfg.m,
            beta,
            fmt_m(plan.config.r_ext),
            k,
            estimate_hap_count(plan.config.r_ext, &inputs),
            hap_lower_bound(run.point.n as u64, run.point.w),
            fmt_num(hap_lower_bound_ratio(run.point.n as u64, run.point.w)),
            l,
            fmt_num(2.0 * l as f64 / k as f64),
            fmt_cost(plan.cost.total),
        ));
        let name = format!(
            "plan_n{}_w{}_seed{}.json",
            run.point.n, run.point.w, run.point.seed
        );
        super::write_file(out_dir, &name, &PlanReport::new(plan).to_json())?;
    }
    super::write_file(out_dir, "design_series.csv", &series)?;
    println!(
        "design: {} run(s) written to {}",
        runs.len(),
        out_dir.display()
    );
    Ok(())
}
