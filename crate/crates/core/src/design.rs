//! End-to-end network planning.
//!
//! The outer loop guesses a per-platform link budget `v`, finds the
//! cheapest bundle configuration under it, clusters the ground nodes with
//! the configuration's coverage radius, bundles inter-zone traffic into
//! lightpaths and tries to route everything. When routing fails for lack
//! of connectivity, `v` is raised by one and the whole process repeats.

use serde::Serialize;

use crate::clustering::{cluster_nodes, Cluster};
use crate::energy::{network_cost, CostBreakdown};
use crate::error::{PlanError, Result};
use crate::link_budget::received_power;
use crate::optimizer::{find_optimal_mfso, OptimalConfig, OptimizerInputs};
use crate::scenario::Scenario;
use crate::topology::{aggregate_demands, build_topology, haps_over_clusters, HapTopology};
use crate::{slant_distance_to_j, Angle};

/// Pipeline knobs that are not part of the optimization inputs.
#[derive(Debug, Clone, PartialEq)]
pub struct DesignOptions {
    /// Longest allowed inter-platform link, metres.
    pub l_hh: f64,
    /// Give up once the per-platform link budget reaches this value.
    pub v_ceiling: u32,
    /// Transport capacity of one wavelength, Gbps.
    pub wavelength_capacity: f64,
    /// Beam-width scan resolution.
    pub step: Angle,
}

impl Default for DesignOptions {
    fn default() -> Self {
        DesignOptions {
            l_hh: 88_000.0,
            v_ceiling: 64,
            wavelength_capacity: 1.0,
            step: Angle::from_degrees(1.0),
        }
    }
}

/// What the plan was built from, kept for reproducibility.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScenarioSummary {
    pub n_nodes: u64,
    pub n_demands: u64,
    pub area_side: f64,
    pub seed: u64,
}

/// A complete network plan.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkPlan {
    pub scenario: ScenarioSummary,
    pub config: OptimalConfig,
    pub clusters: Vec<Cluster>,
    pub topology: HapTopology,
    pub cost: CostBreakdown,
    /// Per-platform link budget the plan finally succeeded with.
    pub v_used: u32,
}

/// Run the full planning loop for one scenario.
pub fn design_network(
    inputs: &OptimizerInputs,
    scenario: &Scenario,
    opts: &DesignOptions,
) -> Result<NetworkPlan> {
    scenario.validate(opts.wavelength_capacity)?;
    let mut v = inputs.v_max;
    let mut clustered: Option<(f64, Vec<Cluster>)> = None;
    loop {
        let inputs_v = OptimizerInputs {
            v_max: v,
            ..inputs.clone()
        };
        let config = find_optimal_mfso(&inputs_v, opts.step)?;

        // the radius rarely changes between v iterations; reuse the cover
        let rebuild = clustered
            .as_ref()
            .is_none_or(|(radius, _)| *radius != config.r_ext);
        if rebuild {
            let cover = cluster_nodes(scenario, config.r_ext, inputs.w);
            clustered = Some((config.r_ext, cover));
        }
        let clusters = &clustered.as_ref().unwrap().1;

        let haps = haps_over_clusters(clusters, inputs.link.h);
        let demands = aggregate_demands(scenario, clusters, opts.wavelength_capacity);
        match build_topology(&haps, &demands, opts.l_hh, v, inputs.w) {
            Ok(topology) => {
                let cost = network_cost(
                    &inputs.cost,
                    clusters.len() as u64,
                    config.cfg.m,
                    topology.links.len() as u64,
                );
                return Ok(NetworkPlan {
                    scenario: ScenarioSummary {
                        n_nodes: scenario.nodes.len() as u64,
                        n_demands: scenario.demands.len() as u64,
                        area_side: scenario.area_side,
                        seed: scenario.seed,
                    },
                    config,
                    clusters: clusters.clone(),
                    topology,
                    cost,
                    v_used: v,
                });
            }
            Err(PlanError::RoutingFailure { .. }) if v < opts.v_ceiling => {
                v += 1;
            }
            Err(PlanError::RoutingFailure { .. }) => {
                return Err(PlanError::DesignInfeasible {
                    v_ceiling: opts.v_ceiling,
                })
            }
            Err(e) => return Err(e),
        }
    }
}

/// Independent check of every plan invariant. Returns the list of
/// violations, empty when the plan is sound.
pub fn validate_plan(
    plan: &NetworkPlan,
    inputs: &OptimizerInputs,
    scenario: &Scenario,
    opts: &DesignOptions,
) -> Vec<String> {
    let mut problems = Vec::new();
    let mut problem = |msg: String| problems.push(msg);

    // Every node in exactly one zone, within the serving radius.
    let mut owner = vec![usize::MAX; scenario.nodes.len()];
    for (zone, c) in plan.clusters.iter().enumerate() {
        if c.member_ids.len() > inputs.w as usize {
            problem(format!(
                "zone {zone} holds {} > w nodes",
                c.member_ids.len()
            ));
        }
        for &id in &c.member_ids {
            if owner[id as usize] != usize::MAX {
                problem(format!("node {id} served twice"));
            }
            owner[id as usize] = zone;
            let n = &scenario.nodes[id as usize];
            let d = (n.x - c.center.0).hypot(n.y - c.center.1);
            if d > plan.config.r_ext + 1e-6 {
                problem(format!("node {id} lies outside its zone footprint"));
            }
        }
    }
    if owner.contains(&usize::MAX) {
        problem("some node belongs to no zone".into());
    }

    // Wavelength-count lower bound on the number of platforms.
    let lb = crate::energy::hap_lower_bound(scenario.nodes.len() as u64, inputs.w);
    if (plan.clusters.len() as u64) < lb {
        problem(format!(
            "{} zones beat the lower bound {lb}",
            plan.clusters.len()
        ));
    }

    // Link lengths, degrees and wavelength loads.
    let mut degree = vec![0u32; plan.topology.haps.len()];
    for l in &plan.topology.links {
        if l.length > opts.l_hh + 1e-6 {
            problem(format!("link {}-{} longer than the reach", l.a, l.b));
        }
        if l.wavelengths_used > inputs.w {
            problem(format!("link {}-{} overloaded", l.a, l.b));
        }
        degree[l.a as usize] += 1;
        degree[l.b as usize] += 1;
    }
    if let Some(worst) = degree.iter().max() {
        if *worst > plan.v_used {
            problem(format!("a platform carries {worst} > v links"));
        }
    }

    // Every bundle routed on established links, with conserved counts and
    // per-link loads that add up.
    let mut expected: std::collections::BTreeMap<(u32, u32), u32> = Default::default();
    let demands = aggregate_demands(scenario, &plan.clusters, opts.wavelength_capacity);
    let mut load: std::collections::BTreeMap<(u32, u32), u32> = Default::default();
    let link_set: std::collections::BTreeMap<(u32, u32), u32> = plan
        .topology
        .links
        .iter()
        .map(|l| ((l.a.min(l.b), l.a.max(l.b)), l.wavelengths_used))
        .collect();
    for lp in &plan.topology.lightpaths {
        *expected.entry((lp.src, lp.dst)).or_insert(0) += lp.count;
        if lp.route.first() != Some(&lp.src) || lp.route.last() != Some(&lp.dst) {
            problem(format!(
                "route of {} -> {} has wrong endpoints",
                lp.src, lp.dst
            ));
        }
        for pair in lp.route.windows(2) {
            let key = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if !link_set.contains_key(&key) {
                problem(format!(
                    "route of {} -> {} uses a missing link",
                    lp.src, lp.dst
                ));
            }
            *load.entry(key).or_insert(0) += lp.count;
        }
    }
    for d in &demands {
        if expected.get(&(d.src, d.dst)).copied().unwrap_or(0) != d.lightpaths {
            problem(format!("bundle {} -> {} not fully routed", d.src, d.dst));
        }
    }
    if load != link_set {
        problem("per-link wavelength loads disagree with routed paths".into());
    }

    // Cost must be reproducible from the plan's own counts.
    let recomputed = network_cost(
        &inputs.cost,
        plan.clusters.len() as u64,
        plan.config.cfg.m,
        plan.topology.links.len() as u64,
    );
    if recomputed != plan.cost {
        problem("stored cost differs from its recomputation".into());
    }

    // Worst-case member still closes the ground link: a node at the far
    // edge of the footprint, served by the ring (or by the principal beam
    // in the single-transceiver configuration).
    let worst_beam = match plan.config.cfg.beta {
        Some(beta) => beta + opts.step,
        None => plan.config.cfg.alpha,
    };
    let slant = slant_distance_to_j(&inputs.link, plan.config.r_ext);
    match received_power(&inputs.link, slant, worst_beam) {
        Ok(p) => {
            if p < inputs.link.rho_rx {
                problem("footprint edge falls below the receiver floor".into());
            }
        }
        Err(e) => problem(format!("edge power check failed: {e}")),
    }

    problems
}
