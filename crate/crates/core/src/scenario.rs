//! Seeded, reproducible ground scenarios.
//!
//! Node positions are i.i.d. uniform on the square service area and traffic
//! demands are drawn pairwise, then scaled so no node sends or receives
//! more than one wavelength's worth of traffic. Everything is derived from
//! a ChaCha stream cipher keyed by the scenario seed, so a scenario is
//! bit-identical across platforms and runs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{PlanError, Result};

/// A ground transceiver site. Coordinates in metres.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroundNode {
    pub id: u32,
    pub x: f64,
    pub y: f64,
}

/// A directed bandwidth demand between two ground nodes, in Gbps.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Demand {
    pub src: u32,
    pub dst: u32,
    pub gbps: f64,
}

/// Ground nodes, traffic demands and the generation parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub nodes: Vec<GroundNode>,
    pub demands: Vec<Demand>,
    /// Side length of the square service area, metres.
    pub area_side: f64,
    pub seed: u64,
}

// One demand drawn per node: flows stay chunky (a sizeable fraction of a
// wavelength each), so bundles do not fragment into thousands of
// near-empty lightpaths.
const DEMANDS_PER_NODE: u64 = 1;

/// Generate a scenario: `n_nodes` uniform sites on an `area_side`-sized
/// square and `n_nodes` random demands scaled so every node's inbound and
/// outbound totals stay below `wavelength_capacity` Gbps.
pub fn generate_scenario(
    n_nodes: u32,
    area_side: f64,
    wavelength_capacity: f64,
    seed: u64,
) -> Result<Scenario> {
    if n_nodes < 2 {
        return Err(PlanError::InvalidParameter {
            name: "n_nodes",
            value: n_nodes as f64,
            requirement: ">= 2",
        });
    }
    if !(area_side.is_finite() && area_side > 0.0)
        || !(wavelength_capacity.is_finite() && wavelength_capacity > 0.0)
    {
        return Err(PlanError::InvalidParameter {
            name: "area_side/wavelength_capacity",
            value: area_side.min(wavelength_capacity),
            requirement: "> 0",
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nodes: Vec<GroundNode> = (0..n_nodes)
        .map(|id| GroundNode {
            id,
            x: rng.gen::<f64>() * area_side,
            y: rng.gen::<f64>() * area_side,
        })
        .collect();

    let mut demands = Vec::with_capacity((n_nodes as u64 * DEMANDS_PER_NODE) as usize);
    for _ in 0..n_nodes as u64 * DEMANDS_PER_NODE {
        let src = rng.gen_range(0..n_nodes);
        let mut dst = rng.gen_range(0..n_nodes - 1);
        if dst >= src {
            dst += 1;
        }
        let gbps = rng.gen_range(0.25..1.0) * wavelength_capacity;
        demands.push(Demand { src, dst, gbps });
    }

    // Scale each demand by the slack of its own endpoints so every node's
    // inbound and outbound sums stay strictly under the wavelength
    // capacity; under-subscribed endpoints keep their full draw.
    let mut outgoing = vec![0.0f64; n_nodes as usize];
    let mut incoming = vec![0.0f64; n_nodes as usize];
    for d in &demands {
        outgoing[d.src as usize] += d.gbps;
        incoming[d.dst as usize] += d.gbps;
    }
    let budget = wavelength_capacity * (1.0 - 1e-9);
    for d in &mut demands {
        let t = (budget / outgoing[d.src as usize])
            .min(budget / incoming[d.dst as usize])
            .min(1.0);
        d.gbps *= t;
    }

    Ok(Scenario {
        nodes,
        demands,
        area_side,
        seed,
    })
}

impl Scenario {
    /// Structural checks: dense ids, in-area coordinates, positive demands
    /// between distinct nodes, and per-node traffic within one wavelength.
    pub fn validate(&self, wavelength_capacity: f64) -> Result<()> {
        let n = self.nodes.len();
        let fail = |msg: String| Err(PlanError::InvalidScenario(msg));
        for (i, node) in self.nodes.iter().enumerate() {
            if node.id as usize != i {
                return fail(format!("node ids must be dense, found {} at {i}", node.id));
            }
            let in_area = (0.0..=self.area_side).contains(&node.x)
                && (0.0..=self.area_side).contains(&node.y);
            if !in_area {
                return fail(format!("node {} outside the service area", node.id));
            }
        }
        let mut outgoing = vec![0.0f64; n];
        let mut incoming = vec![0.0f64; n];
        for d in &self.demands {
            if d.src as usize >= n || d.dst as usize >= n || d.src == d.dst {
                return fail(format!("demand {} -> {} has bad endpoints", d.src, d.dst));
            }
            if !d.gbps.is_finite() || d.gbps <= 0.0 {
                return fail(format!("demand {} -> {} not positive", d.src, d.dst));
            }
            outgoing[d.src as usize] += d.gbps;
            incoming[d.dst as usize] += d.gbps;
        }
        let slack = wavelength_capacity * 1e-9;
        for id in 0..n {
            if outgoing[id] > wavelength_capacity + slack
                || incoming[id] > wavelength_capacity + slack
            {
                return fail(format!("node {id} traffic exceeds one wavelength"));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| PlanError::ScenarioFormat(e.to_string()))
    }
}
