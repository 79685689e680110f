//! Planning library for free-space-optical mesh networks carried by
//! high-altitude platforms (HAPs).
//!
//! A platform at ~20 km elevation serves ground transceivers through a
//! bundle of downward-pointing laser beams: one nadir-pointing principal
//! beam plus `m` identical supplementary beams tilted outward to widen the
//! footprint. The library covers the whole planning chain:
//!
//! - [`link_budget`] — radiation density and received power of a beam,
//!   and the bound the receiver floor puts on the principal beam width;
//! - [`coverage`] — closed-form extended footprint radius of a
//!   principal-plus-ring bundle;
//! - [`energy`] — daily platform energy draw, the solar budget check and
//!   the network day-rate cost model;
//! - [`optimizer`] — exhaustive grid search for the cheapest bundle
//!   configuration under the receiver-floor and solar constraints;
//! - [`scenario`] — seeded, reproducible ground-node/traffic generation;
//! - [`clustering`] — capacity-constrained disk cover of the ground nodes;
//! - [`topology`] — demand aggregation into lightpaths and incremental
//!   inter-platform topology construction with routing;
//! - [`design`] — the outer planning loop tying everything together.
//!
//! ```
//! use hapnet_core::{find_optimal_mfso, Angle, OptimizerInputs};
//!
//! let inputs = OptimizerInputs {
//!     link: Default::default(),
//!     energy: Default::default(),
//!     cost: Default::default(),
//!     v_max: 10,
//!     w: 80,
//!     n_nodes: 480,
//!     area: 1e10,
//! };
//! let best = find_optimal_mfso(&inputs, Angle::from_degrees(1.0)).unwrap();
//! assert_eq!((best.cfg.alpha.degrees().round(), best.cfg.m), (37.0, 13));
//! ```

pub mod angle;
pub mod clustering;
pub mod coverage;
pub mod design;
pub mod energy;
pub mod error;
pub mod link_budget;
pub mod optimizer;
pub mod scenario;
pub mod topology;

pub use angle::Angle;
pub use clustering::{cluster_nodes, Cluster};
pub use coverage::{
    extended_radius, geometry_intermediates, slant_distance_to_j, tan_gamma, tan_theta,
    GeometryIntermediates, MfsoConfig,
};
pub use design::{design_network, validate_plan, DesignOptions, NetworkPlan, ScenarioSummary};
pub use energy::{
    daily_energy, hap_lower_bound, hap_lower_bound_ratio, network_cost, solar_feasible,
    CostBreakdown, CostParams, EnergyParams,
};
pub use error::{PlanError, Result};
pub use link_budget::{
    border_power_principal, principal_radius, radiation_density, received_power, LinkBudgetParams,
};
pub use optimizer::{
    alpha_max, beta_max, coverage_radius, estimate_cost, estimate_hap_count, find_optimal_mfso,
    m_upper_bound, OptimalConfig, OptimizerInputs,
};
pub use scenario::{generate_scenario, Demand, GroundNode, Scenario};
pub use topology::{
    aggregate_demands, build_topology, AggregatedDemand, Hap, HapTopology, Lightpath, Link,
};
