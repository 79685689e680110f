use thiserror::Error;

/// Errors surfaced by the planning library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PlanError {
    /// A parameter violates its documented range.
    #[error("{name} must satisfy {requirement}, got {value}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },

    /// Beam width outside (0°, 180°]; a zero-width beam has no footprint.
    #[error("beam width must lie in (0°, 180°], got {got_deg}°")]
    DegenerateBeam { got_deg: f64 },

    /// The supplementary cone is too narrow to reach both joint points
    /// shared with its neighbours.
    #[error(
        "supplementary footprint cannot reach both joint points: alpha={alpha_deg}°, m={m}, beta={beta_deg}°"
    )]
    GeometryInfeasible {
        alpha_deg: f64,
        m: u32,
        beta_deg: f64,
    },

    /// The ray through the outer joint point runs parallel to or above the
    /// horizon, so the extended footprint is unbounded.
    #[error("extended ray reaches the horizon: alpha={alpha_deg}°, m={m}, beta={beta_deg}°")]
    BeyondHorizon {
        alpha_deg: f64,
        m: u32,
        beta_deg: f64,
    },

    /// Even the smallest principal beam width on the scan grid fails the
    /// receiver floor.
    #[error("no principal beam width meets the receiver floor")]
    NoFeasibleAlpha,

    /// The daily solar harvest cannot power even a single serving
    /// transceiver alongside the inter-platform payload.
    #[error("solar budget cannot power one serving transceiver plus {v_max} inter-platform links")]
    SolarInfeasible { v_max: u32 },

    /// No supplementary beam width on the scan grid is feasible.
    #[error("no feasible supplementary beam width for alpha={alpha_deg}°, m={m}")]
    NoFeasibleBeta { alpha_deg: f64, m: u32 },

    /// A lightpath bundle could not be routed under the current degree and
    /// wavelength limits.
    #[error("no route for lightpath bundle {src} -> {dst}")]
    RoutingFailure { src: u32, dst: u32 },

    /// Raising the per-platform link budget up to the ceiling never made all
    /// bundles routable.
    #[error(
        "design infeasible: demands remain unrouted with up to {v_ceiling} links per platform"
    )]
    DesignInfeasible { v_ceiling: u32 },

    /// A scenario violates its structural invariants.
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    /// A scenario file could not be parsed.
    #[error("scenario format: {0}")]
    ScenarioFormat(String),
}

pub type Result<T> = std::result::Result<T, PlanError>;
