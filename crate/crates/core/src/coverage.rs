//! Extended footprint geometry of a principal-plus-ring beam bundle.
//!
//! The principal beam points straight down and illuminates a circle of
//! radius `h*tan(alpha/2)`. Around it, `m` identical supplementary beams of
//! width `beta` are tilted outward so that each one passes through the two
//! points where its neighbours' footprints cross the principal circle.
//! Adjacent supplementary footprints then meet again on a larger circle;
//! its radius is the extended coverage radius. The closed form goes through
//! three auxiliary slopes:
//!
//! - `tan_gamma` — tilt of the plane through the platform and the midpoint
//!   of the shared chord, `tan(alpha/2) * cos(pi/m)`;
//! - `tan_theta` — half-opening of the supplementary cone seen in that
//!   plane, `sqrt(sin^2(beta/2) - sin^2(alpha/2) sin^2(pi/m)) / cos(beta/2)`;
//! - the slope of the ray to the outer joint point, obtained from the two
//!   above by the tangent-addition rule scaled by `cos(pi/m)`.

use crate::angle::Angle;
use crate::error::{PlanError, Result};
use crate::link_budget::{principal_radius, LinkBudgetParams};

/// Candidate bundle configuration: principal beam width, number of
/// supplementary transceivers and their common beam width.
///
/// `m == 0` denotes the single-transceiver configuration; `beta` is `None`
/// exactly in that case.
#[derive(Debug, Clone, PartialEq)]
pub struct MfsoConfig {
    pub alpha: Angle,
    pub m: u32,
    pub beta: Option<Angle>,
}

impl MfsoConfig {
    pub fn single(alpha: Angle) -> Self {
        MfsoConfig {
            alpha,
            m: 0,
            beta: None,
        }
    }

    pub fn ring(alpha: Angle, m: u32, beta: Angle) -> Self {
        MfsoConfig {
            alpha,
            m,
            beta: Some(beta),
        }
    }
}

/// Intermediate slopes and radii of the extended-footprint construction.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometryIntermediates {
    pub tan_gamma: f64,
    pub tan_theta: f64,
    pub tan_half_xi_plus_alpha: f64,
    /// Principal footprint radius.
    pub r_alpha: f64,
    /// Extended coverage radius.
    pub r_ext: f64,
    /// Slant range from the platform to the outer joint point.
    pub l_j: f64,
}

/// Tilt slope of the chord-midpoint plane: `tan(alpha/2) * cos(pi/m)`.
pub fn tan_gamma(alpha: Angle, m: u32) -> Result<f64> {
    if m < 1 {
        return Err(PlanError::InvalidParameter {
            name: "m",
            value: m as f64,
            requirement: ">= 1",
        });
    }
    Ok((alpha.radians() / 2.0).tan() * (std::f64::consts::PI / m as f64).cos())
}

/// Half-opening slope of the supplementary cone in the chord-midpoint
/// plane. Errors when the cone is too narrow to reach both joint points
/// (negative radicand).
pub fn tan_theta(alpha: Angle, beta: Angle, m: u32) -> Result<f64> {
    if m < 1 {
        return Err(PlanError::InvalidParameter {
            name: "m",
            value: m as f64,
            requirement: ">= 1",
        });
    }
    let sin_half_beta = (beta.radians() / 2.0).sin();
    let sin_half_alpha = (alpha.radians() / 2.0).sin();
    let sin_pm = (std::f64::consts::PI / m as f64).sin();
    let radicand =
        sin_half_beta * sin_half_beta - sin_half_alpha * sin_half_alpha * sin_pm * sin_pm;
    if radicand < 0.0 {
        return Err(PlanError::GeometryInfeasible {
            alpha_deg: alpha.degrees(),
            m,
            beta_deg: beta.degrees(),
        });
    }
    Ok(radicand.sqrt() / (beta.radians() / 2.0).cos())
}

/// Full construction: slopes, principal radius, extended radius and the
/// joint-point slant range for a ring configuration (`m >= 1`).
pub fn geometry_intermediates(
    params: &LinkBudgetParams,
    cfg: &MfsoConfig,
) -> Result<GeometryIntermediates> {
    let beta = cfg.beta.ok_or(PlanError::InvalidParameter {
        name: "beta",
        value: f64::NAN,
        requirement: "present when m >= 1",
    })?;
    let tg = tan_gamma(cfg.alpha, cfg.m)?;
    let tt = tan_theta(cfg.alpha, beta, cfg.m)?;
    let horizon = || PlanError::BeyondHorizon {
        alpha_deg: cfg.alpha.degrees(),
        m: cfg.m,
        beta_deg: beta.degrees(),
    };
    // tangent addition for gamma + theta; a non-positive denominator means
    // the combined tilt already passed 90 degrees
    let denom = 1.0 - tg * tt;
    if denom <= 0.0 {
        return Err(horizon());
    }
    let t = (tg + tt) / denom * (std::f64::consts::PI / cfg.m as f64).cos();
    // The ray to the outer joint point sits at 2*atan(t) - alpha/2 from
    // nadir; past 90 degrees the footprint is unbounded.
    let from_nadir = 2.0 * t.atan() - cfg.alpha.radians() / 2.0;
    if from_nadir <= 0.0 || from_nadir >= std::f64::consts::FRAC_PI_2 {
        return Err(horizon());
    }
    let r_ext = params.h * from_nadir.tan();
    Ok(GeometryIntermediates {
        tan_gamma: tg,
        tan_theta: tt,
        tan_half_xi_plus_alpha: t,
        r_alpha: principal_radius(params, cfg.alpha)?,
        r_ext,
        l_j: slant_distance_to_j(params, r_ext),
    })
}

/// Extended coverage radius of a bundle configuration. For `m == 0` this is
/// the principal footprint radius.
pub fn extended_radius(params: &LinkBudgetParams, cfg: &MfsoConfig) -> Result<f64> {
    if cfg.m == 0 {
        return principal_radius(params, cfg.alpha);
    }
    Ok(geometry_intermediates(params, cfg)?.r_ext)
}

/// Slant range from the platform to a ground point at radius `r_ext` from
/// the footprint centre: `sqrt(h^2 + r_ext^2)`.
pub fn slant_distance_to_j(params: &LinkBudgetParams, r_ext: f64) -> f64 {
    (params.h * params.h + r_ext * r_ext).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn defaults() -> LinkBudgetParams {
        LinkBudgetParams::default()
    }

    fn deg(d: f64) -> Angle {
        Angle::from_degrees(d)
    }

    #[test]
    fn tan_gamma_two_beams_is_zero() {
        assert!(tan_gamma(deg(37.0), 2).unwrap().abs() < 1e-15);
    }

    #[test]
    fn tan_gamma_large_ring_approaches_half_alpha_slope() {
        let g = tan_gamma(deg(37.0), 100_000).unwrap();
        assert!((g - deg(18.5).radians().tan()).abs() < 1e-8);
    }

    #[test]
    fn tan_gamma_thirteen_beams() {
        let want = deg(18.5).radians().tan() * (std::f64::consts::PI / 13.0).cos();
        assert_eq!(tan_gamma(deg(37.0), 13).unwrap(), want);
    }

    #[test]
    fn tan_theta_zero_radicand() {
        // beta at the reachability boundary, nudged one representable step
        // up so the roundtripped sine cannot dip negative.
        let alpha = deg(37.0);
        let m = 13;
        let target = (alpha.radians() / 2.0).sin() * (std::f64::consts::PI / m as f64).sin();
        let beta = Angle::from_radians(2.0 * target.asin() + 1e-12);
        assert!(tan_theta(alpha, beta, m).unwrap() < 1e-6);
        // m = 2 with beta = alpha also lands on the boundary
        assert!(tan_theta(deg(37.0), deg(37.0), 2).unwrap().abs() < 1e-7);
    }

    #[test]
    fn tan_theta_rejects_narrow_cone() {
        assert!(matches!(
            tan_theta(deg(37.0), deg(8.0), 13),
            Err(PlanError::GeometryInfeasible { .. })
        ));
    }

    #[test]
    fn tan_theta_positive_for_feasible_cone() {
        let t = tan_theta(deg(37.0), deg(16.0), 13).unwrap();
        assert!(t > 0.1 && t < 0.13, "got {t}");
    }

    #[test]
    fn extended_radius_reference_configurations() {
        let p = defaults();
        // Thirteen supplementary beams at 16 and 17 degrees.
        let r16 = extended_radius(&p, &MfsoConfig::ring(deg(37.0), 13, deg(16.0))).unwrap();
        let r17 = extended_radius(&p, &MfsoConfig::ring(deg(37.0), 13, deg(17.0))).unwrap();
        assert!((r16 - 11388.59).abs() < 0.05, "got {r16}");
        assert!((r17 - 11929.44).abs() < 0.05, "got {r17}");
        // Sixteen supplementary beams at 16 degrees.
        let r = extended_radius(&p, &MfsoConfig::ring(deg(37.0), 16, deg(16.0))).unwrap();
        assert!((r - 12174.0).abs() <= 5.0, "got {r}");
    }

    #[test]
    fn extended_radius_single_is_principal() {
        let p = defaults();
        let r = extended_radius(&p, &MfsoConfig::single(deg(37.0))).unwrap();
        assert!((r - 6691.906).abs() < 1e-3);
    }

    #[test]
    fn extended_radius_matches_literal_quotient_form() {
        // The angle-addition route must agree with the direct double-angle
        // quotient to rounding.
        let p = defaults();
        for (a, m, b) in [
            (37.0, 13u32, 16.0),
            (37.0, 16, 16.0),
            (25.0, 9, 14.0),
            (67.0, 16, 24.0),
        ] {
            let g = geometry_intermediates(&p, &MfsoConfig::ring(deg(a), m, deg(b))).unwrap();
            let t = g.tan_half_xi_plus_alpha;
            let ta2 = (deg(a).radians() / 2.0).tan();
            let literal = p.h * (2.0 * t - ta2 * (1.0 - t * t)) / (1.0 - t * t + 2.0 * t * ta2);
            assert!((g.r_ext - literal).abs() / literal < 1e-12, "{a},{m},{b}");
        }
    }

    #[test]
    fn extended_radius_monotone_in_beta() {
        let p = defaults();
        let mut prev = 0.0;
        for b in 9..=30 {
            let r = extended_radius(&p, &MfsoConfig::ring(deg(37.0), 13, deg(b as f64))).unwrap();
            assert!(r > prev, "beta={b}");
            prev = r;
        }
    }

    #[test]
    fn extension_beyond_principal_for_wide_rings() {
        let p = defaults();
        let r_alpha = principal_radius(&p, deg(37.0)).unwrap();
        for m in [8u32, 10, 13, 16, 24] {
            let r = extended_radius(&p, &MfsoConfig::ring(deg(37.0), m, deg(16.0))).unwrap();
            assert!(r > r_alpha, "m={m}");
        }
    }

    #[test]
    fn narrow_ring_may_fall_short_of_principal() {
        // Six beams of 19 degrees cannot push coverage past the principal
        // circle; the joint point lands inside it.
        let p = defaults();
        let r = extended_radius(&p, &MfsoConfig::ring(deg(37.0), 6, deg(19.0))).unwrap();
        assert!(r < principal_radius(&p, deg(37.0)).unwrap());
    }

    #[test]
    fn continuity_at_the_radicand_boundary() {
        // The radius grows like sqrt(beta - beta0) just above the
        // reachability boundary, so the one-sided limit is read off by
        // Richardson extrapolation (2*R(eps/4) - R(eps) cancels the sqrt
        // term) and must match the closed form evaluated with tan_theta = 0.
        let p = defaults();
        let alpha = deg(37.0);
        let m = 13u32;
        let target = (alpha.radians() / 2.0).sin() * (std::f64::consts::PI / m as f64).sin();
        let beta0 = 2.0 * target.asin();
        let at_boundary = {
            let tg = tan_gamma(alpha, m).unwrap();
            let t = tg * (std::f64::consts::PI / m as f64).cos();
            p.h * (2.0 * t.atan() - alpha.radians() / 2.0).tan()
        };
        let r_at = |eps: f64| {
            extended_radius(
                &p,
                &MfsoConfig::ring(alpha, m, Angle::from_radians(beta0 + eps)),
            )
            .unwrap()
        };
        let eps = 1e-10;
        let limit = 2.0 * r_at(eps / 4.0) - r_at(eps);
        assert!(
            (limit - at_boundary).abs() <= 1e-9 * p.h,
            "limit {limit}, boundary {at_boundary}"
        );
    }

    #[test]
    fn horizon_is_an_error() {
        // A wide-open ring pushes the joint ray to the horizon.
        let p = defaults();
        let res = extended_radius(&p, &MfsoConfig::ring(deg(37.0), 13, deg(130.0)));
        assert!(
            matches!(res, Err(PlanError::BeyondHorizon { .. })),
            "{res:?}"
        );
    }

    #[test]
    fn slant_distance_values() {
        let p = defaults();
        assert_eq!(slant_distance_to_j(&p, 0.0), p.h);
        assert!((slant_distance_to_j(&p, 11929.0) - 23287.357965).abs() < 1e-4);
        assert!((slant_distance_to_j(&p, 6691.0) - 21089.6).abs() <= 0.5);
    }

    #[test]
    fn joint_slant_consistency() {
        let p = defaults();
        let g = geometry_intermediates(&p, &MfsoConfig::ring(deg(37.0), 13, deg(16.0))).unwrap();
        assert_eq!(g.l_j, (p.h * p.h + g.r_ext * g.r_ext).sqrt());
    }
}
