//! Link budget of a platform-to-ground laser beam.
//!
//! A transmitter radiating `p_tx` watts uniformly into a cone of full apex
//! angle `alpha` illuminates a spherical cap of area `2 pi r^2 (1 - cos(alpha/2))`
//! at range `r`. A ground aperture of radius `r_rx` captures its share of
//! that density, attenuated exponentially along the path (Beer-Lambert).
//! The receiver floor `rho_rx` then bounds how wide the beam may be opened.

use crate::angle::Angle;
use crate::error::{PlanError, Result};

/// Optical constants shared by all power computations.
///
/// Units: `sigma` 1/m, `p_tx` W, `r_rx` m, `rho_rx` W, `h` m.
#[derive(Debug, Clone, PartialEq)]
pub struct LinkBudgetParams {
    /// Atmospheric attenuation coefficient of the platform-ground path.
    pub sigma: f64,
    /// Transmit power of the serving laser source.
    pub p_tx: f64,
    /// Ground receiver aperture radius.
    pub r_rx: f64,
    /// Required received power at a ground transceiver.
    pub rho_rx: f64,
    /// Platform elevation above the ground plane.
    pub h: f64,
}

impl Default for LinkBudgetParams {
    /// Stratospheric defaults: 1 W source, 2 m aperture, -41.1 dBm floor,
    /// 20 km elevation, clear-air attenuation 3.5e-6 /m.
    fn default() -> Self {
        LinkBudgetParams {
            sigma: 3.5e-6,
            p_tx: 1.0,
            r_rx: 2.0,
            rho_rx: 7.76e-8,
            h: 20_000.0,
        }
    }
}

impl LinkBudgetParams {
    pub fn validate(&self) -> Result<()> {
        let checks = [
            ("sigma", self.sigma, self.sigma >= 0.0, ">= 0"),
            ("p_tx", self.p_tx, self.p_tx > 0.0, "> 0"),
            ("r_rx", self.r_rx, self.r_rx > 0.0, "> 0"),
            ("rho_rx", self.rho_rx, self.rho_rx > 0.0, "> 0"),
            ("h", self.h, self.h > 0.0, "> 0"),
        ];
        for (name, value, ok, requirement) in checks {
            if !ok || !value.is_finite() {
                return Err(PlanError::InvalidParameter {
                    name,
                    value,
                    requirement,
                });
            }
        }
        Ok(())
    }
}

fn check_beam(beam: Angle) -> Result<()> {
    let rad = beam.radians();
    if rad > 0.0 && rad <= std::f64::consts::PI {
        Ok(())
    } else {
        Err(PlanError::DegenerateBeam {
            got_deg: beam.degrees(),
        })
    }
}

/// Power in dBm; handy for comparisons against floors quoted in dBm.
pub fn watts_to_dbm(watts: f64) -> f64 {
    10.0 * (watts * 1000.0).log10()
}

/// Radiation density (W/m²) at range `distance` inside a cone of full apex
/// angle `beam_width`: transmit power over the illuminated spherical cap.
pub fn radiation_density(
    params: &LinkBudgetParams,
    distance: f64,
    beam_width: Angle,
) -> Result<f64> {
    check_beam(beam_width)?;
    if distance <= 0.0 {
        return Err(PlanError::InvalidParameter {
            name: "distance",
            value: distance,
            requirement: "> 0",
        });
    }
    let cap_area = 2.0
        * std::f64::consts::PI
        * distance
        * distance
        * (1.0 - (beam_width.radians() / 2.0).cos());
    Ok(params.p_tx / cap_area)
}

/// Received power (W) at `slant_distance` from the source, for a beam of
/// full apex angle `beam_width`: aperture capture of the radiation density
/// with Beer-Lambert attenuation along the path.
///
/// One implementation serves both the principal beam and the supplementary
/// ring beams; only the beam width differs.
pub fn received_power(
    params: &LinkBudgetParams,
    slant_distance: f64,
    beam_width: Angle,
) -> Result<f64> {
    check_beam(beam_width)?;
    if slant_distance <= 0.0 {
        return Err(PlanError::InvalidParameter {
            name: "slant_distance",
            value: slant_distance,
            requirement: "> 0",
        });
    }
    let spread = 2.0 * slant_distance * slant_distance * (1.0 - (beam_width.radians() / 2.0).cos());
    Ok((-params.sigma * slant_distance).exp() * params.p_tx * params.r_rx * params.r_rx / spread)
}

/// Received power at the border of the principal footprint, the dimmest
/// point a nadir beam of width `alpha` must still serve. The border slant
/// range is `h / cos(alpha/2)`.
pub fn border_power_principal(params: &LinkBudgetParams, alpha: Angle) -> Result<f64> {
    let rad = alpha.radians();
    if rad <= 0.0 || rad >= std::f64::consts::PI {
        return Err(PlanError::DegenerateBeam {
            got_deg: alpha.degrees(),
        });
    }
    received_power(params, params.h / (rad / 2.0).cos(), alpha)
}

/// Ground radius of the principal footprint: `h * tan(alpha/2)`.
pub fn principal_radius(params: &LinkBudgetParams, alpha: Angle) -> Result<f64> {
    let rad = alpha.radians();
    if !(0.0..std::f64::consts::PI).contains(&rad) {
        return Err(PlanError::DegenerateBeam {
            got_deg: alpha.degrees(),
        });
    }
    Ok(params.h * (rad / 2.0).tan())
}
