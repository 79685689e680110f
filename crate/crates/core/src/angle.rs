use std::ops::Add;

/// Plane angle, stored in radians.
///
/// All library math works in radians; command-line and report I/O uses
/// degrees, converted exactly through the `f64` pi constant.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Angle(f64);

impl Angle {
    pub const ZERO: Angle = Angle(0.0);

    pub fn from_radians(rad: f64) -> Self {
        Angle(rad)
    }

    pub fn from_degrees(deg: f64) -> Self {
        Angle(deg.to_radians())
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn degrees(self) -> f64 {
        self.0.to_degrees()
    }
}

impl Add for Angle {
    type Output = Angle;

    fn add(self, rhs: Angle) -> Angle {
        Angle(self.0 + rhs.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_radian_conversion() {
        assert_eq!(Angle::from_degrees(180.0).radians(), std::f64::consts::PI);
        assert_eq!(Angle::from_radians(std::f64::consts::PI).degrees(), 180.0);
        assert!((Angle::from_degrees(37.0).degrees() - 37.0).abs() < 1e-12);
    }

    #[test]
    fn addition() {
        let a = Angle::from_degrees(16.0) + Angle::from_degrees(1.0);
        assert!((a.degrees() - 17.0).abs() < 1e-12);
    }
}
