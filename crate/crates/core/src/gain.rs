//! Unit complex gains.
//!
//! A gain is either one of the fourth roots of unity, held as an exact
//! quarter-turn count, or an arbitrary unit complex number held as a
//! normalized `Complex64`. Products of exact gains stay exact.

use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;

use crate::error::GraphError;

/// Tolerance on `|z| - 1` accepted before normalization.
pub const MODULUS_TOLERANCE: f64 = 1e-9;
/// Distance below which a floating gain snaps to an exact fourth root.
pub const SNAP_TOLERANCE: f64 = 1e-12;

/// A unit complex number attached to an oriented edge.
#[derive(Clone, Copy, Debug)]
pub enum Gain {
    /// `i^k` for `k` in `0..4`.
    Exact(u8),
    /// Any other unit complex number, normalized to modulus one.
    Float(Complex64),
}

impl Gain {
    pub const ONE: Gain = Gain::Exact(0);
    pub const I: Gain = Gain::Exact(1);
    pub const MINUS_ONE: Gain = Gain::Exact(2);
    pub const MINUS_I: Gain = Gain::Exact(3);

    /// `i^k`, reduced mod 4.
    pub fn quarter_turns(k: i64) -> Gain {
        Gain::Exact(k.rem_euclid(4) as u8)
    }

    /// Builds a gain from a complex pair, normalizing the modulus.
    ///
    /// Values within [`SNAP_TOLERANCE`] of a fourth root of unity are stored
    /// exactly.
    pub fn from_complex(re: f64, im: f64) -> Result<Gain, GraphError> {
        if !re.is_finite() || !im.is_finite() {
            return Err(GraphError::NonFiniteGain);
        }
        let z = Complex64::new(re, im);
        let modulus = z.norm();
        if (modulus - 1.0).abs() > MODULUS_TOLERANCE {
            return Err(GraphError::NotUnitModulus { modulus });
        }
        // Already-unit values are kept bit for bit so text re-serializes identically.
        let z = if (modulus - 1.0).abs() <= 4.0 * f64::EPSILON { z } else { z / modulus };
        Ok(Gain::snap(z))
    }

    /// `e^{i·degrees·π/180}`.
    pub fn from_angle_degrees(degrees: f64) -> Result<Gain, GraphError> {
        if !degrees.is_finite() {
            return Err(GraphError::NonFiniteGain);
        }
        let turns = degrees / 90.0;
        if turns.fract() == 0.0 {
            return Ok(Gain::quarter_turns(turns.rem_euclid(4.0) as i64));
        }
        Ok(Gain::snap(Complex64::from_polar(1.0, degrees.to_radians())))
    }

    fn snap(z: Complex64) -> Gain {
        for k in 0..4u8 {
            if (z - Gain::Exact(k).value()).norm() < SNAP_TOLERANCE {
                return Gain::Exact(k);
            }
        }
        Gain::Float(z)
    }

    pub fn value(self) -> Complex64 {
        match self {
            Gain::Exact(0) => Complex64::new(1.0, 0.0),
            Gain::Exact(1) => Complex64::new(0.0, 1.0),
            Gain::Exact(2) => Complex64::new(-1.0, 0.0),
            Gain::Exact(_) => Complex64::new(0.0, -1.0),
            Gain::Float(z) => z,
        }
    }

    pub fn re(self) -> f64 {
        self.value().re
    }

    pub fn im(self) -> f64 {
        self.value().im
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Gain::Exact(_))
    }

    /// The quarter-turn exponent of an exact gain.
    pub fn exact_exponent(self) -> Option<u8> {
        match self {
            Gain::Exact(k) => Some(k),
            Gain::Float(_) => None,
        }
    }

    /// Complex conjugate, which is also the inverse for unit gains.
    pub fn conj(self) -> Gain {
        match self {
            Gain::Exact(k) => Gain::Exact((4 - k) % 4),
            Gain::Float(z) => Gain::Float(z.conj()),
        }
    }

    /// Equality within `tol` on the complex values; exact gains compare exactly.
    pub fn approx_eq(self, other: Gain, tol: f64) -> bool {
        match (self, other) {
            (Gain::Exact(a), Gain::Exact(b)) => a == b,
            _ => (self.value() - other.value()).norm() <= tol,
        }
    }

    /// The `gaingraph v1` token for this gain.
    pub fn token(self) -> String {
        match self {
            Gain::Exact(0) => "+1".into(),
            Gain::Exact(1) => "+i".into(),
            Gain::Exact(2) => "-1".into(),
            Gain::Exact(_) => "-i".into(),
            Gain::Float(z) => format!("c:{:?},{:?}", z.re, z.im),
        }
    }
}

impl Mul for Gain {
    type Output = Gain;

    fn mul(self, rhs: Gain) -> Gain {
        match (self, rhs) {
            (Gain::Exact(a), Gain::Exact(b)) => Gain::Exact((a + b) % 4),
            _ => {
                let z = self.value() * rhs.value();
                Gain::Float(z / z.norm())
            }
        }
    }
}

impl PartialEq for Gain {
    fn eq(&self, other: &Gain) -> bool {
        self.approx_eq(*other, SNAP_TOLERANCE)
    }
}

impl fmt::Display for Gain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

/// How a gain is specified on input, before validation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GainSpec {
    /// One of `+1`, `-1`, `+i`, `-i`.
    Token(Gain),
    /// Angle in degrees.
    Angle(f64),
    /// Real and imaginary parts.
    Complex(f64, f64),
}

impl GainSpec {
    pub fn to_gain(self) -> Result<Gain, GraphError> {
        match self {
            GainSpec::Token(g) => Ok(g),
            GainSpec::Angle(deg) => Gain::from_angle_degrees(deg),
            GainSpec::Complex(re, im) => Gain::from_complex(re, im),
        }
    }
}

impl From<Gain> for GainSpec {
    fn from(g: Gain) -> GainSpec {
        GainSpec::Token(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_products_stay_exact() {
        assert_eq!((Gain::I * Gain::I).exact_exponent(), Some(2));
        assert_eq!((Gain::MINUS_I * Gain::I).exact_exponent(), Some(0));
        assert_eq!(Gain::I.conj().exact_exponent(), Some(3));
    }

    #[test]
    fn complex_input_is_normalized_and_snapped() {
        let g = Gain::from_complex(0.6, 0.8 + 1e-11).unwrap();
        assert!(!g.is_exact());
        assert!((g.value().norm() - 1.0).abs() < 1e-15);
        assert_eq!(Gain::from_complex(-1.0, 1e-14).unwrap().exact_exponent(), Some(2));
        assert!(matches!(
            Gain::from_complex(1.1, 0.0),
            Err(GraphError::NotUnitModulus { .. })
        ));
        assert!(Gain::from_complex(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn right_angles_are_exact() {
        assert_eq!(Gain::from_angle_degrees(90.0).unwrap().exact_exponent(), Some(1));
        assert_eq!(Gain::from_angle_degrees(-90.0).unwrap().exact_exponent(), Some(3));
        assert_eq!(Gain::from_angle_degrees(540.0).unwrap().exact_exponent(), Some(2));
        assert!(!Gain::from_angle_degrees(30.0).unwrap().is_exact());
    }

    #[test]
    fn tokens() {
        assert_eq!(Gain::MINUS_I.token(), "-i");
        let g = Gain::from_angle_degrees(45.0).unwrap();
        assert!(g.token().starts_with("c:"));
    }
}
