use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::TheoremError;
use crate::gain::Gain;
use crate::graph::GainGraph;
use crate::spectral::Inertia;

/// Tolerance for deciding `φ(C) = ±1` (even cycles) and `Re(...) = 0`
/// (odd cycles) on floating gains. Exact gains are compared exactly.
pub const DEFAULT_RE_TOL: f64 = 1e-9;

/// Gain type of a cycle `C_n`.
///
/// Even cycles: `A` when `φ(C) = (-1)^{n/2}`, `B` otherwise. Odd cycles:
/// by the sign of `Re((-1)^{(n-1)/2} φ(C))`, positive `C`, negative `D`,
/// zero `E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CycleType {
    A,
    B,
    C,
    D,
    E,
}

impl CycleType {
    pub const ALL: [CycleType; 5] = [CycleType::A, CycleType::B, CycleType::C, CycleType::D, CycleType::E];

    pub fn for_even(self) -> bool {
        matches!(self, CycleType::A | CycleType::B)
    }

    pub fn letter(self) -> char {
        match self {
            CycleType::A => 'A',
            CycleType::B => 'B',
            CycleType::C => 'C',
            CycleType::D => 'D',
            CycleType::E => 'E',
        }
    }

    pub(crate) fn check_length(self, n: usize) -> Result<(), TheoremError> {
        if n < 3 || (n % 2 == 0) != self.for_even() {
            return Err(TheoremError::ParityMismatch { length: n, kind: self.letter() });
        }
        Ok(())
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for CycleType {
    type Err = String;

    fn from_str(s: &str) -> Result<CycleType, String> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(CycleType::A),
            "B" => Ok(CycleType::B),
            "C" => Ok(CycleType::C),
            "D" => Ok(CycleType::D),
            "E" => Ok(CycleType::E),
            other => Err(format!("unknown cycle type {other:?}")),
        }
    }
}

/// Classifies a cycle of `g` given as a vertex sequence.
pub fn classify_cycle(g: &GainGraph, cycle: &[usize], re_tol: f64) -> Result<CycleType, TheoremError> {
    let phi = g.gain_of_cycle(cycle)?;
    Ok(classify_gain(cycle.len(), phi, re_tol))
}

/// Type of a cycle of length `n` whose gain is `phi`.
pub(crate) fn classify_gain(n: usize, phi: Gain, re_tol: f64) -> CycleType {
    if n % 2 == 0 {
        // (-1)^{n/2} = i^n
        let target = Gain::quarter_turns(n as i64);
        let hit = match phi {
            Gain::Exact(_) => phi.approx_eq(target, 0.0),
            Gain::Float(z) => (z - target.value()).norm() < re_tol,
        };
        if hit {
            CycleType::A
        } else {
            CycleType::B
        }
    } else {
        // (-1)^{(n-1)/2} = i^{n-1}
        let rotated = Gain::quarter_turns(n as i64 - 1) * phi;
        match rotated {
            Gain::Exact(0) => CycleType::C,
            Gain::Exact(2) => CycleType::D,
            Gain::Exact(_) => CycleType::E,
            Gain::Float(z) if z.re.abs() < re_tol => CycleType::E,
            Gain::Float(z) if z.re > 0.0 => CycleType::C,
            Gain::Float(_) => CycleType::D,
        }
    }
}

/// Inertia of a gain cycle `C_n` of the given type.
pub fn cycle_inertia_closed_form(n: usize, t: CycleType) -> Result<Inertia, TheoremError> {
    t.check_length(n)?;
    let (p, q) = match t {
        CycleType::A => ((n - 2) / 2, (n - 2) / 2),
        CycleType::B => (n / 2, n / 2),
        CycleType::C => ((n + 1) / 2, (n - 1) / 2),
        CycleType::D => ((n - 1) / 2, (n + 1) / 2),
        CycleType::E => ((n - 1) / 2, (n - 1) / 2),
    };
    Ok(Inertia::new(p, q, n - p - q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::{cycle, cycle_with_gains};

    #[test]
    fn classify_examples() {
        assert_eq!(classify_cycle(&cycle(4), &[0, 1, 2, 3], DEFAULT_RE_TOL).unwrap(), CycleType::A);
        assert_eq!(classify_cycle(&cycle(3), &[0, 1, 2], DEFAULT_RE_TOL).unwrap(), CycleType::D);
        let c3i = cycle_with_gains(&[Gain::ONE, Gain::ONE, Gain::I]);
        assert_eq!(classify_cycle(&c3i, &[0, 1, 2], DEFAULT_RE_TOL).unwrap(), CycleType::E);
        let c4b = cycle_with_gains(&[Gain::ONE, Gain::ONE, Gain::ONE, Gain::MINUS_ONE]);
        assert_eq!(classify_cycle(&c4b, &[0, 1, 2, 3], DEFAULT_RE_TOL).unwrap(), CycleType::B);
        assert!(classify_cycle(&c4b, &[0, 2, 1, 3], DEFAULT_RE_TOL).is_err());
    }

    #[test]
    fn classification_is_direction_independent() {
        for k in 0..4u8 {
            for n in 3..8 {
                let mut gains = vec![Gain::ONE; n];
                gains[n - 1] = Gain::Exact(k);
                let g = cycle_with_gains(&gains);
                let fwd: Vec<usize> = (0..n).collect();
                let back: Vec<usize> = (0..n).rev().collect();
                assert_eq!(
                    classify_cycle(&g, &fwd, DEFAULT_RE_TOL).unwrap(),
                    classify_cycle(&g, &back, DEFAULT_RE_TOL).unwrap()
                );
            }
        }
    }

    #[test]
    fn float_gains_classify_by_sign() {
        let near_e = Gain::from_angle_degrees(90.0 + 1e-12).unwrap();
        let g = cycle_with_gains(&[Gain::ONE, Gain::ONE, near_e]);
        assert_eq!(classify_cycle(&g, &[0, 1, 2], DEFAULT_RE_TOL).unwrap(), CycleType::E);
        let tilted = Gain::from_angle_degrees(170.0).unwrap();
        let g = cycle_with_gains(&[Gain::ONE, Gain::ONE, tilted]);
        assert_eq!(classify_cycle(&g, &[0, 1, 2], DEFAULT_RE_TOL).unwrap(), CycleType::C);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(cycle_inertia_closed_form(4, CycleType::A).unwrap(), Inertia::new(1, 1, 2));
        assert_eq!(cycle_inertia_closed_form(3, CycleType::C).unwrap(), Inertia::new(2, 1, 0));
        assert_eq!(cycle_inertia_closed_form(5, CycleType::E).unwrap(), Inertia::new(2, 2, 1));
        assert_eq!(cycle_inertia_closed_form(6, CycleType::B).unwrap(), Inertia::new(3, 3, 0));
        assert_eq!(cycle_inertia_closed_form(7, CycleType::D).unwrap(), Inertia::new(3, 4, 0));
        assert!(matches!(
            cycle_inertia_closed_form(4, CycleType::C),
            Err(TheoremError::ParityMismatch { length: 4, kind: 'C' })
        ));
        assert!(cycle_inertia_closed_form(2, CycleType::A).is_err());
    }
}
