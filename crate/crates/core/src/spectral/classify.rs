use serde::{Deserialize, Serialize};

use super::circulant::circulant_spectrum;
use super::coefficients::CouplingCoefficients;
use crate::{Error, Result};

/// Orientation of a discrete rotating wave around the ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// `x_{j+1}(t) = x_j(t − kT/n)`.
    Clockwise,
    /// `x_{j+1}(t) = x_j(t + kT/n)`.
    Anticlockwise,
    NotRotating,
}

impl Direction {
    pub fn reversed(self) -> Direction {
        match self {
            Direction::Clockwise => Direction::Anticlockwise,
            Direction::Anticlockwise => Direction::Clockwise,
            Direction::NotRotating => Direction::NotRotating,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BifurcationKind {
    SteadyState,
    Hopf,
    Degenerate,
}

/// Which parameter moves the spectrum. Shifting `a_0` translates every
/// eigenvalue by the same real amount, like the `λx` term of the built-ins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Sweep {
    #[default]
    ShiftA0,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FirstBifurcation {
    pub critical_modes: Vec<usize>,
    pub kind: BifurcationKind,
    /// Value of `a_0` at which the leading real part reaches zero.
    pub crossing_value: f64,
    /// `|σ_k|` of the critical mode (0 unless Hopf).
    pub omega: f64,
    /// Leading real part at the given coefficients.
    pub max_real: f64,
}

/// Finds the modes that go unstable first as `a_0` increases.
///
/// Real-part ties (within [`CouplingCoefficients::zero_tolerance`]) other
/// than a conjugate pair `{k, n−k}` are reported as `Degenerate`.
pub fn classify_first_bifurcation(c: &CouplingCoefficients, sweep: Sweep) -> Result<FirstBifurcation> {
    let Sweep::ShiftA0 = sweep;
    if c.is_decoupled() {
        return Err(Error::AllDecoupled);
    }
    let n = c.n();
    let tol = c.zero_tolerance();
    let modes = circulant_spectrum(c);
    let max_real = modes.iter().map(|m| m.rho()).fold(f64::NEG_INFINITY, f64::max);
    let critical: Vec<usize> = modes.iter().filter(|m| m.rho() >= max_real - tol).map(|m| m.k).collect();
    let k = critical[0];
    let conjugate_pair = critical.len() == 2 && critical[1] == n - k && k != n - k;
    let (kind, omega) = match critical.len() {
        1 => (BifurcationKind::SteadyState, 0.0),
        _ if conjugate_pair => {
            let sigma = modes[k].sigma().abs();
            if sigma > tol {
                (BifurcationKind::Hopf, sigma)
            } else {
                (BifurcationKind::SteadyState, 0.0)
            }
        }
        _ => (BifurcationKind::Degenerate, 0.0),
    };
    Ok(FirstBifurcation {
        critical_modes: critical,
        kind,
        crossing_value: c.coefficients()[0] - max_real,
        omega,
        max_real,
    })
}

/// Rotation direction of the Hopf branch on mode `k`, `1 ≤ k ≤ ⌊n/2⌋`,
/// `k ≠ n/2`: clockwise iff `σ_k < 0`.
pub fn rotation_direction(c: &CouplingCoefficients, k: usize) -> Result<Direction> {
    let n = c.n();
    if k == 0 || 2 * k >= n {
        return Err(Error::InvalidMode { n, k });
    }
    let sigma = c.sigma(k);
    Ok(if sigma.abs() <= c.zero_tolerance() {
        Direction::NotRotating
    } else if sigma < 0.0 {
        Direction::Clockwise
    } else {
        Direction::Anticlockwise
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NondegeneracyReport {
    pub simple: bool,
    pub no_other_imaginary: bool,
    pub crossing: bool,
}

/// Checks the Hopf nondegeneracy conditions for mode `k` at the value of
/// `a_0` where `ρ_k = 0`.
pub fn hopf_nondegeneracy(c: &CouplingCoefficients, k: usize) -> NondegeneracyReport {
    let n = c.n();
    let k = k % n;
    let tol = c.zero_tolerance();
    let at_crossing = c.shifted(-c.rho(k));
    let modes = circulant_spectrum(&at_crossing);
    let partner = (n - k) % n;
    NondegeneracyReport {
        simple: modes[k].multiplicity == 1,
        no_other_imaginary: modes.iter().filter(|m| m.k != k && m.k != partner).all(|m| m.rho().abs() > tol),
        // dρ_k/da_0 = 1 for every mode under an a_0 shift
        crossing: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(a: &[f64]) -> CouplingCoefficients {
        CouplingCoefficients::new(a.to_vec(), false).unwrap()
    }

    #[test]
    fn five_ring_negative_coupling_is_hopf() {
        let fb = classify_first_bifurcation(&coeffs(&[0.0, -1.0, 0.0, 0.0, 0.0]), Sweep::ShiftA0).unwrap();
        assert_eq!(fb.kind, BifurcationKind::Hopf);
        assert_eq!(fb.critical_modes, vec![2, 3]);
        assert!((fb.omega - (4.0 * std::f64::consts::PI / 5.0).sin()).abs() < 1e-12);
    }

    #[test]
    fn six_ring_negative_coupling_is_steady() {
        let fb = classify_first_bifurcation(&coeffs(&[0.0, -1.0, 0.0, 0.0, 0.0, 0.0]), Sweep::ShiftA0).unwrap();
        assert_eq!(fb.kind, BifurcationKind::SteadyState);
        assert_eq!(fb.critical_modes, vec![3]);
        assert_eq!(fb.crossing_value, -1.0);
    }

    #[test]
    fn four_ring_with_long_range_coupling() {
        // ρ_1 = −a_2 = 1 > ρ_0 = −0.9 > ρ_2 = −1.1, σ_1 = 0.1
        let c = coeffs(&[0.0, 0.1, -1.0, 0.0]);
        let fb = classify_first_bifurcation(&c, Sweep::ShiftA0).unwrap();
        assert_eq!(fb.kind, BifurcationKind::Hopf);
        assert_eq!(fb.critical_modes, vec![1, 3]);
        assert!((fb.max_real - 1.0).abs() < 1e-12);
        assert!((fb.omega - 0.1).abs() < 1e-12);
        assert_eq!(
            hopf_nondegeneracy(&c, 1),
            NondegeneracyReport { simple: true, no_other_imaginary: true, crossing: true }
        );
    }

    #[test]
    fn ties_are_degenerate() {
        // ρ_0 = ρ_1 on the line a1 + 2a2 + a3 = 0
        let fb = classify_first_bifurcation(&coeffs(&[0.0, 0.0, -0.5, 1.0]), Sweep::ShiftA0).unwrap();
        assert_eq!(fb.kind, BifurcationKind::Degenerate);
        assert_eq!(fb.critical_modes, vec![0, 1, 3]);
    }

    #[test]
    fn decoupled_is_an_error() {
        assert_eq!(
            classify_first_bifurcation(&coeffs(&[1.0, 0.0, 0.0]), Sweep::ShiftA0).unwrap_err(),
            Error::AllDecoupled
        );
    }

    #[test]
    fn rotation_examples() {
        // σ_1 = −√3 a / 2 = √3 for a = −2
        let z3 = coeffs(&[0.4, 0.0, -2.0]);
        assert!((z3.sigma(1) - 3f64.sqrt()).abs() < 1e-12);
        assert_eq!(rotation_direction(&z3, 1).unwrap(), Direction::Anticlockwise);
        assert_eq!(rotation_direction(&z3.negated(), 1).unwrap(), Direction::Clockwise);
        let z5 = coeffs(&[0.0, -2.0, 0.0, 0.0, 0.0]);
        assert_eq!(rotation_direction(&z5, 2).unwrap(), Direction::Clockwise);
        assert_eq!(rotation_direction(&z5, 0).unwrap_err(), Error::InvalidMode { n: 5, k: 0 });
        let z4 = coeffs(&[0.0, 1.0, 0.0, 0.0]);
        assert_eq!(rotation_direction(&z4, 2).unwrap_err(), Error::InvalidMode { n: 4, k: 2 });
        let d6 = CouplingCoefficients::new(vec![0.0, 1.0, 0.0, 0.0, 0.0, 1.0], true).unwrap();
        assert_eq!(rotation_direction(&d6, 1).unwrap(), Direction::NotRotating);
    }

    #[test]
    fn nondegeneracy_examples() {
        let nn5 = coeffs(&[0.0, -1.0, 0.0, 0.0, 0.0]);
        assert_eq!(
            hopf_nondegeneracy(&nn5, 2),
            NondegeneracyReport { simple: true, no_other_imaginary: true, crossing: true }
        );
        let d6 = CouplingCoefficients::new(vec![0.0, 1.0, 0.0, 0.0, 0.0, 1.0], true).unwrap();
        assert!(!hopf_nondegeneracy(&d6, 1).simple);
    }
}
