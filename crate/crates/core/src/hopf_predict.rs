//! From a critical mode to a phase-pattern prediction for the bifurcating
//! rotating wave.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::spectral::{
    block_spectrum, circulant_spectrum, rotation_direction, BlockCoefficients, CouplingCoefficients, Direction,
};
use crate::{Error, Result};

/// Cyclic group `Z_m`, printed as `Zm` (or `1` for the trivial group).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclicGroup(pub usize);

impl fmt::Display for CyclicGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 1 {
            write!(f, "1")
        } else {
            write!(f, "Z{}", self.0)
        }
    }
}

impl Serialize for CyclicGroup {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Spatiotemporal symmetry `H`, spatial kernel `K` and `|H/K|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SymmetryPair {
    #[serde(rename = "H")]
    pub h: CyclicGroup,
    #[serde(rename = "K")]
    pub k: CyclicGroup,
    pub twist_order: usize,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `H = Zₙ`, `K = Z_{gcd(n,k)}`, twist order `n / gcd(n, k)`.
pub fn symmetry_pair(n: usize, k: usize) -> SymmetryPair {
    let g = gcd(n, k % n);
    SymmetryPair { h: CyclicGroup(n), k: CyclicGroup(g), twist_order: n / g }
}

/// Predicted Hopf branch: limiting frequency and period, rotation direction
/// and the phase fraction `θ_j / T` of every node (node 0 at 0).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HopfPrediction {
    /// Canonical wavenumber, `0 ≤ k ≤ ⌊n/2⌋`.
    pub k: usize,
    pub omega: f64,
    #[serde(rename = "period")]
    pub period_limit: f64,
    #[serde(rename = "fractions")]
    pub phase_fractions: Vec<f64>,
    pub direction: Direction,
    #[serde(flatten)]
    pub symmetry: SymmetryPair,
}

impl HopfPrediction {
    pub fn n(&self) -> usize {
        self.phase_fractions.len()
    }

    /// Phase step between consecutive nodes, as a multiple of `1/n` in
    /// `0..n`.
    pub fn step_numerator(&self) -> usize {
        let n = self.n();
        match self.direction {
            Direction::Clockwise => self.k % n,
            Direction::Anticlockwise => (n - self.k % n) % n,
            Direction::NotRotating => self.k % n,
        }
    }
}

fn canonical(n: usize, k: usize) -> usize {
    let k = k % n;
    k.min(n - k)
}

/// Fractions `(j · step / n) mod 1`, computed in integers.
fn fractions(n: usize, step: usize) -> Vec<f64> {
    (0..n).map(|j| ((j * step) % n) as f64 / n as f64).collect()
}

fn build(n: usize, k: usize, omega: f64, direction: Direction) -> HopfPrediction {
    let step = match direction {
        Direction::Clockwise => k,
        Direction::Anticlockwise => (n - k) % n,
        Direction::NotRotating => k,
    };
    HopfPrediction {
        k,
        omega,
        period_limit: 2.0 * std::f64::consts::PI / omega,
        phase_fractions: fractions(n, step),
        direction,
        symmetry: symmetry_pair(n, k),
    }
}

/// Prediction for the Hopf branch on mode `k` (or `n − k`) of a scalar ring.
///
/// Clockwise (`σ_k < 0`) waves have `θ_{j+1} − θ_j = k/n`, anticlockwise
/// ones `−k/n`.
pub fn predict(c: &CouplingCoefficients, k: usize) -> Result<HopfPrediction> {
    let n = c.n();
    let k = canonical(n, k);
    if c.is_dihedral() && k != 0 && 2 * k != n {
        return Err(Error::DoubleEigenvalue(k));
    }
    let modes = circulant_spectrum(c);
    if k == 0 || 2 * k == n {
        return Err(Error::NotHopfMode(k));
    }
    if modes[k].multiplicity > 1 {
        return Err(Error::DoubleEigenvalue(k));
    }
    let direction = rotation_direction(c, k)?;
    if direction == Direction::NotRotating {
        return Err(Error::NotHopfMode(k));
    }
    Ok(build(n, k, modes[k].sigma().abs(), direction))
}

/// Prediction for mode `k` of a ring with multidimensional nodes, using the
/// leading eigenvalue of `P + ζ^k Q`. Mode 0 oscillates in synchrony and
/// mode `n/2` in anti-phase.
pub fn predict_block(b: &BlockCoefficients, k: usize) -> Result<HopfPrediction> {
    let n = b.n();
    let k = canonical(n, k);
    let modes = block_spectrum(b)?;
    let mu = modes[k].leading();
    let scale = 1.0 + mu.norm();
    if mu.im.abs() <= 1e-9 * scale {
        return Err(Error::NotHopfMode(k));
    }
    let direction = if k == 0 || 2 * k == n {
        Direction::NotRotating
    } else if mu.im < 0.0 {
        Direction::Clockwise
    } else {
        Direction::Anticlockwise
    };
    Ok(build(n, k, mu.im.abs(), direction))
}

/// The pattern of `−f`: `θ ↦ (1 − θ) mod 1` and the direction flips.
pub fn time_reverse(p: &HopfPrediction) -> HopfPrediction {
    let n = p.n();
    let step = (n - p.step_numerator()) % n;
    HopfPrediction { phase_fractions: fractions(n, step), direction: p.direction.reversed(), ..p.clone() }
}

/// One mode of a dihedral ring.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DihedralMode {
    pub k: usize,
    pub re: f64,
    pub im: f64,
    pub multiplicity: usize,
    /// Double eigenvalue: the ℂ-axial branches (rotating waves and
    /// reflection-fixed standing waves) need normal-form analysis.
    pub c_axial_analysis_required: bool,
}

/// Distinct modes `k = 0, …, ⌊n/2⌋` with their multiplicities.
pub fn dihedral_modes(c: &CouplingCoefficients) -> Vec<DihedralMode> {
    circulant_spectrum(c)
        .into_iter()
        .take(c.n() / 2 + 1)
        .map(|m| DihedralMode {
            k: m.k,
            re: m.mu.re,
            im: m.mu.im,
            multiplicity: m.multiplicity,
            c_axial_analysis_required: m.multiplicity > 1,
        })
        .collect()
}
