use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// `ζ^m` for `ζ = e^{2πi/n}`.
///
/// Uses the symmetries of the unit circle so that `root_of_unity(n, n - m)`
/// is bit-for-bit the conjugate of `root_of_unity(n, m)`, and the real roots
/// (and `±i`) are exact.
pub fn root_of_unity(n: usize, m: usize) -> Complex64 {
    let m = m % n;
    if m == 0 {
        return Complex64::new(1.0, 0.0);
    }
    if 2 * m == n {
        return Complex64::new(-1.0, 0.0);
    }
    if 4 * m == n {
        return Complex64::new(0.0, 1.0);
    }
    if 4 * m == 3 * n {
        return Complex64::new(0.0, -1.0);
    }
    if 2 * m > n {
        return root_of_unity(n, n - m).conj();
    }
    let theta = 2.0 * std::f64::consts::PI * m as f64 / n as f64;
    Complex64::new(theta.cos(), theta.sin())
}

/// Coefficients `(a_0, …, a_{n−1})` of the circulant linearisation
/// `L = a_0 I + a_1 A + ⋯ + a_{n−1} A^{n−1}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CouplingCoefficients {
    n: usize,
    a: Vec<f64>,
    dihedral: bool,
}

impl CouplingCoefficients {
    /// With `dihedral` set the coefficients must satisfy `a_r = a_{n−r}`.
    pub fn new(a: Vec<f64>, dihedral: bool) -> Result<Self> {
        let n = a.len();
        if n < 2 {
            return Err(Error::TooFewNodes(n));
        }
        if a.iter().any(|v| !v.is_finite()) {
            return Err(Error::Config("coupling coefficients must be finite".into()));
        }
        if dihedral {
            let scale = 1.0 + a.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            for r in 1..n {
                if (a[r] - a[n - r]).abs() > 1e-12 * scale {
                    return Err(Error::AsymmetricCoefficients { r, left: a[r], right: a[n - r] });
                }
            }
        }
        Ok(CouplingCoefficients { n, a, dihedral })
    }

    /// `a_0 I + a_1 A`: the unidirectional nearest-neighbour ring.
    pub fn nearest_neighbour(n: usize, a0: f64, a1: f64) -> Result<Self> {
        let mut a = vec![0.0; n.max(1)];
        a[0] = a0;
        if n >= 2 {
            a[1] = a1;
        }
        Self::new(a, false)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.a
    }

    pub fn is_dihedral(&self) -> bool {
        self.dihedral
    }

    /// Euclidean norm of the coefficient vector.
    pub fn norm(&self) -> f64 {
        self.a.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Scale-aware zero threshold `1e-9 · (1 + ‖a‖)` for real and imaginary
    /// parts of eigenvalues.
    pub fn zero_tolerance(&self) -> f64 {
        1e-9 * (1.0 + self.norm())
    }

    /// Same coefficients with `a_0` moved by `delta`.
    pub fn shifted(&self, delta: f64) -> Self {
        let mut a = self.a.clone();
        a[0] += delta;
        CouplingCoefficients { a, ..self.clone() }
    }

    /// Linearisation of the time-reversed field `−f`.
    pub fn negated(&self) -> Self {
        CouplingCoefficients { a: self.a.iter().map(|v| -v).collect(), ..self.clone() }
    }

    /// True when every coupling `a_r`, `r ≥ 1`, vanishes.
    pub fn is_decoupled(&self) -> bool {
        self.a[1..].iter().all(|&v| v == 0.0)
    }

    /// `μ_k = Σ_j a_j ζ^{jk}`.
    pub fn mu(&self, k: usize) -> Complex64 {
        self.a.iter().enumerate().map(|(j, &aj)| root_of_unity(self.n, j * k) * aj).sum()
    }

    pub fn rho(&self, k: usize) -> f64 {
        self.mu(k).re
    }

    pub fn sigma(&self, k: usize) -> f64 {
        self.mu(k).im
    }

    /// Dense circulant matrix `L[c][c + j] = a_j`.
    pub fn matrix(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|c| (0..self.n).map(|d| self.a[(d + self.n - c) % self.n]).collect()).collect()
    }
}
