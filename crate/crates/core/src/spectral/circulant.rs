use num_complex::Complex64;
use serde::Serialize;

use super::coefficients::{root_of_unity, CouplingCoefficients};

/// One Fourier mode of a circulant Jacobian.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralMode {
    pub k: usize,
    pub mu: Complex64,
    /// `v_k = (1, ζ^k, ζ^{2k}, …)`.
    pub eigenvector: Vec<Complex64>,
    /// Number of modes (including this one) sharing the eigenvalue.
    pub multiplicity: usize,
}

impl SpectralMode {
    pub fn rho(&self) -> f64 {
        self.mu.re
    }

    pub fn sigma(&self) -> f64 {
        self.mu.im
    }
}

/// All `n` modes `μ_k = Σ_j a_j ζ^{jk}`, `k = 0, …, n−1`.
///
/// Dihedral coefficients produce `μ_k = μ_{n−k}`, reported as multiplicity 2.
pub fn circulant_spectrum(c: &CouplingCoefficients) -> Vec<SpectralMode> {
    let n = c.n();
    let mus: Vec<Complex64> = (0..n).map(|k| c.mu(k)).collect();
    let tol = c.zero_tolerance();
    (0..n)
        .map(|k| SpectralMode {
            k,
            mu: mus[k],
            eigenvector: (0..n).map(|j| root_of_unity(n, j * k)).collect(),
            multiplicity: mus.iter().filter(|m| (**m - mus[k]).norm() <= tol).count(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn z3_example_eigenvalues() {
        let (lambda, a) = (0.7, -2.0);
        let zeta = root_of_unity(3, 1);
        let modes = circulant_spectrum(&CouplingCoefficients::new(vec![lambda, 0.0, a], false).unwrap());
        let l = Complex64::new(lambda, 0.0);
        assert!(close(modes[0].mu, l + a, 1e-12));
        assert!(close(modes[1].mu, l + zeta * zeta * a, 1e-12));
        assert!(close(modes[2].mu, l + zeta * a, 1e-12));
        // ρ_1 = λ − a/2, σ_1 = −√3 a / 2
        assert!((modes[1].rho() - (lambda - a / 2.0)).abs() < 1e-12);
        assert!((modes[1].sigma() - (-(3.0f64).sqrt() * a / 2.0)).abs() < 1e-12);
    }

    #[test]
    fn four_node_real_parts() {
        let a = [0.3, -1.2, 0.7, 2.1];
        let modes = circulant_spectrum(&CouplingCoefficients::new(a.to_vec(), false).unwrap());
        let expect = [a[0] + a[1] + a[2] + a[3], a[0] - a[2], a[0] - a[1] + a[2] - a[3], a[0] - a[2]];
        for (m, e) in modes.iter().zip(expect) {
            assert!((m.rho() - e).abs() < 1e-12);
        }
        // μ_1 = a0 + a1 i − a2 − a3 i
        assert!((modes[1].sigma() - (a[1] - a[3])).abs() < 1e-12);
    }

    #[test]
    fn decoupled_ring_is_a_multiple_of_identity() {
        let modes = circulant_spectrum(&CouplingCoefficients::new(vec![5.0, 0.0, 0.0, 0.0, 0.0, 0.0], false).unwrap());
        assert_eq!(modes.len(), 6);
        for m in modes {
            assert_eq!(m.mu, Complex64::new(5.0, 0.0));
            assert_eq!(m.multiplicity, 6);
        }
    }

    #[test]
    fn dihedral_modes_are_double() {
        let c = CouplingCoefficients::new(vec![0.0, 1.0, 0.0, 0.0, 0.0, 1.0], true).unwrap();
        let mult: Vec<usize> = circulant_spectrum(&c).iter().map(|m| m.multiplicity).collect();
        assert_eq!(mult, vec![1, 2, 2, 1, 2, 2]);
    }

    #[test]
    fn eigenvector_residual() {
        let c = CouplingCoefficients::new(vec![0.1, -0.4, 2.0, 0.0, 1.5, -0.3, 0.2], false).unwrap();
        let l = c.matrix();
        for m in circulant_spectrum(&c) {
            let v = &m.eigenvector;
            let norm_v = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            let resid: f64 = (0..c.n())
                .map(|i| {
                    let lv: Complex64 = (0..c.n()).map(|j| v[j] * l[i][j]).sum();
                    (lv - m.mu * v[i]).norm_sqr()
                })
                .sum::<f64>()
                .sqrt();
            assert!(resid <= 1e-10 * norm_v, "k = {}: {resid}", m.k);
        }
    }
}
