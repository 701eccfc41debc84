use num_complex::Complex64;

use super::coefficients::{root_of_unity, CouplingCoefficients};
use crate::{Error, Result};

/// Coefficients (constant term first) of the polynomial of degree `< m`
/// through `(nodes[i], values[i])`, built from the Lagrange basis.
pub fn lagrange_interpolate(nodes: &[Complex64], values: &[Complex64]) -> Vec<Complex64> {
    assert_eq!(nodes.len(), values.len(), "one value per node");
    let m = nodes.len();
    let zero = Complex64::new(0.0, 0.0);
    let mut out = vec![zero; m];
    for (i, (&zi, &yi)) in nodes.iter().zip(values).enumerate() {
        // basis numerator Π_{j≠i} (t − z_j), expanded incrementally
        let mut basis = vec![zero; m];
        basis[0] = Complex64::new(1.0, 0.0);
        let mut degree = 0;
        let mut denom = Complex64::new(1.0, 0.0);
        for (j, &zj) in nodes.iter().enumerate() {
            if j == i {
                continue;
            }
            degree += 1;
            for p in (0..=degree).rev() {
                let shifted = if p > 0 { basis[p - 1] } else { zero };
                basis[p] = shifted - zj * basis[p];
            }
            denom *= zi - zj;
        }
        let scale = yi / denom;
        for (o, b) in out.iter_mut().zip(&basis) {
            *o += b * scale;
        }
    }
    out
}

/// Rank (0 = largest) of each real part `ρ_0, …, ρ_N`, `N = ⌊n/2⌋`.
/// Equal real parts get the rank of their lowest mode index.
pub fn realized_ranking(c: &CouplingCoefficients) -> Vec<usize> {
    let big_n = c.n() / 2;
    let rho: Vec<f64> = (0..=big_n).map(|k| c.rho(k)).collect();
    rho.iter().map(|r| rho.iter().filter(|s| *s > r).count()).collect()
}

/// Real circulant coefficients whose real parts `ρ_0, …, ρ_N` are ranked
/// as `desired` (entry `j` is the rank of mode `j`, 0 = first to go
/// unstable).
///
/// Targets are `α_j = −desired[j]`. A complex polynomial `ψ` is
/// interpolated through `ψ(ζ^j) = ψ(ζ̄^j) = α_j / 2`, and the coefficients of
/// the real polynomial `ψ + ψ̄` are returned, so `μ_j = α_j` exactly in
/// exact arithmetic. The result is checked against the spectrum.
pub fn design_ordering(n: usize, desired: &[usize]) -> Result<CouplingCoefficients> {
    let big_n = n / 2;
    if n < 2 || desired.len() != big_n + 1 {
        return Err(Error::InvalidPermutation(big_n));
    }
    let mut seen = vec![false; big_n + 1];
    for &d in desired {
        if d > big_n || seen[d] {
            return Err(Error::InvalidPermutation(big_n));
        }
        seen[d] = true;
    }
    let alpha: Vec<f64> = desired.iter().map(|&d| -(d as f64)).collect();
    let nodes: Vec<Complex64> = (0..n).map(|m| root_of_unity(n, m)).collect();
    // ζ^m and ζ̄^m = ζ^{n−m} share the target of mode min(m, n − m)
    let values: Vec<Complex64> = (0..n).map(|m| Complex64::new(0.5 * alpha[m.min(n - m)], 0.0)).collect();
    let psi = lagrange_interpolate(&nodes, &values);
    let phi: Vec<f64> = psi.iter().map(|p| (p + p.conj()).re).collect();
    let c = CouplingCoefficients::new(phi, false)?;

    for (j, &target) in alpha.iter().enumerate() {
        let got = c.rho(j);
        if (got - target).abs() > 1e-8 * (1.0 + n as f64) {
            return Err(Error::Internal(format!("designed ρ_{j} = {got}, target {target}")));
        }
    }
    if realized_ranking(&c) != desired {
        return Err(Error::Internal("designed ranking differs from request".into()));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{classify_first_bifurcation, Sweep};

    #[test]
    fn interpolation_reproduces_a_cubic() {
        let poly =
            [Complex64::new(1.0, 2.0), Complex64::new(-0.5, 0.0), Complex64::new(0.0, 0.3), Complex64::new(2.0, 0.0)];
        let eval = |z: Complex64| poly.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c);
        let nodes: Vec<Complex64> = [0.0, 1.0, -2.0, 0.5].iter().map(|&x| Complex64::new(x, 0.3 * x)).collect();
        let values: Vec<Complex64> = nodes.iter().map(|&z| eval(z)).collect();
        for (got, want) in lagrange_interpolate(&nodes, &values).iter().zip(poly) {
            assert!((got - want).norm() < 1e-12);
        }
    }

    #[test]
    fn three_ring_identity_ordering() {
        let c = design_ordering(3, &[0, 1]).unwrap();
        assert!(c.rho(0) > c.rho(1));
        assert!((c.rho(0) - c.rho(1) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn five_ring_mode_one_first() {
        let c = design_ordering(5, &[1, 0, 2]).unwrap();
        let fb = classify_first_bifurcation(&c, Sweep::ShiftA0).unwrap();
        assert_eq!(fb.critical_modes, vec![1, 4]);
    }

    #[test]
    fn two_ring_both_orders() {
        let up = design_ordering(2, &[0, 1]).unwrap();
        let down = design_ordering(2, &[1, 0]).unwrap();
        assert!(up.coefficients()[1] > 0.0);
        assert!(down.coefficients()[1] < 0.0);
    }

    #[test]
    fn rejects_non_permutations() {
        assert_eq!(design_ordering(5, &[0, 0, 1]).unwrap_err(), Error::InvalidPermutation(2));
        assert_eq!(design_ordering(5, &[0, 1]).unwrap_err(), Error::InvalidPermutation(2));
        assert_eq!(design_ordering(5, &[0, 1, 3]).unwrap_err(), Error::InvalidPermutation(2));
    }
}
