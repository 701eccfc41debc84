//! Independent reference computations for the integration tests.
#![allow(dead_code)]

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Eigenvalues of a dense real matrix via nalgebra's real Schur form.
///
/// The matrix is first conjugated by a random orthogonal matrix: the
/// spectrum is unchanged, but the exact structure of circulants can stall
/// an unshifted-restart Francis iteration.
pub fn dense_eigenvalues(rows: &[Vec<f64>]) -> Vec<Complex64> {
    let n = rows.len();
    let m = DMatrix::from_fn(n, n, |i, j| rows[i][j]);
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
    for _ in 0..8 {
        let q = DMatrix::from_fn(n, n, |_, _| rng.random_range(-1.0..1.0)).qr().q();
        let conj = q.transpose() * &m * &q;
        if let Some(schur) = Schur::try_new(conj, f64::EPSILON, 10_000) {
            return schur.complex_eigenvalues().iter().copied().collect();
        }
    }
    panic!("dense oracle did not converge");
}

/// Largest distance in a greedy nearest-neighbour matching of two
/// multisets of equal size.
pub fn multiset_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let mut used = vec![false; b.len()];
    let mut worst: f64 = 0.0;
    for x in a {
        let (j, d) = b
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, y)| (j, (x - y).norm()))
            .min_by(|p, q| p.1.total_cmp(&q.1))
            .unwrap();
        used[j] = true;
        worst = worst.max(d);
    }
    worst
}

/// `Σ_j a_j e^{2πijk/n}` by direct trigonometric summation.
pub fn naive_mu(a: &[f64], k: usize) -> Complex64 {
    let n = a.len() as f64;
    a.iter()
        .enumerate()
        .map(|(j, &v)| {
            let th = 2.0 * std::f64::consts::PI * (j * k) as f64 / n;
            Complex64::new(v * th.cos(), v * th.sin())
        })
        .sum()
}

pub fn uniform_vec(rng: &mut ChaCha8Rng, len: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..len).map(|_| rng.random_range(lo..hi)).collect()
}

/// Ranks of `values` in decreasing order (rank 0 = largest).
pub fn ranks_desc(values: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&i, &j| values[j].total_cmp(&values[i]));
    let mut ranks = vec![0; values.len()];
    for (r, &i) in idx.iter().enumerate() {
        ranks[i] = r;
    }
    ranks
}

/// Signed distance on the unit circle, in `[-1/2, 1/2)`.
pub fn circ(a: f64, b: f64) -> f64 {
    (a - b + 0.5).rem_euclid(1.0) - 0.5
}

/// Central-difference Jacobian of `f` at `x`.
pub fn fd_jacobian(f: impl Fn(&[f64]) -> Vec<f64>, x: &[f64], h: f64) -> Vec<Vec<f64>> {
    let d = x.len();
    let mut jac = vec![vec![0.0; d]; d];
    for j in 0..d {
        let mut xp = x.to_vec();
        let mut xm = x.to_vec();
        xp[j] += h;
        xm[j] -= h;
        let (fp, fm) = (f(&xp), f(&xm));
        for i in 0..d {
            jac[i][j] = (fp[i] - fm[i]) / (2.0 * h);
        }
    }
    jac
}

/// Every permutation of `0..m`.
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}
