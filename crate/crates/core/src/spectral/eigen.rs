//! Eigenvalues of small dense complex matrices.
//!
//! Householder reduction to upper Hessenberg form followed by single-shift
//! complex QR iteration with Wilkinson shifts. 2×2 matrices use the
//! quadratic formula directly.

use num_complex::Complex64;

use crate::{Error, Result};

/// Subdiagonal entries below this (relative to their diagonal neighbours)
/// are treated as zero.
pub const DEFLATION_TOL: f64 = 1e-12;

/// Square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        CMatrix { n, data: vec![Complex64::new(0.0, 0.0); n * n] }
    }

    pub fn from_real(n: usize, data: &[f64]) -> Self {
        assert_eq!(data.len(), n * n, "matrix data length");
        CMatrix { n, data: data.iter().map(|&v| Complex64::new(v, 0.0)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.n + j] = v;
    }

    fn frobenius(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// All eigenvalues, with algebraic multiplicity, in no particular order.
///
/// Fails with [`Error::EigensolverNoConvergence`] after `100·n²` QR sweeps.
pub fn eigenvalues(m: &CMatrix) -> Result<Vec<Complex64>> {
    match m.n {
        0 => Ok(Vec::new()),
        1 => Ok(vec![m.get(0, 0)]),
        2 => Ok(quadratic(m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1)).to_vec()),
        _ => {
            let mut h = m.clone();
            hessenberg(&mut h);
            qr_iterate(&mut h)
        }
    }
}

fn quadratic(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> [Complex64; 2] {
    let half_tr = (a + d) * 0.5;
    let disc = ((a - d) * 0.5 * ((a - d) * 0.5) + b * c).sqrt();
    [half_tr + disc, half_tr - disc]
}

fn hessenberg(h: &mut CMatrix) {
    let n = h.n;
    for k in 0..n.saturating_sub(2) {
        let norm: f64 = (k + 1..n).map(|i| h.get(i, k).norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let x0 = h.get(k + 1, k);
        let phase = if x0.norm() == 0.0 { Complex64::new(1.0, 0.0) } else { x0 / x0.norm() };
        let alpha = -phase * norm;
        let mut v: Vec<Complex64> = (k + 1..n).map(|i| h.get(i, k)).collect();
        v[0] -= alpha;
        let vnorm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            continue;
        }
        v.iter_mut().for_each(|z| *z /= vnorm);
        // H <- (I - 2vv*) H
        for j in 0..n {
            let dot: Complex64 = v.iter().enumerate().map(|(t, vt)| vt.conj() * h.get(k + 1 + t, j)).sum();
            for (t, vt) in v.iter().enumerate() {
                let i = k + 1 + t;
                h.set(i, j, h.get(i, j) - *vt * dot * 2.0);
            }
        }
        // H <- H (I - 2vv*)
        for i in 0..n {
            let dot: Complex64 = v.iter().enumerate().map(|(t, vt)| h.get(i, k + 1 + t) * vt).sum();
            for (t, vt) in v.iter().enumerate() {
                let j = k + 1 + t;
                h.set(i, j, h.get(i, j) - dot * vt.conj() * 2.0);
            }
        }
        for i in k + 2..n {
            h.set(i, k, Complex64::new(0.0, 0.0));
        }
    }
}

fn wilkinson_shift(h: &CMatrix, hi: usize) -> Complex64 {
    let [e1, e2] = quadratic(h.get(hi - 1, hi - 1), h.get(hi - 1, hi), h.get(hi, hi - 1), h.get(hi, hi));
    let d = h.get(hi, hi);
    if (e1 - d).norm() <= (e2 - d).norm() {
        e1
    } else {
        e2
    }
}

fn qr_iterate(h: &mut CMatrix) -> Result<Vec<Complex64>> {
    let n = h.n;
    let cap = 100 * n * n;
    let floor = f64::EPSILON * h.frobenius();
    let mut eig = Vec::with_capacity(n);
    let mut hi = n - 1;
    let mut sweeps = 0usize;
    let mut since_deflation = 0usize;
    loop {
        if hi == 0 {
            eig.push(h.get(0, 0));
            break;
        }
        let mut lo = hi;
        while lo > 0 {
            let sub = h.get(lo, lo - 1).norm();
            let diag = h.get(lo, lo).norm() + h.get(lo - 1, lo - 1).norm();
            if sub <= DEFLATION_TOL * diag || sub <= floor {
                h.set(lo, lo - 1, Complex64::new(0.0, 0.0));
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            eig.push(h.get(hi, hi));
            hi -= 1;
            since_deflation = 0;
            continue;
        }
        if hi - lo == 1 {
            let pair = quadratic(h.get(lo, lo), h.get(lo, hi), h.get(hi, lo), h.get(hi, hi));
            eig.extend_from_slice(&pair);
            if lo == 0 {
                break;
            }
            hi = lo - 1;
            since_deflation = 0;
            continue;
        }
        sweeps += 1;
        if sweeps > cap {
            return Err(Error::EigensolverNoConvergence(cap));
        }
        since_deflation += 1;
        let shift = if since_deflation % 11 == 10 {
            // exceptional shift to break cycles
            h.get(hi, hi) + Complex64::new(h.get(hi, hi - 1).norm() * 0.75, 0.0)
        } else {
            wilkinson_shift(h, hi)
        };
        qr_sweep(h, lo, hi, shift);
    }
    Ok(eig)
}

/// One shifted QR step `H - μI = QR`, `H <- RQ + μI` on rows/cols `lo..=hi`.
fn qr_sweep(h: &mut CMatrix, lo: usize, hi: usize, shift: Complex64) {
    for i in lo..=hi {
        h.set(i, i, h.get(i, i) - shift);
    }
    let mut rotations = Vec::with_capacity(hi - lo);
    for i in lo..hi {
        let a = h.get(i, i);
        let b = h.get(i + 1, i);
        let r = a.norm().hypot(b.norm());
        let (c, s) = if r == 0.0 {
            (1.0, Complex64::new(0.0, 0.0))
        } else if a.norm() == 0.0 {
            (0.0, b.conj() / b.norm())
        } else {
            (a.norm() / r, (a / a.norm()) * b.conj() / r)
        };
        for j in i..=hi {
            let x = h.get(i, j);
            let y = h.get(i + 1, j);
            h.set(i, j, x * c + s * y);
            h.set(i + 1, j, -s.conj() * x + y * c);
        }
        rotations.push((c, s));
    }
    for (t, &(c, s)) in rotations.iter().enumerate() {
        let i = lo + t;
        for r in lo..=(i + 2).min(hi) {
            let x = h.get(r, i);
            let y = h.get(r, i + 1);
            h.set(r, i, x * c + y * s.conj());
            h.set(r, i + 1, -x * s + y * c);
        }
    }
    for i in lo..=hi {
        h.set(i, i, h.get(i, i) + shift);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<Complex64>) -> Vec<Complex64> {
        v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        v
    }

    #[test]
    fn triangular_matrix() {
        let m = CMatrix::from_real(3, &[1.0, 5.0, -2.0, 0.0, 3.0, 7.0, 0.0, 0.0, -4.0]);
        let e = sorted(eigenvalues(&m).unwrap());
        for (got, want) in e.iter().zip([-4.0, 1.0, 3.0]) {
            assert!((got - Complex64::new(want, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn rotation_generator() {
        // 90 degree rotation in the plane plus a real direction
        let m = CMatrix::from_real(3, &[0.0, -2.0, 0.0, 2.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
        let e = sorted(eigenvalues(&m).unwrap());
        assert!((e[0] - Complex64::new(0.0, -2.0)).norm() < 1e-12);
        assert!((e[1] - Complex64::new(0.0, 2.0)).norm() < 1e-12);
        assert!((e[2] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn cyclic_permutation_gives_roots_of_unity() {
        for n in 3..9 {
            let mut m = CMatrix::zeros(n);
            for c in 0..n {
                m.set(c, (c + 1) % n, Complex64::new(1.0, 0.0));
            }
            let e = eigenvalues(&m).unwrap();
            assert_eq!(e.len(), n);
            for z in &e {
                assert!((z.powu(n as u32) - 1.0).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn trace_and_determinant_are_preserved() {
        // a non-normal complex matrix
        let mut m = CMatrix::zeros(4);
        let vals = [
            (1.0, 0.5),
            (2.0, -1.0),
            (0.0, 0.3),
            (4.0, 0.0),
            (-1.0, 0.0),
            (0.5, 0.5),
            (3.0, 1.0),
            (0.0, -2.0),
            (0.2, 0.0),
            (1.0, 1.0),
            (-2.0, 0.0),
            (1.0, 0.0),
            (0.0, 1.0),
            (0.0, 0.0),
            (1.5, -0.5),
            (0.7, 0.1),
        ];
        for (idx, (re, im)) in vals.iter().enumerate() {
            m.set(idx / 4, idx % 4, Complex64::new(*re, *im));
        }
        let e = eigenvalues(&m).unwrap();
        let trace: Complex64 = (0..4).map(|i| m.get(i, i)).sum();
        assert!((e.iter().sum::<Complex64>() - trace).norm() < 1e-10);
        // every eigenvalue makes M - zI singular: check via smallest |det|
        for z in e {
            assert!(det(&m, z).norm() < 1e-8, "{z}");
        }
    }

    fn det(m: &CMatrix, z: Complex64) -> Complex64 {
        let n = m.dim();
        let mut a: Vec<Vec<Complex64>> = (0..n)
            .map(|i| (0..n).map(|j| m.get(i, j) - if i == j { z } else { Complex64::new(0.0, 0.0) }).collect())
            .collect();
        let mut d = Complex64::new(1.0, 0.0);
        for k in 0..n {
            let p = (k..n).max_by(|&x, &y| a[x][k].norm().total_cmp(&a[y][k].norm())).unwrap();
            if p != k {
                a.swap(p, k);
                d = -d;
            }
            let piv = a[k][k];
            if piv.norm() == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            d *= piv;
            let pivot_row = a[k].clone();
            for row in a.iter_mut().skip(k + 1) {
                let f = row[k] / piv;
                for (x, v) in row.iter_mut().zip(&pivot_row).skip(k) {
                    *x -= f * v;
                }
            }
        }
        d
    }
}
