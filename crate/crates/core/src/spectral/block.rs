use num_complex::Complex64;
use serde::Serialize;

use super::coefficients::root_of_unity;
use super::eigen::{eigenvalues, CMatrix};
use crate::{Error, Result};

/// Linearisation of a ring with `l`-dimensional nodes:
/// `J = P ⊗ I + Σ_r Q_r ⊗ A^r` (just `P ⊗ I + Q ⊗ A` for nearest-neighbour
/// coupling). Matrices are `l × l`, row-major.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BlockCoefficients {
    n: usize,
    l: usize,
    p: Vec<f64>,
    couplings: Vec<(usize, Vec<f64>)>,
}

fn square_dim(len: usize) -> Option<usize> {
    let l = (len as f64).sqrt().round() as usize;
    (l * l == len && l > 0).then_some(l)
}

impl BlockCoefficients {
    /// Nearest-neighbour coupling `J = P ⊗ I + Q ⊗ A`.
    pub fn new(n: usize, p: Vec<f64>, q: Vec<f64>) -> Result<Self> {
        let l = square_dim(p.len()).ok_or(Error::DimensionMismatch { expected: 1, got: p.len() })?;
        Self::with_ranges(n, l, p, vec![(1, q)])
    }

    pub fn with_ranges(n: usize, l: usize, p: Vec<f64>, couplings: Vec<(usize, Vec<f64>)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewNodes(n));
        }
        if l == 0 {
            return Err(Error::ZeroNodeDim);
        }
        if p.len() != l * l {
            return Err(Error::DimensionMismatch { expected: l * l, got: p.len() });
        }
        for (r, q) in &couplings {
            if *r == 0 || *r >= n {
                return Err(Error::InvalidRange { range: *r, max: n - 1 });
            }
            if q.len() != l * l {
                return Err(Error::DimensionMismatch { expected: l * l, got: q.len() });
            }
        }
        Ok(BlockCoefficients { n, l, p, couplings })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn node_dim(&self) -> usize {
        self.l
    }

    pub fn p(&self) -> &[f64] {
        &self.p
    }

    pub fn couplings(&self) -> &[(usize, Vec<f64>)] {
        &self.couplings
    }

    /// Same blocks with `delta·I` added to `P`.
    pub fn shifted(&self, delta: f64) -> Self {
        let mut b = self.clone();
        for i in 0..self.l {
            b.p[i * self.l + i] += delta;
        }
        b
    }

    /// `P + Σ_r ζ^{rk} Q_r`.
    pub fn mode_matrix(&self, k: usize) -> CMatrix {
        let l = self.l;
        let mut m = CMatrix::from_real(l, &self.p);
        for (r, q) in &self.couplings {
            let z = root_of_unity(self.n, r * k);
            for i in 0..l {
                for j in 0..l {
                    m.set(i, j, m.get(i, j) + z * q[i * l + j]);
                }
            }
        }
        m
    }

    /// Dense `nl × nl` Jacobian in node-major layout (`index = c·l + i`),
    /// i.e. `I ⊗ P + Σ_r A^r ⊗ Q_r`.
    pub fn dense_jacobian(&self) -> Vec<Vec<f64>> {
        let (n, l) = (self.n, self.l);
        let mut j = vec![vec![0.0; n * l]; n * l];
        for c in 0..n {
            for a in 0..l {
                for b in 0..l {
                    j[c * l + a][c * l + b] += self.p[a * l + b];
                    for (r, q) in &self.couplings {
                        let src = (c + r) % n;
                        j[c * l + a][src * l + b] += q[a * l + b];
                    }
                }
            }
        }
        j
    }
}

/// Eigenvalues of one Fourier block `P + ζ^k Q`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BlockMode {
    pub k: usize,
    pub eigenvalues: Vec<Complex64>,
}

impl BlockMode {
    /// The eigenvalue with the largest real part.
    pub fn leading(&self) -> Complex64 {
        *self
            .eigenvalues
            .iter()
            .max_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)))
            .expect("non-empty block")
    }
}

/// Spectrum of `J` split by Fourier mode: the union over `k` of the
/// eigenvalues of `P + ζ^k Q` is the spectrum of `J`.
pub fn block_spectrum(b: &BlockCoefficients) -> Result<Vec<BlockMode>> {
    (0..b.n).map(|k| Ok(BlockMode { k, eigenvalues: eigenvalues(&b.mode_matrix(k))? })).collect()
}
