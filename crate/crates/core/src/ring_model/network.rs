use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    Cyclic,
    Dihedral,
}

/// A ring of `n` identical nodes, each with an `node_dim`-dimensional state.
///
/// Node `c` receives one arrow from node `c + r (mod n)` for every `r` in
/// `ranges`. For a dihedral ring the range set is closed under `r -> n - r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingNetwork {
    n: usize,
    ranges: Vec<usize>,
    node_dim: usize,
    symmetry: Symmetry,
}

impl RingNetwork {
    pub fn new(n: usize, ranges: &[usize], node_dim: usize, symmetry: Symmetry) -> Result<Self> {
        build_network(n, ranges, node_dim, symmetry, false)
    }

    /// Nearest-neighbour cyclic ring with scalar nodes.
    pub fn unidirectional(n: usize) -> Result<Self> {
        Self::new(n, &[1], 1, Symmetry::Cyclic)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ranges(&self) -> &[usize] {
        &self.ranges
    }

    pub fn node_dim(&self) -> usize {
        self.node_dim
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    /// Length of the full state vector, `n * node_dim`.
    pub fn state_dim(&self) -> usize {
        self.n * self.node_dim
    }

    /// Index of the node that feeds `node` through range `r`.
    pub fn source(&self, node: usize, r: usize) -> usize {
        (node + r) % self.n
    }

    /// Applies the generator α of Zₙ to a state: `(αx)_c = x_{c+1}`.
    pub fn rotate_state(&self, state: &[f64], shift: usize) -> Vec<f64> {
        let l = self.node_dim;
        let mut out = vec![0.0; state.len()];
        for c in 0..self.n {
            let src = (c + shift) % self.n;
            out[c * l..(c + 1) * l].copy_from_slice(&state[src * l..(src + 1) * l]);
        }
        out
    }

    /// Applies the reflection `c -> -c (mod n)` to a state.
    pub fn reflect_state(&self, state: &[f64]) -> Vec<f64> {
        let l = self.node_dim;
        let mut out = vec![0.0; state.len()];
        for c in 0..self.n {
            let src = (self.n - c) % self.n;
            out[c * l..(c + 1) * l].copy_from_slice(&state[src * l..(src + 1) * l]);
        }
        out
    }
}

/// Validates a ring description.
///
/// With `symmetrize` set, a dihedral request gets its ranges closed under
/// `r -> n - r`; otherwise an asymmetric range set is rejected.
pub fn build_network(
    n: usize,
    ranges: &[usize],
    node_dim: usize,
    symmetry: Symmetry,
    symmetrize: bool,
) -> Result<RingNetwork> {
    if n < 2 {
        return Err(Error::TooFewNodes(n));
    }
    if node_dim == 0 {
        return Err(Error::ZeroNodeDim);
    }
    if ranges.is_empty() {
        return Err(Error::EmptyRanges);
    }
    let mut set = BTreeSet::new();
    for &r in ranges {
        if r == 0 || r >= n {
            return Err(Error::InvalidRange { range: r, max: n - 1 });
        }
        set.insert(r);
    }
    if symmetry == Symmetry::Dihedral {
        if symmetrize {
            let partners: Vec<usize> = set.iter().map(|&r| n - r).collect();
            set.extend(partners);
        } else if let Some(&r) = set.iter().find(|&&r| !set.contains(&(n - r))) {
            return Err(Error::DihedralAsymmetry { range: r, partner: n - r });
        }
    }
    Ok(RingNetwork { n, ranges: set.into_iter().collect(), node_dim, symmetry })
}
