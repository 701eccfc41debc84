use std::collections::BTreeMap;

use serde::Serialize;

use crate::ring_model::{RingNetwork, Symmetry};
use crate::{Error, Result};

/// Assignment of a colour label to every node. Labels are `0..m` with
/// every label used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring(Vec<usize>);

impl Colouring {
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidColouring("empty colouring".into()));
        }
        let m = labels.iter().max().copied().unwrap_or(0) + 1;
        let mut used = vec![false; m];
        for &c in &labels {
            used[c] = true;
        }
        if let Some(missing) = used.iter().position(|u| !u) {
            return Err(Error::InvalidColouring(format!("label {missing} is unused; labels must be 0..{m}")));
        }
        Ok(Colouring(labels))
    }

    pub fn labels(&self) -> &[usize] {
        &self.0
    }

    pub fn colours(&self) -> usize {
        self.0.iter().max().copied().unwrap_or(0) + 1
    }

    /// True when both colourings induce the same partition of the nodes.
    pub fn same_partition(&self, other: &[usize]) -> bool {
        let a = &self.0;
        a.len() == other.len() && (0..a.len()).all(|i| (0..a.len()).all(|j| (a[i] == a[j]) == (other[i] == other[j])))
    }
}

/// How arrows are grouped into types for the balance test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrowTyping {
    /// One arrow type per range.
    PerRange,
    /// Ranges `r` and `n − r` share a type.
    Mirrored,
    /// All arrows have the same type.
    Single,
}

impl ArrowTyping {
    pub fn default_for(net: &RingNetwork) -> Self {
        match net.symmetry() {
            Symmetry::Cyclic => ArrowTyping::PerRange,
            Symmetry::Dihedral => ArrowTyping::Mirrored,
        }
    }

    fn type_of(&self, n: usize, r: usize) -> usize {
        match self {
            ArrowTyping::PerRange => r,
            ArrowTyping::Mirrored => r.min(n - r),
            ArrowTyping::Single => 0,
        }
    }
}

fn check_len(net: &RingNetwork, col: &Colouring) -> Result<()> {
    if col.0.len() != net.n() {
        return Err(Error::InvalidColouring(format!("{} labels for {} nodes", col.0.len(), net.n())));
    }
    Ok(())
}

/// Balance with the default arrow typing for the ring's symmetry.
pub fn check_balanced(net: &RingNetwork, col: &Colouring) -> Result<bool> {
    check_balanced_with(net, col, &ArrowTyping::default_for(net))
}

/// A colouring is balanced when equally coloured nodes receive the same
/// multiset of (arrow type, source colour) pairs.
pub fn check_balanced_with(net: &RingNetwork, col: &Colouring, typing: &ArrowTyping) -> Result<bool> {
    check_len(net, col)?;
    let n = net.n();
    let signature = |c: usize| {
        let mut s: Vec<(usize, usize)> =
            net.ranges().iter().map(|&r| (typing.type_of(n, r), col.0[net.source(c, r)])).collect();
        s.sort_unstable();
        s
    };
    let mut seen: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for c in 0..n {
        let sig = signature(c);
        match seen.get(&col.0[c]) {
            Some(prev) if *prev != sig => return Ok(false),
            Some(_) => {}
            None => {
                seen.insert(col.0[c], sig);
            }
        }
    }
    Ok(true)
}

/// Subgroup of the ring's symmetry group, generated by rotation by `step`
/// and optionally the reflection `c ↦ reflection − c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitSubgroup {
    pub step: usize,
    pub reflection: Option<usize>,
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    let mut i = i;
    while parent[i] != r {
        let next = parent[i];
        parent[i] = r;
        i = next;
    }
    r
}

fn orbits(n: usize, g: &OrbitSubgroup) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    let join = |a: usize, b: usize, parent: &mut Vec<usize>| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    };
    for c in 0..n {
        join(c, (c + g.step) % n, &mut parent);
        if let Some(s) = g.reflection {
            join(c, (s + n - c) % n, &mut parent);
        }
    }
    (0..n).map(|c| find(&mut parent, c)).collect()
}

/// Returns a subgroup of the ring's symmetry group whose orbits are exactly
/// the colour classes, if there is one.
pub fn is_orbit_colouring(net: &RingNetwork, col: &Colouring) -> Result<Option<OrbitSubgroup>> {
    check_len(net, col)?;
    let n = net.n();
    for step in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let rot = OrbitSubgroup { step, reflection: None };
        if col.same_partition(&orbits(n, &rot)) {
            return Ok(Some(rot));
        }
        if net.symmetry() == Symmetry::Dihedral {
            for s in 0..step {
                let g = OrbitSubgroup { step, reflection: Some(s) };
                if col.same_partition(&orbits(n, &g)) {
                    return Ok(Some(g));
                }
            }
        }
    }
    Ok(None)
}
