//! Closed-form spectra of ring Jacobians and what they imply for the first
//! bifurcation from the origin.

mod block;
mod circulant;
mod classify;
mod coefficients;
mod design;
pub mod eigen;

pub use block::{block_spectrum, BlockCoefficients, BlockMode};
pub use circulant::{circulant_spectrum, SpectralMode};
pub use classify::{
    classify_first_bifurcation, hopf_nondegeneracy, rotation_direction, BifurcationKind, Direction, FirstBifurcation,
    NondegeneracyReport, Sweep,
};
pub use coefficients::{root_of_unity, CouplingCoefficients};
pub use design::{design_ordering, lagrange_interpolate, realized_ranking};
