//! Spectral Hopf bifurcation analysis for rings of coupled ODEs with cyclic
//! (Zₙ) or dihedral (Dₙ) symmetry.
//!
//! The crate is organised around the pipeline a ring model goes through:
//!
//! * [`ring_model`] describes the network topology and the admissible vector
//!   field on it (built-in cubic rings or user expressions).
//! * [`spectral`] computes eigenvalues of the linearisation at the origin in
//!   closed form, classifies the first bifurcation, reports the rotation
//!   direction of a Hopf mode and solves the inverse ordering problem.
//! * [`hopf_predict`] turns a critical mode into a phase-pattern prediction.
//! * [`simulate`] integrates the ODE with fixed-step RK4.
//! * [`analyze`] measures period and phase fractions from a trajectory and
//!   checks them against a prediction; it also tests colourings for balance.
//! * [`cli`] wires everything into the `ringhopf` command line tool.
//!
//! Coupling convention: range `r` means node `c` reads node `c + r (mod n)`,
//! so the coefficient `a_r` sits at `L[c][c + r]` of the circulant Jacobian and
//! `μ_k = Σ a_r ζ^{rk}` with `ζ = e^{2πi/n}`.

pub mod analyze;
pub mod cli;
mod error;
pub mod hopf_predict;
pub mod ring_model;
pub mod simulate;
pub mod spectral;

pub use error::{Error, Result};
