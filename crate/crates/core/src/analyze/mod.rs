//! Measuring periods and phase patterns in trajectories, checking them
//! against predictions, and testing colourings for balance.

mod colouring;
mod pattern;

pub use colouring::{check_balanced, check_balanced_with, is_orbit_colouring, ArrowTyping, Colouring, OrbitSubgroup};
pub use pattern::{
    estimate_period, extract_pattern, extract_pattern_component, glide_residual, verify_prediction, PhasePattern,
    VerifyReport, DEFAULT_FRACTION_TOL,
};
