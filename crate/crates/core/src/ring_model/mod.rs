//! Ring topology, symmetry class and admissible vector fields.

mod config;
pub mod expr;
mod field;
mod network;

pub use config::{ModelSpec, NetworkConfig};
pub use field::{BuiltinModel, Linearization, VectorField};
pub use network::{build_network, RingNetwork, Symmetry};
