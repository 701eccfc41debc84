// Balanced colourings give synchrony subspaces that the dynamics
// preserves.

use ringhopf::analyze::{check_balanced, check_balanced_with, is_orbit_colouring, ArrowTyping, Colouring};
use ringhopf::ring_model::{BuiltinModel, RingNetwork, Symmetry};
use ringhopf::simulate::integrate;

pub fn run_example() -> ringhopf::Result<()> {
    let six = RingNetwork::unidirectional(6)?;
    for labels in [vec![0, 1, 0, 1, 0, 1], vec![0, 1, 2, 0, 1, 2], vec![0, 0, 1, 1, 1, 1]] {
        let col = Colouring::new(labels.clone())?;
        println!(
            "six-ring {labels:?}: balanced {}, orbit colouring {:?}",
            check_balanced(&six, &col)?,
            is_orbit_colouring(&six, &col)?
        );
    }

    let twelve = RingNetwork::new(12, &[1, 2, 10, 11], 1, Symmetry::Dihedral)?;
    let parity = Colouring::new((0..12).map(|c| c % 2).collect())?;
    println!(
        "twelve-ring parity, one arrow type: balanced {}",
        check_balanced_with(&twelve, &parity, &ArrowTyping::Single)?
    );

    // start on the synchrony subspace of (0,1,2,0,1,2) and stay there
    let field =
        BuiltinModel::CubicRing { n: 6, couplings: vec![(1, -1.2)], quadratic: 0.0, symmetry: Symmetry::Cyclic }
            .vector_field(0.2)?;
    let tr = integrate(&field, &[0.3, -0.1, 0.2, 0.3, -0.1, 0.2], 0.2, 10.0, 0.01)?;
    let end = tr.last_state();
    println!("after t = 10: {end:.4?}, nodes 0 and 3 differ by {:.1e}", (end[0] - end[3]).abs());
    Ok(())
}

#[allow(dead_code)]
fn main() -> ringhopf::Result<()> {
    run_example()
}
