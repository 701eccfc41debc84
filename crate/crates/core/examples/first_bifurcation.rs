// Which mode destabilizes first as the diagonal coefficient grows.

use ringhopf::spectral::{classify_first_bifurcation, CouplingCoefficients, Sweep};

pub fn run_example() -> ringhopf::Result<()> {
    for n in 3..=8 {
        for a1 in [-1.0, 1.0] {
            let c = CouplingCoefficients::nearest_neighbour(n, 0.0, a1)?;
            let fb = classify_first_bifurcation(&c, Sweep::ShiftA0)?;
            println!(
                "n={n} a1={a1:+}: {:?} in modes {:?} at a0 = {:.4}, ω = {:.4}",
                fb.kind, fb.critical_modes, fb.crossing_value, fb.omega
            );
        }
    }
    // longer-range coupling makes a Hopf-first four-ring possible
    let c = CouplingCoefficients::new(vec![0.0, 0.1, -1.0, 0.0], false)?;
    let fb = classify_first_bifurcation(&c, Sweep::ShiftA0)?;
    println!("n=4 with a2 = -1: {:?} in modes {:?}", fb.kind, fb.critical_modes);
    Ok(())
}

#[allow(dead_code)]
fn main() -> ringhopf::Result<()> {
    run_example()
}
