// Eigenvalues of a ring's linearization, one per Fourier mode.

use ringhopf::spectral::{circulant_spectrum, CouplingCoefficients};

pub fn run_example() -> ringhopf::Result<()> {
    // λ = 1 on the diagonal, range-2 coupling a = −2 on a three-ring
    let c = CouplingCoefficients::new(vec![1.0, 0.0, -2.0], false)?;
    println!("{:>3} {:>10} {:>10} {:>5}", "k", "re", "im", "mult");
    for m in circulant_spectrum(&c) {
        println!("{:>3} {:>10.6} {:>10.6} {:>5}", m.k, m.rho(), m.sigma(), m.multiplicity);
    }

    // a bidirectional six-ring: every mode except 0 and 3 is double
    let d = CouplingCoefficients::new(vec![0.0, 1.0, 0.0, 0.0, 0.0, 1.0], true)?;
    let mults: Vec<usize> = circulant_spectrum(&d).iter().map(|m| m.multiplicity).collect();
    println!("dihedral six-ring multiplicities: {mults:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> ringhopf::Result<()> {
    run_example()
}
