// Coupling strengths that put the real parts of the eigenvalues in a
// chosen order.

use ringhopf::spectral::{design_ordering, realized_ranking};

pub fn run_example() -> ringhopf::Result<()> {
    let n = 9;
    // rank of each mode 0..=4; mode 3 destabilizes first
    let wanted = [2, 4, 1, 0, 3];
    let c = design_ordering(n, &wanted)?;
    println!("coefficients:");
    for (j, a) in c.coefficients().iter().enumerate() {
        println!("  a{j} = {a:+.6}");
    }
    for k in 0..=n / 2 {
        println!("  ρ_{k} = {:+.6}", c.rho(k));
    }
    let got = realized_ranking(&c);
    println!("requested {wanted:?}, realized {got:?}");
    assert_eq!(got, wanted);
    Ok(())
}

#[allow(dead_code)]
fn main() -> ringhopf::Result<()> {
    run_example()
}
