// Rings of two-variable nodes: the Jacobian `P ⊗ I + Q ⊗ A` splits into
// one small block per Fourier mode.

use std::collections::BTreeMap;

use ringhopf::analyze::extract_pattern_component;
use ringhopf::hopf_predict::predict_block;
use ringhopf::ring_model::{Linearization, RingNetwork, Symmetry, VectorField};
use ringhopf::simulate::{mode_seed, settle_and_sample};
use ringhopf::spectral::block_spectrum;

pub fn run_example() -> ringhopf::Result<()> {
    let net = RingNetwork::new(4, &[1], 2, Symmetry::Cyclic)?;
    let params = BTreeMap::from([("lambda".to_string(), -0.3), ("c".to_string(), 0.5)]);
    let field = VectorField::from_expressions(
        net,
        &["lambda*x[0] - x[1] - x[0]*(x[0]^2 + x[1]^2) + c*u1[1]", "x[0] + lambda*x[1] - x[1]*(x[0]^2 + x[1]^2)"],
        params,
        "lambda",
    )?;
    let Linearization::Block(b) = field.linearize(field.lambda())? else { unreachable!("two-variable nodes") };
    let modes = block_spectrum(&b)?;
    for m in &modes {
        let lead = m.leading();
        println!("k={} leading eigenvalue {:+.4} {:+.4}i", m.k, lead.re, lead.im);
    }
    let best = modes.iter().max_by(|x, y| x.leading().re.total_cmp(&y.leading().re)).expect("modes");
    let k = best.k.min(4 - best.k);
    let p = predict_block(&b, k)?;
    println!("critical k = {k}: {:?}, fractions {:?}", p.direction, p.phase_fractions);

    let x0 = mode_seed(field.network(), k, None, 1e-2);
    let tr = settle_and_sample(&field, &x0, field.lambda(), 200.0, 40.0, 0.01, Some(p.period_limit))?;
    let pattern = extract_pattern_component(&tr, 0)?;
    println!(
        "measured fractions {:.3?}, period {:.3} (linear {:.3})",
        pattern.fractions, pattern.period, p.period_limit
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> ringhopf::Result<()> {
    run_example()
}
