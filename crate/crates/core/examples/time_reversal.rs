// Reversing time turns an anticlockwise wave into a clockwise one with
// the same nodes.

use ringhopf::analyze::{extract_pattern, glide_residual};
use ringhopf::hopf_predict::{predict, time_reverse};
use ringhopf::ring_model::{BuiltinModel, Linearization};
use ringhopf::simulate::{mode_seed, settle_and_sample};

pub fn run_example() -> ringhopf::Result<()> {
    let lambda = -0.9;
    let field = BuiltinModel::CubicZ3 { a: -2.0 }.vector_field(lambda)?;
    let Linearization::Scalar(c) = field.linearize(lambda)? else { unreachable!("scalar nodes") };
    let p = predict(&c, 1)?;
    let r = time_reverse(&p);
    println!("forward prediction  {:?} {:?}", p.direction, p.phase_fractions);
    println!("reversed prediction {:?} {:?}", r.direction, r.phase_fractions);

    let x0 = mode_seed(field.network(), 1, None, 1e-3);
    let tr = settle_and_sample(&field, &x0, lambda, 300.0, 40.0, 0.01, Some(p.period_limit))?;
    let forward = extract_pattern(&tr)?;
    // the mirrored samples solve ẋ = −f(x)
    let backward = extract_pattern(&tr.time_mirror())?;
    println!("forward run  {:?} {:.4?}", forward.direction, forward.fractions);
    println!("reversed run {:?} {:.4?}", backward.direction, backward.fractions);
    let glide: Vec<String> = glide_residual(&tr, forward.period).iter().map(|g| format!("{g:.2e}")).collect();
    println!("x(t) + x(t − T/2) relative RMS per node: {glide:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> ringhopf::Result<()> {
    run_example()
}
