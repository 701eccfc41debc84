// A five-ring just past a Hopf bifurcation settles onto a rotating wave
// whose phase lags match the prediction from the critical eigenvalue.

use ringhopf::analyze::{extract_pattern, verify_prediction, DEFAULT_FRACTION_TOL};
use ringhopf::hopf_predict::predict;
use ringhopf::ring_model::{BuiltinModel, Linearization};
use ringhopf::simulate::{mode_seed, settle_and_sample};

pub fn run_example() -> ringhopf::Result<()> {
    let lambda = -1.1;
    let field = BuiltinModel::CubicZ5 { a: -2.0 }.vector_field(lambda)?;
    let Linearization::Scalar(c) = field.linearize(lambda)? else { unreachable!("scalar nodes") };
    let p = predict(&c, 2)?;
    println!("predicted {:?} wave, fractions {:?}, period → {:.4}", p.direction, p.phase_fractions, p.period_limit);

    let x0 = mode_seed(field.network(), p.k, None, 1e-3);
    let tr = settle_and_sample(&field, &x0, lambda, 500.0, 100.0, 0.01, Some(p.period_limit))?;
    let pattern = extract_pattern(&tr)?;
    let report = verify_prediction(&p, &pattern, DEFAULT_FRACTION_TOL, false);
    println!(
        "measured  {:?} wave, fractions {:.4?}, period {:.4}",
        pattern.direction, pattern.fractions, pattern.period
    );
    println!("match: {}, max fraction error {:.2e}", report.matched, report.max_fraction_error);
    Ok(())
}

#[allow(dead_code)]
fn main() -> ringhopf::Result<()> {
    run_example()
}
