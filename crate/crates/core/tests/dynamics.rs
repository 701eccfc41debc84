mod common;

use std::collections::BTreeMap;

use common::{fd_jacobian, uniform_vec};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ringhopf::analyze::{check_balanced, check_balanced_with, ArrowTyping, Colouring};
use ringhopf::ring_model::{BuiltinModel, Linearization, RingNetwork, Symmetry, VectorField};
use ringhopf::simulate::{integrate, settle_and_sample, Trajectory};

fn builtins() -> Vec<VectorField> {
    vec![
        BuiltinModel::CubicZ3 { a: -2.0 }.vector_field(-0.9).unwrap(),
        BuiltinModel::CubicZ5 { a: -2.0 }.vector_field(-1.1).unwrap(),
        BuiltinModel::CubicRing {
            n: 6,
            couplings: vec![(1, 0.7), (2, -0.4), (5, 1.3)],
            quadratic: 0.2,
            symmetry: Symmetry::Cyclic,
        }
        .vector_field(0.3)
        .unwrap(),
        BuiltinModel::CubicRing {
            n: 7,
            couplings: vec![(1, -1.0), (6, -1.0)],
            quadratic: 0.0,
            symmetry: Symmetry::Dihedral,
        }
        .vector_field(-0.2)
        .unwrap(),
    ]
}

fn expression_field() -> VectorField {
    let net = RingNetwork::new(4, &[1, 3], 2, Symmetry::Cyclic).unwrap();
    let params = BTreeMap::from([("lambda".to_string(), 0.4), ("c".to_string(), 0.6)]);
    VectorField::from_expressions(
        net,
        &[
            "lambda*x[0] - x[1] + c*sin(u1[0]) - x[0]*(x[0]^2 + x[1]^2)",
            "x[0] + lambda*x[1] + 0.3*u3[1] - x[1]^3 + tanh(u1[1])",
        ],
        params,
        "lambda",
    )
    .unwrap()
}

fn dense(lin: &Linearization) -> Vec<Vec<f64>> {
    match lin {
        Linearization::Scalar(c) => c.matrix(),
        Linearization::Block(b) => b.dense_jacobian(),
    }
}

#[test]
fn linearization_matches_finite_differences() {
    let mut fields = builtins();
    fields.push(expression_field());
    for f in &fields {
        let lambda = f.lambda();
        let exact = dense(&f.linearize(lambda).unwrap());
        let zero = vec![0.0; f.network().state_dim()];
        let fd = fd_jacobian(|x| f.evaluate(x, lambda).unwrap(), &zero, 1e-5);
        for (row_e, row_f) in exact.iter().zip(&fd) {
            for (e, d) in row_e.iter().zip(row_f) {
                assert!((e - d).abs() < 1e-6, "{e} vs {d}");
            }
        }
    }
}

#[test]
fn flow_commutes_with_rotation() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut fields = builtins();
    fields.push(expression_field());
    for f in &fields {
        let net = f.network().clone();
        let x0 = uniform_vec(&mut rng, net.state_dim(), -0.5, 0.5);
        let plain = integrate(f, &x0, f.lambda(), 10.0, 0.01).unwrap();
        for shift in 1..net.n() {
            let rotated = integrate(f, &net.rotate_state(&x0, shift), f.lambda(), 10.0, 0.01).unwrap();
            for i in (0..plain.len()).step_by(97) {
                let expect = net.rotate_state(plain.state(i), shift);
                for (a, b) in rotated.state(i).iter().zip(&expect) {
                    assert!((a - b).abs() < 1e-9);
                }
            }
        }
    }
}

#[test]
fn dihedral_flow_commutes_with_reflection() {
    let f = &builtins()[3];
    let net = f.network().clone();
    let x0 = [0.3, -0.1, 0.2, 0.05, -0.4, 0.1, 0.25];
    let plain = integrate(f, &x0, f.lambda(), 10.0, 0.01).unwrap();
    let reflected = integrate(f, &net.reflect_state(&x0), f.lambda(), 10.0, 0.01).unwrap();
    let expect = net.reflect_state(plain.last_state());
    for (a, b) in reflected.last_state().iter().zip(&expect) {
        assert!((a - b).abs() < 1e-9);
    }
}

#[test]
fn mirrored_run_solves_the_negated_field() {
    for f in builtins() {
        let dim = f.network().state_dim();
        let x0: Vec<f64> = (0..dim).map(|i| 0.3 * ((i as f64) * 1.3).sin()).collect();
        let forward = integrate(&f, &x0, f.lambda(), 3.0, 0.0025).unwrap();
        let mirror = forward.time_mirror();
        let back = integrate(&f.negate(), forward.last_state(), f.lambda(), 3.0, 0.0025).unwrap();
        assert_eq!(mirror.len(), back.len());
        for i in 0..back.len() {
            for (a, b) in mirror.state(i).iter().zip(back.state(i)) {
                assert!((a - b).abs() < 1e-7, "sample {i}: {a} vs {b}");
            }
        }
        assert_eq!(mirror.time_mirror(), forward);
        let x = vec![0.2; dim];
        assert_eq!(f.negate().negate().evaluate(&x, 0.1).unwrap(), f.evaluate(&x, 0.1).unwrap());
    }
}

#[test]
fn rk4_is_fourth_order() {
    let f = BuiltinModel::CubicZ3 { a: -2.0 }.vector_field(-0.9).unwrap();
    let settled = settle_and_sample(&f, &[0.01, 0.0, -0.01], -0.9, 100.0, 1.0, 0.01, None).unwrap();
    let x0 = settled.last_state().to_vec();
    let end = |h: f64| integrate(&f, &x0, -0.9, 4.0, h).unwrap().last_state().to_vec();
    let reference = end(0.000625);
    let err = |h: f64| end(h).iter().zip(&reference).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    let (e1, e2, e3) = (err(0.08), err(0.04), err(0.02));
    let order1 = (e1 / e2).log2();
    let order2 = (e2 / e3).log2();
    assert!(order1 >= 3.8 && order2 >= 3.8, "orders {order1}, {order2}");
}

fn respects(tr: &Trajectory, col: &[usize]) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..tr.len() {
        let s = tr.state(i);
        for a in 0..col.len() {
            for b in 0..col.len() {
                if col[a] == col[b] {
                    worst = worst.max((s[a] - s[b]).abs());
                }
            }
        }
    }
    worst
}

fn seeded_state(col: &[usize]) -> Vec<f64> {
    col.iter().map(|&c| 0.4 * (c as f64 + 1.0).sin()).collect()
}

#[test]
fn balanced_colourings_give_invariant_subspaces() {
    let f = &builtins()[2];
    for col in [vec![0, 1, 0, 1, 0, 1], vec![0, 1, 2, 0, 1, 2], vec![0; 6]] {
        let c = Colouring::new(col.clone()).unwrap();
        assert!(check_balanced(f.network(), &c).unwrap());
        let tr = integrate(f, &seeded_state(&col), f.lambda(), 10.0, 0.01).unwrap();
        assert!(respects(&tr, &col) < 1e-9);
    }

    let twelve = BuiltinModel::CubicRing {
        n: 12,
        couplings: vec![(1, -0.5), (2, -0.5), (10, -0.5), (11, -0.5)],
        quadratic: 0.1,
        symmetry: Symmetry::Dihedral,
    }
    .vector_field(0.2)
    .unwrap();
    let parity: Vec<usize> = (0..12).map(|c| c % 2).collect();
    let c = Colouring::new(parity.clone()).unwrap();
    assert!(check_balanced_with(twelve.network(), &c, &ArrowTyping::Single).unwrap());
    let tr = integrate(&twelve, &seeded_state(&parity), 0.2, 10.0, 0.01).unwrap();
    assert!(respects(&tr, &parity) < 1e-9);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn any_balanced_colouring_is_flow_invariant(
        n in 3usize..=8,
        period_pick in 0usize..8,
        merge in prop::collection::vec(0usize..3, 8),
        a in prop::collection::vec(-1.5f64..1.5, 8),
    ) {
        // residues mod a divisor of n, with some classes merged
        let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
        let d = divisors[period_pick % divisors.len()];
        let mut col: Vec<usize> = (0..n).map(|c| merge[c % d]).collect();
        let mut map = Vec::new();
        for c in &mut col {
            let pos = map.iter().position(|m| m == c).unwrap_or_else(|| { map.push(*c); map.len() - 1 });
            *c = pos;
        }
        let couplings: Vec<(usize, f64)> = (1..n).map(|r| (r, a[r])).collect();
        let f = BuiltinModel::CubicRing { n, couplings, quadratic: 0.1, symmetry: Symmetry::Cyclic }
            .vector_field(a[0])
            .unwrap();
        let colouring = Colouring::new(col.clone()).unwrap();
        prop_assume!(check_balanced(f.network(), &colouring).unwrap());
        let tr = integrate(&f, &seeded_state(&col), a[0], 10.0, 0.01).unwrap();
        prop_assert!(respects(&tr, &col) < 1e-9);
    }
}
