mod common;

use common::{dense_eigenvalues, multiset_distance, naive_mu, permutations, ranks_desc, uniform_vec};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ringhopf::spectral::{
    block_spectrum, circulant_spectrum, classify_first_bifurcation, design_ordering, realized_ranking,
    rotation_direction, BifurcationKind, BlockCoefficients, CouplingCoefficients, Direction, Sweep,
};

#[test]
fn circulant_spectrum_matches_dense_eigensolver() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let n = rng.random_range(2..=12);
        let c = CouplingCoefficients::new(uniform_vec(&mut rng, n, -2.0, 2.0), false).unwrap();
        let ours: Vec<Complex64> = circulant_spectrum(&c).iter().map(|m| m.mu).collect();
        let dense = dense_eigenvalues(&c.matrix());
        assert!(multiset_distance(&ours, &dense) < 1e-8, "n = {n}");
    }
}

#[test]
fn mu_matches_direct_summation() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..50 {
        let n = rng.random_range(2..=20);
        let a = uniform_vec(&mut rng, n, -3.0, 3.0);
        let c = CouplingCoefficients::new(a.clone(), false).unwrap();
        for k in 0..n {
            assert!((c.mu(k) - naive_mu(&a, k)).norm() < 1e-12);
        }
    }
}

#[test]
fn block_spectrum_is_union_of_fourier_blocks() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..50 {
        let n = rng.random_range(2..=8);
        let l = rng.random_range(1..=3);
        let b =
            BlockCoefficients::new(n, uniform_vec(&mut rng, l * l, -2.0, 2.0), uniform_vec(&mut rng, l * l, -2.0, 2.0))
                .unwrap();
        let ours: Vec<Complex64> = block_spectrum(&b).unwrap().into_iter().flat_map(|m| m.eigenvalues).collect();
        let dense = dense_eigenvalues(&b.dense_jacobian());
        assert!(multiset_distance(&ours, &dense) < 1e-8, "n = {n}, l = {l}");
    }
}

#[test]
fn nearest_neighbour_theorem_for_n_up_to_25() {
    for n in 3..=25 {
        for a1 in [-1.0, 1.0] {
            let c = CouplingCoefficients::nearest_neighbour(n, 0.0, a1).unwrap();
            let fb = classify_first_bifurcation(&c, Sweep::ShiftA0).unwrap();
            let hopf = n % 2 == 1 && a1 < 0.0;
            assert_eq!(fb.kind == BifurcationKind::Hopf, hopf, "n = {n}, a1 = {a1}");
            if hopf {
                assert_eq!(fb.critical_modes, vec![n / 2, n / 2 + 1]);
            }
        }
    }
}

#[test]
fn design_realizes_every_ordering_for_small_rings() {
    for n in 2..=9 {
        for perm in permutations(n / 2 + 1) {
            let c = design_ordering(n, &perm).unwrap();
            let rho: Vec<f64> = (0..=n / 2).map(|k| naive_mu(c.coefficients(), k).re).collect();
            assert_eq!(ranks_desc(&rho), perm);
            let mut sorted = rho.clone();
            sorted.sort_by(|a, b| b.total_cmp(a));
            assert!(sorted.windows(2).all(|w| w[0] - w[1] >= 0.5));
            assert_eq!(realized_ranking(&c), perm);
        }
    }
}

#[test]
fn design_random_orderings_up_to_fifteen() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..50 {
        let n = rng.random_range(10..=15);
        let mut perm: Vec<usize> = (0..=n / 2).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.random_range(0..=i));
        }
        let c = design_ordering(n, &perm).unwrap();
        let rho: Vec<f64> = (0..=n / 2).map(|k| naive_mu(c.coefficients(), k).re).collect();
        assert_eq!(ranks_desc(&rho), perm);
    }
}

fn coefficients() -> impl Strategy<Value = Vec<f64>> {
    (2usize..=12).prop_flat_map(|n| prop::collection::vec(-3.0f64..3.0, n))
}

proptest! {
    #[test]
    fn conjugate_pairing(a in coefficients()) {
        let c = CouplingCoefficients::new(a, false).unwrap();
        let n = c.n();
        for k in 0..n {
            prop_assert!((c.mu(n - k) - c.mu(k).conj()).norm() < 1e-12);
        }
    }

    #[test]
    fn shift_translates_every_eigenvalue(a in coefficients(), d in -5.0f64..5.0) {
        let c = CouplingCoefficients::new(a, false).unwrap();
        let s = c.shifted(d);
        for k in 0..c.n() {
            prop_assert!((s.mu(k) - c.mu(k) - d).norm() < 1e-12);
        }
    }

    #[test]
    fn reversing_the_ring_reverses_rotation(a in coefficients()) {
        // reading c − r instead of c + r conjugates every μ_k
        let n = a.len();
        let mut mirrored = vec![a[0]];
        mirrored.extend((1..n).map(|r| a[n - r]));
        let c = CouplingCoefficients::new(a, false).unwrap();
        let m = CouplingCoefficients::new(mirrored, false).unwrap();
        for k in 1..n.div_ceil(2) {
            let d = rotation_direction(&c, k).unwrap();
            let e = rotation_direction(&m, k).unwrap();
            if d == Direction::NotRotating {
                prop_assert_eq!(e, Direction::NotRotating);
            } else {
                prop_assert_eq!(e, d.reversed());
            }
        }
    }

    #[test]
    fn dihedral_spectra_are_real(half in prop::collection::vec(-2.0f64..2.0, 2..7), odd in any::<bool>()) {
        let big = half.len() - 1;
        let n = if odd { 2 * big + 1 } else { 2 * big };
        prop_assume!(n >= 2);
        let mut a = vec![0.0; n];
        for (r, v) in half.iter().enumerate() {
            a[r] = *v;
            a[(n - r) % n] = *v;
        }
        let c = CouplingCoefficients::new(a, true).unwrap();
        for k in 0..n {
            prop_assert!(c.mu(k).im.abs() < 1e-12);
            prop_assert!((c.mu(k) - c.mu(n - k)).norm() < 1e-12);
        }
    }
}
