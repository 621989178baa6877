use std::f64::consts::PI;

use frameness_core::channel::theorem1_distance;
use frameness_core::entanglement::{
    dephasing_channel, dephasing_upper_bound, hashing_lower_bound, optimize_two_qubit_bound,
    two_qubit_parameterized_unitary, BipartiteState, TwoQubitOptimizer,
};
use frameness_core::linalg;
use frameness_core::operator::{binary_entropy, Subsystem};
use frameness_core::random;

fn random_two_qubit(seed: u64, i: u64) -> BipartiteState {
    let mut rng = random::stream(seed, i);
    let rank = 1 + (i as usize % 4);
    BipartiteState::new(2, 2, random::random_density_with_rank(&mut rng, 4, rank)).unwrap()
}

#[test]
fn hashing_never_exceeds_the_upper_bound() {
    let optimizer = TwoQubitOptimizer { grid: 16, ..Default::default() };
    for i in 0..30 {
        let rho = random_two_qubit(50, i);
        for side in [Subsystem::A, Subsystem::B] {
            let report = optimizer.run(&rho, side).unwrap();
            assert!(report.lower <= report.upper + 1e-6, "{report:?}");
            assert!(report.upper >= -1e-9);
        }
    }
}

#[test]
fn bound_is_periodic_in_theta() {
    let rho = random_two_qubit(51, 3);
    for &(t, g) in &[(0.2, 0.4), (1.0, 2.5), (2.2, 5.0)] {
        let a = dephasing_upper_bound(&rho, &linalg::eigh(&two_qubit_parameterized_unitary(t, g)).vectors, Subsystem::B)
            .unwrap();
        let b = dephasing_upper_bound(
            &rho,
            &linalg::eigh(&two_qubit_parameterized_unitary(t + PI, g)).vectors,
            Subsystem::B,
        )
        .unwrap();
        assert!((a - b).abs() < 1e-10);
    }
}

#[test]
fn lifted_dephasing_is_unital_idempotent_and_matches_the_gap() {
    for i in 0..10 {
        let rho = random_two_qubit(52, i);
        let u = random::haar_unitary(&mut random::stream(53, i), 2);
        let lifted = dephasing_channel(&u).unwrap().lift(2, Subsystem::B);
        assert!(lifted.is_unital() && lifted.is_idempotent());
        let once = lifted.apply(rho.state()).unwrap();
        let twice = lifted.apply(&once).unwrap();
        assert!(linalg::max_abs_diff(once.matrix(), twice.matrix()) < 1e-9);
        let gap = theorem1_distance(&lifted, rho.state()).unwrap();
        assert!((gap - dephasing_upper_bound(&rho, &u, Subsystem::B).unwrap()).abs() < 1e-9);
    }
}

#[test]
fn zero_bound_exactly_on_fixed_points() {
    let fixed = BipartiteState::new(2, 2, frameness_core::operator::DensityOperator::diagonal(&[0.1, 0.2, 0.3, 0.4]).unwrap())
        .unwrap();
    assert!(dephasing_upper_bound(&fixed, &linalg::identity(2), Subsystem::B).unwrap().abs() < 1e-10);
    let moved = random_two_qubit(54, 2);
    let value = dephasing_upper_bound(&moved, &linalg::identity(2), Subsystem::B).unwrap();
    let lifted = dephasing_channel(&linalg::identity(2)).unwrap().lift(2, Subsystem::B);
    let image = lifted.apply(moved.state()).unwrap();
    assert!(linalg::max_abs_diff(image.matrix(), moved.state().matrix()) > 1e-8);
    assert!(value > 1e-8);
}

#[test]
fn example_family_on_both_sides() {
    for p in [0.6, 0.9] {
        let rho = BipartiteState::bell_diagonal(p).unwrap();
        let expected = 1.0 - binary_entropy(p).unwrap();
        for side in [Subsystem::A, Subsystem::B] {
            let report = optimize_two_qubit_bound(&rho, side).unwrap();
            assert!((report.upper - expected).abs() < 1e-4);
            assert!(report.tight);
        }
        assert!((hashing_lower_bound(&rho) - expected).abs() < 1e-12);
    }
}
