use frameness_core::budget::DimensionBudget;
use frameness_core::channel::image_fix_equivalence_check;
use frameness_core::frameness::{
    g_asymmetry, invariant_state_oracle, max_su2_asymmetry_value, max_u1_asymmetry_value, maximal_su2_state,
    maximal_u1_state, su2_pure_asymmetry_closed_form, su2_schmidt_data, u1_asymmetry_closed_form, TwirlOperation,
};
use frameness_core::group::{ChargeGrading, CollectiveSpinRep, FiniteGroupRep};
use frameness_core::linalg::{self, c, CMatrix};
use frameness_core::operator::{relative_entropy, DensityOperator};
use frameness_core::random;
use proptest::prelude::*;
use rand::Rng;

fn spin(n: u32) -> CollectiveSpinRep {
    CollectiveSpinRep::build(n, &DimensionBudget::default()).unwrap()
}

/// An assortment of groups small enough for every property below.
fn groups() -> (Vec<FiniteGroupRep>, Vec<ChargeGrading>, Vec<CollectiveSpinRep>) {
    let finite = vec![
        FiniteGroupRep::z2_phase_flip(),
        FiniteGroupRep::quaternion(),
        FiniteGroupRep::dihedral4(),
        FiniteGroupRep::cyclic_phase(&ChargeGrading::ladder(4), 3).unwrap(),
    ];
    let charges = vec![
        ChargeGrading::ladder(3),
        ChargeGrading::new(vec![0, 1, 1, 2, 2, 2]).unwrap(),
        ChargeGrading::hamming_weight(3, &DimensionBudget::default()).unwrap(),
    ];
    (finite, charges, vec![spin(2), spin(4)])
}

fn each_twirl(mut f: impl FnMut(&TwirlOperation<'_>)) {
    let (finite, charges, spins) = groups();
    for rep in &finite {
        f(&TwirlOperation::Finite(rep));
    }
    for g in &charges {
        f(&TwirlOperation::U1(g));
    }
    for rep in &spins {
        f(&TwirlOperation::Su2(rep));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn twirl_is_covariant(seed in any::<u64>()) {
        each_twirl(|t| {
            let mut rng = random::stream(seed, 0);
            let rho = random::random_density(&mut rng, t.dim());
            let base = g_asymmetry(t, &rho).unwrap();
            for u in t.sample_elements(&mut rng, 4) {
                let moved = rho.conjugated(&u).unwrap();
                let twirled = t.apply(&moved).unwrap();
                let expected = linalg::conjugate(&u, base.twirled_state.matrix());
                assert!(linalg::max_abs_diff(twirled.matrix(), &expected) < 1e-9);
                let a = g_asymmetry(t, &moved).unwrap().asymmetry;
                assert!((a - base.asymmetry).abs() < 1e-8);
            }
        });
    }

    #[test]
    fn covariant_operations_do_not_increase_asymmetry(seed in any::<u64>()) {
        each_twirl(|t| {
            let mut rng = random::stream(seed, 1);
            let rho = random::random_density(&mut rng, t.dim());
            let before = g_asymmetry(t, &rho).unwrap().asymmetry;

            // A random mixture of group conjugations.
            let elements = t.sample_elements(&mut rng, 3);
            let weights = random::simplex_point(&mut rng, elements.len());
            let mut mixed = CMatrix::zeros(t.dim(), t.dim());
            for (w, u) in weights.iter().zip(&elements) {
                mixed += linalg::conjugate(u, rho.matrix()) * c(*w, 0.0);
            }
            let mixed = DensityOperator::new(mixed).unwrap();
            assert!(g_asymmetry(t, &mixed).unwrap().asymmetry <= before + 1e-9);

            // An invariant unitary: exp(i·twirl(H)) commutes with every T(g).
            let h = t.apply_matrix(&random::random_hermitian(&mut rng, t.dim())).unwrap();
            let v = linalg::expm_i_hermitian(&h);
            let rotated = rho.conjugated(&v).unwrap();
            assert!((g_asymmetry(t, &rotated).unwrap().asymmetry - before).abs() < 1e-8);
        });
    }

    #[test]
    fn minimizer_is_the_twirl(seed in any::<u64>()) {
        each_twirl(|t| {
            let mut rng = random::stream(seed, 2);
            let rank = rng.random_range(1..=t.dim());
            let rho = random::random_density_with_rank(&mut rng, t.dim(), rank);
            let r = g_asymmetry(t, &rho).unwrap();
            let at_twirl = relative_entropy(&rho, &r.twirled_state).unwrap();
            assert!((at_twirl - r.asymmetry).abs() < 1e-8);
            let oracle = invariant_state_oracle(t, &rho, 10, seed).unwrap();
            assert!(oracle >= r.asymmetry - 1e-8);
            assert!(r.asymmetry >= -1e-9);
        });
    }
}

#[test]
fn twirls_are_unital_idempotent_channels() {
    each_twirl(|t| {
        let ch = t.kraus_channel();
        assert!(ch.is_unital());
        assert!(ch.is_idempotent());
        let report = image_fix_equivalence_check(&ch, 10, 5);
        assert!(report.all_fixed() && report.consistent());
        let mut rng = random::stream(6, 0);
        let rho = random::random_density(&mut rng, t.dim());
        let direct = t.apply(&rho).unwrap();
        assert!(linalg::max_abs_diff(direct.matrix(), ch.apply(&rho).unwrap().matrix()) < 1e-9);
    });
}

#[test]
fn su2_twirl_ignores_multiplicity_basis() {
    let rep = spin(4);
    let mut rng = random::stream(11, 0);
    let mut rotated = rep.clone();
    for s in rep.sectors().iter().filter(|s| s.multiplicity > 1) {
        let u = random::haar_unitary(&mut rng, s.multiplicity);
        rotated = rotated.with_multiplicity_rotation(s.j, &u).unwrap();
    }
    for _ in 0..5 {
        let rho = random::random_density(&mut rng, 16);
        let a = TwirlOperation::Su2(&rep).apply(&rho).unwrap();
        let b = TwirlOperation::Su2(&rotated).apply(&rho).unwrap();
        assert!(linalg::max_abs_diff(a.matrix(), b.matrix()) < 1e-10);
    }
}

#[test]
fn su2_closed_form_matches_twirl_on_random_pure_states() {
    for n in [2u32, 4] {
        let rep = spin(n);
        for i in 0..20 {
            let mut rng = random::stream(100 + n as u64, i);
            let psi = random::random_pure(&mut rng, rep.dim());
            let (p, q) = su2_schmidt_data(&rep, &psi).unwrap();
            let closed = su2_pure_asymmetry_closed_form(&p, &q, rep.j_max()).unwrap();
            let direct = g_asymmetry(&TwirlOperation::Su2(&rep), &psi.projector()).unwrap().asymmetry;
            assert!((closed - direct).abs() < 1e-7, "N = {n}, sample {i}: {closed} vs {direct}");
        }
    }
}

#[test]
fn u1_closed_form_matches_twirl() {
    let grading = ChargeGrading::ladder(5);
    for i in 0..20 {
        let mut rng = random::stream(7, i);
        let rho = random::random_density(&mut rng, 6);
        let closed = u1_asymmetry_closed_form(&grading, &rho).unwrap();
        let direct = g_asymmetry(&TwirlOperation::U1(&grading), &rho).unwrap().asymmetry;
        assert!((closed - direct).abs() < 1e-9);
    }
}

#[test]
fn maximal_states_attain_the_maxima() {
    for n_max in 0..=15u64 {
        let (grading, psi) = maximal_u1_state(n_max).unwrap();
        let a = g_asymmetry(&TwirlOperation::U1(&grading), &psi.projector()).unwrap().asymmetry;
        assert!((a - max_u1_asymmetry_value(n_max)).abs() < 1e-9);
    }
    for n in [2u32, 4, 6] {
        let rep = spin(n);
        let a = g_asymmetry(&TwirlOperation::Su2(&rep), &maximal_su2_state(&rep).projector())
            .unwrap()
            .asymmetry;
        assert!((a - max_su2_asymmetry_value(n / 2)).abs() < 1e-7, "N = {n}: {a}");
    }
}

#[test]
fn random_states_stay_below_the_su2_maximum() {
    let rep = spin(4);
    let cap = max_su2_asymmetry_value(2);
    for i in 0..30 {
        let mut rng = random::stream(12, i);
        let psi = random::random_pure(&mut rng, 16);
        let a = g_asymmetry(&TwirlOperation::Su2(&rep), &psi.projector()).unwrap().asymmetry;
        assert!(a <= cap + 1e-9);
    }
}
