//! The seeded invariant suite behind `frameness verify`.
//!
//! Cases run in parallel, each with its own random stream, and are reduced in
//! case order, so the outcome does not depend on scheduling.

use frameness_core::asymptotics::finite_group_bound_check;
use frameness_core::budget::DimensionBudget;
use frameness_core::channel::generate::random_unital_idempotent;
use frameness_core::channel::{image_fix_equivalence_check, minimization_check, KrausChannel};
use frameness_core::entanglement::{BipartiteState, TwoQubitOptimizer};
use frameness_core::estimation::{holevo_bound_check, DiscretePovm};
use frameness_core::frameness::{
    g_asymmetry, invariant_state_oracle, su2_pure_asymmetry_closed_form, su2_schmidt_data, TwirlOperation,
};
use frameness_core::group::{ChargeGrading, CollectiveSpinRep, FiniteGroupRep};
use frameness_core::linalg;
use frameness_core::operator::{relative_entropy, Subsystem};
use frameness_core::random;
use frameness_core::Result;
use rand::Rng;
use rayon::prelude::*;

use crate::report::CheckOutcome;

/// Allowed violation for every inequality and identity in the suite.
pub const SUITE_TOL: f64 = 1e-8;

/// Per-case violation: 0 when the property holds exactly, positive otherwise.
type CaseFn<'a> = dyn Fn(u64) -> Result<f64> + Sync + 'a;

fn run_check(name: &str, cases: usize, case: &CaseFn<'_>) -> CheckOutcome {
    let results: Vec<std::result::Result<f64, String>> = (0..cases as u64)
        .into_par_iter()
        .map(|i| case(i).map_err(|e| e.to_string()))
        .collect();
    let mut failures = 0;
    let mut max_violation: f64 = 0.0;
    let mut note = None;
    for r in results {
        match r {
            Ok(v) => {
                max_violation = max_violation.max(v);
                if v > SUITE_TOL {
                    failures += 1;
                }
            }
            Err(e) => {
                failures += 1;
                note.get_or_insert(e);
            }
        }
    }
    CheckOutcome { check: name.into(), cases, failures, max_violation, note }
}

struct Groups {
    finite: Vec<FiniteGroupRep>,
    charges: Vec<ChargeGrading>,
    spins: Vec<CollectiveSpinRep>,
}

impl Groups {
    fn build(budget: &DimensionBudget) -> Result<Self> {
        Ok(Self {
            finite: vec![
                FiniteGroupRep::z2_phase_flip(),
                FiniteGroupRep::quaternion(),
                FiniteGroupRep::dihedral4(),
                FiniteGroupRep::cyclic_phase(&ChargeGrading::ladder(3), 3)?,
            ],
            charges: vec![ChargeGrading::ladder(3), ChargeGrading::hamming_weight(3, budget)?],
            spins: vec![CollectiveSpinRep::build(2, budget)?, CollectiveSpinRep::build(4, budget)?],
        })
    }

    fn twirls(&self) -> Vec<TwirlOperation<'_>> {
        let mut out: Vec<TwirlOperation<'_>> = self.finite.iter().map(TwirlOperation::Finite).collect();
        out.extend(self.charges.iter().map(TwirlOperation::U1));
        out.extend(self.spins.iter().map(TwirlOperation::Su2));
        out
    }
}

pub fn run_suite(
    seed: u64,
    samples: usize,
    channel: Option<&KrausChannel>,
    budget: &DimensionBudget,
) -> Result<Vec<CheckOutcome>> {
    let groups = Groups::build(budget)?;
    let twirls = groups.twirls();
    let pick = |i: u64| twirls[(i % twirls.len() as u64) as usize];
    let mut checks = Vec::new();

    checks.push(run_check("twirl_unital_idempotent", twirls.len(), &|i| {
        let ch = pick(i).kraus_channel();
        let report = image_fix_equivalence_check(&ch, 4, i);
        let structural = ch.unitality_defect().max(ch.idempotence_defect());
        Ok(if report.all_fixed() { structural } else { report.max_defect.max(structural) })
    }));

    checks.push(run_check("twirl_covariance", samples, &|i| {
        let t = pick(i);
        let mut rng = random::stream(seed ^ 2, i);
        let rho = random::random_density(&mut rng, t.dim());
        let base = t.apply(&rho)?;
        let mut worst: f64 = 0.0;
        for u in t.sample_elements(&mut rng, 3) {
            let lhs = t.apply(&rho.conjugated(&u)?)?;
            let rhs = linalg::conjugate(&u, base.matrix());
            worst = worst.max(linalg::max_abs_diff(lhs.matrix(), &rhs));
        }
        Ok(worst)
    }));

    checks.push(run_check("asymmetry_minimizer", samples, &|i| {
        let t = pick(i);
        let mut rng = random::stream(seed ^ 3, i);
        let rank = rng.random_range(1..=t.dim());
        let rho = random::random_density_with_rank(&mut rng, t.dim(), rank);
        let r = g_asymmetry(&t, &rho)?;
        let at_twirl = relative_entropy(&rho, &r.twirled_state)?;
        let oracle = invariant_state_oracle(&t, &rho, 8, i)?;
        Ok((at_twirl - r.asymmetry).abs().max(r.asymmetry - oracle).max(-r.asymmetry))
    }));

    checks.push(run_check("su2_closed_form", samples, &|i| {
        let rep = &groups.spins[(i % groups.spins.len() as u64) as usize];
        let psi = random::random_pure(&mut random::stream(seed ^ 4, i), rep.dim());
        let (p, q) = su2_schmidt_data(rep, &psi)?;
        let closed = su2_pure_asymmetry_closed_form(&p, &q, rep.j_max())?;
        let direct = g_asymmetry(&TwirlOperation::Su2(rep), &psi.projector())?.asymmetry;
        // Closed form and twirl agree to 1e-7; rescale so the suite tolerance applies.
        Ok((closed - direct).abs() * SUITE_TOL / 1e-7)
    }));

    checks.push(run_check("unital_idempotent_gap", samples, &|i| {
        let mut rng = random::stream(seed ^ 5, i);
        let dim = rng.random_range(2..=8usize);
        let ch = random_unital_idempotent(&mut rng, dim).channel;
        let mut worst: f64 = 0.0;
        for k in 0..10 {
            let rho = random::random_density(&mut rng, dim);
            let check = minimization_check(&ch, &rho, 3, i * 16 + k)?;
            worst = worst
                .max(check.distance - check.sampled_min)
                .max((check.at_image - check.distance).abs());
        }
        Ok(worst)
    }));

    checks.push(run_check("finite_group_bound", samples, &|i| {
        let rep = &groups.finite[(i % groups.finite.len() as u64) as usize];
        let rho = random::random_density(&mut random::stream(seed ^ 6, i), rep.dim());
        let report = finite_group_bound_check(rep, &rho, 3, budget)?;
        Ok(report.rows.iter().map(|&(_, a)| a - report.bound).fold(0.0, f64::max))
    }));

    checks.push(run_check("holevo_bound", samples, &|i| {
        let rep = &groups.finite[(i % groups.finite.len() as u64) as usize];
        let mut rng = random::stream(seed ^ 7, i);
        let rho = random::random_density(&mut rng, rep.dim());
        let outcomes = rng.random_range(1..=rep.order());
        let povm = DiscretePovm::random(&mut rng, rep.dim(), outcomes)?;
        let report = holevo_bound_check(rep, &rho, &[povm])?;
        let excess = report.infos.iter().map(|(_, x)| x - report.asymmetry).fold(0.0, f64::max);
        Ok(excess.max((report.chi - report.asymmetry).abs()))
    }));

    let optimizer = TwoQubitOptimizer { grid: 16, ..Default::default() };
    checks.push(run_check("hashing_below_dephasing_bound", samples, &|i| {
        let mut rng = random::stream(seed ^ 8, i);
        let rank = rng.random_range(1..=4usize);
        let rho = BipartiteState::new(2, 2, random::random_density_with_rank(&mut rng, 4, rank))?;
        let report = optimizer.run(&rho, Subsystem::B)?;
        // The ordering is only asserted to 1e-6.
        Ok((report.lower - report.upper).max(0.0) * SUITE_TOL / 1e-6)
    }));

    if let Some(ch) = channel {
        let structural = ch.unitality_defect().max(ch.idempotence_defect());
        if !(ch.is_unital() && ch.is_idempotent()) {
            checks.push(CheckOutcome {
                check: "channel_unital_idempotent".into(),
                cases: 1,
                failures: 1,
                max_violation: structural,
                note: Some(format!(
                    "unitality defect {:e}, idempotence defect {:e}",
                    ch.unitality_defect(),
                    ch.idempotence_defect()
                )),
            });
        } else {
            checks.push(run_check("channel_image_is_fixed", 1, &|i| {
                let report = image_fix_equivalence_check(ch, samples.max(1), seed ^ 9 ^ i);
                Ok(if report.consistent() { 0.0 } else { report.max_defect.max(1.0) })
            }));
            checks.push(run_check("channel_gap", samples, &|i| {
                let rho = random::random_density(&mut random::stream(seed ^ 10, i), ch.dim());
                let check = minimization_check(ch, &rho, 5, i)?;
                Ok((check.distance - check.sampled_min).max((check.at_image - check.distance).abs()))
            }));
        }
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_and_is_deterministic() {
        let budget = DimensionBudget::default();
        let a = run_suite(11, 4, None, &budget).unwrap();
        assert!(a.iter().all(CheckOutcome::passed), "{a:?}");
        let b = run_suite(11, 4, None, &budget).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn non_idempotent_channel_fails() {
        let half = KrausChannel::unitary_mixture(&[(0.75, linalg::identity(2)), (0.25, linalg::pauli_z())]).unwrap();
        let out = run_suite(1, 2, Some(&half), &DimensionBudget::default()).unwrap();
        assert!(!out.last().unwrap().passed());
    }
}
