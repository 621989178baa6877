//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::time::{Duration, Instant};

use frameness::cli;
use frameness_core::asymptotics::{
    finite_group_bound_check, relinearized_monotone, su2_lie_bound_check, u1_ncopy_asymmetry,
    variance_discontinuity_witness, ModelConstant,
};
use frameness_core::budget::DimensionBudget;
use frameness_core::channel::generate::random_unital_idempotent;
use frameness_core::channel::minimization_check;
use frameness_core::entanglement::{two_qubit_dephasing_channel, BipartiteState};
use frameness_core::estimation::{holevo_bound_check, DiscretePovm};
use frameness_core::frameness::{g_asymmetry, maximal_asymmetry_state, maximal_u1_state, ExtremalFamily, TwirlOperation};
use frameness_core::group::{CollectiveSpinRep, FiniteGroupRep};
use frameness_core::linalg::{self, c, CMatrix, CVector};
use frameness_core::operator::{relative_entropy, von_neumann_entropy, DensityOperator, ProbabilityDistribution, PureState, Subsystem};
use frameness_core::random;
use rand::Rng;
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn h2(p: f64) -> f64 {
    [p, 1.0 - p].iter().filter(|&&x| x > 0.0).map(|&x| -x * x.log2()).sum()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ree_rows(ps: &[f64]) -> Result<Vec<Value>, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let out = dir.path().join("ree.json");
    let list = ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
    let code = cli::run([
        "frameness",
        "ree",
        "--family",
        "bell-diagonal",
        "--p-list",
        &list,
        "--out",
        out.to_str().unwrap(),
    ]);
    ensure(code == 0, || format!("ree exited {code}"))?;
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    v["result"]["rows"].as_array().cloned().ok_or_else(|| "no rows in ree output".into())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let ps = [0.5, 0.6, 0.75, 0.9, 1.0];
    let rows = ree_rows(&ps)?;
    ensure(rows.len() == ps.len(), || format!("{} rows", rows.len()))?;
    // Optimal output diag(½, 0, 0, ½), independent of angle labeling.
    let expected_out = linalg::diag_real(&[0.5, 0.0, 0.0, 0.5]);
    let mut worst: f64 = 0.0;
    for (row, &p) in rows.iter().zip(&ps) {
        let target = 1.0 - h2(p);
        let upper = row["upper"].as_f64().unwrap();
        let lower = row["lower"].as_f64().unwrap();
        worst = worst.max((upper - target).abs()).max((lower - target).abs());
        ensure(row["tight"] == Value::Bool(true), || format!("p={p} not tight"))?;
        let (theta, gamma) = (row["theta"].as_f64().unwrap(), row["gamma"].as_f64().unwrap());
        let rho = BipartiteState::bell_diagonal(p).map_err(|e| e.to_string())?;
        let out = two_qubit_dephasing_channel(theta, gamma, Subsystem::B)
            .apply(rho.state())
            .map_err(|e| e.to_string())?;
        let d = linalg::max_abs_diff(out.matrix(), &expected_out);
        ensure(d < 1e-6, || format!("p={p}: argmin ({theta}, {gamma}) output differs by {d:e}"))?;
    }
    ensure(worst <= 1e-4, || format!("max deviation {worst:e}"))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("max |bound − (1 − H2)| = {worst:.1e}; σ_z-basis dephasing optimal; {elapsed:.2?}"))
}

fn su2_asym(rep: &CollectiveSpinRep, psi: &PureState) -> Result<f64, String> {
    g_asymmetry(&TwirlOperation::Su2(rep), &psi.projector())
        .map(|r| r.asymmetry)
        .map_err(|e| e.to_string())
}

fn criterion_2() -> Outcome {
    let rep = CollectiveSpinRep::build(2, &DimensionBudget::default()).map_err(|e| e.to_string())?;
    let s = 0.5 / 2f64.sqrt();
    // (√3/2)|00⟩ + ½|ψ⁻⟩, with |00⟩ in the j = 1 sector.
    let v = CVector::from_vec(vec![c(3f64.sqrt() / 2.0, 0.0), c(s, 0.0), c(-s, 0.0), c(0.0, 0.0)]);
    let psi = PureState::new(v).map_err(|e| e.to_string())?;
    let a = su2_asym(&rep, &psi)?;
    let max = su2_asym(&rep, &maximal_asymmetry_state(ExtremalFamily::Su2(&rep)).map_err(|e| e.to_string())?)?;
    ensure((a - 2.0).abs() <= 1e-8 && (max - 2.0).abs() <= 1e-8, || format!("A = {a}, maximal = {max}"))?;
    Ok(format!("A = {a:.12}, maximal state A = {max:.12}"))
}

fn criterion_3() -> Outcome {
    let budget = DimensionBudget::default();
    let mut notes = Vec::new();
    for (n, j) in [(2u32, 1u32), (4, 2)] {
        let rep = CollectiveSpinRep::build(n, &budget).map_err(|e| e.to_string())?;
        let jf = j as f64;
        let expected = (4.0 / 3.0 * jf.powi(3) + 5.0 / 3.0 * jf + 1.0).log2();
        let a = su2_asym(&rep, &maximal_asymmetry_state(ExtremalFamily::Su2(&rep)).map_err(|e| e.to_string())?)?;
        ensure((a - expected).abs() <= 1e-7, || format!("N={n}: {a} vs {expected}"))?;
        notes.push(format!("N={n}: {a:.9}"));
    }
    let rep = CollectiveSpinRep::build(4, &budget).map_err(|e| e.to_string())?;
    let mults: Vec<usize> = (0..=2).map(|j| rep.sector(j).map_or(0, |s| s.multiplicity)).collect();
    ensure(mults == [2, 3, 1], || format!("N=4 multiplicities {mults:?}"))?;
    Ok(format!("{}; N=4 multiplicities {mults:?}", notes.join(", ")))
}

fn criterion_4() -> Outcome {
    let mut worst: f64 = 0.0;
    for n_max in 0..=15u64 {
        let (grading, psi) = maximal_u1_state(n_max).map_err(|e| e.to_string())?;
        let a = g_asymmetry(&TwirlOperation::U1(&grading), &psi.projector())
            .map_err(|e| e.to_string())?
            .asymmetry;
        worst = worst.max((a - ((n_max + 1) as f64).log2()).abs());
    }
    ensure(worst <= 1e-9, || format!("max deviation {worst:e}"))?;
    Ok(format!("n_max 0..=15, max deviation {worst:.1e}"))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let n = 200u32;
    let p = ProbabilityDistribution::bernoulli(0.5).map_err(|e| e.to_string())?;
    let a = u1_ncopy_asymmetry(&p, n, &DimensionBudget::default()).map_err(|e| e.to_string())?;
    let model = 0.5 * (2.0 * std::f64::consts::PI * n as f64 / 4.0).log2() + 0.5 * std::f64::consts::E.log2();
    let gap = (a - model).abs();
    let rate = a / n as f64;
    let elapsed = start.elapsed();
    ensure(gap <= 0.02, || format!("gap {gap}"))?;
    ensure(rate <= 0.05, || format!("A/N = {rate}"))?;
    ensure(elapsed < Duration::from_secs(5), || format!("took {elapsed:?}"))?;
    Ok(format!("A(200) = {a:.6}, model {model:.6}, gap {gap:.1e}, A/N = {rate:.4}; {elapsed:.2?}"))
}

fn criterion_6() -> Outcome {
    let (channels, states) = (20u64, 50u64);
    let mut worst: f64 = 0.0;
    for k in 0..channels {
        let mut rng = random::stream(606, k);
        let dim = rng.random_range(2..=8usize);
        let ch = random_unital_idempotent(&mut rng, dim).channel;
        for i in 0..states {
            let mut rng = random::stream(607 + k, i);
            let rank = rng.random_range(1..=dim);
            let rho = random::random_density_with_rank(&mut rng, dim, rank);
            let image = ch.apply(&rho).map_err(|e| e.to_string())?;
            let gap = von_neumann_entropy(&image) - von_neumann_entropy(&rho);
            let at_image = relative_entropy(&rho, &image).map_err(|e| e.to_string())?;
            let check = minimization_check(&ch, &rho, 4, k * states + i).map_err(|e| e.to_string())?;
            worst = worst
                .max(gap - check.sampled_min)
                .max((at_image - gap).abs())
                .max((check.at_image - gap).abs());
        }
    }
    ensure(worst <= 1e-8, || format!("max violation {worst:e}"))?;
    Ok(format!("{channels} channels × {states} states, max violation {worst:.1e}"))
}

fn criterion_7() -> Outcome {
    let budget = DimensionBudget::default();
    let mut worst = f64::NEG_INFINITY;
    for (name, rep) in [("Z2", FiniteGroupRep::z2_phase_flip()), ("Q8", FiniteGroupRep::quaternion())] {
        let bound = (rep.order() as f64).log2();
        for i in 0..20 {
            let rho = random::random_density(&mut random::stream(707, i), rep.dim());
            let report = finite_group_bound_check(&rep, &rho, 3, &budget).map_err(|e| e.to_string())?;
            ensure(report.rows.len() == 3, || format!("{name}: {} rows", report.rows.len()))?;
            for &(n, a) in &report.rows {
                ensure(a <= bound + 1e-8, || format!("{name} N={n}: {a} > {bound}"))?;
                worst = worst.max(a - bound);
            }
        }
    }
    Ok(format!("Z2 and Q8, N = 1..3, 20 states each; max A − log2|G| = {worst:.3}"))
}

fn criterion_8() -> Outcome {
    let rep = CollectiveSpinRep::build(4, &DimensionBudget::default()).map_err(|e| e.to_string())?;
    let psi = maximal_asymmetry_state(ExtremalFamily::Su2(&rep)).map_err(|e| e.to_string())?;
    let check = su2_lie_bound_check(&rep, &psi.projector()).map_err(|e| e.to_string())?;
    let bound = 2.0 * 5f64.log2();
    ensure((check.measured - 15f64.log2()).abs() <= 1e-7, || format!("measured {}", check.measured))?;
    ensure((check.bound.exact - bound).abs() <= 1e-12, || format!("bound {}", check.bound.exact))?;
    ensure(check.measured <= bound, || format!("{} > {bound}", check.measured))?;
    Ok(format!("{:.4} ≤ {bound:.4}", check.measured))
}

fn criterion_9() -> Outcome {
    let ns = [8u64, 16, 64, 256];
    let report = variance_discontinuity_witness(&ns, 2).map_err(|e| e.to_string())?;
    let mut prev_d = f64::INFINITY;
    let mut prev_r = f64::NEG_INFINITY;
    for row in &report.rows {
        let n = row.n as f64;
        let close = |x: f64, y: f64| (x - y).abs() <= 1e-9 * y.abs().max(1.0);
        ensure(close(row.variance_psi, n * n), || format!("n={}: V_psi {}", row.n, row.variance_psi))?;
        ensure(close(row.variance_phi, n * n - 4.0 * n), || format!("n={}: V_phi {}", row.n, row.variance_phi))?;
        ensure(close(row.ratio, 4.0 * n / n.log2()), || format!("n={}: ratio {}", row.n, row.ratio))?;
        ensure(row.trace_distance < prev_d, || format!("distance not decreasing at n={}", row.n))?;
        ensure(row.ratio > prev_r, || format!("ratio not increasing at n={}", row.n))?;
        prev_d = row.trace_distance;
        prev_r = row.ratio;
    }
    Ok(format!("distance {:.4} → {prev_d:.4}, gap/log2 n 10.67 → {prev_r:.1}", report.rows[0].trace_distance))
}

fn criterion_10() -> Outcome {
    let mut worst = f64::NEG_INFINITY;
    let mut cases = 0;
    for (g, rep) in [FiniteGroupRep::z2_phase_flip(), FiniteGroupRep::quaternion(), FiniteGroupRep::dihedral4()]
        .into_iter()
        .enumerate()
    {
        for i in 0..10 {
            let mut rng = random::stream(1010 + g as u64, i);
            let rho = random::random_density(&mut rng, rep.dim());
            let povms = (0..3)
                .map(|_| {
                    let outcomes = rng.random_range(1..=rep.order());
                    DiscretePovm::random(&mut rng, rep.dim(), outcomes)
                })
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            let report = holevo_bound_check(&rep, &rho, &povms).map_err(|e| e.to_string())?;
            for (label, info) in &report.infos {
                worst = worst.max(info - report.asymmetry);
                cases += 1;
                ensure(*info <= report.asymmetry + 1e-8, || format!("{label}: {info} > {}", report.asymmetry))?;
            }
        }
    }
    let plus = DensityOperator::new(CMatrix::from_element(2, 2, c(0.5, 0.0))).map_err(|e| e.to_string())?;
    let z2 = holevo_bound_check(&FiniteGroupRep::z2_phase_flip(), &plus, &[]).map_err(|e| e.to_string())?;
    ensure((z2.best_info - 1.0).abs() <= 1e-9 && (z2.asymmetry - 1.0).abs() <= 1e-9, || {
        format!("Z2/|+⟩: info {} A {}", z2.best_info, z2.asymmetry)
    })?;
    Ok(format!("{cases} (orbit, POVM) pairs, max H − A = {worst:.2e}; Z2/|+⟩ info = {:.12}", z2.best_info))
}

fn criterion_11() -> Outcome {
    let p = ProbabilityDistribution::bernoulli(0.5).map_err(|e| e.to_string())?;
    let report = relinearized_monotone(&p, &[100, 200], ModelConstant::Bits, &DimensionBudget::default())
        .map_err(|e| e.to_string())?;
    let (a, b) = (report.rows[0].per_copy, report.rows[1].per_copy);
    let change = (b - a).abs() / a;
    ensure(change < 0.02, || format!("L/N {a} → {b}, change {change}"))?;
    Ok(format!("L(A)/N {a:.5} → {b:.5} ({:.3}%), predicted slope {:.5}", 100.0 * change, report.predicted_slope))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("two-qubit REE bound is tight on the bell-diagonal family", criterion_1),
        ("two-qubit SU(2) optimum is 2", criterion_2),
        ("SU(2) maximum closed form for N = 2, 4", criterion_3),
        ("U(1) maximum is log2(n_max + 1)", criterion_4),
        ("U(1) N-copy asymmetry follows the Gaussian log law", criterion_5),
        ("unital idempotent channel minimization", criterion_6),
        ("finite-group bound log2|G|", criterion_7),
        ("Lie-group bound for SU(2), N = 4", criterion_8),
        ("variance discontinuity witness", criterion_9),
        ("Holevo bound on accessible information", criterion_10),
        ("re-linearized asymmetry per copy converges", criterion_11),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
