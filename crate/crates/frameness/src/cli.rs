//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use frameness_core::asymptotics::{
    finite_group_bound_check, regularized_asymmetry_table, relinearized_monotone, su2_lie_bound_check,
    variance_discontinuity_witness, ModelConstant, DEFAULT_CHARGE_MULTIPLIER,
};
use frameness_core::budget::{DimensionBudget, DEFAULT_MAX_DIM};
use frameness_core::entanglement::{random_basis_bound, BipartiteState, TwoQubitOptimizer};
use frameness_core::estimation::{holevo_bound_check, DiscretePovm};
use frameness_core::frameness::{
    g_asymmetry, max_su2_asymmetry_value, max_u1_asymmetry_value, maximal_su2_state, maximal_u1_state,
    TwirlOperation,
};
use frameness_core::group::{ChargeGrading, CollectiveSpinRep, FiniteGroupRep};
use frameness_core::operator::{DensityOperator, ProbabilityDistribution, Subsystem};
use frameness_core::random;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CliError, CliResult, EXIT_OK, EXIT_USAGE, EXIT_VALIDATION};
use crate::formats::{load_channel, load_charges, load_group, load_state, StateFile};
use crate::report::{
    bounds_table, to_csv, to_json, AsymmetryJson, BoundJson, BoundsJson, ExtremalJson, HolevoJson, ScalingJson,
    Table, VerifyJson,
};
use crate::verify::run_suite;

/// Environment variable overriding the dimension cap.
pub const MAX_DIM_ENV: &str = "FRAMENESS_MAX_DIM";
pub const DEFAULT_SEED: u64 = 20_061_010;

#[derive(Debug, Parser, Serialize)]
#[command(
    name = "frameness",
    version,
    about = "Reference-frame resource measures: G-asymmetry, many-copy scaling, and entanglement bounds",
    after_help = "Exit codes: 0 success, 2 invalid input or failed check, 3 resource limit, 64 usage error.\n\
                  Set FRAMENESS_MAX_DIM to change the largest Hilbert-space dimension (default 16384)."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format; JSON is canonical, CSV a tabular projection.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the artifact here instead of standard output.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupArg {
    Finite,
    U1,
    Su2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Builtin {
    Z2,
    Quaternion,
    Dihedral4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SideArg {
    A,
    B,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    BellDiagonal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstantArg {
    /// ½·log₂e
    Bits,
    /// ½
    Half,
}

#[derive(Debug, Args, Serialize)]
pub struct GroupSource {
    #[arg(long, value_enum)]
    pub group: GroupArg,
    /// Finite group file: {"order", "table", "unitaries"}.
    #[arg(long)]
    pub rep: Option<PathBuf>,
    /// Built-in finite group instead of --rep.
    #[arg(long, value_enum)]
    pub builtin: Option<Builtin>,
    /// Charge file for U(1): {"dim", "charges"}; defaults to charges 0..dim-1.
    #[arg(long)]
    pub charges: Option<PathBuf>,
    /// Qubit count for SU(2); inferred from the state dimension when absent.
    #[arg(long)]
    pub qubits: Option<u32>,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// A_G(ρ) = S(G[ρ]) − S(ρ).
    ///
    /// CSV columns: asymmetry,entropy_in,entropy_out
    Asymmetry {
        #[command(flatten)]
        source: GroupSource,
        /// State file: {"dim", "matrix"} or {"dim", "amplitudes"}.
        #[arg(long)]
        state: PathBuf,
        /// Include the twirled state in the JSON result.
        #[arg(long)]
        dump_twirled: bool,
    },
    /// Write the twirled state in the state-file format.
    ///
    /// CSV columns: row,col,re,im
    Twirl {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long)]
        state: PathBuf,
    },
    /// The maximal-asymmetry state and its asymmetry.
    ///
    /// CSV columns: group,size,asymmetry,expected
    Extremal {
        #[arg(long, value_enum)]
        group: GroupArg,
        /// Qubit count for SU(2).
        #[arg(long, default_value_t = 2)]
        qubits: u32,
        /// Largest charge for U(1).
        #[arg(long, default_value_t = 3)]
        n_max: u64,
    },
    /// Exact N-copy U(1) asymmetry against the Gaussian model.
    ///
    /// CSV columns: N,A_bits,model_bits,gap_bits,A_over_N
    Scaling {
        /// Per-copy Bernoulli weight on charge 1.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Per-copy charge weights w0,w1,...; overrides --p.
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<f64>>,
        /// Largest copy number.
        #[arg(long, default_value_t = 200)]
        copies: u32,
        /// Number of log-spaced copy numbers from 1 to --copies.
        #[arg(long, default_value_t = 8)]
        grid: usize,
        #[arg(long, value_enum, default_value_t = ConstantArg::Bits)]
        constant: ConstantArg,
    },
    /// Finite-group (--group finite), Lie-group (--group su2) bounds, or the
    /// variance-discontinuity witness (--group u1).
    ///
    /// CSV columns: finite N,A_bits,bound_bits; su2 N,d,measured_bits,exact_bound_bits,asymptotic_bits;
    /// u1 n,trace_distance,V_psi,V_phi,V_gap,gap_over_log2n
    Bounds {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        rep: Option<PathBuf>,
        #[arg(long, value_enum)]
        builtin: Option<Builtin>,
        /// State file; for SU(2) defaults to the maximal state.
        #[arg(long)]
        state: Option<PathBuf>,
        /// Largest copy number for the finite-group bound.
        #[arg(long, default_value_t = 3)]
        copies: u32,
        #[arg(long, default_value_t = 4)]
        qubits: u32,
        /// Witness sizes n (each > 4).
        #[arg(long, value_delimiter = ',', default_values_t = vec![8u64, 16, 64, 256])]
        n_list: Vec<u64>,
        /// The witness uses charges {0, k·n}.
        #[arg(long, default_value_t = DEFAULT_CHARGE_MULTIPLIER)]
        charge_multiplier: u64,
    },
    /// Dephasing upper bound and hashing lower bound on the relative entropy of entanglement.
    ///
    /// CSV columns: p,side,upper,lower,theta,gamma,tight
    Ree {
        #[arg(long, value_enum)]
        family: Option<Family>,
        /// Mixing weight of the bell-diagonal family.
        #[arg(long)]
        p: Option<f64>,
        /// Sweep the family over these weights.
        #[arg(long, value_delimiter = ',')]
        p_list: Option<Vec<f64>>,
        /// Bipartite state file instead of a family.
        #[arg(long)]
        state: Option<PathBuf>,
        /// Factor dimensions dA,dB of --state.
        #[arg(long, value_delimiter = ',', default_values_t = vec![2usize, 2])]
        dims: Vec<usize>,
        #[arg(long, value_enum, default_value_t = SideArg::B)]
        side: SideArg,
        /// Grid points per angle for two qubits.
        #[arg(long, default_value_t = 64)]
        grid: usize,
        /// Random bases tried when a dephased factor is not a qubit.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Accessible information of the group orbit against the Holevo bound A_G.
    ///
    /// CSV columns: povm,info_bits,A_G_bits
    Estimate {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long)]
        state: PathBuf,
        /// For U(1): order M of the cyclic subgroup Z_M; defaults to the dimension.
        #[arg(long)]
        order: Option<usize>,
        /// Random POVMs tried besides the square-root measurement.
        #[arg(long, default_value_t = 4)]
        random_povms: usize,
    },
    /// Seeded invariant suite; exits 2 when any check fails.
    ///
    /// CSV columns: check,cases,failures,max_violation
    Verify {
        /// Cases per randomized check.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// Also check this channel file: {"dim", "kraus"}.
        #[arg(long)]
        channel: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Asymmetry { .. } => "asymmetry",
            Command::Twirl { .. } => "twirl",
            Command::Extremal { .. } => "extremal",
            Command::Scaling { .. } => "scaling",
            Command::Bounds { .. } => "bounds",
            Command::Ree { .. } => "ree",
            Command::Estimate { .. } => "estimate",
            Command::Verify { .. } => "verify",
        }
    }
}

/// Dimension cap from the environment, or the default.
pub fn budget_from_env() -> CliResult<DimensionBudget> {
    match std::env::var(MAX_DIM_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(DimensionBudget::new)
            .map_err(|_| CliError::Validation(format!("{MAX_DIM_ENV} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DimensionBudget::new(DEFAULT_MAX_DIM)),
    }
}

fn builtin(b: Builtin) -> FiniteGroupRep {
    match b {
        Builtin::Z2 => FiniteGroupRep::z2_phase_flip(),
        Builtin::Quaternion => FiniteGroupRep::quaternion(),
        Builtin::Dihedral4 => FiniteGroupRep::dihedral4(),
    }
}

fn finite_rep(rep: Option<&Path>, b: Option<Builtin>) -> CliResult<FiniteGroupRep> {
    match (rep, b) {
        (Some(path), None) => load_group(path),
        (None, Some(b)) => Ok(builtin(b)),
        (Some(_), Some(_)) => Err(CliError::Usage("give either --rep or --builtin, not both".into())),
        (None, None) => Err(CliError::Usage("finite groups need --rep FILE or --builtin NAME".into())),
    }
}

fn qubits_for_dim(dim: usize) -> CliResult<u32> {
    if dim.is_power_of_two() && dim > 1 {
        Ok(dim.trailing_zeros())
    } else {
        Err(CliError::Validation(format!("state dimension {dim} is not a qubit register")))
    }
}

/// The group data a twirl borrows from.
enum GroupHolder {
    Finite(FiniteGroupRep),
    U1(ChargeGrading),
    Su2(CollectiveSpinRep),
}

impl GroupHolder {
    fn resolve(src: &GroupSource, dim: usize, budget: &DimensionBudget) -> CliResult<Self> {
        Ok(match src.group {
            GroupArg::Finite => GroupHolder::Finite(finite_rep(src.rep.as_deref(), src.builtin)?),
            GroupArg::U1 => GroupHolder::U1(match &src.charges {
                Some(path) => load_charges(path)?,
                None => ChargeGrading::ladder(dim.saturating_sub(1) as u64),
            }),
            GroupArg::Su2 => {
                let n = match src.qubits {
                    Some(n) => n,
                    None => qubits_for_dim(dim)?,
                };
                GroupHolder::Su2(CollectiveSpinRep::build(n, budget)?)
            }
        })
    }

    fn twirl(&self) -> TwirlOperation<'_> {
        match self {
            GroupHolder::Finite(r) => TwirlOperation::Finite(r),
            GroupHolder::U1(g) => TwirlOperation::U1(g),
            GroupHolder::Su2(r) => TwirlOperation::Su2(r),
        }
    }
}

fn load_state_within(path: &Path, budget: &DimensionBudget) -> CliResult<DensityOperator> {
    let rho = load_state(path)?;
    budget.check("input state", rho.dim() as u128)?;
    Ok(rho)
}

/// Log-spaced integers from 1 to `top`, deduplicated, always ending at `top`.
pub fn log_grid(top: u32, points: usize) -> Vec<u32> {
    if top == 0 {
        return Vec::new();
    }
    if points <= 1 {
        return vec![top];
    }
    let mut out: Vec<u32> = (0..points)
        .map(|k| (top as f64).powf(k as f64 / (points - 1) as f64).round().max(1.0) as u32)
        .collect();
    out.push(top);
    out.sort_unstable();
    out.dedup();
    out
}

/// A finished run: the artifact text and whether its checks passed.
pub struct Output {
    pub text: String,
    pub passed: bool,
}

fn emit<R: Serialize>(cli: &Cli, result: &R, table: impl FnOnce() -> Table, passed: bool) -> Output {
    let text = match cli.format {
        Format::Json => to_json(cli.command.name(), cli.seed, cli, result),
        Format::Csv => to_csv(cli.command.name(), cli.seed, cli, &table()),
    };
    Output { text, passed }
}

fn sides(side: SideArg) -> Vec<Subsystem> {
    match side {
        SideArg::A => vec![Subsystem::A],
        SideArg::B => vec![Subsystem::B],
        SideArg::Both => vec![Subsystem::A, Subsystem::B],
    }
}

fn bound_for(
    rho: &BipartiteState,
    side: Subsystem,
    grid: usize,
    samples: usize,
    seed: u64,
) -> CliResult<frameness_core::entanglement::BoundReport> {
    if rho.dims() == (2, 2) {
        let optimizer = TwoQubitOptimizer { grid, ..Default::default() };
        // Grid points are evaluated in parallel; the minimum is taken over the
        // complete grid afterwards, so the result does not depend on scheduling.
        let values: Vec<f64> = (0..grid * grid)
            .into_par_iter()
            .map(|idx| {
                let (t, g) = optimizer.grid_point(idx);
                frameness_core::entanglement::dephasing_upper_bound(
                    rho,
                    &frameness_core::linalg::eigh(&frameness_core::entanglement::two_qubit_parameterized_unitary(t, g))
                        .vectors,
                    side,
                )
            })
            .collect::<frameness_core::Result<_>>()?;
        Ok(optimizer.finish(rho, side, &values)?)
    } else {
        Ok(random_basis_bound(rho, side, samples, seed)?)
    }
}

pub fn execute(cli: &Cli, budget: &DimensionBudget) -> CliResult<Output> {
    match &cli.command {
        Command::Asymmetry { source, state, dump_twirled } => {
            let rho = load_state_within(state, budget)?;
            let holder = GroupHolder::resolve(source, rho.dim(), budget)?;
            let r = g_asymmetry(&holder.twirl(), &rho)?;
            let json = AsymmetryJson::new(&r, *dump_twirled);
            Ok(emit(cli, &json, || json.table(), true))
        }
        Command::Twirl { source, state } => {
            let rho = load_state_within(state, budget)?;
            let holder = GroupHolder::resolve(source, rho.dim(), budget)?;
            let out = holder.twirl().apply(&rho)?;
            let file = StateFile::from_density(&out);
            let table = || {
                let mut t = Table::new(&["row", "col", "re", "im"]);
                let m = out.matrix();
                for i in 0..m.nrows() {
                    for j in 0..m.ncols() {
                        t.push(vec![i.to_string(), j.to_string(), format!("{}", m[(i, j)].re), format!("{}", m[(i, j)].im)]);
                    }
                }
                t
            };
            Ok(emit(cli, &file, table, true))
        }
        Command::Extremal { group, qubits, n_max } => {
            let json = match group {
                GroupArg::U1 => {
                    budget.check("extremal U(1) state", *n_max as u128 + 1)?;
                    let (grading, psi) = maximal_u1_state(*n_max)?;
                    let a = g_asymmetry(&TwirlOperation::U1(&grading), &psi.projector())?.asymmetry;
                    ExtremalJson {
                        group: "u1",
                        size: *n_max,
                        asymmetry: a,
                        expected: max_u1_asymmetry_value(*n_max),
                        state: StateFile::from_pure(&psi),
                    }
                }
                GroupArg::Su2 => {
                    let rep = CollectiveSpinRep::build(*qubits, budget)?;
                    let psi = maximal_su2_state(&rep);
                    let a = g_asymmetry(&TwirlOperation::Su2(&rep), &psi.projector())?.asymmetry;
                    ExtremalJson {
                        group: "su2",
                        size: *qubits as u64,
                        asymmetry: a,
                        expected: max_su2_asymmetry_value(qubits / 2),
                        state: StateFile::from_pure(&psi),
                    }
                }
                GroupArg::Finite => {
                    return Err(CliError::Usage("extremal supports --group u1 or su2".into()));
                }
            };
            Ok(emit(cli, &json, || json.table(), true))
        }
        Command::Scaling { p, weights, copies, grid, constant } => {
            let per_copy = match weights {
                Some(w) => ProbabilityDistribution::new(w.clone())?,
                None => ProbabilityDistribution::bernoulli(*p)?,
            };
            let constant = match constant {
                ConstantArg::Bits => ModelConstant::Bits,
                ConstantArg::Half => ModelConstant::Literal,
            };
            let ns = log_grid(*copies, *grid);
            let scaling = regularized_asymmetry_table(&per_copy, &ns, constant, budget)?;
            let relin = relinearized_monotone(&per_copy, &ns, constant, budget)?;
            let json = ScalingJson::new(&scaling, &relin);
            Ok(emit(cli, &json, || json.table(), true))
        }
        Command::Bounds { group, rep, builtin: b, state, copies, qubits, n_list, charge_multiplier } => {
            let json = match group {
                GroupArg::Finite => {
                    let rep = finite_rep(rep.as_deref(), *b)?;
                    let path = state
                        .as_deref()
                        .ok_or_else(|| CliError::Usage("the finite-group bound needs --state FILE".into()))?;
                    let rho = load_state_within(path, budget)?;
                    BoundsJson::finite(&finite_group_bound_check(&rep, &rho, *copies, budget)?)
                }
                GroupArg::Su2 => {
                    let rep = CollectiveSpinRep::build(*qubits, budget)?;
                    let rho = match state {
                        Some(path) => load_state_within(path, budget)?,
                        None => maximal_su2_state(&rep).projector(),
                    };
                    BoundsJson::lie(&su2_lie_bound_check(&rep, &rho)?)
                }
                GroupArg::U1 => BoundsJson::witness(&variance_discontinuity_witness(n_list, *charge_multiplier)?),
            };
            let passed = json.holds();
            Ok(emit(cli, &json, || json.table(), passed))
        }
        Command::Ree { family, p, p_list, state, dims, side, grid, samples } => {
            if *grid == 0 {
                return Err(CliError::Usage("--grid must be positive".into()));
            }
            let mut cases: Vec<(Option<f64>, BipartiteState)> = Vec::new();
            match (family, state) {
                (Some(Family::BellDiagonal), None) => {
                    let ps: Vec<f64> = match (p, p_list) {
                        (Some(p), None) => vec![*p],
                        (None, Some(list)) => list.clone(),
                        (None, None) => return Err(CliError::Usage("bell-diagonal needs --p or --p-list".into())),
                        (Some(_), Some(_)) => return Err(CliError::Usage("give --p or --p-list, not both".into())),
                    };
                    for p in ps {
                        cases.push((Some(p), BipartiteState::bell_diagonal(p)?));
                    }
                }
                (None, Some(path)) => {
                    if dims.len() != 2 {
                        return Err(CliError::Usage("--dims takes two values dA,dB".into()));
                    }
                    let rho = load_state_within(path, budget)?;
                    cases.push((None, BipartiteState::new(dims[0], dims[1], rho)?));
                }
                _ => return Err(CliError::Usage("ree needs exactly one of --family or --state".into())),
            }
            let mut rows = Vec::new();
            for (p, rho) in &cases {
                for s in sides(*side) {
                    rows.push(BoundJson::new(&bound_for(rho, s, *grid, *samples, cli.seed)?, *p));
                }
            }
            let table = || bounds_table(&rows);
            if rows.len() == 1 {
                Ok(emit(cli, &rows[0], table, true))
            } else {
                #[derive(Serialize)]
                struct Rows<'a> {
                    rows: &'a [BoundJson],
                }
                Ok(emit(cli, &Rows { rows: &rows }, table, true))
            }
        }
        Command::Estimate { source, state, order, random_povms } => {
            let rho = load_state_within(state, budget)?;
            let rep = match source.group {
                GroupArg::Finite => finite_rep(source.rep.as_deref(), source.builtin)?,
                GroupArg::U1 => {
                    let grading = match &source.charges {
                        Some(path) => load_charges(path)?,
                        None => ChargeGrading::ladder(rho.dim().saturating_sub(1) as u64),
                    };
                    FiniteGroupRep::cyclic_phase(&grading, order.unwrap_or(rho.dim()))?
                }
                GroupArg::Su2 => {
                    return Err(CliError::Usage("estimate supports --group finite or u1".into()));
                }
            };
            let povms = (0..*random_povms as u64)
                .map(|i| {
                    let mut rng = random::stream(cli.seed, i);
                    let outcomes = rep.order();
                    DiscretePovm::random(&mut rng, rep.dim(), outcomes)
                })
                .collect::<frameness_core::Result<Vec<_>>>()?;
            let report = holevo_bound_check(&rep, &rho, &povms)?;
            let json = HolevoJson::new(&report);
            let passed = json.holds;
            Ok(emit(cli, &json, || json.table(), passed))
        }
        Command::Verify { samples, channel } => {
            let ch = channel.as_deref().map(load_channel).transpose()?;
            let checks = run_suite(cli.seed, *samples, ch.as_ref(), budget)?;
            let json = VerifyJson { passed: checks.iter().all(|c| c.passed()), checks };
            let passed = json.passed;
            Ok(emit(cli, &json, || json.table(), passed))
        }
    }
}

fn write_output(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

/// Parses `args`, runs the subcommand, writes the artifact, and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let result = budget_from_env().and_then(|budget| execute(&cli, &budget));
    match result {
        Ok(output) => {
            if let Err(e) = write_output(cli.out.as_deref(), &output.text) {
                eprintln!("error: {e}");
                return e.exit_code();
            }
            if output.passed {
                EXIT_OK
            } else {
                eprintln!("error: one or more checks failed");
                EXIT_VALIDATION
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_grid_shape() {
        assert_eq!(log_grid(200, 1), vec![200]);
        let g = log_grid(200, 8);
        assert_eq!(g.first(), Some(&1));
        assert_eq!(g.last(), Some(&200));
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(log_grid(3, 10), vec![1, 2, 3]);
    }

    #[test]
    fn qubit_inference() {
        assert_eq!(qubits_for_dim(16).unwrap(), 4);
        assert!(qubits_for_dim(6).is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
