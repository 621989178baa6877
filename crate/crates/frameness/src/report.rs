//! Serializable report shapes and the JSON/CSV writers.
//!
//! Every artifact carries the tool version, the subcommand, the seed and an
//! echo of the configuration, so identical inputs give identical bytes.

use frameness_core::asymptotics::{
    FiniteGroupBoundReport, RelinearizationReport, ScalingReport, Su2BoundCheck, WitnessReport,
};
use frameness_core::entanglement::{BoundArgmin, BoundReport};
use frameness_core::estimation::HolevoReport;
use frameness_core::frameness::AsymmetryResult;
use frameness_core::operator::Subsystem;
use serde::Serialize;

use crate::formats::{matrix_to_rows, MatrixRows, StateFile};

pub const TOOL: &str = "frameness";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Serialize)]
pub struct Envelope<'a, C: Serialize, R: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'a str,
    pub seed: u64,
    pub config: &'a C,
    pub result: &'a R,
}

pub fn to_json<C: Serialize, R: Serialize>(command: &str, seed: u64, config: &C, result: &R) -> String {
    let envelope = Envelope { tool: TOOL, version: VERSION, command, seed, config, result };
    let mut text = serde_json::to_string_pretty(&envelope).expect("report types serialize");
    text.push('\n');
    text
}

/// A CSV projection of a report: a fixed header and stringified rows.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Self { header: header.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

pub fn num(x: f64) -> String {
    format!("{x}")
}

pub fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

/// `#`-prefixed provenance lines followed by the table.
pub fn to_csv<C: Serialize>(command: &str, seed: u64, config: &C, table: &Table) -> String {
    let config = serde_json::to_string(config).expect("config serializes");
    let mut out = format!("# {TOOL} {VERSION}\n# command: {command}\n# seed: {seed}\n# config: {config}\n");
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(&table.header).expect("in-memory write");
    for row in &table.rows {
        writer.write_record(row).expect("in-memory write");
    }
    out.push_str(&String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 fields"));
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct AsymmetryJson {
    pub asymmetry: f64,
    pub entropy_in: f64,
    pub entropy_out: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub twirled_state: Option<MatrixRows>,
}

impl AsymmetryJson {
    pub fn new(r: &AsymmetryResult, dump: bool) -> Self {
        Self {
            asymmetry: r.asymmetry,
            entropy_in: r.entropy_in,
            entropy_out: r.entropy_out,
            twirled_state: dump.then(|| matrix_to_rows(r.twirled_state.matrix())),
        }
    }

    pub fn table(&self) -> Table {
        let mut t = Table::new(&["asymmetry", "entropy_in", "entropy_out"]);
        t.push(vec![num(self.asymmetry), num(self.entropy_in), num(self.entropy_out)]);
        t
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtremalJson {
    pub group: &'static str,
    /// `n_max` for U(1), the qubit count for SU(2).
    pub size: u64,
    pub asymmetry: f64,
    pub expected: f64,
    pub state: StateFile,
}

impl ExtremalJson {
    pub fn table(&self) -> Table {
        let mut t = Table::new(&["group", "size", "asymmetry", "expected"]);
        t.push(vec![self.group.into(), self.size.to_string(), num(self.asymmetry), num(self.expected)]);
        t
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScalingRowJson {
    #[serde(rename = "N")]
    pub copies: u32,
    pub a_bits: f64,
    pub model_bits: Option<f64>,
    pub gap_bits: Option<f64>,
    pub a_over_n: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelinearizedRowJson {
    #[serde(rename = "N")]
    pub copies: u32,
    pub linearized: f64,
    pub linearized_over_n: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScalingJson {
    pub variance: f64,
    pub model: &'static str,
    pub rows: Vec<ScalingRowJson>,
    pub predicted_slope: f64,
    pub plateau: f64,
    pub relinearized: Vec<RelinearizedRowJson>,
}

impl ScalingJson {
    pub fn new(scaling: &ScalingReport, relin: &RelinearizationReport) -> Self {
        Self {
            variance: scaling.variance,
            model: scaling.model.label(),
            rows: scaling
                .rows
                .iter()
                .map(|r| ScalingRowJson {
                    copies: r.copies,
                    a_bits: r.asymmetry,
                    model_bits: r.model,
                    gap_bits: r.gap,
                    a_over_n: r.per_copy_rate,
                })
                .collect(),
            predicted_slope: relin.predicted_slope,
            plateau: relin.plateau(),
            relinearized: relin
                .rows
                .iter()
                .map(|r| RelinearizedRowJson { copies: r.copies, linearized: r.linearized, linearized_over_n: r.per_copy })
                .collect(),
        }
    }

    pub fn table(&self) -> Table {
        let mut t = Table::new(&["N", "A_bits", "model_bits", "gap_bits", "A_over_N"]);
        for r in &self.rows {
            t.push(vec![r.copies.to_string(), num(r.a_bits), opt(r.model_bits), opt(r.gap_bits), num(r.a_over_n)]);
        }
        t
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoundsJson {
    FiniteGroup { bound_bits: f64, holds: bool, rows: Vec<(u32, f64)> },
    LieGroup {
        #[serde(rename = "N")]
        copies: u32,
        d: u32,
        measured_bits: f64,
        exact_bound_bits: f64,
        asymptotic_bits: f64,
        holds: bool,
    },
    VarianceWitness {
        charge_multiplier: u64,
        distance_decreasing: bool,
        ratio_increasing: bool,
        rows: Vec<WitnessRowJson>,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessRowJson {
    pub n: u64,
    pub trace_distance: f64,
    pub variance_psi: f64,
    pub variance_phi: f64,
    pub variance_gap: f64,
    pub ratio: f64,
}

impl BoundsJson {
    pub fn finite(r: &FiniteGroupBoundReport) -> Self {
        BoundsJson::FiniteGroup { bound_bits: r.bound, holds: r.holds(), rows: r.rows.clone() }
    }

    pub fn lie(r: &Su2BoundCheck) -> Self {
        BoundsJson::LieGroup {
            copies: r.bound.copies,
            d: r.bound.dim,
            measured_bits: r.measured,
            exact_bound_bits: r.bound.exact,
            asymptotic_bits: r.bound.asymptotic,
            holds: r.holds(),
        }
    }

    pub fn witness(r: &WitnessReport) -> Self {
        BoundsJson::VarianceWitness {
            charge_multiplier: r.charge_multiplier,
            distance_decreasing: r.distance_decreasing(),
            ratio_increasing: r.ratio_increasing(),
            rows: r
                .rows
                .iter()
                .map(|w| WitnessRowJson {
                    n: w.n,
                    trace_distance: w.trace_distance,
                    variance_psi: w.variance_psi,
                    variance_phi: w.variance_phi,
                    variance_gap: w.variance_gap(),
                    ratio: w.ratio,
                })
                .collect(),
        }
    }

    pub fn holds(&self) -> bool {
        match self {
            BoundsJson::FiniteGroup { holds, .. } | BoundsJson::LieGroup { holds, .. } => *holds,
            BoundsJson::VarianceWitness { .. } => true,
        }
    }

    pub fn table(&self) -> Table {
        match self {
            BoundsJson::FiniteGroup { bound_bits, rows, .. } => {
                let mut t = Table::new(&["N", "A_bits", "bound_bits"]);
                for (n, a) in rows {
                    t.push(vec![n.to_string(), num(*a), num(*bound_bits)]);
                }
                t
            }
            BoundsJson::LieGroup { copies, d, measured_bits, exact_bound_bits, asymptotic_bits, .. } => {
                let mut t = Table::new(&["N", "d", "measured_bits", "exact_bound_bits", "asymptotic_bits"]);
                t.push(vec![
                    copies.to_string(),
                    d.to_string(),
                    num(*measured_bits),
                    num(*exact_bound_bits),
                    num(*asymptotic_bits),
                ]);
                t
            }
            BoundsJson::VarianceWitness { rows, .. } => {
                let mut t = Table::new(&["n", "trace_distance", "V_psi", "V_phi", "V_gap", "gap_over_log2n"]);
                for r in rows {
                    t.push(vec![
                        r.n.to_string(),
                        num(r.trace_distance),
                        num(r.variance_psi),
                        num(r.variance_phi),
                        num(r.variance_gap),
                        num(r.ratio),
                    ]);
                }
                t
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    pub side: &'static str,
    pub upper: f64,
    pub lower: f64,
    pub theta: Option<f64>,
    pub gamma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<MatrixRows>,
    pub tight: bool,
}

pub fn side_label(side: Subsystem) -> &'static str {
    match side {
        Subsystem::A => "A",
        Subsystem::B => "B",
    }
}

impl BoundJson {
    pub fn new(r: &BoundReport, p: Option<f64>) -> Self {
        Self {
            p,
            side: side_label(r.side),
            upper: r.upper,
            lower: r.lower,
            theta: r.theta(),
            gamma: r.gamma(),
            basis: match &r.argmin {
                BoundArgmin::Basis(u) => Some(matrix_to_rows(u)),
                BoundArgmin::Angles { .. } => None,
            },
            tight: r.tight,
        }
    }
}

pub fn bounds_table(rows: &[BoundJson]) -> Table {
    let mut t = Table::new(&["p", "side", "upper", "lower", "theta", "gamma", "tight"]);
    for r in rows {
        t.push(vec![
            opt(r.p),
            r.side.into(),
            num(r.upper),
            num(r.lower),
            opt(r.theta),
            opt(r.gamma),
            r.tight.to_string(),
        ]);
    }
    t
}

#[derive(Debug, Clone, Serialize)]
pub struct PovmInfoJson {
    pub povm: String,
    pub info: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct HolevoJson {
    #[serde(rename = "A_G")]
    pub asymmetry: f64,
    pub best_info: f64,
    pub ratio: Option<f64>,
    pub povm: String,
    pub chi: f64,
    pub holds: bool,
    pub infos: Vec<PovmInfoJson>,
}

impl HolevoJson {
    pub fn new(r: &HolevoReport) -> Self {
        Self {
            asymmetry: r.asymmetry,
            best_info: r.best_info,
            ratio: r.ratio(),
            povm: r.best_povm.clone(),
            chi: r.chi,
            holds: r.holds(),
            infos: r.infos.iter().map(|(l, i)| PovmInfoJson { povm: l.clone(), info: *i }).collect(),
        }
    }

    pub fn table(&self) -> Table {
        let mut t = Table::new(&["povm", "info_bits", "A_G_bits"]);
        for i in &self.infos {
            t.push(vec![i.povm.clone(), num(i.info), num(self.asymmetry)]);
        }
        t
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub check: String,
    pub cases: usize,
    pub failures: usize,
    pub max_violation: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyJson {
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyJson {
    pub fn table(&self) -> Table {
        let mut t = Table::new(&["check", "cases", "failures", "max_violation"]);
        for c in &self.checks {
            t.push(vec![c.check.clone(), c.cases.to_string(), c.failures.to_string(), num(c.max_violation)]);
        }
        t
    }
}
