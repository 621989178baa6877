use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use crate::budget::DimensionBudget;
use crate::error::{bail, Result};
use crate::linalg::{self, c, CMatrix, C64};

use super::ChargeGrading;

/// Largest group order accepted; keeps exhaustive associativity checks cheap.
pub const MAX_GROUP_ORDER: usize = 64;
/// Tolerance for unitarity and the homomorphism property.
pub const REP_TOL: f64 = 1e-10;

/// A finite group given by its multiplication table, with one unitary per element.
///
/// `table[a][b]` is the index of the product `g_a g_b`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteGroupRep {
    table: Vec<Vec<usize>>,
    unitaries: Vec<CMatrix>,
}

/// One failed group or representation axiom.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    TableEntryOutOfRange { row: usize, col: usize, value: usize },
    NotAssociative { a: usize, b: usize, c: usize },
    NoIdentity,
    MissingInverse { element: usize },
    NonUnitary { element: usize, deviation: f64 },
    NotHomomorphic { a: usize, b: usize, deviation: f64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TableEntryOutOfRange { row, col, value } => {
                write!(f, "table[{row}][{col}] = {value} is not an element index")
            }
            Violation::NotAssociative { a, b, c } => {
                write!(f, "associativity fails on ({a}, {b}, {c})")
            }
            Violation::NoIdentity => write!(f, "no identity element"),
            Violation::MissingInverse { element } => write!(f, "element {element} has no inverse"),
            Violation::NonUnitary { element, deviation } => {
                write!(f, "T({element}) is not unitary (deviation {deviation:e})")
            }
            Violation::NotHomomorphic { a, b, deviation } => {
                write!(f, "T({a})T({b}) != T({a}{b}) (deviation {deviation:e})")
            }
        }
    }
}

/// Every violated invariant of a [`FiniteGroupRep`].
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl FiniteGroupRep {
    /// Checks shapes only; call [`validate`](Self::validate) for the axioms.
    pub fn new(table: Vec<Vec<usize>>, unitaries: Vec<CMatrix>) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            bail!(InvalidRepresentation, "empty group");
        }
        if order > MAX_GROUP_ORDER {
            bail!(InvalidRepresentation, "group order {order} exceeds cap {MAX_GROUP_ORDER}");
        }
        if table.iter().any(|row| row.len() != order) {
            bail!(InvalidRepresentation, "multiplication table is not {order}x{order}");
        }
        if unitaries.len() != order {
            bail!(
                InvalidRepresentation,
                "{} unitaries supplied for a group of order {order}",
                unitaries.len()
            );
        }
        let dim = unitaries[0].nrows();
        if dim == 0 || unitaries.iter().any(|u| u.nrows() != dim || u.ncols() != dim) {
            bail!(InvalidRepresentation, "unitaries must all be square of the same size");
        }
        Ok(Self { table, unitaries })
    }

    /// Shapes plus every axiom; the error lists the violations.
    pub fn validated(table: Vec<Vec<usize>>, unitaries: Vec<CMatrix>) -> Result<Self> {
        let rep = Self::new(table, unitaries)?;
        let report = rep.validate();
        if let Some(first) = report.violations.first() {
            bail!(
                InvalidRepresentation,
                "{} violation(s), first: {first}",
                report.violations.len()
            );
        }
        Ok(rep)
    }

    /// Derives the multiplication table from a list of unitaries closed
    /// under multiplication (matched entrywise within `tol`).
    pub fn from_unitaries(unitaries: Vec<CMatrix>, tol: f64) -> Result<Self> {
        let order = unitaries.len();
        let mut table = alloc::vec![alloc::vec![0; order]; order];
        for a in 0..order {
            for b in 0..order {
                let product = &unitaries[a] * &unitaries[b];
                match (0..order).find(|&k| linalg::max_abs_diff(&product, &unitaries[k]) <= tol) {
                    Some(k) => table[a][b] = k,
                    None => bail!(InvalidRepresentation, "set not closed: T({a})T({b}) is not in the list"),
                }
            }
        }
        Self::validated(table, unitaries)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn dim(&self) -> usize {
        self.unitaries[0].nrows()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn unitaries(&self) -> &[CMatrix] {
        &self.unitaries
    }

    pub fn identity_index(&self) -> Option<usize> {
        let n = self.order();
        (0..n).find(|&e| (0..n).all(|g| self.table[e][g] == g && self.table[g][e] == g))
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.order();
        let mut violations = Vec::new();
        for (row, entries) in self.table.iter().enumerate() {
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    violations.push(Violation::TableEntryOutOfRange { row, col, value });
                }
            }
        }
        if !violations.is_empty() {
            return ValidationReport { violations };
        }
        let t = &self.table;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if t[t[a][b]][c] != t[a][t[b][c]] {
                        violations.push(Violation::NotAssociative { a, b, c });
                    }
                }
            }
        }
        match self.identity_index() {
            None => violations.push(Violation::NoIdentity),
            Some(e) => {
                for g in 0..n {
                    if !(0..n).any(|h| t[g][h] == e && t[h][g] == e) {
                        violations.push(Violation::MissingInverse { element: g });
                    }
                }
            }
        }
        for (element, u) in self.unitaries.iter().enumerate() {
            let deviation = linalg::unitarity_defect(u);
            if deviation > REP_TOL {
                violations.push(Violation::NonUnitary { element, deviation });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let deviation =
                    linalg::max_abs_diff(&(&self.unitaries[a] * &self.unitaries[b]), &self.unitaries[t[a][b]]);
                if deviation > REP_TOL {
                    violations.push(Violation::NotHomomorphic { a, b, deviation });
                }
            }
        }
        ValidationReport { violations }
    }

    /// The diagonal action `T(g)^{⊗n}` on `n` copies.
    pub fn tensor_power(&self, n: u32, budget: &DimensionBudget) -> Result<Self> {
        if n == 0 {
            bail!(Domain, "tensor power needs n >= 1");
        }
        budget.power("group tensor power", self.dim(), n)?;
        Ok(Self {
            table: self.table.clone(),
            unitaries: self
                .unitaries
                .iter()
                .map(|u| linalg::kron_power(u, n as usize))
                .collect(),
        })
    }

    /// `{I, Z}` on a qubit.
    pub fn z2_phase_flip() -> Self {
        Self {
            table: alloc::vec![alloc::vec![0, 1], alloc::vec![1, 0]],
            unitaries: alloc::vec![linalg::identity(2), linalg::pauli_z()],
        }
    }

    /// The cyclic subgroup `Z_M ⊂ U(1)` acting as `e^{2πi k N̂ / M}`.
    pub fn cyclic_phase(grading: &ChargeGrading, m: usize) -> Result<Self> {
        if m == 0 || m > MAX_GROUP_ORDER {
            bail!(Domain, "cyclic order {m} outside 1..={MAX_GROUP_ORDER}");
        }
        let table = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        let unitaries = (0..m)
            .map(|k| grading.phase_unitary(2.0 * PI * k as f64 / m as f64))
            .collect();
        Self::new(table, unitaries)
    }

    /// The quaternion group `{±I, ±iX, ±iY, ±iZ}` on a qubit.
    pub fn quaternion() -> Self {
        let i = c(0.0, 1.0);
        let base = [
            linalg::identity(2),
            linalg::pauli_x() * i,
            linalg::pauli_y() * i,
            linalg::pauli_z() * i,
        ];
        let unitaries = base
            .iter()
            .flat_map(|u| [u.clone(), u * c(-1.0, 0.0)])
            .collect();
        Self::from_unitaries(unitaries, 1e-12).expect("quaternion group is closed")
    }

    /// The dihedral group of the square as real 2×2 rotations and reflections.
    pub fn dihedral4() -> Self {
        let rot = CMatrix::from_row_slice(2, 2, &[C64::from(0.0), c(-1.0, 0.0), c(1.0, 0.0), C64::from(0.0)]);
        let reflect = linalg::pauli_z();
        let mut unitaries = Vec::with_capacity(8);
        let mut r = linalg::identity(2);
        for _ in 0..4 {
            unitaries.push(r.clone());
            unitaries.push(&r * &reflect);
            r = &rot * r;
        }
        Self::from_unitaries(unitaries, 1e-12).expect("dihedral group is closed")
    }
}
