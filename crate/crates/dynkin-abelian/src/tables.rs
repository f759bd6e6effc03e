//! Embedded reference tables and their end-to-end verification.
//!
//! The dataset lists every strictly odd nilpotent orbit of the exceptional
//! types with `dim g_1` and the largest abelian dimension in `g_1`, and
//! every non-strictly odd orbit with its strictly odd piece. Verification
//! recomputes each quantity from scratch: the grading from the diagram, the
//! maximum independent set from the commutation graph, and the reduction
//! from the diagram, comparing everything against the stored row.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::comm_graph::CommutationGraph;
use crate::grading::{check_g0_generation, grade};
use crate::mis::max_independent_set;
use crate::orbit::{
    partition_to_diagram, ClassicalFamily, ClassicalOrbit, Partition, WeightedDiagram,
};
use crate::reduction::{partition_from_diagram, reduce_diagram, ReductionOutcome};
use crate::root_system::{Family, RootSystem, SimpleType};

/// Identifier of one embedded table: family plus `s` (strictly odd rows)
/// or `o` (non-strictly odd rows).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableId {
    G2s,
    F4s,
    E6s,
    E7s,
    E8s,
    F4o,
    E6o,
    E7o,
    E8o,
}

impl TableId {
    pub const ALL: [TableId; 9] = [
        TableId::G2s,
        TableId::F4s,
        TableId::E6s,
        TableId::E7s,
        TableId::E8s,
        TableId::F4o,
        TableId::E6o,
        TableId::E7o,
        TableId::E8o,
    ];

    /// Strict tables hold strictly odd orbits; the others hold odd orbits
    /// with weight-2 nodes.
    pub fn is_strict(self) -> bool {
        matches!(
            self,
            TableId::G2s | TableId::F4s | TableId::E6s | TableId::E7s | TableId::E8s
        )
    }

    pub fn stype(self) -> SimpleType {
        let (family, rank) = match self {
            TableId::G2s => (Family::G2, 2),
            TableId::F4s | TableId::F4o => (Family::F4, 4),
            TableId::E6s | TableId::E6o => (Family::E6, 6),
            TableId::E7s | TableId::E7o => (Family::E7, 7),
            TableId::E8s | TableId::E8o => (Family::E8, 8),
        };
        SimpleType::new(family, rank).expect("table types are valid")
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TableId::G2s => "G2s",
            TableId::F4s => "F4s",
            TableId::E6s => "E6s",
            TableId::E7s => "E7s",
            TableId::E8s => "E8s",
            TableId::F4o => "F4o",
            TableId::E6o => "E6o",
            TableId::E7o => "E7o",
            TableId::E8o => "E8o",
        };
        f.write_str(s)
    }
}

impl FromStr for TableId {
    type Err = TableError;

    fn from_str(s: &str) -> Result<Self, TableError> {
        match s {
            "G2s" => Ok(TableId::G2s),
            "F4s" => Ok(TableId::F4s),
            "E6s" => Ok(TableId::E6s),
            "E7s" => Ok(TableId::E7s),
            "E8s" => Ok(TableId::E8s),
            "F4o" => Ok(TableId::F4o),
            "E6o" => Ok(TableId::E6o),
            "E7o" => Ok(TableId::E7o),
            "E8o" => Ok(TableId::E8o),
            other => Err(TableError::Parse(format!("unknown table id `{other}`"))),
        }
    }
}

/// The strictly odd piece recorded with an odd-table row: the subalgebra
/// type, plus the partition (classical pieces) or the orbit name in the
/// corresponding strict table (exceptional pieces) when the dataset pins it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrictPiece {
    Subtype(SimpleType),
    Classical(SimpleType, Partition),
    ExceptionalOrbit(SimpleType, String),
}

impl StrictPiece {
    pub fn stype(&self) -> SimpleType {
        match self {
            StrictPiece::Subtype(t) => *t,
            StrictPiece::Classical(t, _) => *t,
            StrictPiece::ExceptionalOrbit(t, _) => *t,
        }
    }
}

impl fmt::Display for StrictPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StrictPiece::Subtype(t) => write!(f, "{t}"),
            StrictPiece::Classical(t, p) => write!(f, "{t} {p}"),
            StrictPiece::ExceptionalOrbit(t, name) => write!(f, "{t} {name}"),
        }
    }
}

impl FromStr for StrictPiece {
    type Err = TableError;

    fn from_str(s: &str) -> Result<Self, TableError> {
        let mut it = s.splitn(2, ' ');
        let t: SimpleType = it
            .next()
            .ok_or_else(|| TableError::Parse(format!("empty strict piece `{s}`")))?
            .parse()
            .map_err(|e| TableError::Parse(format!("bad piece type in `{s}`: {e}")))?;
        match it.next() {
            None => Ok(StrictPiece::Subtype(t)),
            Some(rest) if rest.chars().all(|c| c.is_ascii_digit() || c == ',') => {
                let p: Partition = rest
                    .parse()
                    .map_err(|e| TableError::Parse(format!("bad piece partition in `{s}`: {e}")))?;
                Ok(StrictPiece::Classical(t, p))
            }
            Some(rest) => Ok(StrictPiece::ExceptionalOrbit(t, rest.to_string())),
        }
    }
}

/// One row of the embedded dataset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub table: TableId,
    pub name: String,
    pub diagram: WeightedDiagram,
    /// Stored for strict rows; odd rows recompute it.
    pub dim_g1: Option<usize>,
    /// Largest abelian dimension: stored for all strict rows and for
    /// half-abelian odd rows (where it equals half the dimension).
    pub max_abelian: Option<usize>,
    pub strict_piece: Option<StrictPiece>,
}

impl TableRow {
    /// Whether the row sits in a "with half-abelian g_1" column.
    pub fn half_abelian(&self) -> bool {
        if self.table.is_strict() {
            match (self.dim_g1, self.max_abelian) {
                (Some(d), Some(m)) => 2 * m == d,
                _ => false,
            }
        } else {
            self.max_abelian.is_some()
        }
    }

    /// Serializes back to the pipe-delimited line format.
    pub fn to_line(&self) -> String {
        let t = self.diagram.stype();
        format!(
            "{}|{}|{} {}|{}|{}|{}|{}",
            self.table,
            self.name,
            t.family(),
            t.rank(),
            self.diagram,
            self.dim_g1.map(|d| d.to_string()).unwrap_or_default(),
            self.max_abelian.map(|m| m.to_string()).unwrap_or_default(),
            self.strict_piece
                .as_ref()
                .map(|p| p.to_string())
                .unwrap_or_default(),
        )
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("cannot parse table data: {0}")]
    Parse(String),
}

/// Parses one pipe-delimited record.
pub fn parse_line(line: &str) -> Result<TableRow, TableError> {
    let fields: Vec<&str> = line.split('|').collect();
    if fields.len() != 7 {
        return Err(TableError::Parse(format!(
            "expected 7 fields, got {} in `{line}`",
            fields.len()
        )));
    }
    let table: TableId = fields[0].parse()?;
    let name = fields[1].to_string();
    let mut ft = fields[2].split_whitespace();
    let family: Family = ft
        .next()
        .ok_or_else(|| TableError::Parse(format!("missing family in `{line}`")))?
        .parse()
        .map_err(|e| TableError::Parse(format!("bad family in `{line}`: {e}")))?;
    let rank: usize = ft
        .next()
        .and_then(|r| r.parse().ok())
        .ok_or_else(|| TableError::Parse(format!("missing rank in `{line}`")))?;
    let stype = SimpleType::new(family, rank)
        .map_err(|e| TableError::Parse(format!("bad type in `{line}`: {e}")))?;
    let diagram = WeightedDiagram::parse(stype, fields[3])
        .map_err(|e| TableError::Parse(format!("bad diagram in `{line}`: {e}")))?;
    let parse_opt = |f: &str| -> Result<Option<usize>, TableError> {
        if f.is_empty() {
            Ok(None)
        } else {
            f.parse()
                .map(Some)
                .map_err(|_| TableError::Parse(format!("bad number `{f}` in `{line}`")))
        }
    };
    let dim_g1 = parse_opt(fields[4])?;
    let max_abelian = parse_opt(fields[5])?;
    let strict_piece = if fields[6].is_empty() {
        None
    } else {
        Some(fields[6].parse()?)
    };
    Ok(TableRow {
        table,
        name,
        diagram,
        dim_g1,
        max_abelian,
        strict_piece,
    })
}

const EMBEDDED: &str = include_str!("../data/tables.txt");

/// All embedded rows, in file order.
pub fn embedded_rows() -> Vec<TableRow> {
    EMBEDDED
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| parse_line(l).expect("embedded data is well formed"))
        .collect()
}

/// Rows of one table.
pub fn table_rows(id: TableId) -> Vec<TableRow> {
    embedded_rows()
        .into_iter()
        .filter(|r| r.table == id)
        .collect()
}

/// Verification report for one row: every recomputed quantity next to the
/// stored one, and the list of mismatches (empty when the row verifies).
#[derive(Clone, Debug)]
pub struct RowReport {
    pub table: TableId,
    pub name: String,
    pub computed_dim_g1: usize,
    pub computed_max: usize,
    pub proven_optimal: bool,
    pub capped_by_bound: bool,
    pub half_abelian: bool,
    pub mismatches: Vec<String>,
}

impl RowReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for RowReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            write!(
                f,
                "{} {}: ok (dim g1 = {}, max abelian = {}{})",
                self.table,
                self.name,
                self.computed_dim_g1,
                self.computed_max,
                if self.capped_by_bound {
                    ", reached the half bound"
                } else {
                    ", proven optimal"
                }
            )
        } else {
            write!(
                f,
                "{} {}: MISMATCH {}",
                self.table,
                self.name,
                self.mismatches.join("; ")
            )
        }
    }
}

/// Shared per-run state so root systems are built once per type.
pub struct Verifier {
    systems: HashMap<SimpleType, RootSystem>,
    strict_diagrams: HashMap<(TableId, String), WeightedDiagram>,
}

impl Default for Verifier {
    fn default() -> Self {
        Self::new()
    }
}

impl Verifier {
    pub fn new() -> Self {
        let strict_diagrams = embedded_rows()
            .into_iter()
            .filter(|r| r.table.is_strict())
            .map(|r| ((r.table, r.name.clone()), r.diagram))
            .collect();
        Verifier {
            systems: HashMap::new(),
            strict_diagrams,
        }
    }

    fn system(&mut self, t: SimpleType) -> &RootSystem {
        self.systems
            .entry(t)
            .or_insert_with(|| RootSystem::build(t))
    }

    fn strict_table_for(family: Family) -> Option<TableId> {
        match family {
            Family::G2 => Some(TableId::G2s),
            Family::F4 => Some(TableId::F4s),
            Family::E6 => Some(TableId::E6s),
            Family::E7 => Some(TableId::E7s),
            Family::E8 => Some(TableId::E8s),
            _ => None,
        }
    }

    /// Recomputes everything a row claims and reports the differences.
    pub fn verify_row(&mut self, row: &TableRow) -> RowReport {
        let mut mismatches = Vec::new();

        let has_two = row.diagram.weights().contains(&2);
        if row.table.is_strict() && has_two {
            mismatches.push("strict-table diagram contains a weight 2".to_string());
        }
        if !row.table.is_strict() && !has_two {
            mismatches.push("odd-table diagram has no weight 2".to_string());
        }

        let rs = self.system(row.diagram.stype());
        let grading = grade(rs, &row.diagram).expect("row diagram matches its type");
        let dim = grading.dim_g1();
        if !dim.is_multiple_of(2) {
            mismatches.push(format!("dim g1 = {dim} is odd"));
        }
        if let Some(stored) = row.dim_g1 {
            if stored != dim {
                mismatches.push(format!("dim g1: stored {stored}, computed {dim}"));
            }
        }
        if !check_g0_generation(&grading, &row.diagram) {
            mismatches.push("g_1 is not generated from the weight-1 simple roots".to_string());
        }

        let graph = CommutationGraph::from_grading(&grading);
        let mis = max_independent_set(&graph, Some(dim / 2));
        if !(mis.proven_optimal || mis.capped_by_bound) {
            mismatches.push("solver reported neither optimality nor the cap".to_string());
        }
        if let Some(stored) = row.max_abelian {
            if stored != mis.size {
                mismatches.push(format!(
                    "max abelian: stored {stored}, computed {}",
                    mis.size
                ));
            }
        }
        let half = 2 * mis.size == dim;
        if half != row.half_abelian() {
            mismatches.push(format!(
                "half-abelian: table says {}, graph says {half}",
                row.half_abelian()
            ));
        }

        if !row.table.is_strict() {
            self.verify_reduction(row, dim, &mut mismatches);
        }

        RowReport {
            table: row.table,
            name: row.name.clone(),
            computed_dim_g1: dim,
            computed_max: mis.size,
            proven_optimal: mis.proven_optimal,
            capped_by_bound: mis.capped_by_bound,
            half_abelian: half,
            mismatches,
        }
    }

    fn verify_reduction(&mut self, row: &TableRow, dim: usize, mismatches: &mut Vec<String>) {
        let reduced = match reduce_diagram(&row.diagram) {
            Ok(ReductionOutcome::Reduced(r)) => r,
            other => {
                mismatches.push(format!("reduction did not produce a piece: {other:?}"));
                return;
            }
        };
        let Some(piece) = row.strict_piece.as_ref() else {
            mismatches.push("odd row without a recorded strict piece".to_string());
            return;
        };
        if piece.stype() != reduced.subtype {
            mismatches.push(format!(
                "strict piece type: stored {}, computed {}",
                piece.stype(),
                reduced.subtype
            ));
            return;
        }
        match piece {
            StrictPiece::Classical(t, p) => {
                match ClassicalOrbit::new(
                    ClassicalFamily::from_family(t.family()).expect("classical piece"),
                    p.clone(),
                ) {
                    Ok(orbit) => {
                        let expected = partition_to_diagram(&orbit);
                        if expected != reduced.subdiagram {
                            mismatches.push(format!(
                                "piece diagram: partition gives [{expected}], reduction gives [{}]",
                                reduced.subdiagram
                            ));
                        }
                    }
                    Err(e) => mismatches.push(format!("piece partition invalid: {e}")),
                }
            }
            StrictPiece::ExceptionalOrbit(t, name) => {
                let table = Self::strict_table_for(t.family())
                    .expect("exceptional piece has a strict table");
                match self.strict_diagrams.get(&(table, name.clone())) {
                    Some(d) => {
                        if *d != reduced.subdiagram {
                            mismatches.push(format!(
                                "piece diagram: {table} row {name} has [{d}], reduction gives [{}]",
                                reduced.subdiagram
                            ));
                        }
                    }
                    None => mismatches.push(format!("no {table} row named {name}")),
                }
            }
            StrictPiece::Subtype(_) => {
                if partition_from_diagram(&reduced.subdiagram).is_none() {
                    mismatches.push(format!(
                        "no valid partition matches the piece diagram [{}]",
                        reduced.subdiagram
                    ));
                }
            }
        }

        // the reduction preserves the degree-1 component
        let sub_rs = self.system(reduced.subtype);
        let sub_grading =
            grade(sub_rs, &reduced.subdiagram).expect("piece diagram matches its type");
        if sub_grading.dim_g1() != dim {
            mismatches.push(format!(
                "piece dim g1 = {}, parent dim g1 = {dim}",
                sub_grading.dim_g1()
            ));
        }
    }
}

/// Verifies every embedded row; the returned reports are in file order.
pub fn verify_all() -> Vec<RowReport> {
    let mut verifier = Verifier::new();
    embedded_rows()
        .iter()
        .map(|row| verifier.verify_row(row))
        .collect()
}
