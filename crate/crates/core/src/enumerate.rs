//! Grid scans over `(d, g)`, per-type union of certificates, minimal degrees
//! per genus, and verification against an embedded reference transcription of
//! the published classification tables.
//!
//! The reference clauses and the quintic oracle are deliberately independent
//! of the certificate engine: they are literal transcriptions kept apart so
//! that the verifier can detect drift between the two derivations.

use std::collections::BTreeMap;
use std::io::{self, Write};

use serde::Serialize;
use thiserror::Error;

use crate::catalog::{rows_for_type, CicyType};
use crate::rules::{certify, Certificate, CurveClass};

/// Scan grid convention: `d` ranges over `1..=d_max`, `g` over `0..=g_max`,
/// so a `d_max = 40`, `g_max = 30` scan visits `40 * 31 = 1240` cells.
#[derive(Debug, Clone)]
pub struct AdmissibleTable {
    pub cicy: CicyType,
    pub d_max: u32,
    pub g_max: u32,
    /// `(d, g) ->` certificate of the first admissible row in table order;
    /// absent when no row is admissible.
    pub cells: BTreeMap<(u32, u32), Certificate>,
}

/// The first construction row (in table order) whose certificate is
/// admissible for `(d, g)`, if any.
pub fn admissible(t: CicyType, d: u32, g: u32) -> Option<Certificate> {
    let curve = CurveClass::new(d, g).ok()?;
    rows_for_type(t)
        .into_iter()
        .map(|row| certify(row, curve))
        .find(|cert| cert.admissible)
}

impl AdmissibleTable {
    pub fn build(cicy: CicyType, d_max: u32, g_max: u32) -> AdmissibleTable {
        let mut cells = BTreeMap::new();
        for d in 1..=d_max {
            for g in 0..=g_max {
                if let Some(cert) = admissible(cicy, d, g) {
                    cells.insert((d, g), cert);
                }
            }
        }
        AdmissibleTable {
            cicy,
            d_max,
            g_max,
            cells,
        }
    }
}

/// Result of scanning a genus column: the minimal admissible degree and the
/// full admissible subset of `1..=d_max`. The subset is reported faithfully
/// rather than assumed to be an up-set; the sporadic equality branches make
/// contiguity a fact to observe, not to presume.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeScan {
    pub genus: u32,
    pub d_max: u32,
    pub min: Option<u32>,
    pub admissible: Vec<u32>,
}

pub fn min_degree(t: CicyType, g: u32, d_max: u32) -> DegreeScan {
    let admissible: Vec<u32> = (1..=d_max).filter(|&d| admissible(t, d, g).is_some()).collect();
    DegreeScan {
        genus: g,
        d_max,
        min: admissible.first().copied(),
        admissible,
    }
}

/// Independent cross-check for the quintic type: a literal transcription of
/// the two per-row condition unions, used only as an oracle.
pub fn quintic_oracle(d: u32, g: u32) -> bool {
    let d = d as i64;
    let g = g as i64;
    let d2 = d * d;
    let first = (8 * g < d2 && d2 <= 16) || g <= 12.min(d - 3);
    let second = 12 * g < d2 && d2 <= 144 && (d, g) != (7, 4);
    let sporadic = (d, g) == (3, 1) || (d, g) == (9, 7);
    let tail = g <= 22.min(2 * d - 13);
    first || second || sporadic || tail
}

/// How a reference clause bounds the degree for a genus range.
#[derive(Debug, Clone, Copy)]
enum Bound {
    /// `d >= c`.
    AtLeast(u32),
    /// `d >= g + c`.
    GenusPlus(u32),
    /// `d >= ceil((g + c) / 2)`; the source states the rational bound, and
    /// `d` is an integer.
    HalfCeil(u32),
}

#[derive(Debug, Clone, Copy)]
struct Clause {
    g_lo: u32,
    g_hi: u32,
    bound: Bound,
}

const fn cl(g_lo: u32, g_hi: u32, bound: Bound) -> Clause {
    Clause { g_lo, g_hi, bound }
}

static QUINTIC_CLAUSES: [Clause; 6] = [
    cl(0, 0, Bound::AtLeast(1)),
    cl(1, 1, Bound::AtLeast(3)),
    cl(2, 6, Bound::GenusPlus(3)),
    cl(7, 9, Bound::GenusPlus(2)),
    cl(10, 10, Bound::AtLeast(11)),
    cl(11, 22, Bound::HalfCeil(13)),
];

static FOUR_TWO_CLAUSES: [Clause; 6] = [
    cl(0, 0, Bound::AtLeast(1)),
    cl(1, 1, Bound::AtLeast(3)),
    cl(2, 2, Bound::AtLeast(5)),
    cl(3, 8, Bound::GenusPlus(4)),
    cl(9, 11, Bound::GenusPlus(3)),
    cl(12, 15, Bound::HalfCeil(16)),
];

static THREE_THREE_CLAUSES: [Clause; 4] = [
    cl(0, 0, Bound::AtLeast(1)),
    cl(1, 1, Bound::AtLeast(3)),
    cl(2, 2, Bound::AtLeast(5)),
    cl(3, 7, Bound::GenusPlus(4)),
];

static THREE_TWO_TWO_CLAUSES: [Clause; 5] = [
    cl(0, 0, Bound::AtLeast(1)),
    cl(1, 1, Bound::AtLeast(3)),
    cl(2, 2, Bound::AtLeast(5)),
    cl(3, 3, Bound::AtLeast(7)),
    cl(4, 10, Bound::GenusPlus(5)),
];

static TWO_TWO_TWO_TWO_CLAUSES: [Clause; 4] = [
    cl(0, 0, Bound::AtLeast(1)),
    cl(1, 1, Bound::AtLeast(4)),
    cl(2, 2, Bound::AtLeast(6)),
    cl(3, 3, Bound::AtLeast(7)),
];

/// Literal transcription of the classification's five case lists.
fn reference_clauses(t: CicyType) -> &'static [Clause] {
    match t {
        CicyType::Quintic => &QUINTIC_CLAUSES,
        CicyType::FourTwo => &FOUR_TWO_CLAUSES,
        CicyType::ThreeThree => &THREE_THREE_CLAUSES,
        CicyType::ThreeTwoTwo => &THREE_TWO_TWO_CLAUSES,
        CicyType::TwoTwoTwoTwo => &TWO_TWO_TWO_TWO_CLAUSES,
    }
}

/// The minimal degree the reference tables state for genus `g`, or `None`
/// when no clause covers `g`.
pub fn reference_min_degree(t: CicyType, g: u32) -> Option<u32> {
    for clause in reference_clauses(t) {
        if clause.g_lo <= g && g <= clause.g_hi {
            let bound = match clause.bound {
                Bound::AtLeast(c) => c,
                Bound::GenusPlus(c) => g + c,
                Bound::HalfCeil(c) => (g + c).div_ceil(2),
            };
            return Some(bound);
        }
    }
    None
}

/// One disagreement between the engine and the reference tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub d: u32,
    pub g: u32,
    pub computed: bool,
    pub reference: bool,
}

/// Outcome of verifying one CICY type against the reference tables over the
/// scan grid. Mismatches are reported, never reconciled.
#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub cicy: CicyType,
    pub d_max: u32,
    pub g_max: u32,
    /// Cells where admissibility and the reference disagree.
    pub mismatches: Vec<Mismatch>,
    /// `(g, stated, computed)` where the minimal degree differs.
    pub bound_failures: Vec<(u32, u32, Option<u32>)>,
    /// Genera not covered by any clause that nevertheless admit some degree.
    pub stray_genera: Vec<u32>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.bound_failures.is_empty() && self.stray_genera.is_empty()
    }
}

/// Compare the computed admissible set against the reference clauses over the
/// grid: cell-by-cell equality, exact minimal degrees for every covered
/// genus, and no admissible degree for any uncovered genus.
pub fn verify_theorem(t: CicyType, d_max: u32, g_max: u32) -> TheoremReport {
    let mut mismatches = Vec::new();
    let mut bound_failures = Vec::new();
    let mut stray_genera = Vec::new();
    for g in 0..=g_max {
        let scan = min_degree(t, g, d_max);
        match reference_min_degree(t, g) {
            Some(stated) => {
                if scan.min != Some(stated) {
                    bound_failures.push((g, stated, scan.min));
                }
            }
            None => {
                if scan.min.is_some() {
                    stray_genera.push(g);
                }
            }
        }
        for d in 1..=d_max {
            let computed = scan.admissible.binary_search(&d).is_ok();
            let reference = reference_min_degree(t, g).is_some_and(|bound| d >= bound);
            if computed != reference {
                mismatches.push(Mismatch {
                    d,
                    g,
                    computed,
                    reference,
                });
            }
        }
    }
    TheoremReport {
        cicy: t,
        d_max,
        g_max,
        mismatches,
        bound_failures,
        stray_genera,
    }
}

/// Largest genus with an admissible degree in `1..=d_max`, scanning
/// `g <= g_max`. The node-budget condition bounds the genus independently of
/// the degree, so any `d_max` beyond the reference bounds finds the true cap.
pub fn genus_cap(t: CicyType, g_max: u32, d_max: u32) -> Option<u32> {
    (0..=g_max).rev().find(|&g| min_degree(t, g, d_max).min.is_some())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Human,
    Csv,
    JsonLines,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("unknown format: {0}")]
    UnknownFormat(String),
    #[error("malformed csv at line {line}: {message}")]
    MalformedCsv { line: usize, message: String },
}

impl TableFormat {
    pub fn parse(s: &str) -> Result<TableFormat, TableError> {
        match s {
            "human" => Ok(TableFormat::Human),
            "csv" => Ok(TableFormat::Csv),
            "jsonlines" => Ok(TableFormat::JsonLines),
            other => Err(TableError::UnknownFormat(other.to_string())),
        }
    }
}

pub const CSV_HEADER: &str = "type,d,g,admissible,row,count";

/// One grid cell in serialized form. `row` is the 1-based table index of the
/// first admissible row; `row` and `count` are empty when not admissible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellRecord {
    #[serde(rename = "type")]
    pub cicy: String,
    pub d: u32,
    pub g: u32,
    pub admissible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub row: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exists_on_k3: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cond_degree_window: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cond_node_budget: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cond_node_surplus: Option<bool>,
    /// Decimal string: the counts outgrow fixed-width integers.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genericity_note: Option<&'static str>,
}

impl CellRecord {
    fn of(table: &AdmissibleTable, d: u32, g: u32) -> CellRecord {
        match table.cells.get(&(d, g)) {
            Some(cert) => CellRecord {
                cicy: table.cicy.label().to_string(),
                d,
                g,
                admissible: true,
                row: Some(cert.row.index + 1),
                exists_on_k3: Some(cert.exists_on_k3.tag().to_string()),
                cond_degree_window: Some(cert.cond_degree_window),
                cond_node_budget: Some(cert.cond_node_budget),
                cond_node_surplus: Some(cert.cond_node_surplus),
                count: cert.expected_count.as_ref().map(|n| n.to_string()),
                genericity_note: Some(cert.genericity_note),
            },
            None => CellRecord {
                cicy: table.cicy.label().to_string(),
                d,
                g,
                admissible: false,
                row: None,
                exists_on_k3: None,
                cond_degree_window: None,
                cond_node_budget: None,
                cond_node_surplus: None,
                count: None,
                genericity_note: None,
            },
        }
    }
}

/// Deterministic serialization of a table. Cells are emitted with `d` outer
/// ascending and `g` inner ascending; line endings are LF.
pub fn emit_table(table: &AdmissibleTable, format: TableFormat, out: &mut dyn Write) -> io::Result<()> {
    match format {
        TableFormat::Csv => {
            writeln!(out, "{}", CSV_HEADER)?;
            for d in 1..=table.d_max {
                for g in 0..=table.g_max {
                    let rec = CellRecord::of(table, d, g);
                    writeln!(
                        out,
                        "{},{},{},{},{},{}",
                        rec.cicy,
                        rec.d,
                        rec.g,
                        rec.admissible,
                        rec.row.map(|r| r.to_string()).unwrap_or_default(),
                        rec.count.unwrap_or_default()
                    )?;
                }
            }
        }
        TableFormat::JsonLines => {
            for d in 1..=table.d_max {
                for g in 0..=table.g_max {
                    let rec = CellRecord::of(table, d, g);
                    writeln!(out, "{}", serde_json::to_string(&rec)?)?;
                }
            }
        }
        TableFormat::Human => {
            writeln!(out, "type ({})  d = 1..{}  g = 0..{}", table.cicy.label(), table.d_max, table.g_max)?;
            write!(out, "   d\\g |")?;
            for g in 0..=table.g_max {
                write!(out, "{:>4}", g)?;
            }
            writeln!(out)?;
            let width = 4 * (table.g_max as usize + 1);
            writeln!(out, "  -----+{}", "-".repeat(width))?;
            for d in 1..=table.d_max {
                write!(out, "  {:>4} |", d)?;
                for g in 0..=table.g_max {
                    let mark = if table.cells.contains_key(&(d, g)) { "*" } else { "." };
                    write!(out, "{:>4}", mark)?;
                }
                writeln!(out)?;
            }
            write!(out, "  min d |")?;
            for g in 0..=table.g_max {
                let m = (1..=table.d_max).find(|&d| table.cells.contains_key(&(d, g)));
                match m {
                    Some(d) => write!(out, "{:>4}", d)?,
                    None => write!(out, "{:>4}", "-")?,
                }
            }
            writeln!(out)?;
        }
    }
    Ok(())
}

/// Parse csv produced by [`emit_table`] back into cell records (the columns
/// that the csv carries). Inverse of the csv emitter on its image.
pub fn parse_csv(text: &str) -> Result<Vec<CellRecord>, TableError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header == CSV_HEADER => {}
        Some((_, header)) => {
            return Err(TableError::MalformedCsv {
                line: 1,
                message: format!("bad header: {}", header),
            })
        }
        None => {
            return Err(TableError::MalformedCsv {
                line: 1,
                message: "empty input".to_string(),
            })
        }
    }
    let mut records = Vec::new();
    for (idx, line) in lines {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        // the type labels themselves contain commas, so split from the right:
        // the last five fields are d, g, admissible, row, count
        if fields.len() < 6 {
            return Err(TableError::MalformedCsv {
                line: idx + 1,
                message: "expected 6 columns".to_string(),
            });
        }
        let tail = &fields[fields.len() - 5..];
        let cicy = fields[..fields.len() - 5].join(",");
        let bad = |message: String| TableError::MalformedCsv {
            line: idx + 1,
            message,
        };
        let d: u32 = tail[0].parse().map_err(|e| bad(format!("d: {}", e)))?;
        let g: u32 = tail[1].parse().map_err(|e| bad(format!("g: {}", e)))?;
        let admissible: bool = tail[2].parse().map_err(|e| bad(format!("admissible: {}", e)))?;
        let row = if tail[3].is_empty() {
            None
        } else {
            Some(tail[3].parse().map_err(|e| bad(format!("row: {}", e)))?)
        };
        let count = if tail[4].is_empty() {
            None
        } else {
            Some(tail[4].to_string())
        };
        records.push(CellRecord {
            cicy,
            d,
            g,
            admissible,
            row,
            exists_on_k3: None,
            cond_degree_window: None,
            cond_node_budget: None,
            cond_node_surplus: None,
            count,
            genericity_note: None,
        });
    }
    Ok(records)
}
