//! Command-line front end. Every run with identical arguments produces
//! byte-identical output: all randomness flows from `--seed`, formats avoid
//! locale-dependent pieces, and line endings are LF.
//!
//! Exit codes: 0 success (or verification passed), 1 verification mismatch,
//! 2 usage error, 3 computation error.

use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::catalog::{load_catalog, rows_for_type, CicyType, ConstructionRow};
use crate::enumerate::{
    emit_table, verify_theorem, AdmissibleTable, CellRecord, TableFormat,
};
use crate::nodelab::{
    self, independence_check, intersect_plane_curves, kernel_section, parse_form, random_alphas,
    HomogeneousForm, NodeLabError,
};
use crate::rules::{certify, Certificate, CurveClass};

const EXIT_OK: i32 = 0;
const EXIT_MISMATCH: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_COMPUTE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "cicy",
    about = "Certify isolated smooth curves in CICY threefolds and probe the node-locus geometry over finite fields",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the nine-row construction table
    Catalog {
        #[arg(long, default_value = "human")]
        format: String,
    },
    /// Certify one (type, degree, genus) triple
    Certify {
        #[command(flatten)]
        target: TypeArg,
        /// Curve degree
        #[arg(long)]
        d: u32,
        /// Curve genus
        #[arg(long)]
        g: u32,
        /// Pin a single table row (1-based); default unions over the type's rows
        #[arg(long)]
        row: Option<usize>,
        #[arg(long, default_value = "human")]
        format: String,
    },
    /// Scan a (d, g) grid and emit the admissible table
    Table {
        #[command(flatten)]
        target: TypeArg,
        #[arg(long, default_value_t = 20)]
        dmax: u32,
        #[arg(long, default_value_t = 12)]
        gmax: u32,
        #[arg(long, default_value = "human")]
        format: String,
    },
    /// Check the engine against the embedded reference tables
    VerifyTheorem {
        /// One CICY type or `all`
        #[arg(long, default_value = "all")]
        r#type: String,
        #[arg(long, default_value_t = 40)]
        dmax: u32,
        #[arg(long, default_value_t = 30)]
        gmax: u32,
    },
    /// Intersect two plane curves and run independence checks on the points
    Nodes {
        /// Degrees of the two seeded random forms, e.g. `4,4`
        #[arg(long)]
        degrees: Option<String>,
        /// Read the first form from a file instead (header `p=<prime> deg=<e>`)
        #[arg(long)]
        form_a: Option<PathBuf>,
        /// Read the second form from a file instead
        #[arg(long)]
        form_b: Option<PathBuf>,
        #[arg(long, default_value_t = 10007)]
        prime: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated degrees to spark-check, e.g. `1,2,3,4`
        #[arg(long)]
        spark: Option<String>,
        #[arg(long, default_value_t = 32)]
        retries: u32,
        #[arg(long, default_value = "jsonlines")]
        format: String,
    },
    /// Draw a seeded coefficient matrix for a table row and print its
    /// null-space section
    Kernel {
        /// Table row, 1-based
        #[arg(long)]
        row: usize,
        #[arg(long, default_value_t = 10007)]
        prime: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "human")]
        format: String,
    },
}

#[derive(Args)]
struct TypeArg {
    /// CICY type: `5 | 4,2 | 3,3 | 3,2,2 | 2,2,2,2`
    #[arg(long)]
    r#type: String,
}

fn parse_type(s: &str) -> Result<CicyType, String> {
    let degrees: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
    match degrees {
        Ok(d) => CicyType::from_degrees(&d).map_err(|e| e.to_string()),
        Err(_) => Err(format!("not a CICY type: ({})", s)),
    }
}

fn parse_format(s: &str) -> Result<TableFormat, String> {
    TableFormat::parse(s).map_err(|e| e.to_string())
}

/// Run the tool against `argv` (including the program name), writing to the
/// given streams, and return the exit code.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e);
                    EXIT_OK
                }
                _ => {
                    let msg = e.to_string();
                    let first = msg.lines().next().unwrap_or("bad arguments");
                    let _ = writeln!(err, "{}", first);
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(RunError::Usage(msg)) => {
            let _ = writeln!(err, "error: {}", msg);
            EXIT_USAGE
        }
        Err(RunError::Compute(msg)) => {
            let _ = writeln!(err, "error: {}", msg);
            EXIT_COMPUTE
        }
        Err(RunError::Io(e)) => {
            let _ = writeln!(err, "error: {}", e);
            EXIT_COMPUTE
        }
    }
}

enum RunError {
    Usage(String),
    Compute(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for RunError {
    fn from(e: std::io::Error) -> RunError {
        RunError::Io(e)
    }
}

impl From<serde_json::Error> for RunError {
    fn from(e: serde_json::Error) -> RunError {
        RunError::Compute(e.to_string())
    }
}

impl From<NodeLabError> for RunError {
    fn from(e: NodeLabError) -> RunError {
        RunError::Compute(e.to_string())
    }
}

fn usage<T: Display>(msg: T) -> RunError {
    RunError::Usage(msg.to_string())
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, RunError> {
    match cli.cmd {
        Cmd::Catalog { format } => {
            let format = parse_format(&format).map_err(usage)?;
            cmd_catalog(format, out)?;
            Ok(EXIT_OK)
        }
        Cmd::Certify {
            target,
            d,
            g,
            row,
            format,
        } => {
            let t = parse_type(&target.r#type).map_err(usage)?;
            let format = parse_format(&format).map_err(usage)?;
            cmd_certify(t, d, g, row, format, out)
        }
        Cmd::Table {
            target,
            dmax,
            gmax,
            format,
        } => {
            let t = parse_type(&target.r#type).map_err(usage)?;
            let format = parse_format(&format).map_err(usage)?;
            let table = AdmissibleTable::build(t, dmax, gmax);
            emit_table(&table, format, out)?;
            Ok(EXIT_OK)
        }
        Cmd::VerifyTheorem { r#type, dmax, gmax } => cmd_verify(&r#type, dmax, gmax, out),
        Cmd::Nodes {
            degrees,
            form_a,
            form_b,
            prime,
            seed,
            spark,
            retries,
            format,
        } => {
            let format = parse_format(&format).map_err(usage)?;
            cmd_nodes(
                degrees.as_deref(),
                form_a.as_deref(),
                form_b.as_deref(),
                prime,
                seed,
                spark.as_deref(),
                retries,
                format,
                out,
            )
        }
        Cmd::Kernel {
            row,
            prime,
            seed,
            format,
        } => {
            let format = parse_format(&format).map_err(usage)?;
            cmd_kernel(row, prime, seed, format, out)
        }
    }
}

// ---------------------------------------------------------------------------
// catalog

#[derive(Serialize)]
struct CatalogRecord {
    row: usize,
    b: Vec<u32>,
    a: Vec<u32>,
    mu: u32,
    r: u32,
    ell: u32,
    a_penult: u32,
    a_last: u32,
    sing_desc: String,
}

fn cmd_catalog(format: TableFormat, out: &mut dyn Write) -> Result<(), RunError> {
    let rows = load_catalog();
    match format {
        TableFormat::Human => {
            writeln!(
                out,
                "{:>3}  {:<10} {:<12} {:>2} {:>2} {:>3}  {:>8} {:>6}  {}",
                "row", "(b)", "(a)", "mu", "r", "ell", "a_penult", "a_last", "Sing Y"
            )?;
            for row in rows.iter() {
                writeln!(
                    out,
                    "{:>3}  {:<10} {:<12} {:>2} {:>2} {:>3}  {:>8} {:>6}  {}",
                    row.index + 1,
                    format!("({})", ConstructionRow::degrees_label(row.b)),
                    format!("({})", ConstructionRow::degrees_label(row.a)),
                    row.mu,
                    row.r,
                    row.ell,
                    row.a_penult,
                    row.a_last,
                    row.sing_desc
                )?;
            }
        }
        TableFormat::Csv => {
            writeln!(out, "row,b,a,mu,r,ell,a_penult,a_last")?;
            for row in rows.iter() {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    row.index + 1,
                    row.b
                        .iter()
                        .map(|d| d.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                    row.a
                        .iter()
                        .map(|d| d.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                    row.mu,
                    row.r,
                    row.ell,
                    row.a_penult,
                    row.a_last
                )?;
            }
        }
        TableFormat::JsonLines => {
            for row in rows.iter() {
                let rec = CatalogRecord {
                    row: row.index + 1,
                    b: row.b.to_vec(),
                    a: row.a.to_vec(),
                    mu: row.mu,
                    r: row.r,
                    ell: row.ell,
                    a_penult: row.a_penult,
                    a_last: row.a_last,
                    sing_desc: row.sing_desc.to_string(),
                };
                writeln!(out, "{}", serde_json::to_string(&rec)?)?;
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// certify

fn condition_line(name: &str, pass: bool) -> String {
    format!("  {:<26} {}", name, if pass { "pass" } else { "FAIL" })
}

fn print_certificate_human(cert: &Certificate, out: &mut dyn Write) -> Result<(), RunError> {
    writeln!(
        out,
        "row {} (b)=({}) (a)=({})  d={} g={}",
        cert.row.index + 1,
        ConstructionRow::degrees_label(cert.row.b),
        ConstructionRow::degrees_label(cert.row.a),
        cert.curve.d(),
        cert.curve.g()
    )?;
    writeln!(
        out,
        "{} [{}]",
        condition_line("existence on K3", cert.exists_on_k3.holds()),
        cert.exists_on_k3.tag()
    )?;
    writeln!(
        out,
        "{}",
        condition_line("(7.1) degree window", cert.cond_degree_window)
    )?;
    writeln!(
        out,
        "{}",
        condition_line("(7.2) node budget", cert.cond_node_budget)
    )?;
    writeln!(
        out,
        "{}",
        condition_line("node surplus l >= g+2", cert.cond_node_surplus)
    )?;
    match &cert.expected_count {
        Some(n) => writeln!(
            out,
            "  admissible: yes; expected count C({}, {}) = {}",
            cert.row.ell - 2,
            cert.curve.g(),
            n
        )?,
        None => writeln!(out, "  admissible: no")?,
    }
    writeln!(out, "  note: {}", cert.genericity_note)?;
    Ok(())
}

fn certificate_record(t: CicyType, cert: &Certificate) -> CellRecord {
    CellRecord {
        cicy: t.label().to_string(),
        d: cert.curve.d(),
        g: cert.curve.g(),
        admissible: cert.admissible,
        row: Some(cert.row.index + 1),
        exists_on_k3: Some(cert.exists_on_k3.tag().to_string()),
        cond_degree_window: Some(cert.cond_degree_window),
        cond_node_budget: Some(cert.cond_node_budget),
        cond_node_surplus: Some(cert.cond_node_surplus),
        count: cert.expected_count.as_ref().map(|n| n.to_string()),
        genericity_note: Some(cert.genericity_note),
    }
}

fn cmd_certify(
    t: CicyType,
    d: u32,
    g: u32,
    row: Option<usize>,
    format: TableFormat,
    out: &mut dyn Write,
) -> Result<i32, RunError> {
    let curve = CurveClass::new(d, g).map_err(|e| usage(e.to_string()))?;
    let rows = rows_for_type(t);
    let certs: Vec<Certificate> = match row {
        Some(idx) => {
            let table = load_catalog();
            if idx == 0 || idx > table.len() {
                return Err(usage(format!("row must be 1..{}", table.len())));
            }
            let pinned = &table[idx - 1];
            if pinned.cicy_type() != t {
                return Err(usage(format!(
                    "row {} belongs to type ({})",
                    idx,
                    pinned.cicy_type().label()
                )));
            }
            vec![certify(pinned, curve)]
        }
        None => rows.iter().map(|r| certify(r, curve)).collect(),
    };
    match format {
        TableFormat::Human => {
            writeln!(out, "type ({})  d={} g={}", t.label(), d, g)?;
            for cert in &certs {
                print_certificate_human(cert, out)?;
            }
            match certs.iter().find(|c| c.admissible) {
                Some(c) => writeln!(
                    out,
                    "ADMISSIBLE via row {} ({} expected curves)",
                    c.row.index + 1,
                    c.expected_count.as_ref().unwrap()
                )?,
                None => writeln!(out, "NOT ADMISSIBLE for type ({})", t.label())?,
            }
        }
        TableFormat::JsonLines => {
            for cert in &certs {
                writeln!(out, "{}", serde_json::to_string(&certificate_record(t, cert))?)?;
            }
        }
        TableFormat::Csv => {
            writeln!(out, "{}", crate::enumerate::CSV_HEADER)?;
            let union = certs.iter().find(|c| c.admissible);
            match union {
                Some(c) => writeln!(
                    out,
                    "{},{},{},true,{},{}",
                    t.label(),
                    d,
                    g,
                    c.row.index + 1,
                    c.expected_count.as_ref().unwrap()
                )?,
                None => writeln!(out, "{},{},{},false,,", t.label(), d, g)?,
            }
        }
    }
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// verify-theorem

fn cmd_verify(type_arg: &str, dmax: u32, gmax: u32, out: &mut dyn Write) -> Result<i32, RunError> {
    let types: Vec<CicyType> = if type_arg == "all" {
        CicyType::ALL.to_vec()
    } else {
        vec![parse_type(type_arg).map_err(usage)?]
    };
    let mut all_ok = true;
    for t in types {
        let report = verify_theorem(t, dmax, gmax);
        if report.passed() {
            let covered: Vec<u32> = (0..=gmax)
                .filter(|&g| crate::enumerate::reference_min_degree(t, g).is_some())
                .collect();
            let max_g = covered.last().copied().unwrap_or(0);
            writeln!(
                out,
                "type ({}): OK over d<=({}) g<=({}); clauses cover g<={}; minimal degrees exact",
                t.label(),
                dmax,
                gmax,
                max_g
            )?;
        } else {
            all_ok = false;
            writeln!(
                out,
                "type ({}): MISMATCH ({} cells, {} bounds, {} stray genera)",
                t.label(),
                report.mismatches.len(),
                report.bound_failures.len(),
                report.stray_genera.len()
            )?;
            for m in report.mismatches.iter().take(20) {
                writeln!(
                    out,
                    "  cell d={} g={}: computed={} reference={}",
                    m.d, m.g, m.computed, m.reference
                )?;
            }
            for (g, stated, got) in report.bound_failures.iter().take(20) {
                writeln!(
                    out,
                    "  genus {}: stated min degree {}, computed {:?}",
                    g, stated, got
                )?;
            }
            for g in report.stray_genera.iter().take(20) {
                writeln!(out, "  genus {} admits degrees but no clause covers it", g)?;
            }
        }
    }
    Ok(if all_ok { EXIT_OK } else { EXIT_MISMATCH })
}

// ---------------------------------------------------------------------------
// nodes

#[derive(Serialize)]
struct FieldRecord<'a> {
    record: &'static str,
    p: u64,
    ext_degree: usize,
    modulus: &'a [u64],
    chart_attempts: u32,
}

#[derive(Serialize)]
struct FormRecord {
    record: &'static str,
    which: &'static str,
    degree: u32,
    monomials: Vec<[u64; 4]>,
}

#[derive(Serialize)]
struct PointRecord<'a> {
    record: &'static str,
    coords: [&'a [u64]; 3],
    multiplicity: u32,
}

#[derive(Serialize)]
struct SparkRecord {
    record: &'static str,
    d: u32,
    ell: usize,
    m: usize,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<usize>>,
}

fn form_record(which: &'static str, f: &HomogeneousForm) -> FormRecord {
    FormRecord {
        record: "form",
        which,
        degree: f.degree(),
        monomials: f
            .coeffs()
            .map(|(&e, &c)| [e[0] as u64, e[1] as u64, e[2] as u64, c])
            .collect(),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_nodes(
    degrees: Option<&str>,
    form_a: Option<&std::path::Path>,
    form_b: Option<&std::path::Path>,
    prime: u64,
    seed: u64,
    spark: Option<&str>,
    retries: u32,
    format: TableFormat,
    out: &mut dyn Write,
) -> Result<i32, RunError> {
    let (f, g) = match (degrees, form_a, form_b) {
        (Some(list), None, None) => {
            let parts: Vec<&str> = list.split(',').collect();
            if parts.len() != 2 {
                return Err(usage("--degrees expects two comma-separated integers"));
            }
            let da: u32 = parts[0].trim().parse().map_err(|_| usage("bad degree"))?;
            let db: u32 = parts[1].trim().parse().map_err(|_| usage("bad degree"))?;
            if da == 0 || db == 0 {
                return Err(usage("curve degrees must be positive"));
            }
            if !nodelab::is_prime(prime) || prime == 2 {
                return Err(RunError::Compute(format!("not an odd prime: {}", prime)));
            }
            // both forms from one seeded stream
            use rand_core::SeedableRng;
            let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(seed);
            let f = nodelab::form::random_form_with_rng(prime, da, &mut rng);
            let g = nodelab::form::random_form_with_rng(prime, db, &mut rng);
            (f, g)
        }
        (None, Some(pa), Some(pb)) => {
            let fa =
                parse_form(&std::fs::read_to_string(pa)?).map_err(|e| RunError::Compute(e.to_string()))?;
            let fb =
                parse_form(&std::fs::read_to_string(pb)?).map_err(|e| RunError::Compute(e.to_string()))?;
            if fa.prime() != fb.prime() {
                return Err(usage("the two form files use different primes"));
            }
            (fa, fb)
        }
        _ => {
            return Err(usage(
                "provide either --degrees or both --form-a and --form-b",
            ))
        }
    };

    let spark_degrees: Vec<u32> = match spark {
        None => Vec::new(),
        Some(list) => list
            .split(',')
            .map(|s| s.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| usage("bad --spark list"))?,
    };

    let ix = intersect_plane_curves(&f, &g, seed, retries)?;
    let mut reports = Vec::new();
    for &d in &spark_degrees {
        if d == 0 {
            return Err(usage("spark degrees must be positive"));
        }
        let rep = independence_check(&ix.points, d, &ix.field)?;
        reports.push(rep);
    }

    match format {
        TableFormat::JsonLines => {
            writeln!(
                out,
                "{}",
                serde_json::to_string(&FieldRecord {
                    record: "field",
                    p: ix.field.prime(),
                    ext_degree: ix.field.ext_degree(),
                    modulus: ix.field.modulus(),
                    chart_attempts: ix.chart_attempts,
                })?
            )?;
            writeln!(out, "{}", serde_json::to_string(&form_record("a", &f))?)?;
            writeln!(out, "{}", serde_json::to_string(&form_record("b", &g))?)?;
            for pt in &ix.points {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&PointRecord {
                        record: "point",
                        coords: [
                            &pt.coords[0].coeffs,
                            &pt.coords[1].coeffs,
                            &pt.coords[2].coeffs
                        ],
                        multiplicity: pt.multiplicity,
                    })?
                )?;
            }
            for rep in &reports {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&SparkRecord {
                        record: "spark",
                        d: rep.d.unwrap(),
                        ell: rep.ell,
                        m: rep.m,
                        passed: rep.passed,
                        witness: rep.witness.clone(),
                    })?
                )?;
            }
        }
        TableFormat::Human => {
            writeln!(
                out,
                "curves of degrees ({}, {}) over F_{}; common field F_{}^{}; {} chart attempt(s)",
                f.degree(),
                g.degree(),
                ix.field.prime(),
                ix.field.prime(),
                ix.field.ext_degree(),
                ix.chart_attempts
            )?;
            writeln!(out, "f = {}", f)?;
            writeln!(out, "g = {}", g)?;
            writeln!(
                out,
                "{} intersection points, total multiplicity {}:",
                ix.points.len(),
                ix.total_multiplicity()
            )?;
            for pt in &ix.points {
                writeln!(
                    out,
                    "  [{} : {} : {}]  mult {}",
                    coeff_list(&pt.coords[0].coeffs),
                    coeff_list(&pt.coords[1].coeffs),
                    coeff_list(&pt.coords[2].coeffs),
                    pt.multiplicity
                )?;
            }
            for rep in &reports {
                match &rep.witness {
                    None => writeln!(
                        out,
                        "spark d={}: m={} over {} points: PASS",
                        rep.d.unwrap(),
                        rep.m,
                        rep.ell
                    )?,
                    Some(w) => writeln!(
                        out,
                        "spark d={}: m={} over {} points: FAIL, witness {:?}",
                        rep.d.unwrap(),
                        rep.m,
                        rep.ell,
                        w
                    )?,
                }
            }
        }
        TableFormat::Csv => {
            return Err(usage("nodes output supports human or jsonlines"));
        }
    }
    Ok(EXIT_OK)
}

fn coeff_list(c: &[u64]) -> String {
    c.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

// ---------------------------------------------------------------------------
// kernel

#[derive(Serialize)]
struct KernelRecord {
    record: &'static str,
    row: usize,
    p: u64,
    seed: u64,
    verified: bool,
    sections: Vec<KernelSection>,
}

#[derive(Serialize)]
struct KernelSection {
    degree: u32,
    zero: bool,
    monomials: Vec<[u64; 4]>,
}

fn cmd_kernel(
    row_idx: usize,
    prime: u64,
    seed: u64,
    format: TableFormat,
    out: &mut dyn Write,
) -> Result<i32, RunError> {
    let table = load_catalog();
    if row_idx == 0 || row_idx > table.len() {
        return Err(usage(format!("row must be 1..{}", table.len())));
    }
    if !nodelab::is_prime(prime) || prime == 2 {
        return Err(RunError::Compute(format!("not an odd prime: {}", prime)));
    }
    let row = &table[row_idx - 1];
    let alphas = random_alphas(row, prime, seed);
    let section = kernel_section(row, &alphas)?;
    match format {
        TableFormat::Human => {
            writeln!(out, "{}", row)?;
            writeln!(
                out,
                "coefficient matrix: {} x {} forms over F_{}, seed {}",
                row.b.len(),
                row.a.len(),
                prime,
                seed
            )?;
            for (j, nj) in section.iter().enumerate() {
                writeln!(
                    out,
                    "N_{} (degree {}): {}",
                    j + 1,
                    row.a[j],
                    nj
                )?;
            }
            writeln!(out, "identity (alpha) * N = 0: verified")?;
        }
        TableFormat::JsonLines => {
            let rec = KernelRecord {
                record: "kernel",
                row: row_idx,
                p: prime,
                seed,
                verified: true,
                sections: section
                    .iter()
                    .map(|nj| KernelSection {
                        degree: nj.degree(),
                        zero: nj.is_zero(),
                        monomials: nj
                            .coeffs()
                            .map(|(&e, &c)| [e[0] as u64, e[1] as u64, e[2] as u64, c])
                            .collect(),
                    })
                    .collect(),
            };
            writeln!(out, "{}", serde_json::to_string(&rec)?)?;
        }
        TableFormat::Csv => return Err(usage("kernel output supports human or jsonlines")),
    }
    Ok(EXIT_OK)
}

/// Convenience for tests: run with string args, capture stdout/stderr.
pub fn run_capture(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("cicy".to_string())
        .chain(args.iter().map(|s| s.to_string()))
        .collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("utf8 stdout"),
        String::from_utf8(err).expect("utf8 stderr"),
    )
}
