//! Command-line front end: deterministic convertibility checks, recovery
//! classification, Bell concentration queries and region CSV export.
//!
//! Every command builds an [`OutputRecord`], prints it either as `key: value`
//! lines or as one JSON object, and maps its verdict to an exit code:
//! 0 affirmative, 1 negative, 2 usage, domain or I/O error.

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use entanglement_recovery::{
    bell_bound, can_concentrate_bell, make_spectrum, transform_verdict, two_qubit,
    ComparabilityClass, RecoveryProblemF64, RegionClass, RegionGridF64, SpectrumF64, ToleranceF64,
    TwoQubitPairF64,
};
use serde_json::{Map, Number, Value};
use thiserror::Error;

pub mod record;

pub use record::{format_sig12, Field, OutputRecord};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] entanglement_recovery::Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

pub const EXIT_YES: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "entrec",
    version,
    about = "Majorization, LOCC convertibility and entanglement recovery"
)]
pub struct Cli {
    /// Absolute comparison tolerance.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub eps: f64,

    /// Print one JSON object instead of key: value lines.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide deterministic convertibility between two pure states.
    Transform(TransformArgs),
    /// Classify an auxiliary-pair point (p, q) for the problem (a, b).
    Classify(ClassifyArgs),
    /// Rasterize the (p, q) plane and export it as CSV.
    Region(RegionArgs),
    /// Bell-pair concentration from two partially entangled pairs.
    Bell(BellArgs),
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    /// Source spectrum, comma separated squared Schmidt coefficients.
    #[arg(long, value_delimiter = ',', conflicts_with = "a")]
    pub source: Option<Vec<f64>>,
    /// Target spectrum, comma separated squared Schmidt coefficients.
    #[arg(long, value_delimiter = ',', conflicts_with = "b")]
    pub target: Option<Vec<f64>>,
    /// Source as a two-qubit Schmidt coefficient.
    #[arg(long)]
    pub a: Option<f64>,
    /// Target as a two-qubit Schmidt coefficient.
    #[arg(long)]
    pub b: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub a: f64,
    #[arg(long)]
    pub b: f64,
    #[arg(long)]
    pub p: f64,
    #[arg(long)]
    pub q: f64,
}

#[derive(Debug, Args)]
pub struct RegionArgs {
    #[arg(long)]
    pub a: f64,
    #[arg(long)]
    pub b: f64,
    /// Grid intervals per axis; the grid has (n+1)² cells.
    #[arg(long, default_value_t = 200)]
    pub n: usize,
    /// CSV destination. Without it the CSV goes to stdout and the summary to stderr.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BellArgs {
    #[arg(long)]
    pub a: f64,
    #[arg(long)]
    pub p: f64,
    /// Target parameter for the source pair; omit to discard it (b = 1).
    #[arg(long)]
    pub b: Option<f64>,
}

/// Runs one command. `out` receives the record (or the CSV when `region`
/// has no `--out`), `err` receives the region summary in that case.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, CliError> {
    let tol = ToleranceF64::new(cli.eps)?;
    let (record, code) = match &cli.command {
        Command::Transform(args) => cmd_transform(args, tol)?,
        Command::Classify(args) => cmd_classify(args, tol)?,
        Command::Bell(args) => cmd_bell(args, tol)?,
        Command::Region(args) => {
            let (record, code) = cmd_region(args, tol, out)?;
            let sink: &mut dyn Write = if args.out.is_some() { out } else { err };
            emit(&record, cli.json, sink)?;
            return Ok(code);
        }
    };
    emit(&record, cli.json, out)?;
    Ok(code)
}

fn emit(record: &OutputRecord, json: bool, w: &mut dyn Write) -> io::Result<()> {
    if json {
        writeln!(w, "{}", record.to_json())
    } else {
        write!(w, "{}", record.to_text())
    }
}

fn spectrum_arg(
    (name, scalar_name): (&str, &str),
    spectrum: &Option<Vec<f64>>,
    scalar: Option<f64>,
    tol: ToleranceF64,
) -> Result<SpectrumF64, CliError> {
    match (spectrum, scalar) {
        (Some(raw), None) => Ok(make_spectrum(raw, tol)?),
        (None, Some(x)) => Ok(two_qubit(x, tol)?.spectrum()),
        _ => Err(CliError::Usage(format!(
            "exactly one of --{name} or --{scalar_name} is required"
        ))),
    }
}

pub fn cmd_transform(
    args: &TransformArgs,
    tol: ToleranceF64,
) -> Result<(OutputRecord, u8), CliError> {
    let source = spectrum_arg(("source", "a"), &args.source, args.a, tol)?;
    let target = spectrum_arg(("target", "b"), &args.target, args.b, tol)?;
    let verdict = transform_verdict(&source, &target, tol);
    let class = match verdict.class {
        ComparabilityClass::LeftMajorized => "left-majorized",
        ComparabilityClass::RightMajorized => "right-majorized",
        ComparabilityClass::Equal => "equal",
        ComparabilityClass::Incomparable => "incomparable",
    };
    let code = if verdict.forward() { EXIT_YES } else { EXIT_NO };
    let mut rec = OutputRecord::new("transform");
    rec.push("source", Field::Nums(source.values().to_vec()))
        .push("target", Field::Nums(target.values().to_vec()))
        .push("class", Field::Text(class.into()))
        .push("verdict", Field::Text(verdict.class.verdict().into()))
        .push("forward", Field::Bool(verdict.forward()))
        .push("backward", Field::Bool(verdict.backward()))
        .push("source_entropy", Field::Num(verdict.source_entropy))
        .push("target_entropy", Field::Num(verdict.target_entropy))
        .push("status", Field::Int(code.into()));
    Ok((rec, code))
}

pub fn cmd_classify(
    args: &ClassifyArgs,
    tol: ToleranceF64,
) -> Result<(OutputRecord, u8), CliError> {
    let prob = RecoveryProblemF64::new(args.a, args.b, tol)?;
    let class = prob.classify(args.p, args.q)?;
    let feasible = prob.is_feasible(args.p, args.q)?;
    let (source, target) = prob.product_spectra(args.p, args.q)?;
    let omega = TwoQubitPairF64::new(args.p, tol)?.entropy();
    let chi = TwoQubitPairF64::new(args.q, tol)?.entropy();
    let code = if class.is_recovery() {
        EXIT_YES
    } else {
        EXIT_NO
    };
    let mut rec = OutputRecord::new("classify");
    rec.push("a", Field::Num(prob.a()))
        .push("b", Field::Num(prob.b()))
        .push("p", Field::Num(args.p))
        .push("q", Field::Num(args.q))
        .push("class", Field::Text(class.label().into()))
        .push("closed_form_feasible", Field::Bool(feasible))
        .push("source_product", Field::Nums(source.values().to_vec()))
        .push("target_product", Field::Nums(target.values().to_vec()))
        .push("entropy_psi", Field::Num(prob.source().entropy()))
        .push("entropy_phi", Field::Num(prob.target().entropy()))
        .push("entropy_omega", Field::Num(omega))
        .push("entropy_chi", Field::Num(chi))
        .push("recovered", Field::Num(chi - omega))
        .push("status", Field::Int(code.into()));
    Ok((rec, code))
}

pub fn cmd_bell(args: &BellArgs, tol: ToleranceF64) -> Result<(OutputRecord, u8), CliError> {
    let mut rec = OutputRecord::new("bell");
    rec.push("a", Field::Num(args.a))
        .push("p", Field::Num(args.p));
    let ok = match args.b {
        None => {
            let ok = can_concentrate_bell(args.a, args.p, tol)?;
            rec.push("ap", Field::Num(args.a * args.p))
                .push("concentratable", Field::Bool(ok));
            ok
        }
        Some(b) => {
            let bound = bell_bound(args.a, b, tol)?;
            // b = 1 discards the source pair; the product-target rule applies
            let ok = if tol.eq(b, 1.0) {
                can_concentrate_bell(args.a, args.p, tol)?
            } else {
                RecoveryProblemF64::new(args.a, b, tol)?.bell_feasible(args.p)?
            };
            rec.push("b", Field::Num(b))
                .push("bell_bound", Field::Num(bound))
                .push("feasible_with_residual", Field::Bool(ok));
            ok
        }
    };
    let code = if ok { EXIT_YES } else { EXIT_NO };
    rec.push("status", Field::Int(code.into()));
    Ok((rec, code))
}

/// Writes the CSV (to `--out`, else to `csv_sink`) and returns the summary.
pub fn cmd_region(
    args: &RegionArgs,
    tol: ToleranceF64,
    csv_sink: &mut dyn Write,
) -> Result<(OutputRecord, u8), CliError> {
    let prob = RecoveryProblemF64::new(args.a, args.b, tol)?;
    let grid = prob.region_grid(args.n)?;
    match &args.out {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            write_region_csv(&grid, &mut file)?;
            file.flush()?;
        }
        None => write_region_csv(&grid, csv_sink)?,
    }
    let counts = grid.counts();
    let mut rec = OutputRecord::new("region");
    rec.push("a", Field::Num(prob.a()))
        .push("b", Field::Num(prob.b()))
        .push("n", Field::Int(args.n as u64))
        .push(
            "out",
            Field::Text(
                args.out
                    .as_ref()
                    .map_or("-".into(), |p| p.display().to_string()),
            ),
        )
        .push("cells", Field::Int(counts.total() as u64));
    for (class, count) in counts.iter() {
        rec.push(count_key(class), Field::Int(count as u64));
    }
    rec.push("status", Field::Int(EXIT_YES.into()));
    Ok((rec, EXIT_YES))
}

fn count_key(class: RegionClass) -> &'static str {
    match class {
        RegionClass::CompleteRecovery => "count_complete",
        RegionClass::TrueRecovery => "count_true",
        RegionClass::TrivialRecovery => "count_trivial",
        RegionClass::Incomparable => "count_incomparable",
        RegionClass::EntanglementIncreasing => "count_increasing",
        RegionClass::InfeasibleOther => "count_infeasible",
    }
}

/// One data row of a region CSV file.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionRow {
    pub p: f64,
    pub q: f64,
    pub class: RegionClass,
}

/// Header `p,q,class`, then one row per cell with `p` outer, LF endings.
/// Floats use the shortest decimal that round-trips.
pub fn write_region_csv<W: Write + ?Sized>(
    grid: &RegionGridF64,
    w: &mut W,
) -> Result<(), CliError> {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(w);
    writer.write_record(["p", "q", "class"])?;
    for (p, q, class) in grid.iter() {
        writer.write_record([p.to_string().as_str(), q.to_string().as_str(), class.tag()])?;
    }
    writer.flush()?;
    Ok(())
}

pub fn read_region_csv<R: Read>(r: R) -> Result<Vec<RegionRow>, CliError> {
    let mut reader = csv::Reader::from_reader(r);
    let header = reader.headers()?.clone();
    if header.iter().collect::<Vec<_>>() != ["p", "q", "class"] {
        return Err(CliError::Usage(format!("unexpected header {header:?}")));
    }
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record?;
        let num = |k: usize| {
            record[k]
                .parse::<f64>()
                .map_err(|e| CliError::Usage(format!("bad number {:?}: {e}", &record[k])))
        };
        let class = RegionClass::from_tag(&record[2])
            .ok_or_else(|| CliError::Usage(format!("unknown class {:?}", &record[2])))?;
        rows.push(RegionRow {
            p: num(0)?,
            q: num(1)?,
            class,
        });
    }
    Ok(rows)
}

pub(crate) fn json_number(x: f64) -> Value {
    Number::from_f64(x).map_or(Value::Null, Value::Number)
}

pub(crate) fn json_object(fields: impl IntoIterator<Item = (String, Value)>) -> Value {
    Value::Object(fields.into_iter().collect::<Map<_, _>>())
}
