//! The `kpoly` command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error,
//! 3 candidate budget exceeded.

pub mod published;
mod records;
pub mod render;
mod stats;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use records::{compute_records, read_json, write_csv, write_json, Candidates, CountRecord, Method};
pub use stats::{edge_stats, EdgeStat};

use crate::enumerate::{enumerate_orderly_with, EnumConfig};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "kpoly", version, about = "Count and draw polyominoes made of regular k-gons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a single count as a JSON line.
    Count(CountArgs),
    /// Write a table of counts.
    Table(TableArgs),
    /// Run the self-check suites.
    Verify(VerifyArgs),
    /// Draw every class as an SVG file.
    Render(RenderArgs),
    /// Edge-count ranges against the known bounds.
    Stats(StatsArgs),
}

#[derive(Debug, Args)]
struct EngineArgs {
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Maximum candidates per level.
    #[arg(long)]
    budget: Option<u64>,
}

impl EngineArgs {
    fn config(&self) -> EnumConfig {
        EnumConfig { budget: self.budget, workers: self.workers }
    }
}

#[derive(Debug, Args)]
struct CountArgs {
    #[arg(long)]
    k: u32,
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value_t = Method::Orderly)]
    method: Method,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct TableArgs {
    /// Inclusive range `A..B`.
    #[arg(long = "k-range", value_parser = parse_range)]
    k_range: RangeInclusive<u32>,
    #[arg(long = "n-range", value_parser = parse_range)]
    n_range: RangeInclusive<u32>,
    #[arg(long, value_enum, default_value_t = Method::Orderly)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long = "k-max", default_value_t = 12)]
    k_max: u32,
    #[arg(long = "n-max", default_value_t = 6)]
    n_max: u32,
    /// CSV of `k,n,count` rows replacing the built-in published tables.
    #[arg(long)]
    published: Option<PathBuf>,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[arg(long)]
    k: u32,
    /// Render every size up to this one.
    #[arg(long, conflicts_with = "n_range", required_unless_present = "n_range")]
    n: Option<u32>,
    #[arg(long = "n-range", value_parser = parse_range)]
    n_range: Option<RangeInclusive<u32>>,
    /// Output directory.
    #[arg(long)]
    out: PathBuf,
    /// Maximum number of files.
    #[arg(long)]
    limit: Option<usize>,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Debug, Args)]
struct StatsArgs {
    /// Restrict to one k; defaults to 3, 4 and 6.
    #[arg(long)]
    k: Option<u32>,
    /// Largest size.
    #[arg(long, default_value_t = 8)]
    n: u32,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(flatten)]
    engine: EngineArgs,
}

fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let a: u32 = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b: u32 = b.trim().trim_start_matches('=').parse().map_err(|e| format!("{b:?}: {e}"))?;
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok(a..=b)
}

/// Failure of a subcommand, carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceLimit { .. } => EXIT_BUDGET,
            Error::Inconsistent(_) | Error::UnknownGraph => EXIT_MISMATCH,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_USAGE, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if code == EXIT_OK { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Count(a) => cmd_count(a, out),
        Command::Table(a) => cmd_table(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Render(a) => cmd_render(a, out),
        Command::Stats(a) => cmd_stats(a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "kpoly: {}", f.message);
            f.code
        }
    }
}

fn cmd_count(a: CountArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    if a.method == Method::Formula && !(1..=4).contains(&a.n) {
        return Err(usage(format!("the closed form covers 1 <= n <= 4, got n={}", a.n)));
    }
    if a.n == 0 {
        return Err(usage("n must be at least 1"));
    }
    let records = compute_records(a.k..=a.k, a.n..=a.n, a.method, &a.engine.config())?;
    let line = serde_json::to_string(&records[0]).map_err(|e| usage(e.to_string()))?;
    writeln!(out, "{line}")?;
    Ok(EXIT_OK)
}

fn cmd_table(a: TableArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    if *a.n_range.start() == 0 {
        return Err(usage("n-range must start at 1 or above"));
    }
    if a.method == Method::Formula && *a.n_range.end() > 4 {
        return Err(usage("the closed form covers 1 <= n <= 4"));
    }
    let records = compute_records(a.k_range, a.n_range, a.method, &a.engine.config())?;
    let mut buf = Vec::new();
    match a.format {
        Format::Csv => write_csv(&records, &mut buf)?,
        Format::Json => write_json(&records, &mut buf)?,
    }
    match a.out {
        Some(path) => std::fs::write(path, buf)?,
        None => out.write_all(&buf)?,
    }
    Ok(EXIT_OK)
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let published = match &a.published {
        Some(path) => Some(verify::load_published(path).map_err(usage)?),
        None => None,
    };
    let opts = verify::VerifyOptions { k_max: a.k_max, n_max: a.n_max, cfg: a.engine.config(), published };
    let report = verify::run_verify(&opts)?;
    write!(out, "{report}")?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_render(a: RenderArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let ns = match (a.n, a.n_range) {
        (Some(n), _) => 1..=n,
        (None, Some(r)) => r,
        (None, None) => return Err(usage("--n or --n-range is required")),
    };
    if *ns.start() == 0 {
        return Err(usage("n must be at least 1"));
    }
    let run = enumerate_orderly_with(a.k, *ns.end(), &a.engine.config())?;
    let items = run
        .levels
        .iter()
        .filter(|l| ns.contains(&l.n))
        .flat_map(|l| l.classes().iter().map(|(c, p)| (c, p)))
        .take(a.limit.unwrap_or(usize::MAX));
    let paths = render::write_all(&a.out, items)?;
    writeln!(out, "wrote {} files to {}", paths.len(), a.out.display())?;
    Ok(EXIT_OK)
}

fn cmd_stats(a: StatsArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let ks = match a.k {
        Some(k) => vec![k],
        None => vec![3, 4, 6],
    };
    let mut rows = Vec::new();
    for k in ks {
        rows.extend(edge_stats(&enumerate_orderly_with(k, a.n, &a.engine.config())?)?);
    }
    match a.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &rows).map_err(|e| usage(e.to_string()))?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record([
                "k", "n", "classes", "q_min", "q_max", "lower", "upper", "general_upper", "within", "c1", "c2",
            ])
            .map_err(|e| usage(e.to_string()))?;
            let opt = |v: Option<i64>| v.map_or_else(String::new, |v| v.to_string());
            for r in &rows {
                w.write_record([
                    r.k.to_string(),
                    r.n.to_string(),
                    r.classes.to_string(),
                    r.q_min.to_string(),
                    r.q_max.to_string(),
                    opt(r.lower),
                    opt(r.upper),
                    r.general_upper.to_string(),
                    r.within_bounds().to_string(),
                    r.c1.to_string(),
                    r.c2.to_string(),
                ])
                .map_err(|e| usage(e.to_string()))?;
            }
            w.flush()?;
        }
    }
    let all_within = rows.iter().all(EdgeStat::within_bounds);
    Ok(if all_within { EXIT_OK } else { EXIT_MISMATCH })
}
