//! The `meshlab` command line. [`run`] takes the arguments and output
//! streams so it can be driven from tests; it returns the exit status
//! (0 ok, 1 verification failure, 2 usage error, 3 enumeration guard).

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{sec_series, tan_series, EgfSeries, XPolynomial};
use crate::alternating::AlternatingClass;
use crate::dist::brute::{distribution, BruteOptions};
use crate::dist::cache::{self, CacheRecord};
use crate::dist::generating::{egf_family, sec_to_the_x};
use crate::dist::recursion::recursion_table;
use crate::dist::{DistributionRecord, Family};
use crate::error::{Error, Result};
use crate::pattern::QuadrantSpec;
use crate::render::{coeff_list, factored, latex, OutputFormat};
use crate::report::{Report, Verdict};
use crate::suites::{self, Suite, SuiteOptions};

pub const DEFAULT_MAX_ORDER: usize = 40;

#[derive(Debug, Parser)]
#[command(name = "meshlab", version, about = "Quadrant marked mesh patterns on alternating permutations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Family polynomials from the recursions.
    Table(TableArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Coefficients of a generating function, `Σ c_m t^m/m!`.
    Series(SeriesArgs),
    /// Distribution of any quadrant pattern by enumeration.
    Brute(BruteArgs),
    /// Unimodality of the family polynomials.
    Unimodal(UnimodalArgs),
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    max_index: usize,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
    /// JSON cache to create or update.
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long)]
    max_length: Option<usize>,
    #[arg(long)]
    max_index: Option<usize>,
    #[arg(long)]
    workers: Option<usize>,
    /// Count discrepancies as failures.
    #[arg(long)]
    strict: bool,
    /// Write the full report as JSON.
    #[arg(long)]
    report: Option<PathBuf>,
    /// `json` prints the report; everything else prints one line per row.
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Gf {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "C", alias = "c")]
    C,
    #[value(name = "D", alias = "d")]
    D,
    /// sec(xt)
    #[value(name = "secx")]
    SecX,
    /// tan(xt)
    #[value(name = "tanx")]
    TanX,
    /// (sec t)^x
    #[value(name = "sec^x")]
    SecPowerX,
}

impl Gf {
    fn describe(self) -> &'static str {
        match self {
            Gf::A => "A(t,x)",
            Gf::B => "B(t,x)",
            Gf::C => "C(t,x)",
            Gf::D => "D(t,x)",
            Gf::SecX => "sec(xt)",
            Gf::TanX => "tan(xt)",
            Gf::SecPowerX => "(sec t)^x",
        }
    }

    fn series(self, order: usize) -> EgfSeries {
        match self {
            Gf::A => egf_family(Family::A, order),
            Gf::B => egf_family(Family::B, order),
            Gf::C => egf_family(Family::C, order),
            Gf::D => egf_family(Family::D, order),
            Gf::SecX => sec_series(order),
            Gf::TanX => tan_series(order),
            Gf::SecPowerX => sec_to_the_x(order),
        }
    }
}

#[derive(Debug, Args)]
struct SeriesArgs {
    #[arg(long, value_enum)]
    gf: Gf,
    #[arg(long)]
    order: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct BruteArgs {
    #[arg(long)]
    length: usize,
    /// `ud` or `du`.
    #[arg(long)]
    class: AlternatingClass,
    /// `a,b,c,d`, each a count or `e` for an empty quadrant.
    #[arg(long)]
    pattern: QuadrantSpec,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
    /// Enumerate beyond the guard.
    #[arg(long)]
    force: bool,
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Debug, Args)]
struct UnimodalArgs {
    #[arg(long, default_value_t = suites::DEFAULT_UNIMODAL_INDEX)]
    max_index: usize,
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Table(a) => table(a, out, err),
        Command::Verify(a) => verify(a, out),
        Command::Series(a) => series(a, out),
        Command::Brute(a) => brute(a, out),
        Command::Unimodal(a) => unimodal(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "meshlab: {e}");
            e.exit_code()
        }
    }
}

fn table(args: TableArgs, out: &mut impl Write, err: &mut impl Write) -> Result<i32> {
    let family = args.family;
    let computed = recursion_table(args.max_index);
    let records: Vec<DistributionRecord> =
        computed.records().filter(|r| r.family == family && r.index <= args.max_index).collect();
    match args.format {
        OutputFormat::Plain => {
            for r in &records {
                writeln!(out, "{family}_{}(x) = {}", r.length(), factored(&r.polynomial))?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "index,length,coeffs")?;
            for r in &records {
                writeln!(out, "{},{},{}", r.index, r.length(), coeff_list(&r.polynomial))?;
            }
        }
        OutputFormat::Latex => {
            writeln!(out, "\\begin{{tabular}}{{rl}}")?;
            for r in &records {
                writeln!(out, "${family}_{{{}}}(x)$ & ${}$ \\\\", r.length(), latex(&r.polynomial))?;
            }
            writeln!(out, "\\end{{tabular}}")?;
        }
        OutputFormat::Json => {
            let rows: Vec<CacheRecord> = records.iter().map(CacheRecord::from).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
        }
    }
    if let Some(path) = args.cache {
        if let Err(e) = cache::upsert(&path, records) {
            writeln!(err, "meshlab: cache {}: {e}", path.display())?;
            return Ok(1);
        }
    }
    Ok(0)
}

fn write_report(report: &Report, path: Option<&PathBuf>) -> Result<()> {
    if let Some(path) = path {
        std::fs::write(path, report.to_json() + "\n")?;
    }
    Ok(())
}

fn summary(report: &Report) -> String {
    format!(
        "{} pass, {} FAIL, {} discrepancy",
        report.count(Verdict::Pass),
        report.count(Verdict::Fail),
        report.count(Verdict::Discrepancy)
    )
}

fn verify(args: VerifyArgs, out: &mut impl Write) -> Result<i32> {
    if args.workers == Some(0) {
        return Err(Error::Usage("--workers must be at least 1".into()));
    }
    let opts = SuiteOptions {
        max_length: args.max_length,
        max_index: args.max_index,
        brute: BruteOptions { workers: args.workers, ..BruteOptions::default() },
    };
    let report = suites::run(args.suite, &opts)?;
    write_report(&report, args.report.as_ref())?;
    if args.format == OutputFormat::Json {
        writeln!(out, "{}", report.to_json())?;
    } else {
        for row in &report.rows {
            writeln!(out, "{row}")?;
        }
        let name = args.suite.to_possible_value().expect("no skipped variants").get_name().to_string();
        writeln!(out, "suite {name}: {}", summary(&report))?;
    }
    let ok = if args.strict { report.strictly_passed() } else { report.passed() };
    Ok(if ok { 0 } else { 1 })
}

#[derive(Serialize)]
struct SeriesRow {
    m: usize,
    coeffs: Vec<String>,
}

fn series(args: SeriesArgs, out: &mut impl Write) -> Result<i32> {
    if args.order > args.max_order {
        return Err(Error::Usage(format!("order {} exceeds --max-order {}", args.order, args.max_order)));
    }
    let s = args.gf.series(args.order);
    let coeffs: Vec<&XPolynomial> = (0..=args.order).map(|m| s.coeff(m)).collect();
    match args.format {
        OutputFormat::Plain => {
            writeln!(out, "# {} = sum of c_m t^m/m!", args.gf.describe())?;
            for (m, c) in coeffs.iter().enumerate() {
                writeln!(out, "c_{m} = {}", factored(c))?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "m,coeffs")?;
            for (m, c) in coeffs.iter().enumerate() {
                writeln!(out, "{m},{}", coeff_list(*c))?;
            }
        }
        OutputFormat::Latex => {
            writeln!(out, "% {} = \\sum_m c_m t^m/m!", args.gf.describe())?;
            for (m, c) in coeffs.iter().enumerate() {
                writeln!(out, "c_{{{m}}} = {} \\\\", latex(c))?;
            }
        }
        OutputFormat::Json => {
            let rows: Vec<SeriesRow> = coeffs
                .iter()
                .enumerate()
                .map(|(m, c)| SeriesRow { m, coeffs: c.coeffs().iter().map(|v| v.to_string()).collect() })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct BruteRow {
    length: usize,
    class: &'static str,
    pattern: String,
    coeffs: Vec<String>,
    permutations: u64,
}

fn brute(args: BruteArgs, out: &mut impl Write) -> Result<i32> {
    if args.workers == Some(0) {
        return Err(Error::Usage("--workers must be at least 1".into()));
    }
    let opts = BruteOptions { force: args.force, workers: args.workers, ..BruteOptions::default() };
    let dist = distribution(args.length, args.class, &args.pattern, &opts)?;
    let poly = dist.polynomial();
    let count = dist.permutations();
    match args.format {
        OutputFormat::Plain => {
            writeln!(out, "{}", factored(&poly))?;
            writeln!(out, "over {count} permutations")?;
        }
        OutputFormat::Csv => {
            writeln!(out, "length,class,pattern,coeffs,permutations")?;
            writeln!(
                out,
                "{},{},\"{}\",{},{count}",
                args.length,
                args.class.short_name(),
                args.pattern,
                coeff_list(&poly)
            )?;
        }
        OutputFormat::Latex => writeln!(out, "{}", latex(&poly))?,
        OutputFormat::Json => {
            let row = BruteRow {
                length: args.length,
                class: args.class.short_name(),
                pattern: args.pattern.to_string(),
                coeffs: poly.coeffs().iter().map(|c| c.to_string()).collect(),
                permutations: count,
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&row)?)?;
        }
    }
    Ok(0)
}

fn unimodal(args: UnimodalArgs, out: &mut impl Write) -> Result<i32> {
    let report = suites::unimodal(args.max_index);
    write_report(&report, args.report.as_ref())?;
    if args.format == OutputFormat::Json {
        writeln!(out, "{}", report.to_json())?;
    } else {
        for row in &report.rows {
            writeln!(out, "{row}")?;
        }
        writeln!(out, "unimodal: {}", summary(&report))?;
    }
    Ok(if report.strictly_passed() { 0 } else { 1 })
}
