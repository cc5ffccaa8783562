//! The `wreathmatch` command line.

pub mod report;
pub mod suites;

use std::ffi::OsString;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::{Assignment, MultiPoly, Var};
use crate::error::{Error, Result};
use crate::genfun::{generating_function, Family, Series};
use crate::oracle::{self, MatchShape, OracleOptions, Stat};
use crate::polyk::{fit, Target};
use report::{Format, GridCell, PolyEntry, Report};
use suites::CheckOutcome;

#[derive(Debug, Parser)]
#[command(name = "wreathmatch", version, about = "Bi-match statistics on C_k wr S_n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true, ignore_case = true)]
    pub format: Format,
    /// size of the rayon worker pool
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// allow brute-force enumerations past the size guard
    #[arg(long = "unsafe-override-guard", global = true)]
    pub override_guard: bool,
    /// keep `p` free in oracle runs with n >= 6
    #[arg(long, global = true)]
    pub full_p: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Grid of series values over n and k.
    Table(TableArgs),
    /// Interpolated polynomial in k.
    Poly(PolyArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableSeries {
    A,
    U,
    V,
    B,
    D,
    N,
}

impl TableSeries {
    fn series(self) -> Series {
        match self {
            TableSeries::A => Series::A,
            TableSeries::U => Series::R,
            TableSeries::V => Series::S,
            TableSeries::B => Series::B,
            TableSeries::D => Series::D,
            TableSeries::N => Series::N,
        }
    }

    fn name(self) -> &'static str {
        match self {
            TableSeries::A => "A",
            TableSeries::U => "U",
            TableSeries::V => "V",
            TableSeries::B => "B",
            TableSeries::D => "D",
            TableSeries::N => "N",
        }
    }
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum, ignore_case = true)]
    pub series: TableSeries,
    #[arg(long, value_parser = parse_family, num_args = 1.., value_delimiter = ',', default_value = "r,w,s,d")]
    pub family: Vec<Family>,
    #[arg(long, conflicts_with_all = ["n_min", "n_max"])]
    pub n: Option<u32>,
    #[arg(long, default_value_t = 1)]
    pub n_min: u32,
    #[arg(long, default_value_t = 6)]
    pub n_max: u32,
    #[arg(long, conflicts_with_all = ["k_min", "k_max"])]
    pub k: Option<u32>,
    #[arg(long, default_value_t = 1)]
    pub k_min: u32,
    #[arg(long, default_value_t = 5)]
    pub k_max: u32,
    /// variable values such as `p=1,q=1,r=1,x=0`; defaults to counts (`p=q=r=1`)
    #[arg(long, value_parser = parse_assignment)]
    pub specialize: Option<Assignment>,
    /// truncation order of the series; defaults to the largest n
    #[arg(long)]
    pub order: Option<usize>,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[arg(long, value_parser = parse_target)]
    pub target: Target,
    #[arg(long, value_parser = parse_family, num_args = 1.., value_delimiter = ',', default_value = "r,w,s,d")]
    pub family: Vec<Family>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, default_value_t = 1)]
    pub n_min: u32,
    #[arg(long, default_value_t = 6)]
    pub n_max: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    OracleGf,
    Involution,
    Lemmas,
    Identities,
    Conjectures,
    Avoidance,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum, ignore_case = true)]
    pub suite: Suite,
    /// largest n for the suite (each suite has its own default)
    #[arg(long)]
    pub n_max: Option<u32>,
    /// largest k for the suite (each suite has its own default)
    #[arg(long)]
    pub k_max: Option<u32>,
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_target(s: &str) -> std::result::Result<Target, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_assignment(s: &str) -> std::result::Result<Assignment, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn range(single: Option<u32>, lo: u32, hi: u32) -> Result<Vec<u32>> {
    match single {
        Some(v) => Ok(vec![v]),
        None if lo > hi => Err(Error::InvalidInput(format!("empty range {lo}..={hi}"))),
        None => Ok((lo..=hi).collect()),
    }
}

/// Entry point for the binary; returns the process exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    if let Some(t) = cli.common.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("warning: could not size the thread pool: {e}");
        }
    }
    let start = Instant::now();
    let result = execute(&cli);
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    match result {
        Ok(report) => {
            print!("{}", report.render(cli.common.format));
            if report.all_passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) => 1,
        _ => 2,
    }
}

pub fn execute(cli: &Cli) -> Result<Report> {
    let opts = OracleOptions { override_guard: cli.common.override_guard, full_p: cli.common.full_p };
    match &cli.command {
        Command::Table(a) => table(a, &opts),
        Command::Poly(a) => poly(a),
        Command::Verify(a) => verify(a, &opts),
    }
}

/// One value from brute force; used where the closed forms need `k ≥ 2`.
fn oracle_cell(f: Family, series: TableSeries, n: usize, k: u32, spec: &Assignment, opts: &OracleOptions) -> Result<MultiPoly> {
    let ps = f.pattern_set();
    Ok(match series {
        TableSeries::D => oracle::distribution_at(n, k, &ps, Stat::Mch, spec, opts)?.poly,
        TableSeries::N => oracle::distribution_at(n, k, &ps, Stat::Nlap, spec, opts)?.poly,
        TableSeries::A => oracle::distribution_at(n, k, &ps, Stat::Mch, &spec.with(Var::X, 0), opts)?.poly,
        TableSeries::B => oracle::shape_distribution(n, k, &ps, MatchShape::ExactlyEnd, spec, opts)?,
        TableSeries::U => oracle::shape_distribution(n, k, &ps, MatchShape::UShape, spec, opts)?,
        TableSeries::V => oracle::shape_distribution(n, k, &ps, MatchShape::VShape, spec, opts)?,
    })
}

fn table(a: &TableArgs, opts: &OracleOptions) -> Result<Report> {
    let ns = range(a.n, a.n_min, a.n_max)?;
    let ks = range(a.k, a.k_min, a.k_max)?;
    let spec = a.specialize.unwrap_or_else(Assignment::counts);
    let n_top = *ns.iter().max().expect("nonempty range") as usize;
    let order = a.order.unwrap_or(n_top);
    if order < n_top {
        return Err(Error::InvalidInput(format!("--order {order} is below n = {n_top}")));
    }
    let mut grid = Vec::new();
    for &f in &a.family {
        for &k in &ks {
            if k == 0 {
                return Err(Error::InvalidInput("k must be at least 1".into()));
            }
            let gf = if k >= 2 { Some(generating_function(f, a.series.series(), k, order, &spec)?) } else { None };
            for &n in &ns {
                let value = match &gf {
                    Some(g) => g.coeff(n as usize).clone(),
                    None => oracle_cell(f, a.series, n as usize, k, &spec, opts)?,
                };
                grid.push(GridCell {
                    family: f.to_string(),
                    series: a.series.name().into(),
                    n,
                    k,
                    value: value.to_string(),
                });
            }
        }
    }
    Ok(Report { command: "table".into(), grid, ..Report::default() })
}

fn poly(a: &PolyArgs) -> Result<Report> {
    let ns = range(a.n, a.n_min, a.n_max)?;
    let mut polynomials = Vec::new();
    for &f in &a.family {
        for &n in &ns {
            let fitted = fit(f, a.target, n)?;
            polynomials.push(PolyEntry::new(f.to_string(), a.target.name(), n, &fitted.poly));
        }
    }
    Ok(Report { command: "poly".into(), polynomials, ..Report::default() })
}

fn verify(a: &VerifyArgs, opts: &OracleOptions) -> Result<Report> {
    let mut checks: Vec<CheckOutcome> = Vec::new();
    let runs = |s: Suite| a.suite == s || a.suite == Suite::All;
    if runs(Suite::OracleGf) {
        let n = a.n_max.unwrap_or(6) as usize;
        let ks: Vec<u32> = (2..=a.k_max.unwrap_or(3)).collect();
        checks.extend(suites::oracle_gf(&Family::ALL, &ks, n, opts)?);
    }
    if runs(Suite::Involution) {
        let n = a.n_max.unwrap_or(5);
        let ks: Vec<u32> = (2..=a.k_max.unwrap_or(3)).collect();
        checks.extend(suites::involution_suite(&Family::ALL, &ks, n, n.max(7))?);
    }
    if runs(Suite::Lemmas) {
        checks.extend(suites::lemma_suite(a.n_max.unwrap_or(7), a.k_max.unwrap_or(6)));
    }
    if runs(Suite::Identities) {
        checks.extend(suites::identity_suite(a.n_max.unwrap_or(6), a.k_max.unwrap_or(5))?);
    }
    if runs(Suite::Conjectures) {
        checks.extend(suites::conjecture_suite(a.n_max.unwrap_or(7))?);
    }
    if runs(Suite::Avoidance) {
        let n = a.n_max.unwrap_or(5);
        checks.extend(suites::avoidance_suite(n, a.k_max.unwrap_or(4), n.max(6))?);
    }
    Ok(Report { command: "verify".into(), checks, ..Report::default() })
}
