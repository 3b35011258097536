//! The `symident` command line: `table`, `verify` and `report`.
//!
//! Exit codes: 0 when every check passes, 1 when any check fails, 2 for
//! usage, domain or output errors.

pub mod render;
pub mod suite;

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::identities::{self as id, sort_reports, CheckReport, VerifyMode};
use crate::sequences::{self as seq, known_typos, TableKind};
use crate::symfun::Family;

pub use render::Format;
pub use suite::Group;

/// Seed used when neither `--seed` nor `SYMIDENT_SEED` is given.
pub const DEFAULT_SEED: u64 = 20_240_601;
pub const SEED_ENV: &str = "SYMIDENT_SEED";

/// Inclusive `a:b` range, or a single value `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span {
    pub lo: i64,
    pub hi: i64,
}

impl Span {
    fn range(&self) -> RangeInclusive<i64> {
        self.lo..=self.hi
    }

    fn usizes(&self, what: &str) -> Result<RangeInclusive<usize>> {
        if self.lo < 0 {
            return Err(Error::Usage(format!("{what} must be non-negative")));
        }
        Ok(self.lo as usize..=self.hi as usize)
    }
}

impl FromStr for Span {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let int = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("'{s}' is not a range a:b"))
        };
        let (lo, hi) = match s.split_once(':') {
            Some((a, b)) => (int(a)?, int(b)?),
            None => (int(s)?, int(s)?),
        };
        if lo > hi {
            return Err(format!("range '{s}' is empty"));
        }
        Ok(Span { lo, hi })
    }
}

#[derive(Parser)]
#[command(
    name = "symident",
    version,
    about = "Exact checks of symmetric-function identities at doubled points"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a table of c(n,k), F^(r)_n or L^(r)_n.
    Table(TableArgs),
    /// Run one family of checks.
    Verify(VerifyArgs),
    /// Run check groups and report every result.
    Report(ReportArgs),
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Md, global = true)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RunArgs {
    /// Include per-check durations.
    #[arg(long, global = true)]
    timings: bool,
    /// Seed for random points [default: $SYMIDENT_SEED, else 20240601].
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(value_parser = TableKind::from_str)]
    kind: TableKind,
    /// Rows for fib and lucas.
    #[arg(long)]
    r: Option<Span>,
    /// Columns for fib and lucas, rows for cnk.
    #[arg(long)]
    n: Option<Span>,
    /// Columns for cnk.
    #[arg(long)]
    k: Option<Span>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(subcommand)]
    check: Check,
    #[command(flatten)]
    out: OutputArgs,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct ReportArgs {
    /// Run every group.
    #[arg(long, conflicts_with = "group")]
    all: bool,
    /// Run only these groups.
    #[arg(long, value_enum, required_unless_present = "all")]
    group: Vec<Group>,
    /// Random points per random-mode check.
    #[arg(long, default_value_t = 5)]
    trials: u32,
    #[command(flatten)]
    out: OutputArgs,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Symbolic,
    Random,
}

#[derive(Args)]
struct ModeArgs {
    #[arg(long, value_enum, default_value_t = ModeArg::Symbolic)]
    mode: ModeArg,
    /// Random points per check.
    #[arg(long, default_value_t = 5)]
    trials: u32,
}

#[derive(Args)]
struct FamilyArgs {
    /// e, h or p [default: all three].
    #[arg(long, value_parser = Family::from_str)]
    family: Option<Family>,
}

impl FamilyArgs {
    fn families(&self) -> Vec<Family> {
        self.family
            .map_or_else(|| Family::ALL.to_vec(), |f| vec![f])
    }
}

#[derive(Subcommand)]
enum Check {
    /// f^(r)(z + 1/z) against its expansion in f^(2r)(z, 1/z).
    FirstKind {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value = "1:3")]
        r: Span,
        /// Largest index [default: 3r+2].
        #[arg(long)]
        m_max: Option<usize>,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// f^(2r)(z, 1/z) against its expansion in f^(r)(z + 1/z).
    SecondKind {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value = "1:3")]
        r: Span,
        /// Largest index [default: 2r for e, 2r+6 otherwise].
        #[arg(long)]
        n_max: Option<usize>,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Generating-function form of the first-kind expansion (e and h).
    GenfunExpansion {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value = "1:2")]
        r: Span,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Expanding h twice returns the original.
    Consistency {
        #[arg(long, default_value = "1:2")]
        r: Span,
        #[arg(long, default_value_t = 6)]
        m_max: usize,
    },
    /// Closed forms at the geometric point (q^r, ..., q, q^-r, ..., q^-1).
    Principal {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value = "1:4")]
        r: Span,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
    /// First- and second-kind expansions with the geometric closed forms plugged in.
    PrincipalCorollaries {
        #[arg(long, default_value = "1:4")]
        r: Span,
        #[arg(long, default_value_t = 10)]
        bound: usize,
    },
    /// e, h and p at the doubled roots of unity, and the shifted elementary values.
    Roots {
        #[arg(long, default_value = "1:8")]
        r: Span,
        /// Largest index [default: 6(2r+1)].
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// The binomial identity behind the shifted elementary values.
    BinomialSum {
        #[arg(long, default_value = "1:8")]
        r: Span,
    },
    /// The Catalan-type series psi(alpha; x).
    Psi {
        #[arg(long, default_value_t = 30)]
        order: usize,
        /// Exponents alpha, beta and N run over 1..=alpha-max.
        #[arg(long, default_value_t = 8)]
        alpha_max: i64,
    },
    /// Explicit, recursive and cyclotomic F^(r) and L^(r), plus the C routes.
    CrossOracle {
        #[arg(long, default_value = "1:8")]
        r: Span,
        #[arg(long, default_value_t = 60)]
        n_max: i64,
    },
    /// Alternating binomial sums of F and L against periodic patterns.
    Inversion {
        #[arg(long, default_value = "1:8")]
        r: Span,
        #[arg(long, default_value_t = 60)]
        n_max: i64,
    },
    /// Small-index closed forms of F and L.
    InitialBlock {
        #[arg(long, default_value = "1:8")]
        r: Span,
    },
    /// The r = 1 and r = 2 cases for the classical Fibonacci numbers.
    FibonacciSpecializations {
        #[arg(long, default_value_t = 60)]
        bound: i64,
    },
    /// Binomial sums for L^(1) and the classical Lucas numbers.
    LucasSpecializations {
        #[arg(long, default_value_t = 60)]
        bound: i64,
    },
    /// Periodicity and residues of F and L modulo q.
    Congruence {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 200)]
        n_max: i64,
    },
    /// Toeplitz, Hessenberg and alternant determinant formulas.
    Determinants {
        #[arg(long, default_value = "1:5")]
        r: Span,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
    /// Squared alternant and the cleared F formula (2r+1 prime).
    Discriminant {
        #[arg(long)]
        r: Span,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
    /// Series inverse of the recursion's denominator.
    RecursionGenfun {
        #[arg(long, default_value = "1:6")]
        r: Span,
        #[arg(long, default_value_t = 30)]
        order: usize,
    },
    /// Newton-type and partition-sum relations among F, L and C.
    Partitions {
        #[arg(long, default_value = "1:4")]
        r: Span,
        #[arg(long, default_value_t = 10)]
        n_max: i64,
    },
    /// Recompute the embedded reference tables.
    Golden {
        /// cnk, fib or lucas [default: all three].
        #[arg(long, value_parser = TableKind::from_str)]
        table: Option<TableKind>,
    },
}

enum Outcome {
    Text(String),
    Reports(Vec<CheckReport>),
}

fn seed(run: &RunArgs) -> Result<u64> {
    if let Some(s) = run.seed {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Usage(format!("{SEED_ENV}='{v}' is not an unsigned integer"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn mode(m: &ModeArgs, run: &RunArgs) -> Result<VerifyMode> {
    Ok(match m.mode {
        ModeArg::Symbolic => VerifyMode::Symbolic,
        ModeArg::Random => VerifyMode::Random {
            trials: m.trials,
            seed: seed(run)?,
        },
    })
}

fn table_cmd(a: &TableArgs, err: &mut dyn Write) -> Result<String> {
    let g = seq::golden(a.kind);
    let default = |v: &[i64]| Span {
        lo: v[0],
        hi: *v.last().expect("nonempty"),
    };
    let (rows, cols) = match a.kind {
        TableKind::Cnk => {
            if a.r.is_some() {
                return Err(Error::Usage("cnk takes --n and --k".into()));
            }
            (
                a.n.clone().unwrap_or(default(&g.rows)),
                a.k.clone().unwrap_or(default(&g.cols)),
            )
        }
        TableKind::Fib | TableKind::Lucas => {
            if a.k.is_some() {
                return Err(Error::Usage(format!("{} takes --r and --n", a.kind)));
            }
            (
                a.r.clone().unwrap_or(default(&g.rows)),
                a.n.clone().unwrap_or(default(&g.cols)),
            )
        }
    };
    let t = seq::table(a.kind, rows.range(), cols.range())?;
    let notes: Vec<String> = known_typos()
        .into_iter()
        .filter(|ty| {
            ty.kind == a.kind && rows.range().contains(&ty.row) && cols.range().contains(&ty.col)
        })
        .map(|ty| {
            format!(
                "cell ({}={}, {}): the reference table prints {}; the recomputed value {} is shown",
                if a.kind == TableKind::Cnk { "n" } else { "r" },
                ty.row,
                if a.kind == TableKind::Cnk {
                    format!("k={}", ty.col)
                } else {
                    format!("n={}", ty.col)
                },
                ty.printed,
                ty.computed
            )
        })
        .collect();
    if a.out.format == Format::Csv {
        for n in &notes {
            let _ = writeln!(err, "note: {n}");
        }
    }
    render::render_table(&t, a.out.format, &notes)
}

fn each_r<T>(r: &Span, f: impl Fn(usize) -> Result<T>) -> Result<Vec<T>> {
    r.usizes("r")?.map(f).collect()
}

fn verify(check: &Check, run: &RunArgs) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    match check {
        Check::FirstKind {
            family,
            r,
            m_max,
            mode: m,
        } => {
            let mode = mode(m, run)?;
            for r in r.usizes("r")? {
                for f in family.families() {
                    let w = suite::first_kind_window(f, r);
                    out.extend(id::first_kind_suite(
                        f,
                        r,
                        *w.start()..=m_max.unwrap_or(*w.end()),
                        mode,
                    )?);
                }
            }
        }
        Check::SecondKind {
            family,
            r,
            n_max,
            mode: m,
        } => {
            let mode = mode(m, run)?;
            for r in r.usizes("r")? {
                for f in family.families() {
                    let w = suite::second_kind_window(f, r);
                    out.extend(id::second_kind_suite(
                        f,
                        r,
                        *w.start()..=n_max.unwrap_or(*w.end()),
                        mode,
                    )?);
                }
            }
        }
        Check::GenfunExpansion { family, r, order } => {
            let fams: Vec<Family> = family
                .family
                .map_or(vec![Family::E, Family::H], |f| vec![f]);
            for r in r.usizes("r")? {
                for &f in &fams {
                    out.push(id::genfun_expansion_check(f, r, *order)?);
                }
            }
        }
        Check::Consistency { r, m_max } => {
            for r in r.usizes("r")? {
                out.extend((0..=*m_max).map(|m| id::consistency_check(r, m)));
            }
        }
        Check::Principal { family, r, n_max } => {
            for r in r.usizes("r")? {
                for f in family.families() {
                    for n in usize::from(f == Family::P)..=*n_max {
                        out.push(id::principal_spec(f, r, n)?);
                    }
                }
            }
        }
        Check::PrincipalCorollaries { r, bound } => {
            out = each_r(r, |r| id::principal_corollaries_check(r, *bound))?
        }
        Check::Roots { r, n_max } => {
            for r in r.usizes("r")? {
                out.push(id::doubled_root_check(r, n_max.unwrap_or(6 * (2 * r + 1)))?);
                out.push(id::shifted_elementary_check(r)?);
            }
        }
        Check::BinomialSum { r } => out = each_r(r, id::binomial_sum_identity)?,
        Check::Psi { order, alpha_max } => {
            if *alpha_max < 1 || *alpha_max > i64::from(u32::MAX) {
                return Err(Error::Usage(
                    "--alpha-max must be a positive 32-bit value".into(),
                ));
            }
            out.push(id::psi_quadratic(*order));
            out.push(id::psi_inverse_substitution(*order));
            for a in 1..=*alpha_max {
                out.push(id::psi_coefficients(a, *order));
                out.push(id::psi_closed_form(a as u32, *order));
                out.push(id::psi_power_law(a as u32, *order));
                out.extend((1..=*alpha_max).map(|b| id::psi_index_law(a, b, *order)));
            }
        }
        Check::CrossOracle { r, n_max } => out = each_r(r, |r| seq::cross_oracle_check(r, *n_max))?,
        Check::Inversion { r, n_max } => {
            for r in r.usizes("r")? {
                for n in 0..=*n_max {
                    out.push(seq::inversion_check_f(r, n)?);
                    if n >= 1 {
                        out.push(seq::inversion_check_l(r, n)?);
                    }
                }
            }
        }
        Check::InitialBlock { r } => out = each_r(r, seq::initial_block_check)?,
        Check::FibonacciSpecializations { bound } => {
            out.push(seq::fibonacci_specializations_check(*bound)?)
        }
        Check::LucasSpecializations { bound } => {
            out.push(seq::lucas_specializations_check(*bound)?)
        }
        Check::Congruence { r, q, n_max } => out.push(seq::congruence_check(*r, *q, *n_max)?),
        Check::Determinants { r, n_max } => {
            out = each_r(r, |r| seq::determinant_formulas_check(r, *n_max))?
        }
        Check::Discriminant { r, n_max } => {
            out = each_r(r, |r| seq::discriminant_check(r, *n_max))?
        }
        Check::RecursionGenfun { r, order } => {
            out = each_r(r, |r| seq::recursion_genfun_check(r, *order))?
        }
        Check::Partitions { r, n_max } => {
            out = each_r(r, |r| seq::partition_relations_check(r, *n_max))?
        }
        Check::Golden { table } => {
            let kinds = table.map_or(TableKind::ALL.to_vec(), |k| vec![k]);
            out.extend(kinds.into_iter().map(seq::golden_check));
        }
    }
    sort_reports(&mut out);
    Ok(out)
}

fn execute<'a>(cli: &'a Cli, err: &mut dyn Write) -> Result<(Outcome, &'a OutputArgs, bool)> {
    Ok(match &cli.command {
        Command::Table(a) => (Outcome::Text(table_cmd(a, err)?), &a.out, false),
        Command::Verify(a) => (
            Outcome::Reports(verify(&a.check, &a.run)?),
            &a.out,
            a.run.timings,
        ),
        Command::Report(a) => {
            let groups = if a.all {
                Group::ALL.to_vec()
            } else {
                a.group.clone()
            };
            (
                Outcome::Reports(suite::run_groups(&groups, seed(&a.run)?, a.trials)?),
                &a.out,
                a.run.timings,
            )
        }
    })
}

/// 0 when every report passed, 1 otherwise.
pub fn exit_code(reports: &[CheckReport]) -> i32 {
    i32::from(reports.iter().any(|r| !r.passed()))
}

/// Runs the command line `args` (program name first), writing the document to
/// `out` unless `--output` is given and diagnostics to `err`. Returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let (outcome, dest, timings) = match execute(&cli, err) {
        Ok(v) => v,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let (doc, code) = match outcome {
        Outcome::Text(t) => (Ok(t), 0),
        Outcome::Reports(reports) => {
            for r in reports.iter().filter(|r| !r.passed()) {
                let _ = writeln!(err, "{r}");
            }
            let code = exit_code(&reports);
            (render::render_reports(&reports, dest.format, timings), code)
        }
    };
    let doc = match doc {
        Ok(d) => d,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let written = match &dest.output {
        Some(path) => std::fs::write(path, doc.as_bytes())
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => out
            .write_all(doc.as_bytes())
            .and_then(|_| out.flush())
            .map_err(|e| format!("cannot write output: {e}")),
    };
    match written {
        Ok(()) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

/// [`run_with`] on the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}
