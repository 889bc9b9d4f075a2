//! Argument parsing and subcommand dispatch.
//!
//! Exit codes: 0 on success or a passing verification, 1 when any
//! verification fails, 2 on usage errors.

use std::ffi::OsString;
use std::io::{self, Write};
use std::time::Instant;

use clap::{error::ErrorKind, CommandFactory, Parser, Subcommand, ValueEnum};
use qpart_core::bijection::colored_to_over;
use qpart_core::identities::{
    check_functional_equations, verify_cd_equality, verify_functional_equations, verify_jtp,
    verify_sum_sides, verify_thm13, verify_thm32, VerificationReport, ENUMERATION_CAP,
};
use qpart_core::partitions::{build_xq_table, count_table, enumerate_2crr, Family};
use qpart_core::qseries::Sign;

use crate::format::{self, Format, Overline, TimedReport};

/// Environment variable overriding [`DEFAULT_MAX_ORDER`].
pub const MAX_ORDER_ENV: &str = "QPART_MAX_ORDER";
pub const DEFAULT_MAX_ORDER: usize = 1000;

/// `(k, i)` pairs checked by `verify --identity cd-equal` without `--k/--i`.
pub const CD_PAIRS: [(usize, usize); 6] = [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 2)];

#[derive(Debug, Parser)]
#[command(
    name = "qpart",
    version,
    about = "2-colored Rogers-Ramanujan partition tables and identity checks"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t)]
    pub format: Format,

    /// Render overlined parts as `3~` instead of a combining overline.
    #[arg(long, global = true)]
    pub ascii: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print counts for n = 0..=n-max.
    Count {
        /// Partition family.
        #[arg(long, value_enum, ignore_case = true)]
        family: FamilyTag,
        /// Largest weight to count.
        #[arg(long)]
        n_max: usize,
        /// Modulus parameter k for D and C.
        #[arg(long)]
        k: Option<usize>,
        /// Parameter a for D.
        #[arg(long)]
        a: Option<usize>,
        /// Parameter i for C.
        #[arg(long)]
        i: Option<usize>,
    },
    /// Check an identity coefficient by coefficient.
    Verify {
        /// Identity to check.
        #[arg(long, value_enum)]
        identity: IdentityTag,
        /// Truncation order.
        #[arg(long)]
        order: Option<usize>,
        /// Largest part count for the functional equations.
        #[arg(long)]
        m: Option<usize>,
        /// Parameter k for cd-equal.
        #[arg(long)]
        k: Option<usize>,
        /// Parameter i for cd-equal.
        #[arg(long)]
        i: Option<usize>,
        /// Largest weight for cd-equal.
        #[arg(long)]
        n_max: Option<usize>,
        /// Negative control for funceq: add 1 to the R_2 table entry at
        /// PARTS:WEIGHT before checking.
        #[arg(long, value_name = "PARTS:WEIGHT", value_parser = parse_cell)]
        corrupt: Option<(usize, usize)>,
    },
    /// List every colored partition of n next to its overpartition image.
    Bijection {
        /// Weight of the partitions to list.
        #[arg(long, visible_alias = "n-max")]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyTag {
    #[value(name = "R")]
    R,
    #[value(name = "R2")]
    R2,
    #[value(name = "R3")]
    R3,
    #[value(name = "D")]
    D,
    #[value(name = "C")]
    C,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdentityTag {
    Thm13,
    Thm32,
    Funceq,
    Jtp,
    CdEqual,
    Sumsides,
}

fn parse_cell(s: &str) -> Result<(usize, usize), String> {
    let (m, n) = s.split_once(':').ok_or("expected PARTS:WEIGHT")?;
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((parse(m)?, parse(n)?))
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn max_order() -> Result<usize, CliError> {
    match std::env::var(MAX_ORDER_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            usage(format!(
                "{MAX_ORDER_ENV} must be a non-negative integer, got {v:?}"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_ORDER),
        Err(e) => Err(usage(format!("{MAX_ORDER_ENV}: {e}"))),
    }
}

fn within(name: &str, value: usize, cap: usize) -> Result<usize, CliError> {
    if value > cap {
        Err(usage(format!("{name} {value} exceeds the cap of {cap}")))
    } else {
        Ok(value)
    }
}

fn family(
    tag: FamilyTag,
    k: Option<usize>,
    a: Option<usize>,
    i: Option<usize>,
) -> Result<Family, CliError> {
    Ok(match tag {
        FamilyTag::R => Family::R,
        FamilyTag::R2 => Family::R2,
        FamilyTag::R3 => Family::R3,
        FamilyTag::D => match (k, a) {
            (Some(k), Some(a)) => Family::D { k, a },
            _ => return Err(usage("family D needs --k and --a")),
        },
        FamilyTag::C => match (k, i) {
            (Some(k), Some(i)) => Family::C { k, i },
            _ => return Err(usage("family C needs --k and --i")),
        },
    })
}

fn timed<F>(f: F) -> Result<Vec<TimedReport>, CliError>
where
    F: FnOnce() -> Result<Vec<VerificationReport>, qpart_core::Error>,
{
    let start = Instant::now();
    let reports = f().map_err(|e| usage(e.to_string()))?;
    let elapsed_ms = start.elapsed().as_millis();
    Ok(reports
        .into_iter()
        .map(|report| TimedReport { report, elapsed_ms })
        .collect())
}

struct VerifyArgs {
    identity: IdentityTag,
    order: Option<usize>,
    m: Option<usize>,
    k: Option<usize>,
    i: Option<usize>,
    n_max: Option<usize>,
    corrupt: Option<(usize, usize)>,
}

fn funceq(
    max_parts: usize,
    order: usize,
    corrupt: Option<(usize, usize)>,
) -> Result<Vec<VerificationReport>, CliError> {
    let Some((m, n)) = corrupt else {
        return Ok(verify_functional_equations(max_parts, order));
    };
    if m > max_parts || n > order {
        return Err(usage(format!(
            "--corrupt {m}:{n} is outside the {max_parts}x{order} table"
        )));
    }
    let r1 = build_xq_table(1, max_parts, order);
    let mut r2 = build_xq_table(2, max_parts, order);
    let bumped = r2.get(m, n) + 1;
    r2.set(m, n, bumped);
    check_functional_equations(&r1, &r2).map_err(|e| usage(e.to_string()))
}

fn verify(args: VerifyArgs, cap: usize) -> Result<Vec<TimedReport>, CliError> {
    let VerifyArgs {
        identity,
        order,
        m,
        k,
        i,
        n_max,
        corrupt,
    } = args;
    if corrupt.is_some() && identity != IdentityTag::Funceq {
        return Err(usage("--corrupt only applies to --identity funceq"));
    }
    let order_or = |default: usize| within("--order", order.unwrap_or(default), cap);
    match identity {
        IdentityTag::Thm13 => {
            let n = order_or(100)?;
            timed(|| Ok(verify_thm13(n)))
        }
        IdentityTag::Thm32 => {
            let n = order_or(100)?;
            timed(|| Ok(verify_thm32(n)))
        }
        IdentityTag::Sumsides => {
            let n = order_or(100)?;
            timed(|| Ok(verify_sum_sides(n)))
        }
        IdentityTag::Funceq => {
            let n = within("--order", order_or(30)?, ENUMERATION_CAP)?;
            let m = m.unwrap_or(8);
            let start = Instant::now();
            let reports = funceq(m, n, corrupt)?;
            let elapsed_ms = start.elapsed().as_millis();
            Ok(reports
                .into_iter()
                .map(|report| TimedReport { report, elapsed_ms })
                .collect())
        }
        IdentityTag::Jtp => {
            let n = order_or(200)?;
            let mut out = Vec::new();
            for sign in [Sign::Plus, Sign::Minus] {
                for shift in [0, 1] {
                    out.extend(timed(|| verify_jtp(sign, shift, n).map(|r| vec![r]))?);
                }
            }
            Ok(out)
        }
        IdentityTag::CdEqual => {
            let n = within("--n-max", n_max.or(order).unwrap_or(18), ENUMERATION_CAP)?;
            let pairs = match (k, i) {
                (Some(k), Some(i)) => vec![(k, i)],
                (None, None) => CD_PAIRS.to_vec(),
                _ => return Err(usage("cd-equal needs both --k and --i, or neither")),
            };
            let mut out = Vec::new();
            for (k, i) in pairs {
                out.extend(timed(|| verify_cd_equality(k, i, n).map(|r| vec![r]))?);
            }
            Ok(out)
        }
    }
}

fn execute(
    cfg: &RunConfig,
    cap: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<bool, CliError> {
    let style = if cfg.ascii {
        Overline::Ascii
    } else {
        Overline::Unicode
    };
    match cfg.command {
        Command::Count {
            family: tag,
            n_max,
            k,
            a,
            i,
        } => {
            let fam = family(tag, k, a, i)?;
            let limit = if matches!(fam, Family::D { .. }) {
                cap.min(ENUMERATION_CAP)
            } else {
                cap
            };
            let n_max = within("--n-max", n_max, limit)?;
            let table = count_table(fam, n_max).map_err(|e| usage(e.to_string()))?;
            format::write_counts(out, &table, cfg.format)?;
            Ok(true)
        }
        Command::Verify {
            identity,
            order,
            m,
            k,
            i,
            n_max,
            corrupt,
        } => {
            let args = VerifyArgs {
                identity,
                order,
                m,
                k,
                i,
                n_max,
                corrupt,
            };
            let reports = verify(args, cap)?;
            for r in reports
                .iter()
                .filter(|r| r.report.passed() && r.report.is_vacuous())
            {
                writeln!(
                    err,
                    "warning: vacuous window: {} compared no nonzero coefficient beyond q^0",
                    r.report.identity
                )?;
            }
            format::write_reports(out, &reports, cfg.format)?;
            Ok(reports.iter().all(|r| r.report.passed()))
        }
        Command::Bijection { n } => {
            let n = within("--n", n, cap.min(ENUMERATION_CAP))?;
            let pairs = enumerate_2crr(n, 1)
                .into_iter()
                .map(|p| {
                    let image = colored_to_over(&p).expect("enumerated partitions are valid");
                    (p, image)
                })
                .collect::<Vec<_>>();
            format::write_pairs(out, &pairs, cfg.format, style)?;
            Ok(true)
        }
    }
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    let result = max_order().and_then(|cap| execute(&cfg, cap, out, err));
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(
                err,
                "error: {msg}\n\n{}",
                RunConfig::command().render_usage()
            );
            2
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
