//! `ehzd`: scans of p-blocks of symmetric and alternating groups, checks of
//! the relative hook formula and Schur-element specializations, and the
//! `GL_n` unipotent, Zsigmondy and torus tables.
//!
//! Exit status: 0 on success, 1 if any refutation record was emitted, 2 on
//! usage errors.

mod args;
mod commands;
mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use args::Span;
use commands::{Failure, GroupArg, PartArg};
use ehzd::unipotent::{Series, SpeceqBounds};
use report::Format;

/// Overrides the directory that output files are written to.
const OUT_DIR_VAR: &str = "EHZD_OUT_DIR";

#[derive(Parser, Debug)]
#[command(name = "ehzd", version, about = "Exact scans of EHZD blocks and related degree identities")]
struct Cli {
    #[arg(long, value_enum, default_value = "table", global = true)]
    format: Format,
    /// Write the report here instead of stdout. Relative paths are taken
    /// from $EHZD_OUT_DIR when it is set.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads; 1 runs sequentially.
    #[arg(long, default_value = "1", global = true)]
    jobs: NonZeroUsize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the p-blocks of S_n or A_n with heights, EHZD flag and case.
    ScanBlocks {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        n_range: Span,
        #[arg(long, value_parser = args::prime)]
        p: usize,
        /// Only list blocks whose height-zero characters share one degree.
        #[arg(long)]
        ehzd_only: bool,
    },
    /// Compare the relative hook formula with the hook-length degree and
    /// tally the quotient congruence.
    VerifyHookFormula {
        #[arg(long)]
        n_max: usize,
        /// Comma-separated primes.
        #[arg(long, value_parser = args::prime, value_delimiter = ',', default_value = "2,3,5,7")]
        primes: Vec<usize>,
    },
    /// Check e^r r! |f_S(1; zeta)| against the degrees of G(e,1,r).
    VerifyWreath {
        #[arg(long)]
        e_max: usize,
        #[arg(long)]
        r_max: usize,
    },
    /// Unipotent degree polynomials of GL_n, optionally at q, or the pairs
    /// whose degrees coincide at q.
    Unipotent {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        collisions: bool,
    },
    /// Degree ratios over d-cores of GL_n against phi(1) modulo Phi_d.
    HllCheck {
        #[arg(long)]
        n: Span,
        #[arg(long)]
        d: Span,
    },
    /// Search n1 = n2 prod Phi_i(q)^{a_i} with n1, n2 powers of 2 (part a)
    /// or divisors of 120 (part b).
    Speceq {
        #[arg(long)]
        q_max: u64,
        #[arg(long)]
        m_max: u32,
        #[arg(long)]
        exp_bound: i32,
        #[arg(long, value_enum, default_value = "both")]
        part: PartArg,
    },
    /// Torus orders and Zsigmondy primes; `--series all` runs every row.
    Tori {
        #[arg(long, value_parser = parse_series)]
        series: SeriesArg,
        #[arg(long)]
        n: Span,
        #[arg(long)]
        q: Span,
    },
    /// Least primitive prime divisor of q^m - 1.
    Zsigmondy {
        #[arg(long)]
        q: Span,
        #[arg(long)]
        m: Span,
    },
}

#[derive(Clone, Copy, Debug)]
struct SeriesArg(Option<Series>);

fn parse_series(s: &str) -> Result<SeriesArg, String> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(SeriesArg(None));
    }
    s.parse().map(|x| SeriesArg(Some(x))).map_err(|e: ehzd::Error| e.to_string())
}

fn run(command: Command) -> commands::Outcome {
    match command {
        Command::ScanBlocks { group, n_range, p, ehzd_only } => commands::scan_blocks(group, n_range, p, ehzd_only),
        Command::VerifyHookFormula { n_max, primes } => {
            let mut unique = Vec::new();
            for p in primes {
                if !unique.contains(&p) {
                    unique.push(p);
                }
            }
            commands::verify_hook_formula(n_max, &unique)
        }
        Command::VerifyWreath { e_max, r_max } => commands::verify_wreath(e_max, r_max),
        Command::Unipotent { n, q, collisions } => commands::unipotent(n, q, collisions),
        Command::HllCheck { n, d } => commands::hll_check(n, d),
        Command::Speceq { q_max, m_max, exp_bound, part } => {
            commands::speceq(SpeceqBounds { q_max, m_max, exp_bound }, part)
        }
        Command::Tori { series, n, q } => commands::tori(series.0, n, q),
        Command::Zsigmondy { q, m } => commands::zsigmondy_table(q, m),
    }
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn output_path(explicit: Option<PathBuf>, command: &str, format: Format) -> Option<PathBuf> {
    let dir = std::env::var_os(OUT_DIR_VAR).map(PathBuf::from);
    match (explicit, dir) {
        (Some(p), Some(d)) if p.is_relative() => Some(d.join(p)),
        (Some(p), _) => Some(p),
        (None, Some(d)) => Some(d.join(format!("{command}.{}", format.extension()))),
        (None, None) => None,
    }
}

fn write_report(report: &report::Report, format: Format, path: Option<&Path>) -> io::Result<()> {
    match path {
        Some(p) => {
            if let Some(parent) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent)?;
            }
            let mut w = BufWriter::new(File::create(p)?);
            report.render(format, &mut w)?;
            w.flush()
        }
        None => {
            let mut w = io::stdout().lock();
            report.render(format, &mut w)?;
            w.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("invalid arguments");
            return usage(first.trim_start_matches("error: "));
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.get()).build() {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    let format = cli.format;
    let report = match pool.install(|| run(cli.command)) {
        Ok(r) => r,
        Err(Failure::Usage(msg)) => return usage(msg),
        Err(Failure::Compute(e)) => return usage(e),
    };
    let path = output_path(cli.output, report.command, format);
    if let Err(e) = write_report(&report, format, path.as_deref()) {
        return usage(format!("writing output: {e}"));
    }
    if report.refutations.is_empty() {
        return ExitCode::SUCCESS;
    }
    eprintln!("{} refutation(s); first: {}", report.refutations.len(), report.refutations[0]);
    ExitCode::from(1)
}
