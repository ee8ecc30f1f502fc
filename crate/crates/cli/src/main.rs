//! `jacobi-dim`: dimensions of spaces of Jacobi cusp forms from the command
//! line.
//!
//! Exit codes: 0 success, 1 a consistency check failed, 2 usage or domain
//! error.

mod group_arg;
mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use jacobi_dim::class_numbers::enumerate_reduced_forms;
use jacobi_dim::crosscheck::{
    equivalence_suite, identity_suite, lemma_suite, lifting_suite, SuiteReport,
};
use jacobi_dim::{dim_jacobi, hurwitz_h1, BranchingScheme, Discriminant};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde_json::json;

use group_arg::{parse_group, parse_range};
use output::{write_hurwitz, write_records, Format, HurwitzRow, OutputRecord};

const THREADS_ENV: &str = "JACOBI_DIM_THREADS";

#[derive(Debug)]
pub enum CliError {
    /// Bad input: exit code 2.
    Usage(String),
    /// A consistency suite reported failures: exit code 1.
    ChecksFailed,
    /// The reader of stdout went away; nothing left to report.
    BrokenPipe,
}

impl From<jacobi_dim::Error> for CliError {
    fn from(e: jacobi_dim::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return CliError::BrokenPipe;
        }
        CliError::Usage(format!("output error: {e}"))
    }
}

#[derive(Parser)]
#[command(
    name = "jacobi-dim",
    version,
    about = "Dimensions of spaces of Jacobi cusp forms S_{k,m}(Γ)"
)]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension for one group, weight and index.
    Dim {
        /// gammaN:<N>, gamma0:<N>, gamma1:<N> or scheme:<path-to-JSON>
        #[arg(long)]
        group: String,
        #[arg(long = "weight", short = 'k')]
        k: i64,
        #[arg(long = "index", short = 'm')]
        m: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Dimensions over a grid of weights and indices, in row-major order.
    Table {
        #[arg(long)]
        group: String,
        /// Inclusive weight range, e.g. 3..6
        #[arg(long)]
        weights: String,
        /// Inclusive index range, e.g. 1..4
        #[arg(long)]
        indices: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a consistency suite.
    Check {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 36)]
        max_a: i64,
        #[arg(long, default_value_t = 36)]
        max_f: i64,
        /// Largest weight (identity suite default 13, equivalence suite default 12).
        #[arg(long)]
        max_k: Option<i64>,
        /// Largest index (identity suite default 60, equivalence suite default 36).
        #[arg(long)]
        max_m: Option<i64>,
        /// Largest N whose Γ(N) widths enter the equivalence suite.
        #[arg(long, default_value_t = 16)]
        max_level: i64,
        /// Number of random synthetic width lists for the equivalence suite.
        #[arg(long, default_value_t = 200)]
        random_lists: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_delimiter = ',', default_value = "13,37,61")]
        primes: Vec<i64>,
        #[arg(
            long = "lifting-weights",
            value_delimiter = ',',
            default_value = "4,6,8,10,12"
        )]
        lifting_weights: Vec<i64>,
    },
    /// Hurwitz class numbers H(Δ) over a range of Δ ≤ 0.
    Hurwitz {
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
        /// Also list the reduced forms of each discriminant.
        #[arg(long)]
        forms: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the branching-scheme JSON of a group.
    Scheme {
        #[arg(long)]
        group: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Lemma,
    Identity,
    Lifting,
    Equivalence,
    All,
}

fn record(group: &group_arg::GroupArg, k: i64, m: i64) -> Result<OutputRecord, CliError> {
    let dim = dim_jacobi(k, m, &group.scheme)?;
    Ok(OutputRecord {
        group: group.json.clone(),
        label: group.label.clone(),
        k,
        m,
        value: dim.value.into(),
        plain: dim.plain,
    })
}

fn cmd_dim(
    out: &mut dyn Write,
    group: &str,
    k: i64,
    m: i64,
    format: Format,
) -> Result<(), CliError> {
    let group = parse_group(group)?;
    let r = record(&group, k, m)?;
    if !r.plain && format == Format::Text {
        eprintln!("note: for k = 2 the value is dim S_{{2,m}} − dim J^skew_{{1,m}}");
    }
    write_records(out, &[r], format, true)?;
    Ok(())
}

fn cmd_table(
    out: &mut dyn Write,
    group: &str,
    weights: &str,
    indices: &str,
    format: Format,
) -> Result<(), CliError> {
    let group = parse_group(group)?;
    let (k_lo, k_hi) = parse_range(weights)?;
    let (m_lo, m_hi) = parse_range(indices)?;
    let grid: Vec<(i64, i64)> = (k_lo..=k_hi)
        .flat_map(|k| (m_lo..=m_hi).map(move |m| (k, m)))
        .collect();
    let records = grid
        .par_iter()
        .map(|&(k, m)| record(&group, k, m))
        .collect::<Result<Vec<_>, _>>()?;
    write_records(out, &records, format, false)?;
    Ok(())
}

fn random_width_lists(count: usize, seed: u64) -> Vec<Vec<i64>> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=8);
            (0..len).map(|_| rng.gen_range(1..=24)).collect()
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn cmd_check(
    out: &mut dyn Write,
    suite: Suite,
    max_a: i64,
    max_f: i64,
    max_k: Option<i64>,
    max_m: Option<i64>,
    max_level: i64,
    random_lists: usize,
    seed: u64,
    primes: &[i64],
    lifting_weights: &[i64],
) -> Result<(), CliError> {
    let run = |s: Suite| -> jacobi_dim::Result<SuiteReport> {
        match s {
            Suite::Lemma => lemma_suite(max_a, max_f),
            Suite::Identity => identity_suite(max_k.unwrap_or(13), max_m.unwrap_or(60)),
            Suite::Lifting => lifting_suite(primes, lifting_weights),
            Suite::Equivalence => {
                let mut lists = Vec::new();
                for n in 3..=max_level {
                    lists.push(
                        BranchingScheme::principal_congruence(n)?
                            .regular_widths()
                            .to_vec(),
                    );
                }
                lists.extend(random_width_lists(random_lists, seed));
                equivalence_suite(max_k.unwrap_or(12), max_m.unwrap_or(36), &lists)
            }
            Suite::All => unreachable!(),
        }
    };
    let suites = match suite {
        Suite::All => vec![
            Suite::Lemma,
            Suite::Identity,
            Suite::Lifting,
            Suite::Equivalence,
        ],
        s => vec![s],
    };
    let reports = suites
        .par_iter()
        .map(|&s| run(s))
        .collect::<Result<Vec<_>, _>>()?;

    let mut all_passed = true;
    let mut summary = Vec::new();
    for r in &reports {
        all_passed &= r.passed();
        let status = if r.passed() { "PASS" } else { "FAIL" };
        let worst = r
            .max_abs_error
            .map(|e| format!(", max abs error {e:.3e}"))
            .unwrap_or_default();
        writeln!(
            out,
            "{status} {}: {} checks, {} failed{worst}",
            r.suite,
            r.checks,
            r.failures.len()
        )?;
        for f in r.failures.iter().take(20) {
            writeln!(out, "  FAIL {f}")?;
        }
        summary.push(json!({
            "suite": r.suite,
            "checks": r.checks,
            "failed": r.failures.len(),
            "max_abs_error": r.max_abs_error,
        }));
    }
    let summary = json!({ "passed": all_passed, "suites": summary });
    writeln!(out, "{summary}")?;
    if all_passed {
        Ok(())
    } else {
        Err(CliError::ChecksFailed)
    }
}

fn cmd_hurwitz(
    out: &mut dyn Write,
    from: i64,
    to: i64,
    forms: bool,
    format: Format,
) -> Result<(), CliError> {
    if from > 0 || to > 0 {
        return Err(CliError::Usage(format!(
            "Δ must be ≤ 0 (got range {from}..{to})"
        )));
    }
    let (lo, hi) = (from.min(to), from.max(to));
    let mut rows = Vec::new();
    for delta in (lo..=hi).rev() {
        let d = Discriminant::new(delta)?;
        let listed = forms.then(|| {
            enumerate_reduced_forms(d)
                .map(|fs| fs.iter().map(|f| [f.a, f.b, f.c]).collect())
                .unwrap_or_default()
        });
        rows.push(HurwitzRow {
            delta,
            h: hurwitz_h1(d).into(),
            forms: listed,
        });
    }
    write_hurwitz(out, &rows, format)?;
    Ok(())
}

fn cmd_scheme(out: &mut dyn Write, group: &str) -> Result<(), CliError> {
    let group = parse_group(group)?;
    let text = serde_json::to_string_pretty(&group.scheme).expect("scheme serializes");
    writeln!(out, "{text}")?;
    Ok(())
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = value.parse().ok().filter(|&n| n >= 1).ok_or_else(|| {
        CliError::Usage(format!(
            "{THREADS_ENV} must be a positive integer (got {value:?})"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot configure worker threads: {e}")))
}

fn run(cli: Cli) -> Result<(), CliError> {
    configure_threads()?;
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| {
            CliError::Usage(format!("cannot create {}: {e}", path.display()))
        })?)),
        None => Box::new(io::stdout().lock()),
    };
    let result = match cli.command {
        Command::Dim {
            group,
            k,
            m,
            format,
        } => cmd_dim(&mut *out, &group, k, m, format),
        Command::Table {
            group,
            weights,
            indices,
            format,
        } => cmd_table(&mut *out, &group, &weights, &indices, format),
        Command::Check {
            suite,
            max_a,
            max_f,
            max_k,
            max_m,
            max_level,
            random_lists,
            seed,
            primes,
            lifting_weights,
        } => cmd_check(
            &mut *out,
            suite,
            max_a,
            max_f,
            max_k,
            max_m,
            max_level,
            random_lists,
            seed,
            &primes,
            &lifting_weights,
        ),
        Command::Hurwitz {
            from,
            to,
            forms,
            format,
        } => cmd_hurwitz(&mut *out, from, to, forms, format),
        Command::Scheme { group } => cmd_scheme(&mut *out, &group),
    };
    let flushed = out.flush();
    result?;
    flushed.map_err(CliError::from)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) | Err(CliError::BrokenPipe) => ExitCode::SUCCESS,
        Err(CliError::ChecksFailed) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
