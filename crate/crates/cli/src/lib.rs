//! Command-line front end for `cochar-core`.
//!
//! [`run_from`] parses arguments, runs one subcommand and returns the exit
//! code with everything that would go to stdout and stderr, so the binary
//! and the tests share one code path.

pub mod report;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cochar_core::cocharacters::{cocharacter_at, proper_cocharacter_at, AlgebraId};
use cochar_core::{
    expand_product, graded_cocharacter_ut2e, lr_coefficient, restrict, CharacterDecomposition,
    Error, Partition,
};

pub use report::{FindingsReport, FormulaSelector};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

pub const DEFAULT_TRUNCATION: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "cochar",
    version,
    about = "Cocharacters of E, E0, G, UT2(F) and UT2(E)"
)]
pub struct Cli {
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the cocharacter of an algebra in one degree.
    Compute(ComputeArgs),
    /// Check closed-form multiplicities against the engine.
    Verify(VerifyArgs),
    /// Littlewood-Richardson coefficients.
    Lr(LrArgs),
    /// Restrict an irreducible character to S_k x S_l.
    Restrict(RestrictArgs),
    /// Z2-graded cocharacter of UT2(E).
    Graded(GradedArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long)]
    pub algebra: AlgebraId,
    #[arg(long)]
    pub degree: usize,
    /// Proper cocharacter instead of the ordinary one.
    #[arg(long)]
    pub proper: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Series truncation; defaults to max(12, degree).
    #[arg(long)]
    pub truncation: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// A formula id, `all`, or `restriction-table`.
    #[arg(long)]
    pub formula: FormulaSelector,
    #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
    pub max_degree: usize,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LrArgs {
    #[arg(long)]
    pub lambda: Partition,
    #[arg(long)]
    pub mu: Partition,
    #[arg(long)]
    pub nu: Option<Partition>,
}

#[derive(Debug, Args)]
pub struct RestrictArgs {
    #[arg(long)]
    pub nu: Partition,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct GradedArgs {
    #[arg(long)]
    pub degree: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

/// Exit code plus captured streams.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn failure(code: i32, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(e.to_string()),
            _ => Outcome::failure(EXIT_USAGE, e.to_string()),
        },
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match cli.jobs {
        Some(0) => Outcome::failure(EXIT_USAGE, "error: --jobs must be at least 1"),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(cli)),
            Err(e) => Outcome::failure(EXIT_INTERNAL, format!("error: thread pool: {e}")),
        },
        None => dispatch(cli),
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Compute(args) => compute(args).map(Outcome::ok),
        Command::Verify(args) => report::verify(args, cli.jobs),
        Command::Lr(args) => lr(args).map(Outcome::ok),
        Command::Restrict(args) => restrict_cmd(args).map(Outcome::ok),
        Command::Graded(args) => graded(args).map(Outcome::ok),
    };
    result.unwrap_or_else(|e| Outcome::failure(exit_code(&e), format!("error: {e}")))
}

/// Usage errors carry code 1; anything the engine cannot make consistent, 3.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NegativeMultiplicity { .. }
        | Error::Overflow(_)
        | Error::MissingSlice(_)
        | Error::TruncationMismatch { .. }
        | Error::WeightMismatch { .. } => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

#[derive(Serialize)]
struct TermRow<'a> {
    partition: &'a Partition,
    mult: u64,
}

#[derive(Serialize)]
struct ComputeJson<'a> {
    algebra: AlgebraId,
    proper: bool,
    truncation: usize,
    degree: usize,
    terms: Vec<TermRow<'a>>,
}

pub fn compute_decomposition(
    args: &ComputeArgs,
) -> cochar_core::Result<(usize, CharacterDecomposition)> {
    let truncation = args
        .truncation
        .unwrap_or(DEFAULT_TRUNCATION.max(args.degree));
    let chi = if args.proper {
        proper_cocharacter_at(args.algebra, args.degree, truncation)?
    } else {
        cocharacter_at(args.algebra, args.degree, truncation)?
    };
    Ok((truncation, chi))
}

fn compute(args: &ComputeArgs) -> cochar_core::Result<String> {
    let (truncation, chi) = compute_decomposition(args)?;
    Ok(match args.format {
        Format::Text => format!("{}\n", chi.to_text()),
        Format::Json => {
            let doc = ComputeJson {
                algebra: args.algebra,
                proper: args.proper,
                truncation,
                degree: chi.degree(),
                terms: chi
                    .terms()
                    .iter()
                    .map(|(partition, &mult)| TermRow { partition, mult })
                    .collect(),
            };
            to_json_line(&doc)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut rows = vec![["partition".to_string(), "mult".to_string()]];
            rows.extend(
                chi.terms()
                    .iter()
                    .map(|(la, m)| [la.to_plain_string(), m.to_string()]),
            );
            for row in rows {
                w.write_record(&row).expect("in-memory csv");
            }
            String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
        }
    })
}

#[derive(Serialize)]
struct LrRow<'a> {
    nu: &'a Partition,
    coeff: u64,
}

fn lr(args: &LrArgs) -> cochar_core::Result<String> {
    if let Some(nu) = &args.nu {
        return Ok(format!("{}\n", lr_coefficient(&args.lambda, &args.mu, nu)));
    }
    let product = expand_product(&args.lambda, &args.mu);
    let rows: Vec<_> = product
        .iter()
        .map(|(nu, &coeff)| LrRow { nu, coeff })
        .collect();
    Ok(to_json_line(&rows))
}

fn restrict_cmd(args: &RestrictArgs) -> cochar_core::Result<String> {
    let b = restrict(&args.nu, args.k)?;
    Ok(match args.format {
        Format::Json => to_json_line(&b),
        Format::Text => format!("{}\n", b.to_text()),
        Format::Csv => bicharacter_csv([&b]),
    })
}

fn graded(args: &GradedArgs) -> cochar_core::Result<String> {
    let g = graded_cocharacter_ut2e(args.degree)?;
    Ok(match args.format {
        Format::Json => to_json_line(&g),
        Format::Text => {
            let mut out = String::new();
            for layer in g.layers() {
                writeln!(out, "k={} l={}: {}", layer.k(), layer.l(), layer.to_text())
                    .expect("string write");
            }
            out
        }
        Format::Csv => bicharacter_csv(g.layers()),
    })
}

fn bicharacter_csv<'a>(layers: impl IntoIterator<Item = &'a cochar_core::BiCharacter>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["k", "l", "lambda", "mu", "mult"])
        .expect("in-memory csv");
    for b in layers {
        for ((la, mu), m) in b.terms() {
            w.write_record([
                b.k().to_string(),
                b.l().to_string(),
                la.to_plain_string(),
                mu.to_plain_string(),
                m.to_string(),
            ])
            .expect("in-memory csv");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
}

pub(crate) fn to_json_line<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable output");
    s.push('\n');
    s
}
