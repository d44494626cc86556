//! Command-line front end.
//!
//! `execute` is the whole program minus process plumbing: it takes the
//! arguments after the program name and returns what should be written to
//! stdout and stderr together with the exit status.

mod document;
mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use document::ArrangementDocument;
pub use report::{FlatContribution, Payload, ReportDocument};

use crate::arrangement::{Arrangement, Family};
use crate::bernstein::{bernstein_generator, bernstein_generator_assuming_free, slopes, slopes_assuming_free};
use crate::error::Error;
use crate::lattice::IntersectionLattice;
use crate::structure::{exponents, freeness, irreducible_components, DEFAULT_DEPTH_LIMIT};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Environment variable overriding the default inductive search budget.
pub const DEPTH_ENV: &str = "BIDEAL_DEPTH";

#[derive(Debug, Parser)]
#[command(name = "bideal", version, about = "Lattices, freeness and Bernstein ideals of hyperplane arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Intersection lattice with Möbius values
    Lattice(Common),
    /// Characteristic polynomial
    Charpoly(Common),
    /// Irreducible decomposition
    Decompose(Common),
    /// Exponents from the characteristic polynomial
    Exponents(Common),
    /// Freeness verdict with certificate
    Freeness(Common),
    /// Generator of the Bernstein ideal
    Bideal(Common),
    /// Slopes of the arrangement
    Slopes(Common),
    /// Print the arrangement document of a named family
    Family(Common),
}

#[derive(Debug, Args)]
#[group(skip)]
#[command(group(clap::ArgGroup::new("source").required(true).multiple(false)))]
struct Common {
    /// Arrangement document (JSON)
    #[arg(long, value_name = "FILE", group = "source")]
    input: Option<PathBuf>,
    /// Named family, e.g. braid:4, boolean:3, generic2d:5
    #[arg(long, value_name = "NAME:PARAM", group = "source")]
    family: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Skip the freeness requirement of bideal and slopes
    #[arg(long)]
    assume_free: bool,
    /// Inductive freeness search budget (distinct sub-arrangements)
    #[arg(long, value_name = "LIMIT")]
    depth: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct Execution {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
    pub report: Option<ReportDocument>,
}

impl Execution {
    fn failure(status: i32, message: String) -> Self {
        Execution { status, stdout: String::new(), stderr: message, report: None }
    }
}

/// Runs with the depth override taken from the process environment.
pub fn execute<S: AsRef<str>>(argv: &[S]) -> Execution {
    let env_depth = std::env::var(DEPTH_ENV).ok();
    execute_with_env(argv, env_depth.as_deref())
}

/// Runs with an explicit value for the depth environment override.
pub fn execute_with_env<S: AsRef<str>>(argv: &[S], env_depth: Option<&str>) -> Execution {
    let args: Vec<String> = argv.iter().map(|s| s.as_ref().to_string()).collect();
    let cli = match Cli::try_parse_from(std::iter::once("bideal".to_string()).chain(args.iter().cloned())) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Execution { status: EXIT_OK, stdout: text, stderr: String::new(), report: None }
                }
                _ => Execution::failure(EXIT_USAGE, text),
            };
        }
    };

    let (name, common) = match &cli.command {
        Command::Lattice(c) => ("lattice", c),
        Command::Charpoly(c) => ("charpoly", c),
        Command::Decompose(c) => ("decompose", c),
        Command::Exponents(c) => ("exponents", c),
        Command::Freeness(c) => ("freeness", c),
        Command::Bideal(c) => ("bideal", c),
        Command::Slopes(c) => ("slopes", c),
        Command::Family(c) => ("family", c),
    };

    let depth = match (common.depth, env_depth) {
        (Some(d), _) => d,
        (None, Some(raw)) => match raw.trim().parse::<usize>() {
            Ok(d) if d > 0 => d,
            _ => return Execution::failure(EXIT_USAGE, format!("{DEPTH_ENV} must be a positive integer, got {raw:?}\n")),
        },
        (None, None) => DEFAULT_DEPTH_LIMIT,
    };
    if depth == 0 {
        return Execution::failure(EXIT_USAGE, "--depth must be positive\n".into());
    }

    let arrangement = match load(common) {
        Ok(a) => a,
        Err(e) => return error_execution(&e),
    };
    let document = ArrangementDocument::from_arrangement(&arrangement);

    let payload = match run(name, common, &arrangement, depth, &document) {
        Ok(p) => p,
        Err(e) => return error_execution(&e),
    };

    let report = ReportDocument::new(args, document.digest(), &payload);
    let stdout = match common.format {
        Format::Text => payload.to_text(),
        Format::Latex => payload.to_latex(),
        Format::Json => report.to_json(),
    };
    Execution { status: EXIT_OK, stdout, stderr: String::new(), report: Some(report) }
}

fn error_execution(e: &Error) -> Execution {
    let status = if e.is_malformed() { EXIT_MALFORMED } else { EXIT_DOMAIN };
    Execution::failure(status, format!("{e}\n"))
}

fn load(common: &Common) -> Result<Arrangement, Error> {
    match (&common.input, &common.family) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::MalformedInput(format!("cannot read {}: {e}", path.display())))?;
            ArrangementDocument::parse(&text)?.to_arrangement()
        }
        (None, Some(name)) => name.parse::<Family>()?.build(),
        (None, None) => unreachable!("clap enforces one source"),
    }
}

fn run(
    name: &str,
    common: &Common,
    a: &Arrangement,
    depth: usize,
    document: &ArrangementDocument,
) -> Result<Payload, Error> {
    Ok(match name {
        "lattice" => Payload::Lattice(IntersectionLattice::new(a)),
        "charpoly" => Payload::CharPoly(IntersectionLattice::new(a).characteristic_polynomial()),
        "decompose" => Payload::Decompose(irreducible_components(a)?),
        "exponents" => Payload::Exponents(exponents(a)),
        "freeness" => Payload::Freeness(freeness(a, depth)),
        "bideal" => {
            let generator = if common.assume_free {
                bernstein_generator_assuming_free(a)
            } else {
                bernstein_generator(a, &freeness(a, depth))?
            };
            Payload::Bideal { generator, flats: FlatContribution::for_arrangement(a), assumed_free: common.assume_free }
        }
        "slopes" => Payload::Slopes(if common.assume_free {
            slopes_assuming_free(a)
        } else {
            slopes(a, &freeness(a, depth))?
        }),
        "family" => {
            if common.family.is_none() {
                return Err(Error::MalformedInput("family needs --family NAME:PARAM".into()));
            }
            Payload::Family(document.clone())
        }
        other => unreachable!("unknown subcommand {other}"),
    })
}
