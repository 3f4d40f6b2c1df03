use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hurmono::golden::{embedded_rows, parse_goldens, verify_all};
use hurmono::{enumerate_sheets, report, Error, HurwitzSpec};

mod render;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_TOO_LARGE: u8 = 3;
const EXIT_INTERNAL: u8 = 101;

#[derive(Parser)]
#[command(
    name = "hurmono",
    version,
    about = "Sheets, monodromy and components of Hurwitz spaces of fully-marked covers"
)]
struct Cli {
    /// Worker threads (default: all cores)
    #[arg(long, global = true, env = "HURMONO_THREADS", value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// List the sheets: one canonical marked tuple per conjugacy class
    Sheets(SpaceArgs),
    /// Components of the space with degree, genus and boundary ramification
    Report {
        #[command(flatten)]
        space: SpaceArgs,
        /// Also print the sheet permutations of each component
        #[arg(short, long, action = clap::ArgAction::Count)]
        verbose: u8,
    },
    /// Recompute the golden tables and compare
    Verify {
        /// Only rows of this total degree
        #[arg(long)]
        degree: Option<usize>,
        /// Golden file to use instead of the built-in one
        #[arg(long)]
        goldens: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SpaceArgs {
    /// Degrees of the source components, e.g. "2,1"
    #[arg(long)]
    degrees: String,
    /// Genera of the source components, same length as --degrees
    #[arg(long)]
    genera: String,
    /// Ramification profiles, e.g. "2,1;2,1;1,1,1" or "2,1^4"
    #[arg(long)]
    profiles: String,
}

impl SpaceArgs {
    fn spec(&self) -> hurmono::Result<HurwitzSpec> {
        HurwitzSpec::from_flags(&self.degrees, &self.genera, &self.profiles)
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TooLarge(_) => EXIT_TOO_LARGE,
            Error::Internal(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n.into())
            .build_global()
        {
            eprintln!("error: could not start {n} threads: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let (out, code) = match &cli.command {
        Command::Sheets(args) => {
            let spec = args.spec()?;
            let sheets = enumerate_sheets(&spec)?;
            (render::sheets(cli.format, &spec, &sheets), 0)
        }
        Command::Report { space, verbose } => {
            let mut r = report(&space.spec()?)?;
            if *verbose == 0 {
                for c in &mut r.components {
                    c.monodromy = None;
                }
            }
            (render::report(cli.format, &r), 0)
        }
        Command::Verify { degree, goldens } => {
            let rows = match goldens {
                Some(path) => {
                    let text = std::fs::read_to_string(path).map_err(|e| Failure {
                        code: EXIT_USAGE,
                        message: format!("cannot read {}: {e}", path.display()),
                    })?;
                    parse_goldens(&text).map_err(|e| Failure {
                        code: EXIT_USAGE,
                        message: format!("{}: {e}", path.display()),
                    })?
                }
                None => embedded_rows(),
            };
            let summary = verify_all(&rows, *degree)?;
            let code = if summary.all_passed() {
                0
            } else {
                EXIT_VERIFY_FAILED
            };
            (render::summary(cli.format, &summary), code)
        }
    };
    print!("{out}");
    Ok(code)
}
