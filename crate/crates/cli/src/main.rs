use std::path::PathBuf;
use std::process::ExitCode;

use bandprime::diagram::{parse_pd, Diagram};
use bandprime::lattice::DEFAULT_RANK_CAP;
use bandprime::obstruct::CertificateVerdict;
use bandprime::report::{analyze, pair, AnalyzeOptions};
use bandprime::Error;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

mod batch;

/// Exit statuses. Clap's own usage errors also exit with 2.
pub const EXIT_OK: u8 = 0;
pub const EXIT_INCONSISTENCY: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_RANK_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "bandprime", version)]
#[command(about = "Band-primeness certificates and ribbon concordance obstructions for knot diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one diagram: invariants, HFK, band-prime certificate, minimality evidence.
    Analyze {
        #[command(flatten)]
        input: PdInput,
        #[arg(long)]
        json: bool,
        /// Largest lattice rank handed to decomposition and isometry search.
        #[arg(long, default_value_t = DEFAULT_RANK_CAP)]
        rank_cap: usize,
        /// Treat the knot as two-bridge (never computed).
        #[arg(long)]
        assert_two_bridge: bool,
    },
    /// Analyze every entry of a corpus file (CSV or JSON); the bundled corpus if none is given.
    Batch {
        corpus: Option<PathBuf>,
        /// Write one JSON report per entry and a summary here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Compare against the corpus's expected values; mismatches exit with 1.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_RANK_CAP)]
        rank_cap: usize,
        #[arg(long)]
        assert_two_bridge: bool,
    },
    /// Look for obstructions to a ribbon concordance from LOWER to UPPER.
    Pair {
        /// PD code of the lower knot.
        #[arg(long, allow_hyphen_values = true)]
        lower: String,
        /// PD code of the upper knot.
        #[arg(long, allow_hyphen_values = true)]
        upper: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct PdInput {
    /// PD code, e.g. "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"; empty for the unknot.
    #[arg(long)]
    pd: Option<String>,
    /// File holding a PD code.
    #[arg(long)]
    file: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Analyze { input, json, rank_cap, assert_two_bridge } => {
            run_analyze(input, json, AnalyzeOptions { rank_cap, assert_two_bridge })
        }
        Command::Batch { corpus, out, check, json, rank_cap, assert_two_bridge } => batch::run(batch::BatchArgs {
            corpus,
            out,
            check,
            json,
            options: AnalyzeOptions { rank_cap, assert_two_bridge },
        }),
        Command::Pair { lower, upper, json } => run_pair(&lower, &upper, json),
    };
    ExitCode::from(code)
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Inconsistency(_) => EXIT_INCONSISTENCY,
        Error::RankCap { .. } => EXIT_RANK_CAP,
        _ => EXIT_INPUT,
    }
}

fn fail(e: &Error) -> u8 {
    eprintln!("error: {e}");
    exit_code(e)
}

fn read_input(input: &PdInput) -> Result<Diagram, Error> {
    let text = match (&input.pd, &input.file) {
        (Some(pd), _) => pd.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Error::Syntax { offset: 0, message: format!("cannot read {}: {e}", path.display()) })?,
        (None, None) => unreachable!("clap requires one input"),
    };
    parse_pd(&text)
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

fn run_analyze(input: PdInput, json: bool, options: AnalyzeOptions) -> u8 {
    let report = match read_input(&input).and_then(|d| analyze(&d, options)) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    if json {
        print_json(&report);
    } else {
        println!("{report}");
    }
    if report.certificate.verdict == CertificateVerdict::Inconsistency {
        EXIT_INCONSISTENCY
    } else {
        EXIT_OK
    }
}

fn run_pair(lower: &str, upper: &str, json: bool) -> u8 {
    let report = match parse_pd(lower).and_then(|l| Ok((l, parse_pd(upper)?))).and_then(|(l, u)| pair(&l, &u)) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    if json {
        print_json(&report);
    } else {
        println!("{report}");
    }
    EXIT_OK
}
