use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ssg_core::cosets::Side;
use ssg_core::format::{read_file, write_file};
use ssg_core::oracle::{errata_document, run_errata_suite};
use ssg_core::report::{analyze, render_text, to_json, AnalyzeOptions};
use ssg_core::semigroup::{direct_product, make_full_transformation, make_matrix_semigroup, make_zn_mul};
use ssg_core::verify::{criterion_status, run_suite, CheckStatus, Suite};
use ssg_core::{ElementSet, FiniteSemigroup, IdentityPolicy, SubgroupOptions};

const EXIT_VERIFY: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "ssg", version, about = "Finite semigroups, their embedded groups and Smarandache properties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a semigroup and write it as a .sgp file.
    Construct {
        #[command(subcommand)]
        kind: Kind,
    },
    /// Analyze a .sgp file.
    Analyze {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::AnyIdempotent)]
        mode: Mode,
        #[arg(long, default_value_t = 2)]
        min_subgroup_size: usize,
        #[arg(long, default_value_t = 720)]
        max_group_order: usize,
        /// Include the whole semigroup when it is itself a group.
        #[arg(long)]
        include_improper: bool,
        #[arg(long)]
        json: bool,
        /// Report wall-clock time (makes output non-reproducible).
        #[arg(long)]
        timing: bool,
        /// A subgroup, as whitespace- or comma-separated element labels,
        /// whose coset partition is reported. May be repeated.
        #[arg(long)]
        coset: Vec<String>,
        #[arg(long, value_enum, default_value_t = CosetSide::Right)]
        side: CosetSide,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum Kind {
    /// Z_n under multiplication mod n.
    Zn { n: usize, #[arg(short, long)] output: PathBuf },
    /// Full transformation semigroup on n points.
    Tn { n: usize, #[arg(short, long)] output: PathBuf },
    /// k x k matrices over Z_m under multiplication.
    Mat { k: usize, m: usize, #[arg(short, long)] output: PathBuf },
    /// Direct product of two .sgp files.
    Product { a: PathBuf, b: PathBuf, #[arg(short, long)] output: PathBuf },
    /// Validate a Cayley table (JSON or plain text) and write it as .sgp.
    Table {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        name: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    AnyIdempotent,
    GlobalIdentityOnly,
}

#[derive(Clone, Copy, ValueEnum)]
enum CosetSide {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Book,
    Errata,
    Properties,
}

type CmdResult = std::result::Result<ExitCode, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Construct { kind } => construct(kind),
        Command::Analyze { input, mode, min_subgroup_size, max_group_order, include_improper, json, timing, coset, side } => {
            let opts = SubgroupOptions {
                policy: match mode {
                    Mode::AnyIdempotent => IdentityPolicy::AnyIdempotent,
                    Mode::GlobalIdentityOnly => IdentityPolicy::GlobalIdentityOnly,
                },
                min_size: min_subgroup_size,
                proper_only: !include_improper,
                max_group_order,
            };
            let side = match side {
                CosetSide::Left => Side::Left,
                CosetSide::Right => Side::Right,
            };
            run_analyze(&input, &opts, json, timing, &coset, side)
        }
        Command::Verify { suite, json } => run_verify(suite, json),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("ssg: {message}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn load(path: &PathBuf) -> std::result::Result<FiniteSemigroup, String> {
    read_file(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn construct(kind: Kind) -> CmdResult {
    let (s, output) = match kind {
        Kind::Zn { n, output } => (make_zn_mul(n), output),
        Kind::Tn { n, output } => (make_full_transformation(n), output),
        Kind::Mat { k, m, output } => (make_matrix_semigroup(k, m), output),
        Kind::Product { a, b, output } => (direct_product(&load(&a)?, &load(&b)?), output),
        Kind::Table { input, output, name } => {
            let s = load(&input)?;
            (Ok(match name {
                Some(n) => s.with_name(n),
                None => s,
            }), output)
        }
    };
    let s = s.map_err(|e| e.to_string())?;
    write_file(&output, &s).map_err(|e| format!("{}: {e}", output.display()))?;
    println!("wrote {} ({} elements) to {}", s.name(), s.size(), output.display());
    Ok(ExitCode::SUCCESS)
}

fn parse_subset(s: &FiniteSemigroup, spec: &str) -> std::result::Result<ElementSet, String> {
    let tokens: Vec<&str> = spec.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).collect();
    if tokens.is_empty() {
        return Err(format!("empty coset subgroup {spec:?}"));
    }
    s.set_of_labels(&tokens).map_err(|e| format!("coset subgroup {spec:?}: {e}"))
}

fn run_analyze(input: &PathBuf, opts: &SubgroupOptions, json: bool, timing: bool, coset: &[String], side: Side) -> CmdResult {
    let s = load(input)?;
    let cosets = coset.iter().map(|c| parse_subset(&s, c)).collect::<std::result::Result<Vec<_>, _>>()?;
    let report = analyze(&s, opts, &AnalyzeOptions { cosets, side, timing }).map_err(|e| e.to_string())?;
    if json {
        print!("{}", to_json(&report));
    } else {
        print!("{}", render_text(&report));
    }
    Ok(ExitCode::SUCCESS)
}

fn status_word(status: CheckStatus) -> &'static str {
    match status {
        CheckStatus::Pass => "PASS",
        CheckStatus::Fail => "FAIL",
        CheckStatus::Unattainable => "UNATTAINABLE",
    }
}

fn run_verify(suite: SuiteArg, json: bool) -> CmdResult {
    let suite = match suite {
        SuiteArg::Book => Suite::Book,
        SuiteArg::Errata => Suite::Errata,
        SuiteArg::Properties => Suite::Properties,
    };
    let checks = run_suite(suite);
    let failed = checks.iter().filter(|c| c.status == CheckStatus::Fail).count();
    if json {
        println!("{}", serde_json::to_string_pretty(&checks).map_err(|e| e.to_string())?);
    } else {
        for c in &checks {
            println!("[{:02}] {:<12} {}: {}", c.criterion, status_word(c.status), c.name, c.detail);
        }
        if matches!(suite, Suite::Errata) {
            let entries = run_errata_suite().map_err(|e| e.to_string())?;
            println!();
            print!("{}", errata_document(&entries));
        }
        let unattainable = checks.iter().filter(|c| c.status == CheckStatus::Unattainable).count();
        println!(
            "{} checks: {} passed, {} failed, {} unattainable as stated ({})",
            checks.len(),
            checks.len() - failed - unattainable,
            failed,
            unattainable,
            status_word(criterion_status(&checks)).to_lowercase(),
        );
    }
    Ok(if failed > 0 { ExitCode::from(EXIT_VERIFY) } else { ExitCode::SUCCESS })
}
