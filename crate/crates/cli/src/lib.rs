//! Argument handling and command dispatch for the `dsr` binary.
//!
//! Exit codes: 0 on success (including `verify` runs that find
//! counterexamples), 1 on unreadable or invalid input, 2 when an internal
//! consistency check fails.

use std::fmt;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use dsr_core::io::{self, report, Ballots};
use dsr_core::majority::tally;
use dsr_core::oracle::{check_theorem_suite, BallotStyle, EnumerationSpec, Mode};
use dsr_core::scoring::{compute_scores, ScoringConfig};
use dsr_core::PreferenceRelation;

#[derive(Debug, Parser)]
#[command(name = "dsr", version, about = "Score alternatives by dominating-set-relaxed partitions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Score a ballot file (ranked or approval ballots).
    Rank(ScoreArgs),
    /// Score a pairwise matrix file.
    Tournament(ScoreArgs),
    /// Show the per-pivot neighborhood analysis and chosen partitions.
    Partitions(InputArgs),
    /// Compare DSR winners with Copeland, the uncovered set, Smith, top cycle and Schwartz.
    Compare(ScoreArgs),
    /// Run the property checks over exhaustive or seeded random instances.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Ballot file or matrix file; the format is detected from the first line.
    pub file: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ScoreArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Points for a tie, as P/Q in [0, 1].
    #[arg(long, default_value = "1/2", value_parser = parse_config)]
    pub alpha: ScoringConfig,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Roster size K or range LO-HI.
    #[arg(long, value_parser = parse_range)]
    pub m: RangeInclusive<usize>,
    #[arg(long, value_enum)]
    pub mode: VerifyMode,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Number of random instances.
    #[arg(long, default_value_t = 1000)]
    pub count: usize,
    /// Voter count N or range LO-HI for random profiles.
    #[arg(long, default_value = "1-9", value_parser = parse_range)]
    pub n: RangeInclusive<usize>,
    #[arg(long, value_enum, default_value_t = Style::Mixed)]
    pub style: Style,
    #[arg(long, default_value = "1/2", value_parser = parse_config)]
    pub alpha: ScoringConfig,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyMode {
    Tournaments,
    WeakOrders,
    Random,
    RandomRelations,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Style {
    Strict,
    Weak,
    Mixed,
}

fn parse_config(s: &str) -> Result<ScoringConfig, String> {
    s.parse().map_err(|e: dsr_core::Error| e.to_string())
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("`{s}` is not K or LO-HI"));
    let (lo, hi) = match s.split_once('-') {
        Some((a, b)) => (num(a)?, num(b)?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok(lo..=hi)
}

/// Outcome of a command: what to print and how to exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn fail(code: i32, msg: impl fmt::Display) -> Self {
        Outcome { code, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<dsr_core::Error> for Failure {
    fn from(e: dsr_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(cli.command) {
        Ok(out) => Outcome::ok(out),
        Err(Failure::Input(msg)) => Outcome::fail(1, msg),
        Err(Failure::Internal(msg)) => Outcome::fail(2, format!("internal check failed: {msg}")),
    }
}

enum Input {
    Ballots(Ballots),
    Matrix(PreferenceRelation),
}

impl Input {
    fn relation(&self) -> (PreferenceRelation, Option<dsr_core::majority::PairwiseTally>) {
        match self {
            Input::Ballots(b) => {
                let t = tally(&b.to_profile());
                (t.majority_relation(), Some(t))
            }
            Input::Matrix(rel) => (rel.clone(), None),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn with_path(path: &Path, e: dsr_core::Error) -> Failure {
    Failure::Input(format!("{}: {e}", path.display()))
}

/// Ballot files start with an `alternatives:` header; anything else is a matrix.
fn looks_like_ballots(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_none_or(|l| l.starts_with("alternatives"))
}

fn load_ballots(path: &Path) -> Result<Input, Failure> {
    let text = read(path)?;
    io::parse_ballots(&text).map(Input::Ballots).map_err(|e| with_path(path, e))
}

fn load_matrix(path: &Path) -> Result<Input, Failure> {
    let text = read(path)?;
    io::parse_matrix(&text).map(Input::Matrix).map_err(|e| with_path(path, e))
}

fn load_any(path: &Path) -> Result<Input, Failure> {
    let text = read(path)?;
    if looks_like_ballots(&text) {
        io::parse_ballots(&text).map(Input::Ballots)
    } else {
        io::parse_matrix(&text).map(Input::Matrix)
    }
    .map_err(|e| with_path(path, e))
}

fn json(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn score(input: Input, args: &ScoreArgs) -> Result<String, Failure> {
    let (rel, t) = input.relation();
    let table = compute_scores(&rel, &args.alpha);
    table.check_invariants().map_err(Failure::Internal)?;
    Ok(match args.input.format {
        Format::Text => report::scores_text(&rel, &table, t.as_ref()),
        Format::Json => json(report::scores_json(&rel, &table, t.as_ref())),
    })
}

fn execute(command: Command) -> Result<String, Failure> {
    match command {
        Command::Rank(args) => score(load_ballots(&args.input.file)?, &args),
        Command::Tournament(args) => score(load_matrix(&args.input.file)?, &args),
        Command::Partitions(args) => {
            let (rel, _) = load_any(&args.file)?.relation();
            Ok(match args.format {
                Format::Text => report::partitions_text(&rel),
                Format::Json => json(report::partitions_json(&rel)),
            })
        }
        Command::Compare(args) => {
            let (rel, _) = load_any(&args.input.file)?.relation();
            let c = report::Comparison::new(&rel, &args.alpha);
            c.table.check_invariants().map_err(Failure::Internal)?;
            Ok(match args.input.format {
                Format::Text => report::comparison_text(&rel, &c),
                Format::Json => json(report::comparison_json(&rel, &c)),
            })
        }
        Command::Verify(args) => {
            let mode = match args.mode {
                VerifyMode::Tournaments => Mode::Tournaments,
                VerifyMode::WeakOrders => Mode::WeakOrders,
                VerifyMode::Random => Mode::RandomProfiles {
                    seed: args.seed,
                    count: args.count,
                    n: args.n.clone(),
                    style: match args.style {
                        Style::Strict => BallotStyle::Strict,
                        Style::Weak => BallotStyle::Weak,
                        Style::Mixed => BallotStyle::Mixed,
                    },
                },
                VerifyMode::RandomRelations => Mode::RandomRelations { seed: args.seed, count: args.count },
            };
            let spec = EnumerationSpec { m: args.m.clone(), mode };
            let report = check_theorem_suite(&spec, &args.alpha)?;
            Ok(match args.format {
                Format::Text => report::suite_text(&report),
                Format::Json => json(report::suite_json(&report)),
            })
        }
    }
}
