//! Command-line front end.
//!
//! Exit codes: 0 success (including axioms whose hypotheses were unmet),
//! 2 unusable input (parse failures, bad parameters, unknown names),
//! 3 a boundary tie under `--tie-break error`, 4 a violated axiom.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::axioms::{self, AxiomReport};
use crate::error::Error;
use crate::generate::{self, GeneratorConfig};
use crate::io::{self, ProfileFormat};
use crate::model::{Coalition, EvaluationProfile, TUGame};
use crate::rules::{self, TiePolicy};

#[derive(Debug, Parser)]
#[command(
    name = "svcr",
    version,
    about = "Shapley-value committee selection over generalized approval ballots"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Score a profile, rank the alternatives, and select the committee
    Elect(ElectArgs),
    /// Score a profile and print the collective ranking only
    Rank(RankArgs),
    /// Run the Shapley rule against k-approval and the group-score rule
    Compare(CompareArgs),
    /// Check selection axioms against a profile
    Axioms(AxiomsArgs),
    /// Generate a random sparse-format profile
    Gen(GenArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Dense,
    Sparse,
}

impl From<FormatArg> for ProfileFormat {
    fn from(value: FormatArg) -> Self {
        match value {
            FormatArg::Dense => ProfileFormat::Dense,
            FormatArg::Sparse => ProfileFormat::Sparse,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TieArg {
    Lex,
    Error,
    Report,
}

impl From<TieArg> for TiePolicy {
    fn from(value: TieArg) -> Self {
        match value {
            TieArg::Lex => TiePolicy::Lex,
            TieArg::Error => TiePolicy::Error,
            TieArg::Report => TiePolicy::Report,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    #[value(alias = "svcr")]
    Shapley,
    KApproval,
    GroupScore,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckArg {
    Efficiency,
    OnePersonOneVote,
    Consistency,
    GainLoss,
    NeutralAlternative,
    DummyAlternative,
    Symmetry,
    Monotonicity,
}

#[derive(Debug, Args)]
pub struct ElectArgs {
    /// Profile file to tabulate
    #[arg(long)]
    pub input: PathBuf,
    /// Input encoding; inferred from the extension when omitted
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    /// Committee size
    #[arg(short)]
    pub k: usize,
    /// Boundary-tie handling
    #[arg(long = "tie-break", value_enum, default_value = "lex")]
    pub tie_break: TieArg,
    /// Decimal places for rendered scores
    #[arg(long, default_value_t = 4)]
    pub decimals: usize,
}

#[derive(Debug, Args)]
pub struct RankArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    #[arg(long, default_value_t = 4)]
    pub decimals: usize,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    #[arg(short)]
    pub k: usize,
    #[arg(long = "tie-break", value_enum, default_value = "lex")]
    pub tie_break: TieArg,
    /// Rules to include in the report
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [RuleArg::Shapley, RuleArg::KApproval, RuleArg::GroupScore])]
    pub rules: Vec<RuleArg>,
    #[arg(long, default_value_t = 4)]
    pub decimals: usize,
}

#[derive(Debug, Args)]
pub struct AxiomsArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    /// Second profile for the two-electorate axioms (consistency,
    /// gain-loss)
    #[arg(long)]
    pub input2: Option<PathBuf>,
    /// Committee size for the committee-level checks
    #[arg(short)]
    pub k: Option<usize>,
    /// Axioms to check (default: everything checkable with the given
    /// inputs)
    #[arg(long = "check", value_enum, value_delimiter = ',')]
    pub checks: Vec<CheckArg>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Number of alternatives (named a, b, c, ...)
    #[arg(long)]
    pub alternatives: usize,
    /// Number of voters (v1, v2, ...)
    #[arg(long)]
    pub voters: usize,
    /// Per-group approval probability
    #[arg(long)]
    pub density: f64,
    /// Largest group size voters approve
    #[arg(long = "max-group", default_value_t = 3)]
    pub max_group: usize,
    /// RNG seed; identical seeds give byte-identical output
    #[arg(long)]
    pub seed: u64,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::BoundaryTie { .. } => 3,
            _ => 2,
        };
        Failure::new(code, err.to_string())
    }
}

/// Runs a parsed invocation, writing the document to `out` and
/// diagnostics to `err`; returns the process exit code.
pub fn run(cli: Cli, out: &mut impl Write, err: &mut impl Write) -> i32 {
    let outcome = match cli.command {
        Command::Elect(args) => cmd_elect(&args, err),
        Command::Rank(args) => cmd_rank(&args, err),
        Command::Compare(args) => cmd_compare(&args, err),
        Command::Axioms(args) => cmd_axioms(&args, err),
        Command::Gen(args) => cmd_gen(&args),
    };
    match outcome {
        Ok((document, code)) => {
            let _ = out.write_all(document.as_bytes());
            code
        }
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

/// Entry point for the binary: parse `std::env::args`, run, return the
/// exit code.
pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(cli, &mut stdout.lock(), &mut stderr.lock())
}

fn infer_format(path: &Path, flag: Option<FormatArg>) -> Result<ProfileFormat, Failure> {
    if let Some(flag) = flag {
        return Ok(flag.into());
    }
    match path.extension().and_then(|e| e.to_str()) {
        Some("csv") => Ok(ProfileFormat::Dense),
        Some("json") => Ok(ProfileFormat::Sparse),
        _ => Err(Failure::new(
            2,
            format!(
                "cannot infer the profile format of `{}`; pass --format dense|sparse",
                path.display()
            ),
        )),
    }
}

fn load_profile(
    path: &Path,
    flag: Option<FormatArg>,
    err: &mut impl Write,
) -> Result<EvaluationProfile, Failure> {
    let format = infer_format(path, flag)?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(2, format!("cannot read `{}`: {e}", path.display())))?;
    let parsed = io::parse_profile(&text, format)?;
    for warning in &parsed.warnings {
        let _ = writeln!(err, "warning: {warning}");
    }
    Ok(parsed.profile)
}

fn warn_on_lex_tie(committee: &crate::rules::Committee, policy: TieArg, err: &mut impl Write) {
    if policy == TieArg::Lex && committee.tie_broken() {
        let _ = writeln!(
            err,
            "warning: score tie across the committee boundary; contested seats filled in name order"
        );
    }
}

fn cmd_elect(args: &ElectArgs, err: &mut impl Write) -> Result<(String, i32), Failure> {
    let profile = load_profile(&args.input, args.format, err)?;
    let (ranking, committee) = rules::shapley_committee(&profile, args.k, args.tie_break.into())?;
    warn_on_lex_tie(&committee, args.tie_break, err);
    let document = io::results_document(&ranking, Some(&committee), &[], args.decimals);
    Ok((document, 0))
}

fn cmd_rank(args: &RankArgs, err: &mut impl Write) -> Result<(String, i32), Failure> {
    let profile = load_profile(&args.input, args.format, err)?;
    let scores = crate::shapley::sparse(&TUGame::from_profile(&profile));
    let ranking = rules::CollectiveRanking::new(scores);
    let document = io::results_document(&ranking, None, &[], args.decimals);
    Ok((document, 0))
}

fn cmd_compare(args: &CompareArgs, err: &mut impl Write) -> Result<(String, i32), Failure> {
    let profile = load_profile(&args.input, args.format, err)?;
    let comparison = rules::compare_rules(&profile, args.k, args.tie_break.into())?;
    warn_on_lex_tie(&comparison.shapley_committee, args.tie_break, err);
    warn_on_lex_tie(&comparison.approval.committee, args.tie_break, err);
    let document = io::comparison_document(&comparison, args.decimals);
    Ok((filter_comparison(&document, &args.rules), 0))
}

/// Drops unselected rule sections (and the agreement flags that mention
/// them) from the comparison document.
fn filter_comparison(document: &str, selected: &[RuleArg]) -> String {
    let all = [RuleArg::Shapley, RuleArg::KApproval, RuleArg::GroupScore];
    if all.iter().all(|r| selected.contains(r)) {
        return document.to_string();
    }
    let mut value: Value = serde_json::from_str(document).expect("own document is valid json");
    let object = value.as_object_mut().expect("document is an object");
    let has = |rule: RuleArg| selected.contains(&rule);
    if !has(RuleArg::Shapley) {
        object.remove("shapley");
    }
    if !has(RuleArg::KApproval) {
        object.remove("k_approval");
    }
    if !has(RuleArg::GroupScore) {
        object.remove("group_score");
    }
    if !has(RuleArg::Shapley) {
        object.remove("agreement");
    } else if let Some(agreement) = object.get_mut("agreement").and_then(Value::as_object_mut) {
        if !has(RuleArg::KApproval) {
            agreement.remove("committee_matches_k_approval");
            agreement.remove("ranking_matches_k_approval");
        }
        if !has(RuleArg::GroupScore) {
            agreement.remove("group_winner_unique");
            agreement.remove("committee_is_group_winner");
        }
    }
    let mut text = serde_json::to_string_pretty(&value).expect("json serialization");
    text.push('\n');
    text
}

fn default_checks(args: &AxiomsArgs) -> Vec<CheckArg> {
    let mut checks = vec![
        CheckArg::Efficiency,
        CheckArg::OnePersonOneVote,
        CheckArg::NeutralAlternative,
        CheckArg::DummyAlternative,
        CheckArg::Symmetry,
        CheckArg::Consistency,
    ];
    if args.input2.is_some() {
        checks.push(CheckArg::GainLoss);
    }
    if args.k.is_some() {
        checks.push(CheckArg::Monotonicity);
    }
    checks
}

fn cmd_axioms(args: &AxiomsArgs, err: &mut impl Write) -> Result<(String, i32), Failure> {
    let profile = load_profile(&args.input, args.format, err)?;
    let second = match &args.input2 {
        Some(path) => Some(load_profile(path, args.format, err)?),
        None => None,
    };
    let game = TUGame::from_profile(&profile);
    let scores = crate::shapley::sparse(&game);
    let checks = if args.checks.is_empty() {
        default_checks(args)
    } else {
        args.checks.clone()
    };

    let mut reports: Vec<AxiomReport> = Vec::new();
    for check in checks {
        match check {
            CheckArg::Efficiency => reports.push(axioms::check_efficiency(&game, &scores)),
            CheckArg::OnePersonOneVote => {
                reports.push(axioms::check_one_person_one_vote(&profile, &scores))
            }
            CheckArg::NeutralAlternative => {
                reports.push(axioms::check_neutral_scores(&game, &scores))
            }
            CheckArg::DummyAlternative => reports.push(axioms::check_dummy_scores(&game, &scores)),
            CheckArg::Symmetry => reports.push(axioms::check_symmetric_scores(&game, &scores)),
            CheckArg::Consistency => {
                let k = args.k.unwrap_or(1);
                let report = match &second {
                    Some(second) => axioms::check_consistency_join(&profile, second, k)?,
                    None => {
                        // No second electorate given: split this one.
                        let half = profile.voter_count().div_ceil(2);
                        let front = EvaluationProfile::new(
                            profile.alternatives().clone(),
                            profile.ballots()[..half].to_vec(),
                        )?;
                        let back = EvaluationProfile::new(
                            profile.alternatives().clone(),
                            profile.ballots()[half..].to_vec(),
                        )?;
                        axioms::check_consistency_join(&front, &back, k)?
                    }
                };
                reports.push(report);
            }
            CheckArg::GainLoss => match &second {
                Some(second) => reports.push(axioms::check_gain_loss(
                    &game,
                    &TUGame::from_profile(second),
                )),
                None => reports.push(AxiomReport::precondition_unmet(
                    "gain-loss",
                    "requires a second profile (--input2)",
                )),
            },
            CheckArg::Monotonicity => match args.k {
                Some(k) => {
                    let (_, committee) = rules::shapley_committee(&profile, k, TiePolicy::Lex)?;
                    for &member in committee.members() {
                        let report = axioms::check_monotonicity(
                            &profile,
                            k,
                            member,
                            Coalition::singleton(member),
                        )?;
                        reports.push(report);
                    }
                }
                None => reports.push(AxiomReport::precondition_unmet(
                    "monotonicity",
                    "requires a committee size (-k)",
                )),
            },
        }
    }

    let document = io::axioms_document(profile.alternatives(), &reports);
    let code = if reports.iter().all(AxiomReport::acceptable) {
        0
    } else {
        4
    };
    Ok((document, code))
}

fn cmd_gen(args: &GenArgs) -> Result<(String, i32), Failure> {
    let profile = generate::generate_profile(&GeneratorConfig {
        alternatives: args.alternatives,
        voters: args.voters,
        density: args.density,
        max_group_size: args.max_group,
        seed: args.seed,
    })?;
    let document = io::serialize_profile(&profile, ProfileFormat::Sparse)?;
    Ok((document, 0))
}
