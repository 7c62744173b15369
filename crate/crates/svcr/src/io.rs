//! Profile parsing and result serialization.
//!
//! Two interchangeable profile encodings:
//!
//! * **dense** — a CSV matrix: first column the voter id, one column per
//!   group written as a brace literal (`{a}`, `{a,b}`, members in
//!   alternative order), cells 0 or 1. Written complete: every non-empty
//!   group appears, sizes ascending.
//! * **sparse** — a JSON document with an `alternatives` array and a
//!   `voters` array of `{id, approves: [[names...], ...]}`.
//!
//! Results, rule comparisons, and axiom reports serialize to JSON with
//! exact scores as `num/den` strings next to fixed-point decimals, in a
//! deterministic key order.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::axioms::{AxiomReport, AxiomStatus};
use crate::error::{Error, Result};
use crate::model::{AlternativeSet, Ballot, Coalition, EvaluationProfile};
use crate::rules::{Committee, CollectiveRanking, RuleComparison};
use crate::shapley::{decimal_string, exact_string, ScoreVector};

/// Dense output grows as 2^m - 1 columns; refuse to write silly widths.
pub const DENSE_MAX_ALTERNATIVES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileFormat {
    Dense,
    Sparse,
}

/// A parsed profile plus any non-fatal diagnostics (duplicate approvals
/// that collapsed, merged duplicate columns).
#[derive(Debug, Clone)]
pub struct Parsed {
    pub profile: EvaluationProfile,
    pub warnings: Vec<String>,
}

/// A profile together with the encoding it came from (or should go to).
#[derive(Debug, Clone)]
pub struct ProfileDocument {
    pub format: ProfileFormat,
    pub profile: EvaluationProfile,
}

impl ProfileDocument {
    pub fn parse(text: &str, format: ProfileFormat) -> Result<(Self, Vec<String>)> {
        let Parsed { profile, warnings } = parse_profile(text, format)?;
        Ok((Self { format, profile }, warnings))
    }

    pub fn serialize(&self) -> Result<String> {
        serialize_profile(&self.profile, self.format)
    }
}

pub fn parse_profile(text: &str, format: ProfileFormat) -> Result<Parsed> {
    match format {
        ProfileFormat::Dense => parse_dense(text),
        ProfileFormat::Sparse => parse_sparse(text),
    }
}

pub fn serialize_profile(profile: &EvaluationProfile, format: ProfileFormat) -> Result<String> {
    match format {
        ProfileFormat::Dense => serialize_dense(profile),
        ProfileFormat::Sparse => serialize_sparse(profile),
    }
}

fn parse_dense(text: &str) -> Result<Parsed> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| Error::MalformedDocument(e.to_string()))?
        .clone();
    if headers.len() < 2 {
        return Err(Error::MalformedHeader(
            "expected a voter column followed by group columns".to_string(),
        ));
    }

    let mut group_names: Vec<Vec<String>> = Vec::new();
    for column in headers.iter().skip(1) {
        group_names.push(parse_group_literal(column)?);
    }
    // Alternative order is first appearance across the header; a
    // complete matrix lists singletons first, fixing the order exactly.
    let mut names: Vec<String> = Vec::new();
    for group in &group_names {
        for name in group {
            if !names.iter().any(|n| n == name) {
                names.push(name.clone());
            }
        }
    }
    let alternatives = AlternativeSet::new(names)?;
    let columns: Vec<Coalition> = group_names
        .iter()
        .map(|group| alternatives.coalition_of(group.iter().map(String::as_str)))
        .collect::<Result<_>>()?;

    let mut warnings = Vec::new();
    for (i, coalition) in columns.iter().enumerate() {
        if columns[..i].contains(coalition) {
            warnings.push(format!(
                "duplicate group column `{}`: approvals merged",
                headers.get(i + 1).unwrap_or_default()
            ));
        }
    }

    let mut ballots = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::MalformedDocument(e.to_string()))?;
        let voter = record.get(0).unwrap_or_default().to_string();
        let mut approved: BTreeSet<Coalition> = BTreeSet::new();
        for (index, cell) in record.iter().enumerate().skip(1) {
            match cell {
                "1" => {
                    approved.insert(columns[index - 1]);
                }
                "0" => {}
                other => {
                    return Err(Error::NonBinaryCell {
                        voter,
                        column: headers.get(index).unwrap_or_default().to_string(),
                        value: other.to_string(),
                    })
                }
            }
        }
        ballots.push(Ballot::new(voter, approved)?);
    }
    let profile = EvaluationProfile::new(alternatives, ballots)?;
    Ok(Parsed { profile, warnings })
}

fn parse_group_literal(text: &str) -> Result<Vec<String>> {
    let inner = text
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| {
            Error::MalformedHeader(format!("group column `{text}` is not a brace literal"))
        })?;
    let names: Vec<String> = inner.split(',').map(|s| s.trim().to_string()).collect();
    if names.iter().any(String::is_empty) {
        return Err(Error::MalformedHeader(format!(
            "group column `{text}` contains an empty member"
        )));
    }
    for (i, name) in names.iter().enumerate() {
        if names[..i].contains(name) {
            return Err(Error::MalformedHeader(format!(
                "group column `{text}` repeats `{name}`"
            )));
        }
    }
    Ok(names)
}

fn serialize_dense(profile: &EvaluationProfile) -> Result<String> {
    let alternatives = profile.alternatives();
    let m = alternatives.len();
    if m > DENSE_MAX_ALTERNATIVES {
        return Err(Error::DenseTooWide {
            m,
            max: DENSE_MAX_ALTERNATIVES,
        });
    }
    let columns = alternatives.coalitions_up_to(m);
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["voter".to_string()];
    header.extend(columns.iter().map(|&c| alternatives.coalition_literal(c)));
    writer
        .write_record(&header)
        .map_err(|e| Error::MalformedDocument(e.to_string()))?;
    for ballot in profile.ballots() {
        let mut row = vec![ballot.voter_id().to_string()];
        row.extend(
            columns
                .iter()
                .map(|&c| if ballot.approves(c) { "1" } else { "0" }.to_string()),
        );
        writer
            .write_record(&row)
            .map_err(|e| Error::MalformedDocument(e.to_string()))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| Error::MalformedDocument(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[derive(Serialize, Deserialize)]
struct SparseDoc {
    alternatives: Vec<String>,
    voters: Vec<SparseVoter>,
}

#[derive(Serialize, Deserialize)]
struct SparseVoter {
    id: String,
    approves: Vec<Vec<String>>,
}

fn parse_sparse(text: &str) -> Result<Parsed> {
    let doc: SparseDoc =
        serde_json::from_str(text).map_err(|e| Error::MalformedDocument(e.to_string()))?;
    let alternatives = AlternativeSet::new(doc.alternatives)?;
    let mut warnings = Vec::new();
    let mut ballots = Vec::new();
    for voter in doc.voters {
        let mut seen: BTreeSet<Coalition> = BTreeSet::new();
        for group in &voter.approves {
            let coalition = alternatives.coalition_of(group.iter().map(String::as_str))?;
            if group.len() != coalition.size() {
                warnings.push(format!(
                    "voter `{}`: repeated member in group {} collapsed",
                    voter.id,
                    alternatives.coalition_literal(coalition)
                ));
            }
            if !seen.insert(coalition) {
                warnings.push(format!(
                    "voter `{}`: duplicate group {} collapsed",
                    voter.id,
                    alternatives.coalition_literal(coalition)
                ));
            }
        }
        ballots.push(Ballot::new(voter.id, seen)?);
    }
    let profile = EvaluationProfile::new(alternatives, ballots)?;
    Ok(Parsed { profile, warnings })
}

fn serialize_sparse(profile: &EvaluationProfile) -> Result<String> {
    let alternatives = profile.alternatives();
    let voters = profile
        .ballots()
        .iter()
        .map(|ballot| {
            let mut groups: Vec<Coalition> = ballot.approved().collect();
            groups.sort_by_key(|&c| (c.size(), c.members().collect::<Vec<_>>()));
            SparseVoter {
                id: ballot.voter_id().to_string(),
                approves: groups
                    .into_iter()
                    .map(|c| alternatives.member_names(c))
                    .collect(),
            }
        })
        .collect();
    let doc = SparseDoc {
        alternatives: alternatives.names().to_vec(),
        voters,
    };
    let mut text =
        serde_json::to_string_pretty(&doc).map_err(|e| Error::MalformedDocument(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

fn scores_value(scores: &ScoreVector) -> Value {
    let mut map = Map::new();
    for (name, score) in scores.iter() {
        map.insert(name.to_string(), Value::String(exact_string(score)));
    }
    Value::Object(map)
}

fn decimals_value(scores: &ScoreVector, places: usize) -> Value {
    let mut map = Map::new();
    for (name, score) in scores.iter() {
        map.insert(name.to_string(), Value::String(decimal_string(score, places)));
    }
    Value::Object(map)
}

fn ranking_value(ranking: &CollectiveRanking) -> Value {
    json!(ranking.tier_names())
}

fn committee_value(committee: &Committee, alternatives: &AlternativeSet) -> Value {
    let names = |indices: &[usize]| -> Vec<String> {
        indices.iter().map(|&i| alternatives.name(i).to_string()).collect()
    };
    json!({
        "k": committee.k(),
        "members": names(committee.members()),
        "tie_broken": committee.tie_broken(),
        "boundary_ties": names(committee.boundary_ties()),
    })
}

fn status_str(status: AxiomStatus) -> &'static str {
    match status {
        AxiomStatus::Holds => "holds",
        AxiomStatus::Violated => "violated",
        AxiomStatus::PreconditionUnmet => "precondition-unmet",
    }
}

fn report_value(report: &AxiomReport) -> Value {
    let mut map = Map::new();
    map.insert("axiom".into(), json!(report.axiom()));
    map.insert("status".into(), json!(status_str(report.status())));
    if let Some(detail) = report.detail() {
        map.insert("detail".into(), json!(detail));
    }
    map.insert(
        "witnesses".into(),
        json!(report
            .witnesses()
            .iter()
            .map(|w| {
                json!({
                    "subject": w.subject,
                    "expected": w.expected,
                    "actual": w.actual,
                })
            })
            .collect::<Vec<_>>()),
    );
    Value::Object(map)
}

/// The election results document: exact scores, their decimal rendering,
/// the tiered ranking, and (when one was selected) the committee, plus
/// any axiom reports.
pub fn results_document(
    ranking: &CollectiveRanking,
    committee: Option<&Committee>,
    reports: &[AxiomReport],
    decimals: usize,
) -> String {
    let scores = ranking.scores();
    let alternatives = scores.alternatives();
    let mut map = Map::new();
    map.insert("alternatives".into(), json!(alternatives.names()));
    map.insert("scores".into(), scores_value(scores));
    map.insert("decimals".into(), decimals_value(scores, decimals));
    map.insert("ranking".into(), ranking_value(ranking));
    if let Some(committee) = committee {
        map.insert("committee".into(), committee_value(committee, alternatives));
    }
    if !reports.is_empty() {
        map.insert(
            "axioms".into(),
            Value::Array(reports.iter().map(report_value).collect()),
        );
    }
    pretty(Value::Object(map))
}

/// Side-by-side rule comparison document with agreement flags.
pub fn comparison_document(comparison: &RuleComparison, decimals: usize) -> String {
    let alternatives = comparison.shapley_ranking.scores().alternatives();
    let mut map = Map::new();
    map.insert("alternatives".into(), json!(alternatives.names()));
    map.insert("k".into(), json!(comparison.k));

    map.insert(
        "shapley".into(),
        json!({
            "scores": scores_value(comparison.shapley_ranking.scores()),
            "decimals": decimals_value(comparison.shapley_ranking.scores(), decimals),
            "ranking": ranking_value(&comparison.shapley_ranking),
            "committee": committee_value(&comparison.shapley_committee, alternatives),
        }),
    );

    let mut approvals = Map::new();
    for (i, name) in alternatives.names().iter().enumerate() {
        approvals.insert(name.clone(), json!(comparison.approval.approvals.count(i)));
    }
    map.insert(
        "k_approval".into(),
        json!({
            "approvals": Value::Object(approvals),
            "ranking": ranking_value(&comparison.approval.ranking),
            "committee": committee_value(&comparison.approval.committee, alternatives),
        }),
    );

    let mut group_scores = Map::new();
    for &(coalition, score) in &comparison.group.scores {
        group_scores.insert(alternatives.coalition_literal(coalition), json!(score));
    }
    map.insert(
        "group_score".into(),
        json!({
            "scores": Value::Object(group_scores),
            "winners": comparison
                .group
                .winners
                .iter()
                .map(|&c| alternatives.coalition_literal(c))
                .collect::<Vec<_>>(),
        }),
    );

    map.insert(
        "agreement".into(),
        json!({
            "committee_matches_k_approval": comparison.agreement.committee_matches_k_approval,
            "ranking_matches_k_approval": comparison.agreement.ranking_matches_k_approval,
            "group_winner_unique": comparison.agreement.group_winner_unique,
            "committee_is_group_winner": comparison.agreement.committee_is_group_winner,
        }),
    );
    pretty(Value::Object(map))
}

/// Axiom check results for a whole run.
pub fn axioms_document(alternatives: &AlternativeSet, reports: &[AxiomReport]) -> String {
    let mut map = Map::new();
    map.insert("alternatives".into(), json!(alternatives.names()));
    map.insert(
        "axioms".into(),
        Value::Array(reports.iter().map(report_value).collect()),
    );
    map.insert(
        "all_hold".into(),
        json!(reports.iter().all(AxiomReport::holds)),
    );
    map.insert(
        "violations".into(),
        json!(reports.iter().filter(|r| !r.acceptable()).count()),
    );
    pretty(Value::Object(map))
}

fn pretty(value: Value) -> String {
    let mut text = serde_json::to_string_pretty(&value).expect("json serialization");
    text.push('\n');
    text
}
