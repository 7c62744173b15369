//! Executable checks for the properties the committee rule is built on:
//! detection of neutral, dummy, and symmetric alternatives in a game,
//! and instance-level verification of efficiency, one-person-one-vote,
//! consistency under profile joins, gain-loss, and monotonicity.
//!
//! Checks report witnesses instead of failing: a report `holds` exactly
//! when its witness list is empty, and two-sided checks distinguish a
//! violated axiom from an instance that never met the axiom's
//! precondition.

use num::{BigInt, Zero};

use crate::error::Result;
use crate::model::{Ballot, Coalition, EvaluationProfile, TUGame};
use crate::rules::{self, CollectiveRanking, TiePolicy};
use crate::shapley::{self, exact_string, Rational, ScoreVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomStatus {
    Holds,
    Violated,
    /// The instance does not satisfy the axiom's hypothesis; nothing was
    /// checked.
    PreconditionUnmet,
}

/// A counterexample record: which alternative(s), what was expected,
/// what was computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub subject: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    axiom: String,
    status: AxiomStatus,
    detail: Option<String>,
    witnesses: Vec<Witness>,
}

impl AxiomReport {
    /// Builds a report whose status is decided by the witness list:
    /// empty means the axiom held.
    pub fn checked(axiom: &str, witnesses: Vec<Witness>, detail: Option<String>) -> Self {
        let status = if witnesses.is_empty() {
            AxiomStatus::Holds
        } else {
            AxiomStatus::Violated
        };
        Self {
            axiom: axiom.to_string(),
            status,
            detail,
            witnesses,
        }
    }

    pub fn precondition_unmet(axiom: &str, reason: impl Into<String>) -> Self {
        Self {
            axiom: axiom.to_string(),
            status: AxiomStatus::PreconditionUnmet,
            detail: Some(reason.into()),
            witnesses: Vec::new(),
        }
    }

    pub fn axiom(&self) -> &str {
        &self.axiom
    }

    pub fn status(&self) -> AxiomStatus {
        self.status
    }

    pub fn holds(&self) -> bool {
        self.status == AxiomStatus::Holds
    }

    /// True unless the axiom was actually violated.
    pub fn acceptable(&self) -> bool {
        self.status != AxiomStatus::Violated
    }

    pub fn detail(&self) -> Option<&str> {
        self.detail.as_deref()
    }

    pub fn witnesses(&self) -> &[Witness] {
        &self.witnesses
    }
}

/// Alternatives whose presence never changes any coalition's worth.
/// Full subset scan; the alternative-set cap keeps it tractable.
pub fn neutral_alternatives(game: &TUGame) -> Vec<usize> {
    let m = game.alternatives().len();
    let table = game.dense_table();
    let grand = game.alternatives().grand_coalition();
    (0..m)
        .filter(|&i| {
            let bit = 1usize << i;
            grand
                .without(i)
                .subsets()
                .all(|s| table[s.bits() as usize | bit] == table[s.bits() as usize])
        })
        .collect()
}

/// Alternatives whose marginal contribution to every coalition equals
/// their singleton worth. Neutral alternatives are the zero-singleton
/// special case and always qualify.
pub fn dummy_alternatives(game: &TUGame) -> Vec<usize> {
    let m = game.alternatives().len();
    let table = game.dense_table();
    let grand = game.alternatives().grand_coalition();
    (0..m)
        .filter(|&i| {
            let bit = 1usize << i;
            let singleton = table[bit];
            grand
                .without(i)
                .subsets()
                .all(|s| table[s.bits() as usize | bit] == table[s.bits() as usize] + singleton)
        })
        .collect()
}

/// Unordered pairs that are interchangeable in every coalition's worth.
pub fn symmetric_pairs(game: &TUGame) -> Vec<(usize, usize)> {
    let m = game.alternatives().len();
    let table = game.dense_table();
    let grand = game.alternatives().grand_coalition();
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let (bi, bj) = (1usize << i, 1usize << j);
            let symmetric = grand
                .without(i)
                .without(j)
                .subsets()
                .all(|s| table[s.bits() as usize | bi] == table[s.bits() as usize | bj]);
            if symmetric {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// Scores must exhaust the grand coalition's worth exactly.
pub fn check_efficiency(game: &TUGame, scores: &ScoreVector) -> AxiomReport {
    const NAME: &str = "efficiency";
    if game.alternatives() != scores.alternatives() {
        return AxiomReport::precondition_unmet(NAME, "scores belong to a different alternative set");
    }
    let expected = Rational::from(BigInt::from(game.grand_worth()));
    let total = scores.total();
    let witnesses = if total == expected {
        vec![]
    } else {
        vec![Witness {
            subject: "total score".to_string(),
            expected: exact_string(&expected),
            actual: exact_string(&total),
        }]
    };
    AxiomReport::checked(
        NAME,
        witnesses,
        Some(format!("grand coalition worth {}", game.grand_worth())),
    )
}

/// When every ballot approves the grand coalition, the scores add up to
/// the number of voters. Reports distinguish a ballot that skips the
/// grand coalition (hypothesis fails) from a sum mismatch (violation).
pub fn check_one_person_one_vote(profile: &EvaluationProfile, scores: &ScoreVector) -> AxiomReport {
    const NAME: &str = "one-person-one-vote";
    if profile.alternatives() != scores.alternatives() {
        return AxiomReport::precondition_unmet(NAME, "scores belong to a different alternative set");
    }
    let grand = profile.alternatives().grand_coalition();
    if let Some(ballot) = profile.ballots().iter().find(|b| !b.approves(grand)) {
        return AxiomReport::precondition_unmet(
            NAME,
            format!(
                "voter `{}` does not approve the grand coalition",
                ballot.voter_id()
            ),
        );
    }
    let expected = Rational::from(BigInt::from(profile.voter_count() as i64));
    let total = scores.total();
    let witnesses = if total == expected {
        vec![]
    } else {
        vec![Witness {
            subject: "total score".to_string(),
            expected: exact_string(&expected),
            actual: exact_string(&total),
        }]
    };
    AxiomReport::checked(NAME, witnesses, Some(format!("{} voters", profile.voter_count())))
}

/// Joining two electorates adds their score vectors exactly, so any
/// committee preferred under both is preferred under the union. Verifies
/// the additivity core per alternative and the committee conditions on
/// the joined profile.
pub fn check_consistency_join(
    first: &EvaluationProfile,
    second: &EvaluationProfile,
    k: usize,
) -> Result<AxiomReport> {
    const NAME: &str = "consistency";
    let joined = first.join(second)?;
    let scores_first = shapley::sparse(&TUGame::from_profile(first));
    let scores_second = shapley::sparse(&TUGame::from_profile(second));
    let scores_joined = shapley::sparse(&TUGame::from_profile(&joined));
    let summed = scores_first.add(&scores_second)?;

    let mut witnesses = Vec::new();
    for (i, name) in joined.alternatives().names().iter().enumerate() {
        if summed.score(i) != scores_joined.score(i) {
            witnesses.push(Witness {
                subject: name.clone(),
                expected: exact_string(summed.score(i)),
                actual: exact_string(scores_joined.score(i)),
            });
        }
    }

    let ranking = CollectiveRanking::new(scores_joined);
    let committee = rules::select_committee(&ranking, k, TiePolicy::Report)?;
    if !rules::is_shapley_committee(ranking.scores(), &committee) {
        witnesses.push(Witness {
            subject: "joined committee".to_string(),
            expected: "minimum member score >= every outsider score".to_string(),
            actual: "committee conditions violated".to_string(),
        });
    }
    Ok(AxiomReport::checked(
        NAME,
        witnesses,
        Some(format!(
            "{} + {} voters joined",
            first.voter_count(),
            second.voter_count()
        )),
    ))
}

/// With the grand worth fixed, no alternative can gain between two games
/// unless another loses.
pub fn check_gain_loss(first: &TUGame, second: &TUGame) -> AxiomReport {
    const NAME: &str = "gain-loss";
    if first.alternatives() != second.alternatives() {
        return AxiomReport::precondition_unmet(NAME, "games are over different alternative sets");
    }
    if first.grand_worth() != second.grand_worth() {
        return AxiomReport::precondition_unmet(
            NAME,
            format!(
                "grand coalition worths differ: {} vs {}",
                first.grand_worth(),
                second.grand_worth()
            ),
        );
    }
    let scores_first = shapley::sparse(first);
    let scores_second = shapley::sparse(second);
    let gains: Vec<usize> = (0..scores_first.len())
        .filter(|&i| scores_first.score(i) > scores_second.score(i))
        .collect();
    let any_loss = (0..scores_first.len()).any(|i| scores_first.score(i) < scores_second.score(i));
    let witnesses = if gains.is_empty() || any_loss {
        vec![]
    } else {
        gains
            .iter()
            .map(|&i| Witness {
                subject: first.alternatives().name(i).to_string(),
                expected: "a matching loss elsewhere".to_string(),
                actual: format!(
                    "gained {} -> {} with no loser",
                    exact_string(scores_second.score(i)),
                    exact_string(scores_first.score(i))
                ),
            })
            .collect()
    };
    AxiomReport::checked(NAME, witnesses, None)
}

/// A committee member backed by one more approval stays in the
/// committee. Appends a ballot approving exactly `group` (which must
/// contain the member) and re-runs the selection under the lex policy.
pub fn check_monotonicity(
    profile: &EvaluationProfile,
    k: usize,
    member: usize,
    group: Coalition,
) -> Result<AxiomReport> {
    const NAME: &str = "monotonicity";
    let alternatives = profile.alternatives();
    let name = alternatives.name(member).to_string();
    if !group.contains(member) {
        return Ok(AxiomReport::precondition_unmet(
            NAME,
            format!("`{name}` is not in the newly approved group"),
        ));
    }
    let (before_ranking, before) = rules::shapley_committee(profile, k, TiePolicy::Lex)?;
    if !before.contains(member) {
        return Ok(AxiomReport::precondition_unmet(
            NAME,
            format!("`{name}` is not in the base committee of size {k}"),
        ));
    }

    let new_id = fresh_voter_id(profile);
    let extended = profile.with_ballot(Ballot::new(new_id, [group])?)?;
    let (after_ranking, after) = rules::shapley_committee(&extended, k, TiePolicy::Lex)?;

    let score_before = exact_string(before_ranking.scores().score(member));
    let score_after = exact_string(after_ranking.scores().score(member));
    let witnesses = if after.contains(member) {
        vec![]
    } else {
        vec![Witness {
            subject: name.clone(),
            expected: format!("still a committee member (score {score_before} before)"),
            actual: format!("dropped from the committee (score {score_after} after)"),
        }]
    };
    Ok(AxiomReport::checked(
        NAME,
        witnesses,
        Some(format!("score of `{name}`: {score_before} -> {score_after}")),
    ))
}

fn fresh_voter_id(profile: &EvaluationProfile) -> String {
    let mut n = profile.voter_count() + 1;
    loop {
        let id = format!("extra{n}");
        if profile.ballots().iter().all(|b| b.voter_id() != id) {
            return id;
        }
        n += 1;
    }
}

/// Every detected neutral alternative must score exactly zero.
pub fn check_neutral_scores(game: &TUGame, scores: &ScoreVector) -> AxiomReport {
    const NAME: &str = "neutral-alternative";
    if game.alternatives() != scores.alternatives() {
        return AxiomReport::precondition_unmet(NAME, "scores belong to a different alternative set");
    }
    let neutrals = neutral_alternatives(game);
    let witnesses = neutrals
        .iter()
        .filter(|&&i| !scores.score(i).is_zero())
        .map(|&i| Witness {
            subject: game.alternatives().name(i).to_string(),
            expected: "0/1".to_string(),
            actual: exact_string(scores.score(i)),
        })
        .collect();
    let names: Vec<&str> = neutrals.iter().map(|&i| game.alternatives().name(i)).collect();
    AxiomReport::checked(
        NAME,
        witnesses,
        Some(format!("neutral alternatives: [{}]", names.join(", "))),
    )
}

/// Every detected dummy must score exactly its singleton worth.
pub fn check_dummy_scores(game: &TUGame, scores: &ScoreVector) -> AxiomReport {
    const NAME: &str = "dummy-alternative";
    if game.alternatives() != scores.alternatives() {
        return AxiomReport::precondition_unmet(NAME, "scores belong to a different alternative set");
    }
    let dummies = dummy_alternatives(game);
    let witnesses = dummies
        .iter()
        .filter_map(|&i| {
            let expected = Rational::from(BigInt::from(game.worth(Coalition::singleton(i))));
            if scores.score(i) == &expected {
                None
            } else {
                Some(Witness {
                    subject: game.alternatives().name(i).to_string(),
                    expected: exact_string(&expected),
                    actual: exact_string(scores.score(i)),
                })
            }
        })
        .collect();
    let names: Vec<&str> = dummies.iter().map(|&i| game.alternatives().name(i)).collect();
    AxiomReport::checked(
        NAME,
        witnesses,
        Some(format!("dummy alternatives: [{}]", names.join(", "))),
    )
}

/// Every detected symmetric pair must have exactly equal scores (and so
/// share a ranking tier).
pub fn check_symmetric_scores(game: &TUGame, scores: &ScoreVector) -> AxiomReport {
    const NAME: &str = "symmetry";
    if game.alternatives() != scores.alternatives() {
        return AxiomReport::precondition_unmet(NAME, "scores belong to a different alternative set");
    }
    let pairs = symmetric_pairs(game);
    let witnesses = pairs
        .iter()
        .filter(|&&(i, j)| scores.score(i) != scores.score(j))
        .map(|&(i, j)| Witness {
            subject: format!(
                "{{{},{}}}",
                game.alternatives().name(i),
                game.alternatives().name(j)
            ),
            expected: format!("equal scores ({})", exact_string(scores.score(i))),
            actual: exact_string(scores.score(j)),
        })
        .collect();
    AxiomReport::checked(
        NAME,
        witnesses,
        Some(format!("{} symmetric pair(s)", pairs.len())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::AlternativeSet;

    #[test]
    fn five_candidates_game_has_no_neutral_alternative() {
        let game = TUGame::from_profile(&fixtures::five_candidates_profile());
        assert!(neutral_alternatives(&game).is_empty());
    }

    #[test]
    fn null_game_alternatives_are_all_neutral_and_dummy() {
        let alts = AlternativeSet::new(["a", "b", "c"]).unwrap();
        let game = TUGame::null(alts);
        assert_eq!(neutral_alternatives(&game), vec![0, 1, 2]);
        assert_eq!(dummy_alternatives(&game), vec![0, 1, 2]);
        assert_eq!(symmetric_pairs(&game), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn joining_an_approved_coalition_defeats_neutrality() {
        // With worth concentrated on {a} alone, b joining {a} destroys
        // that worth, so b is not neutral (and scores -3/2, not 0).
        let alts = AlternativeSet::new(["a", "b"]).unwrap();
        let a = alts.coalition_of(["a"]).unwrap();
        let game = TUGame::from_worths(alts, [(a, 3)]).unwrap();
        assert!(neutral_alternatives(&game).is_empty());
        assert!(dummy_alternatives(&game).is_empty());
        let scores = shapley::sparse(&game);
        assert_eq!(exact_string(scores.score(1)), "-3/2");
    }

    #[test]
    fn carried_worth_makes_an_alternative_neutral() {
        // b contributes nothing anywhere: {a} and {a,b} carry the same
        // worth, so b is neutral, hence dummy with singleton worth 0.
        // The game is fully additive, so a is a dummy too.
        let alts = AlternativeSet::new(["a", "b"]).unwrap();
        let a = alts.coalition_of(["a"]).unwrap();
        let ab = alts.coalition_of(["a", "b"]).unwrap();
        let game = TUGame::from_worths(alts, [(a, 3), (ab, 3)]).unwrap();
        assert_eq!(neutral_alternatives(&game), vec![1]);
        assert_eq!(dummy_alternatives(&game), vec![0, 1]);
        let scores = shapley::sparse(&game);
        assert!(scores.score(1).is_zero());
        assert_eq!(exact_string(scores.score(0)), "3/1");
    }

    #[test]
    fn zero_score_does_not_imply_neutrality() {
        let alts = AlternativeSet::new(["a", "b"]).unwrap();
        let a = alts.coalition_of(["a"]).unwrap();
        let b = alts.coalition_of(["b"]).unwrap();
        let game = TUGame::from_worths(alts, [(a, 1), (b, 1)]).unwrap();
        let scores = shapley::sparse(&game);
        assert!(scores.score(0).is_zero());
        assert!(scores.score(1).is_zero());
        assert!(neutral_alternatives(&game).is_empty());
    }

    #[test]
    fn fully_additive_game_is_all_dummies() {
        let alts = AlternativeSet::new(["a", "b"]).unwrap();
        let a = alts.coalition_of(["a"]).unwrap();
        let b = alts.coalition_of(["b"]).unwrap();
        let ab = alts.coalition_of(["a", "b"]).unwrap();
        let game = TUGame::from_worths(alts, [(a, 1), (b, 2), (ab, 3)]).unwrap();
        assert_eq!(dummy_alternatives(&game), vec![0, 1]);
        let scores = shapley::sparse(&game);
        assert_eq!(exact_string(scores.score(0)), "1/1");
        assert_eq!(exact_string(scores.score(1)), "2/1");
        assert!(check_dummy_scores(&game, &scores).holds());
    }

    #[test]
    fn concentrated_singleton_worth_breaks_additivity_everywhere() {
        // Worth on {a} alone: a's marginal to {b} is -2, not +2, so not
        // even a is a dummy here.
        let alts = AlternativeSet::new(["a", "b", "c"]).unwrap();
        let a = alts.coalition_of(["a"]).unwrap();
        let game = TUGame::from_worths(alts, [(a, 2)]).unwrap();
        assert!(dummy_alternatives(&game).is_empty());
    }

    #[test]
    fn students_game_has_no_dummies() {
        let game = TUGame::from_profile(&fixtures::students_profile());
        assert!(dummy_alternatives(&game).is_empty());
    }

    #[test]
    fn rival_pair_symmetry() {
        let game = fixtures::rival_pair_game();
        let pairs = symmetric_pairs(&game);
        let named: Vec<(String, String)> = pairs
            .iter()
            .map(|&(i, j)| {
                (
                    game.alternatives().name(i).to_string(),
                    game.alternatives().name(j).to_string(),
                )
            })
            .collect();
        assert_eq!(
            named,
            vec![
                ("a".to_string(), "b".to_string()),
                ("c".to_string(), "d".to_string())
            ]
        );
        let scores = shapley::sparse(&game);
        assert!(check_symmetric_scores(&game, &scores).holds());
    }

    #[test]
    fn backpack_game_has_equal_scores_without_symmetry() {
        let game = TUGame::from_profile(&fixtures::backpack_profile());
        assert!(symmetric_pairs(&game).is_empty());
        let scores = shapley::sparse(&game);
        assert_eq!(scores.score_of("w"), scores.score_of("s"));
    }

    #[test]
    fn efficiency_reports() {
        let game = TUGame::from_profile(&fixtures::students_profile());
        let scores = shapley::sparse(&game);
        let report = check_efficiency(&game, &scores);
        assert!(report.holds());

        let five = TUGame::from_profile(&fixtures::five_candidates_profile());
        let report = check_efficiency(&five, &shapley::sparse(&five));
        assert!(report.holds()); // grand worth 0, scores cancel exactly

        let null = TUGame::null(game.alternatives().clone());
        assert!(check_efficiency(&null, &ScoreVector::zero(null.alternatives().clone())).holds());

        let wrong = ScoreVector::zero(game.alternatives().clone());
        let report = check_efficiency(&game, &wrong);
        assert_eq!(report.status(), AxiomStatus::Violated);
        assert_eq!(report.witnesses().len(), 1);
        assert_eq!(report.witnesses()[0].expected, "4/1");
    }

    #[test]
    fn one_person_one_vote_reports() {
        let students = fixtures::students_profile();
        let scores = shapley::sparse(&TUGame::from_profile(&students));
        assert!(check_one_person_one_vote(&students, &scores).holds());

        let five = fixtures::five_candidates_profile();
        let scores = shapley::sparse(&TUGame::from_profile(&five));
        let report = check_one_person_one_vote(&five, &scores);
        assert_eq!(report.status(), AxiomStatus::PreconditionUnmet);
        assert!(report.detail().unwrap().contains("v1"));

        let alts = AlternativeSet::new(["a", "b"]).unwrap();
        let grand = alts.grand_coalition();
        let single = EvaluationProfile::new(
            alts,
            vec![Ballot::new("v1", [grand]).unwrap()],
        )
        .unwrap();
        let scores = shapley::sparse(&TUGame::from_profile(&single));
        let report = check_one_person_one_vote(&single, &scores);
        assert!(report.holds());
        assert_eq!(scores.total(), Rational::from(BigInt::from(1)));
    }

    #[test]
    fn consistency_join_on_a_fixture_split() {
        let profile = fixtures::students_profile();
        let alts = profile.alternatives().clone();
        let front = EvaluationProfile::new(alts.clone(), profile.ballots()[..2].to_vec()).unwrap();
        let back = EvaluationProfile::new(alts, profile.ballots()[2..].to_vec()).unwrap();
        let report = check_consistency_join(&front, &back, 2).unwrap();
        assert!(report.holds());

        // An empty second electorate changes nothing.
        let empty =
            EvaluationProfile::new(profile.alternatives().clone(), vec![]).unwrap();
        assert!(check_consistency_join(&profile, &empty, 2).unwrap().holds());

        // Overlapping voters are a hard error.
        assert!(check_consistency_join(&profile, &front, 2).is_err());
    }

    #[test]
    fn gain_loss_between_swapped_profiles() {
        let game = TUGame::from_profile(&fixtures::students_profile());
        let alts = game.alternatives().clone();
        let a = alts.coalition_of(["a"]).unwrap();
        let b = alts.coalition_of(["b"]).unwrap();
        // Swap the a/b singleton worths (4,2) -> (2,4); grand worth kept.
        let swapped = game
            .add(&TUGame::from_worths(alts, [(a, -2), (b, 2)]).unwrap())
            .unwrap();
        let report = check_gain_loss(&game, &swapped);
        assert!(report.holds());
        let scores = shapley::sparse(&swapped);
        assert_eq!(exact_string(scores.score_of("a").unwrap()), "-1/6");
        assert_eq!(exact_string(scores.score_of("b").unwrap()), "7/3");
        assert_eq!(exact_string(scores.score_of("c").unwrap()), "11/6");
    }

    #[test]
    fn gain_loss_is_vacuous_on_identical_games() {
        let game = TUGame::from_profile(&fixtures::backpack_profile());
        assert!(check_gain_loss(&game, &game).holds());
    }

    #[test]
    fn gain_loss_requires_equal_grand_worth() {
        let game = TUGame::from_profile(&fixtures::students_profile());
        let null = TUGame::null(game.alternatives().clone());
        let report = check_gain_loss(&game, &null);
        assert_eq!(report.status(), AxiomStatus::PreconditionUnmet);
    }

    #[test]
    fn monotonicity_for_a_singleton_approval() {
        let profile = fixtures::students_profile();
        let c = profile.alternatives().coalition_of(["c"]).unwrap();
        let report = check_monotonicity(&profile, 2, 2, c).unwrap();
        assert!(report.holds());
        // A fresh singleton approval is worth exactly w(0) = 1/3 here.
        assert_eq!(report.detail().unwrap(), "score of `c`: 11/6 -> 13/6");
    }

    #[test]
    fn monotonicity_for_a_group_approval() {
        let profile = fixtures::students_profile();
        let bc = profile.alternatives().coalition_of(["b", "c"]).unwrap();
        let report = check_monotonicity(&profile, 2, 1, bc).unwrap();
        assert!(report.holds());
        // Members gain w(1) = 1/6 each.
        assert_eq!(report.detail().unwrap(), "score of `b`: 4/3 -> 3/2");
    }

    #[test]
    fn monotonicity_preconditions() {
        let profile = fixtures::students_profile();
        let alts = profile.alternatives();
        let a = alts.coalition_of(["a"]).unwrap();
        // `a` is ranked last and not in the size-2 committee.
        let report = check_monotonicity(&profile, 2, 0, a).unwrap();
        assert_eq!(report.status(), AxiomStatus::PreconditionUnmet);
        // Member not inside the approved group.
        let report = check_monotonicity(&profile, 2, 2, a).unwrap();
        assert_eq!(report.status(), AxiomStatus::PreconditionUnmet);
    }

    #[test]
    fn sole_member_stays_for_k_1() {
        let profile = fixtures::students_profile();
        let alts = profile.alternatives();
        let bc = alts.coalition_of(["b", "c"]).unwrap();
        let report = check_monotonicity(&profile, 1, 2, bc).unwrap();
        assert!(report.holds());
    }

    #[test]
    fn neutral_score_check_reports_detected_set() {
        let alts = AlternativeSet::new(["a", "b"]).unwrap();
        let a = alts.coalition_of(["a"]).unwrap();
        let ab = alts.coalition_of(["a", "b"]).unwrap();
        let game = TUGame::from_worths(alts, [(a, 3), (ab, 3)]).unwrap();
        let report = check_neutral_scores(&game, &shapley::sparse(&game));
        assert!(report.holds());
        assert_eq!(report.detail().unwrap(), "neutral alternatives: [b]");
    }

    #[test]
    fn positive_scores_rank_above_neutral_negative_below() {
        // One alternative carried (neutral), one positive, one negative.
        let alts = AlternativeSet::new(["a", "b", "n"]).unwrap();
        let a = alts.coalition_of(["a"]).unwrap();
        let an = alts.coalition_of(["a", "n"]).unwrap();
        let b = alts.coalition_of(["b"]).unwrap();
        let bn = alts.coalition_of(["b", "n"]).unwrap();
        let ab = alts.coalition_of(["a", "b"]).unwrap();
        let abn = alts.coalition_of(["a", "b", "n"]).unwrap();
        // n contributes nothing anywhere; a strong alone, b weak.
        let game = TUGame::from_worths(
            alts,
            [(a, 5), (an, 5), (b, 1), (bn, 1), (ab, 2), (abn, 2)],
        )
        .unwrap();
        assert_eq!(neutral_alternatives(&game), vec![2]);
        let scores = shapley::sparse(&game);
        let ranking = CollectiveRanking::new(scores.clone());
        assert!(scores.score(0) > &Rational::zero());
        assert!(scores.score(1) < &Rational::zero());
        assert!(scores.score(2).is_zero());
        assert!(ranking.tier_of(0) < ranking.tier_of(2));
        assert!(ranking.tier_of(2) < ranking.tier_of(1));
    }
}
