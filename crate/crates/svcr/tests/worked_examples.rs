//! End-to-end reproduction of the worked elections from the committed
//! fixture files: parse, build the game, score, rank, select, compare.

mod common;

use common::rational;
use svcr::io::{self, ProfileFormat};
use svcr::rules::{self, TiePolicy};
use svcr::shapley;
use svcr::{fixtures, EvaluationProfile, TUGame};

fn load(name: &str, format: ProfileFormat) -> EvaluationProfile {
    let path = format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(path).expect("fixture file");
    io::parse_profile(&text, format).expect("fixture parses").profile
}

#[test]
fn students_fixture_files_match_the_builder() {
    let dense = load("students.csv", ProfileFormat::Dense);
    let sparse = load("students.json", ProfileFormat::Sparse);
    assert_eq!(dense, fixtures::students_profile());
    assert_eq!(dense, sparse);
}

#[test]
fn students_election_end_to_end() {
    let profile = load("students.csv", ProfileFormat::Dense);
    let game = TUGame::from_profile(&profile);
    let alts = profile.alternatives();
    let expected_worths = [
        (vec!["a"], 4),
        (vec!["b"], 2),
        (vec!["c"], 4),
        (vec!["a", "b"], 2),
        (vec!["a", "c"], 1),
        (vec!["b", "c"], 4),
        (vec!["a", "b", "c"], 4),
    ];
    for (names, worth) in expected_worths {
        let coalition = alts.coalition_of(names).unwrap();
        assert_eq!(game.worth(coalition), worth);
    }

    let scores = shapley::sparse(&game);
    assert_eq!(scores.score_of("a").unwrap(), &rational(5, 6));
    assert_eq!(scores.score_of("b").unwrap(), &rational(4, 3));
    assert_eq!(scores.score_of("c").unwrap(), &rational(11, 6));

    let ranking = rules::CollectiveRanking::new(scores);
    assert_eq!(
        ranking.tier_names(),
        vec![vec!["c"], vec!["b"], vec!["a"]]
    );
    let committee = rules::select_committee(&ranking, 2, TiePolicy::Report).unwrap();
    assert_eq!(committee.members(), &[2, 1]);
}

#[test]
fn backpack_comparison_end_to_end() {
    let profile = load("backpack.csv", ProfileFormat::Dense);
    let comparison = rules::compare_rules(&profile, 2, TiePolicy::Lex).unwrap();

    let scores = comparison.shapley_ranking.scores();
    assert_eq!(scores.score_of("w").unwrap(), &rational(3, 2));
    assert_eq!(scores.score_of("o").unwrap(), &rational(1, 1));
    assert_eq!(scores.score_of("s").unwrap(), &rational(3, 2));
    assert_eq!(
        comparison.shapley_ranking.tier_names(),
        vec![vec!["w", "s"], vec!["o"]]
    );
    assert_eq!(comparison.shapley_committee.members(), &[0, 2]);

    assert_eq!(comparison.approval.approvals.counts(), &[4, 3, 0]);
    assert_eq!(comparison.approval.committee.members(), &[0, 1]);

    let alts = profile.alternatives();
    assert_eq!(
        comparison.group.winners,
        vec![
            alts.coalition_of(["w", "s"]).unwrap(),
            alts.coalition_of(["o", "s"]).unwrap(),
        ]
    );
    assert!(!comparison.agreement.committee_matches_k_approval);
    assert!(comparison.agreement.committee_is_group_winner);
    assert!(!comparison.agreement.group_winner_unique);
}

#[test]
fn five_candidates_election_end_to_end() {
    let profile = load("five_candidates.json", ProfileFormat::Sparse);
    assert_eq!(profile, fixtures::five_candidates_profile());
    let game = TUGame::from_profile(&profile);
    let scores = shapley::sparse(&game);
    assert_eq!(scores.score_of("a").unwrap(), &rational(41, 60));
    assert_eq!(scores.score_of("b").unwrap(), &rational(-29, 60));
    assert_eq!(scores.score_of("c").unwrap(), &rational(13, 30));
    assert_eq!(scores.score_of("d").unwrap(), &rational(-11, 15));
    assert_eq!(scores.score_of("e").unwrap(), &rational(1, 10));

    let ranking = rules::CollectiveRanking::new(scores);
    let committee = rules::select_committee(&ranking, 3, TiePolicy::Report).unwrap();
    let names: Vec<&str> = committee
        .members()
        .iter()
        .map(|&i| profile.alternatives().name(i))
        .collect();
    assert_eq!(names, ["a", "c", "e"]);
}

#[test]
fn rival_pair_tie_and_flip_end_to_end() {
    let profile = load("rival_pair.json", ProfileFormat::Sparse);
    let (ranking, committee) = rules::shapley_committee(&profile, 3, TiePolicy::Report).unwrap();
    assert_eq!(
        ranking.tier_names(),
        vec![vec!["c", "d"], vec!["a", "b"], vec!["e"]]
    );
    let scores = ranking.scores();
    assert_eq!(scores.score_of("a"), scores.score_of("b"));
    assert_eq!(scores.score_of("e").unwrap(), &rational(-1, 10));
    assert!(committee.tie_broken());
    assert_eq!(committee.boundary_ties(), &[0, 1]);

    // One more voter backing {b,c,d} settles the contested seat.
    let alts = profile.alternatives().clone();
    let bcd = alts.coalition_of(["b", "c", "d"]).unwrap();
    let extended = profile
        .with_ballot(svcr::Ballot::new("v2", [bcd]).unwrap())
        .unwrap();
    let (_, committee) = rules::shapley_committee(&extended, 3, TiePolicy::Report).unwrap();
    let names: Vec<&str> = committee
        .members()
        .iter()
        .map(|&i| alts.name(i))
        .collect();
    assert_eq!(names, ["c", "d", "b"]);
    assert!(!committee.tie_broken());
}

#[test]
fn results_document_for_students_matches_expected_values() {
    let profile = load("students.csv", ProfileFormat::Dense);
    let (ranking, committee) = rules::shapley_committee(&profile, 2, TiePolicy::Report).unwrap();
    let text = io::results_document(&ranking, Some(&committee), &[], 2);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["decimals"]["a"], "0.83");
    assert_eq!(value["decimals"]["b"], "1.33");
    assert_eq!(value["decimals"]["c"], "1.83");
}
