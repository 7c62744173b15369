//! Small worked elections used across the documentation and test suite.

use crate::model::{AlternativeSet, Ballot, EvaluationProfile, TUGame};

fn profile(alternatives: &[&str], ballots: &[(&str, &[&[&str]])]) -> EvaluationProfile {
    let alts = AlternativeSet::new(alternatives.iter().copied()).expect("valid alternatives");
    let ballots = ballots
        .iter()
        .map(|(id, groups)| {
            let coalitions = groups
                .iter()
                .map(|names| alts.coalition_of(names.iter().copied()).expect("valid group"));
            Ballot::new(*id, coalitions).expect("valid ballot")
        })
        .collect();
    EvaluationProfile::new(alts, ballots).expect("valid profile")
}

/// Three students `a`, `b`, `c`; four voters grading both individuals and
/// pairings. Two research-associate slots are to be filled.
pub fn students_profile() -> EvaluationProfile {
    profile(
        &["a", "b", "c"],
        &[
            ("v1", &[&["a"], &["b"], &["c"], &["a", "b"], &["a", "c"], &["b", "c"], &["a", "b", "c"]]),
            ("v2", &[&["a"], &["c"], &["a", "b"], &["b", "c"], &["a", "b", "c"]]),
            ("v3", &[&["a"], &["c"], &["b", "c"], &["a", "b", "c"]]),
            ("v4", &[&["a"], &["b"], &["c"], &["b", "c"], &["a", "b", "c"]]),
        ],
    )
}

/// Packing for a hike: water `w`, orange juice `o`, sandwich `s`. Water and
/// juice are individually popular but nobody wants to carry both.
pub fn backpack_profile() -> EvaluationProfile {
    profile(
        &["w", "o", "s"],
        &[
            ("v1", &[&["w"], &["o"], &["w", "s"], &["o", "s"], &["w", "o", "s"]]),
            ("v2", &[&["w"], &["o"], &["w", "s"], &["o", "s"], &["w", "o", "s"]]),
            ("v3", &[&["w"], &["o"], &["w", "s"], &["o", "s"], &["w", "o", "s"]]),
            ("v4", &[&["w"], &["w", "s"], &["o", "s"], &["w", "o", "s"]]),
        ],
    )
}

/// Ten voters choosing three of five candidates, with a popular pairing
/// `{a,c}` and one voter backing the trio `{a,c,e}`.
pub fn five_candidates_profile() -> EvaluationProfile {
    profile(
        &["a", "b", "c", "d", "e"],
        &[
            ("v1", &[&["a"], &["a", "c"]]),
            ("v2", &[&["a"], &["b"], &["a", "c"]]),
            ("v3", &[&["a"]]),
            ("v4", &[&["c"], &["a", "c"]]),
            ("v5", &[&["c"]]),
            ("v6", &[&["e"]]),
            ("v7", &[&["e"]]),
            ("v8", &[&["e"], &["a", "c"]]),
            ("v9", &[&["a"], &["c"]]),
            ("v10", &[&["a", "c", "e"]]),
        ],
    )
}

/// A single voter who wants `c` and `d` together with exactly one of the
/// rivals `a` and `b`, expressed by approving `{a,c,d}` and `{b,c,d}`.
pub fn rival_pair_profile() -> EvaluationProfile {
    profile(
        &["a", "b", "c", "d", "e"],
        &[("v1", &[&["a", "c", "d"], &["b", "c", "d"]])],
    )
}

/// The game induced by [`rival_pair_profile`].
pub fn rival_pair_game() -> TUGame {
    TUGame::from_profile(&rival_pair_profile())
}
