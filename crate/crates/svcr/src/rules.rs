//! Committee-selection rules over score vectors: the Shapley-score
//! committee, plus the k-approval and group-score baselines it is
//! compared against.

use num::BigInt;

use crate::error::{Error, Result};
use crate::model::{Coalition, EvaluationProfile, TUGame};
use crate::shapley::{self, Rational, ScoreVector};

/// What to do when a score tie straddles the k-th seat.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TiePolicy {
    /// Fill the contested seats in ascending name order.
    Lex,
    /// Refuse to select a committee.
    Error,
    /// Fill deterministically (as `Lex`) but surface every tied
    /// candidate in the committee's metadata. Library default.
    #[default]
    Report,
}

/// Alternatives grouped into tiers of exactly equal score, best first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollectiveRanking {
    scores: ScoreVector,
    tiers: Vec<Vec<usize>>,
}

impl CollectiveRanking {
    /// Sorts alternatives by strictly decreasing exact score; equal
    /// scores share a tier.
    pub fn new(scores: ScoreVector) -> Self {
        let mut order: Vec<usize> = (0..scores.len()).collect();
        order.sort_by(|&a, &b| scores.score(b).cmp(scores.score(a)).then(a.cmp(&b)));
        let mut tiers: Vec<Vec<usize>> = Vec::new();
        for index in order {
            match tiers.last_mut() {
                Some(tier) if scores.score(tier[0]) == scores.score(index) => tier.push(index),
                _ => tiers.push(vec![index]),
            }
        }
        Self { scores, tiers }
    }

    pub fn scores(&self) -> &ScoreVector {
        &self.scores
    }

    /// Tiers of alternative indices, each in index order.
    pub fn tiers(&self) -> &[Vec<usize>] {
        &self.tiers
    }

    pub fn tier_names(&self) -> Vec<Vec<String>> {
        self.tiers
            .iter()
            .map(|tier| {
                tier.iter()
                    .map(|&i| self.scores.alternatives().name(i).to_string())
                    .collect()
            })
            .collect()
    }

    /// Zero-based tier of an alternative.
    pub fn tier_of(&self, index: usize) -> usize {
        self.tiers
            .iter()
            .position(|tier| tier.contains(&index))
            .expect("every alternative is ranked")
    }
}

/// A selected size-k committee with boundary-tie metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Committee {
    k: usize,
    members: Vec<usize>,
    tie_broken: bool,
    boundary_ties: Vec<usize>,
}

impl Committee {
    pub fn k(&self) -> usize {
        self.k
    }

    /// Members in selection order: tier by tier, contested seats last.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn member_set(&self) -> Coalition {
        Coalition::from_indices(self.members.iter().copied())
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.contains(&index)
    }

    /// True iff a score tie straddled the k-th seat.
    pub fn tie_broken(&self) -> bool {
        self.tie_broken
    }

    /// Every alternative tied at the boundary (empty when none).
    pub fn boundary_ties(&self) -> &[usize] {
        &self.boundary_ties
    }
}

/// Takes the top `k` of a ranking, resolving a straddling tier per the
/// tie policy.
pub fn select_committee(
    ranking: &CollectiveRanking,
    k: usize,
    policy: TiePolicy,
) -> Result<Committee> {
    let alternatives = ranking.scores().alternatives();
    let m = alternatives.len();
    if k == 0 || k > m {
        return Err(Error::CommitteeSizeOutOfRange { k, m });
    }
    let mut members: Vec<usize> = Vec::with_capacity(k);
    let mut tie_broken = false;
    let mut boundary_ties: Vec<usize> = Vec::new();
    for tier in ranking.tiers() {
        if members.len() + tier.len() <= k {
            members.extend(tier.iter().copied());
            if members.len() == k {
                break;
            }
        } else {
            // The tier straddles the boundary.
            tie_broken = true;
            boundary_ties = tier.clone();
            if policy == TiePolicy::Error {
                return Err(Error::BoundaryTie {
                    k,
                    tied: tier.iter().map(|&i| alternatives.name(i).to_string()).collect(),
                });
            }
            let mut by_name = tier.clone();
            by_name.sort_by(|&a, &b| alternatives.name(a).cmp(alternatives.name(b)));
            members.extend(by_name.into_iter().take(k - members.len()));
            break;
        }
    }
    debug_assert_eq!(members.len(), k);
    Ok(Committee {
        k,
        members,
        tie_broken,
        boundary_ties,
    })
}

/// Scores a profile's game by exact Shapley value and selects the top-k
/// committee. The one-stop entry point behind `elect`.
pub fn shapley_committee(
    profile: &EvaluationProfile,
    k: usize,
    policy: TiePolicy,
) -> Result<(CollectiveRanking, Committee)> {
    let scores = shapley::sparse(&TUGame::from_profile(profile));
    let ranking = CollectiveRanking::new(scores);
    let committee = select_committee(&ranking, k, policy)?;
    Ok((ranking, committee))
}

/// Per-alternative singleton approval counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApprovalScore {
    counts: Vec<u64>,
}

impl ApprovalScore {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, index: usize) -> u64 {
        self.counts[index]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KApprovalOutcome {
    pub approvals: ApprovalScore,
    pub ranking: CollectiveRanking,
    pub committee: Committee,
}

/// Baseline rule: each alternative scores the number of ballots that
/// approve its singleton; groups are ignored.
pub fn k_approval(
    profile: &EvaluationProfile,
    k: usize,
    policy: TiePolicy,
) -> Result<KApprovalOutcome> {
    let m = profile.alternatives().len();
    let mut counts = vec![0u64; m];
    for ballot in profile.ballots() {
        for (i, count) in counts.iter_mut().enumerate() {
            if ballot.approves(Coalition::singleton(i)) {
                *count += 1;
            }
        }
    }
    let scores = ScoreVector::new(
        profile.alternatives().clone(),
        counts
            .iter()
            .map(|&c| Rational::from(BigInt::from(c)))
            .collect(),
    )?;
    let ranking = CollectiveRanking::new(scores);
    let committee = select_committee(&ranking, k, policy)?;
    Ok(KApprovalOutcome {
        approvals: ApprovalScore { counts },
        ranking,
        committee,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupScoreOutcome {
    pub k: usize,
    /// Every size-k coalition with its direct approval count, in
    /// lexicographic member order.
    pub scores: Vec<(Coalition, u64)>,
    /// All coalitions attaining the maximum score; never tie-broken.
    pub winners: Vec<Coalition>,
}

/// Baseline rule: each size-k group scores the number of ballots that
/// approve exactly that group; the argmax set wins.
pub fn group_score(profile: &EvaluationProfile, k: usize) -> Result<GroupScoreOutcome> {
    let m = profile.alternatives().len();
    if k == 0 || k > m {
        return Err(Error::CommitteeSizeOutOfRange { k, m });
    }
    let game = TUGame::from_profile(profile);
    let scores: Vec<(Coalition, u64)> = profile
        .alternatives()
        .coalitions_of_size(k)
        .into_iter()
        .map(|c| (c, game.worth(c) as u64))
        .collect();
    let best = scores.iter().map(|&(_, s)| s).max().unwrap_or(0);
    let winners = scores
        .iter()
        .filter(|&&(_, s)| s == best)
        .map(|&(c, _)| c)
        .collect();
    Ok(GroupScoreOutcome { k, scores, winners })
}

/// Agreement flags between the Shapley committee and the baselines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Agreement {
    /// Shapley and k-approval selected the same member set.
    pub committee_matches_k_approval: bool,
    /// Identical tier structure between the two rankings.
    pub ranking_matches_k_approval: bool,
    /// The group-score argmax is a single coalition.
    pub group_winner_unique: bool,
    /// The Shapley committee is among the group-score winners.
    pub committee_is_group_winner: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleComparison {
    pub k: usize,
    pub shapley_ranking: CollectiveRanking,
    pub shapley_committee: Committee,
    pub approval: KApprovalOutcome,
    pub group: GroupScoreOutcome,
    pub agreement: Agreement,
}

/// Runs all three rules on one profile and flags where they disagree.
pub fn compare_rules(
    profile: &EvaluationProfile,
    k: usize,
    policy: TiePolicy,
) -> Result<RuleComparison> {
    let (shapley_ranking, shapley_committee) = shapley_committee(profile, k, policy)?;
    let approval = k_approval(profile, k, policy)?;
    let group = group_score(profile, k)?;
    let agreement = Agreement {
        committee_matches_k_approval: shapley_committee.member_set()
            == approval.committee.member_set(),
        ranking_matches_k_approval: tiers_equal(&shapley_ranking, &approval.ranking),
        group_winner_unique: group.winners.len() == 1,
        committee_is_group_winner: group.winners.contains(&shapley_committee.member_set()),
    };
    Ok(RuleComparison {
        k,
        shapley_ranking,
        shapley_committee,
        approval,
        group,
        agreement,
    })
}

/// Tier-for-tier equality of two rankings (indices, order-sensitive).
pub fn tiers_equal(a: &CollectiveRanking, b: &CollectiveRanking) -> bool {
    a.tiers() == b.tiers()
}

/// Checks the defining committee conditions directly: members are
/// mutually comparable and the minimum member score weakly exceeds every
/// outsider's score.
pub fn is_shapley_committee(scores: &ScoreVector, committee: &Committee) -> bool {
    let members = committee.member_set();
    let min_inside = committee
        .members()
        .iter()
        .map(|&i| scores.score(i))
        .min();
    let Some(min_inside) = min_inside else {
        return false;
    };
    (0..scores.len())
        .filter(|&i| !members.contains(i))
        .all(|i| scores.score(i) <= min_inside)
}
