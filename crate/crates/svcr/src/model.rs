//! Core domain types: alternatives, coalitions, ballots, evaluation
//! profiles, and the transferable-utility game a profile induces.
//!
//! A profile's game assigns every group of alternatives the number of
//! voters that approved exactly that group; the empty coalition always
//! has worth zero and zero worths are never stored.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// Upper bound on the number of alternatives in exact mode. Dense
/// enumeration and the axiom detectors scan all 2^m coalitions.
pub const MAX_ALTERNATIVES: usize = 20;

const RESERVED_NAME_CHARS: &[char] = &['{', '}', ',', ';', '"'];

/// The fixed, ordered set of alternatives an election is about.
///
/// Indices are stable: alternative `i` is `names()[i]` for the lifetime
/// of the set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternativeSet {
    names: Vec<String>,
}

impl AlternativeSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyAlternativeSet);
        }
        if names.len() > MAX_ALTERNATIVES {
            return Err(Error::TooManyAlternatives(names.len()));
        }
        let mut seen = HashSet::new();
        for name in &names {
            if name.is_empty()
                || name.chars().any(|c| {
                    c.is_whitespace() || c.is_control() || RESERVED_NAME_CHARS.contains(&c)
                })
            {
                return Err(Error::InvalidAlternativeName(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateAlternative(name.clone()));
            }
        }
        Ok(Self { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty sets
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn grand_coalition(&self) -> Coalition {
        Coalition(((1u64 << self.len()) - 1) as u32)
    }

    /// Builds a coalition from member names, rejecting unknown names and
    /// the empty group.
    pub fn coalition_of<I, S>(&self, members: I) -> Result<Coalition>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut coalition = Coalition::EMPTY;
        for name in members {
            let name = name.as_ref();
            let index = self
                .index_of(name)
                .ok_or_else(|| Error::UnknownAlternative(name.to_string()))?;
            coalition = coalition.with(index);
        }
        if coalition.is_empty() {
            return Err(Error::EmptyCoalition);
        }
        Ok(coalition)
    }

    /// Renders a coalition as a brace literal with members in
    /// alternative order, e.g. `{a,c}`.
    pub fn coalition_literal(&self, coalition: Coalition) -> String {
        let members: Vec<&str> = coalition.members().map(|i| self.name(i)).collect();
        format!("{{{}}}", members.join(","))
    }

    pub fn member_names(&self, coalition: Coalition) -> Vec<String> {
        coalition.members().map(|i| self.name(i).to_string()).collect()
    }

    /// All size-`size` coalitions in lexicographic member order.
    pub fn coalitions_of_size(&self, size: usize) -> Vec<Coalition> {
        let mut out = Vec::new();
        let mut stack = Vec::with_capacity(size);
        combinations(self.len(), size, 0, &mut stack, &mut out);
        out
    }

    /// All non-empty coalitions up to `max_size` members, smallest sizes
    /// first, lexicographic within a size. This is the column order of
    /// the dense matrix format.
    pub fn coalitions_up_to(&self, max_size: usize) -> Vec<Coalition> {
        let cap = max_size.min(self.len());
        (1..=cap).flat_map(|s| self.coalitions_of_size(s)).collect()
    }
}

fn combinations(m: usize, size: usize, start: usize, stack: &mut Vec<usize>, out: &mut Vec<Coalition>) {
    if stack.len() == size {
        out.push(Coalition::from_indices(stack.iter().copied()));
        return;
    }
    let needed = size - stack.len();
    for i in start..=m.saturating_sub(needed) {
        stack.push(i);
        combinations(m, size, i + 1, stack, out);
        stack.pop();
    }
}

/// A subset of alternatives, encoded as a bitset: bit `i` is set iff the
/// alternative with index `i` is a member.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Coalition(u32);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub fn from_bits(bits: u32) -> Self {
        Coalition(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut bits = 0u32;
        for i in indices {
            bits |= 1 << i;
        }
        Coalition(bits)
    }

    pub fn singleton(index: usize) -> Self {
        Coalition(1 << index)
    }

    pub fn contains(self, index: usize) -> bool {
        self.0 & (1 << index) != 0
    }

    pub fn with(self, index: usize) -> Self {
        Coalition(self.0 | 1 << index)
    }

    pub fn without(self, index: usize) -> Self {
        Coalition(self.0 & !(1 << index))
    }

    pub fn union(self, other: Self) -> Self {
        Coalition(self.0 | other.0)
    }

    pub fn size(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_valid_for(self, m: usize) -> bool {
        u64::from(self.0) < (1u64 << m)
    }

    pub fn members(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..u32::BITS as usize).filter(move |i| bits & (1 << i) != 0)
    }

    /// Iterates every subset of this coalition, the empty set and the
    /// coalition itself included (carry-rippler enumeration).
    pub fn subsets(self) -> Subsets {
        Subsets {
            set: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coalition{{")?;
        for (n, i) in self.members().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

pub struct Subsets {
    set: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = Coalition;

    fn next(&mut self) -> Option<Coalition> {
        let current = self.next?;
        let following = current.wrapping_sub(self.set) & self.set;
        self.next = if following == 0 { None } else { Some(following) };
        Some(Coalition(current))
    }
}

/// One voter's dichotomous evaluation: the set of groups they approve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ballot {
    voter_id: String,
    approved: BTreeSet<Coalition>,
}

impl Ballot {
    /// Duplicated groups collapse silently (the scale is dichotomous);
    /// the empty group is rejected.
    pub fn new<S, I>(voter_id: S, approved: I) -> Result<Self>
    where
        S: Into<String>,
        I: IntoIterator<Item = Coalition>,
    {
        let voter_id = voter_id.into();
        if voter_id.is_empty() {
            return Err(Error::EmptyVoterId);
        }
        let mut set = BTreeSet::new();
        for coalition in approved {
            if coalition.is_empty() {
                return Err(Error::EmptyCoalition);
            }
            set.insert(coalition);
        }
        Ok(Self {
            voter_id,
            approved: set,
        })
    }

    pub fn voter_id(&self) -> &str {
        &self.voter_id
    }

    pub fn approved(&self) -> impl Iterator<Item = Coalition> + '_ {
        self.approved.iter().copied()
    }

    pub fn approves(&self, coalition: Coalition) -> bool {
        self.approved.contains(&coalition)
    }

    pub fn approval_count(&self) -> usize {
        self.approved.len()
    }
}

/// An ordered list of ballots over a fixed alternative set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluationProfile {
    alternatives: AlternativeSet,
    ballots: Vec<Ballot>,
}

impl EvaluationProfile {
    pub fn new(alternatives: AlternativeSet, ballots: Vec<Ballot>) -> Result<Self> {
        let mut ids = HashSet::new();
        for ballot in &ballots {
            if !ids.insert(ballot.voter_id()) {
                return Err(Error::DuplicateVoterId(ballot.voter_id().to_string()));
            }
            for coalition in ballot.approved() {
                if !coalition.is_valid_for(alternatives.len()) {
                    return Err(Error::CoalitionOutOfRange);
                }
            }
        }
        Ok(Self {
            alternatives,
            ballots,
        })
    }

    pub fn alternatives(&self) -> &AlternativeSet {
        &self.alternatives
    }

    pub fn ballots(&self) -> &[Ballot] {
        &self.ballots
    }

    pub fn voter_count(&self) -> usize {
        self.ballots.len()
    }

    /// Joins two profiles over the same alternatives and disjoint voters.
    pub fn join(&self, other: &EvaluationProfile) -> Result<EvaluationProfile> {
        if self.alternatives != other.alternatives {
            return Err(Error::AlternativeSetMismatch);
        }
        let ids: HashSet<&str> = self.ballots.iter().map(Ballot::voter_id).collect();
        if let Some(ballot) = other.ballots.iter().find(|b| ids.contains(b.voter_id())) {
            return Err(Error::OverlappingVoterIds(ballot.voter_id().to_string()));
        }
        let mut ballots = self.ballots.clone();
        ballots.extend(other.ballots.iter().cloned());
        EvaluationProfile::new(self.alternatives.clone(), ballots)
    }

    /// Returns a copy with one extra ballot appended.
    pub fn with_ballot(&self, ballot: Ballot) -> Result<EvaluationProfile> {
        let mut ballots = self.ballots.clone();
        ballots.push(ballot);
        EvaluationProfile::new(self.alternatives.clone(), ballots)
    }

    /// Applies an index permutation to the alternatives: old index `i`
    /// becomes `perm[i]`. Names move with their alternative.
    pub fn relabel_alternatives(&self, perm: &[usize]) -> Result<EvaluationProfile> {
        let alternatives = relabel_set(&self.alternatives, perm)?;
        let ballots = self
            .ballots
            .iter()
            .map(|b| {
                Ballot::new(
                    b.voter_id(),
                    b.approved().map(|c| relabel_coalition(c, perm)),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        EvaluationProfile::new(alternatives, ballots)
    }
}

fn relabel_set(alternatives: &AlternativeSet, perm: &[usize]) -> Result<AlternativeSet> {
    let m = alternatives.len();
    if perm.len() != m || {
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        sorted != (0..m).collect::<Vec<_>>()
    } {
        return Err(Error::CoalitionOutOfRange);
    }
    let mut names = vec![String::new(); m];
    for (old, &new) in perm.iter().enumerate() {
        names[new] = alternatives.name(old).to_string();
    }
    AlternativeSet::new(names)
}

fn relabel_coalition(coalition: Coalition, perm: &[usize]) -> Coalition {
    Coalition::from_indices(coalition.members().map(|i| perm[i]))
}

/// A transferable-utility game over the alternatives: a sparse map from
/// coalitions to integer worths. Absent keys mean worth zero, the empty
/// coalition is never stored, and neither are explicit zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TUGame {
    alternatives: AlternativeSet,
    worth: BTreeMap<Coalition, i64>,
}

impl TUGame {
    /// The null game: every coalition has worth zero.
    pub fn null(alternatives: AlternativeSet) -> Self {
        Self {
            alternatives,
            worth: BTreeMap::new(),
        }
    }

    /// Builds a game from explicit worths. Repeated keys accumulate;
    /// zero totals are dropped.
    pub fn from_worths<I>(alternatives: AlternativeSet, worths: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Coalition, i64)>,
    {
        let mut map: BTreeMap<Coalition, i64> = BTreeMap::new();
        for (coalition, worth) in worths {
            if coalition.is_empty() {
                return Err(Error::EmptyCoalition);
            }
            if !coalition.is_valid_for(alternatives.len()) {
                return Err(Error::CoalitionOutOfRange);
            }
            let entry = map.entry(coalition).or_insert(0);
            *entry = entry
                .checked_add(worth)
                .expect("coalition worth overflowed i64");
            if *entry == 0 {
                map.remove(&coalition);
            }
        }
        Ok(Self {
            alternatives,
            worth: map,
        })
    }

    /// The game a profile induces: each coalition's worth is the number
    /// of ballots approving exactly that coalition.
    pub fn from_profile(profile: &EvaluationProfile) -> Self {
        let mut worth: BTreeMap<Coalition, i64> = BTreeMap::new();
        for ballot in profile.ballots() {
            for coalition in ballot.approved() {
                *worth.entry(coalition).or_insert(0) += 1;
            }
        }
        Self {
            alternatives: profile.alternatives().clone(),
            worth,
        }
    }

    /// The identity game of `coalition`: worth 1 there, 0 elsewhere.
    pub fn identity(coalition: Coalition, alternatives: AlternativeSet) -> Result<Self> {
        Self::from_worths(alternatives, [(coalition, 1)])
    }

    pub fn alternatives(&self) -> &AlternativeSet {
        &self.alternatives
    }

    pub fn worth(&self, coalition: Coalition) -> i64 {
        self.worth.get(&coalition).copied().unwrap_or(0)
    }

    pub fn grand_worth(&self) -> i64 {
        self.worth(self.alternatives.grand_coalition())
    }

    /// The coalitions with nonzero worth, in bit order.
    pub fn support(&self) -> impl Iterator<Item = (Coalition, i64)> + '_ {
        self.worth.iter().map(|(&c, &w)| (c, w))
    }

    pub fn support_len(&self) -> usize {
        self.worth.len()
    }

    pub fn is_null(&self) -> bool {
        self.worth.is_empty()
    }

    /// Coalition-wise sum of two games over the same alternatives;
    /// entries cancelling to zero are dropped.
    pub fn add(&self, other: &TUGame) -> Result<TUGame> {
        if self.alternatives != other.alternatives {
            return Err(Error::AlternativeSetMismatch);
        }
        TUGame::from_worths(
            self.alternatives.clone(),
            self.support().chain(other.support()),
        )
    }

    /// Multiplies every worth by an integer factor.
    pub fn scaled(&self, factor: i64) -> TUGame {
        TUGame::from_worths(
            self.alternatives.clone(),
            self.support().map(|(c, w)| {
                (
                    c,
                    w.checked_mul(factor).expect("coalition worth overflowed i64"),
                )
            }),
        )
        .expect("scaling preserves validity")
    }

    /// Applies an index permutation to the alternatives, mapping every
    /// supported coalition through it.
    pub fn relabel_alternatives(&self, perm: &[usize]) -> Result<TUGame> {
        let alternatives = relabel_set(&self.alternatives, perm)?;
        TUGame::from_worths(
            alternatives,
            self.support().map(|(c, w)| (relabel_coalition(c, perm), w)),
        )
    }

    /// Dense worth table indexed by coalition bits (2^m entries).
    pub(crate) fn dense_table(&self) -> Vec<i64> {
        let mut table = vec![0i64; 1 << self.alternatives.len()];
        for (coalition, worth) in self.support() {
            table[coalition.bits() as usize] = worth;
        }
        table
    }
}
