//! Exact Shapley scores for transferable-utility games.
//!
//! Three evaluators compute the same value by different routes:
//!
//! * [`sparse`] regroups the sum over the game's nonzero-worth coalitions
//!   and is the production path (`O(|support| * m)`);
//! * [`dense`] transcribes the textbook formula directly, enumerating all
//!   subsets per alternative;
//! * [`permutation_oracle`] averages marginal contributions over every
//!   join order (`m!` of them) and exists to cross-check the other two.
//!
//! All arithmetic is exact; scores are big rationals whose denominators
//! divide `m!`.

use num::{BigInt, BigRational, Signed, Zero};

use crate::error::{Error, Result};
use crate::model::{AlternativeSet, TUGame};

/// Exact score scalar. Always stored reduced, denominator positive.
pub type Rational = BigRational;

/// Largest alternative count the permutation oracle will enumerate.
pub const ORACLE_MAX_ALTERNATIVES: usize = 8;

/// `0!, 1!, ..., n!` as big integers.
fn factorials(n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 1);
    let mut acc = BigInt::from(1);
    out.push(acc.clone());
    for i in 1..=n {
        acc *= i as u64;
        out.push(acc.clone());
    }
    out
}

/// Join weights `w(s) = s! (m-s-1)! / m!` for predecessor-set sizes
/// `s = 0..m`: the probability that an alternative joins immediately
/// after a given size-`s` set in a uniformly random order.
pub fn join_weights(m: usize) -> Vec<Rational> {
    let fact = factorials(m);
    (0..m)
        .map(|s| Rational::new(fact[s].clone() * &fact[m - 1 - s], fact[m].clone()))
        .collect()
}

/// One exact rational score per alternative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreVector {
    alternatives: AlternativeSet,
    scores: Vec<Rational>,
}

impl ScoreVector {
    pub fn new(alternatives: AlternativeSet, scores: Vec<Rational>) -> Result<Self> {
        if scores.len() != alternatives.len() {
            return Err(Error::AlternativeSetMismatch);
        }
        Ok(Self {
            alternatives,
            scores,
        })
    }

    pub fn zero(alternatives: AlternativeSet) -> Self {
        let scores = vec![Rational::zero(); alternatives.len()];
        Self {
            alternatives,
            scores,
        }
    }

    pub fn alternatives(&self) -> &AlternativeSet {
        &self.alternatives
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn score(&self, index: usize) -> &Rational {
        &self.scores[index]
    }

    pub fn score_of(&self, name: &str) -> Option<&Rational> {
        self.alternatives.index_of(name).map(|i| &self.scores[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Rational)> {
        self.alternatives
            .names()
            .iter()
            .map(String::as_str)
            .zip(self.scores.iter())
    }

    /// Exact sum of all scores; equals the grand-coalition worth when the
    /// vector came from a Shapley evaluation.
    pub fn total(&self) -> Rational {
        self.scores.iter().fold(Rational::zero(), |acc, s| acc + s)
    }

    /// Componentwise sum over the same alternative set.
    pub fn add(&self, other: &ScoreVector) -> Result<ScoreVector> {
        if self.alternatives != other.alternatives {
            return Err(Error::AlternativeSetMismatch);
        }
        let scores = self
            .scores
            .iter()
            .zip(&other.scores)
            .map(|(a, b)| a + b)
            .collect();
        ScoreVector::new(self.alternatives.clone(), scores)
    }

    pub fn scaled(&self, factor: i64) -> ScoreVector {
        let factor = Rational::from(BigInt::from(factor));
        let scores = self.scores.iter().map(|s| s * &factor).collect();
        ScoreVector {
            alternatives: self.alternatives.clone(),
            scores,
        }
    }
}

/// Production evaluator: the score sum regrouped over the support.
///
/// Every coalition `T` with nonzero worth contributes
/// `w(|T|-1) * worth(T)` to each member and `-w(|T|) * worth(T)` to each
/// non-member. Numerators accumulate over the common denominator `m!`.
pub fn sparse(game: &TUGame) -> ScoreVector {
    let m = game.alternatives().len();
    let fact = factorials(m);
    let mut numerators = vec![BigInt::zero(); m];
    for (coalition, worth) in game.support() {
        let t = coalition.size();
        let member_part = &fact[t - 1] * &fact[m - t] * worth;
        let outsider_part = if t < m {
            &fact[t] * &fact[m - t - 1] * worth
        } else {
            BigInt::zero()
        };
        for (i, numerator) in numerators.iter_mut().enumerate() {
            if coalition.contains(i) {
                *numerator += &member_part;
            } else {
                *numerator -= &outsider_part;
            }
        }
    }
    finish(game.alternatives().clone(), numerators, &fact[m])
}

/// Direct transcription of the defining sum: for every alternative,
/// enumerate all subsets of the others and weight each marginal
/// contribution by `w(|S|)`.
pub fn dense(game: &TUGame) -> ScoreVector {
    let m = game.alternatives().len();
    let fact = factorials(m);
    let table = game.dense_table();
    let grand = game.alternatives().grand_coalition();
    let mut numerators = Vec::with_capacity(m);
    for i in 0..m {
        let bit = 1usize << i;
        let rest = grand.without(i);
        // Marginal contributions grouped by predecessor-set size; each
        // bucket shares the weight s!(m-s-1)!.
        let mut by_size = vec![0i128; m];
        for subset in rest.subsets() {
            let s = subset.bits() as usize;
            by_size[subset.size()] += i128::from(table[s | bit]) - i128::from(table[s]);
        }
        let mut numerator = BigInt::zero();
        for (s, sum) in by_size.iter().enumerate() {
            if !sum.is_zero() {
                numerator += &fact[s] * &fact[m - 1 - s] * BigInt::from(*sum);
            }
        }
        numerators.push(numerator);
    }
    finish(game.alternatives().clone(), numerators, &fact[m])
}

/// Reference oracle: walks every one of the `m!` join orders and averages
/// each alternative's marginal contribution to its predecessors.
pub fn permutation_oracle(game: &TUGame) -> Result<ScoreVector> {
    let m = game.alternatives().len();
    if m > ORACLE_MAX_ALTERNATIVES {
        return Err(Error::OracleTooLarge {
            m,
            max: ORACLE_MAX_ALTERNATIVES,
        });
    }
    let table = game.dense_table();
    let mut sums = vec![0i128; m];
    let mut order: Vec<usize> = (0..m).collect();
    permute(&mut order, m, &mut |order| {
        let mut joined = 0usize;
        for &i in order {
            let with_i = joined | (1 << i);
            sums[i] += i128::from(table[with_i]) - i128::from(table[joined]);
            joined = with_i;
        }
    });
    let fact = factorials(m);
    let numerators = sums.into_iter().map(BigInt::from).collect();
    Ok(finish(game.alternatives().clone(), numerators, &fact[m]))
}

/// Heap's algorithm; visits each permutation of `order` exactly once.
fn permute<F: FnMut(&[usize])>(order: &mut Vec<usize>, k: usize, visit: &mut F) {
    if k <= 1 {
        visit(order);
        return;
    }
    for i in 0..k {
        permute(order, k - 1, visit);
        if k.is_multiple_of(2) {
            order.swap(i, k - 1);
        } else {
            order.swap(0, k - 1);
        }
    }
}

fn finish(alternatives: AlternativeSet, numerators: Vec<BigInt>, denominator: &BigInt) -> ScoreVector {
    let scores = numerators
        .into_iter()
        .map(|n| Rational::new(n, denominator.clone()))
        .collect();
    ScoreVector {
        alternatives,
        scores,
    }
}

/// Renders a rational as `num/den`, the denominator always explicit.
pub fn exact_string(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Parses `num/den` (or a bare integer) back into an exact rational.
pub fn parse_exact(text: &str) -> Result<Rational> {
    text.parse::<Rational>()
        .map_err(|_| Error::InvalidRational(text.to_string()))
}

/// Renders a rational in fixed-point decimal with `places` digits after
/// the point, rounding halves away from zero.
pub fn decimal_string(value: &Rational, places: usize) -> String {
    let negative = value.is_negative();
    let mut scaled = value.abs();
    let scale = BigInt::from(10u32).pow(places as u32);
    scaled *= Rational::from(scale.clone());
    let mut units = scaled.numer() / scaled.denom();
    let remainder = scaled.numer() % scaled.denom();
    if &remainder * 2 >= *scaled.denom() {
        units += 1;
    }
    let sign = if negative && !units.is_zero() { "-" } else { "" };
    if places == 0 {
        return format!("{sign}{units}");
    }
    let whole = &units / &scale;
    let digits = (&units % &scale).to_string();
    format!("{sign}{whole}.{digits:0>places$}")
}
