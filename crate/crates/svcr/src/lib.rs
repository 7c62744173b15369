//! Committee selection from generalized approval ballots.
//!
//! Voters approve *groups* of alternatives, not just individuals. Each
//! profile of such ballots induces a transferable-utility game — a
//! group's worth is the number of voters approving exactly that group —
//! and the exact Shapley value of that game scores every alternative by
//! its average marginal contribution across all join orders. Sorting by
//! score gives the collective ranking; the top `k` form the committee.
//!
//! The crate provides the game model ([`model`]), three independent
//! exact evaluators ([`shapley`]), the selection rules and the baselines
//! they are compared against ([`rules`]), executable axiom checks
//! ([`axioms`]), file formats ([`io`]), a seeded profile generator
//! ([`generate`]), and the `svcr` command-line front end ([`cli`]).
//!
//! ```
//! use svcr::{rules, AlternativeSet, Ballot, EvaluationProfile, TiePolicy};
//!
//! let alts = AlternativeSet::new(["a", "b", "c"])?;
//! let ballots = vec![
//!     Ballot::new("v1", [alts.coalition_of(["a"])?, alts.coalition_of(["b", "c"])?])?,
//!     Ballot::new("v2", [alts.coalition_of(["b", "c"])?])?,
//! ];
//! let profile = EvaluationProfile::new(alts, ballots)?;
//!
//! let (ranking, committee) = rules::shapley_committee(&profile, 2, TiePolicy::Report)?;
//! let names: Vec<&str> = committee
//!     .members()
//!     .iter()
//!     .map(|&i| profile.alternatives().name(i))
//!     .collect();
//! assert_eq!(names, ["b", "c"]); // the approved pairing beats the lone singleton
//! assert!(!committee.tie_broken());
//! # let _ = ranking;
//! # Ok::<(), svcr::Error>(())
//! ```

pub mod axioms;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod io;
pub mod model;
pub mod rules;
pub mod shapley;

pub use error::{Error, Result};
pub use model::{AlternativeSet, Ballot, Coalition, EvaluationProfile, TUGame, MAX_ALTERNATIVES};
pub use rules::{CollectiveRanking, Committee, TiePolicy};
pub use shapley::{Rational, ScoreVector};
