//! Shared helpers for the integration suites: seeded random games and
//! profiles, and exact-rational shorthands.

#![allow(dead_code)]

use num::{BigInt, BigRational};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use svcr::generate::{self, GeneratorConfig};
use svcr::{AlternativeSet, Coalition, EvaluationProfile, TUGame};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn alternatives(m: usize) -> AlternativeSet {
    AlternativeSet::new(generate::default_names(m)).expect("valid alternatives")
}

pub fn rational(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// A random game over `m` alternatives: every non-empty coalition gets a
/// worth drawn from `lo..=hi` with probability `fill` (zero draws leave
/// the coalition out of the support).
pub fn random_game(rng: &mut ChaCha8Rng, m: usize, fill: f64, lo: i64, hi: i64) -> TUGame {
    let alts = alternatives(m);
    let worths: Vec<(Coalition, i64)> = (1..(1u32 << m))
        .filter_map(|bits| {
            if rng.random_bool(fill) {
                let worth = rng.random_range(lo..=hi);
                (worth != 0).then_some((Coalition::from_bits(bits), worth))
            } else {
                None
            }
        })
        .collect();
    TUGame::from_worths(alts, worths).expect("valid game")
}

/// A seeded random profile via the library generator.
pub fn random_profile(seed: u64, m: usize, voters: usize, density: f64) -> EvaluationProfile {
    generate::generate_profile(&GeneratorConfig {
        alternatives: m,
        voters,
        density,
        max_group_size: 3,
        seed,
    })
    .expect("valid generator config")
}
