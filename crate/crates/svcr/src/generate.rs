//! Seeded random profile generation for experiments and property
//! sweeps. Output is a pure function of the configuration: the same seed
//! always yields the same profile.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{AlternativeSet, Ballot, EvaluationProfile, MAX_ALTERNATIVES};

#[derive(Debug, Clone, Copy)]
pub struct GeneratorConfig {
    pub alternatives: usize,
    pub voters: usize,
    /// Probability that a voter approves any given group.
    pub density: f64,
    /// Largest group size a voter may approve.
    pub max_group_size: usize,
    pub seed: u64,
}

/// Alternative names used by generated profiles: `a`, `b`, `c`, ...
pub fn default_names(count: usize) -> Vec<String> {
    (0..count)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect()
}

/// Each voter approves each group of size at most `max_group_size`
/// independently with probability `density`, in a fixed group order
/// driven by a ChaCha stream seeded from `seed`.
pub fn generate_profile(config: &GeneratorConfig) -> Result<EvaluationProfile> {
    if config.alternatives == 0 || config.alternatives > MAX_ALTERNATIVES {
        return Err(Error::InvalidGeneratorConfig(format!(
            "alternatives must be in 1..={MAX_ALTERNATIVES}, got {}",
            config.alternatives
        )));
    }
    if !config.density.is_finite() || !(0.0..=1.0).contains(&config.density) {
        return Err(Error::InvalidGeneratorConfig(format!(
            "density must be in [0, 1], got {}",
            config.density
        )));
    }
    if config.max_group_size == 0 {
        return Err(Error::InvalidGeneratorConfig(
            "max group size must be at least 1".to_string(),
        ));
    }
    let alternatives = AlternativeSet::new(default_names(config.alternatives))?;
    let groups = alternatives.coalitions_up_to(config.max_group_size);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let ballots = (1..=config.voters)
        .map(|v| {
            let approved = groups
                .iter()
                .copied()
                .filter(|_| rng.random_bool(config.density))
                .collect::<Vec<_>>();
            Ballot::new(format!("v{v}"), approved)
        })
        .collect::<Result<Vec<_>>>()?;
    EvaluationProfile::new(alternatives, ballots)
}
