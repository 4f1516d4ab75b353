//! Seeded random instance generation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::format::{AnyInstance, ProblemKind};
use crate::knapsack::{max_knapsack, min_knapsack};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub kind: ProblemKind,
    pub n: usize,
    pub weight_max: u64,
    pub size_max: u64,
    /// Right-hand side as a fraction of the total size, in (0, 1].
    pub tightness: Rational,
    pub seed: u64,
}

/// Draws weights and sizes uniformly from `[1, max]` and sets the demand or
/// capacity to `round(tightness * total size)`, rounding halves up.
/// The same config always yields the same instance.
pub fn generate_instance(config: &GeneratorConfig) -> Result<AnyInstance> {
    if config.n == 0 {
        return Err(Error::Domain("generator needs n >= 1".into()));
    }
    if config.weight_max == 0 || config.size_max == 0 {
        return Err(Error::Domain(
            "weight and size maxima must be at least 1".into(),
        ));
    }
    if !config.tightness.is_positive() || config.tightness > Rational::ONE {
        return Err(Error::Domain(format!(
            "tightness must lie in (0, 1], got {}",
            config.tightness
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let items: Vec<(u64, u64)> = (0..config.n)
        .map(|_| {
            let w = rng.gen_range(1..=config.weight_max);
            let a = rng.gen_range(1..=config.size_max);
            (w, a)
        })
        .collect();

    let total: u128 = items.iter().map(|&(_, a)| a as u128).sum();
    let (num, den) = (
        config.tightness.numer() as u128,
        config.tightness.denom() as u128,
    );
    let rhs = (2 * num * total + den) / (2 * den);
    let rhs = u64::try_from(rhs).map_err(|_| Error::Overflow("computing the right-hand side"))?;

    Ok(match config.kind {
        ProblemKind::MinKp => AnyInstance::MinKp(min_knapsack(&items, rhs)?),
        ProblemKind::MaxKp => AnyInstance::MaxKp(max_knapsack(&items, rhs)?),
    })
}

/// A reproducible corpus of small instances for oracle comparisons: `n` in
/// 1..=12, weights and sizes in 1..=100, tightness cycling through 1/4, 1/2,
/// 3/4 and 1.
pub fn small_corpus(kind: ProblemKind, count: usize, seed: u64) -> Result<Vec<AnyInstance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let tightness = Rational::new(k as i128 % 4 + 1, 4)?;
            generate_instance(&GeneratorConfig {
                kind,
                n: rng.gen_range(1..=12),
                weight_max: 100,
                size_max: 100,
                tightness,
                seed: rng.gen(),
            })
        })
        .collect()
}
