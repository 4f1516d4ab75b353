//! Exhaustive search over all subsets, used as the reference optimum in tests.

use crate::error::{Error, Result};
use crate::instance::{Sense, SolutionReport, Structure, SubsetInstance, Work};
use crate::rational::Rational;

pub const BRUTE_FORCE_MAX_ITEMS: usize = 25;

/// Enumerates all 2^n subsets and returns an optimal feasible one. Among
/// optimal subsets the lexicographically smallest ascending index list wins.
pub fn brute_force<S: Structure>(instance: &SubsetInstance<S>) -> Result<SolutionReport> {
    let n = instance.len();
    if n > BRUTE_FORCE_MAX_ITEMS {
        return Err(Error::InstanceTooLarge {
            n,
            max: BRUTE_FORCE_MAX_ITEMS,
        });
    }
    let weights = instance.weights();
    let mut best: Option<(u128, Vec<usize>)> = None;
    let mut selected = Vec::with_capacity(n);
    for mask in 0u32..(1u32 << n) {
        selected.clear();
        selected.extend((0..n).filter(|&i| mask >> i & 1 == 1));
        if !instance.is_feasible(&selected) {
            continue;
        }
        let value: u128 = selected.iter().map(|&i| weights[i] as u128).sum();
        let better = match &best {
            None => true,
            Some((v, s)) => match instance.sense() {
                Sense::Minimize => value < *v || (value == *v && selected < *s),
                Sense::Maximize => value > *v || (value == *v && selected < *s),
            },
        };
        if better {
            best = Some((value, selected.clone()));
        }
    }
    let (_, selected) =
        best.ok_or_else(|| Error::Infeasible("no subset satisfies the structure".into()))?;
    Ok(instance.report(selected, Rational::ONE, Work::default()))
}
