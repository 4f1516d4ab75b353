//! Maximum Knapsack: choose items of greatest total weight whose sizes fit a capacity.

use super::dp::{cell_count, check_budget, width, Choices};
use super::{MaxKnapsack, Packing};
use crate::error::{Error, Result};
use crate::instance::{check_sense, Sense, SolutionReport, Work};
use crate::oracle;
use crate::rational::Rational;
use crate::scaling::{fptas, SolverHooks};

/// Exact DP as algorithm A, density greedy with best singleton as algorithm B with ratio 1/2.
pub const MAX_HOOKS: SolverHooks<Packing> = SolverHooks {
    exact: exact_dp_max,
    approx: approx_half_max,
    rho: Rational::new_raw(1, 2),
};

const UNREACHABLE: u64 = u64::MAX;

// min_size[p] = least total size of a subset with total weight exactly p.
fn fill(instance: &MaxKnapsack, mut choices: Option<&mut Choices>) -> Result<Vec<u64>> {
    let sizes = &instance.structure().sizes;
    let width = width(instance)?;
    let mut min_size = vec![UNREACHABLE; width];
    min_size[0] = 0;
    for (i, (w, &a)) in instance.weights().iter().zip(sizes).enumerate() {
        let w = *w as usize;
        for p in (w..width).rev() {
            let prev = min_size[p - w];
            if prev == UNREACHABLE {
                continue;
            }
            let cand = prev.saturating_add(a);
            if cand < min_size[p] {
                min_size[p] = cand;
                if let Some(choices) = choices.as_deref_mut() {
                    choices.set(i, p);
                }
            }
        }
    }
    Ok(min_size)
}

fn best_fitting_value(min_size: &[u64], capacity: u64) -> usize {
    // column 0 always fits
    min_size.iter().rposition(|&s| s <= capacity).unwrap_or(0)
}

/// Solves MaxKP exactly with a table over total weight 0..=W.
///
/// Records `n * (W + 1)` DP cells. Never fails for a valid instance: the
/// empty selection is always feasible.
pub fn exact_dp_max(instance: &MaxKnapsack) -> Result<SolutionReport> {
    check_sense(instance, Sense::Maximize)?;
    let width = width(instance)?;
    let mut choices = Choices::new(instance.len(), width)?;
    let min_size = fill(instance, Some(&mut choices))?;
    let value = best_fitting_value(&min_size, instance.structure().capacity);
    let selected = choices.backtrack(instance.weights(), value);
    let report = instance.report(selected, Rational::ONE, Work::cells(cell_count(instance)));
    debug_assert_eq!(report.value, value as u128);
    Ok(report)
}

/// Optimal MaxKP value without the choice table; see [`exact_dp_max`].
pub fn exact_value_max(instance: &MaxKnapsack, budget: Option<u128>) -> Result<(u128, Work)> {
    check_sense(instance, Sense::Maximize)?;
    let cells = cell_count(instance);
    check_budget(cells, budget)?;
    let min_size = fill(instance, None)?;
    let value = best_fitting_value(&min_size, instance.structure().capacity);
    Ok((value as u128, Work::cells(cells)))
}

/// 1/2-approximation for MaxKP: the better of the density-greedy prefix and
/// the heaviest single item that fits.
///
/// Items larger than the capacity are discarded first. The prefix takes items
/// by nonincreasing weight/size ratio and stops at the first one that does not
/// fit; prefix plus that item weighs at least OPT, so one of the two halves
/// weighs at least OPT / 2.
pub fn approx_half_max(instance: &MaxKnapsack) -> Result<SolutionReport> {
    check_sense(instance, Sense::Maximize)?;
    let packing = instance.structure();
    let capacity = packing.capacity as u128;
    let weights = instance.weights();
    let ratio = Rational::new_raw(1, 2);

    let mut steps = 0u64;
    let mut order: Vec<usize> = (0..instance.len())
        .filter(|&i| packing.sizes[i] as u128 <= capacity)
        .collect();
    steps += instance.len() as u64;
    order.sort_by(|&i, &j| {
        steps += 1;
        // w_j / a_j vs w_i / a_i: larger density first, ties by index
        let lhs = weights[j] as u128 * packing.sizes[i] as u128;
        let rhs = weights[i] as u128 * packing.sizes[j] as u128;
        lhs.cmp(&rhs).then(i.cmp(&j))
    });

    let mut used = 0u128;
    let mut prefix = Vec::new();
    for &i in &order {
        steps += 1;
        let a = packing.sizes[i] as u128;
        if used + a > capacity {
            break;
        }
        used += a;
        prefix.push(i);
    }
    let prefix_value = instance.value_of(&prefix);

    let single = order
        .iter()
        .copied()
        .max_by(|&i, &j| weights[i].cmp(&weights[j]).then(j.cmp(&i)));
    steps += order.len() as u64;

    let selected = match single {
        Some(i) if weights[i] as u128 > prefix_value => vec![i],
        _ => prefix,
    };
    Ok(instance.report(selected, ratio, Work::steps(steps)))
}

/// Exhaustive MaxKP optimum; ties go to the lexicographically smallest index set.
pub fn brute_force_max(instance: &MaxKnapsack) -> Result<SolutionReport> {
    check_sense(instance, Sense::Maximize)?;
    oracle::brute_force(instance)
}

/// (1 - epsilon)-approximation for MaxKP via weight scaling. Requires 0 < epsilon < 1.
pub fn fptas_max(instance: &MaxKnapsack, epsilon: Rational) -> Result<SolutionReport> {
    check_sense(instance, Sense::Maximize)?;
    if epsilon >= Rational::ONE {
        return Err(Error::Domain(format!(
            "epsilon must be below 1 when maximizing, got {epsilon}"
        )));
    }
    fptas(instance, epsilon, &MAX_HOOKS)
}
