//! Minimum Knapsack: choose items of least total weight whose sizes cover a demand.

use super::dp::{cell_count, check_budget, width, Choices};
use super::{Cover, MinKnapsack};
use crate::error::{Error, Result};
use crate::instance::{check_sense, Sense, SolutionReport, Work};
use crate::oracle;
use crate::rational::Rational;
use crate::scaling::{fptas, SolverHooks};

/// Exact DP as algorithm A, break-item greedy as algorithm B with ratio 2.
pub const MIN_HOOKS: SolverHooks<Cover> = SolverHooks {
    exact: exact_dp_min,
    approx: approx2_min,
    rho: Rational::new_raw(2, 1),
};

fn check_coverable(instance: &MinKnapsack) -> Result<()> {
    check_sense(instance, Sense::Minimize)?;
    let cover = instance.structure();
    if cover.total_size() < cover.demand as u128 {
        return Err(Error::Infeasible(format!(
            "total size {} is below the demand {}",
            cover.total_size(),
            cover.demand
        )));
    }
    Ok(())
}

// best[c] = largest coverage (capped at the demand) reachable with total
// weight at most c, over the items processed so far.
fn fill(instance: &MinKnapsack, mut choices: Option<&mut Choices>) -> Result<Vec<u64>> {
    let cover = instance.structure();
    let demand = cover.demand;
    let width = width(instance)?;
    let mut best = vec![0u64; width];
    for (i, (w, &a)) in instance.weights().iter().zip(&cover.sizes).enumerate() {
        let w = *w as usize;
        if w >= width {
            continue;
        }
        match choices.as_deref_mut() {
            Some(choices) => {
                for c in (w..width).rev() {
                    let cand = best[c - w].saturating_add(a).min(demand);
                    if cand > best[c] {
                        best[c] = cand;
                        choices.set(i, c);
                    }
                }
            }
            None => {
                for c in (w..width).rev() {
                    let cand = best[c - w].saturating_add(a).min(demand);
                    if cand > best[c] {
                        best[c] = cand;
                    }
                }
            }
        }
    }
    Ok(best)
}

fn least_covering_cost(best: &[u64], demand: u64) -> Result<usize> {
    best.iter()
        .position(|&cov| cov >= demand)
        .ok_or_else(|| Error::Invariant("no table column covers a coverable demand".into()))
}

/// Solves MinKP exactly with a table over total weight 0..=W.
///
/// Records `n * (W + 1)` DP cells. Among optimal selections, backtracking
/// prefers leaving an item out.
pub fn exact_dp_min(instance: &MinKnapsack) -> Result<SolutionReport> {
    check_coverable(instance)?;
    let width = width(instance)?;
    let mut choices = Choices::new(instance.len(), width)?;
    let best = fill(instance, Some(&mut choices))?;
    let cost = least_covering_cost(&best, instance.structure().demand)?;
    let selected = choices.backtrack(instance.weights(), cost);
    let report = instance.report(selected, Rational::ONE, Work::cells(cell_count(instance)));
    debug_assert_eq!(report.value, cost as u128);
    Ok(report)
}

/// Optimal MinKP value from the same table as [`exact_dp_min`], without
/// keeping the choice bits. Fails before allocating when the table would
/// exceed `budget` cells.
pub fn exact_value_min(instance: &MinKnapsack, budget: Option<u128>) -> Result<(u128, Work)> {
    check_coverable(instance)?;
    let cells = cell_count(instance);
    check_budget(cells, budget)?;
    let best = fill(instance, None)?;
    let cost = least_covering_cost(&best, instance.structure().demand)?;
    Ok((cost as u128, Work::cells(cells)))
}

/// 2-approximation for MinKP.
///
/// Items are scanned by nondecreasing weight/size ratio. An item that would
/// not complete the cover is accumulated; an item that would complete it
/// proposes the candidate "accumulated items + this item" and is skipped.
/// The cheapest candidate is returned. If the first optimal item to complete
/// the cover is `j`, the accumulated weight at that point is below OPT, so
/// the candidate for `j` costs less than `OPT + w_j <= 2 * OPT`.
pub fn approx2_min(instance: &MinKnapsack) -> Result<SolutionReport> {
    check_coverable(instance)?;
    let cover = instance.structure();
    let demand = cover.demand as u128;
    let ratio = Rational::from_integer(2);
    if demand == 0 {
        return Ok(instance.report(Vec::new(), ratio, Work::default()));
    }

    let weights = instance.weights();
    let mut steps = 0u64;
    let mut order: Vec<usize> = (0..instance.len()).collect();
    order.sort_by(|&i, &j| {
        steps += 1;
        // w_i / a_i vs w_j / a_j, ties by index
        let lhs = weights[i] as u128 * cover.sizes[j] as u128;
        let rhs = weights[j] as u128 * cover.sizes[i] as u128;
        lhs.cmp(&rhs).then(i.cmp(&j))
    });

    let mut covered = 0u128;
    let mut cost = 0u128;
    let mut kept: Vec<usize> = Vec::new();
    // (candidate cost, prefix length of `kept`, completing item)
    let mut best: Option<(u128, usize, usize)> = None;
    for &i in &order {
        steps += 1;
        let (w, a) = (weights[i] as u128, cover.sizes[i] as u128);
        if covered + a >= demand {
            let candidate = cost + w;
            if best.is_none_or(|(b, _, _)| candidate < b) {
                best = Some((candidate, kept.len(), i));
            }
        } else {
            covered += a;
            cost += w;
            kept.push(i);
        }
    }

    let (_, prefix, last) =
        best.ok_or_else(|| Error::Invariant("greedy found no completing item".into()))?;
    let mut selected = kept[..prefix].to_vec();
    selected.push(last);
    Ok(instance.report(selected, ratio, Work::steps(steps)))
}

/// Exhaustive MinKP optimum; ties go to the lexicographically smallest index set.
pub fn brute_force_min(instance: &MinKnapsack) -> Result<SolutionReport> {
    check_sense(instance, Sense::Minimize)?;
    oracle::brute_force(instance)
}

/// (1 + epsilon)-approximation for MinKP via weight scaling.
pub fn fptas_min(instance: &MinKnapsack, epsilon: Rational) -> Result<SolutionReport> {
    check_sense(instance, Sense::Minimize)?;
    fptas(instance, epsilon, &MIN_HOOKS)
}
