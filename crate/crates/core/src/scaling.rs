//! Weight scaling and the FPTAS driver built on it.
//!
//! Given a rho-approximation B and an exact pseudo-polynomial solver A, the
//! driver runs B once to get a bound on the optimum, divides every weight by
//! a scale `z` derived from that bound, rounds, and hands the rounded
//! instance to A. The rounded instance has total weight O(n^2 / epsilon), so
//! A's running time no longer depends on the magnitude of the input weights.
//!
//! Minimization uses `z = (eps / rho) * UB / n` and rounds up; items heavier
//! than UB get a penalty weight large enough that no optimal scaled solution
//! can afford them. Maximization uses `z = eps * LB / n` and rounds down;
//! items heavier than LB / rho cannot be in any feasible solution and are
//! given weight 1.

use crate::error::{Error, Result};
use crate::instance::{ScalingSummary, Sense, SolutionReport, Structure, SubsetInstance};
use crate::rational::Rational;

/// Exact rational scaling data for one FPTAS run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScalingParameters {
    pub sense: Sense,
    pub n: usize,
    pub epsilon: Rational,
    pub rho: Rational,
    /// UB when minimizing, LB when maximizing.
    pub bound: u128,
    pub z: Rational,
}

impl ScalingParameters {
    /// The weight above which an item is treated as big: UB when
    /// minimizing, LB / rho when maximizing.
    pub fn threshold(&self) -> Result<Rational> {
        let bound = int(self.bound)?;
        match self.sense {
            Sense::Minimize => Ok(bound),
            Sense::Maximize => bound.checked_div(&self.rho),
        }
    }

    /// Whether `weight` lies strictly above [`threshold`](Self::threshold).
    pub fn is_big(&self, weight: u64) -> Result<bool> {
        Ok(self.threshold()?.cmp_int(weight as u128).is_lt())
    }

    /// The proven factor of the final solution: 1 + eps or 1 - eps.
    pub fn guarantee(&self) -> Result<Rational> {
        guarantee(self.sense, self.epsilon)
    }
}

fn int(v: u128) -> Result<Rational> {
    i128::try_from(v)
        .map(Rational::from_integer)
        .map_err(|_| Error::Overflow("converting a weight to a rational"))
}

fn guarantee(sense: Sense, epsilon: Rational) -> Result<Rational> {
    match sense {
        Sense::Minimize => Rational::ONE.checked_add(&epsilon),
        Sense::Maximize => Rational::ONE.checked_sub(&epsilon),
    }
}

/// Rejects epsilon / rho outside the ranges the construction is proven for.
pub fn check_ranges(sense: Sense, epsilon: Rational, rho: Rational) -> Result<()> {
    if !epsilon.is_positive() {
        return Err(Error::Domain(format!(
            "epsilon must be positive, got {epsilon}"
        )));
    }
    match sense {
        Sense::Minimize => {
            if rho <= Rational::ONE {
                return Err(Error::Domain(format!(
                    "a minimization approximation ratio must exceed 1, got {rho}"
                )));
            }
        }
        Sense::Maximize => {
            if !rho.is_positive() || rho >= Rational::ONE {
                return Err(Error::Domain(format!(
                    "a maximization approximation ratio must lie in (0, 1), got {rho}"
                )));
            }
            if epsilon >= Rational::ONE {
                return Err(Error::Domain(format!(
                    "epsilon must be below 1 when maximizing, got {epsilon}"
                )));
            }
        }
    }
    Ok(())
}

/// Computes the scale `z` for the given sense.
pub fn compute_scale(
    sense: Sense,
    n: usize,
    epsilon: Rational,
    rho: Rational,
    bound: u128,
) -> Result<ScalingParameters> {
    if n == 0 {
        return Err(Error::Domain("scaling needs at least one item".into()));
    }
    check_ranges(sense, epsilon, rho)?;
    let per_item = int(bound)?.div_int(n as u128)?;
    let z = match sense {
        Sense::Minimize => epsilon.checked_div(&rho)?.checked_mul(&per_item)?,
        Sense::Maximize => epsilon.checked_mul(&per_item)?,
    };
    Ok(ScalingParameters {
        sense,
        n,
        epsilon,
        rho,
        bound,
        z,
    })
}

/// A priori upper bound on W' for any instance scaled with these parameters.
///
/// Minimization: `n * (ceil(rho * n / eps) + n + 1)`, the per-item maximum
/// being the penalty weight. Maximization: `n * floor(n / (eps * rho)) + n`.
pub fn scaled_weight_bound(
    sense: Sense,
    n: usize,
    epsilon: Rational,
    rho: Rational,
) -> Result<u128> {
    check_ranges(sense, epsilon, rho)?;
    let n128 = n as u128;
    let overflow = || Error::Overflow("computing the scaled weight bound");
    match sense {
        Sense::Minimize => {
            let ratio = rho.checked_div(&epsilon)?.mul_int(n128)?;
            let per_item = (ratio.ceil() as u128)
                .checked_add(n128 + 1)
                .ok_or_else(overflow)?;
            n128.checked_mul(per_item).ok_or_else(overflow)
        }
        Sense::Maximize => {
            let ratio = epsilon.checked_mul(&rho)?.recip()?.mul_int(n128)?;
            n128.checked_mul(ratio.floor() as u128)
                .and_then(|v| v.checked_add(n128))
                .ok_or_else(overflow)
        }
    }
}

/// The instance I' handed to the exact solver.
#[derive(Clone, Debug)]
pub struct ScaledInstance<'a, S> {
    pub base: &'a SubsetInstance<S>,
    /// Same structure and sense as `base`, rounded weights.
    pub scaled: SubsetInstance<S>,
    pub total_scaled_weight: u128,
    pub params: ScalingParameters,
    /// Items whose original weight exceeded the threshold, ascending.
    pub big_items: Vec<usize>,
}

impl<S: Structure> ScaledInstance<'_, S> {
    pub fn scaled_weights(&self) -> &[u64] {
        self.scaled.weights()
    }
}

fn check_scalable<S: Structure>(
    instance: &SubsetInstance<S>,
    params: &ScalingParameters,
    sense: Sense,
) -> Result<()> {
    if instance.sense() != sense || params.sense != sense {
        return Err(Error::Domain(format!(
            "{sense} scaling applied to a {} instance with {} parameters",
            instance.sense(),
            params.sense
        )));
    }
    if !params.z.is_positive() {
        return Err(Error::Domain("scale factor must be positive".into()));
    }
    if params.n != instance.len() {
        return Err(Error::Domain(format!(
            "parameters were computed for {} items, instance has {}",
            params.n,
            instance.len()
        )));
    }
    Ok(())
}

fn to_weight(v: u128) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::Overflow("storing a scaled weight"))
}

/// Rounds weights up after dividing by `z`. Items heavier than UB get the
/// penalty weight `ceil(UB / z) + n + 1`.
pub fn scale_weights_min<'a, S: Structure>(
    instance: &'a SubsetInstance<S>,
    params: &ScalingParameters,
) -> Result<ScaledInstance<'a, S>> {
    check_scalable(instance, params, Sense::Minimize)?;
    let n = instance.len() as u128;
    let penalty = params.z.ceil_div_into(params.bound)? + n + 1;
    let mut big_items = Vec::new();
    let mut weights = Vec::with_capacity(instance.len());
    for (id, w) in instance.items() {
        let scaled = if (w as u128) <= params.bound {
            params.z.ceil_div_into(w as u128)?
        } else {
            big_items.push(id);
            penalty
        };
        weights.push(to_weight(scaled)?);
    }
    finish(instance, *params, weights, big_items)
}

/// Rounds weights down after dividing by `z`, clamping to at least 1. Items
/// heavier than LB / rho get weight 1.
pub fn scale_weights_max<'a, S: Structure>(
    instance: &'a SubsetInstance<S>,
    params: &ScalingParameters,
) -> Result<ScaledInstance<'a, S>> {
    check_scalable(instance, params, Sense::Maximize)?;
    let mut big_items = Vec::new();
    let mut weights = Vec::with_capacity(instance.len());
    for (id, w) in instance.items() {
        let scaled = if params.is_big(w)? {
            big_items.push(id);
            1
        } else {
            params.z.floor_div_into(w as u128)?.max(1)
        };
        weights.push(to_weight(scaled)?);
    }
    finish(instance, *params, weights, big_items)
}

fn finish<'a, S: Structure>(
    instance: &'a SubsetInstance<S>,
    params: ScalingParameters,
    weights: Vec<u64>,
    big_items: Vec<usize>,
) -> Result<ScaledInstance<'a, S>> {
    let scaled = instance.with_weights(weights)?;
    Ok(ScaledInstance {
        base: instance,
        total_scaled_weight: scaled.total_weight(),
        scaled,
        params,
        big_items,
    })
}

/// A solver for one problem: takes an instance, returns a feasible report.
pub type SolveFn<S> = fn(&SubsetInstance<S>) -> Result<SolutionReport>;

/// The two algorithms the FPTAS composes.
#[derive(Clone, Copy, Debug)]
pub struct SolverHooks<S> {
    /// Solves any instance of the problem to optimality in pseudo-polynomial time.
    pub exact: SolveFn<S>,
    /// Returns a feasible solution within factor `rho` of the optimum.
    pub approx: SolveFn<S>,
    pub rho: Rational,
}

/// Runs the scaling FPTAS on `instance`.
///
/// The returned selection is valued under the original weights and is within
/// factor `1 + epsilon` (minimization) or `1 - epsilon` (maximization) of the
/// optimum. When the scale would be at most 1, rounding cannot shrink the
/// instance, so the original is solved exactly instead.
pub fn fptas<S: Structure>(
    instance: &SubsetInstance<S>,
    epsilon: Rational,
    hooks: &SolverHooks<S>,
) -> Result<SolutionReport> {
    let sense = instance.sense();
    check_ranges(sense, epsilon, hooks.rho)?;
    let factor = guarantee(sense, epsilon)?;

    let approx = (hooks.approx)(instance)?;
    if !approx.feasible {
        return Err(Error::Invariant(
            "approximation algorithm returned an infeasible selection".into(),
        ));
    }
    let bound = approx.value;

    // Positive weights: value 0 means the empty selection, which is optimal.
    if bound == 0 {
        return Ok(SolutionReport {
            guarantee: factor,
            bound_used: Some(0),
            ..approx
        });
    }

    let params = compute_scale(sense, instance.len(), epsilon, hooks.rho, bound)?;
    let weight_bound = scaled_weight_bound(sense, instance.len(), epsilon, hooks.rho)?;

    if params.z <= Rational::ONE {
        let exact = (hooks.exact)(instance)?;
        let big_items = instance
            .items()
            .filter_map(|(id, w)| match params.is_big(w) {
                Ok(true) => Some(Ok(id)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(SolutionReport {
            guarantee: factor,
            bound_used: Some(bound),
            work: approx.work + exact.work,
            scaling: Some(ScalingSummary {
                z: params.z,
                total_scaled_weight: None,
                scaled_weight_bound: weight_bound,
                big_items,
            }),
            ..exact
        });
    }

    let scaled = match sense {
        Sense::Minimize => scale_weights_min(instance, &params)?,
        Sense::Maximize => scale_weights_max(instance, &params)?,
    };
    if scaled.total_scaled_weight > weight_bound {
        return Err(Error::Invariant(format!(
            "scaled total weight {} exceeds the a priori bound {weight_bound}",
            scaled.total_scaled_weight
        )));
    }

    let solved = (hooks.exact)(&scaled.scaled)?;
    let mut report = instance.report(solved.selected, factor, approx.work + solved.work);
    report.bound_used = Some(bound);
    report.scaling = Some(ScalingSummary {
        z: params.z,
        total_scaled_weight: Some(scaled.total_scaled_weight),
        scaled_weight_bound: weight_bound,
        big_items: scaled.big_items,
    });
    Ok(report)
}

/// Checks `report.value` against a known optimum in exact arithmetic.
pub fn verify_guarantee(
    report: &SolutionReport,
    opt: u128,
    sense: Sense,
    epsilon: Rational,
) -> bool {
    within_guarantee(report.value, opt, sense, epsilon)
}

/// `value <= (1 + eps) * opt` when minimizing, `value >= (1 - eps) * opt` when maximizing.
pub fn within_guarantee(value: u128, opt: u128, sense: Sense, epsilon: Rational) -> bool {
    let (num, den) = (epsilon.numer(), epsilon.denom());
    if num < 0 {
        return false;
    }
    let (num, den) = (num as u128, den as u128);
    // value * den vs (den +/- num) * opt, widened to avoid overflow.
    let lhs = value.checked_mul(den);
    match sense {
        Sense::Minimize => {
            let rhs = (den + num).checked_mul(opt);
            match (lhs, rhs) {
                (Some(l), Some(r)) => l <= r,
                (_, None) => true,
                (None, Some(_)) => false,
            }
        }
        Sense::Maximize => {
            if num >= den {
                return true;
            }
            let rhs = (den - num).checked_mul(opt);
            match (lhs, rhs) {
                (Some(l), Some(r)) => l >= r,
                (None, _) => true,
                (Some(_), None) => false,
            }
        }
    }
}
