//! Oracle property checks over a seeded corpus, run by the `selftest` command.

use crate::error::Result;
use crate::format::{AnyInstance, ProblemKind};
use crate::generate::small_corpus;
use crate::instance::{Sense, SolutionReport};
use crate::knapsack::{
    approx2_min, approx_half_max, brute_force_max, brute_force_min, exact_dp_max, exact_dp_min,
    fptas_max, fptas_min,
};
use crate::rational::Rational;
use crate::scaling::within_guarantee;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Tally {
    name: String,
    cases: usize,
    failures: usize,
}

impl Tally {
    fn new(name: impl Into<String>) -> Self {
        Tally {
            name: name.into(),
            cases: 0,
            failures: 0,
        }
    }

    fn record(&mut self, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
        }
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
        }
    }
}

fn ratio_within(value: u128, opt: u128, low: Rational, high: Rational) -> bool {
    if opt == 0 {
        return value == 0;
    }
    match Rational::new(value as i128, opt as i128) {
        Ok(r) => low <= r && r <= high,
        Err(_) => false,
    }
}

fn scaled_within_bound(report: &SolutionReport) -> bool {
    report.scaling.as_ref().is_none_or(|s| {
        s.total_scaled_weight
            .is_none_or(|w| w <= s.scaled_weight_bound)
    })
}

/// Runs every property check on `count` instances of each kind.
pub fn run_selftest(count: usize, seed: u64) -> Result<Vec<CheckOutcome>> {
    let two = Rational::from_integer(2);
    let half = Rational::new(1, 2)?;
    let eps_min = ["1", "1/2", "1/4", "1/10"].map(|s| s.parse::<Rational>());
    let eps_max = ["1/2", "1/4", "1/10"].map(|s| s.parse::<Rational>());

    let mut dp_min = Tally::new("minkp exact DP equals brute force");
    let mut ratio_min = Tally::new("minkp 2-approximation within [1, 2]");
    let mut fp_min = Tally::new("minkp FPTAS within (1 + eps) OPT");
    let mut bound_min = Tally::new("minkp scaled weight within bound");
    for instance in small_corpus(ProblemKind::MinKp, count, seed)? {
        let AnyInstance::MinKp(inst) = instance else {
            continue;
        };
        let opt = match brute_force_min(&inst) {
            Ok(r) => r.value,
            Err(_) => continue,
        };
        dp_min.record(exact_dp_min(&inst).is_ok_and(|r| r.value == opt && r.feasible));
        ratio_min.record(
            approx2_min(&inst)
                .is_ok_and(|r| r.feasible && ratio_within(r.value, opt, Rational::ONE, two)),
        );
        for eps in &eps_min {
            let eps = eps.clone()?;
            let ok = fptas_min(&inst, eps).map(|r| {
                bound_min.record(scaled_within_bound(&r));
                r.feasible && within_guarantee(r.value, opt, Sense::Minimize, eps)
            });
            fp_min.record(ok.unwrap_or(false));
        }
    }

    let mut dp_max = Tally::new("maxkp exact DP equals brute force");
    let mut ratio_max = Tally::new("maxkp 1/2-approximation within [1/2, 1]");
    let mut fp_max = Tally::new("maxkp FPTAS within (1 - eps) OPT");
    let mut bound_max = Tally::new("maxkp scaled weight within bound");
    for instance in small_corpus(ProblemKind::MaxKp, count, seed)? {
        let AnyInstance::MaxKp(inst) = instance else {
            continue;
        };
        let opt = brute_force_max(&inst)?.value;
        dp_max.record(exact_dp_max(&inst).is_ok_and(|r| r.value == opt && r.feasible));
        ratio_max.record(
            approx_half_max(&inst)
                .is_ok_and(|r| r.feasible && ratio_within(r.value, opt, half, Rational::ONE)),
        );
        for eps in &eps_max {
            let eps = eps.clone()?;
            let ok = fptas_max(&inst, eps).map(|r| {
                bound_max.record(scaled_within_bound(&r));
                r.feasible && within_guarantee(r.value, opt, Sense::Maximize, eps)
            });
            fp_max.record(ok.unwrap_or(false));
        }
    }

    Ok([
        dp_min, ratio_min, fp_min, bound_min, dp_max, ratio_max, fp_max, bound_max,
    ]
    .into_iter()
    .map(Tally::finish)
    .collect())
}
