//! Counted-work comparison between the exact DP on the original weights and
//! the scaling FPTAS, emitted as CSV.

use std::io::Write;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::{AnyInstance, ProblemKind};
use crate::generate::{generate_instance, GeneratorConfig};
use crate::instance::{Sense, SolutionReport};
use crate::knapsack::{
    exact_value_max, exact_value_min, fptas_max, fptas_min, MAX_HOOKS, MIN_HOOKS,
};
use crate::rational::Rational;
use crate::scaling::{scaled_weight_bound, within_guarantee};

/// Work done by a single solver run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorkMetrics {
    pub n: usize,
    pub total_weight: u128,
    pub total_scaled_weight: Option<u128>,
    pub epsilon: Option<Rational>,
    pub dp_cells: u128,
    pub approx_steps: u64,
    /// Text length of the feasibility structure.
    pub structure_bytes: usize,
    /// Informational only, never compared.
    pub wall_time_ms: u128,
}

impl WorkMetrics {
    pub fn from_report(
        instance: &AnyInstance,
        report: &SolutionReport,
        epsilon: Option<Rational>,
        wall_time_ms: u128,
    ) -> Self {
        WorkMetrics {
            n: instance.len(),
            total_weight: instance.total_weight(),
            total_scaled_weight: report.scaling.as_ref().and_then(|s| s.total_scaled_weight),
            epsilon,
            dp_cells: report.work.dp_cells,
            approx_steps: report.work.approx_steps,
            structure_bytes: instance.structure_bytes(),
            wall_time_ms,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    pub kind: ProblemKind,
    pub n_list: Vec<usize>,
    pub eps_list: Vec<Rational>,
    pub weight_max: u64,
    pub size_max: u64,
    pub tightness: Rational,
    pub seeds: Vec<u64>,
    /// Largest baseline table, in cells, the comparison is allowed to build.
    pub cell_budget: u128,
    /// Record wall-clock times. Off by default so output is reproducible.
    pub timing: bool,
}

impl BenchConfig {
    pub const DEFAULT_SIZE_MAX: u64 = 100;
    pub const DEFAULT_CELL_BUDGET: u128 = 10_000_000_000;

    pub fn new(
        kind: ProblemKind,
        n_list: Vec<usize>,
        eps_list: Vec<Rational>,
        weight_max: u64,
        seeds: Vec<u64>,
    ) -> Self {
        BenchConfig {
            kind,
            n_list,
            eps_list,
            weight_max,
            size_max: Self::DEFAULT_SIZE_MAX,
            tightness: Rational::new_raw(1, 2),
            seeds,
            cell_budget: Self::DEFAULT_CELL_BUDGET,
            timing: false,
        }
    }
}

/// One CSV row: a baseline exact run paired with one FPTAS run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetricsRow {
    pub kind: String,
    pub n: usize,
    pub eps_num: i128,
    pub eps_den: i128,
    pub seed: u64,
    #[serde(rename = "W")]
    pub total_weight: u64,
    /// Empty when the FPTAS did not build a scaled instance.
    #[serde(rename = "Wprime")]
    pub total_scaled_weight: Option<u64>,
    #[serde(rename = "Wprime_bound")]
    pub scaled_weight_bound: u64,
    pub cells_exact: u64,
    pub cells_fptas: u64,
    pub approx_steps: u64,
    pub value_exact: u64,
    pub value_fptas: u64,
    pub opt_ratio_num: u64,
    pub opt_ratio_den: u64,
    pub time_exact_ms: u64,
    pub time_fptas_ms: u64,
}

fn narrow(v: u128) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::Overflow("writing a metrics column"))
}

fn elapsed_ms(start: Option<Instant>) -> u64 {
    start.map_or(0, |s| s.elapsed().as_millis() as u64)
}

/// Runs the exact baseline and the FPTAS for every (n, seed, epsilon).
///
/// Rows come back sorted by (n, epsilon, seed). Fails with
/// `BudgetExceeded` before building any baseline table larger than
/// `config.cell_budget`, and with `Invariant` if a scaled instance breaks
/// its W' bound or a solution breaks its guarantee.
pub fn bench_compare(config: &BenchConfig) -> Result<Vec<MetricsRow>> {
    let (sense, rho) = match config.kind {
        ProblemKind::MinKp => (Sense::Minimize, MIN_HOOKS.rho),
        ProblemKind::MaxKp => (Sense::Maximize, MAX_HOOKS.rho),
    };
    let mut rows = Vec::new();
    for &n in &config.n_list {
        let bounds = config
            .eps_list
            .iter()
            .map(|&eps| scaled_weight_bound(sense, n, eps, rho))
            .collect::<Result<Vec<_>>>()?;
        for &seed in &config.seeds {
            let instance = generate_instance(&GeneratorConfig {
                kind: config.kind,
                n,
                weight_max: config.weight_max,
                size_max: config.size_max,
                tightness: config.tightness,
                seed,
            })?;

            let start = config.timing.then(Instant::now);
            let (value_exact, exact_work) = match &instance {
                AnyInstance::MinKp(i) => exact_value_min(i, Some(config.cell_budget))?,
                AnyInstance::MaxKp(i) => exact_value_max(i, Some(config.cell_budget))?,
            };
            let time_exact_ms = elapsed_ms(start);

            for (&eps, &bound) in config.eps_list.iter().zip(&bounds) {
                let start = config.timing.then(Instant::now);
                let report = match &instance {
                    AnyInstance::MinKp(i) => fptas_min(i, eps)?,
                    AnyInstance::MaxKp(i) => fptas_max(i, eps)?,
                };
                let time_fptas_ms = elapsed_ms(start);

                let scaled = report.scaling.as_ref().and_then(|s| s.total_scaled_weight);
                if let Some(w) = scaled {
                    if w > bound {
                        return Err(Error::Invariant(format!(
                            "n={n} seed={seed} eps={eps}: W' = {w} exceeds bound {bound}"
                        )));
                    }
                }
                if !report.feasible || !within_guarantee(report.value, value_exact, sense, eps) {
                    return Err(Error::Invariant(format!(
                        "n={n} seed={seed} eps={eps}: value {} misses the guarantee against optimum {value_exact}",
                        report.value
                    )));
                }

                let ratio = if value_exact == 0 {
                    Rational::ONE
                } else {
                    Rational::new(
                        i128::try_from(report.value)
                            .map_err(|_| Error::Overflow("forming the ratio"))?,
                        i128::try_from(value_exact)
                            .map_err(|_| Error::Overflow("forming the ratio"))?,
                    )?
                };

                rows.push(MetricsRow {
                    kind: config.kind.to_string(),
                    n,
                    eps_num: eps.numer(),
                    eps_den: eps.denom(),
                    seed,
                    total_weight: narrow(instance.total_weight())?,
                    total_scaled_weight: scaled.map(narrow).transpose()?,
                    scaled_weight_bound: narrow(bound)?,
                    cells_exact: narrow(exact_work.dp_cells)?,
                    cells_fptas: narrow(report.work.dp_cells)?,
                    approx_steps: report.work.approx_steps,
                    value_exact: narrow(value_exact)?,
                    value_fptas: narrow(report.value)?,
                    opt_ratio_num: ratio.numer() as u64,
                    opt_ratio_den: ratio.denom() as u64,
                    time_exact_ms,
                    time_fptas_ms,
                });
            }
        }
    }
    rows.sort_by_key(|r| (r.n, Rational::new_raw(r.eps_num, r.eps_den), r.seed));
    Ok(rows)
}

/// Writes rows with the fixed header line.
pub fn write_csv<W: Write>(rows: &[MetricsRow], out: W) -> Result<()> {
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    writer.write_record(CSV_HEADER)?;
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush()?;
    Ok(())
}

pub const CSV_HEADER: [&str; 17] = [
    "kind",
    "n",
    "eps_num",
    "eps_den",
    "seed",
    "W",
    "Wprime",
    "Wprime_bound",
    "cells_exact",
    "cells_fptas",
    "approx_steps",
    "value_exact",
    "value_fptas",
    "opt_ratio_num",
    "opt_ratio_den",
    "time_exact_ms",
    "time_fptas_ms",
];
