//! Acceptance criteria, one test per criterion. Run with
//! `cargo test -p fptas-cli --test acceptance -- --nocapture --test-threads 1`
//! to see the PASS/FAIL line of each.

use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use fptas_core::knapsack::{
    approx2_min, approx_half_max, brute_force_max, brute_force_min, exact_dp_max, exact_dp_min,
    fptas_max, fptas_min, max_knapsack, min_knapsack, MaxKnapsack, MinKnapsack,
};
use fptas_core::{
    bench_compare, compute_scale, scaled_weight_bound, small_corpus, AnyInstance, BenchConfig,
    MetricsRow, ProblemKind, Rational, Sense, SolutionReport,
};

const CORPUS_SIZE: usize = 1000;
const CORPUS_SEED: u64 = 20_240_601;

fn r(n: i128, d: i128) -> Rational {
    Rational::new(n, d).unwrap()
}

fn report(criterion: u32, title: &str, failures: &[String], detail: &str) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("[criterion {criterion}] {status} {title}: {detail}");
    for f in failures.iter().take(10) {
        println!("    {f}");
    }
    assert!(
        failures.is_empty(),
        "criterion {criterion} failed: {} violations",
        failures.len()
    );
}

struct Corpus {
    min: Vec<(MinKnapsack, SolutionReport)>,
    max: Vec<(MaxKnapsack, SolutionReport)>,
    brute_force_time: Duration,
}

/// Both corpora with their brute-force optima, computed once.
fn corpus() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let start = Instant::now();
        let min = small_corpus(ProblemKind::MinKp, CORPUS_SIZE, CORPUS_SEED)
            .unwrap()
            .into_iter()
            .map(|i| match i {
                AnyInstance::MinKp(m) => {
                    let opt = brute_force_min(&m).unwrap();
                    (m, opt)
                }
                AnyInstance::MaxKp(_) => unreachable!(),
            })
            .collect();
        let max = small_corpus(ProblemKind::MaxKp, CORPUS_SIZE, CORPUS_SEED + 1)
            .unwrap()
            .into_iter()
            .map(|i| match i {
                AnyInstance::MaxKp(m) => {
                    let opt = brute_force_max(&m).unwrap();
                    (m, opt)
                }
                AnyInstance::MinKp(_) => unreachable!(),
            })
            .collect();
        Corpus {
            min,
            max,
            brute_force_time: start.elapsed(),
        }
    })
}

// value <= (1 + eps) opt, cross-multiplied
fn within_min(value: u128, opt: u128, eps: Rational) -> bool {
    let (p, q) = (eps.numer() as u128, eps.denom() as u128);
    value * q <= (q + p) * opt
}

// value >= (1 - eps) opt, cross-multiplied
fn within_max(value: u128, opt: u128, eps: Rational) -> bool {
    let (p, q) = (eps.numer() as u128, eps.denom() as u128);
    value * q >= (q - p) * opt
}

const EPS_MIN: [(i128, i128); 4] = [(1, 1), (1, 2), (1, 4), (1, 10)];
// epsilon = 1 is outside the maximization domain (0 < eps < 1)
const EPS_MAX: [(i128, i128); 3] = [(1, 2), (1, 4), (1, 10)];

struct FptasRuns {
    failures: Vec<String>,
    runs: usize,
    /// (label, W', bound) for every scaled instance built.
    scaled: Vec<(String, u128, u128)>,
}

fn fptas_runs() -> &'static FptasRuns {
    static RUNS: OnceLock<FptasRuns> = OnceLock::new();
    RUNS.get_or_init(|| {
        let corpus = corpus();
        let mut failures = Vec::new();
        let mut scaled = Vec::new();
        let mut runs = 0;
        for (k, (inst, opt)) in corpus.min.iter().enumerate() {
            for (p, q) in EPS_MIN {
                let eps = r(p, q);
                runs += 1;
                let rep = fptas_min(inst, eps).unwrap();
                if !rep.feasible || !within_min(rep.value, opt.value, eps) {
                    failures.push(format!(
                        "minkp #{k} eps={eps}: {} vs OPT {}",
                        rep.value, opt.value
                    ));
                }
                if let Some(s) = &rep.scaling {
                    if let Some(w) = s.total_scaled_weight {
                        let bound =
                            scaled_weight_bound(Sense::Minimize, inst.len(), eps, r(2, 1)).unwrap();
                        scaled.push((format!("minkp #{k} eps={eps}"), w, bound));
                    }
                }
            }
        }
        for (k, (inst, opt)) in corpus.max.iter().enumerate() {
            for (p, q) in EPS_MAX {
                let eps = r(p, q);
                runs += 1;
                let rep = fptas_max(inst, eps).unwrap();
                if !rep.feasible || !within_max(rep.value, opt.value, eps) {
                    failures.push(format!(
                        "maxkp #{k} eps={eps}: {} vs OPT {}",
                        rep.value, opt.value
                    ));
                }
                if let Some(s) = &rep.scaling {
                    if let Some(w) = s.total_scaled_weight {
                        let bound =
                            scaled_weight_bound(Sense::Maximize, inst.len(), eps, r(1, 2)).unwrap();
                        scaled.push((format!("maxkp #{k} eps={eps}"), w, bound));
                    }
                }
            }
        }
        FptasRuns {
            failures,
            runs,
            scaled,
        }
    })
}

struct BenchRun {
    rows: Vec<MetricsRow>,
    elapsed: Duration,
}

fn quadratic_bench() -> &'static BenchRun {
    static BENCH: OnceLock<BenchRun> = OnceLock::new();
    BENCH.get_or_init(|| {
        let config = BenchConfig::new(
            ProblemKind::MinKp,
            vec![100],
            vec![r(1, 10)],
            1_000_000,
            vec![1, 2, 3],
        );
        let start = Instant::now();
        let rows = bench_compare(&config).unwrap();
        BenchRun {
            rows,
            elapsed: start.elapsed(),
        }
    })
}

#[test]
fn criterion_1_exact_dp_matches_brute_force() {
    let corpus = corpus();
    let start = Instant::now();
    let mut failures = Vec::new();
    for (k, (inst, opt)) in corpus.min.iter().enumerate() {
        let got = exact_dp_min(inst).unwrap();
        if got.value != opt.value || !got.feasible {
            failures.push(format!(
                "minkp #{k}: DP {} vs brute force {}",
                got.value, opt.value
            ));
        }
    }
    for (k, (inst, opt)) in corpus.max.iter().enumerate() {
        let got = exact_dp_max(inst).unwrap();
        if got.value != opt.value || !got.feasible {
            failures.push(format!(
                "maxkp #{k}: DP {} vs brute force {}",
                got.value, opt.value
            ));
        }
    }
    let elapsed = start.elapsed() + corpus.brute_force_time;
    if elapsed >= Duration::from_secs(60) {
        failures.push(format!("took {elapsed:?}, limit 60s"));
    }
    report(
        1,
        "exact DP equals brute force",
        &failures,
        &format!(
            "{} + {} instances in {elapsed:?}",
            corpus.min.len(),
            corpus.max.len()
        ),
    );
}

#[test]
fn criterion_2_approximation_ratios() {
    let corpus = corpus();
    let mut failures = Vec::new();
    for (k, (inst, opt)) in corpus.min.iter().enumerate() {
        let ub = approx2_min(inst).unwrap();
        // 1 <= UB / OPT <= 2
        if !ub.feasible || ub.value < opt.value || ub.value > 2 * opt.value {
            failures.push(format!("minkp #{k}: UB {} vs OPT {}", ub.value, opt.value));
        }
    }
    for (k, (inst, opt)) in corpus.max.iter().enumerate() {
        let lb = approx_half_max(inst).unwrap();
        // 1/2 <= LB / OPT <= 1
        if !lb.feasible || lb.value > opt.value || 2 * lb.value < opt.value {
            failures.push(format!("maxkp #{k}: LB {} vs OPT {}", lb.value, opt.value));
        }
    }
    report(
        2,
        "approximation ratios within [1, 2] and [1/2, 1]",
        &failures,
        &format!("{} instances", corpus.min.len() + corpus.max.len()),
    );
}

#[test]
fn criterion_3_fptas_guarantee() {
    let runs = fptas_runs();
    report(
        3,
        "FPTAS within (1 + eps) OPT / (1 - eps) OPT",
        &runs.failures,
        &format!("{} runs", runs.runs),
    );
}

#[test]
fn criterion_4_scaled_weight_bounds() {
    let runs = fptas_runs();
    let bench = quadratic_bench();
    let mut failures: Vec<String> = runs
        .scaled
        .iter()
        .filter(|(_, w, bound)| w > bound)
        .map(|(label, w, bound)| format!("{label}: W' = {w} > {bound}"))
        .collect();
    let mut checked = runs.scaled.len();
    for row in &bench.rows {
        let expected =
            scaled_weight_bound(Sense::Minimize, row.n, r(row.eps_num, row.eps_den), r(2, 1))
                .unwrap();
        if row.scaled_weight_bound as u128 != expected {
            failures.push(format!(
                "seed {}: reported bound {} != {expected}",
                row.seed, row.scaled_weight_bound
            ));
        }
        match row.total_scaled_weight {
            Some(w) if w <= row.scaled_weight_bound => checked += 1,
            Some(w) => failures.push(format!(
                "bench seed {}: W' = {w} > {}",
                row.seed, row.scaled_weight_bound
            )),
            None => failures.push(format!("bench seed {}: no scaled instance built", row.seed)),
        }
    }
    report(
        4,
        "W' within its a priori bound",
        &failures,
        &format!("{checked} scaled instances"),
    );
}

#[test]
fn criterion_5_quadratic_improvement() {
    let bench = quadratic_bench();
    let mut failures = Vec::new();
    let mut worst = 0f64;
    for row in &bench.rows {
        let fptas = row.cells_fptas as u128 + row.approx_steps as u128;
        let exact = row.cells_exact as u128;
        // fptas / exact < 1/10
        if fptas * 10 >= exact {
            failures.push(format!("seed {}: {fptas} vs {exact} cells", row.seed));
        }
        worst = worst.max(fptas as f64 / exact as f64);
        if row.value_fptas as u128 * 10 > 11 * row.value_exact as u128 {
            failures.push(format!(
                "seed {}: value {} vs OPT {}",
                row.seed, row.value_fptas, row.value_exact
            ));
        }
    }
    if bench.rows.len() != 3 {
        failures.push(format!("expected 3 rows, got {}", bench.rows.len()));
    }
    if bench.elapsed >= Duration::from_secs(300) {
        failures.push(format!("took {:?}, limit 300s", bench.elapsed));
    }
    report(
        5,
        "FPTAS work below 1/10 of exact DP work (n = 100, w <= 10^6, eps = 1/10)",
        &failures,
        &format!("worst ratio {worst:.2e}, {:?}", bench.elapsed),
    );
}

#[test]
fn criterion_6_formula_substitutions() {
    let mut failures = Vec::new();
    let checks: [(&str, Rational, Rational); 2] = [
        (
            "min scale",
            compute_scale(Sense::Minimize, 4, r(1, 2), r(2, 1), 32)
                .unwrap()
                .z,
            r(2, 1),
        ),
        (
            "max scale",
            compute_scale(Sense::Maximize, 4, r(1, 2), r(1, 2), 16)
                .unwrap()
                .z,
            r(2, 1),
        ),
    ];
    for (name, got, want) in checks {
        if got != want {
            failures.push(format!("{name}: {got} != {want}"));
        }
    }
    let bounds = [
        (
            "min bound",
            scaled_weight_bound(Sense::Minimize, 4, r(1, 2), r(2, 1)).unwrap(),
            84,
        ),
        (
            "max bound",
            scaled_weight_bound(Sense::Maximize, 4, r(1, 2), r(1, 2)).unwrap(),
            68,
        ),
    ];
    for (name, got, want) in bounds {
        if got != want {
            failures.push(format!("{name}: {got} != {want}"));
        }
    }
    report(
        6,
        "worked scale and bound values",
        &failures,
        "Z = 2, 84, Z = 2, 68",
    );
}

#[test]
fn criterion_7_big_items_excluded() {
    let mut failures = Vec::new();
    let mut cases = 0;
    let eps_all = [r(1, 1), r(1, 2), r(1, 4), r(1, 10)];

    // minimization: item 0 is heavier than the 2-approximation's UB
    let min_cases = [
        min_knapsack(&[(1000, 50), (10, 20), (12, 20), (9, 15)], 50).unwrap(),
        min_knapsack(&[(5, 3), (400, 100), (6, 4), (7, 5)], 10).unwrap(),
        min_knapsack(&[(3, 1), (3, 1), (3, 1), (3, 1), (90, 4)], 4).unwrap(),
    ];
    for (k, inst) in min_cases.iter().enumerate() {
        let ub = approx2_min(inst).unwrap().value;
        let big: Vec<usize> = inst
            .items()
            .filter(|&(_, w)| w as u128 > ub)
            .map(|(i, _)| i)
            .collect();
        if big.is_empty() {
            failures.push(format!("min case {k}: no item exceeds UB {ub}"));
        }
        for eps in eps_all {
            cases += 1;
            let rep = fptas_min(inst, eps).unwrap();
            if rep.selected.iter().any(|i| big.contains(i)) {
                failures.push(format!(
                    "min case {k} eps={eps}: selected {:?} contains {big:?}",
                    rep.selected
                ));
            }
        }
    }

    // maximization: item with w > LB / rho = 2 LB
    let max_cases = [
        max_knapsack(&[(500, 30), (10, 5), (12, 6), (7, 4)], 15).unwrap(),
        max_knapsack(&[(4, 2), (5, 3), (1000, 9), (6, 3)], 8).unwrap(),
        max_knapsack(&[(2, 1), (2, 1), (77, 3)], 2).unwrap(),
    ];
    for (k, inst) in max_cases.iter().enumerate() {
        let lb = approx_half_max(inst).unwrap().value;
        let big: Vec<usize> = inst
            .items()
            .filter(|&(_, w)| w as u128 > 2 * lb)
            .map(|(i, _)| i)
            .collect();
        if big.is_empty() {
            failures.push(format!(
                "max case {k}: no item exceeds LB / rho = {}",
                2 * lb
            ));
        }
        // no feasible subset contains a big item
        for mask in 0u32..(1 << inst.len()) {
            let subset: Vec<usize> = (0..inst.len()).filter(|&i| mask >> i & 1 == 1).collect();
            if inst.is_feasible(&subset) && subset.iter().any(|i| big.contains(i)) {
                failures.push(format!(
                    "max case {k}: feasible subset {subset:?} holds a big item"
                ));
            }
        }
        for eps in &eps_all[1..] {
            cases += 1;
            let rep = fptas_max(inst, *eps).unwrap();
            if rep.selected.iter().any(|i| big.contains(i)) {
                failures.push(format!(
                    "max case {k} eps={eps}: selected {:?} contains {big:?}",
                    rep.selected
                ));
            }
        }
    }
    report(
        7,
        "big items never selected",
        &failures,
        &format!("{cases} directed runs"),
    );
}

fn run_cli(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_fptas"))
        .args(args)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "fptas {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

#[test]
fn criterion_8_deterministic_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let mut failures = Vec::new();
    let mut outputs = Vec::new();
    for run in 0..2 {
        let gen_path = dir.path().join(format!("gen{run}.txt"));
        let bench_path = dir.path().join(format!("bench{run}.csv"));
        run_cli(&[
            "gen",
            "--kind",
            "minkp",
            "--n",
            "50",
            "--wmax",
            "1000",
            "--smax",
            "50",
            "--tight",
            "1/2",
            "--seed",
            "42",
            "--out",
            gen_path.to_str().unwrap(),
        ]);
        run_cli(&[
            "bench",
            "--kind",
            "maxkp",
            "--n-list",
            "10,20",
            "--eps-list",
            "1/2,1/10",
            "--wmax",
            "1000",
            "--seeds",
            "1,2",
            "--out",
            bench_path.to_str().unwrap(),
        ]);
        outputs.push((
            std::fs::read(gen_path).unwrap(),
            std::fs::read(bench_path).unwrap(),
        ));
    }
    if outputs[0].0 != outputs[1].0 {
        failures.push("gen outputs differ".to_string());
    }
    if outputs[0].1 != outputs[1].1 {
        failures.push("bench outputs differ".to_string());
    }
    let stdout_runs: Vec<Vec<u8>> = (0..2)
        .map(|_| {
            run_cli(&[
                "gen", "--kind", "maxkp", "--n", "8", "--wmax", "9", "--smax", "9", "--seed", "7",
            ])
        })
        .collect();
    if stdout_runs[0] != stdout_runs[1] {
        failures.push("gen to stdout differs".to_string());
    }
    report(
        8,
        "gen and bench are byte-reproducible",
        &failures,
        "2 runs each",
    );
}
