//! The verification harness: maps suite names onto the identity checkers,
//! optionally fanning independent suites out over a capped thread pool,
//! and turns the sorted reports into text or JSON plus an exit code.

use std::process::ExitCode;

use lukas_core::vcf::{
    all_passed, verify_approximation_order, verify_ascending_identities, verify_counts,
    verify_finite_cf, verify_genetic_sums, verify_moment_oracle, verify_reflection,
    verify_restricted_identities, verify_tail_chain, verify_two_sided_identities,
    IdentityReport, Tamper,
};
use lukas_core::{CoeffMode, CoeffTable};
use serde_json::json;

use crate::config::{ConfigError, RunConfig};

const SUITES: &[&str] = &[
    "ascending",
    "two-sided",
    "restricted",
    "tail-chain",
    "finite-cf",
    "moment-oracle",
    "genetic",
    "counts",
    "reflection",
    "approximation-order",
];

/// Thread cap: LUKAS_VCF_THREADS, defaulting to the available parallelism.
fn thread_cap() -> usize {
    std::env::var("LUKAS_VCF_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

struct SuiteJob {
    name: &'static str,
    table: CoeffTable,
    trunc: i64,
    tamper: Tamper,
    p: u8,
}

fn run_suite(job: &SuiteJob) -> lukas_core::Result<Vec<IdentityReport>> {
    // Moment and path scales are kept at desk size; the acceptance tests
    // in the library pin the deeper configurations.
    let n_small = job.trunc.clamp(1, 8) as u32;
    match job.name {
        "ascending" => verify_ascending_identities(job.trunc, &job.table, job.tamper),
        "two-sided" => verify_two_sided_identities(job.trunc, &job.table, job.tamper),
        "restricted" => verify_restricted_identities(job.trunc, &job.table, job.tamper),
        "tail-chain" => verify_tail_chain(
            2 * u32::from(job.p) + 2,
            job.trunc,
            &job.table,
            job.tamper,
        ),
        "finite-cf" => verify_finite_cf(4, job.trunc, &job.table, job.tamper),
        "moment-oracle" => verify_moment_oracle(n_small.min(6), 2, &job.table, job.tamper),
        "genetic" => verify_genetic_sums(3, 2, &job.table, job.tamper),
        "counts" => verify_counts(4, job.p, job.tamper),
        "reflection" => verify_reflection(10, job.p, job.tamper),
        "approximation-order" => verify_approximation_order(6, &job.table, job.tamper),
        other => Err(lukas_core::CoreError::domain(format!(
            "unknown suite {other:?}"
        ))),
    }
}

fn needs_bidiagonal(name: &str) -> bool {
    matches!(name, "restricted" | "genetic")
}

pub fn run(cfg: &RunConfig, suite: &str, tamper: bool) -> Result<ExitCode, ConfigError> {
    let names: Vec<&'static str> = if suite == "all" {
        SUITES.to_vec()
    } else {
        match SUITES.iter().find(|s| **s == suite) {
            Some(s) => vec![s],
            None => {
                return Err(ConfigError(format!(
                    "unknown suite {suite:?}; expected one of {} or all",
                    SUITES.join(", ")
                )))
            }
        }
    };
    let tamper = if tamper { Tamper::Perturb } else { Tamper::None };

    let jobs: Vec<SuiteJob> = names
        .iter()
        .map(|name| {
            Ok(SuiteJob {
                name,
                table: cfg.table(needs_bidiagonal(name))?,
                trunc: cfg.trunc,
                tamper,
                p: cfg.p,
            })
        })
        .collect::<Result<_, ConfigError>>()?;

    let mut results: Vec<(usize, lukas_core::Result<Vec<IdentityReport>>)> = Vec::new();
    let cap = thread_cap().max(1);
    if cap == 1 || jobs.len() == 1 {
        for (i, job) in jobs.iter().enumerate() {
            results.push((i, run_suite(job)));
        }
    } else {
        // Run at most `cap` suites at a time; join each batch before the
        // next so the cap really bounds concurrency.
        for (batch_index, batch) in jobs.chunks(cap).enumerate() {
            let base = batch_index * cap;
            std::thread::scope(|scope| {
                let handles: Vec<_> = batch
                    .iter()
                    .enumerate()
                    .map(|(offset, job)| (base + offset, scope.spawn(move || run_suite(job))))
                    .collect();
                for (i, handle) in handles {
                    results.push((i, handle.join().expect("suite thread panicked")));
                }
            });
        }
    }
    results.sort_by_key(|(i, _)| *i);

    let mut reports: Vec<IdentityReport> = Vec::new();
    for (i, result) in results {
        let suite_reports =
            result.map_err(|e| ConfigError(format!("suite {}: {e}", names[i])))?;
        reports.extend(suite_reports);
    }
    reports.sort_by(|a, b| a.identity.cmp(&b.identity));

    let passed = all_passed(&reports);
    if cfg.json_output {
        let payload = json!({
            "mode": match cfg.mode {
                CoeffMode::Symbolic => "symbolic",
                CoeffMode::Numeric => "numeric",
            },
            "status": if passed { "pass" } else { "fail" },
            "reports": reports.iter().map(IdentityReport::to_json).collect::<Vec<_>>(),
        });
        println!("{payload}");
    } else {
        for report in &reports {
            println!("{report}");
        }
        println!(
            "{}: {} identities checked",
            if passed { "pass" } else { "FAIL" },
            reports.len()
        );
    }
    Ok(if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
