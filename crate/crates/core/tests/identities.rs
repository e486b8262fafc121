//! The identity suites at their stated strongest configurations beyond
//! what the acceptance gate pins: deeper band, deeper truncation, and
//! twenty seeded rational tables per band depth.

mod common;

use lukas_core::vcf::{
    all_passed, verify_ascending_identities, verify_restricted_identities, verify_tail_chain,
    verify_two_sided_identities, IdentityReport, Tamper,
};
use lukas_core::CoeffTable;

fn assert_all(reports: &[IdentityReport], context: &str) {
    for r in reports {
        assert!(
            r.passed(),
            "{context}: {} failed at {:?}",
            r.identity,
            r.failures.first()
        );
    }
    assert!(all_passed(reports));
}

#[test]
fn tail_chain_across_the_regime_boundary_all_bands() {
    // Stages 0 through 2p + 2 cross the switch from padded to saturated
    // coefficient rows.
    for p in 1..=3u8 {
        let table = CoeffTable::symbolic(p);
        let reports = verify_tail_chain(2 * u32::from(p) + 2, 10, &table, Tamper::None).unwrap();
        assert_all(&reports, &format!("tail chain p={p}"));
    }
}

#[test]
fn restricted_identities_symbolic_to_depth_nine() {
    for p in 1..=3u8 {
        let table = CoeffTable::symbolic_bidiagonal(p);
        let reports = verify_restricted_identities(9, &table, Tamper::None).unwrap();
        assert_all(&reports, &format!("restricted p={p}"));
    }
}

#[test]
fn ascending_identities_on_twenty_random_tables_per_band() {
    for p in 1..=3u8 {
        for seed in 100..120u64 {
            let table = CoeffTable::random(p, (-26, 26), seed).unwrap();
            let reports = verify_ascending_identities(10, &table, Tamper::None).unwrap();
            assert_all(&reports, &format!("ascending p={p} seed={seed}"));
        }
    }
}

#[test]
fn two_sided_identities_on_twenty_random_tables_small_bands() {
    for p in 1..=2u8 {
        for seed in 200..220u64 {
            let table = CoeffTable::random(p, (-26, 26), seed).unwrap();
            let reports = verify_two_sided_identities(10, &table, Tamper::None).unwrap();
            assert_all(&reports, &format!("two-sided p={p} seed={seed}"));
        }
    }
}

#[test]
fn restricted_identities_on_twenty_random_tables_per_band() {
    for p in 1..=3u8 {
        for seed in 300..320u64 {
            let table = CoeffTable::random_bidiagonal(p, (-26, 26), seed).unwrap();
            let reports = verify_restricted_identities(10, &table, Tamper::None).unwrap();
            assert_all(&reports, &format!("restricted p={p} seed={seed}"));
        }
    }
}
