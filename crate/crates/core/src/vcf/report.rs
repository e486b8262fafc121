use std::fmt;

use serde_json::{json, Value};

use crate::error::Result;
use crate::series::{common_range, mismatches, LaurentSeries, SeriesVector};

/// Outcome of one identity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportStatus {
    Pass,
    Fail,
}

impl fmt::Display for ReportStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReportStatus::Pass => write!(f, "pass"),
            ReportStatus::Fail => write!(f, "fail"),
        }
    }
}

/// One located mismatch: which vector component (0-based) and which
/// `z^(-exponent)` coefficient disagreed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Failure {
    pub component: usize,
    pub exponent: i64,
}

/// Structured result of checking one identity at one configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub identity: String,
    pub p: u8,
    pub n_trunc: i64,
    pub status: ReportStatus,
    pub failures: Vec<Failure>,
    /// Exponent span actually compared, per component, for transparency
    /// about what the pass certifies.
    pub compared: Vec<(i64, i64)>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == ReportStatus::Pass
    }

    pub fn to_json(&self) -> Value {
        json!({
            "identity": self.identity,
            "p": self.p,
            "N": self.n_trunc,
            "status": self.status.to_string(),
            "failures": self
                .failures
                .iter()
                .map(|f| json!({"component": f.component, "exponent": f.exponent}))
                .collect::<Vec<_>>(),
            "compared": self
                .compared
                .iter()
                .map(|&(lo, hi)| json!([lo, hi]))
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<44} p={} N={:<3} {}",
            self.identity, self.p, self.n_trunc, self.status
        )?;
        if !self.failures.is_empty() {
            let first = &self.failures[0];
            write!(
                f,
                "  ({} mismatches, first at component {} exponent {})",
                self.failures.len(),
                first.component,
                first.exponent
            )?;
        }
        Ok(())
    }
}

/// Compare two series as one component of an identity.
pub fn check_series(
    identity: impl Into<String>,
    p: u8,
    n_trunc: i64,
    lhs: &LaurentSeries,
    rhs: &LaurentSeries,
) -> Result<IdentityReport> {
    let bad = mismatches(lhs, rhs)?;
    let range = common_range(lhs, rhs);
    Ok(IdentityReport {
        identity: identity.into(),
        p,
        n_trunc,
        status: if bad.is_empty() {
            ReportStatus::Pass
        } else {
            ReportStatus::Fail
        },
        failures: bad
            .into_iter()
            .map(|exponent| Failure {
                component: 0,
                exponent,
            })
            .collect(),
        compared: vec![range],
    })
}

/// Compare two series vectors component-wise.
pub fn check_vectors(
    identity: impl Into<String>,
    p: u8,
    n_trunc: i64,
    lhs: &SeriesVector,
    rhs: &SeriesVector,
) -> Result<IdentityReport> {
    let mut failures = Vec::new();
    let mut compared = Vec::with_capacity(lhs.len());
    for i in 0..lhs.len() {
        compared.push(common_range(lhs.component(i), rhs.component(i)));
        for exponent in mismatches(lhs.component(i), rhs.component(i))? {
            failures.push(Failure {
                component: i,
                exponent,
            });
        }
    }
    Ok(IdentityReport {
        identity: identity.into(),
        p,
        n_trunc,
        status: if failures.is_empty() {
            ReportStatus::Pass
        } else {
            ReportStatus::Fail
        },
        failures,
        compared,
    })
}

/// Aggregate point failures (component, exponent) collected by a
/// non-series check such as the moment oracle.
pub fn report_from_failures(
    identity: impl Into<String>,
    p: u8,
    n_trunc: i64,
    failures: Vec<Failure>,
) -> IdentityReport {
    IdentityReport {
        identity: identity.into(),
        p,
        n_trunc,
        status: if failures.is_empty() {
            ReportStatus::Pass
        } else {
            ReportStatus::Fail
        },
        failures,
        compared: Vec::new(),
    }
}

/// True when every report passed.
pub fn all_passed(reports: &[IdentityReport]) -> bool {
    reports.iter().all(IdentityReport::passed)
}
