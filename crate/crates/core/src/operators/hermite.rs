use crate::algebra::CoeffTable;
use crate::error::{CoreError, Result};
use crate::operators::charpoly::char_polys;
use crate::operators::kind::OperatorKind;
use crate::operators::moment::resolvent_series;

/// The guaranteed vanishing order for the defect at size `n` and function
/// index `k`: `floor((n - k) / p)`.
pub fn approximation_order(n: u32, k: u8, p: u8) -> i64 {
    (i64::from(n) - i64::from(k)).div_euclid(i64::from(p))
}

/// Order of the defect `q_n(z) phi_k(z) - q_{n,k+1}(z)` at infinity: the
/// exponent of its first potentially nonzero `z^(-e)` coefficient.
///
/// If every known coefficient vanishes, the first *potentially* nonzero
/// position is just beyond the trusted range and that bound is returned.
/// The resolvent is computed through `n_trunc`, which must reach
/// `n + approximation_order(n, k, p) + 1` for the answer to certify the
/// order property.
pub fn hp_defect_order(n: u32, k: u8, n_trunc: i64, table: &CoeffTable) -> Result<i64> {
    let p = table.p();
    if k >= p {
        return Err(CoreError::domain(format!(
            "function index {k} outside [0, {}]",
            p - 1
        )));
    }
    let pair = char_polys(n, table)?;
    let phi = resolvent_series(OperatorKind::Forward(0), k, n_trunc, table)?;
    let defect = pair
        .q_n()
        .to_series()
        .mul(&phi)?
        .sub(&pair.q_nk(k + 1).to_series())?;
    let required = approximation_order(n, k, p) + 1;
    if defect.valid_to() < required {
        return Err(CoreError::InsufficientValidity {
            needed: required,
            have: defect.valid_to(),
        });
    }
    Ok(match defect.leading() {
        Some((e, _)) => e,
        None => defect.valid_to() + 1,
    })
}
