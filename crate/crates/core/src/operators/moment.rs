use std::collections::BTreeMap;

use crate::algebra::{CoeffTable, RingElement};
use crate::error::{CoreError, Result};
use crate::operators::kind::OperatorKind;
use crate::series::LaurentSeries;

/// `<M^n e_j, e_0>`: apply the operator `n` times to the basis vector and
/// read coordinate zero. The state stays windowed: only finitely many
/// coordinates are nonzero, and coordinates that can no longer reach zero
/// in the remaining applications are dropped.
pub fn moment(kind: OperatorKind, n: u32, j: u8, table: &CoeffTable) -> Result<RingElement> {
    let mut series = moment_prefix(kind, n, j, table)?;
    Ok(series.pop().expect("n+1 values"))
}

/// All moments `<M^t e_j, e_0>` for `t` in `[0, n]` in one sweep.
pub fn moment_prefix(
    kind: OperatorKind,
    n: u32,
    j: u8,
    table: &CoeffTable,
) -> Result<Vec<RingElement>> {
    if j > table.p() {
        return Err(CoreError::domain(format!(
            "basis index {j} outside [0, {}]",
            table.p()
        )));
    }
    let p = i64::from(table.p());
    let mut state: BTreeMap<i64, RingElement> = BTreeMap::new();
    state.insert(i64::from(j), table.one());
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(read_zero(&state, table));
    for t in 0..n {
        let remaining = i64::from(n - t - 1);
        let mut next: BTreeMap<i64, RingElement> = BTreeMap::new();
        for (&i, x) in &state {
            // e_{i-1} part (absent at the one-sided edge i = 0).
            if kind.is_two_sided() || i >= 1 {
                add_into(&mut next, i - 1, x.clone())?;
            }
            // Band part: e_{i+k} with the kind-specific coefficient.
            for k in 0..=table.p() {
                let coeff = match kind {
                    OperatorKind::Forward(q) => table.coeff(k, i + i64::from(q))?,
                    OperatorKind::Reflected(q) => {
                        table.coeff(k, -i64::from(k) - i64::from(q) - i)?
                    }
                    OperatorKind::TwoSided => table.coeff(k, i)?,
                };
                if coeff.is_zero() {
                    continue;
                }
                add_into(&mut next, i + i64::from(k), x.mul(&coeff)?)?;
            }
        }
        // Keep only coordinates that can still reach zero: downward moves
        // cover one unit per application, upward at most p.
        let lo = if kind.is_two_sided() {
            -remaining * p
        } else {
            0
        };
        next.retain(|&i, _| i >= lo && i <= remaining);
        state = next;
        out.push(read_zero(&state, table));
    }
    Ok(out)
}

fn add_into(state: &mut BTreeMap<i64, RingElement>, i: i64, v: RingElement) -> Result<()> {
    use std::collections::btree_map::Entry;
    match state.entry(i) {
        Entry::Vacant(e) => {
            e.insert(v);
        }
        Entry::Occupied(mut e) => {
            let sum = e.get().add(&v)?;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
    Ok(())
}

fn read_zero(state: &BTreeMap<i64, RingElement>, table: &CoeffTable) -> RingElement {
    state.get(&0).cloned().unwrap_or_else(|| table.zero())
}

/// The resolvent series `sum_n <M^n e_j, e_0> z^(-n-1)`, trusted through
/// exponent `n_trunc`.
pub fn resolvent_series(
    kind: OperatorKind,
    j: u8,
    n_trunc: i64,
    table: &CoeffTable,
) -> Result<LaurentSeries> {
    if n_trunc < 1 {
        return Err(CoreError::domain("truncation order must be at least 1"));
    }
    let moments = moment_prefix(kind, (n_trunc - 1) as u32, j, table)?;
    LaurentSeries::from_coeffs(
        table.mode(),
        moments
            .into_iter()
            .enumerate()
            .map(|(n, m)| (n as i64 + 1, m)),
        n_trunc,
    )
}
