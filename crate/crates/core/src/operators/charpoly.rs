use crate::algebra::CoeffTable;
use crate::error::{CoreError, Result};
use crate::series::ZPoly;

/// Characteristic polynomials of the leading `n x n` truncation of the
/// forward operator: `q_n` for the full truncation and `q_{n,k}` for the
/// truncation with the first `k` rows and columns removed.
///
/// For `n < k` the trimmed matrix does not exist; its determinant is taken
/// to be zero, and the empty matrix at `n = k` gives one. That extension
/// is what keeps the simultaneous-approximation order property intact at
/// small `n` (the convergent numerators genuinely vanish there).
#[derive(Debug, Clone, PartialEq)]
pub struct CharPolyPair {
    n: u32,
    q_n: ZPoly,
    q_nk: Vec<ZPoly>,
}

impl CharPolyPair {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// `det(z I_n - H_n)`, monic of degree `n`.
    pub fn q_n(&self) -> &ZPoly {
        &self.q_n
    }

    /// `q_{n,k}` for `k` in `[1, p]`.
    pub fn q_nk(&self, k: u8) -> &ZPoly {
        &self.q_nk[usize::from(k) - 1]
    }

    pub fn trimmed(&self) -> &[ZPoly] {
        &self.q_nk
    }
}

/// Characteristic-polynomial sequence of the forward operator shifted by
/// `shift` rows/columns, computed by the banded three-plus-term recurrence
///
/// `y_{t+1} = (z - a_{t+shift}^(0)) y_t - sum_k a_{t-k+shift}^(k) y_{t-k}`
///
/// with `y_0 = 1` and `y_t = 0` for `t < 0`. Returns `y_0..=y_len`.
fn char_sequence(len: u32, shift: u32, table: &CoeffTable) -> Result<Vec<ZPoly>> {
    let mode = table.mode();
    let mut seq: Vec<ZPoly> = Vec::with_capacity(len as usize + 1);
    seq.push(ZPoly::one(mode));
    for t in 0..i64::from(len) {
        let head = ZPoly::z_minus(&table.coeff(0, t + i64::from(shift))?);
        let mut next = head.mul(&seq[t as usize])?;
        for k in 1..=i64::from(table.p()) {
            if t - k < 0 {
                break;
            }
            let a = table.coeff(k as u8, t - k + i64::from(shift))?;
            let term = seq[(t - k) as usize].scale(&a)?;
            next = next.sub(&term)?;
        }
        seq.push(next);
    }
    Ok(seq)
}

/// `q_n` together with all trimmed `q_{n,k}`, `k` in `[1, p]`.
pub fn char_polys(n: u32, table: &CoeffTable) -> Result<CharPolyPair> {
    if n < 1 {
        return Err(CoreError::domain("truncation size must be at least 1"));
    }
    let q_n = char_sequence(n, 0, table)?.pop().expect("len+1 entries");
    let mut q_nk = Vec::with_capacity(usize::from(table.p()));
    for k in 1..=u32::from(table.p()) {
        if n < k {
            q_nk.push(ZPoly::zero(table.mode()));
        } else {
            q_nk.push(char_sequence(n - k, k, table)?.pop().expect("len+1 entries"));
        }
    }
    Ok(CharPolyPair { n, q_n, q_nk })
}
