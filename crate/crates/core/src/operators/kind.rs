use std::fmt;

use crate::algebra::{CoeffTable, RingElement};
use crate::error::{CoreError, Result};

/// Which banded Hessenberg operator to read entries from.
///
/// All three share the band profile: ones on the superdiagonal, the
/// coefficient sequences on the main diagonal and the `p` subdiagonals.
///
/// - `Forward(q)`: the one-sided operator with column `j` carrying
///   `a_{j+q}^(k)` (deleting `q` leading rows and columns of the base
///   matrix);
/// - `Reflected(q)`: the one-sided operator with column `j` carrying
///   `a_{-k-q-j}^(k)`, which drives the below-axis path families;
/// - `TwoSided`: columns indexed over all integers with `a_j^(k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    Forward(u32),
    Reflected(u32),
    TwoSided,
}

impl OperatorKind {
    pub fn is_two_sided(&self) -> bool {
        matches!(self, OperatorKind::TwoSided)
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorKind::Forward(q) => write!(f, "forward({q})"),
            OperatorKind::Reflected(q) => write!(f, "reflected({q})"),
            OperatorKind::TwoSided => write!(f, "two-sided"),
        }
    }
}

/// Read-only entry accessor for one operator over one coefficient table.
#[derive(Debug, Clone, Copy)]
pub struct BandedMatrixView<'a> {
    kind: OperatorKind,
    table: &'a CoeffTable,
}

impl<'a> BandedMatrixView<'a> {
    pub fn new(kind: OperatorKind, table: &'a CoeffTable) -> Self {
        BandedMatrixView { kind, table }
    }

    pub fn kind(&self) -> OperatorKind {
        self.kind
    }

    pub fn table(&self) -> &'a CoeffTable {
        self.table
    }

    /// Matrix entry at `(row, col)`. One-sided kinds reject negative
    /// indices; outside the band everything is zero.
    pub fn entry(&self, row: i64, col: i64) -> Result<RingElement> {
        if !self.kind.is_two_sided() && (row < 0 || col < 0) {
            return Err(CoreError::domain(
                "one-sided operator indices must be nonnegative",
            ));
        }
        if row == col - 1 {
            return Ok(self.table.one());
        }
        let band = row - col;
        if band < 0 || band > i64::from(self.table.p()) {
            return Ok(self.table.zero());
        }
        let k = band as u8;
        match self.kind {
            OperatorKind::Forward(q) => self.table.coeff(k, col + i64::from(q)),
            OperatorKind::Reflected(q) => {
                self.table.coeff(k, -i64::from(k) - i64::from(q) - col)
            }
            OperatorKind::TwoSided => self.table.coeff(k, col),
        }
    }

    /// Dense `n x n` leading principal truncation (`TwoSided` is truncated
    /// on indices `0..n` as well).
    pub fn truncation(&self, n: usize) -> Result<Vec<Vec<RingElement>>> {
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                row.push(self.entry(i as i64, j as i64)?);
            }
            rows.push(row);
        }
        Ok(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{VariableId, WeightPoly};

    fn sym(k: u8, n: i64) -> RingElement {
        RingElement::Symbolic(WeightPoly::var(VariableId::new(k, n)))
    }

    #[test]
    fn forward_band_entries() {
        let table = CoeffTable::symbolic(2);
        let h = BandedMatrixView::new(OperatorKind::Forward(0), &table);
        assert!(h.entry(0, 1).unwrap().is_one());
        assert_eq!(h.entry(0, 0).unwrap(), sym(0, 0));
        assert_eq!(h.entry(2, 0).unwrap(), sym(2, 0));
        assert_eq!(h.entry(3, 1).unwrap(), sym(2, 1));
        assert!(h.entry(0, 2).unwrap().is_zero());
        assert!(h.entry(3, 0).unwrap().is_zero());
    }

    #[test]
    fn forward_shift_offsets_columns() {
        let table = CoeffTable::symbolic(2);
        let h = BandedMatrixView::new(OperatorKind::Forward(3), &table);
        assert_eq!(h.entry(0, 0).unwrap(), sym(0, 3));
        assert_eq!(h.entry(2, 1).unwrap(), sym(1, 4));
    }

    #[test]
    fn reflected_runs_into_negative_offsets() {
        let table = CoeffTable::symbolic(2);
        let b = BandedMatrixView::new(OperatorKind::Reflected(0), &table);
        assert_eq!(b.entry(0, 0).unwrap(), sym(0, 0));
        assert_eq!(b.entry(2, 0).unwrap(), sym(2, -2));
        assert_eq!(b.entry(3, 1).unwrap(), sym(2, -3));
        let bq = BandedMatrixView::new(OperatorKind::Reflected(2), &table);
        assert_eq!(bq.entry(0, 0).unwrap(), sym(0, -2));
    }

    #[test]
    fn two_sided_accepts_negative_indices() {
        let table = CoeffTable::symbolic(1);
        let w = BandedMatrixView::new(OperatorKind::TwoSided, &table);
        assert_eq!(w.entry(-2, -2).unwrap(), sym(0, -2));
        assert!(w.entry(-3, -2).unwrap().is_one());
        let h = BandedMatrixView::new(OperatorKind::Forward(0), &table);
        assert!(h.entry(-1, 0).is_err());
    }
}
