use std::fmt;

use serde::{Deserialize, Serialize};

/// One coefficient symbol `a_n^(k)`: diagonal `k` in `[0, p]`, offset `n`.
///
/// Offsets may be negative; the reflected families and the two-sided
/// operator draw on both halves of the bi-infinite coefficient sequences.
/// Variables are totally ordered by `(diag, offset)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VariableId {
    pub diag: u8,
    pub offset: i64,
}

impl VariableId {
    pub fn new(diag: u8, offset: i64) -> Self {
        VariableId { diag, offset }
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a[{}]^({})", self.offset, self.diag)
    }
}
