use crate::algebra::{CoeffTable, RingElement};
use crate::error::{CoreError, Result};
use crate::series::ZPoly;

/// One stage of the vector continued fraction: a constant numerator vector
/// and a denominator vector of polynomials of degree at most one.
///
/// The coefficients switch shape at stage `p + 1`: numerators are all ones
/// through stage `p` and then pick up `-a_{k-p-1}^(p)` in front; the
/// denominators stop padding with zeros once every slot is occupied. The
/// last denominator entry is always `z - a_{k-1}^(0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CfTerm {
    stage: u32,
    c: Vec<RingElement>,
    d: Vec<ZPoly>,
}

impl CfTerm {
    pub fn stage(&self) -> u32 {
        self.stage
    }

    pub fn numerators(&self) -> &[RingElement] {
        &self.c
    }

    pub fn denominators(&self) -> &[ZPoly] {
        &self.d
    }

    /// Replace one denominator entry; used by the negative controls to
    /// verify that the checkers localize a broken stage.
    pub fn with_denominator(mut self, index: usize, value: ZPoly) -> Self {
        self.d[index] = value;
        self
    }
}

/// The stage-`k` coefficient pair, `k >= 1`.
pub fn cf_term(k: u32, table: &CoeffTable) -> Result<CfTerm> {
    if k < 1 {
        return Err(CoreError::domain("continued-fraction stages start at 1"));
    }
    let p = table.p();
    let pk = u32::from(p);
    let mode = table.mode();
    let one = RingElement::one(mode);

    let mut c = vec![one.clone(); usize::from(p)];
    if k > pk {
        c[0] = table.coeff(p, i64::from(k) - i64::from(p) - 1)?.neg();
    }

    let mut d = Vec::with_capacity(usize::from(p));
    if k <= pk {
        for _ in 0..(pk - k) {
            d.push(ZPoly::zero(mode));
        }
        for i in 0..k.saturating_sub(1) {
            let diag = (k - 1 - i) as u8;
            d.push(ZPoly::constant(table.coeff(diag, i64::from(i))?.neg()));
        }
    } else {
        for i in 1..pk {
            let diag = (pk - i) as u8;
            let offset = i64::from(k) - i64::from(p) + i64::from(i) - 1;
            d.push(ZPoly::constant(table.coeff(diag, offset)?.neg()));
        }
    }
    d.push(ZPoly::z_minus(&table.coeff(0, i64::from(k) - 1)?));
    debug_assert_eq!(d.len(), usize::from(p));

    Ok(CfTerm { stage: k, c, d })
}
