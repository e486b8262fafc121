use crate::algebra::{CoeffTable, RingElement};
use crate::error::{CoreError, Result};
use crate::series::{vector_divide, LaurentSeries, SeriesVector, ZPoly, VALID_INF};
use crate::vcf::term::CfTerm;

/// Evaluate the finite continued fraction
/// `c_1 / (d_1 + c_2 / (d_2 + ... + c_n / (d_n [+ tail])))`
/// by right-to-left folding with the vector division.
///
/// Inversions are carried a little past `n_trunc` so that validity
/// bookkeeping, not the working precision, bounds the result. With a tail
/// of validity `N`, each stage contributes one exact leading `z`, so the
/// value comes out trusted through `N` and beyond; without a tail the
/// value is the exact expansion of a vector of rational functions.
pub fn eval_finite_cf(
    terms: &[CfTerm],
    tail: Option<&SeriesVector>,
    n_trunc: i64,
    table: &CoeffTable,
) -> Result<SeriesVector> {
    if terms.is_empty() {
        return Err(CoreError::domain("need at least one stage"));
    }
    let p = usize::from(table.p());
    let work = n_trunc + 2;
    let mut acc: Option<SeriesVector> = tail.cloned();
    for term in terms.iter().rev() {
        if term.numerators().len() != p || term.denominators().len() != p {
            return Err(CoreError::domain("stage arity does not match band depth"));
        }
        let mut denom_components: Vec<LaurentSeries> = term
            .denominators()
            .iter()
            .map(ZPoly::to_series)
            .collect();
        if let Some(prev) = acc {
            if prev.len() != p {
                return Err(CoreError::domain("tail arity does not match band depth"));
            }
            for (slot, extra) in denom_components.iter_mut().zip(prev.components()) {
                *slot = slot.add(extra)?;
            }
        }
        let denom = SeriesVector::new(denom_components)?;
        let numer = SeriesVector::new(
            term.numerators()
                .iter()
                .map(constant_series)
                .collect::<Result<Vec<_>>>()?,
        )?;
        acc = Some(vector_divide(&numer, &denom, work)?);
    }
    Ok(acc.expect("at least one stage folded"))
}

fn constant_series(c: &RingElement) -> Result<LaurentSeries> {
    LaurentSeries::from_coeffs(c.mode(), [(0, c.clone())], VALID_INF)
}

/// The alternative expansion of the restricted (bi-diagonal) series
/// vector: every denominator is `(0, ..., 0, z)` and the stage-`m`
/// numerator is `(1, ..., 1, -a_{m-2})` from the second stage on.
///
/// Evaluated to finite `depth` with the tail dropped, this is the exact
/// expansion of a rational convergent; its agreement range against the
/// true series grows with the depth.
pub fn akv_expansion(depth: u32, n_trunc: i64, table: &CoeffTable) -> Result<SeriesVector> {
    if depth < 1 {
        return Err(CoreError::domain("depth must be at least 1"));
    }
    if !table.is_bidiagonal() {
        return Err(CoreError::domain(
            "the alternative expansion needs a bidiagonal table",
        ));
    }
    let p = usize::from(table.p());
    let mode = table.mode();
    let work = n_trunc + 2;
    let z_row = || {
        let mut d = vec![ZPoly::zero(mode); p - 1];
        d.push(ZPoly::from_coeffs(
            mode,
            vec![RingElement::zero(mode), RingElement::one(mode)],
        )?);
        Ok::<_, CoreError>(d)
    };
    let mut acc: Option<SeriesVector> = None;
    for m in (1..=depth).rev() {
        let mut numer = vec![RingElement::one(mode); p];
        if m >= 2 {
            numer[p - 1] = table.coeff(table.p(), i64::from(m) - 2)?.neg();
        }
        let mut denom_components: Vec<LaurentSeries> =
            z_row()?.iter().map(ZPoly::to_series).collect();
        if let Some(prev) = acc {
            for (slot, extra) in denom_components.iter_mut().zip(prev.components()) {
                *slot = slot.add(extra)?;
            }
        }
        let denom = SeriesVector::new(denom_components)?;
        let numer = SeriesVector::new(
            numer
                .iter()
                .map(constant_series)
                .collect::<Result<Vec<_>>>()?,
        )?;
        acc = Some(vector_divide(&numer, &denom, work)?);
    }
    Ok(acc.expect("depth >= 1"))
}
