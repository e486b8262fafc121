use crate::algebra::{CoeffTable, RingElement};
use crate::error::{CoreError, Result};
use crate::series::{series_from_family, LaurentSeries, SeriesFamily, SeriesVector};

/// The stage-`k` remainder vector of the expansion, built directly from
/// shifted ascending-family series (the path route), not from operator
/// resolvents: the equality of the two routes is itself under test
/// elsewhere, and the tail recursion should not assume it.
#[derive(Debug, Clone, PartialEq)]
pub struct TailVector {
    stage: u32,
    vector: SeriesVector,
}

impl TailVector {
    pub fn stage(&self) -> u32 {
        self.stage
    }

    pub fn vector(&self) -> &SeriesVector {
        &self.vector
    }

    pub fn into_vector(self) -> SeriesVector {
        self.vector
    }
}

/// The stage-`k` tail, `k >= 0`, with series trusted through `n_trunc`.
///
/// Through stage `p` the vector leads with the plain shifted series
/// `A_0^(k), ..., A_{p-k-1}^(k)` followed by `k` coefficient sums; from
/// stage `p + 1` on, every slot is a coefficient sum and the first one
/// carries the single product `-a_{k-p}^(p) A_0^(k)`.
pub fn tail_vector(k: u32, n_trunc: i64, table: &CoeffTable) -> Result<TailVector> {
    let p = u32::from(table.p());
    let shifted = |j: u8| series_from_family(SeriesFamily::A, j, k, n_trunc, table);
    let mut components: Vec<LaurentSeries> = Vec::with_capacity(p as usize);
    if k <= p {
        for i in 0..(p - k) {
            components.push(shifted(i as u8)?);
        }
        for t in 1..=k {
            let lo = (k - t + 1) as u8;
            components.push(weighted_sum(table, lo, t - 1, |j| {
                u8::try_from(u32::from(j) + t - 1 - k).expect("index in range")
            }, k, n_trunc)?);
        }
    } else {
        let a = table.coeff(table.p(), i64::from(k) - i64::from(p))?;
        components.push(shifted(0)?.scale(&a.neg())?);
        for i in 2..=p {
            let lo = (p - i + 1) as u8;
            let off = k - p + i - 1;
            components.push(weighted_sum(table, lo, off, |j| {
                u8::try_from(u32::from(j) + i - 1 - p).expect("index in range")
            }, k, n_trunc)?);
        }
    }
    Ok(TailVector {
        stage: k,
        vector: SeriesVector::new(components)?,
    })
}

/// `-sum_{j=lo}^{p} a_{offset}^(j) A_{index(j)}^(k)`.
fn weighted_sum(
    table: &CoeffTable,
    lo: u8,
    offset: u32,
    index: impl Fn(u8) -> u8,
    k: u32,
    n_trunc: i64,
) -> Result<LaurentSeries> {
    let mut acc: Option<LaurentSeries> = None;
    for j in lo..=table.p() {
        let coeff = table.coeff(j, i64::from(offset))?;
        let series =
            series_from_family(SeriesFamily::A, index(j), k, n_trunc, table)?.scale(&coeff)?;
        acc = Some(match acc {
            None => series,
            Some(prev) => prev.add(&series)?,
        });
    }
    acc.map(|s| s.neg())
        .ok_or_else(|| CoreError::domain("empty coefficient sum"))
}

/// Convenience: the stage-0 tail is the plain vector
/// `(A_0, ..., A_{p-1})` of ascending series.
pub fn base_vector(n_trunc: i64, table: &CoeffTable) -> Result<SeriesVector> {
    let components = (0..table.p())
        .map(|j| series_from_family(SeriesFamily::A, j, 0, n_trunc, table))
        .collect::<Result<Vec<_>>>()?;
    SeriesVector::new(components)
}

/// The coefficient appearing in front of the whole tail at stage `k`:
/// unused in evaluation (tails are added to the denominators) but handy
/// for inspection.
pub fn tail_stage_weight(k: u32, table: &CoeffTable) -> Result<RingElement> {
    if k > u32::from(table.p()) {
        table
            .coeff(table.p(), i64::from(k) - i64::from(table.p()))
            .map(|c| c.neg())
    } else {
        Ok(table.one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::mismatches;

    #[test]
    fn stage_zero_is_the_plain_series_vector() {
        let table = CoeffTable::symbolic(2);
        let tail = tail_vector(0, 6, &table).unwrap();
        let base = base_vector(6, &table).unwrap();
        assert_eq!(tail.vector(), &base);
    }

    #[test]
    fn stage_one_components_for_p_two() {
        // (A_0^(1), -a_0^(1) A_0^(1) - a_0^(2) A_1^(1)).
        let table = CoeffTable::symbolic(2);
        let tail = tail_vector(1, 7, &table).unwrap();
        let a0s = series_from_family(SeriesFamily::A, 0, 1, 7, &table).unwrap();
        let a1s = series_from_family(SeriesFamily::A, 1, 1, 7, &table).unwrap();
        assert!(mismatches(tail.vector().component(0), &a0s).unwrap().is_empty());
        let expected = a0s
            .scale(&table.coeff(1, 0).unwrap())
            .unwrap()
            .add(&a1s.scale(&table.coeff(2, 0).unwrap()).unwrap())
            .unwrap()
            .neg();
        assert!(mismatches(tail.vector().component(1), &expected)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn regime_formulas_agree_at_stage_p() {
        // The first component at k = p is the single product
        // -a_0^(p) A_0^(p) under both readings.
        for p in 1..=3u8 {
            let table = CoeffTable::symbolic(p);
            let tail = tail_vector(u32::from(p), 6, &table).unwrap();
            let a0p = series_from_family(SeriesFamily::A, 0, u32::from(p), 6, &table).unwrap();
            let expected = a0p.scale(&table.coeff(p, 0).unwrap()).unwrap().neg();
            assert!(mismatches(tail.vector().component(0), &expected)
                .unwrap()
                .is_empty(), "p = {p}");
        }
    }
}
