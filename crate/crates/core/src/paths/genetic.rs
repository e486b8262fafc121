use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{BigRational, CoeffMode, CoeffTable, Monomial, RingElement, VariableId, WeightPoly};
use crate::error::{CoreError, Result};

/// Which nested-sum family to evaluate. `R` covers the free restricted
/// walks, `S` the ascending meanders, `T` their reflections.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneticFamily {
    R,
    S,
    T,
}

/// Nested-sum closed form for the restricted-family weight polynomials of
/// length `n = m(p+1) + j` with terminal index `j` and shift `q`.
///
/// Every summand is a product of `m` deepest-diagonal symbols `a_i^(p)`:
///
/// - `S`, shift `q`: `i_1` in `[q, j+q]`, then `i_t` in `[q, i_{t-1}+p]`;
/// - `T`, shift `q`: `i_1` in `[-j-p-q, -p-q]`, then `i_t` in
///   `[i_{t-1}-p, -p-q]`;
/// - `R` (no shift): `i_1` in `[-p, (m-1)p+j]`, then `i_t` in
///   `[i_{t-1}-p, (m-t)p+j]`.
///
/// The empty product at `m = 0` is 1.
pub fn genetic_sum(
    family: GeneticFamily,
    m: u32,
    j: u8,
    q: u32,
    table: &CoeffTable,
) -> Result<RingElement> {
    let p = table.p();
    if j > p {
        return Err(CoreError::domain(format!("j = {j} outside [0, {p}]")));
    }
    if family == GeneticFamily::R && q != 0 {
        return Err(CoreError::domain("the free restricted family takes no shift"));
    }
    let mut acc = Accumulator::new(table.mode());
    let mut indices = Vec::with_capacity(m as usize);
    descend(family, m, j, q, table, &mut indices, &mut acc)?;
    Ok(acc.finish())
}

fn bounds(family: GeneticFamily, t: u32, m: u32, j: u8, q: u32, prev: Option<i64>, p: u8) -> (i64, i64) {
    let (p, j, q) = (i64::from(p), i64::from(j), i64::from(q));
    match family {
        GeneticFamily::S => match prev {
            None => (q, j + q),
            Some(i) => (q, i + p),
        },
        GeneticFamily::T => match prev {
            None => (-j - p - q, -p - q),
            Some(i) => (i - p, -p - q),
        },
        GeneticFamily::R => {
            let hi = i64::from(m - t) * p + j;
            match prev {
                None => (-p, hi),
                Some(i) => (i - p, hi),
            }
        }
    }
}

fn descend(
    family: GeneticFamily,
    m: u32,
    j: u8,
    q: u32,
    table: &CoeffTable,
    indices: &mut Vec<i64>,
    acc: &mut Accumulator,
) -> Result<()> {
    let depth = indices.len() as u32;
    if depth == m {
        acc.add_product(indices, table)?;
        return Ok(());
    }
    let (lo, hi) = bounds(family, depth + 1, m, j, q, indices.last().copied(), table.p());
    for i in lo..=hi {
        indices.push(i);
        descend(family, m, j, q, table, indices, acc)?;
        indices.pop();
    }
    Ok(())
}

enum Accumulator {
    Symbolic(WeightPoly),
    Numeric(BigRational),
}

impl Accumulator {
    fn new(mode: CoeffMode) -> Self {
        match mode {
            CoeffMode::Symbolic => Accumulator::Symbolic(WeightPoly::zero()),
            CoeffMode::Numeric => Accumulator::Numeric(BigRational::from(BigInt::from(0))),
        }
    }

    fn add_product(&mut self, indices: &[i64], table: &CoeffTable) -> Result<()> {
        let p = table.p();
        match self {
            Accumulator::Symbolic(poly) => {
                let mono =
                    Monomial::from_pairs(indices.iter().map(|&i| (VariableId::new(p, i), 1)));
                poly.add_term(mono, BigInt::one());
            }
            Accumulator::Numeric(total) => {
                let mut prod = BigRational::from(BigInt::from(1));
                for &i in indices {
                    prod *= table.numeric_value(p, i)?;
                }
                *total += prod;
            }
        }
        Ok(())
    }

    fn finish(self) -> RingElement {
        match self {
            Accumulator::Symbolic(p) => RingElement::Symbolic(p),
            Accumulator::Numeric(r) => RingElement::Numeric(r),
        }
    }
}
