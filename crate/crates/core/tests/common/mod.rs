//! Brute-force oracles, kept deliberately independent of the library's
//! enumeration machinery: plain recursive generation over the full step
//! alphabet with explicit filtering.
#![allow(dead_code)] // shared by several test targets; each uses a subset

use lukas_core::algebra::{CoeffTable, Monomial, RingElement, VariableId, WeightPoly};
use lukas_core::{Family, FamilySpec};
use num_bigint::BigInt;
use num_traits::One;

/// Every rise sequence of length `n` over the allowed alphabet, filtered
/// by endpoint and height bounds. Exponential; keep `n` small.
pub fn naive_rises(
    p: u8,
    n: u32,
    start: i64,
    end: i64,
    min_bound: Option<i64>,
    max_bound: Option<i64>,
    restricted: bool,
) -> Vec<Vec<i8>> {
    let alphabet: Vec<i8> = if restricted {
        vec![1, -(p as i8)]
    } else {
        (0..=p).map(|j| -(j as i8)).chain([1]).collect()
    };
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n as usize);
    gen(&alphabet, n, start, end, min_bound, max_bound, &mut current, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn gen(
    alphabet: &[i8],
    n: u32,
    height: i64,
    end: i64,
    min_bound: Option<i64>,
    max_bound: Option<i64>,
    current: &mut Vec<i8>,
    out: &mut Vec<Vec<i8>>,
) {
    if current.len() == n as usize {
        if height == end {
            out.push(current.clone());
        }
        return;
    }
    for &r in alphabet {
        let h = height + i64::from(r);
        if min_bound.is_some_and(|lo| h < lo) || max_bound.is_some_and(|hi| h > hi) {
            continue;
        }
        current.push(r);
        gen(alphabet, n, h, end, min_bound, max_bound, current, out);
        current.pop();
    }
}

/// Rise sequences for one family spec, in the spec's natural coordinates.
pub fn naive_family(spec: &FamilySpec) -> Vec<Vec<i8>> {
    naive_rises(
        spec.p(),
        spec.n(),
        spec.start_height(),
        spec.end_height(),
        spec.min_bound(),
        spec.max_bound(),
        matches!(spec.family(), Family::R | Family::S | Family::Shat),
    )
}

/// Direct product of step weights from the weight rule: an upstep weighs
/// one, a step dropping by `d` from height `m` weighs `a_{m-d}^(d)`.
pub fn naive_weight(start: i64, rises: &[i8], table: &CoeffTable) -> RingElement {
    let mut height = start;
    let mut acc = table.one();
    for &r in rises {
        if r < 1 {
            let d = (-i64::from(r)) as u8;
            let w = table.coeff(d, height + i64::from(r)).expect("in window");
            acc = acc.mul(&w).expect("same mode");
        }
        height += i64::from(r);
    }
    acc
}

/// Symbolic weight-polynomial of a family by the naive route.
pub fn naive_weight_polynomial(spec: &FamilySpec, table: &CoeffTable) -> WeightPoly {
    let mut acc = WeightPoly::zero();
    for rises in naive_family(spec) {
        match naive_weight(spec.start_height(), &rises, table) {
            RingElement::Symbolic(w) => {
                for (m, c) in w.terms() {
                    acc.add_term(m.clone(), c.clone());
                }
            }
            RingElement::Numeric(_) => panic!("symbolic table expected"),
        }
    }
    acc
}

/// Handy monomial builder for frozen expected values.
pub fn mono(pairs: &[(u8, i64, u32)]) -> WeightPoly {
    WeightPoly::monomial(
        Monomial::from_pairs(pairs.iter().map(|&(k, n, e)| (VariableId::new(k, n), e))),
        BigInt::one(),
    )
}

/// `c * mono`.
pub fn cmono(c: i64, pairs: &[(u8, i64, u32)]) -> WeightPoly {
    mono(pairs).scale(&BigInt::from(c))
}

/// Sum a list of polynomials.
pub fn poly_sum(parts: &[WeightPoly]) -> WeightPoly {
    let mut acc = WeightPoly::zero();
    for part in parts {
        acc = acc.add(part);
    }
    acc
}
