use std::fmt;
use std::str::FromStr;

use crate::algebra::CoeffTable;
use crate::error::{CoreError, Result};
use crate::paths::{weight_polynomial, Family, FamilySpec};
use crate::series::laurent::LaurentSeries;

/// Which generating series to build. Mirrors the path families: `W`/`A`/`B`
/// over the full step set, `R`/`S`/`T` over the restricted one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesFamily {
    W,
    A,
    B,
    R,
    S,
    T,
}

impl SeriesFamily {
    pub fn path_family(&self) -> Family {
        match self {
            SeriesFamily::W => Family::P,
            SeriesFamily::A => Family::D,
            SeriesFamily::B => Family::Dhat,
            SeriesFamily::R => Family::R,
            SeriesFamily::S => Family::S,
            SeriesFamily::T => Family::Shat,
        }
    }
}

impl fmt::Display for SeriesFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SeriesFamily::W => "W",
            SeriesFamily::A => "A",
            SeriesFamily::B => "B",
            SeriesFamily::R => "R",
            SeriesFamily::S => "S",
            SeriesFamily::T => "T",
        };
        write!(f, "{name}")
    }
}

impl FromStr for SeriesFamily {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "W" | "w" => Ok(SeriesFamily::W),
            "A" | "a" => Ok(SeriesFamily::A),
            "B" | "b" => Ok(SeriesFamily::B),
            "R" | "r" => Ok(SeriesFamily::R),
            "S" | "s" => Ok(SeriesFamily::S),
            "T" | "t" => Ok(SeriesFamily::T),
            other => Err(CoreError::domain(format!("unknown series family {other:?}"))),
        }
    }
}

/// The generating series of a weight-polynomial sequence: the coefficient
/// of `z^(-n-1)` is the weight polynomial of the length-`n` collection,
/// for `n` in `[0, N-1]`; lengths below `j` contribute zero, so the series
/// leads with `z^(-j-1)`.
pub fn series_from_family(
    tag: SeriesFamily,
    j: u8,
    q: u32,
    n_trunc: i64,
    table: &CoeffTable,
) -> Result<LaurentSeries> {
    if n_trunc < 1 {
        return Err(CoreError::domain("truncation order must be at least 1"));
    }
    if q > 0 && !tag.path_family().allows_shift() {
        return Err(CoreError::domain(format!("family {tag} does not take a shift")));
    }
    let mut pairs = Vec::with_capacity(n_trunc as usize);
    for n in 0..n_trunc {
        let spec = FamilySpec::new(tag.path_family(), table.p(), n as u32, j, q)?;
        pairs.push((n + 1, weight_polynomial(&spec, table)?));
    }
    LaurentSeries::from_coeffs(table.mode(), pairs, n_trunc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Monomial, RingElement, VariableId, WeightPoly};
    use num_bigint::BigInt;
    use num_traits::One;

    #[test]
    fn scalar_meander_series_lists_the_moments() {
        // p = 1, ascending series at j = 0: z^-1 + b_0 z^-2 + (b_0^2+a_0) z^-3 + ...
        let table = CoeffTable::symbolic(1);
        let s = series_from_family(SeriesFamily::A, 0, 0, 5, &table).unwrap();
        assert_eq!(s.min_exp(), 1);
        assert_eq!(s.valid_to(), 5);
        assert!(s.coefficient(1).unwrap().is_one());
        assert_eq!(
            s.coefficient(2).unwrap(),
            RingElement::Symbolic(WeightPoly::var(VariableId::new(0, 0)))
        );
        let b0sq_a0 = WeightPoly::var(VariableId::new(0, 0))
            .mul(&WeightPoly::var(VariableId::new(0, 0)))
            .add(&WeightPoly::var(VariableId::new(1, 0)));
        assert_eq!(s.coefficient(3).unwrap(), RingElement::Symbolic(b0sq_a0));
    }

    #[test]
    fn every_family_leads_with_one_at_j_plus_one() {
        for p in 1..=2u8 {
            let table = CoeffTable::symbolic(p);
            let bi = CoeffTable::symbolic_bidiagonal(p);
            for j in 0..=p {
                for tag in [SeriesFamily::W, SeriesFamily::A, SeriesFamily::B] {
                    let s = series_from_family(tag, j, 0, i64::from(j) + 3, &table).unwrap();
                    assert_eq!(s.min_exp(), i64::from(j) + 1, "{tag} j={j}");
                    assert!(s.coefficient(i64::from(j) + 1).unwrap().is_one());
                }
                for tag in [SeriesFamily::R, SeriesFamily::S, SeriesFamily::T] {
                    let s = series_from_family(tag, j, 0, i64::from(j) + 3, &bi).unwrap();
                    assert_eq!(s.min_exp(), i64::from(j) + 1, "{tag} j={j}");
                    assert!(s.coefficient(i64::from(j) + 1).unwrap().is_one());
                }
            }
        }
    }

    #[test]
    fn restricted_series_is_sparse_in_the_exponent() {
        // p = 2, j = 0: z^-1 + a_0 z^-4 truncated at 4; exponents 2 and 3
        // carry structural zeros.
        let table = CoeffTable::symbolic_bidiagonal(2);
        let s = series_from_family(SeriesFamily::S, 0, 0, 4, &table).unwrap();
        assert!(s.coefficient(1).unwrap().is_one());
        assert!(s.coefficient(2).unwrap().is_zero());
        assert!(s.coefficient(3).unwrap().is_zero());
        let a0 = WeightPoly::monomial(
            Monomial::from_pairs([(VariableId::new(2, 0), 1)]),
            BigInt::one(),
        );
        assert_eq!(s.coefficient(4).unwrap(), RingElement::Symbolic(a0));
        assert!(s.coefficient(5).is_err(), "beyond validity is unknown");
    }

    #[test]
    fn shift_rejected_for_unshiftable_families() {
        let table = CoeffTable::symbolic(2);
        assert!(series_from_family(SeriesFamily::W, 0, 1, 4, &table).is_err());
        assert!(series_from_family(SeriesFamily::R, 0, 1, 4, &table).is_err());
    }
}
