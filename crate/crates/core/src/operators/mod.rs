//! Banded Hessenberg operators: moments by windowed matrix-vector
//! application, resolvent series, characteristic polynomials via the
//! banded recurrence, and the simultaneous rational-approximation order
//! check.

mod charpoly;
mod hermite;
mod kind;
mod moment;

pub use charpoly::{char_polys, CharPolyPair};
pub use hermite::{approximation_order, hp_defect_order};
pub use kind::{BandedMatrixView, OperatorKind};
pub use moment::{moment, moment_prefix, resolvent_series};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CoeffTable;
    use crate::paths::{weight_polynomial, Family, FamilySpec};
    use crate::series::{mismatches, series_from_family, SeriesFamily};

    #[test]
    fn resolvents_equal_family_series_symbolically() {
        // Moments against path sums, two independent computations, at
        // moderate depth; the acceptance suite pushes this further.
        for p in 1..=2u8 {
            let table = CoeffTable::symbolic(p);
            for q in 0..=1u32 {
                for j in 0..=p {
                    let phi = resolvent_series(OperatorKind::Forward(q), j, 6, &table).unwrap();
                    let a = series_from_family(SeriesFamily::A, j, q, 6, &table).unwrap();
                    assert!(mismatches(&phi, &a).unwrap().is_empty(), "A p={p} q={q} j={j}");

                    let beta = resolvent_series(OperatorKind::Reflected(q), j, 6, &table).unwrap();
                    let b = series_from_family(SeriesFamily::B, j, q, 6, &table).unwrap();
                    assert!(mismatches(&beta, &b).unwrap().is_empty(), "B p={p} q={q} j={j}");
                }
            }
            for j in 0..=p {
                let psi = resolvent_series(OperatorKind::TwoSided, j, 6, &table).unwrap();
                let w = series_from_family(SeriesFamily::W, j, 0, 6, &table).unwrap();
                assert!(mismatches(&psi, &w).unwrap().is_empty(), "W p={p} j={j}");
            }
        }
    }

    #[test]
    fn forward_moments_match_meander_weights_numerically() {
        let table = CoeffTable::random(2, (-14, 14), 3).unwrap();
        for q in 0..=2u32 {
            for j in 0..=2u8 {
                for n in 0..=6u32 {
                    let m = moment(OperatorKind::Forward(q), n, j, &table).unwrap();
                    let spec = FamilySpec::new(Family::D, 2, n, j, q).unwrap();
                    let w = weight_polynomial(&spec, &table).unwrap();
                    assert_eq!(m, w, "q={q} j={j} n={n}");
                }
            }
        }
    }
}
