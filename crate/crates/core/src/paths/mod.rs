//! Lattice-path families: modelling, streaming enumeration, weights,
//! counting, reflection, and the nested-sum closed forms.

mod count;
mod enumerate;
mod family;
mod genetic;
mod path;
mod step;

pub use count::{binomial, count, fuss_catalan, PathCount};
pub use enumerate::PathEnumerator;
pub use family::{weight_polynomial, Family, FamilySpec};
pub use genetic::{genetic_sum, GeneticFamily};
pub use path::{reflect_hat, reflect_hat_inverse, LatticePath};
pub use step::{step_weight, Step};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{CoeffTable, Monomial, RingElement, VariableId, WeightPoly};
    use num_bigint::BigInt;
    use num_traits::One;

    fn var(k: u8, n: i64) -> WeightPoly {
        WeightPoly::var(VariableId::new(k, n))
    }

    fn mono(pairs: &[(u8, i64, u32)]) -> WeightPoly {
        WeightPoly::monomial(
            Monomial::from_pairs(pairs.iter().map(|&(k, n, e)| (VariableId::new(k, n), e))),
            BigInt::one(),
        )
    }

    /// The scalar moment list for p = 1: b_m = a_m^(0), a_m = a_m^(1).
    fn scalar_moment(n: u32) -> WeightPoly {
        let b0 = || var(0, 0);
        let b1 = || var(0, 1);
        let a0 = || var(1, 0);
        let a1 = || var(1, 1);
        match n {
            1 => b0(),
            2 => b0().mul(&b0()).add(&a0()),
            3 => mono(&[(0, 0, 3)])
                .add(&mono(&[(1, 0, 1), (0, 0, 1)]).scale(&BigInt::from(2)))
                .add(&a0().mul(&b1())),
            4 => mono(&[(0, 0, 4)])
                .add(&mono(&[(1, 0, 1), (0, 0, 2)]).scale(&BigInt::from(3)))
                .add(&mono(&[(1, 0, 1), (0, 0, 1), (0, 1, 1)]).scale(&BigInt::from(2)))
                .add(&mono(&[(1, 0, 1), (0, 1, 2)]))
                .add(&mono(&[(1, 0, 2)]))
                .add(&a0().mul(&a1())),
            _ => unreachable!(),
        }
    }

    #[test]
    fn scalar_excursion_weights_match_the_moment_list() {
        let table = CoeffTable::symbolic(1);
        for n in 1..=4u32 {
            let spec = FamilySpec::new(Family::D, 1, n, 0, 0).unwrap();
            let got = weight_polynomial(&spec, &table).unwrap();
            assert_eq!(
                got,
                RingElement::Symbolic(scalar_moment(n)),
                "excursion length {n}"
            );
        }
    }

    #[test]
    fn low_heights_make_the_answer_band_independent() {
        // Length-2 excursions only see heights <= 1, so every band depth
        // produces b_0^2 + a_0 in its own symbols.
        for p in 1..=3u8 {
            let table = CoeffTable::symbolic(p);
            let spec = FamilySpec::new(Family::D, p, 2, 0, 0).unwrap();
            let got = weight_polynomial(&spec, &table).unwrap();
            let expected = var(0, 0).mul(&var(0, 0)).add(&var(1, 0));
            assert_eq!(got, RingElement::Symbolic(expected), "p = {p}");
        }
    }

    #[test]
    fn staircase_weight_is_one() {
        for p in 1..=3u8 {
            let table = CoeffTable::symbolic(p);
            for j in 0..=p {
                let spec = FamilySpec::new(Family::P, p, u32::from(j), j, 0).unwrap();
                assert!(weight_polynomial(&spec, &table).unwrap().is_one());
            }
        }
    }

    #[test]
    fn counting_agrees_with_enumeration_for_unrestricted_families() {
        for p in 1..=2u8 {
            for family in [Family::P, Family::D, Family::Dhat] {
                for n in 0..=6u32 {
                    for j in 0..=p {
                        let spec = FamilySpec::new(family, p, n, j, 0).unwrap();
                        let by_enum = spec.enumerate().count() as u64;
                        assert_eq!(count(&spec).unwrap(), PathCount::from(by_enum), "{spec}");
                    }
                }
            }
        }
    }

    #[test]
    fn weight_at_all_ones_counts_paths() {
        use std::collections::BTreeMap;
        use crate::algebra::BigRational;
        for p in 1..=2u8 {
            let mut values = BTreeMap::new();
            for k in 0..=p {
                for n in -12..=12i64 {
                    values.insert((k, n), BigRational::one());
                }
            }
            let ones = CoeffTable::numeric(p, (-12, 12), values).unwrap();
            for family in [Family::P, Family::D, Family::Dhat, Family::S] {
                for n in 0..=5u32 {
                    for j in 0..=p {
                        let spec = FamilySpec::new(family, p, n, j, 0).unwrap();
                        let total = weight_polynomial(&spec, &ones).unwrap();
                        let expect = BigRational::from(BigInt::from(
                            spec.enumerate().count() as u64
                        ));
                        assert_eq!(total.as_rational().unwrap(), &expect, "{spec}");
                    }
                }
            }
        }
    }

    #[test]
    fn reflection_is_a_weight_respecting_bijection() {
        // Pathwise: the reflected path's weight equals the original's after
        // the variable relabeling a_k^(p) -> a_{-p-k}^(p) (restricted steps
        // keep everything on the deepest diagonal).
        let p = 2u8;
        let table = CoeffTable::symbolic_bidiagonal(p);
        let relabel = |v: VariableId| VariableId::new(v.diag, -i64::from(p) - v.offset);
        for n in [3u32, 6, 9] {
            let spec = FamilySpec::new(Family::S, p, n, 0, 0).unwrap();
            for gamma in spec.enumerate() {
                let hat = reflect_hat(&gamma).unwrap();
                assert_eq!(hat.max_height(), 0);
                let w = gamma.weight(&table).unwrap().as_poly().unwrap().clone();
                let w_hat = hat.weight(&table).unwrap().as_poly().unwrap().clone();
                assert_eq!(w.substitute(relabel).unwrap(), w_hat);
            }
        }
    }

    #[test]
    fn reflection_bijection_counts() {
        for p in 1..=2u8 {
            for n in 0..=6u32 {
                for j in 0..=p {
                    let d = FamilySpec::new(Family::D, p, n, j, 0).unwrap();
                    let dhat = FamilySpec::new(Family::Dhat, p, n, j, 0).unwrap();
                    assert_eq!(d.enumerate().count(), dhat.enumerate().count());
                }
            }
        }
    }

    #[test]
    fn restricted_meanders_start_with_p_upsteps() {
        for p in 1..=3u8 {
            for m in 1..=2u32 {
                for j in 0..=p {
                    let n = m * (u32::from(p) + 1) + u32::from(j);
                    let spec = FamilySpec::new(Family::S, p, n, j, 0).unwrap();
                    for gamma in spec.enumerate() {
                        assert!(gamma.steps()[..usize::from(p)]
                            .iter()
                            .all(Step::is_upstep));
                    }
                }
            }
        }
    }

    #[test]
    fn restricted_excursions_end_with_a_downstep_from_p() {
        for p in 1..=3u8 {
            for m in 1..=2u32 {
                let n = m * (u32::from(p) + 1);
                let spec = FamilySpec::new(Family::S, p, n, 0, 0).unwrap();
                for gamma in spec.enumerate() {
                    let last = gamma.steps().last().unwrap();
                    assert_eq!(last.rise(), -(p as i8));
                    let before_last: i64 = gamma.heights().nth(gamma.len() - 1).unwrap();
                    assert_eq!(before_last, i64::from(p));
                }
            }
        }
    }

    #[test]
    fn restricted_weights_are_homogeneous_of_degree_m() {
        let p = 2u8;
        let table = CoeffTable::symbolic_bidiagonal(p);
        for m in 0..=3u32 {
            for j in 0..=p {
                let n = m * (u32::from(p) + 1) + u32::from(j);
                for family in [Family::R, Family::S, Family::Shat] {
                    let spec = FamilySpec::new(family, p, n, j, 0).unwrap();
                    let poly = weight_polynomial(&spec, &table).unwrap();
                    let poly = poly.as_poly().unwrap();
                    for (mono, _) in poly.terms() {
                        assert_eq!(mono.total_degree(), u64::from(m), "{spec}");
                    }
                    // Offset windows: S in [0, (m-1)p+j], T in [-j-mp, -p],
                    // R in [-mp, (m-1)p+j].
                    if m > 0 {
                        let (lo, hi) = match family {
                            Family::S => (0, i64::from(m - 1) * i64::from(p) + i64::from(j)),
                            Family::Shat => (
                                -i64::from(j) - i64::from(m) * i64::from(p),
                                -i64::from(p),
                            ),
                            _ => (
                                -i64::from(m) * i64::from(p),
                                i64::from(m - 1) * i64::from(p) + i64::from(j),
                            ),
                        };
                        for v in poly.variables() {
                            assert!(v.offset >= lo && v.offset <= hi, "{spec}: {v}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn genetic_sums_equal_enumerated_weights() {
        for p in 1..=3u8 {
            let table = CoeffTable::symbolic_bidiagonal(p);
            for m in 0..=3u32 {
                for j in 0..=p {
                    let n = m * (u32::from(p) + 1) + u32::from(j);
                    for q in 0..=2u32 {
                        let s = genetic_sum(GeneticFamily::S, m, j, q, &table).unwrap();
                        let s_spec = FamilySpec::new(Family::S, p, n, j, q).unwrap();
                        assert_eq!(s, weight_polynomial(&s_spec, &table).unwrap(), "{s_spec}");

                        let t = genetic_sum(GeneticFamily::T, m, j, q, &table).unwrap();
                        let t_spec = FamilySpec::new(Family::Shat, p, n, j, q).unwrap();
                        assert_eq!(t, weight_polynomial(&t_spec, &table).unwrap(), "{t_spec}");
                    }
                    let r = genetic_sum(GeneticFamily::R, m, j, 0, &table).unwrap();
                    let r_spec = FamilySpec::new(Family::R, p, n, j, 0).unwrap();
                    assert_eq!(r, weight_polynomial(&r_spec, &table).unwrap(), "{r_spec}");
                }
            }
        }
    }

    #[test]
    fn reflected_restricted_polynomials_are_substituted_ascending_ones() {
        // One concrete figure-sized case: p = 2, n = 9, j = 0.
        let p = 2u8;
        let table = CoeffTable::symbolic_bidiagonal(p);
        let s_spec = FamilySpec::new(Family::S, p, 9, 0, 0).unwrap();
        let t_spec = FamilySpec::new(Family::Shat, p, 9, 0, 0).unwrap();
        let s = weight_polynomial(&s_spec, &table).unwrap();
        let t = weight_polynomial(&t_spec, &table).unwrap();
        let substituted = s
            .as_poly()
            .unwrap()
            .substitute(|v| VariableId::new(v.diag, -i64::from(p) - v.offset))
            .unwrap();
        assert_eq!(&substituted, t.as_poly().unwrap());
    }
}
