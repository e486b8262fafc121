use std::collections::BTreeMap;

use crate::algebra::{CoeffMode, CoeffTable, RingElement};
use crate::error::{CoreError, Result};
use crate::operators::{approximation_order, char_polys, hp_defect_order, moment, OperatorKind};
use crate::paths::{
    count, genetic_sum, weight_polynomial, Family, FamilySpec, GeneticFamily, PathCount,
};
use crate::series::{
    rational_to_series, series_from_family, vector_divide, LaurentSeries, SeriesFamily,
    SeriesVector, VALID_INF,
};
use crate::vcf::eval::eval_finite_cf;
use crate::vcf::report::{
    check_series, check_vectors, report_from_failures, Failure, IdentityReport,
};
use crate::vcf::tail::{base_vector, tail_vector};
use crate::vcf::term::cf_term;

/// Negative-control switch: a tampered run perturbs exactly one ingredient
/// on one side of one identity, so the corresponding report must fail with
/// a located component and exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Tamper {
    #[default]
    None,
    Perturb,
}

impl Tamper {
    pub fn active(&self) -> bool {
        *self == Tamper::Perturb
    }
}

/// Memo for the family generating series used across one suite run.
struct SeriesCache<'a> {
    table: &'a CoeffTable,
    n_trunc: i64,
    map: BTreeMap<(u8, u8, u32), LaurentSeries>,
}

impl<'a> SeriesCache<'a> {
    fn new(table: &'a CoeffTable, n_trunc: i64) -> Self {
        SeriesCache {
            table,
            n_trunc,
            map: BTreeMap::new(),
        }
    }

    fn get(&mut self, tag: SeriesFamily, j: u8, q: u32) -> Result<LaurentSeries> {
        let key = (tag as u8, j, q);
        if let Some(s) = self.map.get(&key) {
            return Ok(s.clone());
        }
        let s = series_from_family(tag, j, q, self.n_trunc, self.table)?;
        self.map.insert(key, s.clone());
        Ok(s)
    }

    /// `A_j^(q)` extended by `A_{-1}^(q) = 1`.
    fn get_or_one(&mut self, tag: SeriesFamily, j: i64, q: u32) -> Result<LaurentSeries> {
        if j == -1 {
            Ok(LaurentSeries::one(self.table.mode()))
        } else {
            self.get(tag, u8::try_from(j).expect("small index"), q)
        }
    }
}

fn z_series(mode: CoeffMode) -> LaurentSeries {
    LaurentSeries::from_coeffs(mode, [(-1, RingElement::one(mode))], VALID_INF)
        .expect("one coefficient")
}

fn const_series(c: &RingElement) -> LaurentSeries {
    LaurentSeries::from_coeffs(c.mode(), [(0, c.clone())], VALID_INF).expect("one coefficient")
}

fn one_series(mode: CoeffMode) -> LaurentSeries {
    LaurentSeries::one(mode)
}

fn maybe_bump(c: RingElement, tamper: bool) -> Result<RingElement> {
    if tamper {
        c.add(&RingElement::one(c.mode()))
    } else {
        Ok(c)
    }
}

/// Identities among the ascending-family series: the reciprocal form of the
/// base series, the factorization through the once-shifted vector, the
/// linear relation picked up from the last step of a path, the general
/// split at an intermediate level, and the shifted copies of all of it.
///
/// The reciprocal forms are checked multiplied out (`A_0 * denom = 1`), so
/// a pass is an exact coefficient statement rather than one filtered
/// through an inversion.
pub fn verify_ascending_identities(
    n_trunc: i64,
    table: &CoeffTable,
    tamper: Tamper,
) -> Result<Vec<IdentityReport>> {
    let p = table.p();
    let mode = table.mode();
    let mut cache = SeriesCache::new(table, n_trunc);
    let mut reports = Vec::new();
    let one = one_series(mode);

    // Reciprocal and factorization at shifts 0, 1, 2.
    for shift in 0..=2u32 {
        let mut denom = z_series(mode).sub(&const_series(&maybe_bump(
            table.coeff(0, i64::from(shift))?,
            tamper.active() && shift == 0,
        )?))?;
        for j in 1..=p {
            let a = table.coeff(j, i64::from(shift))?;
            let term = cache.get(SeriesFamily::A, j - 1, shift + 1)?.scale(&a)?;
            denom = denom.sub(&term)?;
        }
        let lhs = cache.get(SeriesFamily::A, 0, shift)?.mul(&denom)?;
        let name = if shift == 0 {
            "ascending-reciprocal".to_string()
        } else {
            format!("ascending-reciprocal/shift={shift}")
        };
        reports.push(check_series(name, p, n_trunc, &lhs, &one)?);

        for j in 1..=p {
            let lhs = cache.get(SeriesFamily::A, j, shift)?;
            let rhs = cache
                .get(SeriesFamily::A, 0, shift)?
                .mul(&cache.get(SeriesFamily::A, j - 1, shift + 1)?)?;
            let name = if shift == 0 {
                format!("ascending-factor/j={j}")
            } else {
                format!("ascending-factor/shift={shift},j={j}")
            };
            reports.push(check_series(name, p, n_trunc, &lhs, &rhs)?);
        }
    }

    // z A_0 - 1 = sum_j a_0^(j) A_j.
    let lhs = z_series(mode)
        .mul(&cache.get(SeriesFamily::A, 0, 0)?)?
        .sub(&one)?;
    let mut rhs: Option<LaurentSeries> = None;
    for j in 0..=p {
        let term = cache
            .get(SeriesFamily::A, j, 0)?
            .scale(&table.coeff(j, 0)?)?;
        rhs = Some(match rhs {
            None => term,
            Some(prev) => prev.add(&term)?,
        });
    }
    reports.push(check_series(
        "ascending-linear",
        p,
        n_trunc,
        &lhs,
        &rhs.expect("p >= 1"),
    )?);

    // A_j = A_i A_{j-i-1}^(i+1) for 0 <= i < j <= p.
    for i in 0..p {
        for j in (i + 1)..=p {
            let lhs = cache.get(SeriesFamily::A, j, 0)?;
            let rhs = cache
                .get(SeriesFamily::A, i, 0)?
                .mul(&cache.get(SeriesFamily::A, j - i - 1, u32::from(i) + 1)?)?;
            reports.push(check_series(
                format!("ascending-split/i={i},j={j}"),
                p,
                n_trunc,
                &lhs,
                &rhs,
            )?);
        }
    }

    Ok(reports)
}

/// Identities tying the free walks to the one-sided families: the
/// two-sided reciprocal (whose denominator mixes ascending and reflected
/// shifted series), the factorization, and the general split.
pub fn verify_two_sided_identities(
    n_trunc: i64,
    table: &CoeffTable,
    tamper: Tamper,
) -> Result<Vec<IdentityReport>> {
    let p = table.p();
    let mode = table.mode();
    let mut cache = SeriesCache::new(table, n_trunc);
    let mut reports = Vec::new();
    let one = one_series(mode);

    // W_0 * (z - a_0^(0) - sum_{j=1}^p sum_{k=0}^j a_{-k}^(j) A^(1)_{j-k-1} B^(1)_{k-1}) = 1.
    let mut denom = z_series(mode).sub(&const_series(&maybe_bump(
        table.coeff(0, 0)?,
        tamper.active(),
    )?))?;
    for j in 1..=p {
        for k in 0..=j {
            let a = table.coeff(j, -i64::from(k))?;
            let asc = cache.get_or_one(SeriesFamily::A, i64::from(j) - i64::from(k) - 1, 1)?;
            let refl = cache.get_or_one(SeriesFamily::B, i64::from(k) - 1, 1)?;
            denom = denom.sub(&asc.mul(&refl)?.scale(&a)?)?;
        }
    }
    let lhs = cache.get(SeriesFamily::W, 0, 0)?.mul(&denom)?;
    reports.push(check_series("two-sided-reciprocal", p, n_trunc, &lhs, &one)?);

    for j in 1..=p {
        let lhs = cache.get(SeriesFamily::W, j, 0)?;
        let rhs = cache
            .get(SeriesFamily::W, 0, 0)?
            .mul(&cache.get(SeriesFamily::A, j - 1, 1)?)?;
        reports.push(check_series(
            format!("two-sided-factor/j={j}"),
            p,
            n_trunc,
            &lhs,
            &rhs,
        )?);
    }

    for i in 0..p {
        for j in (i + 1)..=p {
            let lhs = cache.get(SeriesFamily::W, j, 0)?;
            let rhs = cache
                .get(SeriesFamily::W, i, 0)?
                .mul(&cache.get(SeriesFamily::A, j - i - 1, u32::from(i) + 1)?)?;
            reports.push(check_series(
                format!("two-sided-split/i={i},j={j}"),
                p,
                n_trunc,
                &lhs,
                &rhs,
            )?);
        }
    }

    Ok(reports)
}

/// The same identity families in the bi-diagonal specialization, over the
/// restricted path collections.
pub fn verify_restricted_identities(
    n_trunc: i64,
    table: &CoeffTable,
    tamper: Tamper,
) -> Result<Vec<IdentityReport>> {
    if !table.is_bidiagonal() {
        return Err(CoreError::domain(
            "restricted identities need a bidiagonal table",
        ));
    }
    let p = table.p();
    let mode = table.mode();
    let mut cache = SeriesCache::new(table, n_trunc);
    let mut reports = Vec::new();
    let one = one_series(mode);
    let deep = |off: i64| table.coeff(p, off);

    // S_0 (z - a_0 S^(1)_{p-1}) = 1.
    let denom = z_series(mode).sub(
        &cache
            .get(SeriesFamily::S, p - 1, 1)?
            .scale(&maybe_bump(deep(0)?, tamper.active())?)?,
    )?;
    let lhs = cache.get(SeriesFamily::S, 0, 0)?.mul(&denom)?;
    reports.push(check_series("restricted-reciprocal", p, n_trunc, &lhs, &one)?);

    // S_j = S_0 S^(1)_{j-1}.
    for j in 1..=p {
        let lhs = cache.get(SeriesFamily::S, j, 0)?;
        let rhs = cache
            .get(SeriesFamily::S, 0, 0)?
            .mul(&cache.get(SeriesFamily::S, j - 1, 1)?)?;
        reports.push(check_series(
            format!("restricted-factor/j={j}"),
            p,
            n_trunc,
            &lhs,
            &rhs,
        )?);
    }

    // z S_0 - 1 = a_0 S_p.
    let lhs = z_series(mode)
        .mul(&cache.get(SeriesFamily::S, 0, 0)?)?
        .sub(&one)?;
    let rhs = cache.get(SeriesFamily::S, p, 0)?.scale(&deep(0)?)?;
    reports.push(check_series("restricted-linear", p, n_trunc, &lhs, &rhs)?);

    // S_j = S_i S^(i+1)_{j-i-1}.
    for i in 0..p {
        for j in (i + 1)..=p {
            let lhs = cache.get(SeriesFamily::S, j, 0)?;
            let rhs = cache
                .get(SeriesFamily::S, i, 0)?
                .mul(&cache.get(SeriesFamily::S, j - i - 1, u32::from(i) + 1)?)?;
            reports.push(check_series(
                format!("restricted-split/i={i},j={j}"),
                p,
                n_trunc,
                &lhs,
                &rhs,
            )?);
        }
    }

    // R_0 (z - sum_{l=0}^p a_{-l} S^(1)_{p-l-1} T^(1)_{l-1}) = 1.
    let mut denom = z_series(mode);
    for l in 0..=p {
        let a = deep(-i64::from(l))?;
        let asc = cache.get_or_one(SeriesFamily::S, i64::from(p) - i64::from(l) - 1, 1)?;
        let refl = cache.get_or_one(SeriesFamily::T, i64::from(l) - 1, 1)?;
        denom = denom.sub(&asc.mul(&refl)?.scale(&a)?)?;
    }
    let lhs = cache.get(SeriesFamily::R, 0, 0)?.mul(&denom)?;
    reports.push(check_series(
        "restricted-two-sided-reciprocal",
        p,
        n_trunc,
        &lhs,
        &one,
    )?);

    // R_j = R_0 S^(1)_{j-1} and the split at an intermediate level.
    for j in 1..=p {
        let lhs = cache.get(SeriesFamily::R, j, 0)?;
        let rhs = cache
            .get(SeriesFamily::R, 0, 0)?
            .mul(&cache.get(SeriesFamily::S, j - 1, 1)?)?;
        reports.push(check_series(
            format!("restricted-two-sided-factor/j={j}"),
            p,
            n_trunc,
            &lhs,
            &rhs,
        )?);
    }
    for i in 0..p {
        for j in (i + 1)..=p {
            let lhs = cache.get(SeriesFamily::R, j, 0)?;
            let rhs = cache
                .get(SeriesFamily::R, i, 0)?
                .mul(&cache.get(SeriesFamily::S, j - i - 1, u32::from(i) + 1)?)?;
            reports.push(check_series(
                format!("restricted-two-sided-split/i={i},j={j}"),
                p,
                n_trunc,
                &lhs,
                &rhs,
            )?);
        }
    }

    Ok(reports)
}

/// The tail recursion `v_k = c_{k+1} / (d_{k+1} + v_{k+1})`, checked for
/// each stage through `k_max`, across the regime boundary.
pub fn verify_tail_chain(
    k_max: u32,
    n_trunc: i64,
    table: &CoeffTable,
    tamper: Tamper,
) -> Result<Vec<IdentityReport>> {
    let p = table.p();
    let mut reports = Vec::new();
    for k in 0..=k_max {
        let lhs = tail_vector(k, n_trunc, table)?;
        let mut term = cf_term(k + 1, table)?;
        if tamper.active() && k == 0 {
            // Drop the trailing constant of the last denominator entry.
            let z_only = crate::series::ZPoly::from_coeffs(
                table.mode(),
                vec![
                    RingElement::zero(table.mode()),
                    RingElement::one(table.mode()),
                ],
            )?;
            term = term.with_denominator(usize::from(p) - 1, z_only);
        }
        let next = tail_vector(k + 1, n_trunc, table)?;
        let denom_components = term
            .denominators()
            .iter()
            .zip(next.vector().components())
            .map(|(d, v)| d.to_series().add(v))
            .collect::<Result<Vec<_>>>()?;
        let denom = SeriesVector::new(denom_components)?;
        let numer = SeriesVector::new(
            term.numerators()
                .iter()
                .map(|c| Ok(const_series(c)))
                .collect::<Result<Vec<_>>>()?,
        )?;
        let rhs = vector_divide(&numer, &denom, n_trunc + 2)?;
        reports.push(check_vectors(
            format!("tail-chain/stage={k}"),
            p,
            n_trunc,
            lhs.vector(),
            &rhs,
        )?);
    }
    Ok(reports)
}

/// Finite continued-fraction evaluation: with the stage-`n` tail appended
/// the value reproduces the ascending series vector exactly on the common
/// validity range; with the tail dropped it reproduces the expansions of
/// the characteristic-polynomial ratios.
pub fn verify_finite_cf(
    stage_max: u32,
    n_trunc: i64,
    table: &CoeffTable,
    tamper: Tamper,
) -> Result<Vec<IdentityReport>> {
    let p = table.p();
    let base = base_vector(n_trunc, table)?;
    let mut reports = Vec::new();
    for n in 1..=stage_max {
        let mut terms: Vec<_> = (1..=n).map(|k| cf_term(k, table)).collect::<Result<_>>()?;
        if tamper.active() && n == 1 {
            let z_only = crate::series::ZPoly::from_coeffs(
                table.mode(),
                vec![
                    RingElement::zero(table.mode()),
                    RingElement::one(table.mode()),
                ],
            )?;
            terms[0] = terms[0].clone().with_denominator(usize::from(p) - 1, z_only);
        }
        let tail = tail_vector(n, n_trunc, table)?;
        let tailed = eval_finite_cf(&terms, Some(tail.vector()), n_trunc, table)?;
        reports.push(check_vectors(
            format!("finite-cf-tailed/stages={n}"),
            p,
            n_trunc,
            &tailed,
            &base,
        )?);

        let untailed = eval_finite_cf(&terms, None, n_trunc, table)?;
        let pair = char_polys(n, table)?;
        let expansions = (1..=p)
            .map(|k| rational_to_series(pair.q_nk(k), pair.q_n(), n_trunc))
            .collect::<Result<Vec<_>>>()?;
        let rhs = SeriesVector::new(expansions)?;
        reports.push(check_vectors(
            format!("finite-cf-convergent/stages={n}"),
            p,
            n_trunc,
            &untailed,
            &rhs,
        )?);
    }
    Ok(reports)
}

/// Moments of the three operators against path-sum weight polynomials:
/// two independent computations of the same quantity.
pub fn verify_moment_oracle(
    n_max: u32,
    q_max: u32,
    table: &CoeffTable,
    tamper: Tamper,
) -> Result<Vec<IdentityReport>> {
    let p = table.p();
    let mut reports = Vec::new();
    for q in 0..=q_max {
        let mut meander = Vec::new();
        let mut reflected = Vec::new();
        for j in 0..=p {
            for n in 0..=n_max {
                let mut lhs = moment(OperatorKind::Forward(q), n, j, table)?;
                if tamper.active() && q == 0 && j == 0 && n == 1 {
                    lhs = lhs.add(&RingElement::one(table.mode()))?;
                }
                let rhs = weight_polynomial(&FamilySpec::new(Family::D, p, n, j, q)?, table)?;
                if lhs != rhs {
                    meander.push(Failure {
                        component: usize::from(j),
                        exponent: i64::from(n),
                    });
                }

                let lhs = moment(OperatorKind::Reflected(q), n, j, table)?;
                let rhs = weight_polynomial(&FamilySpec::new(Family::Dhat, p, n, j, q)?, table)?;
                if lhs != rhs {
                    reflected.push(Failure {
                        component: usize::from(j),
                        exponent: i64::from(n),
                    });
                }
            }
        }
        reports.push(report_from_failures(
            format!("moment-meander/shift={q}"),
            p,
            i64::from(n_max),
            meander,
        ));
        reports.push(report_from_failures(
            format!("moment-reflected/shift={q}"),
            p,
            i64::from(n_max),
            reflected,
        ));
    }
    let mut walk = Vec::new();
    for j in 0..=p {
        for n in 0..=n_max {
            let lhs = moment(OperatorKind::TwoSided, n, j, table)?;
            let rhs = weight_polynomial(&FamilySpec::new(Family::P, p, n, j, 0)?, table)?;
            if lhs != rhs {
                walk.push(Failure {
                    component: usize::from(j),
                    exponent: i64::from(n),
                });
            }
        }
    }
    reports.push(report_from_failures(
        "moment-walk",
        p,
        i64::from(n_max),
        walk,
    ));
    Ok(reports)
}

/// Nested-sum closed forms against enumeration, for all three restricted
/// families, shifts through `q_max`.
pub fn verify_genetic_sums(
    m_max: u32,
    q_max: u32,
    table: &CoeffTable,
    tamper: Tamper,
) -> Result<Vec<IdentityReport>> {
    if !table.is_bidiagonal() {
        return Err(CoreError::domain("genetic sums need a bidiagonal table"));
    }
    let p = table.p();
    let mut reports = Vec::new();
    let cases: [(GeneticFamily, Family, &str); 3] = [
        (GeneticFamily::R, Family::R, "genetic-free"),
        (GeneticFamily::S, Family::S, "genetic-ascending"),
        (GeneticFamily::T, Family::Shat, "genetic-reflected"),
    ];
    for (genetic, family, name) in cases {
        let q_top = if genetic == GeneticFamily::R { 0 } else { q_max };
        let mut failures = Vec::new();
        for q in 0..=q_top {
            for m in 0..=m_max {
                for j in 0..=p {
                    let n = m * (u32::from(p) + 1) + u32::from(j);
                    let mut lhs = genetic_sum(genetic, m, j, q, table)?;
                    if tamper.active() && genetic == GeneticFamily::S && m == 1 && j == 0 && q == 0
                    {
                        lhs = lhs.add(&RingElement::one(table.mode()))?;
                    }
                    let rhs = weight_polynomial(&FamilySpec::new(family, p, n, j, q)?, table)?;
                    if lhs != rhs {
                        failures.push(Failure {
                            component: usize::from(j),
                            exponent: i64::from(n),
                        });
                    }
                }
            }
        }
        reports.push(report_from_failures(name, p, i64::from(m_max), failures));
    }
    Ok(reports)
}

/// Closed-form counts against enumeration lengths.
pub fn verify_counts(m_max: u32, p: u8, tamper: Tamper) -> Result<Vec<IdentityReport>> {
    let mut reports = Vec::new();
    let cases: [(Family, &str); 3] = [
        (Family::R, "count-free"),
        (Family::S, "count-ascending"),
        (Family::Shat, "count-reflected"),
    ];
    for (family, name) in cases {
        let mut failures = Vec::new();
        for m in 0..=m_max {
            for j in 0..=p {
                let n = m * (u32::from(p) + 1) + u32::from(j);
                let spec = FamilySpec::new(family, p, n, j, 0)?;
                let mut closed = count(&spec)?;
                if tamper.active() && family == Family::S && m == 1 && j == 0 {
                    closed = PathCount::from(
                        closed.as_biguint() + num_bigint::BigUint::from(1u32),
                    );
                }
                let direct = spec.enumerate().count() as u64;
                if closed != PathCount::from(direct) {
                    failures.push(Failure {
                        component: usize::from(j),
                        exponent: i64::from(n),
                    });
                }
            }
        }
        reports.push(report_from_failures(name, p, i64::from(m_max), failures));
    }
    Ok(reports)
}

/// The reflected restricted polynomials against the ascending ones under
/// the offset substitution `a_k -> a_{-p-k}` on the deepest diagonal.
pub fn verify_reflection(n_max: u32, p: u8, tamper: Tamper) -> Result<Vec<IdentityReport>> {
    use crate::algebra::VariableId;
    let table = CoeffTable::symbolic_bidiagonal(p);
    let mut failures = Vec::new();
    for n in 0..=n_max {
        for j in 0..=p {
            let s_spec = FamilySpec::new(Family::S, p, n, j, 0)?;
            let t_spec = FamilySpec::new(Family::Shat, p, n, j, 0)?;
            if !s_spec.congruent() {
                continue;
            }
            let s = weight_polynomial(&s_spec, &table)?;
            let t = weight_polynomial(&t_spec, &table)?;
            let extra = if tamper.active() { 1 } else { 0 };
            let substituted = s
                .as_poly()?
                .substitute(|v| VariableId::new(v.diag, -i64::from(p) - v.offset + extra))?;
            if &substituted != t.as_poly()? {
                failures.push(Failure {
                    component: usize::from(j),
                    exponent: i64::from(n),
                });
            }
        }
    }
    Ok(vec![report_from_failures(
        "reflection-substitution",
        p,
        i64::from(n_max),
        failures,
    )])
}

/// The simultaneous-approximation order floor: the defect of
/// `q_n phi_k - q_{n,k+1}` vanishes through order `floor((n-k)/p)`.
pub fn verify_approximation_order(
    n_max: u32,
    table: &CoeffTable,
    tamper: Tamper,
) -> Result<Vec<IdentityReport>> {
    let p = table.p();
    let mut failures = Vec::new();
    for n in 1..=n_max {
        for k in 0..p {
            let floor = approximation_order(n, k, p) + 1;
            let n_trunc = i64::from(n) + floor.max(0) + 2;
            let mut order = hp_defect_order(n, k, n_trunc, table)?;
            if tamper.active() && n == 2 && k == 0 {
                order -= 2;
            }
            if order < floor {
                failures.push(Failure {
                    component: usize::from(k),
                    exponent: i64::from(n),
                });
            }
        }
    }
    Ok(vec![report_from_failures(
        "approximation-order",
        p,
        i64::from(n_max),
        failures,
    )])
}
