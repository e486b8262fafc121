use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::algebra::{ring_element_from_json, ring_element_to_json, CoeffMode, RingElement};
use crate::error::{CoreError, Result};

/// Validity bound meaning "every coefficient is known"; used for series
/// with finite support such as embedded polynomials. Kept far from the
/// integer limits so saturating arithmetic never wraps.
pub const VALID_INF: i64 = i64::MAX / 4;

pub(crate) fn valid_add(a: i64, b: i64) -> i64 {
    let s = a.saturating_add(b);
    s.min(VALID_INF)
}

/// Truncated Laurent series `sum_e c_e z^(-e)`.
///
/// `min_exp` is the smallest exponent whose coefficient may be nonzero
/// (negative exponents encode a polynomial part in `z`); everything below
/// it is known to vanish. `valid_to` is the largest exponent whose
/// coefficient is trusted: coefficients beyond it are *unknown*, not zero,
/// and asking for them is an error. Only nonzero coefficients are stored.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentSeries {
    mode: CoeffMode,
    min_exp: i64,
    valid_to: i64,
    coeffs: BTreeMap<i64, RingElement>,
}

impl LaurentSeries {
    /// The zero series known on `[min_exp, valid_to]`.
    pub fn zero(mode: CoeffMode, min_exp: i64, valid_to: i64) -> Self {
        LaurentSeries {
            mode,
            min_exp: min_exp.min(valid_to),
            valid_to,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant 1, exactly known everywhere.
    pub fn one(mode: CoeffMode) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(0, RingElement::one(mode));
        LaurentSeries {
            mode,
            min_exp: 0,
            valid_to: VALID_INF,
            coeffs,
        }
    }

    /// Build from `(exponent, coefficient)` pairs trusted through
    /// `valid_to`; pairs beyond it are rejected, zeros dropped.
    pub fn from_coeffs(
        mode: CoeffMode,
        pairs: impl IntoIterator<Item = (i64, RingElement)>,
        valid_to: i64,
    ) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (e, c) in pairs {
            if c.mode() != mode {
                return Err(CoreError::RingMismatch);
            }
            if e > valid_to {
                return Err(CoreError::InsufficientValidity {
                    needed: e,
                    have: valid_to,
                });
            }
            if !c.is_zero() {
                coeffs.insert(e, c);
            }
        }
        let min_exp = coeffs.keys().next().copied().unwrap_or(valid_to);
        Ok(LaurentSeries {
            mode,
            min_exp,
            valid_to,
            coeffs,
        })
    }

    /// A polynomial in `z` with ascending coefficients `c_0 + c_1 z + ...`,
    /// exactly known at every exponent.
    pub fn from_z_polynomial(mode: CoeffMode, ascending: &[RingElement]) -> Result<Self> {
        LaurentSeries::from_coeffs(
            mode,
            ascending
                .iter()
                .enumerate()
                .map(|(d, c)| (-(d as i64), c.clone())),
            VALID_INF,
        )
    }

    pub fn mode(&self) -> CoeffMode {
        self.mode
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn valid_to(&self) -> i64 {
        self.valid_to
    }

    pub fn is_exact(&self) -> bool {
        self.valid_to == VALID_INF
    }

    /// Known coefficients in ascending exponent order (nonzero only).
    pub fn iter(&self) -> impl Iterator<Item = (i64, &RingElement)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// The coefficient of `z^(-e)`; errors beyond the validity bound.
    pub fn coefficient(&self, e: i64) -> Result<RingElement> {
        if e > self.valid_to {
            return Err(CoreError::InsufficientValidity {
                needed: e,
                have: self.valid_to,
            });
        }
        Ok(self
            .coeffs
            .get(&e)
            .cloned()
            .unwrap_or_else(|| RingElement::zero(self.mode)))
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero_on_range(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading term `(exponent, coefficient)` among known coefficients.
    pub fn leading(&self) -> Option<(i64, &RingElement)> {
        self.coeffs.iter().next().map(|(&e, c)| (e, c))
    }

    /// Raise `min_exp` past known zeros. Never moves beyond `valid_to`.
    fn normalize(&mut self) {
        self.min_exp = match self.coeffs.keys().next() {
            Some(&e) => e.min(self.valid_to),
            None => self.valid_to,
        };
    }

    /// Restrict the trusted range (drops coefficients beyond the new bound).
    pub fn truncated(&self, valid_to: i64) -> LaurentSeries {
        let mut out = self.clone();
        out.valid_to = out.valid_to.min(valid_to);
        out.coeffs.retain(|&e, _| e <= out.valid_to);
        out.normalize();
        out
    }

    fn check_mode(&self, other: &LaurentSeries) -> Result<()> {
        if self.mode != other.mode {
            return Err(CoreError::RingMismatch);
        }
        Ok(())
    }

    /// Sum, trusted where both operands are.
    pub fn add(&self, other: &LaurentSeries) -> Result<LaurentSeries> {
        self.check_mode(other)?;
        let valid_to = self.valid_to.min(other.valid_to);
        let mut coeffs = BTreeMap::new();
        for (&e, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if e > valid_to {
                continue;
            }
            let entry = coeffs
                .entry(e)
                .or_insert_with(|| RingElement::zero(self.mode));
            *entry = entry.add(c)?;
        }
        coeffs.retain(|_, c: &mut RingElement| !c.is_zero());
        let mut out = LaurentSeries {
            mode: self.mode,
            min_exp: self.min_exp.min(other.min_exp),
            valid_to,
            coeffs,
        };
        out.normalize();
        Ok(out)
    }

    pub fn neg(&self) -> LaurentSeries {
        LaurentSeries {
            mode: self.mode,
            min_exp: self.min_exp,
            valid_to: self.valid_to,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentSeries) -> Result<LaurentSeries> {
        self.add(&other.neg())
    }

    /// Product. The result is trusted through
    /// `min(a.valid + b.min, b.valid + a.min)`: beyond that, unknown
    /// coefficients of one factor would contribute.
    pub fn mul(&self, other: &LaurentSeries) -> Result<LaurentSeries> {
        self.check_mode(other)?;
        let valid_to = valid_add(self.valid_to, other.min_exp)
            .min(valid_add(other.valid_to, self.min_exp));
        let mut coeffs: BTreeMap<i64, RingElement> = BTreeMap::new();
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &other.coeffs {
                let e = ea + eb;
                if e > valid_to {
                    continue;
                }
                let term = ca.mul(cb)?;
                if term.is_zero() {
                    continue;
                }
                let entry = coeffs
                    .entry(e)
                    .or_insert_with(|| RingElement::zero(self.mode));
                *entry = entry.add(&term)?;
            }
        }
        coeffs.retain(|_, c: &mut RingElement| !c.is_zero());
        let mut out = LaurentSeries {
            mode: self.mode,
            min_exp: valid_add(self.min_exp, other.min_exp).min(valid_to),
            valid_to,
            coeffs,
        };
        out.normalize();
        Ok(out)
    }

    /// Multiply every coefficient by a ring constant.
    pub fn scale(&self, c: &RingElement) -> Result<LaurentSeries> {
        if c.mode() != self.mode {
            return Err(CoreError::RingMismatch);
        }
        let mut coeffs = BTreeMap::new();
        for (&e, x) in &self.coeffs {
            let y = x.mul(c)?;
            if !y.is_zero() {
                coeffs.insert(e, y);
            }
        }
        let mut out = LaurentSeries {
            mode: self.mode,
            min_exp: self.min_exp,
            valid_to: self.valid_to,
            coeffs,
        };
        out.normalize();
        Ok(out)
    }

    /// Shift exponents: multiply by `z^(-k)`.
    pub fn shift(&self, k: i64) -> LaurentSeries {
        LaurentSeries {
            mode: self.mode,
            min_exp: valid_add(self.min_exp, k),
            valid_to: valid_add(self.valid_to, k),
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Multiplicative inverse, determined through exponent `n_target`.
    ///
    /// Requires a unit leading coefficient (a constant `+1`/`-1` in
    /// symbolic mode, any nonzero rational numerically) and operand
    /// validity through `n_target + 2 * min_exp`.
    pub fn invert(&self, n_target: i64) -> Result<LaurentSeries> {
        let (m, lead) = self.leading().ok_or(CoreError::ZeroSeries)?;
        if !lead.is_unit() {
            return Err(CoreError::NonUnitLeading { exponent: m });
        }
        let needed = valid_add(n_target, 2 * m);
        if self.valid_to < needed {
            return Err(CoreError::InsufficientValidity {
                needed,
                have: self.valid_to,
            });
        }
        let lead_inv = lead.invert_unit()?;
        // b_f for f in [-m, n_target], from sum_{e+f=s} a_e b_f = [s == 0].
        let mut inv: BTreeMap<i64, RingElement> = BTreeMap::new();
        for f in -m..=n_target {
            let s = f + m;
            let mut rhs = if s == 0 {
                RingElement::one(self.mode)
            } else {
                RingElement::zero(self.mode)
            };
            // Subtract the contributions a_e * b_{s-e} for e > m.
            if s >= 1 {
                for (&e, a_e) in self.coeffs.range((m + 1)..=(s + m)) {
                    if let Some(b) = inv.get(&(s - e)) {
                        rhs = rhs.sub(&a_e.mul(b)?)?;
                    }
                }
            }
            let b_f = rhs.mul(&lead_inv)?;
            if !b_f.is_zero() {
                inv.insert(f, b_f);
            }
        }
        let mut out = LaurentSeries {
            mode: self.mode,
            min_exp: -m,
            valid_to: n_target,
            coeffs: inv,
        };
        out.normalize();
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "min_exp": self.min_exp,
            "valid_to": self.valid_to,
            "coeffs": self
                .coeffs
                .iter()
                .map(|(&e, c)| json!([e, ring_element_to_json(c)]))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value, mode: CoeffMode) -> Result<Self> {
        let min_exp = v
            .get("min_exp")
            .and_then(Value::as_i64)
            .ok_or_else(|| CoreError::domain("series JSON missing \"min_exp\""))?;
        let valid_to = v
            .get("valid_to")
            .and_then(Value::as_i64)
            .ok_or_else(|| CoreError::domain("series JSON missing \"valid_to\""))?;
        let entries = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| CoreError::domain("series JSON missing \"coeffs\""))?;
        let mut pairs = Vec::with_capacity(entries.len());
        for entry in entries {
            let pair = entry
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| CoreError::domain("series entry must be [e, coeff]"))?;
            let e = pair[0]
                .as_i64()
                .ok_or_else(|| CoreError::domain("exponent must be an integer"))?;
            if e < min_exp {
                return Err(CoreError::domain("coefficient below declared min_exp"));
            }
            pairs.push((e, ring_element_from_json(&pair[1])?));
        }
        LaurentSeries::from_coeffs(mode, pairs, valid_to)
    }
}

/// Exponent span `[lo, hi]` on which both series are trusted.
pub fn common_range(a: &LaurentSeries, b: &LaurentSeries) -> (i64, i64) {
    (a.min_exp.min(b.min_exp), a.valid_to.min(b.valid_to))
}

/// Exponents in the common trusted range where the two series differ.
///
/// An empty common range is an error: formal identities must never pass
/// vacuously.
pub fn mismatches(a: &LaurentSeries, b: &LaurentSeries) -> Result<Vec<i64>> {
    if a.mode() != b.mode() {
        return Err(CoreError::RingMismatch);
    }
    let (lo, hi) = common_range(a, b);
    if lo > hi {
        return Err(CoreError::EmptyComparisonRange { lo, hi });
    }
    let mut bad: Vec<i64> = Vec::new();
    for (&e, c) in a.coeffs.range(lo..=hi) {
        if b.coeffs.get(&e).map_or(!c.is_zero(), |d| d != c) {
            bad.push(e);
        }
    }
    for (&e, d) in b.coeffs.range(lo..=hi) {
        if !a.coeffs.contains_key(&e) && !d.is_zero() {
            bad.push(e);
        }
    }
    bad.sort_unstable();
    bad.dedup();
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{VariableId, WeightPoly};

    fn sym(p: WeightPoly) -> RingElement {
        RingElement::Symbolic(p)
    }

    fn var(k: u8, n: i64) -> RingElement {
        sym(WeightPoly::var(VariableId::new(k, n)))
    }

    fn one() -> RingElement {
        RingElement::one(CoeffMode::Symbolic)
    }

    #[test]
    fn monomial_product() {
        let z_inv = LaurentSeries::from_coeffs(CoeffMode::Symbolic, [(1, one())], 10).unwrap();
        let sq = z_inv.mul(&z_inv).unwrap();
        assert_eq!(sq.coefficient(2).unwrap(), one());
        assert_eq!(sq.min_exp(), 2);
        // a.valid 10 + b.min 1 = 11 both ways.
        assert_eq!(sq.valid_to(), 11);
    }

    #[test]
    fn sum_with_negation_vanishes() {
        let s = LaurentSeries::from_coeffs(
            CoeffMode::Symbolic,
            [(1, one()), (3, var(0, 0))],
            8,
        )
        .unwrap();
        let z = s.add(&s.neg()).unwrap();
        assert!(z.is_zero_on_range());
        assert_eq!(z.valid_to(), 8);
    }

    #[test]
    fn invert_z_inverse_is_z() {
        let z_inv = LaurentSeries::from_coeffs(CoeffMode::Symbolic, [(1, one())], 6).unwrap();
        let z = z_inv.invert(4).unwrap();
        assert_eq!(z.min_exp(), -1);
        assert_eq!(z.coefficient(-1).unwrap(), one());
        for e in 0..=4 {
            assert!(z.coefficient(e).unwrap().is_zero());
        }
    }

    #[test]
    fn geometric_series_from_linear_polynomial() {
        // 1/(z - b_0) = z^-1 + b_0 z^-2 + b_0^2 z^-3 + ...
        let b0 = WeightPoly::var(VariableId::new(0, 0));
        let lin = LaurentSeries::from_z_polynomial(
            CoeffMode::Symbolic,
            &[sym(b0.neg()), one()],
        )
        .unwrap();
        let inv = lin.invert(5).unwrap();
        let mut power = WeightPoly::one();
        for e in 1..=5i64 {
            assert_eq!(inv.coefficient(e).unwrap(), sym(power.clone()), "exp {e}");
            power = power.mul(&b0);
        }
    }

    #[test]
    fn inverse_multiplies_to_one() {
        let s = LaurentSeries::from_coeffs(
            CoeffMode::Symbolic,
            [(2, one()), (3, var(1, 0)), (5, var(0, 2).neg())],
            12,
        )
        .unwrap();
        let inv = s.invert(6).unwrap();
        let prod = s.mul(&inv).unwrap();
        assert_eq!(prod.coefficient(0).unwrap(), one());
        for e in 1..=prod.valid_to() {
            assert!(prod.coefficient(e).unwrap().is_zero(), "exp {e}");
        }
    }

    #[test]
    fn inversion_needs_a_unit_lead() {
        let s = LaurentSeries::from_coeffs(CoeffMode::Symbolic, [(1, var(0, 0))], 9).unwrap();
        assert!(matches!(
            s.invert(3),
            Err(CoreError::NonUnitLeading { exponent: 1 })
        ));
        let zero = LaurentSeries::zero(CoeffMode::Symbolic, 0, 5);
        assert!(matches!(zero.invert(3), Err(CoreError::ZeroSeries)));
    }

    #[test]
    fn inversion_validity_is_enforced() {
        let s = LaurentSeries::from_coeffs(CoeffMode::Symbolic, [(1, one())], 4).unwrap();
        // Need validity through n + 2 to invert to n.
        assert!(s.invert(2).is_ok());
        assert!(matches!(
            s.invert(3),
            Err(CoreError::InsufficientValidity { needed: 5, have: 4 })
        ));
    }

    #[test]
    fn comparisons_stop_at_the_validity_bound() {
        let a = LaurentSeries::from_coeffs(CoeffMode::Symbolic, [(1, one())], 12).unwrap();
        let b = LaurentSeries::from_coeffs(
            CoeffMode::Symbolic,
            [(1, one()), (7, var(0, 0))],
            5,
        );
        // b cannot even be built with a coefficient beyond its validity.
        assert!(matches!(
            b,
            Err(CoreError::InsufficientValidity { needed: 7, have: 5 })
        ));
        let b = LaurentSeries::from_coeffs(CoeffMode::Symbolic, [(1, one())], 5).unwrap();
        // The difference at exponent 7 is invisible: the common range ends
        // at 5, and asking past it is an error rather than a zero.
        assert!(mismatches(&a, &b).unwrap().is_empty());
        assert_eq!(common_range(&a, &b), (1, 5));
        assert!(b.coefficient(7).is_err());
    }

    #[test]
    fn recomputing_deeper_preserves_existing_coefficients() {
        let poly = LaurentSeries::from_z_polynomial(
            CoeffMode::Symbolic,
            &[var(1, 0).neg(), sym(WeightPoly::var(VariableId::new(0, 0)).neg()), one()],
        )
        .unwrap();
        let shallow = poly.invert(4).unwrap();
        let deep = poly.invert(9).unwrap();
        for e in shallow.min_exp()..=shallow.valid_to() {
            assert_eq!(
                shallow.coefficient(e).unwrap(),
                deep.coefficient(e).unwrap()
            );
        }
    }

    #[test]
    fn json_round_trip() {
        let s = LaurentSeries::from_coeffs(
            CoeffMode::Symbolic,
            [(1, one()), (4, var(2, -3).neg())],
            7,
        )
        .unwrap();
        let back = LaurentSeries::from_json(&s.to_json(), CoeffMode::Symbolic).unwrap();
        assert_eq!(back, s);
    }
}
