use std::fmt;

use serde_json::Value;

use crate::algebra::{ring_element_from_json, ring_element_to_json, CoeffMode, RingElement};
use crate::error::{CoreError, Result};
use crate::series::laurent::LaurentSeries;

/// Dense polynomial in `z` over the coefficient ring, ascending powers.
///
/// Used for characteristic polynomials and the linear entries of the
/// continued-fraction denominators. The zero polynomial has no
/// coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct ZPoly {
    mode: CoeffMode,
    coeffs: Vec<RingElement>,
}

impl ZPoly {
    pub fn zero(mode: CoeffMode) -> Self {
        ZPoly {
            mode,
            coeffs: Vec::new(),
        }
    }

    pub fn one(mode: CoeffMode) -> Self {
        ZPoly {
            mode,
            coeffs: vec![RingElement::one(mode)],
        }
    }

    pub fn constant(c: RingElement) -> Self {
        let mode = c.mode();
        let mut p = ZPoly {
            mode,
            coeffs: vec![c],
        };
        p.trim();
        p
    }

    /// The monic linear polynomial `z - c`.
    pub fn z_minus(c: &RingElement) -> Self {
        ZPoly {
            mode: c.mode(),
            coeffs: vec![c.neg(), RingElement::one(c.mode())],
        }
    }

    pub fn from_coeffs(mode: CoeffMode, ascending: Vec<RingElement>) -> Result<Self> {
        if ascending.iter().any(|c| c.mode() != mode) {
            return Err(CoreError::RingMismatch);
        }
        let mut p = ZPoly {
            mode,
            coeffs: ascending,
        };
        p.trim();
        Ok(p)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(RingElement::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn mode(&self) -> CoeffMode {
        self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the zero polynomial is reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn coefficient(&self, degree: usize) -> RingElement {
        self.coeffs
            .get(degree)
            .cloned()
            .unwrap_or_else(|| RingElement::zero(self.mode))
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(RingElement::is_one)
    }

    fn check_mode(&self, other: &ZPoly) -> Result<()> {
        if self.mode != other.mode {
            return Err(CoreError::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &ZPoly) -> Result<ZPoly> {
        self.check_mode(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for d in 0..len {
            coeffs.push(self.coefficient(d).add(&other.coefficient(d))?);
        }
        ZPoly::from_coeffs(self.mode, coeffs)
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly {
            mode: self.mode,
            coeffs: self.coeffs.iter().map(RingElement::neg).collect(),
        }
    }

    pub fn sub(&self, other: &ZPoly) -> Result<ZPoly> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &ZPoly) -> Result<ZPoly> {
        self.check_mode(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(ZPoly::zero(self.mode));
        }
        let mut coeffs =
            vec![RingElement::zero(self.mode); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b)?)?;
            }
        }
        ZPoly::from_coeffs(self.mode, coeffs)
    }

    pub fn scale(&self, c: &RingElement) -> Result<ZPoly> {
        if c.mode() != self.mode {
            return Err(CoreError::RingMismatch);
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.mul(c))
            .collect::<Result<Vec<_>>>()?;
        ZPoly::from_coeffs(self.mode, coeffs)
    }

    /// View as an exact Laurent series (`z^d` at exponent `-d`).
    pub fn to_series(&self) -> LaurentSeries {
        LaurentSeries::from_z_polynomial(self.mode, &self.coeffs)
            .expect("polynomial coefficients share the mode")
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(ring_element_to_json).collect())
    }

    pub fn from_json(v: &Value, mode: CoeffMode) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| CoreError::domain("polynomial JSON must be an array"))?;
        let coeffs = arr
            .iter()
            .map(ring_element_from_json)
            .collect::<Result<Vec<_>>>()?;
        ZPoly::from_coeffs(mode, coeffs)
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{d}")?,
            }
        }
        Ok(())
    }
}

/// Expand `numer / denom` as a Laurent series at infinity, trusted to
/// `n_target`. The denominator's leading coefficient must be a unit
/// (the characteristic polynomials used here are monic).
pub fn rational_to_series(numer: &ZPoly, denom: &ZPoly, n_target: i64) -> Result<LaurentSeries> {
    if denom.is_zero() {
        return Err(CoreError::DivisionByZero);
    }
    if numer.is_zero() {
        return Ok(LaurentSeries::zero(numer.mode(), n_target, n_target));
    }
    // The numerator shifts exponents down by its degree; invert deep
    // enough that the product stays trusted through `n_target`.
    let num_series = numer.to_series();
    let inv = denom.to_series().invert(n_target - num_series.min_exp())?;
    Ok(num_series.mul(&inv)?.truncated(n_target))
}
