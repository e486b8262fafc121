use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{BigRational, CoeffTable, WeightPoly};
use crate::error::{CoreError, Result};

/// Which coefficient carrier a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoeffMode {
    Symbolic,
    Numeric,
}

impl fmt::Display for CoeffMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffMode::Symbolic => write!(f, "symbolic"),
            CoeffMode::Numeric => write!(f, "numeric"),
        }
    }
}

/// One element of the active coefficient ring: a weight polynomial in
/// symbolic mode, an exact rational in numeric mode.
///
/// The two tags never mix inside a single computation; every binary
/// operation checks and reports [`CoreError::MixedMode`] otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingElement {
    Symbolic(WeightPoly),
    Numeric(BigRational),
}

impl RingElement {
    pub fn zero(mode: CoeffMode) -> Self {
        match mode {
            CoeffMode::Symbolic => RingElement::Symbolic(WeightPoly::zero()),
            CoeffMode::Numeric => RingElement::Numeric(BigRational::zero()),
        }
    }

    pub fn one(mode: CoeffMode) -> Self {
        match mode {
            CoeffMode::Symbolic => RingElement::Symbolic(WeightPoly::one()),
            CoeffMode::Numeric => RingElement::Numeric(BigRational::one()),
        }
    }

    pub fn from_int(mode: CoeffMode, n: i64) -> Self {
        match mode {
            CoeffMode::Symbolic => RingElement::Symbolic(WeightPoly::constant(BigInt::from(n))),
            CoeffMode::Numeric => RingElement::Numeric(BigRational::from(BigInt::from(n))),
        }
    }

    pub fn mode(&self) -> CoeffMode {
        match self {
            RingElement::Symbolic(_) => CoeffMode::Symbolic,
            RingElement::Numeric(_) => CoeffMode::Numeric,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElement::Symbolic(p) => p.is_zero(),
            RingElement::Numeric(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            RingElement::Symbolic(p) => p.is_one(),
            RingElement::Numeric(r) => r.is_one(),
        }
    }

    /// Units of the coefficient ring: constants +1/-1 symbolically, any
    /// nonzero rational numerically.
    pub fn is_unit(&self) -> bool {
        match self {
            RingElement::Symbolic(p) => p.is_unit_constant(),
            RingElement::Numeric(r) => !r.is_zero(),
        }
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        match (self, other) {
            (RingElement::Symbolic(a), RingElement::Symbolic(b)) => {
                Ok(RingElement::Symbolic(a.add(b)))
            }
            (RingElement::Numeric(a), RingElement::Numeric(b)) => {
                Ok(RingElement::Numeric(a + b))
            }
            _ => Err(CoreError::MixedMode),
        }
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement> {
        match (self, other) {
            (RingElement::Symbolic(a), RingElement::Symbolic(b)) => {
                Ok(RingElement::Symbolic(a.sub(b)))
            }
            (RingElement::Numeric(a), RingElement::Numeric(b)) => {
                Ok(RingElement::Numeric(a - b))
            }
            _ => Err(CoreError::MixedMode),
        }
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        match (self, other) {
            (RingElement::Symbolic(a), RingElement::Symbolic(b)) => {
                Ok(RingElement::Symbolic(a.mul(b)))
            }
            (RingElement::Numeric(a), RingElement::Numeric(b)) => {
                Ok(RingElement::Numeric(a * b))
            }
            _ => Err(CoreError::MixedMode),
        }
    }

    pub fn neg(&self) -> RingElement {
        match self {
            RingElement::Symbolic(p) => RingElement::Symbolic(p.neg()),
            RingElement::Numeric(r) => RingElement::Numeric(-r),
        }
    }

    /// Multiplicative inverse of a unit.
    pub fn invert_unit(&self) -> Result<RingElement> {
        match self {
            RingElement::Symbolic(p) if p.is_unit_constant() => Ok(self.clone()),
            RingElement::Symbolic(_) => Err(CoreError::NonUnitLeading { exponent: 0 }),
            RingElement::Numeric(r) if !r.is_zero() => Ok(RingElement::Numeric(r.recip())),
            RingElement::Numeric(_) => Err(CoreError::DivisionByZero),
        }
    }

    /// Specialize at a numeric table; numeric elements pass through.
    pub fn eval(&self, table: &CoeffTable) -> Result<BigRational> {
        match self {
            RingElement::Symbolic(p) => p.eval(table),
            RingElement::Numeric(r) => Ok(r.clone()),
        }
    }

    pub fn as_poly(&self) -> Result<&WeightPoly> {
        match self {
            RingElement::Symbolic(p) => Ok(p),
            RingElement::Numeric(_) => Err(CoreError::WrongMode {
                required: "symbolic",
            }),
        }
    }

    pub fn as_rational(&self) -> Result<&BigRational> {
        match self {
            RingElement::Numeric(r) => Ok(r),
            RingElement::Symbolic(_) => Err(CoreError::WrongMode {
                required: "numeric",
            }),
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Symbolic(p) => write!(f, "{p}"),
            RingElement::Numeric(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}
