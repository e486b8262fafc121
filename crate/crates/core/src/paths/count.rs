use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{CoreError, Result};
use crate::paths::family::{Family, FamilySpec};

/// Exact cardinality of a path collection.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PathCount(BigUint);

impl PathCount {
    pub fn zero() -> Self {
        PathCount(BigUint::zero())
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }
}

impl From<BigUint> for PathCount {
    fn from(v: BigUint) -> Self {
        PathCount(v)
    }
}

impl From<u64> for PathCount {
    fn from(v: u64) -> Self {
        PathCount(BigUint::from(v))
    }
}

impl fmt::Display for PathCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Exact binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `(j+1)/(pm+j+1) * C(m(p+1)+j, m)`: the number of restricted meanders of
/// length `m(p+1)+j` from the axis to height `j` staying weakly above it.
pub fn fuss_catalan(p: u8, m: u64, j: u8) -> Result<PathCount> {
    if p < 1 {
        return Err(CoreError::domain("band depth p must be at least 1"));
    }
    if j > p {
        return Err(CoreError::domain(format!("j = {j} outside [0, {p}]")));
    }
    let n = m * (u64::from(p) + 1) + u64::from(j);
    let numer = binomial(n, m) * BigUint::from(u64::from(j) + 1);
    let denom = BigUint::from(u64::from(p) * m + u64::from(j) + 1);
    let (quot, rem) = num_integer::Integer::div_rem(&numer, &denom);
    debug_assert!(rem.is_zero(), "Fuss-Catalan ratio is always integral");
    Ok(PathCount(quot))
}

/// Cardinality of the collection: closed forms for the restricted families,
/// enumeration for the rest. Always equals the enumeration length.
pub fn count(spec: &FamilySpec) -> Result<PathCount> {
    match spec.family() {
        Family::R => match spec.down_count() {
            None => Ok(PathCount::zero()),
            Some(m) => Ok(PathCount(binomial(u64::from(spec.n()), u64::from(m)))),
        },
        Family::S | Family::Shat => match spec.down_count() {
            None => Ok(PathCount::zero()),
            Some(m) => fuss_catalan(spec.p(), u64::from(m), spec.j()),
        },
        Family::P | Family::D | Family::Dhat => {
            let mut acc: u64 = 0;
            for _ in spec.enumerate() {
                acc += 1;
            }
            Ok(PathCount(BigUint::from(acc)))
        }
    }
}
