use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{BigRational, CoeffTable, Monomial, VariableId};
use crate::error::Result;

/// Sparse multivariate polynomial in the symbols `a_n^(k)` with exact
/// integer coefficients.
///
/// Path weights are monomials with coefficient 1, so integer coefficients
/// carry every symbolic quantity in this crate; rationals only appear once
/// a numeric table is substituted in. Zero coefficients are never stored,
/// which makes equality structural.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl WeightPoly {
    pub fn zero() -> Self {
        WeightPoly::default()
    }

    pub fn one() -> Self {
        WeightPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        WeightPoly { terms }
    }

    pub fn var(v: VariableId) -> Self {
        WeightPoly::monomial(Monomial::var(v), BigInt::one())
    }

    pub fn monomial(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        WeightPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .is_some_and(|c| c.is_one())
    }

    /// True when the polynomial is the constant +1 or -1.
    pub fn is_unit_constant(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .is_some_and(|c| c.abs().is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest total degree among the terms; zero polynomial reports 0.
    pub fn total_degree(&self) -> u64 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn variables(&self) -> impl Iterator<Item = VariableId> + '_ {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|&(v, _)| v))
    }

    /// Add `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &WeightPoly) -> WeightPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> WeightPoly {
        WeightPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &WeightPoly) -> WeightPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &WeightPoly) -> WeightPoly {
        let mut out = WeightPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> WeightPoly {
        if c.is_zero() {
            return WeightPoly::zero();
        }
        WeightPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    /// Rename every variable through `map`; errors if the map collides on
    /// variables that occur in some term.
    pub fn substitute(&self, map: impl Fn(VariableId) -> VariableId) -> Result<WeightPoly> {
        let mut out = WeightPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.substitute(&map)?, c.clone());
        }
        Ok(out)
    }

    /// Evaluate at the numeric assignments of `table`.
    pub fn eval(&self, table: &CoeffTable) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = BigRational::from(c.clone());
            for &(v, e) in m.factors() {
                let val = table.numeric_value(v.diag, v.offset)?;
                for _ in 0..e {
                    term *= &val;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Sum of the integer coefficients, i.e. the value at an all-ones
    /// assignment. For a path weight polynomial this is the path count.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Display for WeightPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}
