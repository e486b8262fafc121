use std::cmp::Ordering;
use std::fmt;

use crate::algebra::VariableId;
use crate::error::{CoreError, Result};

/// A product of variables with positive exponents, kept sorted by variable.
///
/// The empty factor list is the constant monomial 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(VariableId, u32)>,
}

impl Monomial {
    /// The constant monomial.
    pub fn one() -> Self {
        Monomial::default()
    }

    /// A single variable to the first power.
    pub fn var(v: VariableId) -> Self {
        Monomial {
            factors: vec![(v, 1)],
        }
    }

    /// Build from unsorted `(variable, exponent)` pairs; merges duplicates,
    /// drops zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VariableId, u32)>) -> Self {
        let mut factors: Vec<(VariableId, u32)> = pairs.into_iter().filter(|t| t.1 > 0).collect();
        factors.sort_by_key(|t| t.0);
        let mut merged: Vec<(VariableId, u32)> = Vec::with_capacity(factors.len());
        for (v, e) in factors {
            match merged.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { factors: merged }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(VariableId, u32)] {
        &self.factors
    }

    pub fn total_degree(&self) -> u64 {
        self.factors.iter().map(|(_, e)| u64::from(*e)).sum()
    }

    /// Merge-multiply two monomials.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            match self.factors[i].0.cmp(&other.factors[j].0) {
                Ordering::Less => {
                    out.push(self.factors[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.factors[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.factors[i].0, self.factors[i].1 + other.factors[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        Monomial { factors: out }
    }

    /// Multiply by a single variable.
    pub fn mul_var(&self, v: VariableId) -> Monomial {
        self.mul(&Monomial::var(v))
    }

    /// Rename variables through `map`. The map must be injective on the
    /// variables that occur here.
    pub fn substitute(&self, map: impl Fn(VariableId) -> VariableId) -> Result<Monomial> {
        let renamed = Monomial::from_pairs(self.factors.iter().map(|&(v, e)| (map(v), e)));
        // An injective rename preserves the number of distinct variables.
        if renamed.factors.len() != self.factors.len() {
            return Err(CoreError::NonInjectiveSubstitution);
        }
        Ok(renamed)
    }
}

/// Graded order: total degree first, then lexicographic on the sorted
/// factor lists. Chosen for deterministic output; any total order works.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
