use std::fmt;
use std::str::FromStr;

use crate::algebra::{CoeffMode, CoeffTable, RingElement, WeightPoly};
use crate::error::{CoreError, Result};
use crate::paths::enumerate::PathEnumerator;

/// The six path collections.
///
/// `P` walks are free to cross the axis; `D` excursions/meanders stay
/// weakly above it; `Dhat` holds their reflected images below the axis.
/// `R`/`S`/`Shat` are the same three shapes with steps restricted to
/// rise-by-1 and fall-by-p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    P,
    D,
    Dhat,
    R,
    S,
    Shat,
}

impl Family {
    pub fn restricted_steps(&self) -> bool {
        matches!(self, Family::R | Family::S | Family::Shat)
    }

    pub fn allows_shift(&self) -> bool {
        !matches!(self, Family::P | Family::R)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::P => "P",
            Family::D => "D",
            Family::Dhat => "Dhat",
            Family::R => "R",
            Family::S => "S",
            Family::Shat => "Shat",
        };
        write!(f, "{name}")
    }
}

impl FromStr for Family {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" | "p" => Ok(Family::P),
            "D" | "d" => Ok(Family::D),
            "Dhat" | "dhat" => Ok(Family::Dhat),
            "R" | "r" => Ok(Family::R),
            "S" | "s" => Ok(Family::S),
            "Shat" | "shat" => Ok(Family::Shat),
            other => Err(CoreError::domain(format!("unknown family {other:?}"))),
        }
    }
}

/// Selector for one finite path collection: family, band depth `p`, length
/// `n`, terminal index `j` in `[0, p]`, and vertical shift `q`.
///
/// Shifted collections live in their natural coordinates: the ascending
/// families start at height `q`, the reflected ones at height `-j - q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    family: Family,
    p: u8,
    n: u32,
    j: u8,
    q: u32,
}

impl FamilySpec {
    pub fn new(family: Family, p: u8, n: u32, j: u8, q: u32) -> Result<Self> {
        if p < 1 {
            return Err(CoreError::domain("band depth p must be at least 1"));
        }
        if j > p {
            return Err(CoreError::domain(format!(
                "terminal index j = {j} outside [0, {p}]"
            )));
        }
        if q > 0 && !family.allows_shift() {
            return Err(CoreError::domain(format!(
                "family {family} does not take a shift"
            )));
        }
        Ok(FamilySpec { family, p, n, j, q })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn j(&self) -> u8 {
        self.j
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn start_height(&self) -> i64 {
        match self.family {
            Family::P | Family::R => 0,
            Family::D | Family::S => i64::from(self.q),
            Family::Dhat | Family::Shat => -i64::from(self.j) - i64::from(self.q),
        }
    }

    pub fn end_height(&self) -> i64 {
        match self.family {
            Family::P | Family::R => i64::from(self.j),
            Family::D | Family::S => i64::from(self.j) + i64::from(self.q),
            Family::Dhat | Family::Shat => -i64::from(self.q),
        }
    }

    /// Lower height bound (inclusive), when the family has one.
    pub fn min_bound(&self) -> Option<i64> {
        match self.family {
            Family::D | Family::S => Some(i64::from(self.q)),
            _ => None,
        }
    }

    /// Upper height bound (inclusive), when the family has one.
    pub fn max_bound(&self) -> Option<i64> {
        match self.family {
            Family::Dhat | Family::Shat => Some(-i64::from(self.q)),
            _ => None,
        }
    }

    /// Permitted rises in enumeration order.
    pub fn rises(&self) -> Vec<i8> {
        if self.family.restricted_steps() {
            vec![1, -(self.p as i8)]
        } else {
            let mut rises = Vec::with_capacity(usize::from(self.p) + 2);
            rises.push(1);
            for j in 0..=self.p {
                rises.push(-(j as i8));
            }
            rises
        }
    }

    /// Restricted families are nonempty only when `n = m(p+1) + j`.
    pub fn congruent(&self) -> bool {
        !self.family.restricted_steps()
            || (i64::from(self.n) - i64::from(self.j)).rem_euclid(i64::from(self.p) + 1) == 0
    }

    /// The number of downsteps `m` of a restricted-family path, when the
    /// length is congruent.
    pub fn down_count(&self) -> Option<u32> {
        if self.family.restricted_steps() && self.congruent() {
            Some((self.n - u32::from(self.j)) / (u32::from(self.p) + 1))
        } else {
            None
        }
    }

    /// Stream the member paths, each exactly once, depth-first with steps
    /// tried in the order `+1, 0, -1, ..., -p`.
    pub fn enumerate(&self) -> PathEnumerator {
        PathEnumerator::new(*self)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{},{}]", self.family, self.n, self.j)?;
        if self.q > 0 {
            write!(f, "^({})", self.q)?;
        }
        Ok(())
    }
}

/// Sum of the path weights over the whole collection; zero for an empty
/// collection.
pub fn weight_polynomial(spec: &FamilySpec, table: &CoeffTable) -> Result<RingElement> {
    if table.p() != spec.p() {
        return Err(CoreError::domain(format!(
            "table band depth {} does not match family band depth {}",
            table.p(),
            spec.p()
        )));
    }
    match table.mode() {
        CoeffMode::Symbolic => {
            let mut acc = WeightPoly::zero();
            for path in spec.enumerate() {
                match path.weight(table)? {
                    RingElement::Symbolic(w) => {
                        for (m, c) in w.terms() {
                            acc.add_term(m.clone(), c.clone());
                        }
                    }
                    RingElement::Numeric(_) => unreachable!("symbolic table"),
                }
            }
            Ok(RingElement::Symbolic(acc))
        }
        CoeffMode::Numeric => {
            let mut acc = table.zero();
            for path in spec.enumerate() {
                acc = acc.add(&path.weight(table)?)?;
            }
            Ok(acc)
        }
    }
}
