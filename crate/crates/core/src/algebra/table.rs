use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{BigRational, CoeffMode, RingElement, VariableId, WeightPoly};
use crate::error::{CoreError, Result};

/// Restriction applied to the coefficient sequences.
///
/// `Bidiagonal` zeroes every diagonal except the superdiagonal of ones and
/// the deepest one (`k = p`), the setting where the genetic-sum and
/// Stieltjes-Rogers identities live.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableShape {
    Full,
    Bidiagonal,
}

/// Assignment of the coefficient symbols `a_n^(k)`, `0 <= k <= p`.
///
/// Symbolic tables manufacture variables on demand over all offsets.
/// Numeric tables carry exact rationals on a declared offset window
/// `[lo, hi]`; every lookup outside it is a hard error rather than an
/// implicit zero.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTable {
    p: u8,
    mode: CoeffMode,
    shape: TableShape,
    window: Option<(i64, i64)>,
    values: BTreeMap<(u8, i64), BigRational>,
}

impl CoeffTable {
    /// Symbolic table for band depth `p`.
    pub fn symbolic(p: u8) -> Self {
        assert!(p >= 1, "band depth p must be at least 1");
        CoeffTable {
            p,
            mode: CoeffMode::Symbolic,
            shape: TableShape::Full,
            window: None,
            values: BTreeMap::new(),
        }
    }

    /// Symbolic table with all diagonals above the deepest forced to zero.
    pub fn symbolic_bidiagonal(p: u8) -> Self {
        let mut t = CoeffTable::symbolic(p);
        t.shape = TableShape::Bidiagonal;
        t
    }

    /// Numeric table over `window = [lo, hi]`; `values` must assign every
    /// `(k, n)` with `0 <= k <= p` and `lo <= n <= hi`.
    pub fn numeric(
        p: u8,
        window: (i64, i64),
        values: BTreeMap<(u8, i64), BigRational>,
    ) -> Result<Self> {
        assert!(p >= 1, "band depth p must be at least 1");
        let (lo, hi) = window;
        if lo > hi {
            return Err(CoreError::domain(format!("empty window [{lo}, {hi}]")));
        }
        for k in 0..=p {
            for n in lo..=hi {
                if !values.contains_key(&(k, n)) {
                    return Err(CoreError::IncompleteTable { diag: k, offset: n });
                }
            }
        }
        Ok(CoeffTable {
            p,
            mode: CoeffMode::Numeric,
            shape: TableShape::Full,
            window: Some(window),
            values,
        })
    }

    /// Seeded random numeric table: integer values with magnitude in
    /// `[1, 9]`, sign from the generator. Deterministic per seed.
    pub fn random(p: u8, window: (i64, i64), seed: u64) -> Result<Self> {
        let mut rng = SplitMix64::new(seed);
        let (lo, hi) = window;
        let mut values = BTreeMap::new();
        for k in 0..=p {
            for n in lo..=hi {
                let mag = i64::try_from(rng.next() % 9).unwrap() + 1;
                let signed = if rng.next().is_multiple_of(2) { mag } else { -mag };
                values.insert((k, n), BigRational::from(BigInt::from(signed)));
            }
        }
        CoeffTable::numeric(p, window, values)
    }

    /// Like [`CoeffTable::random`] but with the bidiagonal restriction.
    pub fn random_bidiagonal(p: u8, window: (i64, i64), seed: u64) -> Result<Self> {
        let mut t = CoeffTable::random(p, window, seed)?;
        for ((k, _), v) in t.values.iter_mut() {
            if *k < p {
                *v = BigRational::zero();
            }
        }
        t.shape = TableShape::Bidiagonal;
        Ok(t)
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn mode(&self) -> CoeffMode {
        self.mode
    }

    pub fn shape(&self) -> TableShape {
        self.shape
    }

    pub fn window(&self) -> Option<(i64, i64)> {
        self.window
    }

    pub fn values(&self) -> &BTreeMap<(u8, i64), BigRational> {
        &self.values
    }

    pub fn is_bidiagonal(&self) -> bool {
        self.shape == TableShape::Bidiagonal
    }

    /// The ring element bound to `a_offset^(diag)`.
    pub fn coeff(&self, diag: u8, offset: i64) -> Result<RingElement> {
        if diag > self.p {
            return Err(CoreError::domain(format!(
                "diagonal {diag} exceeds band depth p = {}",
                self.p
            )));
        }
        match self.mode {
            CoeffMode::Symbolic => {
                if self.shape == TableShape::Bidiagonal && diag < self.p {
                    Ok(RingElement::Symbolic(WeightPoly::zero()))
                } else {
                    Ok(RingElement::Symbolic(WeightPoly::var(VariableId::new(
                        diag, offset,
                    ))))
                }
            }
            CoeffMode::Numeric => Ok(RingElement::Numeric(self.numeric_value(diag, offset)?)),
        }
    }

    /// Numeric lookup; errors outside the declared window.
    pub fn numeric_value(&self, diag: u8, offset: i64) -> Result<BigRational> {
        if self.mode != CoeffMode::Numeric {
            return Err(CoreError::WrongMode {
                required: "numeric",
            });
        }
        let (lo, hi) = self.window.expect("numeric table has a window");
        if offset < lo || offset > hi || diag > self.p {
            return Err(CoreError::WindowMiss {
                diag,
                offset,
            });
        }
        Ok(self.values[&(diag, offset)].clone())
    }

    pub fn zero(&self) -> RingElement {
        RingElement::zero(self.mode)
    }

    pub fn one(&self) -> RingElement {
        RingElement::one(self.mode)
    }
}

/// Small deterministic generator for seeded random tables; splitmix64.
struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    fn next(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}
