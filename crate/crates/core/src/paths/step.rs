use std::fmt;

use crate::algebra::{CoeffTable, RingElement};
use crate::error::{CoreError, Result};

/// One lattice step, recorded by its rise: `+1` (upstep), `0` (level step),
/// or `-j` for `1 <= j <= p` (downstep by `j` units).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    rise: i8,
}

impl Step {
    /// Validates `-p <= rise <= 1`.
    pub fn new(rise: i8, p: u8) -> Result<Self> {
        if rise > 1 || i16::from(rise) < -i16::from(p) {
            return Err(CoreError::domain(format!(
                "step rise {rise} outside [-{p}, 1]"
            )));
        }
        Ok(Step { rise })
    }

    pub fn rise(&self) -> i8 {
        self.rise
    }

    pub fn is_upstep(&self) -> bool {
        self.rise == 1
    }

    /// Drop in height of a level or down step (0 for level steps).
    pub fn drop(&self) -> Option<u8> {
        if self.rise <= 0 {
            Some((-i16::from(self.rise)) as u8)
        } else {
            None
        }
    }

    /// Text token: `U`, `L`, or `D<j>`.
    pub fn token(&self) -> String {
        match self.rise {
            1 => "U".to_string(),
            0 => "L".to_string(),
            r => format!("D{}", -r),
        }
    }

    pub fn from_token(tok: &str, p: u8) -> Result<Self> {
        match tok {
            "U" => Step::new(1, p),
            "L" => Step::new(0, p),
            _ => {
                let j: i16 = tok
                    .strip_prefix('D')
                    .and_then(|s| s.parse().ok())
                    .filter(|&j| j >= 1)
                    .ok_or_else(|| CoreError::domain(format!("bad step token {tok:?}")))?;
                Step::new(
                    i8::try_from(-j).map_err(|_| CoreError::domain("step drop too large"))?,
                    p,
                )
            }
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

/// Weight of `step` taken from initial height `m`: upsteps weigh 1; a step
/// with rise `-j` weighs `a_{m-j}^(j)` (level steps are the `j = 0` case).
pub fn step_weight(step: Step, at_height: i64, table: &CoeffTable) -> Result<RingElement> {
    match step.drop() {
        None => Ok(table.one()),
        Some(j) => table.coeff(j, at_height - i64::from(j)),
    }
}
