use serde_json::{json, Value};

use crate::algebra::{CoeffTable, RingElement};
use crate::error::{CoreError, Result};
use crate::paths::step::{step_weight, Step};

/// A lattice path: a start vertex plus a run of steps.
///
/// Heights are derived on demand by prefix sums; family membership checks
/// work off the derived minimum and maximum heights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    start: (u32, i64),
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: (u32, i64), steps: Vec<Step>) -> Self {
        LatticePath { start, steps }
    }

    /// Path from raw rises, validated against band depth `p`.
    pub fn from_rises(start: (u32, i64), rises: &[i8], p: u8) -> Result<Self> {
        let steps = rises
            .iter()
            .map(|&r| Step::new(r, p))
            .collect::<Result<Vec<_>>>()?;
        Ok(LatticePath { start, steps })
    }

    pub fn start(&self) -> (u32, i64) {
        self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn end(&self) -> (u32, i64) {
        (
            self.start.0 + self.steps.len() as u32,
            self.start.1 + self.steps.iter().map(|s| i64::from(s.rise())).sum::<i64>(),
        )
    }

    /// Vertex heights from start to end, length `len() + 1`.
    pub fn heights(&self) -> impl Iterator<Item = i64> + '_ {
        std::iter::once(self.start.1).chain(self.steps.iter().scan(self.start.1, |h, s| {
            *h += i64::from(s.rise());
            Some(*h)
        }))
    }

    pub fn min_height(&self) -> i64 {
        self.heights().min().expect("at least the start vertex")
    }

    pub fn max_height(&self) -> i64 {
        self.heights().max().expect("at least the start vertex")
    }

    /// Vertical translate by `q` (negative shifts downward).
    pub fn shifted(&self, q: i64) -> LatticePath {
        LatticePath {
            start: (self.start.0, self.start.1 + q),
            steps: self.steps.clone(),
        }
    }

    /// Product of the step weights; the empty path has weight 1.
    pub fn weight(&self, table: &CoeffTable) -> Result<RingElement> {
        let mut acc = table.one();
        let mut h = self.start.1;
        for s in &self.steps {
            if !s.is_upstep() {
                acc = acc.mul(&step_weight(*s, h, table)?)?;
            }
            h += i64::from(s.rise());
        }
        Ok(acc)
    }

    /// Compact text form, e.g. `(0,0) U U D2`.
    pub fn text(&self) -> String {
        let tokens: Vec<String> = self.steps.iter().map(Step::token).collect();
        format!("({},{}) {}", self.start.0, self.start.1, tokens.join(""))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "start": [self.start.0, self.start.1],
            "rises": self.steps.iter().map(|s| s.rise()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value, p: u8) -> Result<Self> {
        let start = v
            .get("start")
            .and_then(Value::as_array)
            .filter(|a| a.len() == 2)
            .ok_or_else(|| CoreError::domain("path JSON needs \"start\": [x, y]"))?;
        let x = start[0]
            .as_u64()
            .and_then(|x| u32::try_from(x).ok())
            .ok_or_else(|| CoreError::domain("start x must be a nonnegative integer"))?;
        let y = start[1]
            .as_i64()
            .ok_or_else(|| CoreError::domain("start y must be an integer"))?;
        let rises = v
            .get("rises")
            .and_then(Value::as_array)
            .ok_or_else(|| CoreError::domain("path JSON needs \"rises\""))?
            .iter()
            .map(|r| {
                r.as_i64()
                    .and_then(|r| i8::try_from(r).ok())
                    .ok_or_else(|| CoreError::domain("rise must be a small integer"))
            })
            .collect::<Result<Vec<_>>>()?;
        LatticePath::from_rises((x, y), &rises, p)
    }
}

/// Reflect a path that starts at `(0, 0)`, ends at height `j >= 0`, and
/// stays weakly above the axis: first across the x-axis, then across the
/// vertical midline. The image starts at `(0, -j)`, ends at height 0, and
/// stays weakly below the axis; rises are the original run reversed.
pub fn reflect_hat(path: &LatticePath) -> Result<LatticePath> {
    let (_, y0) = path.start();
    let (_, y_end) = path.end();
    if y0 != 0 || y_end < 0 || path.min_height() != 0 {
        return Err(CoreError::domain(
            "reflection input must start at height 0, end at height >= 0, min height 0",
        ));
    }
    let mut steps = path.steps.to_vec();
    steps.reverse();
    Ok(LatticePath::new((path.start.0, -y_end), steps))
}

/// Inverse of [`reflect_hat`]: takes a path from `(0, -j)` to height 0 with
/// maximum height 0 back to its preimage above the axis.
pub fn reflect_hat_inverse(path: &LatticePath) -> Result<LatticePath> {
    let (_, y0) = path.start();
    let (_, y_end) = path.end();
    if y_end != 0 || y0 > 0 || path.max_height() != 0 {
        return Err(CoreError::domain(
            "reflection preimage must end at height 0, start at height <= 0, max height 0",
        ));
    }
    let mut steps = path.steps.to_vec();
    steps.reverse();
    Ok(LatticePath::new((path.start.0, 0), steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Monomial, VariableId, WeightPoly};
    use num_bigint::BigInt;
    use num_traits::One;

    fn path(rises: &[i8], p: u8) -> LatticePath {
        LatticePath::from_rises((0, 0), rises, p).unwrap()
    }

    #[test]
    fn empty_path_weighs_one() {
        let table = CoeffTable::symbolic(2);
        let p = LatticePath::new((0, 0), vec![]);
        assert!(p.weight(&table).unwrap().is_one());
        assert_eq!(p.end(), (0, 0));
    }

    #[test]
    fn motzkin_figure_weight() {
        // Height profile 0,1,1,0,1,1,2,1,1,2,2,1,1,0 with p = 1:
        // weight a_0^2 a_1^2 b_1^4 b_2 in the scalar naming.
        let table = CoeffTable::symbolic(1);
        let gamma = path(&[1, 0, -1, 1, 0, 1, -1, 0, 1, 0, -1, 0, -1], 1);
        assert_eq!(gamma.end(), (13, 0));
        let expected = WeightPoly::monomial(
            Monomial::from_pairs([
                (VariableId::new(1, 0), 2), // a_0^2
                (VariableId::new(1, 1), 2), // a_1^2
                (VariableId::new(0, 1), 4), // b_1^4
                (VariableId::new(0, 2), 1), // b_2
            ]),
            BigInt::one(),
        );
        assert_eq!(gamma.weight(&table).unwrap().as_poly().unwrap(), &expected);
    }

    #[test]
    fn p_two_free_walk_weight() {
        // A 16-step walk with rises -2,1,1,1,-2,1,1,1,-2,1,-2,1,-2,1,1,1
        // ending at height 1: the five downsteps land on a_{-2}, a_{-1},
        // a_0, a_{-1}, a_{-2} of the deepest diagonal.
        let table = CoeffTable::symbolic(2);
        let gamma = path(&[-2, 1, 1, 1, -2, 1, 1, 1, -2, 1, -2, 1, -2, 1, 1, 1], 2);
        assert_eq!(gamma.end(), (16, 1));
        let expected = WeightPoly::monomial(
            Monomial::from_pairs([
                (VariableId::new(2, -2), 2),
                (VariableId::new(2, -1), 2),
                (VariableId::new(2, 0), 1),
            ]),
            BigInt::one(),
        );
        assert_eq!(gamma.weight(&table).unwrap().as_poly().unwrap(), &expected);
    }

    #[test]
    fn p_two_reflected_run_weight() {
        // Steps U U D2 U U D2 U repeated shape ending at height 1 with the
        // downsteps taken from heights 2, i.e. weights a_0 on the deepest
        // diagonal; checks the a^{(2)} indexing on a small case.
        let table = CoeffTable::symbolic(2);
        let gamma = path(&[1, 1, -2, 1, 1, -2, 1], 2);
        let w = gamma.weight(&table).unwrap();
        let expected = WeightPoly::monomial(
            Monomial::from_pairs([(VariableId::new(2, 0), 2)]),
            BigInt::one(),
        );
        assert_eq!(w.as_poly().unwrap(), &expected);
    }

    #[test]
    fn reflection_reverses_and_drops() {
        // Single upstep in the ascending family maps to the upstep from
        // (0,-1) to (1,0).
        let gamma = path(&[1], 2);
        let hat = reflect_hat(&gamma).unwrap();
        assert_eq!(hat.start(), (0, -1));
        assert_eq!(hat.end(), (1, 0));
        assert_eq!(reflect_hat_inverse(&hat).unwrap(), gamma);
    }

    #[test]
    fn reflection_rejects_dipping_paths() {
        let gamma = LatticePath::from_rises((0, 0), &[-1, 1, 1], 1).unwrap();
        assert!(reflect_hat(&gamma).is_err());
    }

    #[test]
    fn json_round_trip() {
        let gamma = LatticePath::from_rises((0, -2), &[1, 1, -2, 1], 2).unwrap();
        let v = gamma.to_json();
        assert_eq!(LatticePath::from_json(&v, 2).unwrap(), gamma);
    }
}
