use crate::paths::family::FamilySpec;
use crate::paths::path::LatticePath;

/// Streaming depth-first enumeration of one path collection.
///
/// Memory stays proportional to the path length while collection sizes grow
/// combinatorially. Steps are tried in the order `+1, 0, -1, ..., -p`
/// (`+1, -p` for the restricted families), which fixes the output order.
pub struct PathEnumerator {
    spec: FamilySpec,
    rises: Vec<i8>,
    /// Option index to try next at each depth; len == rises.len() + 1.
    cursor: Vec<usize>,
    height: i64,
    options: Vec<i8>,
    done: bool,
}

impl PathEnumerator {
    pub(crate) fn new(spec: FamilySpec) -> Self {
        // Length-0 collections hold the single vertex path only when the
        // endpoints coincide; deeper leaves are endpoint-checked by pruning.
        let done = !spec.congruent()
            || (spec.n() == 0 && spec.start_height() != spec.end_height());
        PathEnumerator {
            spec,
            rises: Vec::with_capacity(spec.n() as usize),
            cursor: vec![0],
            height: spec.start_height(),
            options: spec.rises(),
            done,
        }
    }

    /// True when a step to `new_height` at `depth` (steps taken so far,
    /// including this one) can still be completed to a member path.
    fn feasible(&self, new_height: i64, depth: u32) -> bool {
        if let Some(lo) = self.spec.min_bound() {
            if new_height < lo {
                return false;
            }
        }
        if let Some(hi) = self.spec.max_bound() {
            if new_height > hi {
                return false;
            }
        }
        let remaining = i64::from(self.spec.n() - depth);
        let target = self.spec.end_height();
        // At most +1 per step upward, at most -p per step downward.
        if target - new_height > remaining || new_height - target > remaining * i64::from(self.spec.p()) {
            return false;
        }
        if self.spec.family().restricted_steps() {
            // With steps {+1, -p} only, u upsteps and d downsteps satisfy
            // u + d = remaining and u - p*d = target - new_height.
            let delta = target - new_height;
            if (delta + remaining * i64::from(self.spec.p())).rem_euclid(i64::from(self.spec.p()) + 1) != 0 {
                return false;
            }
        }
        true
    }
}

impl Iterator for PathEnumerator {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        if self.done {
            return None;
        }
        loop {
            let depth = self.rises.len() as u32;
            if depth == self.spec.n() {
                // Leaf. Feasibility pruning guarantees the endpoint matches.
                let path = LatticePath::from_rises(
                    (0, self.spec.start_height()),
                    &self.rises,
                    self.spec.p(),
                )
                .expect("enumerated rises are valid");
                // Backtrack before yielding.
                if let Some(r) = self.rises.pop() {
                    self.cursor.pop();
                    self.height -= i64::from(r);
                } else {
                    self.done = true;
                }
                return Some(path);
            }
            let slot = self.cursor.last_mut().expect("cursor tracks depth");
            if *slot < self.options.len() {
                let rise = self.options[*slot];
                *slot += 1;
                let new_height = self.height + i64::from(rise);
                if self.feasible(new_height, depth + 1) {
                    self.rises.push(rise);
                    self.cursor.push(0);
                    self.height = new_height;
                }
            } else {
                // Exhausted this node; backtrack.
                self.cursor.pop();
                match self.rises.pop() {
                    Some(r) => self.height -= i64::from(r),
                    None => {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}
