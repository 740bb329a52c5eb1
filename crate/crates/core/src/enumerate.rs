//! Exhaustive generation of Motzkin path classes.

use num_bigint::BigUint;

use crate::paths::{ends_with_pattern, MotzkinPath, Pattern, Step};

/// `M_n(avoid…)`: the Motzkin `n`-paths containing none of `avoid`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassSpec {
    pub n: usize,
    pub avoid: Vec<Pattern>,
}

impl ClassSpec {
    pub fn new(n: usize, avoid: &[Pattern]) -> Self {
        Self { n, avoid: avoid.to_vec() }
    }

    pub fn all(n: usize) -> Self {
        Self { n, avoid: Vec::new() }
    }
}

/// Lazy depth-first generator in lexicographic order with `U < F < D`.
///
/// A step is only placed if the height can still return to 0 in the remaining
/// steps and the placed prefix does not end in a forbidden pattern; dead ends
/// left by pattern pruning are backtracked.
pub struct PathIter {
    n: usize,
    avoid: Vec<Pattern>,
    steps: Vec<Step>,
    height: usize,
    started: bool,
    done: bool,
}

impl PathIter {
    fn new(spec: &ClassSpec) -> Self {
        Self {
            n: spec.n,
            avoid: spec.avoid.clone(),
            steps: Vec::with_capacity(spec.n),
            height: 0,
            started: false,
            done: false,
        }
    }

    fn try_push(&mut self, s: Step) -> bool {
        let remaining = self.n - self.steps.len() - 1;
        let height = match s {
            Step::U => self.height + 1,
            Step::F => self.height,
            Step::D => match self.height.checked_sub(1) {
                Some(h) => h,
                None => return false,
            },
        };
        if height > remaining {
            return false;
        }
        self.steps.push(s);
        if self.avoid.iter().any(|&q| ends_with_pattern(&self.steps, q)) {
            self.steps.pop();
            return false;
        }
        self.height = height;
        true
    }

    fn pop(&mut self) -> Option<Step> {
        let s = self.steps.pop()?;
        match s {
            Step::U => self.height -= 1,
            Step::F => {}
            Step::D => self.height += 1,
        }
        Some(s)
    }
}

impl Iterator for PathIter {
    type Item = MotzkinPath;

    fn next(&mut self) -> Option<MotzkinPath> {
        if self.done {
            return None;
        }
        // index into Step::ALL of the next step to try at the current depth
        let mut from = if self.started {
            match self.pop() {
                Some(s) => s as usize + 1,
                None => {
                    self.done = true;
                    return None;
                }
            }
        } else {
            self.started = true;
            0
        };
        loop {
            if self.steps.len() == self.n {
                return Some(MotzkinPath::from_steps_unchecked(self.steps.clone()));
            }
            match (from..3).find(|&i| self.try_push(Step::ALL[i])) {
                Some(_) => from = 0,
                None => match self.pop() {
                    Some(s) => from = s as usize + 1,
                    None => {
                        self.done = true;
                        return None;
                    }
                },
            }
        }
    }
}

pub fn all_paths(n: usize) -> PathIter {
    PathIter::new(&ClassSpec::all(n))
}

pub fn all_avoiding(spec: &ClassSpec) -> PathIter {
    PathIter::new(spec)
}

pub fn count_avoiding(spec: &ClassSpec) -> u64 {
    all_avoiding(spec).count() as u64
}

/// `M_0 = 1`, `M_{n+1} = M_n + Σ_{k=0}^{n−1} M_k·M_{n−1−k}`.
pub fn motzkin_number(n: usize) -> BigUint {
    motzkin_numbers(n).pop().expect("at least M_0")
}

/// `M_0 ..= M_n`.
pub fn motzkin_numbers(n: usize) -> Vec<BigUint> {
    let mut m: Vec<BigUint> = Vec::with_capacity(n + 1);
    m.push(BigUint::from(1u32));
    for k in 0..n {
        let mut next = m[k].clone();
        for j in 0..k {
            next += &m[j] * &m[k - 1 - j];
        }
        m.push(next);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(it: PathIter) -> Vec<String> {
        it.map(|p| p.to_string()).collect()
    }

    #[test]
    fn small_classes() {
        assert_eq!(strings(all_paths(0)), [""]);
        assert_eq!(strings(all_paths(3)), ["UFD", "UDF", "FUD", "FFF"]);
        assert_eq!(all_paths(4).count(), 9);
        let all_two_letter = [Pattern::UU, Pattern::UD, Pattern::DU, Pattern::DD];
        assert_eq!(strings(all_avoiding(&ClassSpec::new(3, &all_two_letter))), ["UFD", "FFF"]);
        assert_eq!(strings(all_avoiding(&ClassSpec::new(0, &all_two_letter))), [""]);
    }

    #[test]
    fn pattern_avoiding_counts() {
        assert_eq!(count_avoiding(&ClassSpec::new(4, &[Pattern::UU])), 8);
        assert_eq!(count_avoiding(&ClassSpec::new(4, &[Pattern::DU])), 8);
        assert_eq!(count_avoiding(&ClassSpec::new(3, &[Pattern::UU])), 4);
        assert_eq!(count_avoiding(&ClassSpec::new(0, &[Pattern::UU, Pattern::DD])), 1);
        assert!(all_avoiding(&ClassSpec::new(4, &[Pattern::UU])).all(|p| p.to_string() != "UUDD"));
    }

    #[test]
    fn recurrence_values() {
        let m: Vec<u64> = motzkin_numbers(10).iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(m, [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188]);
        assert_eq!(motzkin_number(14), BigUint::from(113_634u32));
    }

    #[test]
    fn exhausted_iterator_stays_exhausted() {
        let mut it = all_paths(2);
        assert_eq!(it.by_ref().count(), 2);
        assert!(it.next().is_none());
    }
}
