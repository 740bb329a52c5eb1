//! Motzkin paths: validated step words over `U`, `F`, `D`.

mod factor;
mod render;
mod stats;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use factor::{first_return_split, strict_factor, Factorization, StrictFactorization};
pub use render::render_ascii;
pub use stats::{statistics, PathStatistics, TableStatistics};

/// A single lattice step.
///
/// The derived ordering `U < F < D` is the generation order used by
/// [`crate::enumerate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// Upstep, height +1.
    U,
    /// Flatstep, height unchanged.
    F,
    /// Downstep, height −1.
    D,
}

impl Step {
    pub const ALL: [Step; 3] = [Step::U, Step::F, Step::D];

    pub fn delta(self) -> i64 {
        match self {
            Step::U => 1,
            Step::F => 0,
            Step::D => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Step::U => 'U',
            Step::F => 'F',
            Step::D => 'D',
        }
    }

    pub fn from_symbol(c: char) -> Option<Step> {
        match c {
            'U' => Some(Step::U),
            'F' => Some(Step::F),
            'D' => Some(Step::D),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("invalid character {character:?} at position {position}")]
    InvalidCharacter { position: usize, character: char },
    /// `position` is the lattice-vertex index (prefix length) at which the
    /// height first becomes negative.
    #[error("path dips below ground level at position {position}")]
    NegativeHeight { position: usize },
    #[error("path ends at height {final_height}, not 0")]
    UnbalancedPath { final_height: i64 },
    #[error("segment does not start with a flatstep")]
    MissingLeadingFlat,
    #[error("invalid pattern {0:?} (expected one of UU, UD, DU, DD, UFU)")]
    InvalidPattern(String),
}

/// A Motzkin path: every prefix height is nonnegative and the total height is
/// zero. Construct via [`MotzkinPath::parse`] or [`MotzkinPath::from_steps`].
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MotzkinPath {
    steps: Vec<Step>,
}

impl MotzkinPath {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parse(text: &str) -> Result<Self, PathError> {
        let steps = text
            .chars()
            .enumerate()
            .map(|(position, character)| {
                Step::from_symbol(character).ok_or(PathError::InvalidCharacter { position, character })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_steps(steps)
    }

    pub fn from_steps(steps: Vec<Step>) -> Result<Self, PathError> {
        check_word(&steps)?;
        Ok(Self { steps })
    }

    /// Wraps a step word already known to be a Motzkin word.
    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(check_word(&steps).is_ok(), "not a Motzkin word: {steps:?}");
        Self { steps }
    }

    /// `F^k`.
    pub fn flats(k: usize) -> Self {
        Self { steps: vec![Step::F; k] }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn count_pattern(&self, pattern: Pattern) -> usize {
        count_pattern(&self.steps, pattern)
    }

    pub fn avoids(&self, patterns: &[Pattern]) -> bool {
        avoids(&self.steps, patterns)
    }

    /// First occurrence of any of `patterns`, as (pattern, start index).
    pub fn first_occurrence(&self, patterns: &[Pattern]) -> Option<(Pattern, usize)> {
        patterns.iter().filter_map(|&q| find_pattern(&self.steps, q).map(|i| (q, i))).min_by_key(|&(_, i)| i)
    }

    pub fn statistics(&self) -> PathStatistics {
        statistics(self)
    }

    pub fn first_return_split(&self) -> Factorization<'_> {
        first_return_split(&self.steps)
    }

    pub fn render_ascii(&self) -> String {
        render_ascii(self)
    }
}

/// Validates that `steps` never goes below 0 and ends at 0.
pub fn check_word(steps: &[Step]) -> Result<(), PathError> {
    let mut height = 0i64;
    for (i, s) in steps.iter().enumerate() {
        height += s.delta();
        if height < 0 {
            return Err(PathError::NegativeHeight { position: i + 1 });
        }
    }
    if height != 0 {
        return Err(PathError::UnbalancedPath { final_height: height });
    }
    Ok(())
}

pub fn is_motzkin_word(steps: &[Step]) -> bool {
    check_word(steps).is_ok()
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for MotzkinPath {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

pub fn parse_path(text: &str) -> Result<MotzkinPath, PathError> {
    MotzkinPath::parse(text)
}

pub fn format_path(p: &MotzkinPath) -> String {
    p.to_string()
}

pub fn format_steps(steps: &[Step]) -> String {
    steps.iter().map(|s| s.symbol()).collect()
}

/// The consecutive step patterns that path classes may avoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pattern {
    UU,
    UD,
    DU,
    DD,
    UFU,
}

impl Pattern {
    pub const ALL: [Pattern; 5] = [Pattern::UU, Pattern::UD, Pattern::DU, Pattern::DD, Pattern::UFU];

    pub fn steps(self) -> &'static [Step] {
        use Step::*;
        match self {
            Pattern::UU => &[U, U],
            Pattern::UD => &[U, D],
            Pattern::DU => &[D, U],
            Pattern::DD => &[D, D],
            Pattern::UFU => &[U, F, U],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Pattern::UU => "UU",
            Pattern::UD => "UD",
            Pattern::DU => "DU",
            Pattern::DD => "DD",
            Pattern::UFU => "UFU",
        }
    }

    /// Parses a comma-separated list such as `"UU,DD"`. Empty text is the
    /// empty set.
    pub fn parse_list(text: &str) -> Result<Vec<Pattern>, PathError> {
        let mut out: Vec<Pattern> =
            text.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::parse).collect::<Result<_, _>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pattern {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Pattern::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| PathError::InvalidPattern(s.to_string()))
    }
}

/// Number of (possibly overlapping) occurrences of `pattern` as consecutive
/// steps.
pub fn count_pattern(steps: &[Step], pattern: Pattern) -> usize {
    let pat = pattern.steps();
    steps.windows(pat.len()).filter(|w| *w == pat).count()
}

fn find_pattern(steps: &[Step], pattern: Pattern) -> Option<usize> {
    let pat = pattern.steps();
    steps.windows(pat.len()).position(|w| w == pat)
}

pub fn avoids(steps: &[Step], patterns: &[Pattern]) -> bool {
    patterns.iter().all(|&q| find_pattern(steps, q).is_none())
}

/// True if the last steps of `steps` form `pattern`.
pub(crate) fn ends_with_pattern(steps: &[Step], pattern: Pattern) -> bool {
    steps.ends_with(pattern.steps())
}
