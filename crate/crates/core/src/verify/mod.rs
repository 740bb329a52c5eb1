//! Exhaustive verification suites with machine-readable reports.
//!
//! Each [`CheckId`] enumerates every input up to a length bound and collects
//! counterexamples as data. Checks run their inputs on the current rayon pool;
//! failures are always reported in enumeration order.

mod checks;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bijections::BijectionRegistry;
use crate::enumerate::{all_avoiding, ClassSpec};
use crate::paths::MotzkinPath;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    Roundtrip,
    StatsTable,
    DyckFacts,
    Bij1,
    Bij2,
    Bij3,
    Bij4,
    Bij5,
    Invol,
    Counts,
    /// The length-dropping segment rule; expected to fail.
    InvolLiteral,
}

impl CheckId {
    /// Checks that make up the `all` suite (everything but the negative control).
    pub const SUITE: [CheckId; 10] = [
        CheckId::Roundtrip,
        CheckId::StatsTable,
        CheckId::DyckFacts,
        CheckId::Bij1,
        CheckId::Bij2,
        CheckId::Bij3,
        CheckId::Bij4,
        CheckId::Bij5,
        CheckId::Invol,
        CheckId::Counts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Roundtrip => "ROUNDTRIP",
            CheckId::StatsTable => "STATS_TABLE",
            CheckId::DyckFacts => "DYCK_FACTS",
            CheckId::Bij1 => "BIJ1",
            CheckId::Bij2 => "BIJ2",
            CheckId::Bij3 => "BIJ3",
            CheckId::Bij4 => "BIJ4",
            CheckId::Bij5 => "BIJ5",
            CheckId::Invol => "INVOL",
            CheckId::Counts => "COUNTS",
            CheckId::InvolLiteral => "INVOL_LITERAL",
        }
    }

    /// Largest length [`Harness::run_all`] runs this check at.
    pub fn cap(self) -> usize {
        match self {
            CheckId::Roundtrip | CheckId::StatsTable => 10,
            CheckId::DyckFacts => 14,
            _ => 12,
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = String;

    /// Case-insensitive; `-` and `_` are interchangeable, and `dyck` is
    /// accepted for `DYCK_FACTS`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        let norm = if norm == "DYCK" { "DYCK_FACTS".to_string() } else { norm };
        CheckId::SUITE
            .into_iter()
            .chain([CheckId::InvolLiteral])
            .find(|c| c.name() == norm)
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

impl Serialize for CheckId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for CheckId {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
    pub detail: String,
}

impl Failure {
    pub fn new(
        input: impl ToString,
        expected: impl ToString,
        actual: impl ToString,
        detail: impl Into<String>,
    ) -> Self {
        Self {
            input: input.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: CheckId,
    pub max_n: usize,
    #[serde(rename = "cases")]
    pub cases_run: u64,
    pub failures: Vec<Failure>,
    #[serde(rename = "elapsed_ms", with = "millis")]
    pub elapsed: Duration,
}

mod millis {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(d.as_millis() as u64)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        u64::deserialize(d).map(Duration::from_millis)
    }
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Inclusive bounds of the lengths enumerated.
    pub fn n_range(&self) -> (usize, usize) {
        (0, self.max_n)
    }

    /// Single-line JSON object.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Copy with `elapsed` zeroed, for byte-level comparisons.
    pub fn without_timing(&self) -> Self {
        Self { elapsed: Duration::ZERO, ..self.clone() }
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{} {} max_n={} cases={} failures={} elapsed_ms={}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.check,
            self.max_n,
            self.cases_run,
            self.failures.len(),
            self.elapsed.as_millis()
        )
    }
}

/// Outcome of running two statistics over two classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equidistribution {
    pub equal: bool,
    pub left: BTreeMap<usize, u64>,
    pub right: BTreeMap<usize, u64>,
}

pub fn histogram(class: &ClassSpec, stat: impl Fn(&MotzkinPath) -> usize) -> BTreeMap<usize, u64> {
    let mut hist = BTreeMap::new();
    for p in all_avoiding(class) {
        *hist.entry(stat(&p)).or_insert(0) += 1;
    }
    hist
}

/// Compares the full value multisets of `stat_a` over `class_a` and `stat_b`
/// over `class_b`.
pub fn equidistribution(
    stat_a: impl Fn(&MotzkinPath) -> usize,
    class_a: &ClassSpec,
    stat_b: impl Fn(&MotzkinPath) -> usize,
    class_b: &ClassSpec,
) -> Equidistribution {
    let left = histogram(class_a, stat_a);
    let right = histogram(class_b, stat_b);
    Equidistribution { equal: left == right, left, right }
}

/// Runs checks against the bijections of a registry.
pub struct Harness {
    pub registry: BijectionRegistry,
    /// Random processing orders tried per path in the order-independence
    /// aspects.
    pub order_trials: usize,
    /// Largest length for the order-independence aspects.
    pub order_cap: usize,
    pub seed: u64,
}

impl Default for Harness {
    fn default() -> Self {
        Self::standard()
    }
}

impl Harness {
    pub fn standard() -> Self {
        Self::with_registry(BijectionRegistry::standard())
    }

    pub fn with_registry(registry: BijectionRegistry) -> Self {
        Self { registry, order_trials: 20, order_cap: 10, seed: 0x5eed_f00d }
    }

    pub fn run_check(&self, check: CheckId, max_n: usize) -> VerificationReport {
        let start = Instant::now();
        let (cases_run, failures) = checks::run(self, check, max_n);
        VerificationReport { check, max_n, cases_run, failures, elapsed: start.elapsed() }
    }

    /// Every check of [`CheckId::SUITE`], each at `min(max_n, cap)`.
    pub fn run_all(&self, max_n: usize) -> Vec<VerificationReport> {
        CheckId::SUITE.into_iter().map(|c| self.run_check(c, max_n.min(c.cap()))).collect()
    }
}

pub fn run_check(check: CheckId, max_n: usize) -> VerificationReport {
    Harness::standard().run_check(check, max_n)
}

pub fn run_all(max_n: usize) -> Vec<VerificationReport> {
    Harness::standard().run_all(max_n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::Pattern;

    #[test]
    fn check_names_parse() {
        assert_eq!("bij3".parse::<CheckId>().unwrap(), CheckId::Bij3);
        assert_eq!("stats-table".parse::<CheckId>().unwrap(), CheckId::StatsTable);
        assert_eq!("dyck".parse::<CheckId>().unwrap(), CheckId::DyckFacts);
        assert_eq!("invol-literal".parse::<CheckId>().unwrap(), CheckId::InvolLiteral);
        assert!("bij9".parse::<CheckId>().is_err());
    }

    #[test]
    fn report_json_schema() {
        let report = VerificationReport {
            check: CheckId::Bij2,
            max_n: 3,
            cases_run: 7,
            failures: vec![Failure::new("UD", "UFD", "FUD", "mode-agreement")],
            elapsed: Duration::from_millis(12),
        };
        assert_eq!(
            report.to_json(),
            r#"{"check":"BIJ2","max_n":3,"cases":7,"failures":[{"input":"UD","expected":"UFD","actual":"FUD","detail":"mode-agreement"}],"elapsed_ms":12}"#
        );
        let back: VerificationReport = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn trivial_equidistribution() {
        let e = equidistribution(
            |p| p.count_pattern(Pattern::UU),
            &ClassSpec::all(0),
            |p| p.count_pattern(Pattern::DU),
            &ClassSpec::all(0),
        );
        assert!(e.equal);
        assert_eq!(e.left, BTreeMap::from([(0, 1)]));
    }
}
