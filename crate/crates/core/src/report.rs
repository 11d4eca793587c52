//! Structured results of law checks.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::pipeline::Comparison;
use crate::setfn::decode;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckEntry {
    /// Identifier of the checked instance, e.g. `cybe[1,1,2]`.
    pub id: String,
    /// Name of the law being checked.
    pub law: String,
    pub pass: bool,
    /// Coordinates of the first violating input.
    pub witness: Option<Vec<usize>>,
    pub violations: usize,
    /// Wall-clock time, filled in by callers that measure it.
    pub elapsed_us: Option<u64>,
}

impl CheckEntry {
    pub fn passed(id: impl Into<String>, law: impl Into<String>) -> Self {
        CheckEntry {
            id: id.into(),
            law: law.into(),
            pass: true,
            witness: None,
            violations: 0,
            elapsed_us: None,
        }
    }

    pub fn failed(
        id: impl Into<String>,
        law: impl Into<String>,
        witness: Vec<usize>,
        violations: usize,
    ) -> Self {
        CheckEntry {
            id: id.into(),
            law: law.into(),
            pass: false,
            witness: Some(witness),
            violations,
            elapsed_us: None,
        }
    }

    /// Builds an entry from a comparison; the witness index is split
    /// according to the tensor factor sizes `dims`.
    pub fn from_comparison(
        id: impl Into<String>,
        law: impl Into<String>,
        cmp: &Comparison,
        dims: &[usize],
    ) -> Self {
        match cmp.first {
            None => Self::passed(id, law),
            Some(x) => Self::failed(id, law, decode(x, dims), cmp.violations),
        }
    }

    /// Accumulates a list of violating tuples.
    pub fn from_violations(
        id: impl Into<String>,
        law: impl Into<String>,
        violations: &[Vec<usize>],
    ) -> Self {
        match violations.first() {
            None => Self::passed(id, law),
            Some(w) => Self::failed(id, law, w.clone(), violations.len()),
        }
    }

    pub fn describe(&self) -> String {
        let status = if self.pass { "pass" } else { "FAIL" };
        let mut line = format!("{status} {} ({})", self.id, self.law);
        if let Some(w) = &self.witness {
            line.push_str(&format!(" witness={w:?} violations={}", self.violations));
        }
        line
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub entries: Vec<CheckEntry>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn single(entry: CheckEntry) -> Self {
        Report {
            entries: alloc::vec![entry],
        }
    }

    pub fn push(&mut self, entry: CheckEntry) {
        self.entries.push(entry);
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    /// Prefixes every entry id, used when nesting reports.
    pub fn prefixed(mut self, prefix: &str) -> Self {
        for e in &mut self.entries {
            e.id = format!("{prefix}.{}", e.id);
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn first_failure(&self) -> Option<&CheckEntry> {
        self.failures().next()
    }

    pub fn entry(&self, id: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// Whether the entry with this id exists and failed.
    pub fn fails(&self, id: &str) -> bool {
        self.entry(id).is_some_and(|e| !e.pass)
    }

    pub fn summary(&self) -> String {
        match self.first_failure() {
            None => format!("all {} checks pass", self.entries.len()),
            Some(e) => e.describe(),
        }
    }
}

impl core::fmt::Display for Report {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for e in &self.entries {
            writeln!(f, "{}", e.describe())?;
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict}")
    }
}

impl From<CheckEntry> for Report {
    fn from(e: CheckEntry) -> Self {
        Report::single(e)
    }
}

pub(crate) fn triple_id(name: &str, i: usize, j: usize, k: usize) -> String {
    format!("{name}[{},{},{}]", i + 1, j + 1, k + 1)
}
