//! Verdicts with witnesses.
//!
//! Every checker in the crate is written once as a scan over a quantified
//! law that reports failures into a [`LawSink`]. Two sinks exist: one that
//! collects witnesses into a [`CheckReport`], and one that stops at the first
//! failure and only yields a boolean. Scans visit tuples in lexicographic
//! order, so the collected witnesses of each law come out sorted.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

/// Default number of witnesses kept per law.
pub const DEFAULT_WITNESS_CAP: usize = 16;

/// One failed instance of a law.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub law: String,
    pub witness: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (", self.law)?;
        for (i, x) in self.witness.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Outcome of a check. `ok` is true iff `violations` is empty; `omitted`
/// counts witnesses dropped by the per-law cap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    #[serde(default)]
    pub omitted: usize,
}

impl Default for CheckReport {
    fn default() -> Self {
        Self::pass()
    }
}

impl CheckReport {
    pub fn pass() -> Self {
        CheckReport {
            ok: true,
            violations: Vec::new(),
            omitted: 0,
        }
    }

    pub fn single(law: impl Into<String>, witness: Vec<usize>) -> Self {
        CheckReport {
            ok: false,
            violations: vec![Violation {
                law: law.into(),
                witness,
            }],
            omitted: 0,
        }
    }

    /// Concatenates two reports, keeping `self`'s violations first.
    pub fn merge(mut self, other: CheckReport) -> Self {
        self.ok &= other.ok;
        self.violations.extend(other.violations);
        self.omitted += other.omitted;
        self
    }

    /// Law identifiers that failed, in report order, without repetition.
    pub fn failed_laws(&self) -> Vec<&str> {
        let mut seen = Vec::new();
        for v in &self.violations {
            if !seen.contains(&v.law.as_str()) {
                seen.push(v.law.as_str());
            }
        }
        seen
    }

    pub fn has_law(&self, law: &str) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }

    pub fn witnesses<'a>(&'a self, law: &'a str) -> impl Iterator<Item = &'a [usize]> + 'a {
        self.violations
            .iter()
            .filter(move |v| v.law == law)
            .map(|v| v.witness.as_slice())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return writeln!(f, "ok");
        }
        writeln!(f, "FAILED")?;
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        if self.omitted > 0 {
            writeln!(f, "... {} more witnesses omitted", self.omitted)?;
        }
        Ok(())
    }
}

/// Receiver of law failures during a scan. Returning `Break` aborts the scan.
pub trait LawSink {
    fn fail(&mut self, law: &str, witness: &[usize]) -> ControlFlow<()>;
}

/// Scan result type: `Break` means the sink asked to stop.
pub type Scan = ControlFlow<()>;

/// Checks `holds` and reports a failure for `law` at `witness` otherwise.
#[inline]
pub fn expect(sink: &mut dyn LawSink, holds: bool, law: &str, witness: &[usize]) -> Scan {
    if holds {
        ControlFlow::Continue(())
    } else {
        sink.fail(law, witness)
    }
}

/// Collects up to `cap` witnesses per law.
pub struct Collector {
    cap: usize,
    counts: BTreeMap<String, usize>,
    report: CheckReport,
}

impl Collector {
    pub fn new(cap: usize) -> Self {
        Collector {
            cap: cap.max(1),
            counts: BTreeMap::new(),
            report: CheckReport::pass(),
        }
    }

    pub fn finish(self) -> CheckReport {
        self.report
    }
}

impl LawSink for Collector {
    fn fail(&mut self, law: &str, witness: &[usize]) -> ControlFlow<()> {
        self.report.ok = false;
        let n = self.counts.entry(law.to_owned()).or_insert(0);
        if *n < self.cap {
            self.report.violations.push(Violation {
                law: law.to_owned(),
                witness: witness.to_vec(),
            });
        } else {
            self.report.omitted += 1;
        }
        *n += 1;
        ControlFlow::Continue(())
    }
}

/// Stops at the first failure.
#[derive(Default)]
pub struct FirstFailure {
    pub failed: bool,
}

impl LawSink for FirstFailure {
    fn fail(&mut self, _law: &str, _witness: &[usize]) -> ControlFlow<()> {
        self.failed = true;
        ControlFlow::Break(())
    }
}

/// Runs a scan to completion and returns the report.
pub fn collect(cap: usize, scan: impl FnOnce(&mut dyn LawSink) -> Scan) -> CheckReport {
    let mut sink = Collector::new(cap);
    let _ = scan(&mut sink);
    sink.finish()
}

/// Runs a scan until the first failure.
pub fn holds(scan: impl FnOnce(&mut dyn LawSink) -> Scan) -> bool {
    let mut sink = FirstFailure::default();
    let _ = scan(&mut sink);
    !sink.failed
}

/// Report configuration shared by every checker.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Checker {
    pub cap: usize,
}

impl Default for Checker {
    fn default() -> Self {
        Checker {
            cap: DEFAULT_WITNESS_CAP,
        }
    }
}

impl Checker {
    pub fn with_cap(cap: usize) -> Self {
        Checker { cap }
    }

    pub fn run(&self, scan: impl FnOnce(&mut dyn LawSink) -> Scan) -> CheckReport {
        collect(self.cap, scan)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_is_per_law() {
        let report = collect(2, |s| {
            for i in 0..5 {
                s.fail("x", &[i])?;
            }
            s.fail("y", &[0])
        });
        assert!(!report.ok);
        assert_eq!(report.violations.len(), 3);
        assert_eq!(report.omitted, 3);
        assert_eq!(report.failed_laws(), vec!["x", "y"]);
    }

    #[test]
    fn first_failure_stops() {
        let mut visited = 0;
        let ok = holds(|s| {
            for i in 0..10 {
                visited += 1;
                expect(s, i < 3, "lt3", &[i])?;
            }
            ControlFlow::Continue(())
        });
        assert!(!ok);
        assert_eq!(visited, 4);
    }

    #[test]
    fn display_matches_cli_format() {
        let v = Violation {
            law: "eps-1".into(),
            witness: vec![1, 1, 1],
        };
        assert_eq!(v.to_string(), "eps-1 (1,1,1)");
    }
}
