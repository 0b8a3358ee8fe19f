//! Outcome of a verification sweep.

use std::fmt;
use std::time::Duration;

use rayon::prelude::*;
use serde::Serialize;

use crate::lattice_lab::UniverseKind;

/// Witnesses kept per claim; the full count is always recorded.
pub const MAX_WITNESSES: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepMode {
    Exhaustive,
    Sampled,
}

/// One checked statement within a suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub claim: String,
    /// Elements, pairs or triples examined.
    pub examined: u64,
    pub failure_count: u64,
    /// Sorted, at most [`MAX_WITNESSES`] entries.
    pub failures: Vec<String>,
}

impl ClaimResult {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn from_failures(
        claim: impl Into<String>,
        examined: u64,
        mut failures: Vec<String>,
    ) -> Self {
        failures.sort();
        let failure_count = failures.len() as u64;
        failures.truncate(MAX_WITNESSES);
        ClaimResult {
            claim: claim.into(),
            examined,
            failure_count,
            failures,
        }
    }

    /// A claim about a single fact; `failure` describes it when false.
    pub fn single(claim: impl Into<String>, holds: bool, failure: impl FnOnce() -> String) -> Self {
        let failures = if holds { Vec::new() } else { vec![failure()] };
        Self::from_failures(claim, 1, failures)
    }

    /// Evaluates `check` on every index in `0..count` in parallel; each
    /// `Some` is a failure witness.
    pub fn sweep<F>(claim: impl Into<String>, count: usize, check: F) -> Self
    where
        F: Fn(usize) -> Option<String> + Sync + Send,
    {
        let failures: Vec<String> = (0..count).into_par_iter().filter_map(check).collect();
        Self::from_failures(claim, count as u64, failures)
    }
}

/// The result of running one suite on one universe.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub universe: UniverseKind,
    pub n: usize,
    pub mode: SweepMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Size of the enumerated universe, when one was built.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub universe_size: Option<usize>,
    pub examined: u64,
    pub claims: Vec<ClaimResult>,
    /// `claim: witness` for every failing claim, sorted.
    pub failures: Vec<String>,
    /// Outcomes reported without being pass/fail conditions.
    pub observations: Vec<String>,
    pub passed: bool,
    /// Not serialised, so reports of identical runs are byte-identical.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl CheckReport {
    pub fn new(
        suite: impl Into<String>,
        universe: UniverseKind,
        n: usize,
        mode: SweepMode,
        seed: Option<u64>,
    ) -> Self {
        CheckReport {
            suite: suite.into(),
            universe,
            n,
            mode,
            seed,
            universe_size: None,
            examined: 0,
            claims: Vec::new(),
            failures: Vec::new(),
            observations: Vec::new(),
            passed: true,
            wall_time: Duration::ZERO,
        }
    }

    pub fn push(&mut self, claim: ClaimResult) {
        self.examined += claim.examined;
        for w in &claim.failures {
            self.failures.push(format!("{}: {}", claim.claim, w));
        }
        self.failures.sort();
        self.passed = self.claims.iter().chain([&claim]).all(ClaimResult::passed);
        self.claims.push(claim);
    }

    pub fn observe(&mut self, note: impl Into<String>) {
        self.observations.push(note.into());
    }

    pub fn claim(&self, name: &str) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.claim == name)
    }
}

impl fmt::Display for CheckReport {
    /// Human-readable summary, one line per claim.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} [{} n={} {:?}{}]: {}",
            self.suite,
            self.universe,
            self.n,
            self.mode,
            self.seed.map(|s| format!(" seed={s}")).unwrap_or_default(),
            if self.passed { "PASS" } else { "FAIL" }
        )?;
        for c in &self.claims {
            writeln!(
                f,
                "  {} {} ({} examined, {} failures)",
                if c.passed() { "ok  " } else { "FAIL" },
                c.claim,
                c.examined,
                c.failure_count
            )?;
            for w in &c.failures {
                writeln!(f, "       {w}")?;
            }
        }
        for o in &self.observations {
            writeln!(f, "  note: {o}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passed_iff_no_failures() {
        let mut r = CheckReport::new("x", UniverseKind::Relations, 2, SweepMode::Exhaustive, None);
        r.push(ClaimResult::sweep("even", 10, |i| {
            (i % 2 == 1 && i > 10).then(|| i.to_string())
        }));
        assert!(r.passed && r.failures.is_empty());
        r.push(ClaimResult::sweep("small", 10, |i| {
            (i > 6).then(|| i.to_string())
        }));
        assert!(!r.passed);
        assert_eq!(r.failures, vec!["small: 7", "small: 8", "small: 9"]);
        assert_eq!(r.examined, 20);
    }

    #[test]
    fn witnesses_are_capped_and_sorted() {
        let c = ClaimResult::sweep("all", 100, |i| Some(format!("{i:03}")));
        assert_eq!(c.failure_count, 100);
        assert_eq!(c.failures.len(), MAX_WITNESSES);
        assert_eq!(c.failures[0], "000");
    }
}
