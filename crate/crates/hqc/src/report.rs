//! Check records and verification reports.
//!
//! Every `verify_*` entry point returns a [`VerificationReport`]: a flat
//! list of named checks, each `pass`, `fail`, or `paper-discrepancy`.  The
//! last status is reserved for checks whose mechanical result contradicts a
//! published formula; such a check *succeeds* by reproducing the
//! discrepancy, and its witness records both the computed and the printed
//! value.  Only `fail` — an identity the engine itself expects to hold but
//! could not confirm — makes a report unsuccessful.

use serde::Serialize;
use std::fmt::Write as _;

// ---------------------------------------------------------------------------

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    PaperDiscrepancy,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::PaperDiscrepancy => "paper-discrepancy",
        }
    }
}

/// One named check.  `paper_eq` tags the published formula the check
/// exercises (empty for purely structural identities); `witness` carries
/// the offending or corrected values when the status is not `pass`.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub paper_eq: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(id: &str, paper_eq: &str) -> Self {
        Check {
            id: id.to_string(),
            paper_eq: paper_eq.to_string(),
            status: Status::Pass,
            witness: None,
        }
    }

    /// Pass carrying an informational note (e.g. a resolved convention or
    /// an emitted summary table).
    pub fn pass_with(id: &str, paper_eq: &str, note: String) -> Self {
        Check {
            id: id.to_string(),
            paper_eq: paper_eq.to_string(),
            status: Status::Pass,
            witness: Some(note),
        }
    }

    pub fn fail(id: &str, paper_eq: &str, witness: String) -> Self {
        Check {
            id: id.to_string(),
            paper_eq: paper_eq.to_string(),
            status: Status::Fail,
            witness: Some(witness),
        }
    }

    pub fn discrepancy(id: &str, paper_eq: &str, witness: String) -> Self {
        Check {
            id: id.to_string(),
            paper_eq: paper_eq.to_string(),
            status: Status::PaperDiscrepancy,
            witness: Some(witness),
        }
    }

    /// Pass/fail from a boolean, evaluating the witness lazily.
    pub fn outcome(id: &str, paper_eq: &str, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Check::pass(id, paper_eq)
        } else {
            Check::fail(id, paper_eq, witness())
        }
    }
}

// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub max_degree: u32,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

impl VerificationReport {
    pub fn new(suite: &str, max_degree: u32) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            max_degree,
            checks: Vec::new(),
            wall_ms: None,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn record(&mut self, id: &str, paper_eq: &str, ok: bool, witness: impl FnOnce() -> String) {
        self.push(Check::outcome(id, paper_eq, ok, witness));
    }

    /// Appends another report's checks (used by the combined suite).
    pub fn absorb(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    /// True when no check failed.  Paper discrepancies do not count as
    /// failures: reproducing them is the expected outcome.
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn find(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {} (max degree {})", self.suite, self.max_degree);
        for c in &self.checks {
            let tag = format!("[{}]", c.status.as_str());
            let _ = write!(out, "  {tag:<19} {}", c.id);
            if !c.paper_eq.is_empty() {
                let _ = write!(out, "  [{}]", c.paper_eq);
            }
            let _ = writeln!(out);
            if let Some(w) = &c.witness {
                for line in w.lines() {
                    let _ = writeln!(out, "      {line}");
                }
            }
        }
        let _ = write!(
            out,
            "{} checks: {} pass, {} paper-discrepancy, {} fail",
            self.checks.len(),
            self.count(Status::Pass),
            self.count(Status::PaperDiscrepancy),
            self.count(Status::Fail),
        );
        if let Some(ms) = self.wall_ms {
            let _ = write!(out, " ({ms} ms)");
        }
        out.push('\n');
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statuses_and_exit_logic() {
        let mut r = VerificationReport::new("demo", 3);
        r.push(Check::pass("demo.good", ""));
        r.push(Check::discrepancy(
            "demo.known",
            "Eq. (0)",
            "computed: x\nprinted:  y".into(),
        ));
        assert!(r.all_pass());
        r.push(Check::fail("demo.bad", "", "boom".into()));
        assert!(!r.all_pass());
        assert_eq!(r.count(Status::Pass), 1);
        assert_eq!(r.count(Status::PaperDiscrepancy), 1);
        assert_eq!(r.count(Status::Fail), 1);
    }

    #[test]
    fn json_shape() {
        let mut r = VerificationReport::new("demo", 2);
        r.push(Check::pass("demo.good", "Eq. (1)"));
        let v: serde_json::Value = serde_json::from_str(&r.render_json()).unwrap();
        assert_eq!(v["suite"], "demo");
        assert_eq!(v["max_degree"], 2);
        assert_eq!(v["checks"][0]["id"], "demo.good");
        assert_eq!(v["checks"][0]["status"], "pass");
        assert!(v["checks"][0].get("witness").is_none());
        assert!(v.get("wall_ms").is_none());
    }

    #[test]
    fn text_rendering() {
        let mut r = VerificationReport::new("demo", 1);
        r.push(Check::discrepancy("demo.known", "Eq. (9)", "w".into()));
        let text = r.render_text();
        assert!(text.contains("[paper-discrepancy]"));
        assert!(text.contains("[Eq. (9)]"));
        assert!(text.contains("      w"));
        assert!(text.ends_with("1 checks: 0 pass, 1 paper-discrepancy, 0 fail\n"));
    }
}
