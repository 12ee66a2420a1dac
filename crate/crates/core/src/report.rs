//! Verification reports: one row per check, serialized as a JSON array of
//! `{check, family, k, n, expected, actual, verdict, variant}`.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    /// A hard assertion failed.
    Fail,
    /// An adjudicated or conjectural statement disagrees with the computed
    /// values. Informational unless the run is strict.
    Discrepancy,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Discrepancy => "discrepancy",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub check: String,
    pub family: Option<String>,
    pub k: Option<i64>,
    pub n: Option<i64>,
    pub expected: String,
    pub actual: String,
    pub verdict: Verdict,
    pub variant: Option<String>,
}

impl ReportRow {
    /// Pass when the rendered values agree, fail otherwise.
    pub fn compare(check: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let verdict = if expected == actual { Verdict::Pass } else { Verdict::Fail };
        Self { check: check.into(), family: None, k: None, n: None, expected, actual, verdict, variant: None }
    }

    /// A row whose outcome was decided by the caller.
    pub fn judged(
        check: impl Into<String>,
        ok: bool,
        expected: impl ToString,
        actual: impl ToString,
    ) -> Self {
        let mut row = Self::compare(check, "", "");
        row.expected = expected.to_string();
        row.actual = actual.to_string();
        row.verdict = if ok { Verdict::Pass } else { Verdict::Fail };
        row
    }

    pub fn family(mut self, family: impl ToString) -> Self {
        self.family = Some(family.to_string());
        self
    }

    pub fn n(mut self, n: usize) -> Self {
        self.n = Some(n as i64);
        self
    }

    pub fn k(mut self, k: usize) -> Self {
        self.k = Some(k as i64);
        self
    }

    pub fn variant(mut self, variant: impl Into<String>) -> Self {
        self.variant = Some(variant.into());
        self
    }

    /// Downgrades a failure to a discrepancy.
    pub fn informational(mut self) -> Self {
        if self.verdict == Verdict::Fail {
            self.verdict = Verdict::Discrepancy;
        }
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    pub rows: Vec<ReportRow>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, row: ReportRow) {
        self.rows.push(row);
    }

    pub fn extend(&mut self, other: Report) {
        self.rows.extend(other.rows);
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.rows.iter().filter(|r| r.verdict == verdict).count()
    }

    /// No hard failures.
    pub fn passed(&self) -> bool {
        self.count(Verdict::Fail) == 0
    }

    /// No failures and no discrepancies.
    pub fn strictly_passed(&self) -> bool {
        self.passed() && self.count(Verdict::Discrepancy) == 0
    }

    pub fn rows_for<'a>(&'a self, check: &'a str) -> impl Iterator<Item = &'a ReportRow> + 'a {
        self.rows.iter().filter(move |r| r.check == check)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report rows serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

impl fmt::Display for ReportRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.verdict, self.check)?;
        if let Some(family) = &self.family {
            write!(f, " {family}")?;
        }
        if let Some(n) = self.n {
            write!(f, " n={n}")?;
        }
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        if let Some(v) = &self.variant {
            write!(f, " ({v})")?;
        }
        if self.verdict == Verdict::Pass {
            write!(f, ": {}", self.actual)
        } else {
            write!(f, ": expected {}, got {}", self.expected, self.actual)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts_and_json_round_trip() {
        let mut report = Report::new();
        report.push(ReportRow::compare("tables", "x", "x").family("A").n(1));
        report.push(ReportRow::compare("closed-form", "1", "2").k(3).informational());
        assert!(report.passed());
        assert!(!report.strictly_passed());
        let back = Report::from_json(&report.to_json()).unwrap();
        assert_eq!(back, report);
        assert!(report.to_json().contains("\"verdict\": \"discrepancy\""));
        report.push(ReportRow::judged("x", false, "a", "b"));
        assert!(!report.passed());
    }
}
