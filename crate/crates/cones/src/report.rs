//! Deterministic check reports: one line per record, byte-stable for
//! identical inputs. Timing never goes into the report itself.

use crate::decision::{Checked, Decision};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Unknown,
    Info,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    lines: Vec<(Status, String)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, status: Status, text: impl Into<String>) {
        self.lines.push((status, text.into()));
    }

    pub fn pass(&mut self, text: impl Into<String>) {
        self.push(Status::Pass, text);
    }

    pub fn fail(&mut self, text: impl Into<String>) {
        self.push(Status::Fail, text);
    }

    pub fn unknown(&mut self, text: impl Into<String>) {
        self.push(Status::Unknown, text);
    }

    pub fn info(&mut self, text: impl Into<String>) {
        self.push(Status::Info, text);
    }

    /// Record a decided check: True passes, False fails, Unknown stays
    /// unknown; witnesses are indented under their line.
    pub fn checked(&mut self, label: impl Into<String>, checked: &Checked) {
        let label = label.into();
        let status = match checked.decision {
            Decision::True => Status::Pass,
            Decision::False => Status::Fail,
            Decision::Unknown { .. } => Status::Unknown,
        };
        self.push(status, format!("{label} = {}", checked.decision));
        if let Some(w) = &checked.witness {
            self.info(format!("  witness: {w}"));
        }
    }

    /// Record a bare decision with pass/fail keyed to an expectation.
    pub fn expect(&mut self, label: impl Into<String>, ok: bool) {
        if ok {
            self.pass(label);
        } else {
            self.fail(label);
        }
    }

    pub fn lines(&self) -> &[(Status, String)] {
        &self.lines
    }

    pub fn has_failure(&self) -> bool {
        self.lines.iter().any(|(s, _)| *s == Status::Fail)
    }

    pub fn has_unknown(&self) -> bool {
        self.lines.iter().any(|(s, _)| *s == Status::Unknown)
    }

    /// 0 when everything passed, 1 on any failure, 3 when the only
    /// blemishes are unknown verdicts.
    pub fn exit_code(&self) -> i32 {
        if self.has_failure() {
            1
        } else if self.has_unknown() {
            3
        } else {
            0
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (status, text) in &self.lines {
            let tag = match status {
                Status::Pass => "[pass]",
                Status::Fail => "[FAIL]",
                Status::Unknown => "[unkn]",
                Status::Info => "[info]",
            };
            out.push_str(tag);
            out.push(' ');
            out.push_str(text);
            out.push('\n');
        }
        out
    }
}
