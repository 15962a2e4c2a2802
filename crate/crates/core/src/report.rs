//! Verdict records shared by the verifiers and the command-line front end.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::Tri;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Unknown,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn from_tri(t: Tri) -> Status {
        match t {
            Tri::Yes => Status::Pass,
            Tri::No => Status::Fail,
            Tri::Unknown => Status::Unknown,
        }
    }

    pub fn is_pass(self) -> bool {
        self == Status::Pass
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Unknown => "UNKNOWN",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub id: String,
    pub status: Status,
    pub details: Vec<String>,
}

impl Verdict {
    pub fn new(id: impl Into<String>, status: Status) -> Self {
        Verdict {
            id: id.into(),
            status,
            details: Vec::new(),
        }
    }

    pub fn detail(mut self, line: impl Into<String>) -> Self {
        self.details.push(line.into());
        self
    }

    pub fn details<I: IntoIterator<Item = String>>(mut self, lines: I) -> Self {
        self.details.extend(lines);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    /// Hex SHA-256 of the canonicalised inputs.
    pub inputs_digest: String,
    pub verdicts: Vec<Verdict>,
    pub timing_ms: u64,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.status.is_pass())
    }

    /// Plain-text rendering; `timing` off gives byte-stable output.
    pub fn render(&self, timing: bool) -> String {
        let mut s = format!("command: {}\ninputs: {}\n", self.command, self.inputs_digest);
        for v in &self.verdicts {
            s.push_str(&format!("[{}] {}\n", v.status, v.id));
            for d in &v.details {
                s.push_str(&format!("    {d}\n"));
            }
        }
        let passed = self.verdicts.iter().filter(|v| v.status.is_pass()).count();
        s.push_str(&format!(
            "result: {} ({}/{} verdicts pass)\n",
            Status::from_bool(self.pass()),
            passed,
            self.verdicts.len()
        ));
        if timing {
            s.push_str(&format!("time: {} ms\n", self.timing_ms));
        }
        s
    }
}
