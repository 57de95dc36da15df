use std::collections::BTreeMap;
use std::fmt::Display;
use std::io::{self, Write};

use serde::Serialize;
use serde_json::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Jsonl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    /// Offending coefficient, matrix index or value; always set on failure.
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn from_witness<W: Display>(id: impl Into<String>, witness: Option<W>) -> Self {
        match witness {
            None => Check::pass(id),
            Some(w) => Check::fail(id, w.to_string()),
        }
    }

    pub fn expect_eq<T: PartialEq + std::fmt::Debug>(id: impl Into<String>, got: T, want: T) -> Self {
        if got == want {
            Check::pass(id)
        } else {
            Check::fail(id, format!("got {got:?}, expected {want:?}"))
        }
    }

    pub fn pass(id: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: Status::Pass,
            witness: None,
            detail: None,
        }
    }

    pub fn fail(id: impl Into<String>, witness: String) -> Self {
        Check {
            id: id.into(),
            status: Status::Fail,
            witness: Some(witness),
            detail: None,
        }
    }

    /// A check that could not run because an earlier step errored.
    pub fn error(id: impl Into<String>, err: impl Display) -> Self {
        Check::fail(id, format!("error: {err}"))
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Fail).count()
    }
}

/// Tool version and data checksums, printed ahead of every report.
#[derive(Clone, Debug)]
pub struct Header {
    pub checksums: BTreeMap<&'static str, String>,
}

impl Header {
    pub fn write(&self, out: &mut impl Write, format: Format) -> io::Result<()> {
        match format {
            Format::Text => {
                writeln!(out, "siegel5 {}", env!("CARGO_PKG_VERSION"))?;
                for (name, sum) in &self.checksums {
                    writeln!(out, "sha256 {sum}  {name}")?;
                }
                Ok(())
            }
            Format::Jsonl => {
                let line = json!({
                    "kind": "header",
                    "tool": "siegel5",
                    "version": env!("CARGO_PKG_VERSION"),
                    "checksums": self.checksums,
                });
                writeln!(out, "{line}")
            }
        }
    }
}

pub fn write_reports(
    out: &mut impl Write,
    format: Format,
    header: &Header,
    reports: &[SuiteReport],
) -> io::Result<()> {
    header.write(out, format)?;
    let passed: usize = reports
        .iter()
        .map(|r| r.checks.iter().filter(|c| c.status == Status::Pass).count())
        .sum();
    let failed: usize = reports.iter().map(SuiteReport::failures).sum();
    let skipped: usize = reports
        .iter()
        .map(|r| r.checks.iter().filter(|c| c.status == Status::Skip).count())
        .sum();
    match format {
        Format::Text => {
            for r in reports {
                writeln!(out, "[{}]", r.suite)?;
                for c in &r.checks {
                    let tag = match c.status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                        Status::Skip => "SKIP",
                    };
                    write!(out, "  {tag}  {}", c.id)?;
                    if let Some(d) = &c.detail {
                        write!(out, "  [{d}]")?;
                    }
                    if let Some(w) = &c.witness {
                        write!(out, "  witness: {w}")?;
                    }
                    writeln!(out)?;
                }
            }
            writeln!(out, "summary: {passed} passed, {failed} failed, {skipped} skipped")
        }
        Format::Jsonl => {
            for r in reports {
                for c in &r.checks {
                    let mut v = serde_json::to_value(c).expect("serializable check");
                    v["kind"] = json!("check");
                    v["suite"] = json!(r.suite);
                    writeln!(out, "{v}")?;
                }
            }
            let line = json!({
                "kind": "summary",
                "passed": passed,
                "failed": failed,
                "skipped": skipped,
            });
            writeln!(out, "{line}")
        }
    }
}
