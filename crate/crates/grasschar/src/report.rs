//! Text and JSON-lines rendering of claim reports.

use std::fmt::Write;

use grasschar_core::verifier::{ClaimReport, Status};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Serialize)]
struct ParamsJson<'a> {
    t: u32,
    n: Option<u32>,
    case: Option<&'static str>,
    gamma: Option<u8>,
    extra: Option<&'a str>,
}

#[derive(Serialize)]
struct WitnessJson<'a> {
    label: &'a str,
    value: &'a str,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    claim_id: &'a str,
    params: ParamsJson<'a>,
    status: &'static str,
    reason: Option<&'a str>,
    witnesses: Vec<WitnessJson<'a>>,
    duration_ms: u64,
}

pub fn to_json_line(r: &ClaimReport) -> String {
    let json = ReportJson {
        claim_id: &r.claim_id,
        params: ParamsJson {
            t: r.params.t,
            n: r.params.n,
            case: r.params.case.map(|c| c.name()),
            gamma: r.params.gamma.map(u8::from),
            extra: r.params.extra.as_deref(),
        },
        status: r.status.as_str(),
        reason: r.reason.as_deref(),
        witnesses: r
            .witnesses
            .iter()
            .map(|w| WitnessJson {
                label: &w.label,
                value: &w.value,
            })
            .collect(),
        duration_ms: r.duration_ms,
    };
    serde_json::to_string(&json).expect("report serializes")
}

pub fn params_text(r: &ClaimReport) -> String {
    let mut s = format!("t={}", r.params.t);
    if let Some(c) = r.params.case {
        write!(s, " {c}").unwrap();
    }
    if let Some(n) = r.params.n {
        write!(s, " n={n}").unwrap();
    }
    if let Some(g) = r.params.gamma {
        write!(s, " gamma={}", u8::from(g)).unwrap();
    }
    if let Some(e) = &r.params.extra {
        write!(s, " {e}").unwrap();
    }
    s
}

pub fn to_text(r: &ClaimReport) -> String {
    let mut s = format!(
        "{:<18} {} {} ({} ms)",
        r.status.as_str(),
        r.claim_id,
        params_text(r),
        r.duration_ms
    );
    if let Some(reason) = &r.reason {
        write!(s, " [{reason}]").unwrap();
    }
    for w in &r.witnesses {
        write!(s, "\n    {}: {}", w.label, w.value).unwrap();
    }
    s
}

pub fn render(r: &ClaimReport, format: Format) -> String {
    match format {
        Format::Text => to_text(r),
        Format::Json => to_json_line(r),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(reports: &[ClaimReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            match r.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::SkippedDegenerate => s.skipped += 1,
            }
        }
        s
    }
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} reports: {} passed, {} failed, {} skipped",
            self.passed + self.failed + self.skipped,
            self.passed,
            self.failed,
            self.skipped
        )
    }
}
