//! Replays the catalogued claims against the exact solvers over a seeded
//! corpus and collects one record per (claim, instance).

mod claims;
pub mod config;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use config::{CorpusConfig, Span};

use crate::error::Result;

/// Every claim id the harness must exercise in a run.
pub const CATALOGUE: &[&str] = &[
    "Conv-null",
    "Cor-Delta",
    "Cor-corona",
    "Cor-pendant",
    "Ex-K9",
    "Ex-star",
    "Fact-J-Jstar",
    "Fact-chi-J-delta",
    "Fact-complete",
    "Fact-path",
    "Fact-pendant-free",
    "Fact-r1",
    "Lem-2.5",
    "Lem-4.1",
    "Prop-3.7-i",
    "Prop-3.7-ii",
    "Prop-3.7-iii",
    "Prop-3.7-iv",
    "Prop-3.7-v",
    "Prop-3.9-i",
    "Prop-3.9-ii",
    "Prop-3.9-iii",
    "Prop-3.9-iv",
    "Prop-3.9-v",
    "Thm-2.1",
    "Thm-2.6",
    "Thm-3.1",
    "Thm-3.2",
    "Thm-3.3",
    "Thm-3.8",
    "Thm-4.1",
    "Thm-4.2",
    "Thm-rchi",
];

/// Claims whose refutation fails the run.
pub const HARD_ASSERTS: &[&str] = &[
    "Conv-null",
    "Cor-Delta",
    "Ex-star",
    "Fact-chi-J-delta",
    "Fact-complete",
    "Fact-path",
    "Fact-pendant-free",
    "Fact-r1",
    "Thm-2.1",
    "Thm-3.3",
    "Thm-3.8",
    "Thm-4.1",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Confirmed,
    Refuted,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub claim: String,
    pub instance: String,
    pub predicted: String,
    pub computed: String,
    pub verdict: Verdict,
    pub report_only: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl ClaimRecord {
    pub fn is_hard_failure(&self) -> bool {
        self.verdict == Verdict::Refuted && !self.report_only
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub confirmed: usize,
    pub refuted: usize,
    pub not_applicable: usize,
    pub report_only: usize,
    pub hard_failures: usize,
    /// Catalogue ids with no record in this run.
    pub missing_claims: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub summary: Summary,
    pub claims: Vec<ClaimRecord>,
}

impl VerificationReport {
    fn assemble(mut claims: Vec<ClaimRecord>) -> Self {
        claims.sort_by(|a, b| (&a.claim, &a.instance).cmp(&(&b.claim, &b.instance)));
        let mut summary = Summary::default();
        for r in &claims {
            match r.verdict {
                Verdict::Confirmed => summary.confirmed += 1,
                Verdict::Refuted => summary.refuted += 1,
                Verdict::NotApplicable => summary.not_applicable += 1,
            }
            summary.report_only += usize::from(r.report_only);
            summary.hard_failures += usize::from(r.is_hard_failure());
        }
        summary.missing_claims = CATALOGUE
            .iter()
            .filter(|id| !claims.iter().any(|r| r.claim == **id))
            .map(|id| id.to_string())
            .collect();
        VerificationReport { summary, claims }
    }

    /// No hard-assert refutations and every catalogue id exercised.
    pub fn passed(&self) -> bool {
        self.summary.hard_failures == 0 && self.summary.missing_claims.is_empty()
    }

    pub fn hard_failures(&self) -> impl Iterator<Item = &ClaimRecord> {
        self.claims.iter().filter(|r| r.is_hard_failure())
    }

    pub fn records_for<'a>(&'a self, claim: &'a str) -> impl Iterator<Item = &'a ClaimRecord> {
        self.claims.iter().filter(move |r| r.claim == claim)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// `claim,instance,predicted,computed,verdict,report_only,detail`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("claim,instance,predicted,computed,verdict,report_only,detail\n");
        for r in &self.claims {
            let verdict = serde_json::to_value(r.verdict).expect("verdict serializes");
            let fields = [
                r.claim.as_str(),
                &r.instance,
                &r.predicted,
                &r.computed,
                verdict.as_str().unwrap_or_default(),
                if r.report_only { "true" } else { "false" },
                r.detail.as_deref().unwrap_or(""),
            ];
            let line: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

pub(crate) fn csv_field(f: &str) -> String {
    if f.contains([',', '"', '\n']) {
        format!("\"{}\"", f.replace('"', "\"\""))
    } else {
        f.to_string()
    }
}

/// Runs every configured claim instance concurrently. The record order in
/// the report is independent of scheduling.
pub fn run_verification(config: &CorpusConfig) -> Result<VerificationReport> {
    config.validate()?;
    let tasks = claims::tasks(config)?;
    let timings = config.timings;
    let records: Vec<Vec<ClaimRecord>> = tasks
        .into_par_iter()
        .map(|task| {
            let start = Instant::now();
            let mut out = task()?;
            if timings {
                let ms = start.elapsed().as_millis() as u64;
                for r in &mut out {
                    r.runtime_ms = Some(ms);
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(VerificationReport::assemble(records.into_iter().flatten().collect()))
}
