//! Report document emission: a human summary or one JSON object with the
//! schema {theorem?, stages[], nodesVisited?, maxDepth?, elapsedMs, version,
//! pass, manifest}.

use std::time::Instant;

use serde::Serialize;

use imaged_core::report::StageReport;
use imaged_core::search::{SearchOutcome, SearchReport};
use imaged_core::{TheoremReport, TransferReport};

use crate::manifest::RunManifest;

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<String>,
    pub pass: bool,
    pub stages: Vec<StageReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes_visited: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_depth: Option<usize>,
    pub elapsed_ms: u128,
    pub version: &'static str,
}

impl ReportDocument {
    pub fn from_theorem(report: TheoremReport, started: Instant) -> ReportDocument {
        ReportDocument {
            theorem: Some(report.theorem.clone()),
            pass: report.pass,
            stages: report.stages,
            nodes_visited: None,
            max_depth: None,
            elapsed_ms: started.elapsed().as_millis(),
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    pub fn from_search(theorem: &str, report: SearchReport, started: Instant) -> ReportDocument {
        let pass = report.outcome == SearchOutcome::TreeFinite;
        let mut stage = StageReport {
            name: "search".to_string(),
            pass,
            counterexample: (!pass).then(|| {
                format!("depth cap reached at {}", report.deepest_word)
            }),
            counts: report.rule_fires.iter().map(|(k, v)| (format!("fires.{k}"), *v)).collect(),
            detail: Some(format!("deepest word {}", report.deepest_word)),
        };
        stage.counts.insert("nodesVisited".to_string(), report.nodes_visited);
        stage.counts.insert("maxDepth".to_string(), report.max_depth as u64);
        ReportDocument {
            theorem: Some(theorem.to_string()),
            pass,
            stages: vec![stage],
            nodes_visited: Some(report.nodes_visited),
            max_depth: Some(report.max_depth),
            elapsed_ms: started.elapsed().as_millis(),
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    pub fn from_transfer(report: &TransferReport, started: Instant) -> ReportDocument {
        let mut stage = if report.pass {
            StageReport::pass("transfer")
        } else {
            let ce = report.counterexample.as_ref().unwrap();
            StageReport::fail(
                "transfer",
                format!(
                    "image of {} has a repetition (start {}, period {}, length {})",
                    ce.pre_image, ce.witness.start, ce.witness.period, ce.witness.length
                ),
            )
        };
        stage.counts.insert("wordsChecked".to_string(), report.words_checked);
        stage.detail = Some(format!("bound {}", report.bound));
        ReportDocument {
            theorem: None,
            pass: report.pass,
            stages: vec![stage],
            nodes_visited: None,
            max_depth: None,
            elapsed_ms: started.elapsed().as_millis(),
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    pub fn emit(&self, json: bool, manifest: &RunManifest) {
        if json {
            #[derive(Serialize)]
            struct Wrapper<'a> {
                #[serde(flatten)]
                document: &'a ReportDocument,
                manifest: &'a RunManifest,
            }
            let wrapper = Wrapper { document: self, manifest };
            println!("{}", serde_json::to_string_pretty(&wrapper).unwrap());
        } else {
            for stage in &self.stages {
                let mark = if stage.pass { "ok " } else { "FAIL" };
                let mut extras = String::new();
                if !stage.counts.is_empty() {
                    let parts: Vec<String> =
                        stage.counts.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    extras = format!(" [{}]", parts.join(", "));
                }
                if let Some(detail) = &stage.detail {
                    extras.push_str(&format!(" ({detail})"));
                }
                match &stage.counterexample {
                    Some(ce) => println!("{mark} {}{extras}: {ce}", stage.name),
                    None => println!("{mark} {}{extras}", stage.name),
                }
            }
            println!(
                "{}: {} ({} ms)",
                self.theorem.as_deref().unwrap_or("check"),
                if self.pass { "verified" } else { "FAILED" },
                self.elapsed_ms
            );
        }
    }
}
