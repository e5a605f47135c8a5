//! Machine-readable verification reports shared by the pipelines, the
//! searches and the CLI.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// One pipeline stage: named, pass/fail, optional counterexample and
/// whatever counters the stage accumulated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageReport {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub counts: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl StageReport {
    pub fn pass(name: &str) -> StageReport {
        StageReport {
            name: name.to_string(),
            pass: true,
            counterexample: None,
            counts: BTreeMap::new(),
            detail: None,
        }
    }

    pub fn fail(name: &str, counterexample: String) -> StageReport {
        StageReport {
            name: name.to_string(),
            pass: false,
            counterexample: Some(counterexample),
            counts: BTreeMap::new(),
            detail: None,
        }
    }

    pub fn count(mut self, key: &str, value: u64) -> StageReport {
        self.counts.insert(key.to_string(), value);
        self
    }

    pub fn detail(mut self, text: String) -> StageReport {
        self.detail = Some(text);
        self
    }
}

/// A full pipeline run: stages in execution order, stopping at the first
/// failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub pass: bool,
    pub stages: Vec<StageReport>,
}

impl TheoremReport {
    pub fn new(theorem: &str, stages: Vec<StageReport>) -> TheoremReport {
        TheoremReport {
            theorem: theorem.to_string(),
            pass: stages.iter().all(|s| s.pass),
            stages,
        }
    }

    pub fn first_failure(&self) -> Option<&StageReport> {
        self.stages.iter().find(|s| !s.pass)
    }
}
