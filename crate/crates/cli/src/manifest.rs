//! Run manifests: command, parameters and input digests, so a report can be
//! reproduced bit-for-bit (modulo elapsed-time fields).

use std::collections::BTreeMap;

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub input_digests: BTreeMap<String, String>,
    pub version: &'static str,
}

impl RunManifest {
    pub fn new() -> RunManifest {
        RunManifest {
            command: String::new(),
            parameters: BTreeMap::new(),
            input_digests: BTreeMap::new(),
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    pub fn set_command(&mut self, command: &str) {
        self.command = command.to_string();
    }

    pub fn record_input(&mut self, name: &str, bytes: &[u8]) {
        let digest = Sha256::digest(bytes);
        self.input_digests.insert(name.to_string(), format!("{digest:x}"));
    }

    /// Records a digest only when the input was not already overridden.
    pub fn record_input_default(&mut self, name: &str, bytes: &[u8]) {
        if !self.input_digests.contains_key(name) {
            self.record_input(name, bytes);
        }
    }

    pub fn merge_inputs(&mut self, other: RunManifest) {
        self.input_digests.extend(other.input_digests);
    }
}
