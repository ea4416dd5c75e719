use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Serialize)]
pub struct InputFile {
    pub path: String,
    pub sha256: String,
}

/// Embedded in every JSON output so a run can be reproduced.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub inputs: Vec<InputFile>,
    pub parameters: serde_json::Value,
    pub seed: Option<u64>,
    pub budget: u64,
    pub threads: usize,
    pub version: &'static str,
    pub wall_time_ms: u128,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub struct ManifestBuilder {
    command: String,
    inputs: Vec<InputFile>,
    parameters: serde_json::Value,
    seed: Option<u64>,
    budget: u64,
    start: Instant,
}

impl ManifestBuilder {
    pub fn new(command: &str, parameters: serde_json::Value, budget: u64) -> Self {
        ManifestBuilder {
            command: command.to_string(),
            inputs: Vec::new(),
            parameters,
            seed: None,
            budget,
            start: Instant::now(),
        }
    }

    pub fn input(&mut self, path: &Path, bytes: &[u8]) {
        self.inputs.push(InputFile {
            path: path.display().to_string(),
            sha256: sha256_hex(bytes),
        });
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn finish(self) -> RunManifest {
        RunManifest {
            command: self.command,
            inputs: self.inputs,
            parameters: self.parameters,
            seed: self.seed,
            budget: self.budget,
            threads: rayon::current_num_threads(),
            version: env!("CARGO_PKG_VERSION"),
            wall_time_ms: self.start.elapsed().as_millis(),
        }
    }
}
