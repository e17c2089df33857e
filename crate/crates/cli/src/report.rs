use std::fmt::Write as _;
use std::path::Path;

use invar_core::Error;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// The outcome of one command. Holds no timing information so that the JSON
/// form depends only on the inputs and the seed.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub input_sha256: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub result: Value,
    pub warnings: Vec<String>,
    #[serde(skip)]
    pub summary: Vec<String>,
}

impl RunReport {
    pub fn new(command: &'static str, input: &Input) -> Self {
        RunReport {
            command,
            label: input.label.clone(),
            input_sha256: input.digest.clone(),
            seed: None,
            result: Value::Null,
            warnings: Vec::new(),
            summary: Vec::new(),
        }
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.summary.push(text.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        match &self.label {
            Some(l) => writeln!(out, "{} ({l})", self.command).unwrap(),
            None => writeln!(out, "{}", self.command).unwrap(),
        }
        writeln!(out, "input sha256: {}", self.input_sha256).unwrap();
        if let Some(seed) = self.seed {
            writeln!(out, "seed: {seed}").unwrap();
        }
        for l in &self.summary {
            writeln!(out, "{l}").unwrap();
        }
        for w in &self.warnings {
            writeln!(out, "warning: {w}").unwrap();
        }
        out
    }
}

/// Raw input bytes identified by their digest.
pub struct Input {
    pub text: String,
    pub digest: String,
    pub label: Option<String>,
}

impl Input {
    pub fn read(path: &Path) -> Result<Input, Failure> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::new("read", Error::Parse(format!("{}: {e}", path.display()))))?;
        Ok(Input::from_text(text))
    }

    pub fn from_text(text: String) -> Input {
        let digest = Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect();
        Input { text, digest, label: None }
    }
}

#[derive(Debug)]
pub struct Failure {
    pub command: &'static str,
    pub error: Error,
}

impl Failure {
    pub fn new(command: &'static str, error: Error) -> Self {
        Failure { command, error }
    }

    pub fn to_json(&self, code: u8) -> String {
        let v = serde_json::json!({
            "command": self.command,
            "error": { "name": self.error.name(), "message": self.error.to_string(), "exit_code": code },
        });
        serde_json::to_string_pretty(&v).expect("report serializes")
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::ModularCase { .. } => 3,
        Error::CapExceeded(_) => 4,
        Error::TruncationInsufficient { .. } | Error::MaxDegreeExceeded { .. } => 5,
        _ => 6,
    }
}
