//! Deterministic report assembly: fixed field order, exact values only, one
//! volatile `time_ms` line that consumers strip when comparing runs.

use sha2::{Digest, Sha256};

pub struct Report {
    lines: Vec<String>,
}

impl Report {
    pub fn new(command: &str, input: &str, digest_payload: &str) -> Report {
        let mut hasher = Sha256::new();
        hasher.update(digest_payload.as_bytes());
        let digest = hasher.finalize();
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        Report {
            lines: vec![
                format!("report {command}"),
                format!("input {input}"),
                format!("digest {hex}"),
            ],
        }
    }

    pub fn push(&mut self, key: &str, value: impl std::fmt::Display) {
        self.lines.push(format!("{key} {value}"));
    }

    pub fn push_raw(&mut self, line: String) {
        self.lines.push(line);
    }

    pub fn finish(mut self, started: std::time::Instant) -> String {
        self.lines.push("status ok".into());
        self.lines
            .push(format!("time_ms {}", started.elapsed().as_millis()));
        let mut out = self.lines.join("\n");
        out.push('\n');
        out
    }
}
