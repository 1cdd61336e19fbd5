use std::path::Path;
use std::time::Duration;

use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use nalg::verify::Status;

#[derive(Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Serialize)]
pub struct ResultEntry {
    pub check_id: String,
    pub status: Status,
    pub data: Value,
    pub witness: Option<Value>,
}

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub results: Vec<ResultEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Map<String, Value>>,
    #[serde(skip)]
    durations: Vec<(String, Duration)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: Vec::new(),
            results: Vec::new(),
            timing: None,
            durations: Vec::new(),
        }
    }

    pub fn input(&mut self, path: &Path, bytes: &[u8]) {
        self.inputs.push(InputDigest {
            path: path.display().to_string(),
            sha256: hex::encode(Sha256::digest(bytes)),
        });
    }

    pub fn push(
        &mut self,
        id: impl Into<String>,
        status: Status,
        data: Value,
        witness: Option<Value>,
    ) {
        self.results.push(ResultEntry {
            check_id: id.into(),
            status,
            data,
            witness,
        });
    }

    pub fn pass(&mut self, id: impl Into<String>, data: Value) {
        self.push(id, Status::Pass, data, None);
    }

    pub fn time(&mut self, id: impl Into<String>, elapsed: Duration) {
        self.durations.push((id.into(), elapsed));
    }

    pub fn failed(&self) -> bool {
        self.results.iter().any(|r| r.status == Status::Fail)
    }

    /// Serializes the report; per-check seconds are included only when asked
    /// for, since they would break byte-identical reruns.
    pub fn render(mut self, with_timing: bool) -> String {
        if with_timing {
            self.timing = Some(
                self.durations
                    .iter()
                    .map(|(id, d)| (id.clone(), Value::from(d.as_secs_f64())))
                    .collect(),
            );
        }
        let mut s = serde_json::to_string_pretty(&self).expect("plain data serializes");
        s.push('\n');
        s
    }
}
