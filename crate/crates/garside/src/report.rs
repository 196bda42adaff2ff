//! Machine-readable reports for the command-line surface. Witnesses always
//! name elements, never raw ids, so they can be replayed against the file.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

/// Overall outcome of a command, mapped to the process exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Positive result (valid germ, Garside yes, words equal, ...).
    Ok,
    /// Clean negative verdict (axioms violated, not Garside, words distinct).
    Negative,
    /// Structural or usage error: unreadable file, unknown name, bad word.
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Negative => 1,
            Status::Error => 2,
        }
    }
}

/// A replayable witness for a failed check: the check name plus the
/// elements (by name) that exhibit the failure.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub check: String,
    pub elements: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    pub status: Status,
    pub verdicts: BTreeMap<String, Value>,
    pub witnesses: Vec<Witness>,
    pub timings_ms: BTreeMap<String, f64>,
}

impl Report {
    pub fn new(command: &str, input: Option<String>) -> Report {
        Report {
            command: command.to_string(),
            input,
            status: Status::Ok,
            verdicts: BTreeMap::new(),
            witnesses: Vec::new(),
            timings_ms: BTreeMap::new(),
        }
    }

    pub fn error(command: &str, input: Option<String>, message: String) -> Report {
        let mut r = Report::new(command, input);
        r.status = Status::Error;
        r.verdicts.insert("error".into(), Value::String(message));
        r
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        self.verdicts.insert(
            key.to_string(),
            serde_json::to_value(value).expect("verdict serializes"),
        );
    }

    pub fn witness(&mut self, check: &str, elements: Vec<String>, detail: Option<String>) {
        self.witnesses.push(Witness {
            check: check.to_string(),
            elements,
            detail,
        });
    }

    pub fn timing(&mut self, key: &str, ms: f64) {
        self.timings_ms.insert(key.to_string(), ms);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
