//! Rendering in the three output formats. JSON documents carry
//! `"schema": 1` and the command name.

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// What a command produced: stdout text, optional stderr text, exit status.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    pub fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    pub fn with_code(mut self, code: u8, stderr: impl Into<String>) -> Self {
        self.code = code;
        self.stderr = stderr.into();
        self
    }
}

/// `{"schema": 1, "command": …, …body}` pretty-printed, newline terminated.
pub fn json_doc(command: &str, body: impl Serialize) -> String {
    let mut doc = json!({ "schema": SCHEMA, "command": command });
    match serde_json::to_value(body).expect("output serializes") {
        Value::Object(map) => doc.as_object_mut().unwrap().extend(map),
        other => {
            doc["result"] = other;
        }
    }
    let mut s = serde_json::to_string_pretty(&doc).expect("json");
    s.push('\n');
    s
}

/// Header row plus one record per item.
pub fn csv_doc<T: Serialize>(rows: impl IntoIterator<Item = T>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("csv is utf-8")
}

/// CSV for tables whose header must appear even with no rows.
pub fn csv_with_header<T: Serialize>(header: &[&str], rows: impl IntoIterator<Item = T>) -> String {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for r in rows {
        w.serialize(r).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("csv is utf-8")
}
