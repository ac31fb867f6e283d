//! Output records and their text/json/csv renderings.
//!
//! Every command produces a [`Record`]: the command name, an echo of the
//! parsed inputs, and a payload. Numbers are always exact decimal strings.
//! The json form is `{"command": ..., "inputs": {...}, "result": ...}` with
//! `result` a string or an array of strings; keys serialize in sorted order,
//! so parsing and re-serializing the line reproduces it byte for byte.

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone)]
pub enum Payload {
    /// A single value.
    Scalar(String),
    /// Zero or more words, one per line in text form.
    WordList(Vec<String>),
    /// A translated word and the value pair it connects.
    Translation {
        word: String,
        bsd: String,
        hyper: String,
    },
    /// (value, count) pairs of one width's row, ascending by value.
    RowTable(Vec<(String, String)>),
    /// The row maximum and its maximizers.
    Maxima { max: String, argmax: Vec<String> },
}

#[derive(Debug, Clone)]
pub struct Record {
    pub command: &'static str,
    /// Echo of the parsed parameters, (key, value) with unique keys.
    pub inputs: Vec<(&'static str, Value)>,
    pub payload: Payload,
}

impl Record {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Json => self.render_json(),
            Format::Csv => self.render_csv(),
        }
    }

    fn render_text(&self) -> String {
        match &self.payload {
            Payload::Scalar(v) => format!("{v}\n"),
            Payload::WordList(words) => words.iter().map(|w| format!("{w}\n")).collect(),
            Payload::Translation { word, bsd, hyper } => {
                format!("word: {word}\nbsd: {bsd}\nhyper: {hyper}\n")
            }
            Payload::RowTable(rows) => rows.iter().map(|(n, c)| format!("{n} {c}\n")).collect(),
            Payload::Maxima { max, argmax } => {
                format!("max: {max}\nargmax: {}\n", argmax.join(" "))
            }
        }
    }

    fn render_json(&self) -> String {
        let result = match &self.payload {
            Payload::Scalar(v) => Value::String(v.clone()),
            Payload::WordList(words) => {
                Value::Array(words.iter().cloned().map(Value::String).collect())
            }
            // fixed positions: word, bsd value, hyper value
            Payload::Translation { word, bsd, hyper } => Value::Array(vec![
                Value::String(word.clone()),
                Value::String(bsd.clone()),
                Value::String(hyper.clone()),
            ]),
            // counts only; the value range is in the inputs echo
            Payload::RowTable(rows) => {
                Value::Array(rows.iter().map(|(_, c)| Value::String(c.clone())).collect())
            }
            // the maximum first, then the maximizers
            Payload::Maxima { max, argmax } => {
                let mut items = vec![Value::String(max.clone())];
                items.extend(argmax.iter().cloned().map(Value::String));
                Value::Array(items)
            }
        };
        let mut inputs = Map::new();
        for (key, value) in &self.inputs {
            inputs.insert((*key).to_string(), value.clone());
        }
        let mut record = Map::new();
        record.insert(
            "command".to_string(),
            Value::String(self.command.to_string()),
        );
        record.insert("inputs".to_string(), Value::Object(inputs));
        record.insert("result".to_string(), result);
        let mut line = serde_json::to_string(&Value::Object(record)).expect("serializable");
        line.push('\n');
        line
    }

    fn render_csv(&self) -> String {
        match &self.payload {
            Payload::Scalar(v) => format!("result\n{v}\n"),
            Payload::WordList(words) => {
                let mut out = String::from("word\n");
                for w in words {
                    out.push_str(w);
                    out.push('\n');
                }
                out
            }
            Payload::Translation { word, bsd, hyper } => {
                format!("word,bsd,hyper\n{word},{bsd},{hyper}\n")
            }
            Payload::RowTable(rows) => {
                let mut out = String::from("n,count\n");
                for (n, c) in rows {
                    out.push_str(&format!("{n},{c}\n"));
                }
                out
            }
            Payload::Maxima { max, argmax } => {
                let mut out = String::from("n,count\n");
                for n in argmax {
                    out.push_str(&format!("{n},{max}\n"));
                }
                out
            }
        }
    }
}
