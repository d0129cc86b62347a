//! Output documents: a JSON object with `query`, `results` and `precision`,
//! or a CSV table carrying the same rows.

use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// `Exact` for rational results, `Digits(P)` for fixed-precision reals.
#[derive(Clone, Copy, Debug)]
pub enum Precision {
    Exact,
    Digits(u32),
}

impl Precision {
    fn to_json(self) -> Value {
        match self {
            Precision::Exact => json!("exact"),
            Precision::Digits(p) => json!(p),
        }
    }
}

pub struct Document {
    query: Map<String, Value>,
    results: Value,
    precision: Precision,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Document {
    pub fn new(command: &str, precision: Precision) -> Self {
        let mut query = Map::new();
        query.insert("command".into(), json!(command));
        Self { query, results: Value::Null, precision, header: Vec::new(), rows: Vec::new() }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.query.insert(key.into(), value.into());
        self
    }

    pub fn results(mut self, results: Value) -> Self {
        self.results = results;
        self
    }

    pub fn table(mut self, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        self.header = header;
        self.rows = rows;
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "query": Value::Object(self.query.clone()),
            "results": self.results,
            "precision": self.precision.to_json(),
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut s = self.header.join(",");
                s.push('\n');
                for row in &self.rows {
                    s.push_str(&row.join(","));
                    s.push('\n');
                }
                s
            }
        }
    }
}
