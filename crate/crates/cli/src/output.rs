use clap::ValueEnum;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    pub fn as_str(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        }
    }
}

/// A finished command: the JSON result, a flat CSV table and a text
/// rendering, plus whether every check in it agreed.
pub struct Report {
    pub command: &'static str,
    pub config: Map<String, Value>,
    pub result: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub text: String,
    pub ok: bool,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            config: Map::new(),
            result: Value::Null,
            header: Vec::new(),
            rows: Vec::new(),
            text: String::new(),
            ok: true,
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.config.insert(key.to_string(), value.into());
    }

    pub fn render(&self, format: Format) -> Result<Vec<u8>, String> {
        match format {
            Format::Json => {
                let mut config = Map::new();
                config.insert("command".into(), self.command.into());
                config.extend(self.config.clone());
                let envelope = json!({
                    "version": dlchi_core::VERSION,
                    "config": config,
                    "result": self.result,
                });
                let mut s = serde_json::to_string_pretty(&envelope).map_err(|e| e.to_string())?;
                s.push('\n');
                Ok(s.into_bytes())
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
                w.write_record(&self.header).map_err(|e| e.to_string())?;
                for row in &self.rows {
                    w.write_record(row).map_err(|e| e.to_string())?;
                }
                w.into_inner().map_err(|e| e.to_string())
            }
            Format::Text => {
                let config: Vec<String> = self
                    .config
                    .iter()
                    .map(|(k, v)| match v {
                        Value::String(s) => format!("{k}={s}"),
                        other => format!("{k}={other}"),
                    })
                    .collect();
                let mut s = format!("# dlchi {} {} {}\n", dlchi_core::VERSION, self.command, config.join(" "));
                s.push_str(&self.text);
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                Ok(s.into_bytes())
            }
        }
    }
}

/// Integer as a JSON number when it fits in `i64`, else as a decimal string.
pub fn big(v: &BigInt) -> Value {
    v.to_i64().map(Value::from).unwrap_or_else(|| Value::String(v.to_string()))
}
