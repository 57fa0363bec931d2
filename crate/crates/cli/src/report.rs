use std::collections::BTreeMap;
use std::fs;
use std::time::Duration;

use anyhow::Context;
use serde_json::{json, Value};

use crate::args::{Cli, Format};

/// Why a command produced no report.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or unreadable input; exit status 2.
    Usage(anyhow::Error),
    /// The computation itself failed; exit status 1.
    Failed(anyhow::Error),
}

pub trait UsageExt<T> {
    fn usage(self) -> Result<T, Failure>;
}

impl<T, E: Into<anyhow::Error>> UsageExt<T> for Result<T, E> {
    fn usage(self) -> Result<T, Failure> {
        self.map_err(|e| Failure::Usage(e.into()))
    }
}

pub struct Report {
    pub command: &'static str,
    pub input: Value,
    pub result: Value,
    pub witnesses: Value,
    pub verdicts: BTreeMap<&'static str, bool>,
    pub text: String,
    pub csv: String,
    pub elapsed: Duration,
}

impl Report {
    pub fn new(command: &'static str, input: Value) -> Self {
        Report {
            command,
            input,
            result: Value::Null,
            witnesses: Value::Null,
            verdicts: BTreeMap::new(),
            text: String::new(),
            csv: String::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn verdict(&mut self, name: &'static str, ok: bool) {
        self.verdicts.insert(name, ok);
    }

    pub fn line(&mut self, key: &str, value: impl std::fmt::Display) {
        self.text.push_str(&format!("{key}: {value}\n"));
    }

    pub fn passed(&self) -> bool {
        self.verdicts.values().all(|&v| v)
    }

    fn render(&self, cli: &Cli) -> String {
        match cli.format {
            Format::Json => {
                let timing = if cli.timing { json!({ "seconds": self.elapsed.as_secs_f64() }) } else { Value::Null };
                let v = json!({
                    "command": self.command,
                    "input": self.input,
                    "result": self.result,
                    "witnesses": self.witnesses,
                    "verdicts": self.verdicts,
                    "timing": timing,
                });
                serde_json::to_string_pretty(&v).expect("plain JSON") + "\n"
            }
            Format::Csv => self.csv.clone(),
            Format::Text => {
                let mut s = self.text.clone();
                for (k, v) in &self.verdicts {
                    s.push_str(&format!("check {k}: {}\n", if *v { "pass" } else { "FAIL" }));
                }
                s
            }
        }
    }

    pub fn emit(&self, cli: &Cli) -> anyhow::Result<()> {
        let out = self.render(cli);
        match &cli.output {
            Some(path) => fs::write(path, out).with_context(|| format!("writing {}", path.display())),
            None => {
                print!("{out}");
                Ok(())
            }
        }
    }
}

/// Key/value CSV for reports without natural rows.
pub fn kv_csv(pairs: &[(&str, String)]) -> String {
    let mut s = String::from("key,value\n");
    for (k, v) in pairs {
        s.push_str(&format!("{k},{v}\n"));
    }
    s
}
