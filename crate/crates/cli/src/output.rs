use clap::ValueEnum;
use graphprod::report::{json_line, Budget};
use serde::Serialize;
use serde_json::Value;

use crate::input::{usage, CliError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

/// Everything a command produced, ready to render in any format.
#[derive(Debug, Default)]
pub struct Report {
    pub budget: Budget,
    records: Vec<(String, Value)>,
    text: Vec<String>,
    dot: Option<String>,
    raw_json: Option<String>,
    /// An invariant check failed.
    pub failed: bool,
}

impl Report {
    pub fn new(budget: Budget) -> Self {
        Report {
            budget,
            ..Default::default()
        }
    }

    /// Adds a JSON record; `body` must serialize as a map.
    pub fn record(&mut self, kind: &str, body: &impl Serialize) {
        let v = serde_json::to_value(body).expect("report bodies serialize");
        debug_assert!(v.is_object(), "record {kind} is not a map");
        self.records.push((kind.to_string(), v));
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    pub fn set_dot(&mut self, dot: String) {
        self.dot = Some(dot);
    }

    /// Pre-rendered JSON lines that replace the generic records.
    pub fn set_raw_json(&mut self, lines: String) {
        self.raw_json = Some(lines);
    }

    pub fn exhausted(&mut self, flag: bool) {
        self.budget.budget_exhausted |= flag;
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => {
                if let Some(raw) = &self.raw_json {
                    return Ok(raw.clone());
                }
                let mut out = String::new();
                for (kind, body) in &self.records {
                    out.push_str(&json_line(kind, &self.budget, body));
                    out.push('\n');
                }
                Ok(out)
            }
            Format::Dot => match &self.dot {
                Some(d) => Ok(d.clone()),
                None => usage("--format dot is only available for graph, cayley ball and ext ball"),
            },
            Format::Text => {
                let mut out = self.text.join("\n");
                out.push('\n');
                if self.budget.budget_exhausted {
                    out.push_str("budget exhausted: the results above are partial\n");
                }
                Ok(out)
            }
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed {
            3
        } else if self.budget.budget_exhausted {
            2
        } else {
            0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_rank_failure_over_truncation() {
        let mut r = Report::new(Budget::default());
        assert_eq!(r.exit_code(), 0);
        r.exhausted(true);
        assert_eq!(r.exit_code(), 2);
        r.exhausted(false);
        assert_eq!(r.exit_code(), 2);
        r.failed = true;
        assert_eq!(r.exit_code(), 3);
    }

    #[test]
    fn every_format() {
        let mut r = Report::new(Budget {
            cap: Some(5),
            ..Default::default()
        });
        r.record("x", &serde_json::json!({ "a": 1 }));
        r.line("hello");
        assert_eq!(
            r.render(Format::Json).unwrap(),
            "{\"kind\":\"x\",\"budget\":{\"cap\":5,\"budget_exhausted\":false},\"a\":1}\n"
        );
        assert_eq!(r.render(Format::Text).unwrap(), "hello\n");
        assert!(r.render(Format::Dot).is_err());
        r.set_dot("digraph x {\n}\n".into());
        assert_eq!(r.render(Format::Dot).unwrap(), "digraph x {\n}\n");
    }
}
