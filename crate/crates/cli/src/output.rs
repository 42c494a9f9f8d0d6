use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use moncat::induced::Provenance;
use moncat::report::{all_passed, Report};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Everything a verb prints. Field order is the JSON key order.
#[derive(Debug, Serialize)]
pub struct Outcome {
    pub command: String,
    pub status: &'static str,
    pub reports: Vec<Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refused: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<serde_json::Value>,
}

impl Outcome {
    pub fn new(command: &str, reports: Vec<Report>) -> Self {
        Outcome {
            command: command.to_string(),
            status: "pass",
            reports,
            refused: None,
            value: None,
            provenance: None,
            result: None,
        }
        .settle()
    }

    pub fn refused(command: &str, reason: String, reports: Vec<Report>) -> Self {
        let mut out = Outcome::new(command, reports);
        out.refused = Some(reason);
        out.status = "fail";
        out
    }

    fn settle(mut self) -> Self {
        if !all_passed(&self.reports) {
            self.status = "fail";
        }
        self
    }

    pub fn with_value(mut self, value: String) -> Self {
        self.value = Some(value);
        self
    }

    pub fn with_provenance(mut self, p: Provenance) -> Self {
        self.provenance = Some(p);
        self
    }

    pub fn with_result(mut self, r: impl Serialize) -> Self {
        self.result = Some(serde_json::to_value(r).expect("result serializes"));
        self
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("outcome serializes");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = format!("{}: {}\n", self.command, self.status);
                if let Some(r) = &self.refused {
                    s.push_str(&format!("refused: {r}\n"));
                }
                for r in &self.reports {
                    s.push_str(&r.to_text());
                }
                if let Some(v) = &self.value {
                    s.push_str(&format!("value: {v}\n"));
                }
                if let Some(p) = &self.provenance {
                    s.push_str("provenance:\n");
                    for (k, v) in p.objects.iter().chain(&p.morphisms) {
                        s.push_str(&format!("  {k} <- {v}\n"));
                    }
                }
                if let Some(r) = &self.result {
                    s.push_str(&format!("result:\n{}\n", serde_json::to_string_pretty(r).expect("value serializes")));
                }
                s
            }
        }
    }
}

pub fn emit(text: &str, output: Option<&Path>) -> std::io::Result<()> {
    match output {
        Some(p) => std::fs::write(p, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}
