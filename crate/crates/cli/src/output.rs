//! The record every command produces, and its three renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// One command invocation and its result. Counts are decimal strings so
/// values of any size survive JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputRecord {
    pub command: String,
    /// Arguments after the program name, as given.
    pub argv: Vec<String>,
    pub parameters: BTreeMap<String, String>,
    pub result: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Outcome {
    Counts {
        counts: Vec<PatternCount>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        listing: Option<Vec<String>>,
    },
    Sequence {
        terms: Vec<Term>,
    },
    Word {
        word: String,
    },
    Verification {
        suite: String,
        passed: bool,
        checks: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        failure: Option<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatternCount {
    pub pattern: String,
    pub count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub n: u32,
    pub value: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

impl OutputRecord {
    /// Verification records that failed map to exit status 1.
    pub fn failed(&self) -> bool {
        matches!(self.result, Outcome::Verification { passed: false, .. })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => self.plain(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("record serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.csv(),
        }
    }

    fn plain(&self) -> String {
        let mut out = String::new();
        match &self.result {
            Outcome::Counts { counts, listing } => {
                if let [single] = counts.as_slice() {
                    writeln!(out, "{}", single.count).unwrap();
                } else {
                    let header: Vec<&str> = counts.iter().map(|c| c.pattern.as_str()).collect();
                    let values: Vec<&str> = counts.iter().map(|c| c.count.as_str()).collect();
                    writeln!(out, "{}", header.join(" ")).unwrap();
                    writeln!(out, "{}", values.join(" ")).unwrap();
                }
                for line in listing.iter().flatten() {
                    writeln!(out, "{line}").unwrap();
                }
            }
            Outcome::Sequence { terms } if self.command == "bfile" => {
                for t in terms {
                    writeln!(out, "{} {}", t.n, t.value).unwrap();
                }
            }
            Outcome::Sequence { terms } => {
                let values: Vec<&str> = terms.iter().map(|t| t.value.as_str()).collect();
                writeln!(out, "{}", values.join(" ")).unwrap();
            }
            Outcome::Word { word } => writeln!(out, "{word}").unwrap(),
            Outcome::Verification {
                suite,
                passed,
                checks,
                failure,
            } => {
                if *passed {
                    writeln!(out, "{suite}: passed ({checks} checks)").unwrap();
                } else {
                    writeln!(out, "{suite}: FAILED after {checks} checks").unwrap();
                    writeln!(out, "{}", failure.as_deref().unwrap_or("")).unwrap();
                }
            }
        }
        out
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let rows: Vec<Vec<String>> = match &self.result {
            Outcome::Counts { counts, .. } => {
                std::iter::once(vec!["pattern".into(), "count".into()])
                    .chain(
                        counts
                            .iter()
                            .map(|c| vec![c.pattern.clone(), c.count.clone()]),
                    )
                    .collect()
            }
            Outcome::Sequence { terms } => std::iter::once(vec!["n".into(), "value".into()])
                .chain(terms.iter().map(|t| vec![t.n.to_string(), t.value.clone()]))
                .collect(),
            Outcome::Word { word } => vec![vec!["word".into()], vec![word.clone()]],
            Outcome::Verification {
                suite,
                passed,
                checks,
                failure,
            } => vec![
                vec![
                    "suite".into(),
                    "passed".into(),
                    "checks".into(),
                    "failure".into(),
                ],
                vec![
                    suite.clone(),
                    passed.to_string(),
                    checks.to_string(),
                    failure.clone().unwrap_or_default(),
                ],
            ],
        };
        for row in rows {
            w.write_record(&row).expect("write to memory");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 input")
    }
}
