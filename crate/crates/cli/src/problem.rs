//! Problem files.
//!
//! A problem file is TOML. Evaluations are indexed by decision maker, then
//! alternative, then criterion; importance and expertise by decision maker,
//! then criterion.
//!
//! ```toml
//! schema_version = 1
//! alternatives = ["X1", "X2"]
//! dms = ["DM1"]
//!
//! [[criteria]]
//! id = "price"
//! kind = "cost"
//!
//! [evaluations]
//! DM1 = [[[0.2, 0.4]], [[0.3, 0.6]]]
//!
//! [importance]
//! DM1 = [[1.0, 0.0]]
//!
//! [expertise]
//! DM1 = [1.0]
//! ```

use std::path::Path;

use hvas_core::hvas::{CriterionKind, CriterionSpec, DecisionProblem};
use hvas_core::ifs::{Ifn, Weight};
use toml::{Table, Value};

use crate::error::{CliError, Issue, Result};

pub const SCHEMA_VERSION: i64 = 1;

pub fn parse_problem(path: &Path) -> Result<DecisionProblem> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_str(&text).map_err(|e| match e {
        CliError::Parse(message) => CliError::Parse(format!("{}: {message}", path.display())),
        other => other,
    })
}

pub fn parse_str(text: &str) -> Result<DecisionProblem> {
    let table: Table = text
        .parse()
        .map_err(|e: toml::de::Error| CliError::Parse(e.to_string()))?;
    Walker::default().problem(&table)
}

/// Collects every problem it finds instead of stopping at the first.
#[derive(Default)]
struct Walker {
    issues: Vec<Issue>,
}

impl Walker {
    fn issue(&mut self, path: impl Into<String>, message: impl Into<String>) {
        self.issues.push(Issue {
            path: path.into(),
            message: message.into(),
        });
    }

    fn problem(mut self, table: &Table) -> Result<DecisionProblem> {
        match table.get("schema_version") {
            None => self.issue("schema_version", "missing"),
            Some(Value::Integer(SCHEMA_VERSION)) => {}
            Some(Value::Integer(found)) => {
                return Err(CliError::Version {
                    found: *found,
                    supported: SCHEMA_VERSION,
                })
            }
            Some(other) => self.issue(
                "schema_version",
                format!("expected an integer, found {}", other.type_str()),
            ),
        }
        for key in table.keys() {
            if ![
                "schema_version",
                "alternatives",
                "dms",
                "criteria",
                "evaluations",
                "importance",
                "expertise",
            ]
            .contains(&key.as_str())
            {
                self.issue(key.as_str(), "unknown field");
            }
        }

        let alternatives = self.names(table, "alternatives");
        let dms = self.names(table, "dms");
        let criteria = self.criteria(table);

        let evaluations: Vec<Vec<Vec<Ifn>>> = self
            .per_dm(table, "evaluations", &dms)
            .into_iter()
            .map(|(path, value)| {
                self.array(&path, value, alternatives.len(), |w, path, row| {
                    Some(w.array(path, row, criteria.len(), |w, path, cell| w.ifn(path, cell)))
                })
            })
            .collect();
        let importance: Vec<Vec<Ifn>> = self
            .per_dm(table, "importance", &dms)
            .into_iter()
            .map(|(path, value)| {
                self.array(&path, value, criteria.len(), |w, path, cell| {
                    w.ifn(path, cell)
                })
            })
            .collect();
        let expertise: Vec<Vec<Weight>> = self
            .per_dm(table, "expertise", &dms)
            .into_iter()
            .map(|(path, value)| {
                self.array(&path, value, criteria.len(), |w, path, cell| {
                    w.weight(path, cell)
                })
            })
            .collect();

        if !self.issues.is_empty() {
            return Err(CliError::Validation(self.issues));
        }
        DecisionProblem::new(
            alternatives,
            criteria,
            dms,
            evaluations,
            importance,
            expertise,
        )
        .map_err(|e| {
            CliError::Validation(vec![Issue {
                path: "problem".into(),
                message: e.to_string(),
            }])
        })
    }

    fn names(&mut self, table: &Table, key: &str) -> Vec<String> {
        let Some(value) = table.get(key) else {
            self.issue(key, "missing");
            return Vec::new();
        };
        let Some(items) = value.as_array() else {
            self.issue(key, "expected an array of strings");
            return Vec::new();
        };
        let mut names = Vec::with_capacity(items.len());
        for (i, item) in items.iter().enumerate() {
            match item.as_str() {
                Some(name) if names.iter().any(|n| n == name) => {
                    self.issue(format!("{key}[{i}]"), format!("duplicate `{name}`"))
                }
                Some(name) => names.push(name.to_string()),
                None => self.issue(format!("{key}[{i}]"), "expected a string"),
            }
        }
        if items.is_empty() {
            self.issue(key, "must not be empty");
        }
        names
    }

    fn criteria(&mut self, table: &Table) -> Vec<CriterionSpec> {
        let Some(items) = table.get("criteria").and_then(Value::as_array) else {
            self.issue("criteria", "missing or not an array of tables");
            return Vec::new();
        };
        if items.is_empty() {
            self.issue("criteria", "must not be empty");
        }
        let mut criteria: Vec<CriterionSpec> = Vec::new();
        for (j, item) in items.iter().enumerate() {
            let path = format!("criteria[{j}]");
            let Some(entry) = item.as_table() else {
                self.issue(path, "expected a table with `id` and `kind`");
                continue;
            };
            let id = match entry.get("id").and_then(Value::as_str) {
                Some(id) if criteria.iter().any(|c| c.id == id) => {
                    self.issue(format!("{path}.id"), format!("duplicate `{id}`"));
                    continue;
                }
                Some(id) => id.to_string(),
                None => {
                    self.issue(format!("{path}.id"), "missing or not a string");
                    continue;
                }
            };
            let kind = match entry.get("kind").and_then(Value::as_str) {
                Some("benefit") => CriterionKind::Benefit,
                Some("cost") => CriterionKind::Cost,
                Some(other) => {
                    self.issue(
                        format!("{path}.kind"),
                        format!("expected `benefit` or `cost`, found `{other}`"),
                    );
                    continue;
                }
                None => {
                    self.issue(format!("{path}.kind"), "missing or not a string");
                    continue;
                }
            };
            criteria.push(CriterionSpec { id, kind });
        }
        criteria
    }

    /// The entry of each decision maker in the table `key`.
    fn per_dm<'a>(
        &mut self,
        table: &'a Table,
        key: &str,
        dms: &[String],
    ) -> Vec<(String, &'a Value)> {
        let Some(section) = table.get(key) else {
            self.issue(key, "missing");
            return Vec::new();
        };
        let Some(section) = section.as_table() else {
            self.issue(key, "expected a table keyed by decision maker");
            return Vec::new();
        };
        for name in section.keys() {
            if !dms.contains(name) {
                self.issue(format!("{key}.{name}"), "not a declared decision maker");
            }
        }
        dms.iter()
            .filter_map(|dm| match section.get(dm) {
                Some(value) => Some((format!("{key}.{dm}"), value)),
                None => {
                    self.issue(format!("{key}.{dm}"), "missing");
                    None
                }
            })
            .collect()
    }

    fn array<T>(
        &mut self,
        path: &str,
        value: &Value,
        expected: usize,
        mut item: impl FnMut(&mut Self, &str, &Value) -> Option<T>,
    ) -> Vec<T> {
        let Some(items) = value.as_array() else {
            self.issue(path, format!("expected an array of {expected} entries"));
            return Vec::new();
        };
        if items.len() != expected {
            self.issue(
                path,
                format!("expected {expected} entries, found {}", items.len()),
            );
        }
        items
            .iter()
            .enumerate()
            .filter_map(|(i, v)| item(self, &format!("{path}[{i}]"), v))
            .collect()
    }

    fn number(&mut self, path: &str, value: &Value) -> Option<f64> {
        match value {
            Value::Float(x) => Some(*x),
            Value::Integer(i) => Some(*i as f64),
            other => {
                self.issue(
                    path,
                    format!("expected a number, found {}", other.type_str()),
                );
                None
            }
        }
    }

    fn ifn(&mut self, path: &str, value: &Value) -> Option<Ifn> {
        let pair = value.as_array().filter(|a| a.len() == 2);
        let Some(pair) = pair else {
            self.issue(path, "expected a [mu, nu] pair");
            return None;
        };
        let mu = self.number(&format!("{path}[0]"), &pair[0]);
        let nu = self.number(&format!("{path}[1]"), &pair[1]);
        let (mu, nu) = (mu?, nu?);
        match Ifn::new(mu, nu) {
            Ok(x) => Some(x),
            Err(e) => {
                self.issue(path, e.to_string());
                None
            }
        }
    }

    fn weight(&mut self, path: &str, value: &Value) -> Option<Weight> {
        let w = self.number(path, value)?;
        match Weight::new(w) {
            Ok(w) => Some(w),
            Err(e) => {
                self.issue(path, e.to_string());
                None
            }
        }
    }
}

/// Writes `problem` in the format read by [`parse_str`].
pub fn serialize(problem: &DecisionProblem) -> String {
    let strings =
        |items: &[String]| Value::Array(items.iter().cloned().map(Value::String).collect());
    let pair = |x: &Ifn| Value::Array(vec![Value::Float(x.mu()), Value::Float(x.nu())]);
    let by_dm = |rows: Vec<Value>| {
        let mut section = Table::new();
        for (dm, row) in problem.decision_makers().iter().zip(rows) {
            section.insert(dm.clone(), row);
        }
        Value::Table(section)
    };

    let mut table = Table::new();
    table.insert("schema_version".into(), Value::Integer(SCHEMA_VERSION));
    table.insert("alternatives".into(), strings(problem.alternatives()));
    table.insert("dms".into(), strings(problem.decision_makers()));
    let criteria = problem
        .criteria()
        .iter()
        .map(|c| {
            let mut entry = Table::new();
            entry.insert("id".into(), Value::String(c.id.clone()));
            let kind = match c.kind {
                CriterionKind::Benefit => "benefit",
                CriterionKind::Cost => "cost",
            };
            entry.insert("kind".into(), Value::String(kind.into()));
            Value::Table(entry)
        })
        .collect();
    table.insert("criteria".into(), Value::Array(criteria));
    table.insert(
        "evaluations".into(),
        by_dm(
            problem
                .evaluations()
                .iter()
                .map(|rows| {
                    Value::Array(
                        rows.iter()
                            .map(|row| Value::Array(row.iter().map(pair).collect()))
                            .collect(),
                    )
                })
                .collect(),
        ),
    );
    table.insert(
        "importance".into(),
        by_dm(
            problem
                .importance()
                .iter()
                .map(|row| Value::Array(row.iter().map(pair).collect()))
                .collect(),
        ),
    );
    table.insert(
        "expertise".into(),
        by_dm(
            problem
                .expertise()
                .iter()
                .map(|row| Value::Array(row.iter().map(|w| Value::Float(w.value())).collect()))
                .collect(),
        ),
    );
    toml::to_string(&table).expect("a table of plain values always serializes")
}
