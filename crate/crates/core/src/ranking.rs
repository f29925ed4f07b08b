//! Ranking results with explicit tie groups.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};

/// Default absolute tolerance under which two scores form a tie.
pub const DEFAULT_TIE_TOLERANCE: f64 = 1e-9;

/// Direction in which a score improves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Preference {
    HigherIsBetter,
    LowerIsBetter,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankingResult {
    pub method: String,
    pub alternatives: Vec<String>,
    pub scores: Vec<f64>,
    pub preference: Preference,
    /// Tie groups of alternative indices, best first. Members of a group are
    /// listed in input order.
    pub order: Vec<Vec<usize>>,
    pub config_echo: BTreeMap<String, String>,
}

impl RankingResult {
    /// Orders `scores` best first. Alternatives whose scores lie within
    /// `tie_tolerance` of a group's leading score join that group; remaining
    /// ties are broken by input index.
    pub fn from_scores(
        method: impl Into<String>,
        alternatives: Vec<String>,
        scores: Vec<f64>,
        preference: Preference,
        tie_tolerance: f64,
    ) -> Result<Self> {
        if alternatives.len() != scores.len() {
            return Err(Error::LengthMismatch {
                left: alternatives.len(),
                right: scores.len(),
            });
        }
        if let Some((index, &value)) = scores.iter().enumerate().find(|(_, s)| !s.is_finite()) {
            return Err(Error::NonFinite { index, value });
        }
        if tie_tolerance.is_nan() || tie_tolerance < 0.0 {
            return Err(Error::InvalidParameter {
                name: "tie_tolerance",
                value: tie_tolerance,
                reason: "must be non-negative",
            });
        }

        // Scores are oriented so that larger is better.
        let oriented: Vec<f64> = match preference {
            Preference::HigherIsBetter => scores.clone(),
            Preference::LowerIsBetter => scores.iter().map(|s| -s).collect(),
        };
        let mut indices: Vec<usize> = (0..scores.len()).collect();
        indices.sort_by(|&a, &b| oriented[b].total_cmp(&oriented[a]).then(a.cmp(&b)));

        let mut order: Vec<Vec<usize>> = Vec::new();
        let mut leader = f64::NAN;
        for index in indices {
            match order.last_mut() {
                Some(group) if leader - oriented[index] <= tie_tolerance => group.push(index),
                _ => {
                    leader = oriented[index];
                    order.push(vec![index]);
                }
            }
        }
        for group in &mut order {
            group.sort_unstable();
        }

        Ok(RankingResult {
            method: method.into(),
            alternatives,
            scores,
            preference,
            order,
            config_echo: BTreeMap::new(),
        })
    }

    pub fn with_config<K: Into<String>, V: ToString>(mut self, key: K, value: V) -> Self {
        self.config_echo.insert(key.into(), value.to_string());
        self
    }

    /// Replaces the alternative labels.
    pub fn relabel(mut self, alternatives: Vec<String>) -> Result<Self> {
        if alternatives.len() != self.alternatives.len() {
            return Err(Error::LengthMismatch {
                left: alternatives.len(),
                right: self.alternatives.len(),
            });
        }
        self.alternatives = alternatives;
        Ok(self)
    }

    /// Labels of each tie group, best first.
    pub fn order_labels(&self) -> Vec<Vec<&str>> {
        self.order
            .iter()
            .map(|group| {
                group
                    .iter()
                    .map(|&i| self.alternatives[i].as_str())
                    .collect()
            })
            .collect()
    }

    /// Human-readable order such as `X3 > X2 = X1`. Within a tie group the
    /// members are listed in reverse input order, the way ties are usually
    /// printed (`X2 = X1`).
    pub fn order_string(&self) -> String {
        self.order
            .iter()
            .map(|group| {
                group
                    .iter()
                    .rev()
                    .map(|&i| self.alternatives[i].as_str())
                    .collect::<Vec<_>>()
                    .join(" = ")
            })
            .collect::<Vec<_>>()
            .join(" > ")
    }

    /// Zero-based position of the tie group holding `alternative`.
    pub fn rank_of(&self, alternative: usize) -> Option<usize> {
        self.order
            .iter()
            .position(|group| group.contains(&alternative))
    }

    /// Whether `alternative` alone occupies the first position.
    pub fn is_strictly_first(&self, alternative: usize) -> bool {
        self.order.first().is_some_and(|g| g == &[alternative])
    }

    /// Whether `alternative` alone occupies the last position.
    pub fn is_strictly_last(&self, alternative: usize) -> bool {
        self.order.last().is_some_and(|g| g == &[alternative])
    }
}

pub(crate) fn default_labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}
