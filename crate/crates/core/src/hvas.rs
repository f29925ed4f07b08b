//! Hypervolume-based assessment of alternatives.
//!
//! The pipeline:
//!
//! 1. collect decision-maker evaluations, criterion importance and
//!    expertise ([`DecisionProblem`]);
//! 2. aggregate evaluations per criterion, weighted by expertise;
//! 3. aggregate criterion importance the same way;
//! 4. normalize cost criteria by swapping membership and non-membership;
//! 5. multiply each entry by its criterion's importance;
//! 6. score each alternative's weighted set by net hypervolume;
//! 7. rank by score, best first.
//!
//! Steps 2 to 5 are shared with the distance-based comparators in
//! [`crate::compare`] through [`weighted_normalized`].

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypervolume::{hv_net, HvConfig, HvNetResult};
use crate::ifs::{ifa_aggregate, Ifn, Ifs, Weight};
use crate::ranking::{Preference, RankingResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CriterionKind {
    Benefit,
    Cost,
}

impl CriterionKind {
    pub fn flipped(self) -> Self {
        match self {
            CriterionKind::Benefit => CriterionKind::Cost,
            CriterionKind::Cost => CriterionKind::Benefit,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionSpec {
    pub id: String,
    pub kind: CriterionKind,
}

impl CriterionSpec {
    pub fn new(id: impl Into<String>, kind: CriterionKind) -> Self {
        CriterionSpec {
            id: id.into(),
            kind,
        }
    }
}

/// Alternatives × criteria × decision makers.
///
/// Tensors are indexed `evaluations[dm][alternative][criterion]`,
/// `importance[dm][criterion]` and `expertise[dm][criterion]`.
#[derive(Clone, Debug, PartialEq)]
pub struct DecisionProblem {
    alternatives: Vec<String>,
    criteria: Vec<CriterionSpec>,
    decision_makers: Vec<String>,
    evaluations: Vec<Vec<Vec<Ifn>>>,
    importance: Vec<Vec<Ifn>>,
    expertise: Vec<Vec<Weight>>,
}

impl DecisionProblem {
    pub fn new(
        alternatives: Vec<String>,
        criteria: Vec<CriterionSpec>,
        decision_makers: Vec<String>,
        evaluations: Vec<Vec<Vec<Ifn>>>,
        importance: Vec<Vec<Ifn>>,
        expertise: Vec<Vec<Weight>>,
    ) -> Result<Self> {
        let (n, m, q) = (alternatives.len(), criteria.len(), decision_makers.len());
        let invalid = |msg: String| Err(Error::InvalidProblem(msg));
        if n == 0 || m == 0 || q == 0 {
            return invalid(format!(
                "need at least one alternative, criterion and decision maker (got {n}, {m}, {q})"
            ));
        }
        unique("alternative", alternatives.iter())?;
        unique("criterion", criteria.iter().map(|c| &c.id))?;
        unique("decision maker", decision_makers.iter())?;

        if evaluations.len() != q || importance.len() != q || expertise.len() != q {
            return invalid(format!(
                "tensors must have one entry per decision maker ({q})"
            ));
        }
        for (l, dm) in decision_makers.iter().enumerate() {
            if evaluations[l].len() != n {
                return invalid(format!(
                    "evaluations of `{dm}` cover {} alternatives, expected {n}",
                    evaluations[l].len()
                ));
            }
            for (i, row) in evaluations[l].iter().enumerate() {
                if row.len() != m {
                    return invalid(format!(
                        "evaluations of `{dm}` for `{}` cover {} criteria, expected {m}",
                        alternatives[i],
                        row.len()
                    ));
                }
            }
            if importance[l].len() != m {
                return invalid(format!(
                    "importance of `{dm}` covers {} criteria, expected {m}",
                    importance[l].len()
                ));
            }
            if expertise[l].len() != m {
                return invalid(format!(
                    "expertise of `{dm}` covers {} criteria, expected {m}",
                    expertise[l].len()
                ));
            }
        }
        Ok(DecisionProblem {
            alternatives,
            criteria,
            decision_makers,
            evaluations,
            importance,
            expertise,
        })
    }

    /// A single decision maker with unit expertise.
    pub fn single(
        alternatives: Vec<String>,
        criteria: Vec<CriterionSpec>,
        evaluations: Vec<Vec<Ifn>>,
        importance: Vec<Ifn>,
    ) -> Result<Self> {
        let m = criteria.len();
        Self::new(
            alternatives,
            criteria,
            vec!["DM1".to_string()],
            vec![evaluations],
            vec![importance],
            vec![vec![Weight::new(1.0)?; m]],
        )
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[CriterionSpec] {
        &self.criteria
    }

    pub fn decision_makers(&self) -> &[String] {
        &self.decision_makers
    }

    pub fn evaluations(&self) -> &[Vec<Vec<Ifn>>] {
        &self.evaluations
    }

    pub fn importance(&self) -> &[Vec<Ifn>] {
        &self.importance
    }

    pub fn expertise(&self) -> &[Vec<Weight>] {
        &self.expertise
    }

    /// Flips every criterion kind and swaps every evaluation, which leaves
    /// normalized data unchanged.
    pub fn mirrored(&self) -> Self {
        let mut mirror = self.clone();
        for criterion in &mut mirror.criteria {
            criterion.kind = criterion.kind.flipped();
        }
        for cell in mirror.evaluations.iter_mut().flatten().flatten() {
            *cell = cell.swapped();
        }
        mirror
    }

    /// Reorders alternatives: entry `k` of the result is alternative
    /// `order[k]` of `self`.
    pub fn permute_alternatives(&self, order: &[usize]) -> Result<Self> {
        check_permutation(order, self.alternatives.len())?;
        let mut out = self.clone();
        out.alternatives = order
            .iter()
            .map(|&i| self.alternatives[i].clone())
            .collect();
        for (l, rows) in out.evaluations.iter_mut().enumerate() {
            *rows = order
                .iter()
                .map(|&i| self.evaluations[l][i].clone())
                .collect();
        }
        Ok(out)
    }

    /// Reorders criteria the same way.
    pub fn permute_criteria(&self, order: &[usize]) -> Result<Self> {
        check_permutation(order, self.criteria.len())?;
        let pick = |row: &Vec<Ifn>| order.iter().map(|&j| row[j]).collect::<Vec<_>>();
        let mut out = self.clone();
        out.criteria = order.iter().map(|&j| self.criteria[j].clone()).collect();
        out.evaluations = self
            .evaluations
            .iter()
            .map(|rows| rows.iter().map(pick).collect())
            .collect();
        out.importance = self.importance.iter().map(pick).collect();
        out.expertise = self
            .expertise
            .iter()
            .map(|row| order.iter().map(|&j| row[j]).collect())
            .collect();
        Ok(out)
    }
}

fn unique<'a>(what: &str, ids: impl Iterator<Item = &'a String>) -> Result<()> {
    let mut seen = HashSet::new();
    for id in ids {
        if !seen.insert(id) {
            return Err(Error::InvalidProblem(format!("duplicate {what} `{id}`")));
        }
    }
    Ok(())
}

fn check_permutation(order: &[usize], len: usize) -> Result<()> {
    let mut seen = vec![false; len];
    if order.len() != len
        || !order
            .iter()
            .all(|&i| i < len && !std::mem::replace(&mut seen[i], true))
    {
        return Err(Error::InvalidProblem(format!(
            "not a permutation of 0..{len}"
        )));
    }
    Ok(())
}

/// Criteria × alternatives matrix of fuzzy numbers.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecisionMatrix {
    /// `rows[criterion][alternative]`.
    rows: Vec<Vec<Ifn>>,
}

impl DecisionMatrix {
    pub fn from_rows(rows: Vec<Vec<Ifn>>) -> Result<Self> {
        let width = rows
            .first()
            .map(Vec::len)
            .ok_or(Error::Empty("matrix has no rows"))?;
        if width == 0 {
            return Err(Error::Empty("matrix has no columns"));
        }
        if let Some(row) = rows.iter().find(|r| r.len() != width) {
            return Err(Error::LengthMismatch {
                left: width,
                right: row.len(),
            });
        }
        Ok(DecisionMatrix { rows })
    }

    pub fn criteria(&self) -> usize {
        self.rows.len()
    }

    pub fn alternatives(&self) -> usize {
        self.rows[0].len()
    }

    pub fn get(&self, criterion: usize, alternative: usize) -> Ifn {
        self.rows[criterion][alternative]
    }

    pub fn row(&self, criterion: usize) -> &[Ifn] {
        &self.rows[criterion]
    }

    pub fn rows(&self) -> &[Vec<Ifn>] {
        &self.rows
    }

    /// The set formed by one alternative across all criteria.
    pub fn alternative(&self, alternative: usize) -> Ifs {
        Ifs::new(self.rows.iter().map(|row| row[alternative]).collect())
            .expect("matrix has at least one criterion")
    }

    fn map(&self, mut f: impl FnMut(usize, Ifn) -> Ifn) -> Self {
        DecisionMatrix {
            rows: self
                .rows
                .iter()
                .enumerate()
                .map(|(j, row)| row.iter().map(|&x| f(j, x)).collect())
                .collect(),
        }
    }
}

fn expertise_column(problem: &DecisionProblem, criterion: usize) -> Vec<Weight> {
    problem.expertise.iter().map(|row| row[criterion]).collect()
}

fn aggregate_for(problem: &DecisionProblem, criterion: usize, values: &[Ifn]) -> Result<Ifn> {
    ifa_aggregate(values, &expertise_column(problem, criterion)).map_err(|e| match e {
        Error::DegenerateWeights => Error::DegenerateExpertise {
            criterion: problem.criteria[criterion].id.clone(),
        },
        other => other,
    })
}

/// Aggregates evaluations over decision makers, weighted by their expertise
/// on each criterion.
pub fn aggregate_evaluations(problem: &DecisionProblem) -> Result<DecisionMatrix> {
    let n = problem.alternatives.len();
    let rows = (0..problem.criteria.len())
        .map(|j| {
            (0..n)
                .map(|i| {
                    let values: Vec<Ifn> = problem.evaluations.iter().map(|dm| dm[i][j]).collect();
                    aggregate_for(problem, j, &values)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    DecisionMatrix::from_rows(rows)
}

/// Aggregates criterion importance over decision makers.
pub fn aggregate_weights(problem: &DecisionProblem) -> Result<Vec<Ifn>> {
    (0..problem.criteria.len())
        .map(|j| {
            let values: Vec<Ifn> = problem.importance.iter().map(|dm| dm[j]).collect();
            aggregate_for(problem, j, &values)
        })
        .collect()
}

/// Benefit rows are kept; cost rows have membership and non-membership
/// swapped.
pub fn normalize(matrix: &DecisionMatrix, criteria: &[CriterionSpec]) -> Result<DecisionMatrix> {
    if matrix.criteria() != criteria.len() {
        return Err(Error::LengthMismatch {
            left: matrix.criteria(),
            right: criteria.len(),
        });
    }
    Ok(matrix.map(|j, x| match criteria[j].kind {
        CriterionKind::Benefit => x,
        CriterionKind::Cost => x.swapped(),
    }))
}

/// Multiplies every entry by its criterion's weight.
pub fn weight_matrix(normalized: &DecisionMatrix, weights: &[Ifn]) -> Result<DecisionMatrix> {
    if normalized.criteria() != weights.len() {
        return Err(Error::LengthMismatch {
            left: normalized.criteria(),
            right: weights.len(),
        });
    }
    Ok(normalized.map(|j, x| x * weights[j]))
}

/// Aggregation, normalization and weighting in one pass.
pub fn weighted_normalized(problem: &DecisionProblem) -> Result<DecisionMatrix> {
    let aggregated = aggregate_evaluations(problem)?;
    let weights = aggregate_weights(problem)?;
    let normalized = normalize(&aggregated, &problem.criteria)?;
    weight_matrix(&normalized, &weights)
}

/// Net-hypervolume breakdown for every alternative of a weighted matrix.
pub fn score_matrix(matrix: &DecisionMatrix, config: &HvConfig) -> Result<Vec<HvNetResult>> {
    (0..matrix.alternatives())
        .map(|i| hv_net(&matrix.alternative(i), config))
        .collect()
}

/// Ranks the alternatives of `problem` by net hypervolume, highest first.
pub fn rank(problem: &DecisionProblem, config: &HvConfig) -> Result<RankingResult> {
    config.validate()?;
    let matrix = weighted_normalized(problem)?;
    rank_matrix(&matrix, problem.alternatives.to_vec(), config)
}

/// Ranks an already weighted, normalized matrix.
pub fn rank_matrix(
    matrix: &DecisionMatrix,
    alternatives: Vec<String>,
    config: &HvConfig,
) -> Result<RankingResult> {
    let scores: Vec<f64> = score_matrix(matrix, config)?
        .iter()
        .map(|r| r.hv_net)
        .collect();
    Ok(RankingResult::from_scores(
        "hvas",
        alternatives,
        scores,
        Preference::HigherIsBetter,
        config.tie_tolerance,
    )?
    .with_config("alpha", config.alpha)
    .with_config("reference", describe_reference(config))
    .with_config("tie_tolerance", config.tie_tolerance))
}

fn describe_reference(config: &HvConfig) -> String {
    use crate::hypervolume::Reference;
    match &config.reference {
        Reference::Uniform(v) => format!("uniform({v})"),
        Reference::Explicit(coords) => coords
            .iter()
            .map(f64::to_string)
            .collect::<Vec<_>>()
            .join(","),
    }
}
