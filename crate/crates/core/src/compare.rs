//! Distance-based comparators: TOPSIS, VIKOR and CODAS.
//!
//! All three consume the weighted, normalized matrix produced by
//! [`crate::hvas::weighted_normalized`], so they see exactly the data the
//! hypervolume ranking sees. The positive and negative solutions are drawn
//! per criterion from the candidates themselves with
//! [`crate::ifs::select_extremes`], never from the ideal numbers `(1, 0)` and
//! `(0, 1)`.
//!
//! Criterion weights are applied once, in the shared pipeline. VIKOR's
//! per-criterion regrets are therefore summed unweighted.

use std::fmt;
use std::str::FromStr;

use crate::distance::DistanceMeasure;
use crate::error::{Error, Result};
use crate::hvas::{self, DecisionMatrix, DecisionProblem};
use crate::hypervolume::HvConfig;
use crate::ifs::{select_extremes, Ifn, Ifs};
use crate::ranking::{Preference, RankingResult, DEFAULT_TIE_TOLERANCE};

#[derive(Clone, Debug)]
pub struct CompareConfig {
    /// CODAS threshold below which the secondary distance breaks ties.
    pub tau: f64,
    /// VIKOR weight of group utility against individual regret.
    pub v: f64,
    pub measure_primary: DistanceMeasure,
    pub measure_secondary: DistanceMeasure,
    pub tie_tolerance: f64,
}

impl Default for CompareConfig {
    fn default() -> Self {
        CompareConfig {
            tau: 0.02,
            v: 0.5,
            measure_primary: DistanceMeasure::euclidean2(),
            measure_secondary: DistanceMeasure::hamming(),
            tie_tolerance: DEFAULT_TIE_TOLERANCE,
        }
    }
}

impl CompareConfig {
    pub fn validate(&self) -> Result<()> {
        let unit = |name, value: f64| {
            if (0.0..=1.0).contains(&value) {
                Ok(())
            } else {
                Err(Error::InvalidParameter {
                    name,
                    value,
                    reason: "must lie in [0, 1]",
                })
            }
        };
        unit("tau", self.tau)?;
        unit("v", self.v)?;
        if self.tie_tolerance.is_nan() || self.tie_tolerance < 0.0 {
            return Err(Error::InvalidParameter {
                name: "tie_tolerance",
                value: self.tie_tolerance,
                reason: "must be non-negative",
            });
        }
        Ok(())
    }

    fn echo(&self, ranking: RankingResult) -> RankingResult {
        ranking
            .with_config("tau", self.tau)
            .with_config("v", self.v)
            .with_config("measure_primary", self.measure_primary.name())
            .with_config("measure_secondary", self.measure_secondary.name())
            .with_config("tie_tolerance", self.tie_tolerance)
    }
}

/// Per-criterion best and worst candidates.
#[derive(Clone, Debug, PartialEq)]
pub struct Solutions {
    pub positive: Ifs,
    pub negative: Ifs,
}

impl Solutions {
    pub fn of(matrix: &DecisionMatrix) -> Result<Self> {
        let (positive, negative): (Vec<Ifn>, Vec<Ifn>) = matrix
            .rows()
            .iter()
            .map(|row| select_extremes(row))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .unzip();
        Ok(Solutions {
            positive: Ifs::new(positive)?,
            negative: Ifs::new(negative)?,
        })
    }

    fn require_distinct(&self) -> Result<()> {
        if self.positive == self.negative {
            Err(Error::Degenerate("all alternatives are identical".into()))
        } else {
            Ok(())
        }
    }
}

pub fn topsis(problem: &DecisionProblem, config: &CompareConfig) -> Result<RankingResult> {
    config.validate()?;
    topsis_matrix(
        &hvas::weighted_normalized(problem)?,
        problem.alternatives().to_vec(),
        config,
    )
}

/// TOPSIS on an already weighted, normalized matrix. Scores are relative
/// closeness to the positive solution, higher is better.
pub fn topsis_matrix(
    matrix: &DecisionMatrix,
    alternatives: Vec<String>,
    config: &CompareConfig,
) -> Result<RankingResult> {
    let solutions = Solutions::of(matrix)?;
    solutions.require_distinct()?;
    let measure = &config.measure_primary;
    let scores = (0..matrix.alternatives())
        .map(|i| {
            let a = matrix.alternative(i);
            let to_positive = measure.evaluate(&a, &solutions.positive)?;
            let to_negative = measure.evaluate(&a, &solutions.negative)?;
            let total = to_positive + to_negative;
            if total > 0.0 {
                Ok(to_negative / total)
            } else {
                Err(Error::Degenerate(format!(
                    "alternative `{}` is at zero distance from both solutions",
                    alternatives[i]
                )))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let ranking = RankingResult::from_scores(
        "topsis",
        alternatives,
        scores,
        Preference::HigherIsBetter,
        config.tie_tolerance,
    )?;
    Ok(config.echo(ranking))
}

/// Group utility `S`, individual regret `R` and compromise index `Q` of
/// every alternative.
#[derive(Clone, Debug, PartialEq)]
pub struct VikorIndices {
    pub s: Vec<f64>,
    pub r: Vec<f64>,
    pub q: Vec<f64>,
}

pub fn vikor(problem: &DecisionProblem, config: &CompareConfig) -> Result<RankingResult> {
    config.validate()?;
    vikor_matrix(
        &hvas::weighted_normalized(problem)?,
        problem.alternatives().to_vec(),
        config,
    )
}

/// VIKOR on an already weighted, normalized matrix, ranked by ascending `Q`.
pub fn vikor_matrix(
    matrix: &DecisionMatrix,
    alternatives: Vec<String>,
    config: &CompareConfig,
) -> Result<RankingResult> {
    let indices = vikor_indices(matrix, config)?;
    let ranking = RankingResult::from_scores(
        "vikor",
        alternatives,
        indices.q,
        Preference::LowerIsBetter,
        config.tie_tolerance,
    )?;
    Ok(config.echo(ranking))
}

pub fn vikor_indices(matrix: &DecisionMatrix, config: &CompareConfig) -> Result<VikorIndices> {
    let solutions = Solutions::of(matrix)?;
    solutions.require_distinct()?;
    let measure = &config.measure_primary;
    let n = matrix.alternatives();
    let mut s = vec![0.0; n];
    let mut r = vec![0.0_f64; n];
    for (j, row) in matrix.rows().iter().enumerate() {
        let best = solutions.positive[j];
        let span = measure.between(best, solutions.negative[j]);
        if span <= 0.0 {
            continue;
        }
        for (i, &x) in row.iter().enumerate() {
            let regret = measure.between(best, x) / span;
            s[i] += regret;
            r[i] = r[i].max(regret);
        }
    }

    let spread = |values: &[f64]| {
        let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        (lo, hi - lo)
    };
    let terms = [(config.v, spread(&s), &s), (1.0 - config.v, spread(&r), &r)];
    let active: Vec<_> = terms
        .iter()
        .filter(|(_, (_, width), _)| *width > 0.0)
        .collect();
    let total_weight: f64 = active.iter().map(|(w, _, _)| w).sum();
    let q = (0..n)
        .map(|i| {
            if total_weight <= 0.0 {
                return 0.0;
            }
            active
                .iter()
                .map(|(w, (lo, width), values)| w / total_weight * (values[i] - lo) / width)
                .sum()
        })
        .collect();
    Ok(VikorIndices { s, r, q })
}

pub fn codas(problem: &DecisionProblem, config: &CompareConfig) -> Result<RankingResult> {
    config.validate()?;
    codas_matrix(
        &hvas::weighted_normalized(problem)?,
        problem.alternatives().to_vec(),
        config,
    )
}

/// CODAS on an already weighted, normalized matrix. Each alternative scores
/// the sum of its pairwise assessments against all others, higher is better.
pub fn codas_matrix(
    matrix: &DecisionMatrix,
    alternatives: Vec<String>,
    config: &CompareConfig,
) -> Result<RankingResult> {
    let solutions = Solutions::of(matrix)?;
    solutions.require_distinct()?;
    let n = matrix.alternatives();
    let mut primary = Vec::with_capacity(n);
    let mut secondary = Vec::with_capacity(n);
    for i in 0..n {
        let a = matrix.alternative(i);
        primary.push(config.measure_primary.evaluate(&a, &solutions.negative)?);
        secondary.push(config.measure_secondary.evaluate(&a, &solutions.negative)?);
    }
    let scores = (0..n)
        .map(|i| {
            (0..n)
                .map(|k| {
                    let de = primary[i] - primary[k];
                    if de.abs() < config.tau {
                        de + (secondary[i] - secondary[k])
                    } else {
                        de
                    }
                })
                .sum()
        })
        .collect();
    let ranking = RankingResult::from_scores(
        "codas",
        alternatives,
        scores,
        Preference::HigherIsBetter,
        config.tie_tolerance,
    )?;
    Ok(config.echo(ranking))
}

/// A ranking method selectable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Hvas,
    Topsis,
    Vikor,
    Codas,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Hvas, Method::Topsis, Method::Vikor, Method::Codas];

    pub fn name(self) -> &'static str {
        match self {
            Method::Hvas => "hvas",
            Method::Topsis => "topsis",
            Method::Vikor => "vikor",
            Method::Codas => "codas",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| {
                format!("unknown method `{s}` (expected one of hvas, topsis, vikor, codas)")
            })
    }
}

/// Runs each requested method on `problem`, sharing one pass of the common
/// pipeline.
pub fn run_methods(
    problem: &DecisionProblem,
    methods: &[Method],
    hv: &HvConfig,
    config: &CompareConfig,
) -> Result<Vec<RankingResult>> {
    hv.validate()?;
    config.validate()?;
    let matrix = hvas::weighted_normalized(problem)?;
    let labels = || problem.alternatives().to_vec();
    methods
        .iter()
        .map(|method| match method {
            Method::Hvas => hvas::rank_matrix(&matrix, labels(), hv),
            Method::Topsis => topsis_matrix(&matrix, labels(), config),
            Method::Vikor => vikor_matrix(&matrix, labels(), config),
            Method::Codas => codas_matrix(&matrix, labels(), config),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hvas::{CriterionKind, CriterionSpec};

    fn ifn(mu: f64, nu: f64) -> Ifn {
        Ifn::new(mu, nu).unwrap()
    }

    fn problem(rows: Vec<Vec<(f64, f64)>>) -> DecisionProblem {
        let m = rows[0].len();
        DecisionProblem::single(
            (1..=rows.len()).map(|i| format!("A{i}")).collect(),
            (1..=m)
                .map(|j| CriterionSpec::new(format!("c{j}"), CriterionKind::Benefit))
                .collect(),
            rows.into_iter()
                .map(|row| row.into_iter().map(|(m, n)| ifn(m, n)).collect())
                .collect(),
            vec![Ifn::PIS; m],
        )
        .unwrap()
    }

    fn sample() -> DecisionProblem {
        problem(vec![
            vec![(0.4, 0.3), (0.5, 0.2), (0.3, 0.3)],
            vec![(0.8, 0.1), (0.7, 0.1), (0.6, 0.2)],
            vec![(0.2, 0.6), (0.6, 0.3), (0.4, 0.5)],
            vec![(0.5, 0.4), (0.2, 0.5), (0.5, 0.25)],
        ])
    }

    type Runner = fn(&DecisionProblem, &CompareConfig) -> Result<RankingResult>;
    const METHODS: [(&str, Runner); 3] = [("topsis", topsis), ("vikor", vikor), ("codas", codas)];

    #[test]
    fn dominant_alternative_first() {
        for (name, run) in METHODS {
            let ranking = run(&sample(), &CompareConfig::default()).unwrap();
            assert!(
                ranking.is_strictly_first(1),
                "{name}: {}",
                ranking.order_string()
            );
            assert_eq!(ranking.method, name);
        }
    }

    #[test]
    fn identical_alternatives_tie() {
        let p = problem(vec![
            vec![(0.4, 0.3), (0.5, 0.2)],
            vec![(0.4, 0.3), (0.5, 0.2)],
            vec![(0.1, 0.6), (0.2, 0.5)],
        ]);
        for (name, run) in METHODS {
            let ranking = run(&p, &CompareConfig::default()).unwrap();
            assert_eq!(ranking.order, vec![vec![0, 1], vec![2]], "{name}");
        }
    }

    #[test]
    fn all_identical_is_degenerate() {
        let p = problem(vec![vec![(0.4, 0.3)]; 3]);
        for (name, run) in METHODS {
            let err = run(&p, &CompareConfig::default()).unwrap_err();
            assert!(err.is_degenerate(), "{name}: {err}");
        }
    }

    #[test]
    fn config_echo() {
        let config = CompareConfig {
            tau: 0.05,
            v: 0.3,
            ..CompareConfig::default()
        };
        for (_, run) in METHODS {
            let ranking = run(&sample(), &config).unwrap();
            assert_eq!(ranking.config_echo["measure_primary"], "euclidean2");
            assert_eq!(ranking.config_echo["measure_secondary"], "hamming");
            assert_eq!(ranking.config_echo["tau"], "0.05");
            assert_eq!(ranking.config_echo["v"], "0.3");
        }
    }

    #[test]
    fn rejects_out_of_range_parameters() {
        for config in [
            CompareConfig {
                tau: -0.1,
                ..CompareConfig::default()
            },
            CompareConfig {
                tau: 1.5,
                ..CompareConfig::default()
            },
            CompareConfig {
                v: 1.1,
                ..CompareConfig::default()
            },
            CompareConfig {
                v: f64::NAN,
                ..CompareConfig::default()
            },
        ] {
            for (_, run) in METHODS {
                assert!(matches!(
                    run(&sample(), &config),
                    Err(Error::InvalidParameter { .. })
                ));
            }
        }
    }

    #[test]
    fn vikor_endpoints() {
        let matrix = hvas::weighted_normalized(&sample()).unwrap();
        let base = CompareConfig::default();
        let indices = vikor_indices(&matrix, &base).unwrap();
        let labels: Vec<String> = sample().alternatives().to_vec();
        let by = |values: Vec<f64>| {
            RankingResult::from_scores("x", labels.clone(), values, Preference::LowerIsBetter, 1e-9)
                .unwrap()
                .order
        };
        let s_only = vikor_matrix(
            &matrix,
            labels.clone(),
            &CompareConfig {
                v: 1.0,
                ..base.clone()
            },
        )
        .unwrap();
        assert_eq!(s_only.order, by(indices.s.clone()));
        let r_only =
            vikor_matrix(&matrix, labels.clone(), &CompareConfig { v: 0.0, ..base }).unwrap();
        assert_eq!(r_only.order, by(indices.r));
    }

    #[test]
    fn vikor_index_values() {
        let matrix = hvas::weighted_normalized(&sample()).unwrap();
        let indices = vikor_indices(&matrix, &CompareConfig::default()).unwrap();
        // The dominant alternative has no regret anywhere.
        assert_eq!((indices.s[1], indices.r[1], indices.q[1]), (0.0, 0.0, 0.0));
        assert!(indices.q.iter().all(|q| (0.0..=1.0).contains(q)));
        assert!(indices.r.iter().zip(&indices.s).all(|(r, s)| r <= s));
    }

    #[test]
    fn codas_threshold() {
        // Equal Euclidean distance to the negative solution, unequal Hamming.
        let a = (0.3, 0.4);
        let b = (0.1, 0.3);
        let worst = (0.0, 0.9);
        let p = problem(vec![vec![a, worst], vec![worst, b], vec![worst, worst]]);
        let matrix = hvas::weighted_normalized(&p).unwrap();
        let solutions = Solutions::of(&matrix).unwrap();
        let e = |i: usize| {
            config_distance(
                &DistanceMeasure::euclidean2(),
                &matrix,
                i,
                &solutions.negative,
            )
        };
        let t = |i: usize| {
            config_distance(&DistanceMeasure::hamming(), &matrix, i, &solutions.negative)
        };
        assert!((e(0) - e(1)).abs() < 0.02);
        assert!(t(0) != t(1));

        let labels = p.alternatives().to_vec();
        let with_threshold =
            codas_matrix(&matrix, labels.clone(), &CompareConfig::default()).unwrap();
        let expected_first = if t(0) > t(1) { 0 } else { 1 };
        assert!(with_threshold.is_strictly_first(expected_first));

        let primary_only = codas_matrix(
            &matrix,
            labels.clone(),
            &CompareConfig {
                tau: 0.0,
                ..CompareConfig::default()
            },
        )
        .unwrap();
        let by_primary = RankingResult::from_scores(
            "x",
            labels,
            (0..3).map(e).collect(),
            Preference::HigherIsBetter,
            1e-9,
        )
        .unwrap();
        assert_eq!(primary_only.order, by_primary.order);
    }

    fn config_distance(
        measure: &DistanceMeasure,
        matrix: &DecisionMatrix,
        i: usize,
        target: &Ifs,
    ) -> f64 {
        measure.evaluate(&matrix.alternative(i), target).unwrap()
    }

    #[test]
    fn solutions_come_from_candidates() {
        let matrix = hvas::weighted_normalized(&sample()).unwrap();
        let solutions = Solutions::of(&matrix).unwrap();
        for (j, row) in matrix.rows().iter().enumerate() {
            assert!(row.contains(&solutions.positive[j]));
            assert!(row.contains(&solutions.negative[j]));
        }
        assert_ne!(solutions.positive[0], Ifn::PIS);
    }

    #[test]
    fn run_methods_matches_individual_calls() {
        let p = sample();
        let hv = HvConfig::default();
        let config = CompareConfig::default();
        let all = run_methods(&p, &Method::ALL, &hv, &config).unwrap();
        assert_eq!(all[0], hvas::rank(&p, &hv).unwrap());
        assert_eq!(all[1], topsis(&p, &config).unwrap());
        assert_eq!(all[2], vikor(&p, &config).unwrap());
        assert_eq!(all[3], codas(&p, &config).unwrap());
    }

    #[test]
    fn method_names_parse() {
        for method in Method::ALL {
            assert_eq!(method.name().parse::<Method>(), Ok(method));
        }
        assert_eq!(" TOPSIS ".parse::<Method>(), Ok(Method::Topsis));
        assert!("electre".parse::<Method>().is_err());
    }

    #[test]
    fn permutation_equivariance() {
        let p = sample();
        let shuffled = p.permute_alternatives(&[3, 1, 0, 2]).unwrap();
        for (name, run) in METHODS {
            let a = run(&p, &CompareConfig::default()).unwrap();
            let b = run(&shuffled, &CompareConfig::default()).unwrap();
            let mut left: Vec<Vec<&str>> = a.order_labels();
            let mut right: Vec<Vec<&str>> = b.order_labels();
            left.iter_mut()
                .chain(right.iter_mut())
                .for_each(|g| g.sort_unstable());
            assert_eq!(left, right, "{name}");
        }
    }
}
