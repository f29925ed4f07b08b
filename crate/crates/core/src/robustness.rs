//! Ranking against an ideal point and auditing ranking robustness.
//!
//! A distance measure ranks consistently only if the order it induces is the
//! same whether sets are compared against the positive ideal (closer is
//! better) or the negative ideal (farther is better). [`robustness_check`]
//! tests that on a collection. [`audit`] searches the valid region for pairs
//! of numbers equidistant from the negative ideal whose distances to the
//! positive ideal differ, which is a counterexample to robust ranking.

use serde::Serialize;

use crate::distance::DistanceMeasure;
use crate::error::{Error, Result};
use crate::ifs::{Ifn, Ifs};
use crate::ranking::{default_labels, Preference, RankingResult, DEFAULT_TIE_TOLERANCE};
use crate::sampling::{sample_ifn, seeded_rng};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ReferenceKind {
    #[serde(rename = "PIS")]
    Pis,
    #[serde(rename = "NIS")]
    Nis,
}

impl ReferenceKind {
    pub fn ideal(self) -> Ifn {
        match self {
            ReferenceKind::Pis => Ifn::PIS,
            ReferenceKind::Nis => Ifn::NIS,
        }
    }

    /// The ideal set of length `len`.
    pub fn expand(self, len: usize) -> Result<Ifs> {
        Ifs::uniform(self.ideal(), len)
    }
}

/// Ranks `sets` by their distance to the chosen ideal. Alternatives are
/// labelled `X1..Xn`; use [`RankingResult::relabel`] for other names.
pub fn rank_by_reference(
    sets: &[Ifs],
    measure: &DistanceMeasure,
    reference: ReferenceKind,
) -> Result<RankingResult> {
    let first = sets.first().ok_or(Error::Empty("no sets to rank"))?;
    let ideal = reference.expand(first.len())?;
    let scores = sets
        .iter()
        .map(|set| measure.evaluate(set, &ideal))
        .collect::<Result<Vec<_>>>()?;
    let preference = match reference {
        ReferenceKind::Pis => Preference::LowerIsBetter,
        ReferenceKind::Nis => Preference::HigherIsBetter,
    };
    let label = match reference {
        ReferenceKind::Pis => "PIS",
        ReferenceKind::Nis => "NIS",
    };
    Ok(RankingResult::from_scores(
        format!("{}/{}", measure.name(), label),
        default_labels("X", sets.len()),
        scores,
        preference,
        DEFAULT_TIE_TOLERANCE,
    )?
    .with_config("measure", measure.name())
    .with_config("reference", label))
}

/// True when ranking against either ideal yields the same order, tie
/// structure included.
pub fn robustness_check(sets: &[Ifs], measure: &DistanceMeasure) -> Result<bool> {
    let by_pis = rank_by_reference(sets, measure, ReferenceKind::Pis)?;
    let by_nis = rank_by_reference(sets, measure, ReferenceKind::Nis)?;
    Ok(by_pis.order == by_nis.order)
}

/// Search budget and thresholds for [`audit`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditConfig {
    /// Maximum number of candidate pairs evaluated.
    pub budget: usize,
    /// Maximum difference between the two distances to the negative ideal.
    pub eps: f64,
    /// Difference between distances to the positive ideal that counts as a
    /// violation.
    pub delta: f64,
    pub seed: u64,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            budget: 10_000,
            eps: 1e-9,
            delta: 1e-3,
            seed: 0,
        }
    }
}

/// Two numbers at (numerically) equal distance from the negative ideal but
/// at different distances from the positive ideal.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub first: Ifn,
    pub second: Ifn,
    pub nis_distance: f64,
    pub nis_distance_second: f64,
    pub pis_distance_first: f64,
    pub pis_distance_second: f64,
}

impl Counterexample {
    /// Re-evaluates both distances with `measure` and confirms the violation.
    pub fn verify(&self, measure: &DistanceMeasure, config: &AuditConfig) -> bool {
        let nis_a = measure.between(self.first, Ifn::NIS);
        let nis_b = measure.between(self.second, Ifn::NIS);
        let pis_a = measure.between(self.first, Ifn::PIS);
        let pis_b = measure.between(self.second, Ifn::PIS);
        (nis_a - nis_b).abs() <= config.eps
            && (pis_a - pis_b).abs() > config.delta
            && nis_a == self.nis_distance
            && nis_b == self.nis_distance_second
            && pis_a == self.pis_distance_first
            && pis_b == self.pis_distance_second
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditReport {
    pub measure_name: String,
    pub is_robust_on_budget: bool,
    pub counterexamples: Vec<Counterexample>,
    pub samples_used: usize,
    pub config: AuditConfig,
}

const MAX_COUNTEREXAMPLES: usize = 10;
const RAYS_PER_ANCHOR: usize = 4;
const SCAN_CELLS: usize = 32;
const BISECTION_TOLERANCE: f64 = 1e-12;

/// Anchors tried before random ones: edge midpoints and the centroid of the
/// valid region.
const PROBE_ANCHORS: [(f64, f64); 4] = [(0.0, 0.5), (0.5, 0.0), (0.5, 0.5), (1.0 / 3.0, 1.0 / 3.0)];

/// A straight segment inside the valid region.
#[derive(Clone, Copy)]
struct Segment {
    from: (f64, f64),
    to: (f64, f64),
}

impl Segment {
    fn at(&self, t: f64) -> Ifn {
        Ifn::from_rounded(
            self.from.0 + t * (self.to.0 - self.from.0),
            self.from.1 + t * (self.to.1 - self.from.1),
        )
    }
}

/// Searches for counterexamples to robust ranking.
///
/// For each anchor the search finds every point on the region's three edges,
/// and on rays from the negative ideal through random valid points, whose
/// distance to the negative ideal matches the anchor's. Crossings are located
/// on a coarse scan and refined by bisection. Each partner found is one
/// sample; a partner whose distance to the positive ideal differs from the
/// anchor's by more than `delta` is recorded. The search stops when the
/// budget is spent or ten counterexamples are found.
pub fn audit(measure: &DistanceMeasure, config: &AuditConfig) -> Result<AuditReport> {
    if config.budget == 0 {
        return Err(Error::InvalidParameter {
            name: "budget",
            value: 0.0,
            reason: "must be at least 1",
        });
    }
    if config.eps.is_nan() || config.eps <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "eps",
            value: config.eps,
            reason: "must be positive",
        });
    }
    if config.delta.is_nan() || config.delta <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "delta",
            value: config.delta,
            reason: "must be positive",
        });
    }

    let mut rng = seeded_rng(config.seed);
    let to_nis = |x: Ifn| measure.between(x, Ifn::NIS);
    let to_pis = |x: Ifn| measure.between(x, Ifn::PIS);
    let edges = [
        Segment {
            from: (0.0, 1.0),
            to: (1.0, 0.0),
        },
        Segment {
            from: (0.0, 1.0),
            to: (0.0, 0.0),
        },
        Segment {
            from: (0.0, 0.0),
            to: (1.0, 0.0),
        },
    ];

    let mut counterexamples = Vec::new();
    let mut samples_used = 0;
    let mut probes = PROBE_ANCHORS.iter();

    'search: loop {
        let anchor = match probes.next() {
            Some(&(mu, nu)) => Ifn::from_rounded(mu, nu),
            None => sample_ifn(&mut rng),
        };
        let target = to_nis(anchor);
        let anchor_pis = to_pis(anchor);

        let mut paths: Vec<Segment> = edges.to_vec();
        for _ in 0..RAYS_PER_ANCHOR {
            let through = sample_ifn(&mut rng);
            paths.push(ray_from_nis(through));
        }

        let mut made_progress = false;
        for path in paths {
            for partner in crossings(&path, target, &to_nis) {
                if same_point(partner, anchor) {
                    continue;
                }
                made_progress = true;
                samples_used += 1;
                let partner_nis = to_nis(partner);
                if (partner_nis - target).abs() <= config.eps {
                    let partner_pis = to_pis(partner);
                    if (partner_pis - anchor_pis).abs() > config.delta {
                        counterexamples.push(Counterexample {
                            first: anchor,
                            second: partner,
                            nis_distance: target,
                            nis_distance_second: partner_nis,
                            pis_distance_first: anchor_pis,
                            pis_distance_second: partner_pis,
                        });
                        if counterexamples.len() >= MAX_COUNTEREXAMPLES {
                            break 'search;
                        }
                    }
                }
                if samples_used >= config.budget {
                    break 'search;
                }
            }
        }
        // A measure constant along every path would never produce partners.
        if !made_progress {
            samples_used += 1;
            if samples_used >= config.budget {
                break;
            }
        }
    }

    Ok(AuditReport {
        measure_name: measure.name().to_string(),
        is_robust_on_budget: counterexamples.is_empty(),
        counterexamples,
        samples_used,
        config: config.clone(),
    })
}

/// The segment from the negative ideal through `through` to the boundary
/// of the valid region.
fn ray_from_nis(through: Ifn) -> Segment {
    let (a, b) = (through.mu(), through.nu());
    // Points (t a, 1 - t (1 - b)) stay under mu + nu <= 1 for every t >= 0;
    // the ray leaves the region at mu = 1 or nu = 0.
    let limits = [a, 1.0 - b];
    let t_max = limits
        .iter()
        .filter(|&&rate| rate > 0.0)
        .map(|rate| 1.0 / rate)
        .fold(f64::INFINITY, f64::min);
    let t_max = if t_max.is_finite() { t_max } else { 0.0 };
    Segment {
        from: (0.0, 1.0),
        to: (a * t_max, 1.0 - (1.0 - b) * t_max),
    }
}

/// Every parameter on `path` where `distance` crosses `target`.
fn crossings(path: &Segment, target: f64, distance: &impl Fn(Ifn) -> f64) -> Vec<Ifn> {
    let f = |t: f64| distance(path.at(t)) - target;
    let mut roots = Vec::new();
    let mut lo = 0.0;
    let mut f_lo = f(lo);
    if f_lo == 0.0 {
        roots.push(path.at(0.0));
    }
    for cell in 1..=SCAN_CELLS {
        let hi = cell as f64 / SCAN_CELLS as f64;
        let f_hi = f(hi);
        if f_hi == 0.0 {
            roots.push(path.at(hi));
        } else if f_lo != 0.0 && (f_lo < 0.0) != (f_hi < 0.0) {
            roots.push(path.at(bisect(&f, lo, hi, f_lo)));
        }
        lo = hi;
        f_lo = f_hi;
    }
    roots
}

fn bisect(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, f_lo: f64) -> f64 {
    let lo_negative = f_lo < 0.0;
    while hi - lo > BISECTION_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn same_point(a: Ifn, b: Ifn) -> bool {
    (a.mu() - b.mu()).abs() < 1e-9 && (a.nu() - b.nu()).abs() < 1e-9
}
