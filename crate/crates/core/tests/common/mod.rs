//! Oracles and problem generators shared by the integration tests.

#![allow(dead_code)]

use hvas_core::hvas::{CriterionKind, CriterionSpec, DecisionProblem};
use hvas_core::ifs::{Ifn, Ifs, Weight};
use hvas_core::sampling::sample_ifn;
use rand::Rng;

/// The three sets used throughout the worked example.
pub fn worked_example_sets() -> Vec<Ifs> {
    [
        [(0.2, 0.4), (0.1, 0.2)],
        [(0.3, 0.6), (0.4, 0.4)],
        [(0.2, 0.7), (0.6, 0.3)],
    ]
    .iter()
    .map(|pairs| Ifs::from_pairs(pairs).unwrap())
    .collect()
}

/// The worked example as a single decision maker problem with ideal
/// importance on every criterion.
pub fn worked_example_problem() -> DecisionProblem {
    let sets = worked_example_sets();
    DecisionProblem::single(
        vec!["X1".into(), "X2".into(), "X3".into()],
        vec![
            CriterionSpec::new("c1", CriterionKind::Benefit),
            CriterionSpec::new("c2", CriterionKind::Benefit),
        ],
        sets.iter().map(|s| s.elements().to_vec()).collect(),
        vec![Ifn::PIS; 2],
    )
    .unwrap()
}

/// Volume of a union of anchored boxes by summing over every subset.
pub fn inclusion_exclusion(points: &[Vec<f64>], reference: &[f64]) -> f64 {
    let mut total = 0.0;
    for mask in 1u32..(1 << points.len()) {
        let mut corner = vec![f64::INFINITY; reference.len()];
        for (i, p) in points.iter().enumerate() {
            if mask & (1 << i) != 0 {
                for (c, v) in corner.iter_mut().zip(p) {
                    *c = c.min(*v);
                }
            }
        }
        let volume: f64 = corner
            .iter()
            .zip(reference)
            .map(|(c, r)| (c - r).max(0.0))
            .product();
        total += if mask.count_ones() % 2 == 1 {
            volume
        } else {
            -volume
        };
    }
    total
}

/// `count` points with coordinates in `[0, 1)` and `dims` dimensions,
/// measured against the origin.
pub fn random_points<R: Rng>(rng: &mut R, count: usize, dims: usize) -> Vec<Vec<f64>> {
    (0..count)
        .map(|_| (0..dims).map(|_| rng.gen()).collect())
        .collect()
}

fn uniform_in<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    lo + rng.gen::<f64>() * (hi - lo)
}

/// A number drawn from a rectangle of the valid region, clipped so that
/// membership and non-membership never exceed one together.
fn sample_box<R: Rng>(rng: &mut R, mu: (f64, f64), nu: (f64, f64)) -> Ifn {
    let m = uniform_in(rng, mu.0, mu.1);
    let n = uniform_in(rng, nu.0, nu.1).min(1.0 - m);
    Ifn::new(m, n).unwrap()
}

fn random_kinds<R: Rng>(rng: &mut R, m: usize) -> Vec<CriterionSpec> {
    (0..m)
        .map(|j| {
            let kind = if rng.gen_bool(0.5) {
                CriterionKind::Benefit
            } else {
                CriterionKind::Cost
            };
            CriterionSpec::new(format!("c{}", j + 1), kind)
        })
        .collect()
}

fn random_importance<R: Rng>(rng: &mut R) -> Ifn {
    let mu = uniform_in(rng, 0.2, 1.0);
    let nu = uniform_in(rng, 0.0, 1.0 - mu);
    Ifn::new(mu, nu).unwrap()
}

/// Assembles a problem from evaluations expressed in benefit orientation,
/// swapping the cells of cost criteria back into raw form.
fn assemble<R: Rng>(
    rng: &mut R,
    criteria: Vec<CriterionSpec>,
    normalized: Vec<Vec<Vec<Ifn>>>,
) -> DecisionProblem {
    let q = normalized.len();
    let n = normalized[0].len();
    let m = criteria.len();
    let evaluations = normalized
        .into_iter()
        .map(|rows| {
            rows.into_iter()
                .map(|row| {
                    row.into_iter()
                        .zip(&criteria)
                        .map(|(x, c)| {
                            if c.kind == CriterionKind::Cost {
                                x.swapped()
                            } else {
                                x
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let importance = (0..q)
        .map(|_| (0..m).map(|_| random_importance(rng)).collect())
        .collect();
    let expertise = (0..q)
        .map(|_| {
            (0..m)
                .map(|_| Weight::new(uniform_in(rng, 0.1, 1.0)).unwrap())
                .collect()
        })
        .collect();
    DecisionProblem::new(
        (1..=n).map(|i| format!("A{i}")).collect(),
        criteria,
        (1..=q).map(|l| format!("DM{l}")).collect(),
        evaluations,
        importance,
        expertise,
    )
    .unwrap()
}

/// A problem with one clearly dominant and one clearly dominated
/// alternative. Returns the problem with the indices of both.
pub fn separated_problem<R: Rng>(rng: &mut R) -> (DecisionProblem, usize, usize) {
    let n = rng.gen_range(3..=7);
    let m = rng.gen_range(1..=5);
    let q = rng.gen_range(1..=3);
    let best = rng.gen_range(0..n);
    let worst = (best + rng.gen_range(1..n)) % n;
    let criteria = random_kinds(rng, m);
    let normalized = (0..q)
        .map(|_| {
            (0..n)
                .map(|i| {
                    (0..m)
                        .map(|_| {
                            if i == best {
                                sample_box(rng, (0.55, 0.95), (0.0, 0.05))
                            } else if i == worst {
                                sample_box(rng, (0.0, 0.05), (0.45, 0.95))
                            } else {
                                sample_box(rng, (0.1, 0.5), (0.1, 0.4))
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    (assemble(rng, criteria, normalized), best, worst)
}

/// A problem with arbitrary evaluations, except that one alternative is made
/// at least as good as every other on every criterion for every decision
/// maker, and strictly better somewhere. Returns the problem and the index
/// of the dominant alternative.
#[allow(clippy::needless_range_loop)]
pub fn dominated_by_one<R: Rng>(rng: &mut R) -> (DecisionProblem, usize) {
    let n = rng.gen_range(2..=6);
    let m = rng.gen_range(1..=4);
    let q = rng.gen_range(1..=3);
    let best = rng.gen_range(0..n);
    let criteria = random_kinds(rng, m);
    let normalized: Vec<Vec<Vec<Ifn>>> = (0..q)
        .map(|_| {
            let mut rows: Vec<Vec<Ifn>> = (0..n)
                .map(|_| (0..m).map(|_| sample_ifn(rng)).collect())
                .collect();
            for j in 0..m {
                let others = (0..n).filter(|&i| i != best);
                let mu = others.clone().map(|i| rows[i][j].mu()).fold(0.0, f64::max);
                let nu = others.map(|i| rows[i][j].nu()).fold(1.0, f64::min);
                // Spend half of any remaining hesitancy on membership and
                // shave non-membership, so the dominance is strict.
                let spare = (1.0 - mu - nu).max(0.0);
                rows[best][j] = Ifn::new(mu + 0.5 * spare, nu * 0.5).unwrap();
            }
            rows
        })
        .collect();
    (assemble(rng, criteria, normalized), best)
}

/// Whether `best` weakly dominates every other column of the weighted
/// normalized matrix and differs from each of them.
pub fn strictly_dominates(matrix: &hvas_core::DecisionMatrix, best: usize) -> bool {
    (0..matrix.alternatives()).filter(|&i| i != best).all(|i| {
        let weakly = matrix
            .rows()
            .iter()
            .all(|row| row[best].mu() >= row[i].mu() && row[best].nu() <= row[i].nu());
        weakly && matrix.alternative(best) != matrix.alternative(i)
    })
}

/// Random problem with no planted structure.
pub fn random_problem<R: Rng>(rng: &mut R) -> DecisionProblem {
    let n = rng.gen_range(2..=6);
    let m = rng.gen_range(1..=4);
    let q = rng.gen_range(1..=3);
    let criteria = random_kinds(rng, m);
    let normalized = (0..q)
        .map(|_| {
            (0..n)
                .map(|_| (0..m).map(|_| sample_ifn(rng)).collect())
                .collect()
        })
        .collect();
    assemble(rng, criteria, normalized)
}

/// A uniformly random permutation of `0..n`.
pub fn permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    order
}
