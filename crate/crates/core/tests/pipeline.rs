mod common;

use hvas_core::compare::{self, CompareConfig, Method};
use hvas_core::hvas;
use hvas_core::hypervolume::HvConfig;
use hvas_core::sampling::seeded_rng;

#[test]
fn comparators_see_the_hypervolume_inputs() {
    let mut rng = seeded_rng(21);
    for _ in 0..200 {
        let problem = common::random_problem(&mut rng);
        let matrix = hvas::weighted_normalized(&problem).unwrap();
        let labels = problem.alternatives().to_vec();
        let config = CompareConfig::default();
        let Ok(together) =
            compare::run_methods(&problem, &Method::ALL, &HvConfig::default(), &config)
        else {
            continue;
        };
        assert_eq!(
            together[0],
            hvas::rank_matrix(&matrix, labels.clone(), &HvConfig::default()).unwrap()
        );
        assert_eq!(
            together[1],
            compare::topsis_matrix(&matrix, labels.clone(), &config).unwrap()
        );
        assert_eq!(
            together[2],
            compare::vikor_matrix(&matrix, labels.clone(), &config).unwrap()
        );
        assert_eq!(
            together[3],
            compare::codas_matrix(&matrix, labels, &config).unwrap()
        );
    }
}

#[test]
fn comparators_are_permutation_equivariant() {
    let mut rng = seeded_rng(22);
    let config = CompareConfig::default();
    for _ in 0..200 {
        let problem = common::random_problem(&mut rng);
        let order = common::permutation(&mut rng, problem.alternatives().len());
        let shuffled = problem.permute_alternatives(&order).unwrap();
        let (Ok(base), Ok(moved)) = (
            compare::run_methods(&problem, &Method::ALL, &HvConfig::default(), &config),
            compare::run_methods(&shuffled, &Method::ALL, &HvConfig::default(), &config),
        ) else {
            continue;
        };
        for (a, b) in base.iter().zip(&moved) {
            for (k, &i) in order.iter().enumerate() {
                assert!((a.scores[i] - b.scores[k]).abs() < 1e-12, "{}", a.method);
            }
        }
    }
}

#[test]
fn separated_problems_agree_on_extremes() {
    let mut rng = seeded_rng(23);
    for _ in 0..100 {
        let (problem, best, worst) = common::separated_problem(&mut rng);
        for ranking in compare::run_methods(
            &problem,
            &Method::ALL,
            &HvConfig::default(),
            &CompareConfig::default(),
        )
        .unwrap()
        {
            assert!(
                ranking.is_strictly_first(best),
                "{}: {}",
                ranking.method,
                ranking.order_string()
            );
            assert!(
                ranking.is_strictly_last(worst),
                "{}: {}",
                ranking.method,
                ranking.order_string()
            );
        }
    }
}

#[test]
fn worked_example_orders() {
    let ranking = hvas::rank(&common::worked_example_problem(), &HvConfig::default()).unwrap();
    assert_eq!(ranking.order_string(), "X3 > X1 > X2");
    let with_alpha = hvas::rank(&common::worked_example_problem(), &HvConfig::with_alpha(1.0)).unwrap();
    assert!((with_alpha.scores[0] + 2.74).abs() < 1e-12);
}
