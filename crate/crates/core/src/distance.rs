//! Distance measures between intuitionistic fuzzy sets.
//!
//! Four measures are built in: normalized Hamming, 2D and 3D normalized
//! Euclidean, and a Hausdorff-style measure. Further measures plug in
//! through [`DistanceMeasure::new`] and a [`Registry`], and any measure can
//! be checked against the metric axioms with [`check_axioms`].

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ifs::{Ifn, Ifs};
use crate::sampling::{sample_ifs, seeded_rng};

/// Whether a measure is linear in the per-element differences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Linearity {
    Linear,
    Nonlinear,
}

type Evaluator = dyn Fn(&Ifs, &Ifs) -> f64 + Send + Sync;

/// A named distance function over equal-length sets.
#[derive(Clone)]
pub struct DistanceMeasure {
    name: String,
    kind: Linearity,
    evaluate: Arc<Evaluator>,
}

impl DistanceMeasure {
    /// Wraps a plugin measure. `evaluate` is only ever called with sets of
    /// equal length.
    pub fn new<F>(name: impl Into<String>, kind: Linearity, evaluate: F) -> Self
    where
        F: Fn(&Ifs, &Ifs) -> f64 + Send + Sync + 'static,
    {
        DistanceMeasure {
            name: name.into(),
            kind,
            evaluate: Arc::new(evaluate),
        }
    }

    pub fn hamming() -> Self {
        Self::builtin("hamming", Linearity::Linear, hamming_unchecked)
    }

    pub fn euclidean2() -> Self {
        Self::builtin("euclidean2", Linearity::Nonlinear, euclidean2_unchecked)
    }

    pub fn euclidean3() -> Self {
        Self::builtin("euclidean3", Linearity::Nonlinear, euclidean3_unchecked)
    }

    pub fn hausdorff() -> Self {
        Self::builtin("hausdorff", Linearity::Nonlinear, hausdorff_unchecked)
    }

    fn builtin(name: &str, kind: Linearity, f: fn(&Ifs, &Ifs) -> f64) -> Self {
        Self::new(name, kind, f)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> Linearity {
        self.kind
    }

    pub fn evaluate(&self, a: &Ifs, b: &Ifs) -> Result<f64> {
        check_lengths(a, b)?;
        Ok((self.evaluate)(a, b))
    }

    /// Distance between two single numbers.
    pub fn between(&self, a: Ifn, b: Ifn) -> f64 {
        (self.evaluate)(&Ifs::singleton(a), &Ifs::singleton(b))
    }
}

impl fmt::Debug for DistanceMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DistanceMeasure")
            .field("name", &self.name)
            .field("kind", &self.kind)
            .finish_non_exhaustive()
    }
}

/// Measures addressable by name. Populate it at startup, then share it
/// read-only.
#[derive(Clone, Debug, Default)]
pub struct Registry {
    measures: BTreeMap<String, DistanceMeasure>,
}

impl Registry {
    pub fn empty() -> Self {
        Self::default()
    }

    /// A registry holding the four built-in measures.
    pub fn builtin() -> Self {
        let mut registry = Self::empty();
        for measure in [
            DistanceMeasure::hamming(),
            DistanceMeasure::euclidean2(),
            DistanceMeasure::euclidean3(),
            DistanceMeasure::hausdorff(),
        ] {
            registry.register(measure);
        }
        registry
    }

    /// Adds a measure, returning any previous measure under the same name.
    pub fn register(&mut self, measure: DistanceMeasure) -> Option<DistanceMeasure> {
        self.measures.insert(measure.name.clone(), measure)
    }

    pub fn get(&self, name: &str) -> Result<&DistanceMeasure> {
        self.measures
            .get(name)
            .ok_or_else(|| Error::UnknownMeasure(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.measures.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = &DistanceMeasure> {
        self.measures.values()
    }
}

fn check_lengths(a: &Ifs, b: &Ifs) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(())
}

/// `(1 / 2n) * sum(|d_mu| + |d_nu|)`.
pub fn hamming(a: &Ifs, b: &Ifs) -> Result<f64> {
    check_lengths(a, b)?;
    Ok(hamming_unchecked(a, b))
}

/// `sqrt((1 / 2n) * sum(d_mu^2 + d_nu^2))`.
pub fn euclidean2(a: &Ifs, b: &Ifs) -> Result<f64> {
    check_lengths(a, b)?;
    Ok(euclidean2_unchecked(a, b))
}

/// `sqrt((1 / 2n) * sum(d_mu^2 + d_nu^2 + d_pi^2))`, including hesitancy.
pub fn euclidean3(a: &Ifs, b: &Ifs) -> Result<f64> {
    check_lengths(a, b)?;
    Ok(euclidean3_unchecked(a, b))
}

/// `(1 / n) * sum(max(|d_mu|, |d_nu|))`.
pub fn hausdorff(a: &Ifs, b: &Ifs) -> Result<f64> {
    check_lengths(a, b)?;
    Ok(hausdorff_unchecked(a, b))
}

fn per_element(a: &Ifs, b: &Ifs, f: impl Fn(&Ifn, &Ifn) -> f64) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| f(x, y)).sum()
}

fn hamming_unchecked(a: &Ifs, b: &Ifs) -> f64 {
    let total = per_element(a, b, |x, y| {
        (x.mu() - y.mu()).abs() + (x.nu() - y.nu()).abs()
    });
    total / (2 * a.len()) as f64
}

fn euclidean2_unchecked(a: &Ifs, b: &Ifs) -> f64 {
    let total = per_element(a, b, |x, y| {
        (x.mu() - y.mu()).powi(2) + (x.nu() - y.nu()).powi(2)
    });
    (total / (2 * a.len()) as f64).sqrt()
}

fn euclidean3_unchecked(a: &Ifs, b: &Ifs) -> f64 {
    let total = per_element(a, b, |x, y| {
        (x.mu() - y.mu()).powi(2)
            + (x.nu() - y.nu()).powi(2)
            + (x.hesitancy() - y.hesitancy()).powi(2)
    });
    (total / (2 * a.len()) as f64).sqrt()
}

fn hausdorff_unchecked(a: &Ifs, b: &Ifs) -> f64 {
    let total = per_element(a, b, |x, y| {
        (x.mu() - y.mu()).abs().max((x.nu() - y.nu()).abs())
    });
    total / a.len() as f64
}

/// Absolute tolerance used when checking the metric axioms.
pub const AXIOM_TOLERANCE: f64 = 1e-9;

const MAX_WITNESSES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Symmetry,
    Identity,
    Triangle,
}

/// Inputs that violate one axiom, with the distances observed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomWitness {
    pub axiom: Axiom,
    pub sets: Vec<Ifs>,
    pub distances: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomReport {
    pub measure_name: String,
    pub samples: usize,
    pub symmetry_ok: bool,
    pub identity_ok: bool,
    pub triangle_ok: bool,
    pub witnesses: Vec<AxiomWitness>,
}

impl AxiomReport {
    pub fn all_ok(&self) -> bool {
        self.symmetry_ok && self.identity_ok && self.triangle_ok
    }
}

/// Checks symmetry, identity of indiscernibles and the triangle inequality
/// on `samples` random triples of equal-length sets (lengths 1 to 4).
pub fn check_axioms(measure: &DistanceMeasure, samples: usize, seed: u64) -> Result<AxiomReport> {
    use rand::Rng;

    if samples == 0 {
        return Err(Error::InvalidParameter {
            name: "samples",
            value: 0.0,
            reason: "at least one sample is required",
        });
    }
    let mut rng = seeded_rng(seed);
    let mut report = AxiomReport {
        measure_name: measure.name().to_string(),
        samples,
        symmetry_ok: true,
        identity_ok: true,
        triangle_ok: true,
        witnesses: Vec::new(),
    };
    let d = |x: &Ifs, y: &Ifs| (measure.evaluate)(x, y);

    for _ in 0..samples {
        let len = rng.gen_range(1..=4);
        let triple = [
            sample_ifs(&mut rng, len),
            sample_ifs(&mut rng, len),
            sample_ifs(&mut rng, len),
        ];
        let pairs = [(0, 1), (1, 2), (0, 2)];

        for &(i, j) in &pairs {
            let (ab, ba) = (d(&triple[i], &triple[j]), d(&triple[j], &triple[i]));
            if (ab - ba).abs() > AXIOM_TOLERANCE {
                report.symmetry_ok = false;
                report.record(
                    Axiom::Symmetry,
                    vec![triple[i].clone(), triple[j].clone()],
                    vec![ab, ba],
                );
            }
        }

        for set in &triple {
            let own = d(set, set);
            if own.abs() > AXIOM_TOLERANCE {
                report.identity_ok = false;
                report.record(Axiom::Identity, vec![set.clone()], vec![own]);
            }
        }
        for &(i, j) in &pairs {
            let value = d(&triple[i], &triple[j]);
            if value < 0.0 || (value == 0.0 && max_gap(&triple[i], &triple[j]) > AXIOM_TOLERANCE) {
                report.identity_ok = false;
                report.record(
                    Axiom::Identity,
                    vec![triple[i].clone(), triple[j].clone()],
                    vec![value],
                );
            }
        }

        let ab = d(&triple[0], &triple[1]);
        let bc = d(&triple[1], &triple[2]);
        let ac = d(&triple[0], &triple[2]);
        if ab > bc + ac + AXIOM_TOLERANCE
            || bc > ab + ac + AXIOM_TOLERANCE
            || ac > ab + bc + AXIOM_TOLERANCE
        {
            report.triangle_ok = false;
            report.record(Axiom::Triangle, triple.to_vec(), vec![ab, bc, ac]);
        }
    }
    Ok(report)
}

impl AxiomReport {
    fn record(&mut self, axiom: Axiom, sets: Vec<Ifs>, distances: Vec<f64>) {
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(AxiomWitness {
                axiom,
                sets,
                distances,
            });
        }
    }
}

fn max_gap(a: &Ifs, b: &Ifs) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x.mu() - y.mu()).abs().max((x.nu() - y.nu()).abs()))
        .fold(0.0, f64::max)
}
