//! Intuitionistic fuzzy numbers and sets.
//!
//! An [`Ifn`] is a membership/non-membership pair `(mu, nu)` with
//! `mu, nu` in `[0, 1]` and `mu + nu <= 1`. The residue `1 - mu - nu` is the
//! hesitancy. An [`Ifs`] is a fixed-length sequence of such numbers, one per
//! element of the universe (one per criterion in decision problems).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Index, Mul};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Slack accepted on `mu + nu <= 1` before a value is rejected. Values inside
/// the slack are projected back onto the simplex boundary.
pub const CONSTRUCTION_TOLERANCE: f64 = 1e-9;

/// An intuitionistic fuzzy number.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "(f64, f64)", into = "(f64, f64)")]
pub struct Ifn {
    mu: f64,
    nu: f64,
}

impl Ifn {
    /// Positive ideal solution, the greatest value.
    pub const PIS: Ifn = Ifn { mu: 1.0, nu: 0.0 };
    /// Negative ideal solution, the smallest value.
    pub const NIS: Ifn = Ifn { mu: 0.0, nu: 1.0 };

    pub fn new(mu: f64, nu: f64) -> Result<Self> {
        if !mu.is_finite() || !nu.is_finite() {
            return Err(Error::Domain {
                mu,
                nu,
                reason: "degrees must be finite",
            });
        }
        if !(0.0..=1.0).contains(&mu) || !(0.0..=1.0).contains(&nu) {
            return Err(Error::Domain {
                mu,
                nu,
                reason: "degrees must lie in [0, 1]",
            });
        }
        let sum = mu + nu;
        if sum > 1.0 + CONSTRUCTION_TOLERANCE {
            return Err(Error::Domain {
                mu,
                nu,
                reason: "membership plus non-membership exceeds 1",
            });
        }
        Ok(Self::project(mu, nu))
    }

    /// Builds a value from arithmetic that is valid up to rounding.
    pub(crate) fn from_rounded(mu: f64, nu: f64) -> Self {
        Self::project(mu.clamp(0.0, 1.0), nu.clamp(0.0, 1.0))
    }

    fn project(mu: f64, nu: f64) -> Self {
        let sum = mu + nu;
        if sum > 1.0 {
            Ifn {
                mu: mu / sum,
                nu: nu / sum,
            }
        } else {
            Ifn { mu, nu }
        }
    }

    #[inline]
    pub fn mu(&self) -> f64 {
        self.mu
    }

    #[inline]
    pub fn nu(&self) -> f64 {
        self.nu
    }

    #[inline]
    pub fn hesitancy(&self) -> f64 {
        1.0 - self.mu - self.nu
    }

    /// `mu - nu`, in `[-1, 1]`.
    #[inline]
    pub fn score(&self) -> f64 {
        self.mu - self.nu
    }

    /// `mu + nu`, in `[0, 1]`.
    #[inline]
    pub fn accuracy(&self) -> f64 {
        self.mu + self.nu
    }

    /// Lexicographic comparison on (score, accuracy).
    pub fn compare(&self, other: &Ifn) -> Ordering {
        self.score()
            .total_cmp(&other.score())
            .then_with(|| self.accuracy().total_cmp(&other.accuracy()))
    }

    /// Swaps membership and non-membership (complement).
    pub fn swapped(&self) -> Ifn {
        Ifn {
            mu: self.nu,
            nu: self.mu,
        }
    }

    /// `(mu_a * mu_b, nu_a + nu_b - nu_a * nu_b)`.
    pub fn multiply(&self, other: &Ifn) -> Ifn {
        Ifn::from_rounded(self.mu * other.mu, self.nu + other.nu - self.nu * other.nu)
    }
}

impl Mul for Ifn {
    type Output = Ifn;

    fn mul(self, rhs: Ifn) -> Ifn {
        self.multiply(&rhs)
    }
}

impl TryFrom<(f64, f64)> for Ifn {
    type Error = Error;

    fn try_from((mu, nu): (f64, f64)) -> Result<Self> {
        Ifn::new(mu, nu)
    }
}

impl From<Ifn> for (f64, f64) {
    fn from(value: Ifn) -> Self {
        (value.mu, value.nu)
    }
}

impl fmt::Display for Ifn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.mu, self.nu)
    }
}

/// An ordinary fuzzy membership used as an aggregation weight.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Weight(f64);

impl Weight {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && (0.0..=1.0).contains(&value) {
            Ok(Weight(value))
        } else {
            Err(Error::InvalidWeight(value))
        }
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Weight {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Weight::new(value)
    }
}

impl From<Weight> for f64 {
    fn from(value: Weight) -> Self {
        value.0
    }
}

/// An intuitionistic fuzzy set over a finite universe: a non-empty sequence
/// of [`Ifn`] whose length is fixed at construction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Ifn>", into = "Vec<Ifn>")]
pub struct Ifs(Vec<Ifn>);

impl Ifs {
    pub fn new(elements: Vec<Ifn>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::Empty(
                "an intuitionistic fuzzy set needs at least one element",
            ));
        }
        Ok(Ifs(elements))
    }

    /// Builds a set from raw `(mu, nu)` pairs.
    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self> {
        let elements = pairs
            .iter()
            .map(|&(mu, nu)| Ifn::new(mu, nu))
            .collect::<Result<Vec<_>>>()?;
        Ifs::new(elements)
    }

    /// `len` copies of `value`.
    pub fn uniform(value: Ifn, len: usize) -> Result<Self> {
        Ifs::new(vec![value; len])
    }

    pub fn singleton(value: Ifn) -> Self {
        Ifs(vec![value])
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn elements(&self) -> &[Ifn] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Ifn> {
        self.0.iter()
    }

    pub fn memberships(&self) -> Vec<f64> {
        self.0.iter().map(Ifn::mu).collect()
    }

    pub fn non_memberships(&self) -> Vec<f64> {
        self.0.iter().map(Ifn::nu).collect()
    }

    pub fn hesitancies(&self) -> Vec<f64> {
        self.0.iter().map(Ifn::hesitancy).collect()
    }
}

impl Index<usize> for Ifs {
    type Output = Ifn;

    fn index(&self, index: usize) -> &Ifn {
        &self.0[index]
    }
}

impl<'a> IntoIterator for &'a Ifs {
    type Item = &'a Ifn;
    type IntoIter = std::slice::Iter<'a, Ifn>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl TryFrom<Vec<Ifn>> for Ifs {
    type Error = Error;

    fn try_from(value: Vec<Ifn>) -> Result<Self> {
        Ifs::new(value)
    }
}

impl From<Ifs> for Vec<Ifn> {
    fn from(value: Ifs) -> Self {
        value.0
    }
}

/// Weighted arithmetic mean of intuitionistic fuzzy numbers.
///
/// Fails with [`Error::DegenerateWeights`] when the weights sum to zero.
pub fn ifa_aggregate(values: &[Ifn], weights: &[Weight]) -> Result<Ifn> {
    if values.is_empty() {
        return Err(Error::Empty("aggregation needs at least one value"));
    }
    if values.len() != weights.len() {
        return Err(Error::LengthMismatch {
            left: values.len(),
            right: weights.len(),
        });
    }
    let total: f64 = weights.iter().map(Weight::value).sum();
    if total <= 0.0 {
        return Err(Error::DegenerateWeights);
    }
    let (mu, nu) = values
        .iter()
        .zip(weights)
        .fold((0.0, 0.0), |(mu, nu), (value, weight)| {
            (
                mu + value.mu() * weight.value(),
                nu + value.nu() * weight.value(),
            )
        });
    Ok(Ifn::from_rounded(mu / total, nu / total))
}

/// Returns `(greatest, smallest)` under [`Ifn::compare`]. The first occurrence
/// wins exact ties.
pub fn select_extremes(values: &[Ifn]) -> Result<(Ifn, Ifn)> {
    let (first, rest) = values
        .split_first()
        .ok_or(Error::Empty("cannot select extremes of an empty sequence"))?;
    let mut best = *first;
    let mut worst = *first;
    for value in rest {
        if value.compare(&best) == Ordering::Greater {
            best = *value;
        }
        if value.compare(&worst) == Ordering::Less {
            worst = *value;
        }
    }
    Ok((best, worst))
}

#[cfg(test)]
pub(crate) mod strategies {
    use super::*;
    use proptest::prelude::*;

    /// Uniform over the closed simplex `mu, nu >= 0, mu + nu <= 1`.
    pub fn ifn() -> impl Strategy<Value = Ifn> {
        (0.0..=1.0f64, 0.0..=1.0f64).prop_map(|(a, b)| {
            if a + b > 1.0 {
                Ifn::from_rounded(1.0 - a, 1.0 - b)
            } else {
                Ifn::from_rounded(a, b)
            }
        })
    }

    pub fn ifs(len: usize) -> impl Strategy<Value = Ifs> {
        prop::collection::vec(ifn(), len).prop_map(|v| Ifs::new(v).unwrap())
    }
}
