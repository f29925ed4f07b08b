//! Hypervolume of point sets and the net-hypervolume score of a fuzzy set.
//!
//! Hypervolume here is the Lebesgue measure of the region dominated by a
//! point set above a reference point `r`: the union of the boxes `[r, p]`.
//! A single point reduces to the product `prod(p_j - r_j)`.
//!
//! [`hv_net`] splits a fuzzy set into its membership, non-membership and
//! hesitancy points and scores it by `HV_mu - HV_nu - alpha * HV_pi`.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ifs::Ifs;
use crate::ranking::DEFAULT_TIE_TOLERANCE;
use crate::sampling::seeded_rng;

/// Reference point for [`hv_net`].
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reference {
    /// The same coordinate in every dimension.
    Uniform(f64),
    Explicit(Vec<f64>),
}

impl Reference {
    /// Materialises the reference in `dims` dimensions.
    pub fn resolve(&self, dims: usize) -> Result<Vec<f64>> {
        match self {
            Reference::Uniform(value) => Ok(vec![*value; dims]),
            Reference::Explicit(coords) if coords.len() == dims => Ok(coords.clone()),
            Reference::Explicit(coords) => Err(Error::DimensionMismatch {
                expected: coords.len(),
                found: dims,
            }),
        }
    }

    fn coords(&self) -> Vec<f64> {
        match self {
            Reference::Uniform(value) => vec![*value],
            Reference::Explicit(coords) => coords.clone(),
        }
    }
}

/// Settings for net-hypervolume ranking.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HvConfig {
    pub reference: Reference,
    /// Factor of perception in `[-1, 1]`: positive values penalise
    /// hesitancy, negative values reward it.
    pub alpha: f64,
    pub tie_tolerance: f64,
}

impl Default for HvConfig {
    fn default() -> Self {
        HvConfig {
            reference: Reference::Uniform(-1.0),
            alpha: 0.0,
            tie_tolerance: DEFAULT_TIE_TOLERANCE,
        }
    }
}

impl HvConfig {
    pub fn with_alpha(alpha: f64) -> Self {
        HvConfig {
            alpha,
            ..HvConfig::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(-1.0..=1.0).contains(&self.alpha) {
            return Err(Error::InvalidParameter {
                name: "alpha",
                value: self.alpha,
                reason: "factor of perception must lie in [-1, 1]",
            });
        }
        if self.tie_tolerance.is_nan() || self.tie_tolerance < 0.0 {
            return Err(Error::InvalidParameter {
                name: "tie_tolerance",
                value: self.tie_tolerance,
                reason: "must be non-negative",
            });
        }
        for value in self.reference.coords() {
            if !value.is_finite() || value > 0.0 {
                return Err(Error::InvalidParameter {
                    name: "reference",
                    value,
                    reason: "reference coordinates must be finite and <= 0",
                });
            }
        }
        Ok(())
    }
}

/// Per-space hypervolumes and the combined score.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HvNetResult {
    pub hv_mu: f64,
    pub hv_nu: f64,
    pub hv_pi: f64,
    pub hv_net: f64,
}

fn check_point(point: &[f64], reference: &[f64]) -> Result<()> {
    if point.len() != reference.len() {
        return Err(Error::DimensionMismatch {
            expected: reference.len(),
            found: point.len(),
        });
    }
    for (index, (&value, &r)) in point.iter().zip(reference).enumerate() {
        if !value.is_finite() {
            return Err(Error::NonFinite { index, value });
        }
        if !r.is_finite() {
            return Err(Error::NonFinite { index, value: r });
        }
        if value < r {
            return Err(Error::NotDominating {
                index,
                value,
                reference: r,
            });
        }
    }
    Ok(())
}

/// Volume of the box between `reference` and `point`.
pub fn hv_point(point: &[f64], reference: &[f64]) -> Result<f64> {
    if reference.is_empty() {
        return Err(Error::Empty(
            "reference point needs at least one coordinate",
        ));
    }
    check_point(point, reference)?;
    Ok(box_volume(point, reference))
}

fn box_volume(point: &[f64], reference: &[f64]) -> f64 {
    point.iter().zip(reference).map(|(p, r)| p - r).product()
}

/// Volume of the union of the boxes `[reference, p]` over `points`.
///
/// Uses a recursive dimension sweep: points are sliced along the last
/// coordinate and each slab is measured in one dimension fewer. Work grows
/// roughly like `n^(m-1) / (m-1)!` for `n` mutually non-dominated points in
/// `m` dimensions.
pub fn hv_set(points: &[Vec<f64>], reference: &[f64]) -> Result<f64> {
    if reference.is_empty() {
        return Err(Error::Empty(
            "reference point needs at least one coordinate",
        ));
    }
    for point in points {
        check_point(point, reference)?;
    }
    match points {
        [] => Ok(0.0),
        [single] => Ok(box_volume(single, reference)),
        _ => {
            let shifted: Vec<Vec<f64>> = points
                .iter()
                .map(|p| p.iter().zip(reference).map(|(v, r)| v - r).collect())
                .collect();
            Ok(sweep(non_dominated(shifted), reference.len()))
        }
    }
}

/// Drops points weakly dominated by another point (and duplicates).
fn non_dominated(mut points: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    // Descending lexicographic order guarantees a dominating point precedes
    // anything it dominates.
    points.sort_by(|a, b| {
        b.iter()
            .zip(a.iter())
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let mut kept: Vec<Vec<f64>> = Vec::with_capacity(points.len());
    for point in points {
        let dominated = kept
            .iter()
            .any(|k| k.iter().zip(&point).all(|(a, b)| a >= b));
        if !dominated {
            kept.push(point);
        }
    }
    kept
}

/// Hypervolume of points already shifted so the reference is the origin,
/// using the first `dims` coordinates.
fn sweep(mut points: Vec<Vec<f64>>, dims: usize) -> f64 {
    match (points.len(), dims) {
        (0, _) => 0.0,
        (_, 1) => points.iter().map(|p| p[0]).fold(0.0, f64::max),
        (1, _) => points[0][..dims].iter().product(),
        (_, 2) => {
            // Classic staircase: sort by y descending, accumulate x gains.
            points.sort_by(|a, b| b[1].total_cmp(&a[1]));
            let mut area = 0.0;
            let mut best_x: f64 = 0.0;
            for (k, p) in points.iter().enumerate() {
                best_x = best_x.max(p[0]);
                let next_y = points.get(k + 1).map_or(0.0, |q| q[1]);
                area += best_x * (p[1] - next_y);
            }
            area
        }
        _ => {
            let last = dims - 1;
            points.sort_by(|a, b| b[last].total_cmp(&a[last]));
            let mut volume = 0.0;
            for k in 0..points.len() {
                let next = points.get(k + 1).map_or(0.0, |q| q[last]);
                let height = points[k][last] - next;
                if height <= 0.0 {
                    continue;
                }
                let slab: Vec<Vec<f64>> = points[..=k].iter().map(|p| p[..last].to_vec()).collect();
                volume += sweep(non_dominated(slab), last) * height;
            }
            volume
        }
    }
}

/// Monte Carlo estimate of [`hv_set`] by uniform sampling of the bounding
/// box `[reference, componentwise max]`. Returns `(estimate, standard error)`.
pub fn mc_oracle(
    points: &[Vec<f64>],
    reference: &[f64],
    samples: usize,
    seed: u64,
) -> Result<(f64, f64)> {
    if samples == 0 {
        return Err(Error::InvalidParameter {
            name: "samples",
            value: 0.0,
            reason: "at least one sample is required",
        });
    }
    if points.is_empty() {
        return Ok((0.0, 0.0));
    }
    for point in points {
        check_point(point, reference)?;
    }
    let upper: Vec<f64> = (0..reference.len())
        .map(|j| {
            points
                .iter()
                .map(|p| p[j])
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .collect();
    let volume = box_volume(&upper, reference);
    if volume == 0.0 {
        return Ok((0.0, 0.0));
    }

    let mut rng = seeded_rng(seed);
    let mut sample = vec![0.0; reference.len()];
    let mut hits = 0usize;
    for _ in 0..samples {
        for (j, slot) in sample.iter_mut().enumerate() {
            *slot = reference[j] + rng.gen::<f64>() * (upper[j] - reference[j]);
        }
        if points
            .iter()
            .any(|p| p.iter().zip(&sample).all(|(pj, qj)| pj >= qj))
        {
            hits += 1;
        }
    }
    let fraction = hits as f64 / samples as f64;
    let stderr = volume * (fraction * (1.0 - fraction) / samples as f64).sqrt();
    Ok((fraction * volume, stderr))
}

/// Net hypervolume of a fuzzy set: the membership, non-membership and
/// hesitancy degrees each form one point, measured against the configured
/// reference.
pub fn hv_net(set: &Ifs, config: &HvConfig) -> Result<HvNetResult> {
    config.validate()?;
    let reference = config.reference.resolve(set.len())?;
    let hv_mu = hv_point(&set.memberships(), &reference)?;
    let hv_nu = hv_point(&set.non_memberships(), &reference)?;
    let hv_pi = hv_point(&set.hesitancies(), &reference)?;
    Ok(HvNetResult {
        hv_mu,
        hv_nu,
        hv_pi,
        hv_net: hv_mu - hv_nu - config.alpha * hv_pi,
    })
}
