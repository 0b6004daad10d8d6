//! Discrete potential-vorticity measures: point vortices in the open
//! half-plane with fixed circulations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::Point2;

/// Positions and circulations of the point vortices. Strengths never change
/// once constructed; transport only moves positions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VortexEnsemble {
    positions: Vec<Point2>,
    strengths: Vec<f64>,
}

impl VortexEnsemble {
    pub fn new(positions: Vec<Point2>, strengths: Vec<f64>) -> Result<Self> {
        if positions.len() != strengths.len() {
            return Err(Error::Domain(format!(
                "{} positions vs {} strengths",
                positions.len(),
                strengths.len()
            )));
        }
        for (j, p) in positions.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::Domain(format!(
                    "position {j} is not finite"
                )));
            }
            if p.x2 <= 0.0 {
                return Err(Error::Domain(format!(
                    "position {j} has x2 = {} <= 0; vortices live in the open half-plane",
                    p.x2
                )));
            }
        }
        for (j, g) in strengths.iter().enumerate() {
            if !g.is_finite() {
                return Err(Error::Domain(format!(
                    "strength {j} is not finite"
                )));
            }
        }
        // Coincident vortices make the reference Euler dynamics singular;
        // warn but allow (the smoothed kernel tolerates them).
        for j in 0..positions.len() {
            for k in (j + 1)..positions.len() {
                if (positions[j] - positions[k]).norm() < 1e-12 {
                    log::warn!(
                        "vortices {j} and {k} nearly coincide at ({}, {})",
                        positions[j].x1,
                        positions[j].x2
                    );
                }
            }
        }
        Ok(Self {
            positions,
            strengths,
        })
    }

    pub fn empty() -> Self {
        Self {
            positions: Vec::new(),
            strengths: Vec::new(),
        }
    }

    /// A single vortex of circulation `gamma` at `pos`.
    pub fn single(pos: Point2, gamma: f64) -> Result<Self> {
        Self::new(vec![pos], vec![gamma])
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    #[inline]
    pub fn positions(&self) -> &[Point2] {
        &self.positions
    }

    #[inline]
    pub fn strengths(&self) -> &[f64] {
        &self.strengths
    }

    pub fn iter(&self) -> impl Iterator<Item = (Point2, f64)> + '_ {
        self.positions
            .iter()
            .copied()
            .zip(self.strengths.iter().copied())
    }

    /// Total variation sum_j |Gamma_j|.
    pub fn total_variation(&self) -> f64 {
        self.strengths.iter().map(|g| g.abs()).sum()
    }

    /// Signed mass sum_j Gamma_j.
    pub fn signed_mass(&self) -> f64 {
        self.strengths.iter().sum()
    }

    pub fn min_height(&self) -> f64 {
        self.positions
            .iter()
            .map(|p| p.x2)
            .fold(f64::INFINITY, f64::min)
    }

    pub fn max_height(&self) -> f64 {
        self.positions.iter().map(|p| p.x2).fold(0.0, f64::max)
    }

    /// Horizontal span of the vortex positions.
    pub fn span_x1(&self) -> f64 {
        let lo = self
            .positions
            .iter()
            .map(|p| p.x1)
            .fold(f64::INFINITY, f64::min);
        let hi = self
            .positions
            .iter()
            .map(|p| p.x1)
            .fold(f64::NEG_INFINITY, f64::max);
        if lo.is_finite() {
            hi - lo
        } else {
            0.0
        }
    }

    pub fn max_abs_x1(&self) -> f64 {
        self.positions
            .iter()
            .map(|p| p.x1.abs())
            .fold(0.0, f64::max)
    }

    /// Same strengths at new positions. Lengths must agree; heights must be
    /// positive (transport cannot cross the wall).
    pub fn with_positions(&self, positions: Vec<Point2>) -> Result<Self> {
        if positions.len() != self.len() {
            return Err(Error::Domain(
                "position count changed under transport".into(),
            ));
        }
        Self::new(positions, self.strengths.clone())
    }

    /// Indices ordered by ascending |Gamma_j|, the summation order used by
    /// every kernel sum for reproducibility.
    pub fn summation_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by(|&a, &b| {
            self.strengths[a]
                .abs()
                .partial_cmp(&self.strengths[b].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.cmp(&b))
        });
        idx
    }

    /// Concatenation of two ensembles (the measure q1 + q2).
    pub fn concat(&self, other: &Self) -> Self {
        let mut positions = self.positions.clone();
        positions.extend_from_slice(&other.positions);
        let mut strengths = self.strengths.clone();
        strengths.extend_from_slice(&other.strengths);
        Self {
            positions,
            strengths,
        }
    }
}

/// A row of equally spaced vortices at height `height` spanning `span`,
/// with a nonnegative strength profile summing to `total_circulation`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StrengthProfile {
    Uniform,
    /// Raised-cosine taper, zero at the endpoints.
    Cosine,
}

pub fn sheet(
    n: usize,
    height: f64,
    span: f64,
    total_circulation: f64,
    profile: StrengthProfile,
) -> Result<VortexEnsemble> {
    if n == 0 || height <= 0.0 || span <= 0.0 || total_circulation < 0.0 {
        return Err(Error::Domain(
            "sheet requires n > 0, height > 0, span > 0 and nonnegative circulation".into(),
        ));
    }
    let mut positions = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for j in 0..n {
        let t = if n == 1 {
            0.5
        } else {
            j as f64 / (n - 1) as f64
        };
        positions.push(Point2::new(span * (t - 0.5), height));
        let w = match profile {
            StrengthProfile::Uniform => 1.0,
            StrengthProfile::Cosine => {
                0.5 * (1.0 - (2.0 * std::f64::consts::PI * t).cos())
            }
        };
        weights.push(w);
    }
    let wsum: f64 = weights.iter().sum();
    let strengths = weights
        .into_iter()
        .map(|w| total_circulation * w / wsum)
        .collect();
    VortexEnsemble::new(positions, strengths)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_wall_and_mismatch() {
        assert!(VortexEnsemble::new(
            vec![Point2::new(0.0, 0.0)],
            vec![1.0]
        )
        .is_err());
        assert!(VortexEnsemble::new(
            vec![Point2::new(0.0, 1.0)],
            vec![1.0, 2.0]
        )
        .is_err());
        assert!(VortexEnsemble::new(
            vec![Point2::new(0.0, f64::NAN)],
            vec![1.0]
        )
        .is_err());
    }

    #[test]
    fn conserved_quantities() {
        let q = VortexEnsemble::new(
            vec![Point2::new(0.0, 1.0), Point2::new(1.0, 2.0)],
            vec![-1.5, 2.0],
        )
        .unwrap();
        assert_eq!(q.total_variation(), 3.5);
        assert_eq!(q.signed_mass(), 0.5);
        assert_eq!(q.min_height(), 1.0);
        assert_eq!(q.span_x1(), 1.0);
    }

    #[test]
    fn summation_order_is_by_strength() {
        let q = VortexEnsemble::new(
            vec![
                Point2::new(0.0, 1.0),
                Point2::new(1.0, 1.0),
                Point2::new(2.0, 1.0),
            ],
            vec![-3.0, 0.5, 1.0],
        )
        .unwrap();
        assert_eq!(q.summation_order(), vec![1, 2, 0]);
    }

    #[test]
    fn sheet_profiles_are_nonnegative_and_normalized() {
        for profile in [StrengthProfile::Uniform, StrengthProfile::Cosine] {
            let q = sheet(21, 0.8, 4.0, 2.5, profile).unwrap();
            assert_eq!(q.len(), 21);
            assert!(q.strengths().iter().all(|&g| g >= 0.0));
            assert!((q.signed_mass() - 2.5).abs() < 1e-12);
            assert!((q.total_variation() - 2.5).abs() < 1e-12);
        }
        assert!(sheet(0, 1.0, 1.0, 1.0, StrengthProfile::Uniform).is_err());
    }
}
