//! Image-method velocity evaluation: the half-plane Euler Biot-Savart field
//! and the interior (smoothed-kernel) part of the filtered velocity, for
//! discrete vortex ensembles.
//!
//! The odd extension of the vorticity across the wall is realized by image
//! terms: every vortex at y contributes its kernel at x - y minus the kernel
//! at x - y_bar, with y_bar the mirror point.

use rayon::prelude::*;

use crate::accum::pairwise_point2;
use crate::ensemble::VortexEnsemble;
use crate::error::{Error, Result};
use crate::kernels::{biot_savart_kernel, k_alpha, AlphaParam, Point2};

/// Half-plane Biot-Savart kernel K_H(x, y) = K(x - y) - K(x - y_bar).
pub fn kernel_halfplane(x: Point2, y: Point2) -> Result<Point2> {
    if x == y {
        return Err(Error::Domain(
            "kernel_halfplane undefined on the diagonal x = y".into(),
        ));
    }
    if y.x2 == 0.0 {
        // y is its own image; the two terms cancel identically.
        return Ok(Point2::default());
    }
    let direct = biot_savart_kernel(x - y)?;
    let image = biot_savart_kernel(x - y.mirror())?;
    Ok(direct - image)
}

/// Euler velocity K_H[q](x) of the ensemble, with the wall-bounded
/// point-vortex convention at vortex centers: the singular self-term is
/// omitted, the image term kept.
pub fn euler_velocity(q: &VortexEnsemble, x: Point2) -> Point2 {
    let positions = q.positions();
    let strengths = q.strengths();
    let mut terms: Vec<Point2> = q
        .summation_order()
        .into_iter()
        .map(|j| {
            let y = positions[j];
            let mut v = Point2::default();
            if x != y {
                v = v + biot_savart_kernel(x - y).expect("x != y");
            }
            let ybar = y.mirror();
            if x != ybar {
                v = v - biot_savart_kernel(x - ybar).expect("x != ybar");
            }
            v * strengths[j]
        })
        .collect();
    pairwise_point2(&mut terms)
}

/// Interior part of the filtered velocity: (K_a * q_tilde)(x), evaluated as
/// the image sum over the ensemble. Smooth everywhere; K_a(0) = 0 makes the
/// self-term vanish without any exclusion rule.
pub fn interior_velocity(
    q: &VortexEnsemble,
    x: Point2,
    a: &AlphaParam,
) -> Point2 {
    let positions = q.positions();
    let strengths = q.strengths();
    let mut terms: Vec<Point2> = q
        .summation_order()
        .into_iter()
        .map(|j| {
            let y = positions[j];
            (k_alpha(x - y, a) - k_alpha(x - y.mirror(), a)) * strengths[j]
        })
        .collect();
    pairwise_point2(&mut terms)
}

/// Batch evaluation over many targets, parallel over the targets.
pub fn interior_velocity_many(
    q: &VortexEnsemble,
    targets: &[Point2],
    a: &AlphaParam,
) -> Vec<Point2> {
    targets
        .par_iter()
        .map(|&x| interior_velocity(q, x, a))
        .collect()
}

pub fn euler_velocity_many(
    q: &VortexEnsemble,
    targets: &[Point2],
) -> Vec<Point2> {
    targets.par_iter().map(|&x| euler_velocity(q, x)).collect()
}
