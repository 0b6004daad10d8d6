//! Scalar and vector kernels of the half-plane filtered Biot-Savart theory,
//! together with their partial Fourier transforms in the first variable.
//!
//! Notation: `G_a` is the Green's function of `I - a*Laplace` on the plane,
//! `H_a = a*G_a + (1/2pi) log|x|`, `K` the Biot-Savart kernel, and
//! `K_a = grad_perp H_a` its smoothed counterpart. The Fourier symbol
//! `xi_a = sqrt(xi1^2 + 1/a)` governs the vertical decay of corrector modes.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::bessel::{bessel_k0_k1, one_minus_r_k1};
use crate::error::{Error, Result};

/// Filtering length squared; strictly positive and finite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlphaParam {
    alpha: f64,
    sqrt_alpha: f64,
}

impl AlphaParam {
    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= 0.0 {
            return Err(Error::Domain(format!(
                "alpha must be finite and positive, got {alpha}"
            )));
        }
        Ok(Self {
            alpha,
            sqrt_alpha: alpha.sqrt(),
        })
    }

    #[inline]
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    #[inline]
    pub fn sqrt_alpha(&self) -> f64 {
        self.sqrt_alpha
    }
}

/// A point (or vector) of the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point2 {
    pub x1: f64,
    pub x2: f64,
}

impl Point2 {
    #[inline]
    pub fn new(x1: f64, x2: f64) -> Self {
        Self { x1, x2 }
    }

    #[inline]
    pub fn is_finite(&self) -> bool {
        self.x1.is_finite() && self.x2.is_finite()
    }

    /// (a, b) -> (-b, a).
    #[inline]
    pub fn perp(&self) -> Self {
        Self::new(-self.x2, self.x1)
    }

    /// Mirror image across the wall: (x1, x2) -> (x1, -x2).
    #[inline]
    pub fn mirror(&self) -> Self {
        Self::new(self.x1, -self.x2)
    }

    #[inline]
    pub fn dot(&self, other: &Self) -> f64 {
        self.x1 * other.x1 + self.x2 * other.x2
    }

    #[inline]
    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn norm(&self) -> f64 {
        self.x1.hypot(self.x2)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.x1 == 0.0 && self.x2 == 0.0
    }
}

impl Add for Point2 {
    type Output = Point2;
    #[inline]
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x1 + rhs.x1, self.x2 + rhs.x2)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    #[inline]
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x1 - rhs.x1, self.x2 - rhs.x2)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    #[inline]
    fn mul(self, s: f64) -> Point2 {
        Point2::new(self.x1 * s, self.x2 * s)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    #[inline]
    fn neg(self) -> Point2 {
        Point2::new(-self.x1, -self.x2)
    }
}

/// Wavenumber paired with the decay symbol xi_a = sqrt(xi1^2 + 1/alpha).
#[derive(Debug, Clone, Copy)]
pub struct FourierSymbolAlpha {
    pub xi1: f64,
    pub xi_alpha: f64,
}

impl FourierSymbolAlpha {
    pub fn new(xi1: f64, a: &AlphaParam) -> Self {
        // hypot keeps extreme wavenumbers from overflowing in xi1^2.
        Self {
            xi1,
            xi_alpha: xi1.hypot(1.0 / a.sqrt_alpha()),
        }
    }

    /// xi_a - |xi1| > 0, evaluated without cancellation.
    #[inline]
    pub fn gap(&self, a: &AlphaParam) -> f64 {
        (1.0 / a.alpha()) / (self.xi_alpha + self.xi1.abs())
    }
}

/// K0 and K1 of the second kind; re-exported from the certified evaluator.
pub fn k0_k1(r: f64) -> Result<(f64, f64)> {
    bessel_k0_k1(r)
}

/// G_a(x) = (1/(2 pi a)) K0(|x|/sqrt(a)); positive, radial, log-singular at 0.
pub fn green_alpha(x: Point2, a: &AlphaParam) -> Result<f64> {
    if x.is_zero() {
        return Err(Error::Domain("green_alpha undefined at x = 0".into()));
    }
    let r = x.norm() / a.sqrt_alpha();
    if r > 750.0 {
        return Ok(0.0);
    }
    let (k0, _) = bessel_k0_k1(r)?;
    Ok(k0 / (2.0 * PI * a.alpha()))
}

/// d/dx2 G_a(x) = -(x2 / (2 pi a^{3/2} |x|)) K1(|x|/sqrt(a)); odd in x2.
pub fn d2_green_alpha(x: Point2, a: &AlphaParam) -> Result<f64> {
    if x.is_zero() {
        return Err(Error::Domain("d2_green_alpha undefined at x = 0".into()));
    }
    let norm = x.norm();
    let r = norm / a.sqrt_alpha();
    if r > 750.0 {
        return Ok(0.0);
    }
    let (_, k1) = bessel_k0_k1(r)?;
    Ok(-x.x2 * k1 / (2.0 * PI * a.alpha() * a.sqrt_alpha() * norm))
}

/// The mixed derivative d/dx1 d/dx2 G_a(x).
pub fn d1_d2_green_alpha(x: Point2, a: &AlphaParam) -> Result<f64> {
    if x.is_zero() {
        return Err(Error::Domain(
            "d1_d2_green_alpha undefined at x = 0".into(),
        ));
    }
    let norm = x.norm();
    let r = norm / a.sqrt_alpha();
    if r > 750.0 {
        return Ok(0.0);
    }
    let (k0, k1) = bessel_k0_k1(r)?;
    let scale = 2.0 * PI * a.alpha() * a.sqrt_alpha() * norm.powi(3);
    Ok(x.x1 * x.x2 * (r * k0 + 2.0 * k1) / scale)
}

/// Partial Fourier transform of d/dx2 G_a: -(1/(2a)) exp(-xi_a x2), x2 > 0.
pub fn f1_d2_green_alpha(
    s: &FourierSymbolAlpha,
    x2: f64,
    a: &AlphaParam,
) -> f64 {
    debug_assert!(x2 > 0.0);
    -0.5 / a.alpha() * (-s.xi_alpha * x2).exp()
}

/// d/dx2 H_a(x) = (x2 / (2 pi |x|^2)) (1 - r K1(r)), r = |x|/sqrt(a).
///
/// Non-negative on the upper half-plane, odd in x2, and vanishes on the
/// approach to the wall.
pub fn d2_h_alpha(x: Point2, a: &AlphaParam) -> Result<f64> {
    if x.is_zero() {
        return Err(Error::Domain("d2_h_alpha undefined at x = 0".into()));
    }
    let norm_sq = x.norm_sq();
    let r = x.norm() / a.sqrt_alpha();
    let kappa = one_minus_r_k1(r)?;
    Ok(x.x2 * kappa / (2.0 * PI * norm_sq))
}

/// Partial Fourier transform of d/dx2 H_a:
/// (1/2)(exp(-x2 |xi1|) - exp(-x2 xi_a)), x2 > 0. Always in [0, 1/2).
pub fn f1_d2_h_alpha(s: &FourierSymbolAlpha, x2: f64, a: &AlphaParam) -> f64 {
    debug_assert!(x2 > 0.0);
    // Divided difference of exp evaluated through expm1 so that nearby
    // exponents (large |xi1|) do not cancel.
    0.5 * (-x2 * s.xi1.abs()).exp() * (-(-x2 * s.gap(a)).exp_m1())
}

/// Biot-Savart kernel K(x) = x_perp / (2 pi |x|^2).
pub fn biot_savart_kernel(x: Point2) -> Result<Point2> {
    if x.is_zero() {
        return Err(Error::Domain(
            "biot_savart_kernel undefined at x = 0".into(),
        ));
    }
    Ok(x.perp() * (1.0 / (2.0 * PI * x.norm_sq())))
}

/// Smoothed kernel K_a(x) = grad_perp H_a(x)
/// = (x_perp / (2 pi |x|^2)) (1 - r K1(r)), r = |x|/sqrt(a).
///
/// Defined everywhere; K_a(0) = 0, which is what makes particle
/// self-interaction vanish.
pub fn k_alpha(x: Point2, a: &AlphaParam) -> Point2 {
    if x.is_zero() {
        return Point2::default();
    }
    let r = x.norm() / a.sqrt_alpha();
    let kappa = one_minus_r_k1(r).expect("r > 0 finite");
    x.perp() * (kappa / (2.0 * PI * x.norm_sq()))
}

/// The boundary-layer kernels (eta1, eta2, zeta, rho) =
/// ((x2^2 - x1^2)/|x|^4, x1 x2/|x|^4, x1/|x|^2, x2/|x|^2).
pub fn eta_kernels(x: Point2) -> Result<(f64, f64, f64, f64)> {
    if x.is_zero() {
        return Err(Error::Domain("eta_kernels undefined at x = 0".into()));
    }
    let n2 = x.norm_sq();
    let n4 = n2 * n2;
    Ok((
        (x.x2 * x.x2 - x.x1 * x.x1) / n4,
        x.x1 * x.x2 / n4,
        x.x1 / n2,
        x.x2 / n2,
    ))
}
