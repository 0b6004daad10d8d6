//! The boundary corrector: the tangential slip left on the wall by the
//! interior image sum, and the modified-Stokes corrector field that cancels
//! it.
//!
//! The corrector is computed primarily on the Fourier side: the slip datum g
//! is sampled on a uniform periodic window, transformed, propagated into the
//! half-plane mode by mode through the closed-form profile, and inverse
//! transformed at the targets. A slow real-space quadrature of the layered
//! convolution formulas serves as an independent cross-check.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use rayon::prelude::*;
use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;

use crate::accum::pairwise_f64;
use crate::ensemble::VortexEnsemble;
use crate::error::{Error, Result};
use crate::kernels::{
    d1_d2_green_alpha, d2_green_alpha, d2_h_alpha, eta_kernels, AlphaParam,
    FourierSymbolAlpha, Point2,
};
use crate::quadrature::{
    adaptive_half_line, adaptive_real_line, adaptive_with_breakpoints,
};

/// Slip datum g at a single abscissa: the exact kernel sum
/// g(x1) = -2 sum_j Gamma_j d2H_a(x1 - y_j1, y_j2).
///
/// Nonpositive whenever every circulation is nonnegative.
pub fn boundary_trace(q: &VortexEnsemble, a: &AlphaParam, x1: f64) -> f64 {
    let positions = q.positions();
    let strengths = q.strengths();
    let mut terms: Vec<f64> = q
        .summation_order()
        .into_iter()
        .map(|j| {
            let y = positions[j];
            let arg = Point2::new(x1 - y.x1, y.x2);
            -2.0 * strengths[j] * d2_h_alpha(arg, a).expect("y2 > 0")
        })
        .collect();
    pairwise_f64(&mut terms)
}

/// Periodic window used to discretize the slip datum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceWindow {
    /// Half-width L; the grid covers [-L, L).
    pub half_width: f64,
    /// Number of nodes (a power of two).
    pub modes: usize,
}

impl TraceWindow {
    pub fn new(half_width: f64, modes: usize) -> Result<Self> {
        if !half_width.is_finite() || half_width <= 0.0 {
            return Err(Error::Config(format!(
                "window half-width must be positive, got {half_width}"
            )));
        }
        if modes < 4 || !modes.is_power_of_two() {
            return Err(Error::Config(format!(
                "window mode count must be a power of two >= 4, got {modes}"
            )));
        }
        Ok(Self { half_width, modes })
    }

    /// Window wide enough for the ensemble, the filtering scale and the
    /// requested targets, with resolution tied to the finest datum scale.
    pub fn auto(
        q: &VortexEnsemble,
        a: &AlphaParam,
        max_target_abs_x1: f64,
    ) -> Self {
        let sa = a.sqrt_alpha();
        let base = sa
            .max(q.max_height())
            .max(q.span_x1())
            .max(1e-3);
        let half_width = (25.0 * base)
            .max(2.5 * (q.max_abs_x1() + base))
            .max(2.5 * max_target_abs_x1)
            .max(1.0);
        // The datum varies on the scale of the lowest vortex or sqrt(alpha),
        // whichever is coarser.
        let finest = q.min_height().min(half_width).max(sa).max(1e-3);
        let target_dx = finest / 8.0;
        let n = (2.0 * half_width / target_dx).ceil() as usize;
        let modes = n.next_power_of_two().clamp(256, 32_768);
        Self { half_width, modes }
    }
}

/// The slip datum sampled on a uniform grid with cached Fourier
/// coefficients (approximations of the continuous transform of g).
#[derive(Debug, Clone)]
pub struct SampledTrace {
    half_width: f64,
    values: Vec<f64>,
    fourier: Vec<Complex64>,
    tail_magnitude: f64,
    alpha: AlphaParam,
}

impl SampledTrace {
    #[inline]
    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn dx(&self) -> f64 {
        2.0 * self.half_width / self.len() as f64
    }

    #[inline]
    pub fn node(&self, k: usize) -> f64 {
        -self.half_width + k as f64 * self.dx()
    }

    #[inline]
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    #[inline]
    pub fn alpha(&self) -> &AlphaParam {
        &self.alpha
    }

    /// Largest |g| measured at the window edge during construction.
    #[inline]
    pub fn tail_magnitude(&self) -> f64 {
        self.tail_magnitude
    }

    /// Discrete L1 norm dx * sum |g_k|.
    pub fn l1_norm(&self) -> f64 {
        self.dx() * self.values.iter().map(|v| v.abs()).sum::<f64>()
    }

    /// Signed wavenumber index of FFT bin m: m for m < N/2, m - N beyond.
    #[inline]
    fn signed_index(&self, m: usize) -> i64 {
        let n = self.len() as i64;
        let m = m as i64;
        if m < n / 2 {
            m
        } else {
            m - n
        }
    }

    /// Wavenumber of FFT bin m.
    #[inline]
    pub fn wavenumber(&self, m: usize) -> f64 {
        PI * self.signed_index(m) as f64 / self.half_width
    }

    /// Continuous-transform coefficient g_hat(xi_m) approximated by the DFT.
    #[inline]
    pub fn coefficient(&self, m: usize) -> Complex64 {
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        self.fourier[m] * (self.dx() * sign)
    }

    /// Scale a trace by a constant (the datum is linear in the vorticity).
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            half_width: self.half_width,
            values: self.values.iter().map(|v| v * factor).collect(),
            fourier: self.fourier.iter().map(|c| c * factor).collect(),
            tail_magnitude: self.tail_magnitude * factor.abs(),
            alpha: self.alpha,
        }
    }
}

/// Sample the slip datum of `q` on `window` and cache its transform.
///
/// `tail_tol` is an absolute threshold on |g| at the window edges; the
/// datum decays only quadratically in x1, so an undersized window shows up
/// here rather than as silent aliasing.
pub fn build_trace(
    q: &VortexEnsemble,
    a: &AlphaParam,
    window: TraceWindow,
    tail_tol: f64,
) -> Result<SampledTrace> {
    let n = window.modes;
    let l = window.half_width;
    let dx = 2.0 * l / n as f64;
    let values: Vec<f64> = (0..n)
        .into_par_iter()
        .map(|k| boundary_trace(q, a, -l + k as f64 * dx))
        .collect();
    let tail = values[0].abs().max(boundary_trace(q, a, l).abs());
    if !q.is_empty() && tail >= tail_tol {
        return Err(Error::TailTooLarge {
            magnitude: tail,
            tol: tail_tol,
        });
    }
    let mut buf: Vec<Complex64> =
        values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);
    Ok(SampledTrace {
        half_width: l,
        values,
        fourier: buf,
        tail_magnitude: tail,
        alpha: *a,
    })
}

/// One Fourier mode of the corrector at height x2 >= 0:
/// w1_hat = ghat (e^{-x2 xi_a} - |xi1| D),  w2_hat = -i xi1 ghat D,
/// D = int_0^{x2} e^{-y xi_a} e^{-|xi1|(x2 - y)} dy.
///
/// D is a divided difference of exponentials and is evaluated through expm1
/// so nearby exponents do not cancel. At xi1 = 0 the second term vanishes
/// identically; at x2 = 0 the mode reduces to (ghat, 0).
pub fn ubdry_fourier_profile(
    ghat: Complex64,
    s: &FourierSymbolAlpha,
    x2: f64,
    a: &AlphaParam,
) -> (Complex64, Complex64) {
    debug_assert!(x2 >= 0.0);
    let abs_xi = s.xi1.abs();
    let gap = s.gap(a);
    let u = x2 * gap;
    let phi = if u == 0.0 { 1.0 } else { -(-u).exp_m1() / u };
    let d = x2 * (-x2 * abs_xi).exp() * phi;
    let decay = (-x2 * s.xi_alpha).exp();
    let w1 = ghat * (decay - abs_xi * d);
    let w2 = Complex64::new(0.0, -s.xi1) * ghat * d;
    (w1, w2)
}

/// Per-mode corrector coefficients for one height.
fn row_profile(
    tr: &SampledTrace,
    a: &AlphaParam,
    x2: f64,
) -> Vec<(Complex64, Complex64)> {
    (0..tr.len())
        .map(|m| {
            let s = FourierSymbolAlpha::new(tr.wavenumber(m), a);
            ubdry_fourier_profile(tr.coefficient(m), &s, x2, a)
        })
        .collect()
}

/// Evaluate the corrector at arbitrary targets inside the window.
///
/// Targets must satisfy x2 >= 0 and |x1| <= L/2 (the interior of the
/// periodic window, keeping wrap-around leakage out of the answer).
pub fn ubdry_field(
    tr: &SampledTrace,
    a: &AlphaParam,
    targets: &[Point2],
) -> Result<Vec<Point2>> {
    let half = 0.5 * tr.half_width();
    for t in targets {
        if t.x2 < 0.0 {
            return Err(Error::Domain(format!(
                "corrector target must have x2 >= 0, got {}",
                t.x2
            )));
        }
        if t.x1.abs() > half {
            return Err(Error::TargetOutsideWindow {
                x1: t.x1,
                half_width: half,
            });
        }
    }

    // Group targets by height so each row profile is computed once.
    let mut rows: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (i, t) in targets.iter().enumerate() {
        rows.entry(t.x2.to_bits()).or_default().push(i);
    }

    let mut out = vec![Point2::default(); targets.len()];
    let results: Vec<(usize, Point2)> = rows
        .into_par_iter()
        .flat_map(|(bits, idxs)| {
            let x2 = f64::from_bits(bits);
            let coeffs = row_profile(tr, a, x2);
            idxs.into_par_iter()
                .map(|i| (i, reconstruct_at(tr, &coeffs, targets[i].x1)))
                .collect::<Vec<_>>()
        })
        .collect();
    for (i, v) in results {
        out[i] = v;
    }
    Ok(out)
}

/// Inverse transform of one row profile at abscissa x1:
/// w(x1) = (1/(2L)) sum_m w_hat(xi_m) e^{i xi_m x1}.
fn reconstruct_at(
    tr: &SampledTrace,
    coeffs: &[(Complex64, Complex64)],
    x1: f64,
) -> Point2 {
    let n = tr.len();
    let half_n = (n / 2) as i64;
    let base = PI * x1 / tr.half_width();
    let step = Complex64::from_polar(1.0, base);
    let mut acc1 = Complex64::new(0.0, 0.0);
    let mut acc2 = Complex64::new(0.0, 0.0);
    let mut phase = Complex64::from_polar(1.0, -(half_n as f64) * base);
    for j in 0..n {
        // Resynchronize the phase recurrence to kill rounding drift.
        if j % 512 == 0 {
            phase =
                Complex64::from_polar(1.0, (j as i64 - half_n) as f64 * base);
        }
        let m = ((j as i64 + half_n) % n as i64) as usize;
        acc1 += coeffs[m].0 * phase;
        acc2 += coeffs[m].1 * phase;
        phase *= step;
    }
    let scale = 1.0 / (2.0 * tr.half_width());
    Point2::new(acc1.re * scale, acc2.re * scale)
}

/// Largest corrector magnitude along a horizontal line, sampled densely.
pub fn ubdry_sup_on_row(
    tr: &SampledTrace,
    a: &AlphaParam,
    x2: f64,
    samples: usize,
) -> Result<f64> {
    let half = 0.45 * tr.half_width();
    let targets: Vec<Point2> = (0..samples)
        .map(|i| {
            let t = i as f64 / (samples - 1) as f64;
            Point2::new(-half + 2.0 * half * t, x2)
        })
        .collect();
    let field = ubdry_field(tr, a, &targets)?;
    Ok(field.iter().map(|v| v.norm()).fold(0.0, f64::max))
}

const INNER_BUDGET: usize = 300_000;
const MIDDLE_BUDGET: usize = 500_000;
const OUTER_BUDGET: usize = 800_000;

/// Real-space evaluation of the corrector through the layered convolution
/// formulas: w1 = -2a g *1 d2G_a + (2a/pi) g *1 d2G_a *h eta1 and
/// w2 = -(4a/pi) g *1 d2G_a *h eta2, with the half-plane convolution
/// *h integrating heights over (0, x2).
///
/// Near the target height the layer kernels are integrated by parts onto
/// their antiderivatives (zeta, rho) to keep every integrand absolutely
/// integrable. Slow; intended as an oracle at a handful of points.
pub fn ubdry_quadrature_oracle(
    q: &VortexEnsemble,
    a: &AlphaParam,
    x: Point2,
) -> Result<Point2> {
    if q.is_empty() {
        return Ok(Point2::default());
    }
    if x.x2 <= 0.0 {
        return Err(Error::Domain(
            "quadrature oracle requires an interior point (x2 > 0)".into(),
        ));
    }
    let al = a.alpha();
    let sa = a.sqrt_alpha();
    let x1 = x.x1;
    let x2 = x.x2;

    let scale = q.total_variation().max(1e-12);
    let inner_abs = 1e-10 * scale / al;
    let middle_abs = 1e-9 * scale / al;
    let outer_abs = 1e-9 * scale / al;

    // F(z, y2) = (g *1 d2G_a(., y2))(z); the kernel row is a peak of width
    // max(y2, sqrt(alpha)) around s = 0.
    let f_conv = |z: f64, y2: f64| -> f64 {
        let w = y2.max(sa);
        adaptive_real_line(
            |s| {
                boundary_trace(q, a, z - s)
                    * d2_green_alpha(Point2::new(s, y2), a).unwrap()
            },
            &[-6.0 * w, -w, -y2, 0.0, y2, w, 6.0 * w],
            inner_abs,
            1e-8,
            INNER_BUDGET,
        )
        .map(|r| r.value)
        .unwrap_or(f64::NAN)
    };

    // dF/dz via the mixed kernel derivative.
    let f_conv_d1 = |z: f64, y2: f64| -> f64 {
        let w = y2.max(sa);
        adaptive_real_line(
            |s| {
                boundary_trace(q, a, z - s)
                    * d1_d2_green_alpha(Point2::new(s, y2), a).unwrap()
            },
            &[-6.0 * w, -w, -y2, 0.0, y2, w, 6.0 * w],
            inner_abs / y2.max(sa),
            1e-8,
            INNER_BUDGET,
        )
        .map(|r| r.value)
        .unwrap_or(f64::NAN)
    };

    // Direct layer convolution for rows well below the target height.
    let c_direct = |y2: f64, second: bool| -> f64 {
        let b = x2 - y2;
        adaptive_real_line(
            |t| {
                let (e1, e2, _, _) =
                    eta_kernels(Point2::new(t, b)).unwrap();
                let k = if second { e2 } else { e1 };
                f_conv(x1 - t, y2) * k
            },
            &[-6.0 * b, -b, 0.0, b, 6.0 * b],
            middle_abs,
            1e-7,
            MIDDLE_BUDGET,
        )
        .map(|r| r.value)
        .unwrap_or(f64::NAN)
    };

    // Integrated-by-parts form for rows near the target height; the layer
    // kernels become zeta (odd) and rho (even) and the derivative moves onto
    // the smooth convolution.
    let c_ibp = |y2: f64, second: bool| -> f64 {
        let b = x2 - y2;
        let folded = |t: f64| -> f64 {
            let num = if second {
                // -(1/2) [F'(x1-t) + F'(x1+t)] rho(t, b)
                -0.5 * (f_conv_d1(x1 - t, y2) + f_conv_d1(x1 + t, y2)) * b
            } else {
                // [F'(x1-t) - F'(x1+t)] zeta(t, b)
                (f_conv_d1(x1 - t, y2) - f_conv_d1(x1 + t, y2)) * t
            };
            num / (t * t + b * b)
        };
        let near = adaptive_with_breakpoints(
            &folded,
            &[0.0, b, 4.0 * b, (20.0 * b).max(4.0 * sa).max(2.0)],
            middle_abs,
            1e-7,
            MIDDLE_BUDGET,
        );
        let far_start = (20.0 * b).max(4.0 * sa).max(2.0);
        let far = adaptive_half_line(
            &folded,
            far_start,
            middle_abs,
            1e-7,
            MIDDLE_BUDGET,
        );
        match (near, far) {
            (Ok(n), Ok(f)) => n.value + f.value,
            _ => f64::NAN,
        }
    };

    // First term of w1: -2a F(x1, x2).
    let t0 = f_conv(x1, x2);
    if !t0.is_finite() {
        return Err(Error::QuadratureNoConvergence {
            evals: INNER_BUDGET,
            err_estimate: f64::NAN,
        });
    }

    let layered = |second: bool| -> Result<f64> {
        let lower = adaptive_with_breakpoints(
            |y2| c_direct(y2, second),
            &[0.0, 0.125 * x2, 0.25 * x2, 0.5 * x2],
            outer_abs,
            3e-6,
            OUTER_BUDGET,
        )?;
        let upper = adaptive_with_breakpoints(
            |y2| c_ibp(y2, second),
            &[
                0.5 * x2,
                0.75 * x2,
                0.9375 * x2,
                x2 * (1.0 - 1e-4),
                x2,
            ],
            outer_abs,
            3e-6,
            OUTER_BUDGET,
        )?;
        let v = lower.value + upper.value;
        if !v.is_finite() {
            return Err(Error::QuadratureNoConvergence {
                evals: OUTER_BUDGET,
                err_estimate: f64::NAN,
            });
        }
        Ok(v)
    };

    let t1 = layered(false)?;
    let t2 = layered(true)?;

    Ok(Point2::new(
        -2.0 * al * t0 + 2.0 * al / PI * t1,
        -4.0 * al / PI * t2,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensemble::VortexEnsemble;

    fn alpha(a: f64) -> AlphaParam {
        AlphaParam::new(a).unwrap()
    }

    fn single_vortex() -> VortexEnsemble {
        VortexEnsemble::single(Point2::new(0.0, 1.0), 1.0).unwrap()
    }

    #[test]
    fn trace_value_linearity_decay() {
        let a = alpha(1.0);
        let q = single_vortex();
        // -2 (1 - K1(1)) / (2 pi), frozen from the Bessel oracle.
        let g0 = boundary_trace(&q, &a, 0.0);
        assert!((g0 + 0.126_716_864_25).abs() < 1e-10);

        // Negating every strength negates the datum.
        let neg = VortexEnsemble::new(
            q.positions().to_vec(),
            q.strengths().iter().map(|g| -g).collect(),
        )
        .unwrap();
        for x1 in [-3.0, 0.2, 1.7] {
            let v = boundary_trace(&q, &a, x1);
            assert!((boundary_trace(&neg, &a, x1) + v).abs() < 1e-16);
            assert!(v <= 0.0);
        }

        assert!(boundary_trace(&q, &a, 100.0).abs() < 1e-4);
    }

    #[test]
    fn build_trace_l1_and_roundtrip() {
        let a = alpha(1.0);
        let q = single_vortex();
        let window = TraceWindow::new(50.0, 4096).unwrap();
        let tr = build_trace(&q, &a, window, 1e-3).unwrap();

        // ||g||_1 = 1 - e^{-y2/sqrt(alpha)} up to window truncation.
        let expect = 1.0 - (-1.0_f64).exp();
        assert!(
            (tr.l1_norm() - expect).abs() < 2e-3,
            "l1 = {}, expect {expect}",
            tr.l1_norm()
        );

        // Cached coefficients regenerate the samples.
        let mut buf: Vec<Complex64> = (0..tr.len())
            .map(|m| tr.fourier[m])
            .collect();
        FftPlanner::new()
            .plan_fft_inverse(tr.len())
            .process(&mut buf);
        for (k, c) in buf.iter().enumerate() {
            assert!((c.re / tr.len() as f64 - tr.values[k]).abs() < 1e-12);
        }

        // Doubling the window at fixed resolution barely moves the norm.
        let wide = build_trace(
            &q,
            &a,
            TraceWindow::new(100.0, 8192).unwrap(),
            1e-3,
        )
        .unwrap();
        assert!((wide.l1_norm() - tr.l1_norm()).abs() < 1e-3);
    }

    #[test]
    fn empty_trace_is_zero() {
        let a = alpha(1.0);
        let tr = build_trace(
            &VortexEnsemble::empty(),
            &a,
            TraceWindow::new(10.0, 256).unwrap(),
            1e-3,
        )
        .unwrap();
        assert!(tr.values().iter().all(|&v| v == 0.0));
        assert_eq!(tr.l1_norm(), 0.0);
    }

    #[test]
    fn undersized_window_is_rejected() {
        let a = alpha(1.0);
        let q = single_vortex();
        let err = build_trace(
            &q,
            &a,
            TraceWindow::new(3.0, 256).unwrap(),
            1e-3,
        );
        assert!(matches!(err, Err(Error::TailTooLarge { .. })));
    }

    #[test]
    fn profile_substitutions() {
        let a = alpha(1.0);
        let one = Complex64::new(1.0, 0.0);
        let s0 = FourierSymbolAlpha::new(0.0, &a);
        let (w1, w2) = ubdry_fourier_profile(one, &s0, 1.0, &a);
        assert!((w1.re - (-1.0_f64).exp()).abs() < 1e-15 && w1.im == 0.0);
        assert_eq!(w2, Complex64::new(0.0, 0.0));

        // Boundary condition at vanishing height, any mode.
        let s = FourierSymbolAlpha::new(3.7, &a);
        let (w1, w2) = ubdry_fourier_profile(one, &s, 1e-12, &a);
        assert!((w1 - one).norm() < 1e-9);
        assert!(w2.norm() < 1e-9);

        // Zero datum, zero mode.
        let (w1, w2) = ubdry_fourier_profile(
            Complex64::new(0.0, 0.0),
            &s,
            0.5,
            &a,
        );
        assert_eq!((w1, w2), (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)));
    }

    #[test]
    fn profile_is_divergence_free_modewise() {
        // i xi1 w1 + d/dx2 w2 = 0; check with central differences.
        let a = alpha(0.4);
        let ghat = Complex64::new(0.7, -0.3);
        for &xi1 in &[-4.0, -0.5, 0.9, 12.0] {
            let s = FourierSymbolAlpha::new(xi1, &a);
            for &x2 in &[0.3, 1.0, 2.5] {
                let d = 1e-4;
                let (w1, _) = ubdry_fourier_profile(ghat, &s, x2, &a);
                let (_, wp) = ubdry_fourier_profile(ghat, &s, x2 + d, &a);
                let (_, wm) = ubdry_fourier_profile(ghat, &s, x2 - d, &a);
                let div = Complex64::new(0.0, xi1) * w1 + (wp - wm) / (2.0 * d);
                assert!(
                    div.norm() < 1e-6 * ghat.norm(),
                    "xi1 = {xi1}, x2 = {x2}: {div}"
                );
            }
        }
    }

    #[test]
    fn field_reproduces_datum_on_wall() {
        let a = alpha(1.0);
        let q = single_vortex();
        let tr =
            build_trace(&q, &a, TraceWindow::new(60.0, 2048).unwrap(), 1e-3)
                .unwrap();
        let idxs: Vec<usize> =
            (0..tr.len()).step_by(97).filter(|&k| tr.node(k).abs() <= 0.5 * tr.half_width()).collect();
        let targets: Vec<Point2> =
            idxs.iter().map(|&k| Point2::new(tr.node(k), 0.0)).collect();
        let field = ubdry_field(&tr, &a, &targets).unwrap();
        for (i, &k) in idxs.iter().enumerate() {
            assert!(
                (field[i].x1 - tr.values()[k]).abs() < 1e-10,
                "node {k}: {} vs {}",
                field[i].x1,
                tr.values()[k]
            );
            assert!(field[i].x2.abs() < 1e-12);
        }
    }

    #[test]
    fn field_linearity_and_window_guard() {
        let a = alpha(0.5);
        let q = single_vortex();
        let tr =
            build_trace(&q, &a, TraceWindow::new(60.0, 2048).unwrap(), 1e-3)
                .unwrap();
        let targets = vec![Point2::new(0.4, 0.8), Point2::new(-2.0, 2.5)];
        let base = ubdry_field(&tr, &a, &targets).unwrap();
        let scaled = ubdry_field(&tr.scaled(3.0), &a, &targets).unwrap();
        for (b, s) in base.iter().zip(&scaled) {
            assert!((*s - *b * 3.0).norm() < 1e-12);
        }

        let outside = vec![Point2::new(31.0, 1.0)];
        assert!(matches!(
            ubdry_field(&tr, &a, &outside),
            Err(Error::TargetOutsideWindow { .. })
        ));
        let below = vec![Point2::new(0.0, -0.1)];
        assert!(ubdry_field(&tr, &a, &below).is_err());
    }

    #[test]
    fn oracle_empty_ensemble() {
        let a = alpha(1.0);
        assert_eq!(
            ubdry_quadrature_oracle(
                &VortexEnsemble::empty(),
                &a,
                Point2::new(0.3, 1.5)
            )
            .unwrap(),
            Point2::default()
        );
    }

    #[test]
    fn oracle_cross_validates_fourier_pipeline() {
        let a = alpha(1.0);
        let q = single_vortex();
        let tr =
            build_trace(&q, &a, TraceWindow::new(60.0, 4096).unwrap(), 1e-3)
                .unwrap();
        let x = Point2::new(0.3, 1.5);
        let fft = ubdry_field(&tr, &a, &[x]).unwrap()[0];
        let oracle = ubdry_quadrature_oracle(&q, &a, x).unwrap();
        let denom = fft.norm().max(1e-12);
        assert!(
            (fft - oracle).norm() / denom < 1e-4,
            "fft ({}, {}) vs oracle ({}, {})",
            fft.x1,
            fft.x2,
            oracle.x1,
            oracle.x2
        );
    }

    #[test]
    fn oracle_far_field_is_small() {
        let a = alpha(0.01);
        let q = single_vortex();
        let near = ubdry_quadrature_oracle(&q, &a, Point2::new(0.0, 1.0))
            .unwrap()
            .norm();
        let far = ubdry_quadrature_oracle(&q, &a, Point2::new(0.0, 10.0))
            .unwrap()
            .norm();
        assert!(far < near, "near {near}, far {far}");
        assert!(far < 1.0);
    }
}
