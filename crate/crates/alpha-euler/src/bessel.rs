//! Modified Bessel functions of the second kind, orders 0 and 1.
//!
//! Only `K0`/`K1` on the positive real axis are needed here; they are
//! evaluated by the ascending series for small argument and by Steed's
//! continued fraction (Thompson & Barnett, J. Comput. Phys. 64, 1986) for
//! large argument. Both branches deliver close to machine precision, well
//! inside the 1e-10 relative target certified by the quadrature oracle in
//! the tests.

use crate::error::{Error, Result};

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const SERIES_CUTOFF: f64 = 2.0;
const MAX_ITER: usize = 500;

/// K0(r) and K1(r) for r > 0.
///
/// Underflows to zero for r beyond roughly 700.
pub fn bessel_k0_k1(r: f64) -> Result<(f64, f64)> {
    if !r.is_finite() || r <= 0.0 {
        return Err(Error::Domain(format!(
            "bessel_k0_k1 requires finite r > 0, got {r}"
        )));
    }
    if r <= SERIES_CUTOFF {
        Ok(k0_k1_series(r))
    } else {
        Ok(k0_k1_steed(r))
    }
}

/// The combination 1 - r*K1(r), which appears in every smoothed kernel.
///
/// Computed cancellation-free: for small r, r*K1(r) = 1 - O(r^2 log r) and
/// the naive subtraction loses most significant digits, so below the series
/// cutoff the `1` is cancelled algebraically against the leading term of
/// the ascending series.
pub fn one_minus_r_k1(r: f64) -> Result<f64> {
    if !r.is_finite() || r < 0.0 {
        return Err(Error::Domain(format!(
            "one_minus_r_k1 requires finite r >= 0, got {r}"
        )));
    }
    if r == 0.0 {
        return Ok(0.0);
    }
    if r > SERIES_CUTOFF {
        let (_, k1) = k0_k1_steed(r);
        return Ok(1.0 - r * k1);
    }
    // r*K1(r) = 1 + r*ln(r/2)*I1(r) - (r^2/4) * sum_k c_k (r^2/4)^k / (k!(k+1)!)
    // with c_k = H_k + H_{k+1} - 2*gamma, so
    // 1 - r*K1(r) = -r*ln(r/2)*I1(r) + (r^2/4) * sum.
    let q = 0.25 * r * r;
    let mut i1 = 0.0; // I1(r)/(r/2): sum of q^k/(k!(k+1)!)
    let mut sum = 0.0;
    let mut term = 1.0; // q^k / (k!(k+1)!)
    let mut h_k = 0.0;
    let mut h_k1 = 1.0;
    for k in 0..MAX_ITER {
        i1 += term;
        sum += term * (h_k + h_k1 - 2.0 * EULER_GAMMA);
        if term < 1e-18 * (1.0 + sum.abs()) && k > 2 {
            break;
        }
        let kf = (k + 1) as f64;
        term *= q / (kf * (kf + 1.0));
        h_k += 1.0 / kf;
        h_k1 += 1.0 / (kf + 1.0);
    }
    let i1 = 0.5 * r * i1;
    Ok(-r * (0.5 * r).ln() * i1 + q * sum)
}

/// Ascending series, accurate for r <= 2.
fn k0_k1_series(r: f64) -> (f64, f64) {
    let q = 0.25 * r * r;
    let log_half_r = (0.5 * r).ln();

    // I0 and the K0 companion sum.
    let mut i0 = 0.0;
    let mut k0_sum = 0.0;
    let mut term = 1.0; // q^k / (k!)^2
    let mut h_k = 0.0;
    for k in 0..MAX_ITER {
        i0 += term;
        k0_sum += term * h_k;
        if term < 1e-18 * i0 && k > 2 {
            break;
        }
        let kf = (k + 1) as f64;
        term *= q / (kf * kf);
        h_k += 1.0 / kf;
    }
    let k0 = -(log_half_r + EULER_GAMMA) * i0 + k0_sum;

    // I1 and the K1 companion sum.
    let mut i1_sum = 0.0;
    let mut k1_sum = 0.0;
    let mut term = 1.0; // q^k / (k!(k+1)!)
    let mut h_k = 0.0;
    let mut h_k1 = 1.0;
    for k in 0..MAX_ITER {
        i1_sum += term;
        k1_sum += term * (h_k + h_k1 - 2.0 * EULER_GAMMA);
        if term < 1e-18 * i1_sum && k > 2 {
            break;
        }
        let kf = (k + 1) as f64;
        term *= q / (kf * (kf + 1.0));
        h_k += 1.0 / kf;
        h_k1 += 1.0 / (kf + 1.0);
    }
    let i1 = 0.5 * r * i1_sum;
    let k1 = 1.0 / r + log_half_r * i1 - 0.25 * r * k1_sum;

    (k0, k1)
}

/// Steed's continued fraction for r > 2, returning (K0, K1).
fn k0_k1_steed(x: f64) -> (f64, f64) {
    use std::f64::consts::PI;

    let mut a = -0.25;
    let mut b = 2.0 * (x + 1.0);
    let mut d = 1.0 / b;
    let mut delta = d;
    let mut f = d;
    let mut prev = 0.0;
    let mut cur = 1.0;
    let mut q = 0.25;
    let mut c = 0.25;
    let mut s = 1.0 + q * delta;

    for k in 2..MAX_ITER {
        let kf = k as f64;
        a -= 2.0 * (kf - 1.0);
        b += 2.0;
        d = 1.0 / (a * d + b);
        delta *= b * d - 1.0;
        f += delta;

        let t = (prev - (b - 2.0) * cur) / a;
        prev = cur;
        cur = t;
        c *= -a / kf;
        q += c * t;
        s += q * delta;

        if (q * delta).abs() < s.abs() * f64::EPSILON * 0.5 {
            break;
        }
    }

    let k0 = (PI / (2.0 * x)).sqrt() * (-x).exp() / s;
    let k1 = k0 * (0.5 + x - 0.25 * f) / x;
    (k0, k1)
}
