//! Adaptive quadrature on finite, half-infinite and whole-line intervals.
//!
//! Each panel is estimated with a 21-point Gauss-Legendre rule and its error
//! with the difference against the embedded 10-point rule; the worst panel is
//! bisected until the global estimate meets the tolerance. Node tables are
//! computed once at startup by Newton iteration on the Legendre polynomials,
//! so there are no transcribed coefficient tables to get wrong.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::sync::OnceLock;

use crate::error::{Error, Result};

const LOW_ORDER: usize = 10;
const HIGH_ORDER: usize = 21;

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct Quad {
    pub value: f64,
    pub err_estimate: f64,
    pub evals: usize,
}

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
fn gauss_rule(n: usize) -> Vec<(f64, f64)> {
    let mut rule = Vec::with_capacity(n);
    for i in 0..n {
        // Tricomi-style initial guess, then Newton on P_n.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75)
            / (n as f64 + 0.5))
            .cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Evaluate P_n(x) and P_n'(x) by the recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.push((x, w));
    }
    rule
}

fn rule_low() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| gauss_rule(LOW_ORDER))
}

fn rule_high() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| gauss_rule(HIGH_ORDER))
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.partial_cmp(&other.err).unwrap_or(Ordering::Equal)
    }
}

fn eval_panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut high = 0.0;
    for &(x, w) in rule_high() {
        high += w * f(mid + half * x);
    }
    high *= half;
    let mut low = 0.0;
    for &(x, w) in rule_low() {
        low += w * f(mid + half * x);
    }
    low *= half;
    let mut err = (high - low).abs();
    if !high.is_finite() {
        err = f64::INFINITY;
    }
    Panel {
        a,
        b,
        value: high,
        err,
    }
}

/// Integrate f on [a, b] to the requested tolerance.
pub fn adaptive<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_evals: usize,
) -> Result<Quad> {
    adaptive_with_breakpoints(f, &[a, b], abs_tol, rel_tol, max_evals)
}

/// Integrate over [min(pts), max(pts)] with forced initial subdivisions at
/// the interior breakpoints (known kernel peaks, formula switches, ...).
/// Breakpoints are sorted and deduplicated internally.
pub fn adaptive_with_breakpoints<F: Fn(f64) -> f64>(
    f: F,
    pts: &[f64],
    abs_tol: f64,
    rel_tol: f64,
    max_evals: usize,
) -> Result<Quad> {
    assert!(pts.len() >= 2, "need at least the two endpoints");
    let mut pts = pts.to_vec();
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut heap = BinaryHeap::new();
    let mut total = 0.0;
    let mut total_err = 0.0;
    let mut evals = 0usize;
    for w in pts.windows(2) {
        if w[1] <= w[0] {
            continue;
        }
        let p = eval_panel(&f, w[0], w[1]);
        evals += LOW_ORDER + HIGH_ORDER;
        total += p.value;
        total_err += p.err;
        heap.push(p);
    }

    loop {
        if total_err <= abs_tol.max(rel_tol * total.abs()) {
            return Ok(Quad {
                value: total,
                err_estimate: total_err,
                evals,
            });
        }
        let worst = match heap.pop() {
            Some(p) => p,
            None => {
                return Ok(Quad {
                    value: total,
                    err_estimate: total_err,
                    evals,
                })
            }
        };
        if evals >= max_evals {
            return Err(Error::QuadratureNoConvergence {
                evals,
                err_estimate: total_err,
            });
        }
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Interval at floating-point resolution; accept its estimate.
            continue;
        }
        total -= worst.value;
        total_err -= worst.err;
        let left = eval_panel(&f, worst.a, mid);
        let right = eval_panel(&f, mid, worst.b);
        evals += 2 * (LOW_ORDER + HIGH_ORDER);
        total += left.value + right.value;
        total_err += left.err + right.err;
        heap.push(left);
        heap.push(right);
    }
}

/// Integrate f on [a, +inf) via the rational map x = a + t/(1-t).
pub fn adaptive_half_line<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_evals: usize,
) -> Result<Quad> {
    adaptive(
        move |t| {
            let u = 1.0 - t;
            f(a + t / u) / (u * u)
        },
        0.0,
        1.0,
        abs_tol,
        rel_tol,
        max_evals,
    )
}

/// Integrate f over the whole real line with forced breakpoints.
///
/// The line is split as (-inf, p0], [p0, p1], ..., [pn, +inf) after sorting
/// the finite breakpoints.
pub fn adaptive_real_line<F: Fn(f64) -> f64 + Copy>(
    f: F,
    breakpoints: &[f64],
    abs_tol: f64,
    rel_tol: f64,
    max_evals: usize,
) -> Result<Quad> {
    assert!(!breakpoints.is_empty());
    let mut breakpoints = breakpoints.to_vec();
    breakpoints.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let first = breakpoints[0];
    let last = *breakpoints.last().unwrap();
    let half = 0.5 * abs_tol;
    let lower = adaptive_half_line(
        move |t| f(first - t),
        0.0,
        half,
        rel_tol,
        max_evals,
    )?;
    let upper = adaptive_half_line(f, last, half, rel_tol, max_evals)?;
    let mut value = lower.value + upper.value;
    let mut err = lower.err_estimate + upper.err_estimate;
    let mut evals = lower.evals + upper.evals;
    if breakpoints.len() >= 2 {
        let mid =
            adaptive_with_breakpoints(f, &breakpoints, half, rel_tol, max_evals)?;
        value += mid.value;
        err += mid.err_estimate;
        evals += mid.evals;
    }
    Ok(Quad {
        value,
        err_estimate: err,
        evals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        let q = adaptive(|x| 3.0 * x * x, 0.0, 2.0, 1e-14, 1e-14, 10_000)
            .unwrap();
        assert!((q.value - 8.0).abs() < 1e-13);
    }

    #[test]
    fn gaussian_on_real_line() {
        let q = adaptive_real_line(
            |x: f64| (-x * x).exp(),
            &[-1.0, 0.0, 1.0],
            1e-12,
            1e-12,
            100_000,
        )
        .unwrap();
        assert!((q.value - std::f64::consts::PI.sqrt()).abs() < 1e-11);
    }

    #[test]
    fn integrable_endpoint_singularity() {
        // int_0^1 log(1/x) dx = 1; nodes never touch the endpoint.
        let q =
            adaptive(|x: f64| -(x.ln()), 0.0, 1.0, 1e-12, 1e-12, 200_000)
                .unwrap();
        assert!((q.value - 1.0).abs() < 1e-10);
    }

    #[test]
    fn exponential_tail_on_half_line() {
        let q = adaptive_half_line(
            |x: f64| (-x).exp(),
            0.0,
            1e-13,
            1e-13,
            100_000,
        )
        .unwrap();
        assert!((q.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let res = adaptive(
            |x: f64| (1e6 * x).sin() / x.abs().sqrt(),
            0.0,
            1.0,
            1e-14,
            1e-14,
            200,
        );
        assert!(matches!(
            res,
            Err(Error::QuadratureNoConvergence { .. })
        ));
    }

    #[test]
    fn narrow_peak_with_breakpoint() {
        // Lorentzian of width 1e-4 centred at 0.3; the breakpoint finds it.
        let a = 1e-4;
        let q = adaptive_with_breakpoints(
            |x: f64| a / (a * a + (x - 0.3) * (x - 0.3)),
            &[0.0, 0.3, 1.0],
            1e-12,
            1e-12,
            200_000,
        )
        .unwrap();
        let exact = ((1.0 - 0.3) / a).atan() + (0.3 / a).atan();
        assert!((q.value - exact).abs() < 1e-10);
    }
}
