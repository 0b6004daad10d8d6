//! Pairwise summation helpers. Kernel sums accumulate terms in ascending
//! strength order and reduce pairwise so results are reproducible and the
//! rounding error grows like log(n) rather than n.

use crate::kernels::Point2;

pub(crate) fn pairwise_f64(terms: &mut Vec<f64>) -> f64 {
    pairwise_by(terms, 0.0, |a, b| a + b)
}

pub(crate) fn pairwise_point2(terms: &mut Vec<Point2>) -> Point2 {
    pairwise_by(terms, Point2::default(), |a, b| a + b)
}

fn pairwise_by<T: Copy>(terms: &mut Vec<T>, zero: T, add: fn(T, T) -> T) -> T {
    if terms.is_empty() {
        return zero;
    }
    let mut n = terms.len();
    while n > 1 {
        let half = n / 2;
        for i in 0..half {
            terms[i] = add(terms[2 * i], terms[2 * i + 1]);
        }
        if n % 2 == 1 {
            terms[half] = terms[n - 1];
            n = half + 1;
        } else {
            n = half;
        }
    }
    terms[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sums_match_naive_on_small_inputs() {
        for n in 0..20 {
            let mut v: Vec<f64> = (0..n).map(|i| (i as f64) * 0.1 + 1.0).collect();
            let naive: f64 = v.iter().sum();
            let pw = pairwise_f64(&mut v);
            assert!((pw - naive).abs() < 1e-12);
        }
    }
}
