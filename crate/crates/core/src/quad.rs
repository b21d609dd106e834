//! Gauss–Legendre quadrature with adaptive interval bisection.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::{Error, Result};

/// An `n`-point Gauss–Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Builds the rule by Newton iteration on `P_n` from the Tricomi initial guesses.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("quadrature_points", "must be positive"));
        }
        let mut nodes = alloc::vec![0.0; n];
        let mut weights = alloc::vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = libm::cos(PI * (i as f64 + 0.75) / (nf + 0.5));
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-16 {
                    let (_, d) = legendre_with_derivative(n, x);
                    dp = d;
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Ok(Self { nodes, weights })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Applies the rule on `[a, b]`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum::<f64>()
            * half
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let nf = n as f64;
    (p1, nf * (x * p1 - p0) / (x * x - 1.0))
}

/// Result of [`integrate_adaptive`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    /// Sum over accepted subintervals of `|I(whole) - I(left) - I(right)|`.
    pub error_estimate: f64,
    pub intervals: usize,
}

const MAX_INTERVALS: usize = 20_000;

/// Integrates `f` over `[a, b]`, bisecting any subinterval on which the rule
/// and its two-half refinement disagree by more than its share of `tol`.
pub fn integrate_adaptive<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    rule: &GaussLegendre,
    tol: f64,
) -> Result<Quadrature> {
    if !(tol > 0.0) {
        return Err(Error::invalid("tolerance", "must be positive"));
    }
    if a == b {
        return Ok(Quadrature {
            value: 0.0,
            error_estimate: 0.0,
            intervals: 0,
        });
    }
    let width = b - a;
    let mut stack = alloc::vec![(a, b, rule.integrate(&f, a, b))];
    let mut value = 0.0;
    let mut error_estimate = 0.0;
    let mut intervals = 0usize;
    while let Some((lo, hi, whole)) = stack.pop() {
        let mid = 0.5 * (lo + hi);
        let left = rule.integrate(&f, lo, mid);
        let right = rule.integrate(&f, mid, hi);
        let diff = (whole - left - right).abs();
        let share = tol * ((hi - lo) / width).abs();
        // Subintervals narrower than a few ulps cannot be refined further.
        let unsplittable = mid <= lo || mid >= hi || (hi - lo).abs() <= 4.0 * f64::EPSILON * mid.abs();
        if diff <= share || unsplittable {
            value += left + right;
            error_estimate += diff;
            intervals += 1;
        } else {
            stack.push((mid, hi, right));
            stack.push((lo, mid, left));
        }
        if stack.len() + intervals > MAX_INTERVALS {
            return Err(Error::QuadratureFailed {
                estimate: error_estimate + diff,
            });
        }
    }
    if error_estimate > tol {
        return Err(Error::QuadratureFailed {
            estimate: error_estimate,
        });
    }
    Ok(Quadrature {
        value,
        error_estimate,
        intervals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_integrates_polynomials_exactly() {
        let rule = GaussLegendre::new(5).unwrap();
        // degree 9 is the exactness limit of a 5-point rule
        let v = rule.integrate(|x| x.powi(8) + 3.0 * x.powi(9), -1.0, 1.0);
        assert!((v - 2.0 / 9.0).abs() < 1e-15);
        let w: f64 = rule.weights().iter().sum();
        assert!((w - 2.0).abs() < 1e-15);
    }

    #[test]
    fn nodes_are_symmetric_and_sorted() {
        for n in [1, 2, 7, 20, 33] {
            let rule = GaussLegendre::new(n).unwrap();
            let xs = rule.nodes();
            for i in 0..n {
                assert!((xs[i] + xs[n - 1 - i]).abs() < 1e-15);
            }
            assert!(xs.windows(2).all(|p| p[0] < p[1]));
        }
    }

    #[test]
    fn adaptive_handles_sqrt_endpoint() {
        let rule = GaussLegendre::new(10).unwrap();
        let q = integrate_adaptive(libm::sqrt, 0.0, 1.0, &rule, 1e-12).unwrap();
        assert!((q.value - 2.0 / 3.0).abs() < 1e-12);
        assert!(q.intervals > 1);
    }

    #[test]
    fn zero_points_rejected() {
        assert!(GaussLegendre::new(0).is_err());
    }
}
