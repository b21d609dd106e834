//! Bracketing root finder: Illinois-weighted false position interleaved with
//! bisection. The sign-change bracket is kept at every step.

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootResult {
    /// Midpoint of the final bracket.
    pub root: f64,
    /// `(lo, hi)` with `f(lo) < 0 < f(hi)` and `hi - lo ≤ tol`.
    pub bracket: (f64, f64),
    /// `f(root)`.
    pub residual: f64,
    pub iterations: usize,
}

pub const DEFAULT_MAX_ITER: usize = 500;

/// Shrinks `[lo, hi]` with `f(lo) < 0 < f(hi)` to width `≤ tol`.
///
/// `f_lo` and `f_hi` are the already known endpoint values.
pub fn solve_bracketed<F>(
    mut f: F,
    mut lo: f64,
    mut hi: f64,
    mut f_lo: f64,
    mut f_hi: f64,
    tol: f64,
    max_iter: usize,
) -> Result<RootResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(tol > 0.0) {
        return Err(Error::invalid("tol", "must be positive"));
    }
    if !(lo < hi) {
        return Err(Error::invalid("bracket", "requires lo < hi"));
    }
    if !(f_lo < 0.0 && f_hi > 0.0) {
        return Err(Error::NoSignChange { hi });
    }

    // Illinois weights applied to the retained endpoint.
    let mut w_lo = 1.0;
    let mut w_hi = 1.0;
    let mut last_side = 0i8;
    let mut iterations = 0;
    while hi - lo > tol {
        if iterations >= max_iter {
            return Err(Error::RootNotConverged { iterations });
        }
        iterations += 1;
        let width = hi - lo;
        let x = if iterations % 3 == 0 {
            0.5 * (lo + hi)
        } else {
            let (gl, gh) = (f_lo * w_lo, f_hi * w_hi);
            let guard = (0.25 * tol).min(0.25 * width);
            (lo - gl * width / (gh - gl)).clamp(lo + guard, hi - guard)
        };
        let fx = f(x)?;
        if fx < 0.0 {
            lo = x;
            f_lo = fx;
            w_lo = 1.0;
            if last_side == -1 {
                w_hi *= 0.5;
            }
            last_side = -1;
        } else if fx > 0.0 {
            hi = x;
            f_hi = fx;
            w_hi = 1.0;
            if last_side == 1 {
                w_lo *= 0.5;
            }
            last_side = 1;
        } else {
            // exact zero: certify a bracket of width tol around it
            let (a, b) = (x - 0.5 * tol, x + 0.5 * tol);
            let (fa, fb) = (f(a)?, f(b)?);
            if fa < 0.0 && fb > 0.0 {
                lo = a;
                hi = b;
            } else {
                lo = x;
                hi = x;
            }
            break;
        }
    }
    let root = 0.5 * (lo + hi);
    let residual = f(root)?;
    Ok(RootResult {
        root,
        bracket: (lo, hi),
        residual,
        iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_cube_root_of_two() {
        let r = solve_bracketed(|x| Ok(x * x * x - 2.0), 0.0, 2.0, -2.0, 6.0, 1e-12, 500).unwrap();
        assert!((r.root - libm::cbrt(2.0)).abs() < 1e-12);
        assert!(r.bracket.1 - r.bracket.0 <= 1e-12);
        assert!(r.bracket.0 < r.root && r.root < r.bracket.1);
    }

    #[test]
    fn flat_then_steep_function() {
        // false position alone stalls on this shape
        let f = |x: f64| Ok(libm::exp(20.0 * x) - 2.0);
        let r = solve_bracketed(f, 0.0, 1.0, -1.0, libm::exp(20.0) - 2.0, 1e-13, 500).unwrap();
        assert!((r.root - libm::log(2.0) / 20.0).abs() < 1e-13);
        assert!(r.iterations < 120);
    }

    #[test]
    fn rejects_missing_sign_change() {
        assert!(solve_bracketed(|x| Ok(x + 1.0), 0.0, 1.0, 1.0, 2.0, 1e-10, 100).is_err());
        assert!(solve_bracketed(Ok, 0.5, 0.5, -1.0, 1.0, 1e-10, 100).is_err());
        assert!(solve_bracketed(Ok, -1.0, 1.0, -1.0, 1.0, 0.0, 100).is_err());
    }

    #[test]
    fn propagates_evaluation_errors() {
        let r = solve_bracketed(|_| Err(Error::BetaIsOne), -1.0, 1.0, -1.0, 1.0, 1e-10, 100);
        assert_eq!(r, Err(Error::BetaIsOne));
    }
}
