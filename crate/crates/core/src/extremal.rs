//! The extremal member `f̃(z) = z + Σ_{n≥2} 2/(n - β(n-1)) zⁿ` of `A_β`.
//!
//! Every series here is summed term by term until a certified tail bound drops
//! below [`ExtremalEvalConfig::tolerance`]. The coefficients `2/(n - β(n-1))`
//! are non-increasing in `n`, so after `N` terms the remainder of
//! `Σ cₙ rⁿ` is at most `c_{N+1} |r|^{N+1} / (1 - |r|)`.
//!
//! The boundary value `f̃(-1)` (an alternating series that converges only
//! like the alternating harmonic series) is computed instead from
//!
//! ```text
//! -f̃(-1) = ∫₀¹ (1 - t^{1-β}) / (1 + t^{1-β}) dt,
//! ```
//!
//! which follows from `2/((1-β)n + β) = 2∫₀¹ t^{(1-β)(n-1)} dt` and summing
//! the geometric series under the integral.

use crate::quad::{integrate_adaptive, GaussLegendre};
use crate::{Error, Result};

/// The filtration parameter `β ∈ [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct BetaParam(f64);

impl BetaParam {
    pub const ZERO: BetaParam = BetaParam(0.0);
    pub const ONE: BetaParam = BetaParam(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && (0.0..=1.0).contains(&value) {
            Ok(Self(value))
        } else {
            Err(Error::BetaOutOfRange(value))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn is_one(self) -> bool {
        self.0 == 1.0
    }

    /// Accepts only `β < 1`, the range on which `f̃(-1)` exists.
    pub fn require_below_one(self) -> Result<Self> {
        if self.is_one() {
            Err(Error::BetaIsOne)
        } else {
            Ok(self)
        }
    }
}

impl TryFrom<f64> for BetaParam {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Self::new(value)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalEvalConfig {
    /// Absolute truncation error target.
    pub tolerance: f64,
    /// Cap on the number of series terms.
    pub max_terms: usize,
    /// Points of the Gauss–Legendre rule used for `f̃(-1)`.
    pub quadrature_points: usize,
}

impl Default for ExtremalEvalConfig {
    fn default() -> Self {
        Self {
            tolerance: 1e-14,
            max_terms: 2_000_000,
            quadrature_points: 20,
        }
    }
}

impl ExtremalEvalConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0) {
            return Err(Error::invalid("tolerance", "must be positive"));
        }
        if self.max_terms < 8 {
            return Err(Error::invalid("max_terms", "must be at least 8"));
        }
        if self.quadrature_points == 0 {
            return Err(Error::invalid("quadrature_points", "must be positive"));
        }
        Ok(())
    }
}

/// Sharp bound on `|aₙ|` over `A_β`, attained by `f̃`: `1` for `n = 1`, else
/// `2/(n - β(n-1))`.
#[inline]
pub fn extremal_coeff(n: usize, beta: BetaParam) -> f64 {
    assert!(n >= 1, "coefficient index starts at 1");
    if n == 1 {
        1.0
    } else {
        let nf = n as f64;
        2.0 / (nf - beta.0 * (nf - 1.0))
    }
}

/// Upper bound on `Σ_{n>N} cₙ |r|ⁿ` for the extremal coefficients.
#[inline]
pub fn extremal_tail_bound(terms: usize, r_abs: f64, beta: BetaParam) -> f64 {
    debug_assert!((0.0..1.0).contains(&r_abs));
    extremal_coeff(terms + 1, beta) * libm::pow(r_abs, (terms + 1) as f64) / (1.0 - r_abs)
}

fn check_open_disk(r: f64) -> Result<()> {
    if r.is_finite() && r.abs() < 1.0 {
        Ok(())
    } else {
        Err(Error::invalid("r", "must satisfy |r| < 1"))
    }
}

/// `Σ_{n≥start} cₙ rⁿ` with certified truncation.
pub fn extremal_series_from(
    start: usize,
    r: f64,
    beta: BetaParam,
    cfg: &ExtremalEvalConfig,
) -> Result<f64> {
    cfg.validate()?;
    check_open_disk(r)?;
    let start = start.max(1);
    if r == 0.0 {
        return Ok(0.0);
    }
    let r_abs = r.abs();
    let mut power = libm::pow(r, start as f64);
    let mut sum = 0.0;
    let mut n = start;
    loop {
        sum += extremal_coeff(n, beta) * power;
        let tail = extremal_tail_bound(n, r_abs, beta);
        if tail <= cfg.tolerance {
            return Ok(sum);
        }
        if n - start + 1 >= cfg.max_terms {
            return Err(Error::NotConverged { terms: n, tail });
        }
        power *= r;
        n += 1;
    }
}

/// `f̃(r)` for real `|r| < 1`.
pub fn eval_extremal(r: f64, beta: BetaParam, cfg: &ExtremalEvalConfig) -> Result<f64> {
    extremal_series_from(1, r, beta, cfg)
}

/// `(-f̃(-r), f̃(r))`, the sharp lower and upper bounds on `|f(z)|` over `|z| = r`.
pub fn growth_envelope(r: f64, beta: BetaParam, cfg: &ExtremalEvalConfig) -> Result<(f64, f64)> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::invalid("r", "must lie in [0, 1)"));
    }
    let lower = -eval_extremal(-r, beta, cfg)?;
    let upper = eval_extremal(r, beta, cfg)?;
    Ok((lower, upper))
}

/// `f̃(-1) = -∫₀¹ (1 - t^{1-β})/(1 + t^{1-β}) dt` for `β < 1`.
///
/// With `s = 1 - β` the substitution `t = x^{1/s}` gives
/// `∫₀¹ (1-x)/(1+x) · x^{β/s} / s dx`. The piece over `[0, 1/4]` is summed from
/// `(1-x)/(1+x) = 1 + 2Σ(-1)ᵏxᵏ`, the rest is integrated adaptively, where the
/// integrand is analytic.
pub fn extremal_at_minus_one(beta: BetaParam, cfg: &ExtremalEvalConfig) -> Result<f64> {
    beta.require_below_one()?;
    cfg.validate()?;
    let s = 1.0 - beta.0;
    let alpha = beta.0 / s;
    const SPLIT: f64 = 0.25;

    // ∫₀^δ = δ^{1/s} [1 + Σ_{k≥1} 2(-1)ᵏ δᵏ / (1 + ks)]
    let scale = libm::exp(libm::log(SPLIT) / s);
    let mut head = 0.0;
    if scale > 0.0 {
        head = 1.0;
        let mut dk = 1.0;
        let mut sign = -1.0;
        let mut k = 1usize;
        loop {
            dk *= SPLIT;
            head += sign * 2.0 * dk / (1.0 + k as f64 * s);
            // alternating with decreasing terms: next term bounds the error
            if 2.0 * dk * SPLIT * scale <= 0.01 * cfg.tolerance {
                break;
            }
            sign = -sign;
            k += 1;
        }
        head *= scale;
    }

    let rule = GaussLegendre::new(cfg.quadrature_points)?;
    let integrand = |x: f64| (1.0 - x) / (1.0 + x) * libm::exp(alpha * libm::log(x)) / s;
    let body = integrate_adaptive(integrand, SPLIT, 1.0, &rule, cfg.tolerance)?;
    Ok(-(head + body.value))
}

/// Upper bound on `Σ_{n>N} n cₙ² x^n` (the extremal area series in `x = r²`).
///
/// For `n > N` the ratio of consecutive terms is at most `x (N+2)/(N+1)`; the
/// bound is infinite while that ratio is not below one.
pub fn area_tail_bound(terms: usize, x: f64, beta: BetaParam) -> f64 {
    let q = x * (terms + 2) as f64 / (terms + 1) as f64;
    if q >= 1.0 {
        return f64::INFINITY;
    }
    let n = terms + 1;
    let c = extremal_coeff(n, beta);
    n as f64 * c * c * libm::pow(x, n as f64) / (1.0 - q)
}

/// `r² + Σ_{n≥2} 4n/(n - β(n-1))² r^{2n}`, the sharp majorant of `S_r/π`.
///
/// `β = 1` is allowed: the terms become `4n r^{2n}` and still converge.
pub fn area_majorant(r: f64, beta: BetaParam, cfg: &ExtremalEvalConfig) -> Result<f64> {
    cfg.validate()?;
    if !(0.0..1.0).contains(&r) {
        return Err(Error::invalid("r", "must lie in [0, 1)"));
    }
    if r == 0.0 {
        return Ok(0.0);
    }
    let x = r * r;
    let mut power = x;
    let mut sum = 0.0;
    let mut n = 1usize;
    loop {
        let c = extremal_coeff(n, beta);
        sum += n as f64 * c * c * power;
        let tail = area_tail_bound(n, x, beta);
        if tail <= cfg.tolerance {
            return Ok(sum);
        }
        if n >= cfg.max_terms {
            return Err(Error::NotConverged { terms: n, tail });
        }
        power *= x;
        n += 1;
    }
}
