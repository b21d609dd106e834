//! Sharp Bohr and Bohr–Rogosinski radii of `A_β`.
//!
//! With `A(r) = r² + Σ_{n≥2} 4n r^{2n}/(n - β(n-1))²` (the majorant of
//! `S_r/π`) and a monotone area functional `F` with `F(0) = 0`:
//!
//! ```text
//! Bohr–Schwarz:    H(r) = r^{pm} + f̃(r) - r + F(A(r)) + f̃(-1)
//! Bohr–Rogosinski: G(r) = f̃(r^m)^p + f̃(r) - f̂_N(r) + f̃(-1) + F(A(r))
//! ```
//!
//! where `f̂_N` is the partial sum of `f̃` through `z^{N-1}`. Both equations
//! are strictly increasing on `(0, 1)`, negative at `0⁺` (the value there is
//! `f̃(-1) < 0`) and tend to `+∞` at `1⁻`, so each has exactly one root.

use alloc::vec::Vec;

use crate::extremal::{
    area_majorant, eval_extremal, extremal_at_minus_one, extremal_coeff, extremal_series_from,
    BetaParam, ExtremalEvalConfig,
};
pub use crate::roots::RootResult;
use crate::roots::{solve_bracketed, DEFAULT_MAX_ITER};
use crate::{Error, Result};

/// Default bracket width for [`solve_radius`].
pub const DEFAULT_TOL: f64 = 1e-10;

/// Radii are never searched at or beyond this point.
pub const UPPER_CAP: f64 = 1.0 - 1e-8;

/// A monotone non-decreasing map `F: [0, ∞) → [0, ∞)` with `F(0) = 0`,
/// applied to the area functional.
///
/// Monotonicity is the implementor's obligation; [`MonotoneFunctional::new`]
/// only spot-checks it.
pub trait AreaFunctional {
    fn apply(&self, w: f64) -> f64;
}

/// `P_k(w) = λ₁w + λ₂w² + … + λ_k w^k` with all `λⱼ ≥ 0`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct AreaPolynomial {
    lambdas: Vec<f64>,
}

impl AreaPolynomial {
    pub fn new(lambdas: Vec<f64>) -> Result<Self> {
        if lambdas.iter().any(|l| !(l.is_finite() && *l >= 0.0)) {
            return Err(Error::invalid("lambdas", "coefficients must be finite and nonnegative"));
        }
        Ok(Self { lambdas })
    }

    /// `F ≡ 0`.
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    pub fn is_zero(&self) -> bool {
        self.lambdas.iter().all(|&l| l == 0.0)
    }
}

impl AreaFunctional for AreaPolynomial {
    fn apply(&self, w: f64) -> f64 {
        w * self.lambdas.iter().rev().fold(0.0, |acc, &l| acc * w + l)
    }
}

impl<T: AreaFunctional + ?Sized> AreaFunctional for &T {
    fn apply(&self, w: f64) -> f64 {
        (**self).apply(w)
    }
}

/// A caller-supplied monotone functional.
#[derive(Debug, Clone)]
pub struct MonotoneFunctional<F> {
    f: F,
}

impl<F: Fn(f64) -> f64> MonotoneFunctional<F> {
    /// Accepts `f` if `f(0) = 0` and `f` is finite, nonnegative and
    /// non-decreasing on `samples` equally spaced points of `[0, w_max]`.
    pub fn new(f: F, w_max: f64, samples: usize) -> Result<Self> {
        if f(0.0) != 0.0 {
            return Err(Error::invalid("F", "must satisfy F(0) = 0"));
        }
        let samples = samples.max(2);
        let mut prev = 0.0;
        for i in 1..samples {
            let v = f(w_max * i as f64 / (samples - 1) as f64);
            if !(v.is_finite() && v >= prev) {
                return Err(Error::invalid("F", "must be finite, nonnegative and non-decreasing"));
            }
            prev = v;
        }
        Ok(Self { f })
    }
}

impl<F: Fn(f64) -> f64> AreaFunctional for MonotoneFunctional<F> {
    fn apply(&self, w: f64) -> f64 {
        (self.f)(w)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    BohrSchwarz,
    BohrRogosinski,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::BohrSchwarz => "bohr",
            Variant::BohrRogosinski => "rogosinski",
        }
    }
}

/// One radius equation: variant, `β < 1`, `m ≥ 1`, `p > 0`, `N ≥ 1`
/// (Rogosinski only) and the area functional.
#[derive(Debug, Clone, PartialEq)]
pub struct RadiusProblem<F = AreaPolynomial> {
    variant: Variant,
    beta: BetaParam,
    m: u32,
    p: f64,
    n: u32,
    functional: F,
}

impl<F: AreaFunctional> RadiusProblem<F> {
    pub fn bohr(beta: BetaParam, m: u32, p: f64, functional: F) -> Result<Self> {
        Self::validated(Variant::BohrSchwarz, beta, m, p, 1, functional)
    }

    pub fn rogosinski(beta: BetaParam, n: u32, m: u32, p: f64, functional: F) -> Result<Self> {
        Self::validated(Variant::BohrRogosinski, beta, m, p, n, functional)
    }

    fn validated(variant: Variant, beta: BetaParam, m: u32, p: f64, n: u32, functional: F) -> Result<Self> {
        beta.require_below_one()?;
        if m == 0 {
            return Err(Error::invalid("m", "must be at least 1"));
        }
        if !(p > 0.0 && p.is_finite()) {
            return Err(Error::invalid("p", "must be positive"));
        }
        if n == 0 {
            return Err(Error::invalid("N", "must be at least 1"));
        }
        Ok(Self {
            variant,
            beta,
            m,
            p,
            n,
            functional,
        })
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn beta(&self) -> BetaParam {
        self.beta
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// Starting index `N` of the Rogosinski tail (1 for Bohr problems).
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn functional(&self) -> &F {
        &self.functional
    }

    /// Binds the problem to an evaluation config, computing `f̃(-1)` once.
    pub fn equation(&self, cfg: ExtremalEvalConfig) -> Result<RadiusEquation<'_, F>> {
        let boundary = extremal_at_minus_one(self.beta, &cfg)?;
        Ok(RadiusEquation {
            problem: self,
            cfg,
            boundary,
        })
    }
}

/// A radius equation ready for repeated evaluation.
#[derive(Debug, Clone)]
pub struct RadiusEquation<'a, F> {
    problem: &'a RadiusProblem<F>,
    cfg: ExtremalEvalConfig,
    boundary: f64,
}

impl<F: AreaFunctional> RadiusEquation<'_, F> {
    /// `f̃(-1)`; `-f̃(-1)` is the class-wide lower bound on `d(0, ∂f(𝔻))`.
    pub fn boundary_value(&self) -> f64 {
        self.boundary
    }

    pub fn problem(&self) -> &RadiusProblem<F> {
        self.problem
    }

    pub fn config(&self) -> &ExtremalEvalConfig {
        &self.cfg
    }

    /// `H(r)` or `G(r)` depending on the variant.
    pub fn eval(&self, r: f64) -> Result<f64> {
        if !(r > 0.0 && r < 1.0) {
            return Err(Error::invalid("r", "must lie in (0, 1)"));
        }
        let pb = self.problem;
        let area = pb.functional.apply(area_majorant(r, pb.beta, &self.cfg)?);
        let lead = match pb.variant {
            Variant::BohrSchwarz => libm::pow(r, pb.p * pb.m as f64),
            Variant::BohrRogosinski => {
                let inner = eval_extremal(libm::pow(r, pb.m as f64), pb.beta, &self.cfg)?;
                libm::pow(inner, pb.p)
            }
        };
        let start = match pb.variant {
            Variant::BohrSchwarz => 2,
            Variant::BohrRogosinski => pb.n as usize,
        };
        let tail = extremal_series_from(start, r, pb.beta, &self.cfg)?;
        Ok(lead + tail + area + self.boundary)
    }

    /// The radius: the unique root in `(0, 1)`.
    pub fn solve(&self, tol: f64) -> Result<RootResult> {
        if !(tol > 0.0) {
            return Err(Error::invalid("tol", "must be positive"));
        }
        let lo = tol.min(0.5);
        let f_lo = self.eval(lo)?;
        if f_lo >= 0.0 {
            // the root sits below the smallest admissible bracket end
            return Err(Error::NoSignChange { hi: lo });
        }
        let (mut lo, mut f_lo) = (lo, f_lo);
        let mut hi = 0.5f64.max(lo + tol);
        let mut f_hi = self.eval(hi)?;
        while f_hi <= 0.0 {
            if f_hi < 0.0 {
                lo = hi;
                f_lo = f_hi;
            }
            if hi >= UPPER_CAP {
                return Err(Error::NoSignChange { hi });
            }
            hi = (1.0 - 0.25 * (1.0 - hi)).min(UPPER_CAP);
            f_hi = self.eval(hi)?;
        }
        solve_bracketed(|r| self.eval(r), lo, hi, f_lo, f_hi, tol, DEFAULT_MAX_ITER)
    }
}

/// `H(r)` of the Bohr–Schwarz problem.
pub fn equation_bohr<F: AreaFunctional>(
    problem: &RadiusProblem<F>,
    r: f64,
    cfg: &ExtremalEvalConfig,
) -> Result<f64> {
    if problem.variant != Variant::BohrSchwarz {
        return Err(Error::invalid("problem", "expected a Bohr-Schwarz problem"));
    }
    problem.equation(*cfg)?.eval(r)
}

/// `G(r)` of the Bohr–Rogosinski problem.
pub fn equation_rogosinski<F: AreaFunctional>(
    problem: &RadiusProblem<F>,
    r: f64,
    cfg: &ExtremalEvalConfig,
) -> Result<f64> {
    if problem.variant != Variant::BohrRogosinski {
        return Err(Error::invalid("problem", "expected a Bohr-Rogosinski problem"));
    }
    problem.equation(*cfg)?.eval(r)
}

/// `f̂_N(r)`: `0` for `N = 1`, `r` for `N = 2`, `r + Σ_{n=2}^{N-1} cₙ rⁿ` above.
pub fn hat_f(n: u32, beta: BetaParam, r: f64) -> f64 {
    let mut sum = 0.0;
    let mut power = 1.0;
    for k in 1..n as usize {
        power *= r;
        sum += extremal_coeff(k, beta) * power;
    }
    sum
}

pub fn solve_radius<F: AreaFunctional>(
    problem: &RadiusProblem<F>,
    tol: f64,
    cfg: &ExtremalEvalConfig,
) -> Result<RootResult> {
    problem.equation(*cfg)?.solve(tol)
}

/// Baseline radius with `p = 1` and `F ≡ 0`: the root of
/// `r^m + f̃(r) - r + f̃(-1) = 0`.
pub fn baseline_radius(beta: BetaParam, m: u32, tol: f64, cfg: &ExtremalEvalConfig) -> Result<RootResult> {
    solve_radius(&RadiusProblem::bohr(beta, m, 1.0, AreaPolynomial::zero())?, tol, cfg)
}

/// Baseline Bohr–Rogosinski radius with `p = 1` and `F ≡ 0`.
pub fn baseline_rogosinski_radius(
    beta: BetaParam,
    n: u32,
    m: u32,
    tol: f64,
    cfg: &ExtremalEvalConfig,
) -> Result<RootResult> {
    solve_radius(&RadiusProblem::rogosinski(beta, n, m, 1.0, AreaPolynomial::zero())?, tol, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cfg() -> ExtremalEvalConfig {
        ExtremalEvalConfig::default()
    }

    #[test]
    fn polynomial_evaluation() {
        let p = AreaPolynomial::new(vec![0.5, 0.0, 2.0]).unwrap();
        assert!((p.apply(2.0) - (1.0 + 16.0)).abs() < 1e-15);
        assert_eq!(AreaPolynomial::zero().apply(3.0), 0.0);
        assert!(AreaPolynomial::new(vec![-1.0]).is_err());
        assert!(AreaPolynomial::new(vec![f64::NAN]).is_err());
    }

    #[test]
    fn monotone_functional_spot_check() {
        assert!(MonotoneFunctional::new(|w: f64| libm::sqrt(w), 10.0, 100).is_ok());
        assert!(MonotoneFunctional::new(|w: f64| libm::sin(w), 10.0, 100).is_err());
        assert!(MonotoneFunctional::new(|w: f64| w + 1.0, 10.0, 100).is_err());
    }

    #[test]
    fn problem_validation() {
        let b = BetaParam::new(0.3).unwrap();
        let z = AreaPolynomial::zero;
        assert_eq!(RadiusProblem::bohr(BetaParam::ONE, 1, 1.0, z()), Err(Error::BetaIsOne));
        assert!(RadiusProblem::bohr(b, 0, 1.0, z()).is_err());
        assert!(RadiusProblem::bohr(b, 1, 0.0, z()).is_err());
        assert!(RadiusProblem::rogosinski(b, 0, 1, 1.0, z()).is_err());
    }

    #[test]
    fn hat_f_branches() {
        let b = BetaParam::ZERO;
        assert_eq!(hat_f(1, b, 0.7), 0.0);
        assert_eq!(hat_f(2, b, 0.4), 0.4);
        assert!((hat_f(4, b, 0.5) - (0.5 + 0.25 + 0.125 * 2.0 / 3.0)).abs() < 1e-15);
        let b = BetaParam::new(0.5).unwrap();
        assert!((hat_f(3, b, 0.3) - (0.3 + 4.0 / 3.0 * 0.09)).abs() < 1e-15);
    }

    #[test]
    fn wrong_variant_rejected() {
        let b = BetaParam::new(0.3).unwrap();
        let p = RadiusProblem::bohr(b, 1, 1.0, AreaPolynomial::zero()).unwrap();
        assert!(equation_rogosinski(&p, 0.2, &cfg()).is_err());
        let p = RadiusProblem::rogosinski(b, 2, 1, 1.0, AreaPolynomial::zero()).unwrap();
        assert!(equation_bohr(&p, 0.2, &cfg()).is_err());
    }

    #[test]
    fn equation_domain() {
        let p = RadiusProblem::bohr(BetaParam::ZERO, 1, 1.0, AreaPolynomial::zero()).unwrap();
        let eq = p.equation(cfg()).unwrap();
        assert!(eq.eval(0.0).is_err());
        assert!(eq.eval(1.0).is_err());
    }
}
