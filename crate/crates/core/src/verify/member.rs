use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;

use super::measure::{measure_to_caratheodory, HerglotzMeasure};
use crate::extremal::{
    area_tail_bound, eval_extremal, extremal_coeff, extremal_tail_bound, BetaParam, ExtremalEvalConfig,
};
use crate::radii::AreaFunctional;
use crate::series::{caratheodory_to_member, TruncatedSeries};
use crate::{Error, Result};

/// A member of `A_β` known through its first coefficients `a₁ = 1, …, a_K`.
///
/// Coefficients beyond `K` are unknown, but `|aₙ| ≤ 2/(n - β(n-1))` holds for
/// every member, so all sums below add the extremal tail as a certified upper
/// bound.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassMember {
    beta: BetaParam,
    c: TruncatedSeries,
    a: Vec<Complex64>,
}

impl ClassMember {
    pub fn from_caratheodory(c: TruncatedSeries, beta: BetaParam) -> Result<Self> {
        if c.order() < 2 {
            return Err(Error::invalid("order", "need at least c₁ and c₂"));
        }
        let a = caratheodory_to_member(&c, beta)?;
        Ok(Self { beta, c, a })
    }

    /// Member generated by `μ`, with coefficients up to `a_{order+1}`.
    pub fn from_measure(mu: &HerglotzMeasure, beta: BetaParam, order: usize) -> Result<Self> {
        Self::from_caratheodory(measure_to_caratheodory(mu, order), beta)
    }

    /// The extremal function `f̃` (point mass at `1`).
    pub fn extremal(beta: BetaParam, order: usize) -> Result<Self> {
        Self::from_measure(&HerglotzMeasure::point_mass(0.0), beta, order)
    }

    pub fn beta(&self) -> BetaParam {
        self.beta
    }

    pub fn caratheodory(&self) -> &TruncatedSeries {
        &self.c
    }

    /// Index of the last known coefficient.
    pub fn order(&self) -> usize {
        self.a.len()
    }

    /// `aₙ` for `1 ≤ n ≤ order()`.
    pub fn coeff(&self, n: usize) -> Complex64 {
        assert!(n >= 1 && n <= self.a.len(), "coefficient index out of range");
        self.a[n - 1]
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.a
    }

    /// Truncated `f(z)`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.a.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &an| acc * z + an) * z
    }

    /// Bound on `|f(z) - eval(z)|`.
    pub fn eval_tail_bound(&self, z_abs: f64) -> f64 {
        extremal_tail_bound(self.order(), z_abs, self.beta)
    }

    /// `β f(z)/z + (1-β) f'(z) = Σ aₙ (β + (1-β)n) z^{n-1}`, truncated.
    pub fn generator_value(&self, z: Complex64) -> Complex64 {
        let b = self.beta.value();
        self.a
            .iter()
            .enumerate()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, (k, &an)| {
                let n = (k + 1) as f64;
                acc * z + an * (b + (1.0 - b) * n)
            })
    }

    /// Upper bound on `Σ_{n≥start} |aₙ| rⁿ`; fails if the tail bound exceeds
    /// `tail_tol`.
    pub fn abs_sum_from(&self, start: usize, r: f64, tail_tol: f64) -> Result<f64> {
        check_radius(r)?;
        let start = start.max(1);
        let mut sum = 0.0;
        let mut power = libm::pow(r, start as f64);
        for n in start..=self.order() {
            sum += self.a[n - 1].norm() * power;
            power *= r;
        }
        let tail = extremal_tail_bound(self.order().max(start - 1), r, self.beta);
        certify(self.order(), tail, tail_tol)?;
        Ok(sum + tail)
    }

    /// Upper bound on `S_r/π = Σ n|aₙ|² r^{2n}`.
    pub fn area(&self, r: f64, tail_tol: f64) -> Result<f64> {
        check_radius(r)?;
        let x = r * r;
        let mut sum = 0.0;
        let mut power = 1.0;
        for (k, an) in self.a.iter().enumerate() {
            power *= x;
            sum += (k + 1) as f64 * an.norm_sqr() * power;
        }
        let tail = area_tail_bound(self.order(), x, self.beta);
        certify(self.order(), tail, tail_tol)?;
        Ok(sum + tail)
    }

    /// `|aₙ|` against the sharp bound, for `2 ≤ n ≤ n_max`.
    pub(crate) fn coefficient_pairs(&self, n_max: usize) -> impl Iterator<Item = (usize, f64, f64)> + '_ {
        (2..=n_max.min(self.order())).map(|n| (n, self.a[n - 1].norm(), extremal_coeff(n, self.beta)))
    }
}

fn check_radius(r: f64) -> Result<()> {
    if (0.0..1.0).contains(&r) {
        Ok(())
    } else {
        Err(Error::invalid("r", "must lie in [0, 1)"))
    }
}

fn certify(terms: usize, tail: f64, tail_tol: f64) -> Result<()> {
    if tail.is_finite() && tail <= tail_tol {
        Ok(())
    } else {
        Err(Error::NotConverged { terms, tail })
    }
}

/// Schwarz functions used for `ω_m` in the majorant sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchwarzMode {
    /// `ω_m(z) = z^m`, the extremal choice.
    Monomial,
    /// `ω_m(z) = z^m ψ(z)` with `ψ(z) = (z + 1/2)/(1 + z/2)`.
    Damped,
}

impl SchwarzMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SchwarzMode::Monomial => "monomial",
            SchwarzMode::Damped => "damped",
        }
    }

    fn factor(self, z: Complex64) -> Complex64 {
        match self {
            SchwarzMode::Monomial => Complex64::new(1.0, 0.0),
            SchwarzMode::Damped => (z + 0.5) / (z * 0.5 + 1.0),
        }
    }
}

/// Estimate used for `|f(ω_m(z))|` in the Rogosinski sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RogosinskiLead {
    /// The member's own truncated value plus its certified tail.
    Member,
    /// The growth bound `f̃(|ω_m(z)|)`, the estimate used to derive `G`.
    Growth,
}

/// Evaluation options shared by [`bohr_sum`] and [`rogosinski_sum`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumOptions {
    pub mode: SchwarzMode,
    /// Angles of the grid on `|z| = r` (the monomial Bohr sum is radial).
    pub angles: usize,
    /// Largest accepted truncation tail.
    pub tail_tolerance: f64,
    pub lead: RogosinskiLead,
}

impl Default for SumOptions {
    fn default() -> Self {
        Self {
            mode: SchwarzMode::Monomial,
            angles: 64,
            tail_tolerance: 1e-10,
            lead: RogosinskiLead::Member,
        }
    }
}

fn angle_grid(angles: usize) -> impl Iterator<Item = f64> {
    let k = angles.max(1);
    (0..k).map(move |j| TAU * j as f64 / k as f64)
}

/// Upper bound on `|ω_m(z)|^p + Σ_{n≥2} |aₙ||ω_n(z)| + F(S_r/π)` at `|z| = r`,
/// maximized over the angle grid (every `ω` uses the same mode).
pub fn bohr_sum<F: AreaFunctional>(
    member: &ClassMember,
    r: f64,
    m: u32,
    p: f64,
    functional: &F,
    opts: &SumOptions,
) -> Result<f64> {
    let body = member.abs_sum_from(2, r, opts.tail_tolerance)?;
    let area = functional.apply(member.area(r, opts.tail_tolerance)?);
    let grid: &mut dyn Iterator<Item = f64> = match opts.mode {
        // every term is radial for z^n
        SchwarzMode::Monomial => &mut core::iter::once(0.0),
        SchwarzMode::Damped => &mut angle_grid(opts.angles),
    };
    let mut best = f64::NEG_INFINITY;
    for theta in grid {
        let z = Complex64::from_polar(r, theta);
        let psi = opts.mode.factor(z).norm();
        let lead = libm::pow(libm::pow(r, m as f64) * psi, p);
        best = best.max(lead + psi * body + area);
    }
    Ok(best)
}

/// Upper bound on `|f(ω_m(z))|^p + Σ_{n≥N} |aₙ||ω_n(z)| + F(S_r/π)` at
/// `|z| = r`, maximized over the angle grid.
pub fn rogosinski_sum<F: AreaFunctional>(
    member: &ClassMember,
    r: f64,
    n_start: u32,
    m: u32,
    p: f64,
    functional: &F,
    opts: &SumOptions,
) -> Result<f64> {
    let body = member.abs_sum_from(n_start as usize, r, opts.tail_tolerance)?;
    let area = functional.apply(member.area(r, opts.tail_tolerance)?);
    let eval_cfg = ExtremalEvalConfig::default();
    let mut best = f64::NEG_INFINITY;
    for theta in angle_grid(opts.angles) {
        let z = Complex64::from_polar(r, theta);
        let factor = opts.mode.factor(z);
        let w = z.powu(m) * factor;
        let w_abs = w.norm();
        let modulus = match opts.lead {
            RogosinskiLead::Member => {
                let tail = member.eval_tail_bound(w_abs);
                certify(member.order(), tail, opts.tail_tolerance)?;
                member.eval(w).norm() + tail
            }
            RogosinskiLead::Growth => eval_extremal(w_abs, member.beta, &eval_cfg)?,
        };
        best = best.max(libm::pow(modulus, p) + factor.norm() * body + area);
    }
    Ok(best)
}
