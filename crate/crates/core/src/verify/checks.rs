use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;

use super::measure::{inverse_log_lower_parameter, log_lower_parameter};
use super::member::{bohr_sum, rogosinski_sum, ClassMember, RogosinskiLead, SchwarzMode, SumOptions};
use super::{BoundReport, InequalityId, DEFAULT_SLACK};
use crate::bounds::{fekete_szego_bound, inverse_log_coeffs, inverse_log_diff_bounds, log_coeffs, log_diff_bounds};
use crate::extremal::BetaParam;
use crate::radii::{AreaFunctional, RadiusEquation, Variant};
use crate::series::TruncatedSeries;
use crate::{Error, Result};

/// Settings shared by all checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckConfig {
    /// A check passes when `rhs - lhs ≥ -slack`.
    pub slack: f64,
    pub sums: SumOptions,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            slack: DEFAULT_SLACK,
            sums: SumOptions {
                lead: RogosinskiLead::Growth,
                ..SumOptions::default()
            },
        }
    }
}

impl CheckConfig {
    pub fn with_mode(mut self, mode: SchwarzMode) -> Self {
        self.sums.mode = mode;
        self
    }
}

/// Compares the Bohr (or Rogosinski) majorant of `member` at `|z| = at`
/// against `-f̃(-1)`, the class-wide lower bound on `d(0, ∂f(𝔻))`.
///
/// In the Rogosinski variant `|f(ω_m(z))|` is estimated as configured by
/// `cfg.sums.lead`.
pub fn check_bohr<F: AreaFunctional>(
    member: &ClassMember,
    equation: &RadiusEquation<'_, F>,
    at: f64,
    cfg: &CheckConfig,
) -> Result<BoundReport> {
    let problem = equation.problem();
    if problem.beta() != member.beta() {
        return Err(Error::invalid("member", "β differs from the problem's β"));
    }
    if !(at > 0.0 && at < 1.0) {
        return Err(Error::invalid("at", "must lie in (0, 1)"));
    }
    let functional = problem.functional();
    let (id, lhs) = match problem.variant() {
        Variant::BohrSchwarz => (
            InequalityId::BohrSchwarz,
            bohr_sum(member, at, problem.m(), problem.p(), functional, &cfg.sums)?,
        ),
        Variant::BohrRogosinski => (
            InequalityId::BohrRogosinski,
            rogosinski_sum(member, at, problem.n(), problem.m(), problem.p(), functional, &cfg.sums)?,
        ),
    };
    let witness = format!(
        "beta={} r={} m={} p={} N={} mode={}",
        problem.beta().value(),
        at,
        problem.m(),
        problem.p(),
        problem.n(),
        cfg.sums.mode.as_str()
    );
    Ok(BoundReport::new(id, lhs, -equation.boundary_value(), cfg.slack, witness))
}

/// `|aₙ| ≤ 2/(n - β(n-1))` for `2 ≤ n ≤ n_max`.
pub fn check_coefficient_bounds(member: &ClassMember, n_max: usize, slack: f64) -> Result<Vec<BoundReport>> {
    if n_max > member.order() {
        return Err(Error::invalid("n_max", "exceeds the member's truncation order"));
    }
    Ok(member
        .coefficient_pairs(n_max)
        .map(|(n, lhs, rhs)| BoundReport::new(InequalityId::Coefficient, lhs, rhs, slack, format!("n={n}")))
        .collect())
}

/// Fekete–Szegő reports over `mu_grid`, then the lower and upper
/// logarithmic-coefficient reports for `f` and for `f⁻¹`. Lower-bound reports
/// carry `lhs = bound`, `rhs = value`.
pub fn check_fs_and_log_bounds(member: &ClassMember, mu_grid: &[f64], slack: f64) -> Vec<BoundReport> {
    let beta = member.beta();
    let a2 = member.coeff(2);
    let a3 = member.coeff(3);
    let mut out = Vec::with_capacity(mu_grid.len() + 4);
    for &mu in mu_grid {
        out.push(BoundReport::new(
            InequalityId::FeketeSzego,
            (a3 - a2 * a2 * mu).norm(),
            fekete_szego_bound(mu, beta),
            slack,
            format!("mu={mu}"),
        ));
    }
    let pairs = [
        (
            log_coeffs(a2, a3).modulus_difference(),
            log_diff_bounds(beta),
            InequalityId::LogDiffLower,
            InequalityId::LogDiffUpper,
        ),
        (
            inverse_log_coeffs(a2, a3).modulus_difference(),
            inverse_log_diff_bounds(beta),
            InequalityId::InverseLogDiffLower,
            InequalityId::InverseLogDiffUpper,
        ),
    ];
    for (value, (lower, upper), lo_id, hi_id) in pairs {
        out.push(BoundReport::new(lo_id, lower, value, slack, format!("value={value}")));
        out.push(BoundReport::new(hi_id, value, upper, slack, format!("value={value}")));
    }
    out
}

/// `p(z) = (n₀ + n₁z + n₂z²)/(d₀ + d₁z + d₂z²)` with real coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RationalCaratheodory {
    pub num: [f64; 3],
    pub den: [f64; 3],
}

impl RationalCaratheodory {
    /// `(1 - z²)/(1 - tz + z²)` with `t = 2(2-β)/√(5-6β+2β²)`.
    pub fn log_lower_extremal(beta: BetaParam) -> Self {
        let t = log_lower_parameter(beta);
        Self {
            num: [1.0, 0.0, -1.0],
            den: [1.0, -t, 1.0],
        }
    }

    /// `(1 + tz + z²)/(1 - z²)` with `t = 2(2-β)/√(3(3-2β))`.
    pub fn inverse_log_lower_extremal(beta: BetaParam) -> Self {
        let t = inverse_log_lower_parameter(beta);
        Self {
            num: [1.0, t, 1.0],
            den: [1.0, 0.0, -1.0],
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let quad = |c: &[f64; 3]| (z * c[2] + c[1]) * z + c[0];
        quad(&self.num) / quad(&self.den)
    }

    /// Taylor coefficients up to `order` by series division.
    pub fn series(&self, order: usize) -> Result<TruncatedSeries> {
        let pad = |c: &[f64; 3]| {
            let mut v = alloc::vec![0.0; order.max(2) + 1];
            v[..3].copy_from_slice(c);
            v.truncate(order + 1);
            TruncatedSeries::from_real(&v)
        };
        pad(&self.num)?.div(&pad(&self.den)?)
    }

    /// Smallest `Re p` over `samples` equally spaced points of `|z| = radius`.
    pub fn min_real_part(&self, radius: f64, samples: usize) -> f64 {
        (0..samples.max(1))
            .map(|k| self.eval(Complex64::from_polar(radius, TAU * k as f64 / samples.max(1) as f64)).re)
            .fold(f64::INFINITY, f64::min)
    }
}
