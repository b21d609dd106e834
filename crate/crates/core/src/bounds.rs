//! Closed-form sharp bounds on `A_β`: Fekete–Szegő, the Ma–Minda lemma, the
//! Sim–Thomas `Ψ±` lemma and the logarithmic-coefficient differences
//! `|γ₂| - |γ₁|` and `|Γ₂| - |Γ₁|`.
//!
//! Each theorem-level bound also has a second route through the lemma it is
//! reduced to (`*_via_*` functions), so the two can be checked against each
//! other.

use num_complex::Complex64;

use crate::extremal::BetaParam;
use crate::{Error, Result};

/// Sharp bound on `|c₂ - v c₁²|` over the Carathéodory class.
pub fn ma_minda_bound(v: f64) -> f64 {
    if v < 0.0 {
        -4.0 * v + 2.0
    } else if v <= 1.0 {
        2.0
    } else {
        4.0 * v - 2.0
    }
}

/// Upper end `(2-β)²/(3-2β)` of the middle Fekete–Szegő branch.
pub fn fekete_szego_threshold(beta: BetaParam) -> f64 {
    let b = beta.value();
    (2.0 - b) * (2.0 - b) / (3.0 - 2.0 * b)
}

/// Sharp bound on `|a₃ - μ a₂²|` over `A_β` for real `μ`.
pub fn fekete_szego_bound(mu: f64, beta: BetaParam) -> f64 {
    let b = beta.value();
    let outer = ((8.0 - 12.0 * mu) + (8.0 * mu - 8.0) * b + 2.0 * b * b)
        / ((3.0 - 2.0 * b) * (2.0 - b) * (2.0 - b));
    if mu < 0.0 {
        outer
    } else if mu <= fekete_szego_threshold(beta) {
        2.0 / (3.0 - 2.0 * b)
    } else {
        -outer
    }
}

/// The same bound through `a₂ = c₁/(2-β)`, `a₃ = c₂/(3-2β)` and Ma–Minda with
/// `v = μ(3-2β)/(2-β)²`.
pub fn fekete_szego_via_ma_minda(mu: f64, beta: BetaParam) -> f64 {
    let b = beta.value();
    let v = mu * (3.0 - 2.0 * b) / ((2.0 - b) * (2.0 - b));
    ma_minda_bound(v) / (3.0 - 2.0 * b)
}

/// Parameters of `Ψ₊(c₁, c₂) = |B₂c₁² + B₃c₂| - |B₁c₁|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsiInputs {
    b1: f64,
    b2: Complex64,
    b3: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsiPlusBranch {
    /// `|2B₂ + B₃| ≥ |B₃| + B₁`: bound `|4B₂ + 2B₃| - 2B₁`.
    Large,
    /// Otherwise: bound `2|B₃|`.
    Otherwise,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsiMinusBranch {
    /// `B₁ ≥ B₄ + 2|B₃|`: bound `2B₁ - B₄`.
    Dominant,
    /// `B₁² ≤ 2|B₃|(B₄ + 2|B₃|)`: bound `2B₁ √(2|B₃|/(B₄ + 2|B₃|))`.
    Interior,
    /// Otherwise: bound `2|B₃| + B₁²/(B₄ + 2|B₃|)`.
    Otherwise,
}

impl PsiInputs {
    pub fn new(b1: f64, b2: Complex64, b3: f64) -> Result<Self> {
        if !(b1 > 0.0) || !b1.is_finite() {
            return Err(Error::invalid("B1", "must be positive"));
        }
        if !b2.re.is_finite() || !b2.im.is_finite() || !b3.is_finite() {
            return Err(Error::invalid("B2/B3", "must be finite"));
        }
        Ok(Self { b1, b2, b3 })
    }

    pub fn real(b1: f64, b2: f64, b3: f64) -> Result<Self> {
        Self::new(b1, Complex64::new(b2, 0.0), b3)
    }

    pub fn b1(&self) -> f64 {
        self.b1
    }

    pub fn b2(&self) -> Complex64 {
        self.b2
    }

    pub fn b3(&self) -> f64 {
        self.b3
    }

    /// `B₄ = |4B₂ + 2B₃|`.
    pub fn b4(&self) -> f64 {
        (self.b2 * 4.0 + 2.0 * self.b3).norm()
    }

    /// `Ψ₊(c₁, c₂)` for concrete Carathéodory coefficients.
    pub fn psi_plus(&self, c1: Complex64, c2: Complex64) -> f64 {
        (self.b2 * c1 * c1 + c2 * self.b3).norm() - (c1 * self.b1).norm()
    }

    pub fn plus_branch(&self) -> PsiPlusBranch {
        if (self.b2 * 2.0 + self.b3).norm() >= self.b3.abs() + self.b1 {
            PsiPlusBranch::Large
        } else {
            PsiPlusBranch::Otherwise
        }
    }

    pub fn minus_branch(&self) -> PsiMinusBranch {
        let b3 = self.b3.abs();
        let b4 = self.b4();
        if self.b1 >= b4 + 2.0 * b3 {
            PsiMinusBranch::Dominant
        } else if self.b1 * self.b1 <= 2.0 * b3 * (b4 + 2.0 * b3) {
            PsiMinusBranch::Interior
        } else {
            PsiMinusBranch::Otherwise
        }
    }
}

/// Sharp upper bound on `Ψ₊` over the Carathéodory class.
pub fn psi_plus_bound(b: &PsiInputs) -> f64 {
    match b.plus_branch() {
        PsiPlusBranch::Large => b.b4() - 2.0 * b.b1,
        PsiPlusBranch::Otherwise => 2.0 * b.b3.abs(),
    }
}

/// Sharp upper bound on `Ψ₋ = -Ψ₊` over the Carathéodory class.
pub fn psi_minus_bound(b: &PsiInputs) -> f64 {
    let b3 = b.b3.abs();
    let b4 = b.b4();
    match b.minus_branch() {
        PsiMinusBranch::Dominant => 2.0 * b.b1 - b4,
        PsiMinusBranch::Interior => 2.0 * b.b1 * libm::sqrt(2.0 * b3 / (b4 + 2.0 * b3)),
        PsiMinusBranch::Otherwise => 2.0 * b3 + b.b1 * b.b1 / (b4 + 2.0 * b3),
    }
}

/// First two logarithmic coefficients, of `f` (`γ`) or of `f⁻¹` (`Γ`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogCoeffPair {
    pub first: Complex64,
    pub second: Complex64,
}

impl LogCoeffPair {
    /// `|second| - |first|`.
    pub fn modulus_difference(&self) -> f64 {
        self.second.norm() - self.first.norm()
    }
}

/// `γ₁ = a₂/2`, `γ₂ = (a₃ - a₂²/2)/2`.
pub fn log_coeffs(a2: Complex64, a3: Complex64) -> LogCoeffPair {
    LogCoeffPair {
        first: a2 * 0.5,
        second: (a3 - a2 * a2 * 0.5) * 0.5,
    }
}

/// `Γ₁ = -a₂/2`, `Γ₂ = -(a₃ - 3a₂²/2)/2`.
pub fn inverse_log_coeffs(a2: Complex64, a3: Complex64) -> LogCoeffPair {
    LogCoeffPair {
        first: a2 * -0.5,
        second: (a3 - a2 * a2 * 1.5) * -0.5,
    }
}

/// Coefficients `A₂ = -a₂`, `A₃ = 2a₂² - a₃` of the inverse function.
pub fn inverse_coeffs(a2: Complex64, a3: Complex64) -> (Complex64, Complex64) {
    (-a2, a2 * a2 * 2.0 - a3)
}

/// `1/(2(2-β))`, the factor relating `|γ₂|-|γ₁|` (and `|Γ₂|-|Γ₁|`) to `Ψ₊`.
pub fn log_diff_scale(beta: BetaParam) -> f64 {
    1.0 / (2.0 * (2.0 - beta.value()))
}

/// `B₁ = 1`, `B₂ = -1/(2(2-β))`, `B₃ = (2-β)/(3-2β)`.
pub fn log_psi_inputs(beta: BetaParam) -> PsiInputs {
    let b = beta.value();
    PsiInputs {
        b1: 1.0,
        b2: Complex64::new(-1.0 / (2.0 * (2.0 - b)), 0.0),
        b3: (2.0 - b) / (3.0 - 2.0 * b),
    }
}

/// `B₁ = 1`, `B₂ = 3/(2(2-β))`, `B₃ = -(2-β)/(3-2β)`.
pub fn inverse_log_psi_inputs(beta: BetaParam) -> PsiInputs {
    let b = beta.value();
    PsiInputs {
        b1: 1.0,
        b2: Complex64::new(3.0 / (2.0 * (2.0 - b)), 0.0),
        b3: -(2.0 - b) / (3.0 - 2.0 * b),
    }
}

/// Sharp `(lower, upper)` for `|γ₂| - |γ₁|` over `A_β`.
pub fn log_diff_bounds(beta: BetaParam) -> (f64, f64) {
    let b = beta.value();
    (
        -1.0 / libm::sqrt(5.0 - 6.0 * b + 2.0 * b * b),
        1.0 / (3.0 - 2.0 * b),
    )
}

/// Sharp `(lower, upper)` for `|Γ₂| - |Γ₁|` over `A_β`.
pub fn inverse_log_diff_bounds(beta: BetaParam) -> (f64, f64) {
    let b = beta.value();
    let lower = -1.0 / libm::sqrt(3.0 * (3.0 - 2.0 * b));
    let upper = if beta.is_one() {
        (-1.0 + 5.0 * b - 3.0 * b * b) / ((2.0 - b) * (2.0 - b) * (3.0 - 2.0 * b))
    } else {
        1.0 / (3.0 - 2.0 * b)
    };
    (lower, upper)
}

fn via_psi(inputs: &PsiInputs, beta: BetaParam) -> (f64, f64) {
    let scale = log_diff_scale(beta);
    (-psi_minus_bound(inputs) * scale, psi_plus_bound(inputs) * scale)
}

/// [`log_diff_bounds`] recomputed through the `Ψ±` lemma.
pub fn log_diff_bounds_via_psi(beta: BetaParam) -> (f64, f64) {
    via_psi(&log_psi_inputs(beta), beta)
}

/// [`inverse_log_diff_bounds`] recomputed through the `Ψ±` lemma.
pub fn inverse_log_diff_bounds_via_psi(beta: BetaParam) -> (f64, f64) {
    via_psi(&inverse_log_psi_inputs(beta), beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use libm::sqrt;

    fn b(v: f64) -> BetaParam {
        BetaParam::new(v).unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12
    }

    #[test]
    fn ma_minda_branches() {
        assert_eq!(ma_minda_bound(0.5), 2.0);
        assert_eq!(ma_minda_bound(-1.0), 6.0);
        assert_eq!(ma_minda_bound(2.0), 6.0);
        assert_eq!(ma_minda_bound(0.0), 2.0);
        assert_eq!(ma_minda_bound(1.0), 2.0);
    }

    #[test]
    fn fekete_szego_examples() {
        assert!(close(fekete_szego_bound(1.0, b(0.0)), 2.0 / 3.0));
        assert!(close(fekete_szego_bound(0.0, b(0.0)), 2.0 / 3.0));
        assert!(close(fekete_szego_bound(-1e-15, b(0.0)), 2.0 / 3.0));
        assert!(close(fekete_szego_bound(2.0, b(0.0)), 4.0 / 3.0));
        assert!(close(fekete_szego_bound(-1.0, b(0.0)), 5.0 / 3.0));
    }

    #[test]
    fn psi_plus_examples() {
        let p = PsiInputs::real(1.0, -0.25, 2.0 / 3.0).unwrap();
        assert_eq!(p.plus_branch(), PsiPlusBranch::Otherwise);
        assert!(close(psi_plus_bound(&p), 4.0 / 3.0));

        let p = PsiInputs::real(1.0, 1.5, -1.0).unwrap();
        assert_eq!(p.plus_branch(), PsiPlusBranch::Large);
        assert!(close(psi_plus_bound(&p), 2.0));

        let p = PsiInputs::real(1.0, 0.0, 0.0).unwrap();
        assert_eq!(psi_plus_bound(&p), 0.0);
    }

    #[test]
    fn psi_minus_examples() {
        let p = PsiInputs::real(1.0, -0.25, 2.0 / 3.0).unwrap();
        assert_eq!(p.minus_branch(), PsiMinusBranch::Interior);
        assert!(close(psi_minus_bound(&p), 4.0 / sqrt(5.0)));

        // β = 0 values of the inverse problem: B₂ = 3/4, B₃ = -2/3
        let p = PsiInputs::real(1.0, 0.75, -2.0 / 3.0).unwrap();
        assert!(close(psi_minus_bound(&p), 4.0 / 3.0));
        assert!(close(psi_minus_bound(&p) / 4.0, 1.0 / 3.0));

        let p = PsiInputs::real(1.0, 0.0, 0.0).unwrap();
        assert_eq!(p.minus_branch(), PsiMinusBranch::Dominant);
        assert_eq!(psi_minus_bound(&p), 2.0);
    }

    #[test]
    fn psi_inputs_validation() {
        assert!(PsiInputs::real(0.0, 1.0, 1.0).is_err());
        assert!(PsiInputs::real(-1.0, 1.0, 1.0).is_err());
        assert!(PsiInputs::real(1.0, f64::NAN, 1.0).is_err());
    }

    #[test]
    fn log_coefficient_examples() {
        let c = |x: f64| Complex64::new(x, 0.0);
        let g = log_coeffs(c(1.0), c(2.0 / 3.0));
        assert!(close(g.first.re, 0.5) && close(g.second.re, 1.0 / 12.0));
        let g = log_coeffs(c(0.0), c(0.0));
        assert_eq!(g.modulus_difference(), 0.0);
        let g = log_coeffs(c(0.0), c(2.0 / 3.0));
        assert!(close(g.modulus_difference(), 1.0 / 3.0));

        let g = inverse_log_coeffs(c(1.0), c(2.0 / 3.0));
        assert!(close(g.first.re, -0.5) && close(g.second.re, 5.0 / 12.0));
        let g = inverse_log_coeffs(c(0.0), c(0.0));
        assert_eq!(g.modulus_difference(), 0.0);
        // β = 1 extremal: a₂ = 2, a₃ = 2
        let g = inverse_log_coeffs(c(2.0), c(2.0));
        assert!(close(g.modulus_difference(), 1.0));
    }

    #[test]
    fn theorem_level_tables() {
        let (lo, hi) = log_diff_bounds(b(0.0));
        assert!(close(lo, -1.0 / sqrt(5.0)) && close(hi, 1.0 / 3.0));
        let (lo, hi) = log_diff_bounds(b(0.5));
        assert!(close(lo, -1.0 / sqrt(2.5)) && close(hi, 0.5));
        let (lo, hi) = log_diff_bounds(b(1.0));
        assert!(close(lo, -1.0) && close(hi, 1.0));

        let (lo, hi) = inverse_log_diff_bounds(b(0.0));
        assert!(close(lo, -1.0 / 3.0) && close(hi, 1.0 / 3.0));
        let (lo, hi) = inverse_log_diff_bounds(b(1.0));
        assert!(close(lo, -1.0 / sqrt(3.0)) && close(hi, 1.0));
        let (lo, hi) = inverse_log_diff_bounds(b(0.5));
        assert!(close(lo, -1.0 / sqrt(6.0)) && close(hi, 0.5));
    }

    #[test]
    fn inverse_upper_branches_agree_at_one() {
        let first = 1.0 / (3.0 - 2.0);
        assert!(close(inverse_log_diff_bounds(b(1.0)).1, first));
    }

    #[test]
    fn branch_selection_on_grid() {
        for i in 0..=100 {
            let beta = b(i as f64 / 100.0);
            let direct = log_psi_inputs(beta);
            assert_eq!(direct.plus_branch(), PsiPlusBranch::Otherwise);
            assert_eq!(direct.minus_branch(), PsiMinusBranch::Interior);
            let inverse = inverse_log_psi_inputs(beta);
            let expected = if beta.is_one() {
                PsiPlusBranch::Large
            } else {
                PsiPlusBranch::Otherwise
            };
            assert_eq!(inverse.plus_branch(), expected, "beta={}", beta.value());
            assert_eq!(inverse.minus_branch(), PsiMinusBranch::Interior);
        }
    }

    #[test]
    fn inverse_coefficients_closed_form() {
        let a2 = Complex64::new(0.3, -0.2);
        let a3 = Complex64::new(-0.1, 0.4);
        let (big_a2, big_a3) = inverse_coeffs(a2, a3);
        // log(F(w)/w) = A₂w + (A₃ - A₂²/2)w² + …  ⇒  Γ₁ = A₂/2, Γ₂ = (A₃ - A₂²/2)/2
        let g = inverse_log_coeffs(a2, a3);
        assert!((g.first - big_a2 * 0.5).norm() < 1e-15);
        assert!((g.second - (big_a3 - big_a2 * big_a2 * 0.5) * 0.5).norm() < 1e-15);
    }
}
