//! Truncated complex power series `c₀ + c₁z + … + c_N z^N + O(z^{N+1})`.
//!
//! Binary operations truncate to the smaller order of their operands.
//!
//! # Coefficient transport
//!
//! Writing `f(z) = Σ_{n≥1} aₙ zⁿ` with `a₁ = 1`,
//!
//! ```text
//! β f(z)/z + (1-β) f'(z) = Σ_{n≥1} aₙ (β + (1-β) n) z^{n-1}.
//! ```
//!
//! Matching `z^{n-1}` against `p(z) = Σ cₖ zᵏ` gives
//! `aₙ = c_{n-1} / (n - β(n-1))` for every `n ≥ 1`, and `n = 1` forces
//! `c₀ = 1`. This is [`caratheodory_to_member`].

use alloc::vec::Vec;
use core::ops::Mul;

use num_complex::Complex64;

use crate::extremal::BetaParam;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

impl TruncatedSeries {
    /// Series with the given coefficients; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::invalid("coeffs", "a series needs at least c_0"));
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// The constant series `1` to the given order.
    pub fn one(order: usize) -> Self {
        let mut coeffs = alloc::vec![Complex64::new(0.0, 0.0); order + 1];
        coeffs[0] = Complex64::new(1.0, 0.0);
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let keep = (order + 1).min(self.coeffs.len());
        Self {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = alloc::vec![Complex64::new(0.0, 0.0); order + 1];
        for (i, &a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a == Complex64::new(0.0, 0.0) {
                continue;
            }
            for (j, &b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Self { coeffs: out }
    }

    /// Long division `self / den`, truncated to the smaller order.
    pub fn div(&self, den: &Self) -> Result<Self> {
        let d0 = den.coeffs[0];
        if d0 == Complex64::new(0.0, 0.0) {
            return Err(Error::ZeroLeadingCoefficient);
        }
        let order = self.order().min(den.order());
        let mut q: Vec<Complex64> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n];
            for k in 1..=n {
                acc -= den.coeffs[k] * q[n - k];
            }
            q.push(acc / d0);
        }
        Ok(Self { coeffs: q })
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    a.mul(b)
}

pub fn series_div(num: &TruncatedSeries, den: &TruncatedSeries) -> Result<TruncatedSeries> {
    num.div(den)
}

/// Maps the Carathéodory coefficients `c₀ = 1, c₁, …, c_N` of `p` to the
/// coefficients `a₁, …, a_{N+1}` of the `f ∈ A_β` with
/// `β f(z)/z + (1-β) f'(z) = p(z)`. Index `k` of the result holds `a_{k+1}`.
pub fn caratheodory_to_member(c: &TruncatedSeries, beta: BetaParam) -> Result<Vec<Complex64>> {
    // c₀ = 1 is a normalization, so compare with a tolerance that absorbs
    // rounding in sampled measures.
    if (c.coeffs[0] - Complex64::new(1.0, 0.0)).norm() > 1e-12 {
        return Err(Error::NotNormalized);
    }
    let b = beta.value();
    Ok(c
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, &ck)| {
            if k == 0 {
                Complex64::new(1.0, 0.0)
            } else {
                let n = (k + 1) as f64;
                ck / (n - b * (n - 1.0))
            }
        })
        .collect())
}
