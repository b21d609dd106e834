use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::extremal::BetaParam;
use crate::series::TruncatedSeries;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    pub weight: f64,
    /// In `[0, 2π)`.
    pub angle: f64,
}

/// Finite atomic probability measure on the unit circle.
#[derive(Debug, Clone, PartialEq)]
pub struct HerglotzMeasure {
    atoms: Vec<Atom>,
}

const WEIGHT_SUM_TOL: f64 = 1e-12;

fn wrap_angle(theta: f64) -> f64 {
    let mut t = libm::fmod(theta, TAU);
    if t < 0.0 {
        t += TAU;
    }
    if t >= TAU {
        0.0
    } else {
        t
    }
}

impl HerglotzMeasure {
    /// Validates the atoms; angles are reduced into `[0, 2π)`.
    pub fn new(atoms: Vec<Atom>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::invalid("atoms", "a measure needs at least one atom"));
        }
        let mut total = 0.0;
        for a in &atoms {
            if !(a.weight.is_finite() && a.weight >= 0.0 && a.angle.is_finite()) {
                return Err(Error::invalid("atoms", "weights must be nonnegative and angles finite"));
            }
            total += a.weight;
        }
        if (total - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(Error::invalid("atoms", "weights must sum to 1"));
        }
        Ok(Self {
            atoms: atoms
                .into_iter()
                .map(|a| Atom {
                    weight: a.weight,
                    angle: wrap_angle(a.angle),
                })
                .collect(),
        })
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// Point mass at `e^{iθ}`; at `θ = 0` it generates `(1+z)/(1-z)`, i.e. `f̃`.
    pub fn point_mass(angle: f64) -> Self {
        Self {
            atoms: alloc::vec![Atom {
                weight: 1.0,
                angle: wrap_angle(angle),
            }],
        }
    }

    /// Equal masses at `±1`: `p(z) = (1+z²)/(1-z²)`, so `c₁ = 0`, `c₂ = 2`.
    pub fn two_atom_symmetric() -> Self {
        Self {
            atoms: alloc::vec![
                Atom { weight: 0.5, angle: 0.0 },
                Atom { weight: 0.5, angle: PI },
            ],
        }
    }

    /// Equal masses at `e^{±iφ}` with `2cos φ = 2(2-β)/√(5-6β+2β²)`, which
    /// generates `p(z) = (1-z²)/(1 - tz + z²)`: the member attaining the lower
    /// bound on `|γ₂| - |γ₁|`.
    pub fn log_lower_extremal(beta: BetaParam) -> Self {
        let t = log_lower_parameter(beta);
        let phi = libm::acos((0.5 * t).min(1.0));
        Self {
            atoms: alloc::vec![
                Atom { weight: 0.5, angle: phi },
                Atom { weight: 0.5, angle: wrap_angle(-phi) },
            ],
        }
    }

    /// Masses `(2+t)/4` at `1` and `(2-t)/4` at `-1` with
    /// `t = 2(2-β)/√(3(3-2β))`, which generates `p(z) = (1 + tz + z²)/(1-z²)`:
    /// the member attaining the lower bound on `|Γ₂| - |Γ₁|`.
    pub fn inverse_log_lower_extremal(beta: BetaParam) -> Self {
        let t = inverse_log_lower_parameter(beta);
        Self {
            atoms: alloc::vec![
                Atom {
                    weight: (2.0 + t) / 4.0,
                    angle: 0.0,
                },
                Atom {
                    weight: (2.0 - t) / 4.0,
                    angle: PI,
                },
            ],
        }
    }

    /// `p(z) = Σ wⱼ (1 + e^{iθⱼ}z)/(1 - e^{iθⱼ}z)` for `|z| < 1`.
    pub fn caratheodory_value(&self, z: Complex64) -> Complex64 {
        self.atoms
            .iter()
            .map(|a| {
                let e = Complex64::from_polar(1.0, a.angle) * z;
                (Complex64::new(1.0, 0.0) + e) / (Complex64::new(1.0, 0.0) - e) * a.weight
            })
            .sum()
    }

    /// Rebuilds a measure from perturbed raw weights (clamped at zero and
    /// renormalized) and angles.
    pub(crate) fn from_raw(weights: &[f64], angles: &[f64]) -> Option<Self> {
        let total: f64 = weights.iter().map(|w| w.max(0.0)).sum();
        if !(total > 0.0) {
            return None;
        }
        Some(Self {
            atoms: weights
                .iter()
                .zip(angles)
                .map(|(&w, &a)| Atom {
                    weight: w.max(0.0) / total,
                    angle: wrap_angle(a),
                })
                .collect(),
        })
    }
}

/// `t = 2(2-β)/√(5-6β+2β²) ∈ (0, 2]`.
pub(crate) fn log_lower_parameter(beta: BetaParam) -> f64 {
    let b = beta.value();
    2.0 * (2.0 - b) / libm::sqrt(5.0 - 6.0 * b + 2.0 * b * b)
}

/// `t = 2(2-β)/√(3(3-2β)) ∈ (0, 2)`.
pub(crate) fn inverse_log_lower_parameter(beta: BetaParam) -> f64 {
    let b = beta.value();
    2.0 * (2.0 - b) / libm::sqrt(3.0 * (3.0 - 2.0 * b))
}

/// Deterministic random measure: weights uniform on the simplex (normalized
/// exponentials), angles uniform on `[0, 2π)`.
pub fn sample_measure(num_atoms: usize, seed: u64) -> Result<HerglotzMeasure> {
    if num_atoms == 0 {
        return Err(Error::invalid("num_atoms", "must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut weights = Vec::with_capacity(num_atoms);
    let mut angles = Vec::with_capacity(num_atoms);
    for _ in 0..num_atoms {
        let u: f64 = rng.random();
        weights.push(-libm::log(1.0 - u));
        let v: f64 = rng.random();
        angles.push(TAU * v);
    }
    // -ln(1-u) is zero only for u = 0; fall back to a point mass then
    HerglotzMeasure::from_raw(&weights, &angles).map_or_else(
        || Ok(HerglotzMeasure::point_mass(angles[0])),
        Ok,
    )
}

/// `c₀ = 1`, `cₙ = 2 Σ wⱼ e^{inθⱼ}` up to `order`.
pub fn measure_to_caratheodory(mu: &HerglotzMeasure, order: usize) -> TruncatedSeries {
    let mut coeffs = alloc::vec![Complex64::new(0.0, 0.0); order + 1];
    coeffs[0] = Complex64::new(1.0, 0.0);
    for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = mu
            .atoms
            .iter()
            .map(|a| Complex64::from_polar(2.0 * a.weight, n as f64 * a.angle))
            .sum();
    }
    TruncatedSeries::new(coeffs).expect("order + 1 ≥ 1 coefficients")
}
