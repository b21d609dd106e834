//! Monte-Carlo verification of the inequalities of this crate.
//!
//! Members of `A_β` are generated from atomic Herglotz measures `μ` on the
//! unit circle: `p(z) = ∫ (1 + e^{iθ}z)/(1 - e^{iθ}z) dμ(θ)` lies in the
//! Carathéodory class, and the member `f` solves
//! `β f(z)/z + (1-β) f'(z) = p(z)`. Every check compares a member-level
//! quantity against the closed-form bound and produces a [`BoundReport`].

use alloc::string::String;

mod checks;
mod measure;
mod member;
mod sweep;

pub use checks::{
    check_bohr, check_coefficient_bounds, check_fs_and_log_bounds, CheckConfig, RationalCaratheodory,
};
pub use measure::{measure_to_caratheodory, sample_measure, Atom, HerglotzMeasure};
pub use member::{bohr_sum, rogosinski_sum, ClassMember, RogosinskiLead, SchwarzMode, SumOptions};
pub use sweep::{
    falsification_sweep, sweep_cell, CellSummary, InequalityStat, SweepConfig, SweepSummary,
};

/// Default tolerance separating genuine violations from rounding noise.
pub const DEFAULT_SLACK: f64 = 1e-9;

/// Inequality checked by a [`BoundReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InequalityId {
    /// `|aₙ| ≤ 2/(n - β(n-1))`.
    Coefficient,
    /// `|a₃ - μa₂²|` against the Fekete–Szegő bound.
    FeketeSzego,
    LogDiffLower,
    LogDiffUpper,
    InverseLogDiffLower,
    InverseLogDiffUpper,
    /// Bohr–Schwarz majorant against `-f̃(-1)`.
    BohrSchwarz,
    /// Bohr–Rogosinski majorant against `-f̃(-1)`.
    BohrRogosinski,
}

impl InequalityId {
    pub const ALL: [InequalityId; 8] = [
        InequalityId::Coefficient,
        InequalityId::FeketeSzego,
        InequalityId::LogDiffLower,
        InequalityId::LogDiffUpper,
        InequalityId::InverseLogDiffLower,
        InequalityId::InverseLogDiffUpper,
        InequalityId::BohrSchwarz,
        InequalityId::BohrRogosinski,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            InequalityId::Coefficient => "coefficient",
            InequalityId::FeketeSzego => "fekete-szego",
            InequalityId::LogDiffLower => "log-diff-lower",
            InequalityId::LogDiffUpper => "log-diff-upper",
            InequalityId::InverseLogDiffLower => "inverse-log-diff-lower",
            InequalityId::InverseLogDiffUpper => "inverse-log-diff-upper",
            InequalityId::BohrSchwarz => "bohr",
            InequalityId::BohrRogosinski => "rogosinski",
        }
    }
}

/// Outcome of one `lhs ≤ rhs` check.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub id: InequalityId,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`.
    pub margin: f64,
    /// `margin ≥ -slack`.
    pub pass: bool,
    pub witness: String,
}

impl BoundReport {
    pub fn new(id: InequalityId, lhs: f64, rhs: f64, slack: f64, witness: String) -> Self {
        let margin = rhs - lhs;
        Self {
            id,
            lhs,
            rhs,
            margin,
            pass: margin >= -slack,
            witness,
        }
    }

    /// `lhs - rhs`, positive when the inequality is violated.
    pub fn violation(&self) -> f64 {
        -self.margin
    }
}
