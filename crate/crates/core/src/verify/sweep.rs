use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::checks::{check_bohr, check_coefficient_bounds, check_fs_and_log_bounds, CheckConfig};
use super::measure::{sample_measure, HerglotzMeasure};
use super::member::{ClassMember, SchwarzMode};
use super::{BoundReport, InequalityId};
use crate::extremal::{BetaParam, ExtremalEvalConfig};
use crate::radii::{AreaPolynomial, RadiusEquation, RadiusProblem, DEFAULT_TOL};
use crate::roots::RootResult;
use crate::{Error, Result};

/// Configuration of a falsification sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    /// Members sampled per β.
    pub samples: usize,
    /// Sample `i` uses `1 + i mod max_atoms` atoms.
    pub max_atoms: usize,
    pub seed: u64,
    /// Carathéodory order, so members know `a₁ … a_{order+1}`.
    pub order: usize,
    /// Largest `n` in the coefficient checks.
    pub n_max: usize,
    pub mu_grid: Vec<f64>,
    pub m: u32,
    pub p: f64,
    /// Starting index of the Rogosinski tail.
    pub rogosinski_n: u32,
    pub functional: AreaPolynomial,
    /// Radius checks run at `root - offset`.
    pub offset: f64,
    pub radius_tol: f64,
    pub modes: Vec<SchwarzMode>,
    pub check: CheckConfig,
    pub eval: ExtremalEvalConfig,
    /// Rounds of coordinate ascent on the worst witness of each inequality.
    pub refine_rounds: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            samples: 1000,
            max_atoms: 8,
            seed: 0,
            order: 64,
            n_max: 20,
            mu_grid: vec![-2.0, -1.0, 0.0, 0.5, 1.0, 2.0],
            m: 1,
            p: 1.0,
            rogosinski_n: 2,
            functional: AreaPolynomial::zero(),
            offset: 1e-3,
            radius_tol: DEFAULT_TOL,
            modes: vec![SchwarzMode::Monomial, SchwarzMode::Damped],
            check: CheckConfig::default(),
            eval: ExtremalEvalConfig::default(),
            refine_rounds: 0,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_atoms == 0 {
            return Err(Error::invalid("max_atoms", "must be positive"));
        }
        if self.order < 3 || self.n_max > self.order + 1 {
            return Err(Error::invalid("order", "must be at least 3 and cover n_max"));
        }
        if !(self.offset >= 0.0 && self.offset.is_finite()) {
            return Err(Error::invalid("offset", "must be nonnegative"));
        }
        if !(self.check.slack >= 0.0) {
            return Err(Error::invalid("slack", "must be nonnegative"));
        }
        self.eval.validate()
    }
}

/// Worst case of one inequality over a cell.
#[derive(Debug, Clone, PartialEq)]
pub struct InequalityStat {
    pub id: InequalityId,
    pub checks: usize,
    /// Reports that failed the slack test.
    pub violations: usize,
    /// Largest `lhs - rhs`; negative when every check held strictly.
    pub max_violation: f64,
    pub witness: String,
}

/// Results for one β.
#[derive(Debug, Clone, PartialEq)]
pub struct CellSummary {
    pub beta: f64,
    /// Bohr and Rogosinski radii; absent for `β = 1`.
    pub bohr_root: Option<RootResult>,
    pub rogosinski_root: Option<RootResult>,
    pub stats: Vec<InequalityStat>,
}

impl CellSummary {
    pub fn stat(&self, id: InequalityId) -> Option<&InequalityStat> {
        self.stats.iter().find(|s| s.id == id)
    }

    pub fn all_pass(&self) -> bool {
        self.stats.iter().all(|s| s.violations == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SweepSummary {
    pub cells: Vec<CellSummary>,
}

impl SweepSummary {
    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Largest violation of `id` over all cells.
    pub fn max_violation(&self, id: InequalityId) -> Option<f64> {
        self.cells
            .iter()
            .filter_map(|c| c.stat(id))
            .map(|s| s.max_violation)
            .reduce(f64::max)
    }

    pub fn total_violations(&self) -> usize {
        self.cells.iter().flat_map(|c| &c.stats).map(|s| s.violations).sum()
    }

    /// No report failed.
    pub fn all_pass(&self) -> bool {
        self.total_violations() == 0
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Seed of sample `index` at `beta`; independent of the grid the β came from.
fn sample_seed(seed: u64, beta: BetaParam, index: usize) -> u64 {
    splitmix64(splitmix64(seed ^ beta.value().to_bits()) ^ index as u64)
}

struct CellContext<'a> {
    beta: BetaParam,
    cfg: &'a SweepConfig,
    bohr: Option<(RadiusEquation<'a, AreaPolynomial>, f64)>,
    rogosinski: Option<(RadiusEquation<'a, AreaPolynomial>, f64)>,
}

impl CellContext<'_> {
    fn reports(&self, member: &ClassMember) -> Result<Vec<BoundReport>> {
        let cfg = self.cfg;
        let mut out = check_coefficient_bounds(member, cfg.n_max, cfg.check.slack)?;
        out.extend(check_fs_and_log_bounds(member, &cfg.mu_grid, cfg.check.slack));
        for (equation, at) in self.bohr.iter().chain(&self.rogosinski) {
            for &mode in &cfg.modes {
                out.push(check_bohr(member, equation, *at, &cfg.check.with_mode(mode))?);
            }
        }
        Ok(out)
    }

    fn member(&self, mu: &HerglotzMeasure) -> Result<ClassMember> {
        ClassMember::from_measure(mu, self.beta, self.cfg.order)
    }

    /// Worst `lhs - rhs` of `id` for the member generated by `mu`.
    fn objective(&self, id: InequalityId, mu: &HerglotzMeasure) -> Result<f64> {
        Ok(self
            .reports(&self.member(mu)?)?
            .iter()
            .filter(|r| r.id == id)
            .map(BoundReport::violation)
            .fold(f64::NEG_INFINITY, f64::max))
    }

    /// Coordinate ascent on weights and angles, starting from `mu`.
    fn refine(&self, id: InequalityId, mu: &HerglotzMeasure, start: f64) -> Result<(HerglotzMeasure, f64)> {
        let mut weights: Vec<f64> = mu.atoms().iter().map(|a| a.weight).collect();
        let mut angles: Vec<f64> = mu.atoms().iter().map(|a| a.angle).collect();
        let mut best = (mu.clone(), start);
        let mut step = 0.1;
        for _ in 0..self.cfg.refine_rounds {
            let mut improved = false;
            for k in 0..2 * weights.len() {
                for sign in [1.0, -1.0] {
                    let (mut w, mut a) = (weights.clone(), angles.clone());
                    if k < weights.len() {
                        w[k] += sign * step;
                    } else {
                        a[k - weights.len()] += sign * step;
                    }
                    let Some(candidate) = HerglotzMeasure::from_raw(&w, &a) else {
                        continue;
                    };
                    let value = self.objective(id, &candidate)?;
                    if value > best.1 {
                        weights = candidate.atoms().iter().map(|x| x.weight).collect();
                        angles = candidate.atoms().iter().map(|x| x.angle).collect();
                        best = (candidate, value);
                        improved = true;
                        break;
                    }
                }
            }
            if !improved {
                step *= 0.5;
            }
        }
        Ok(best)
    }
}

fn describe(mu: &HerglotzMeasure) -> String {
    let parts: Vec<String> = mu
        .atoms()
        .iter()
        .map(|a| format!("{}@{}", a.weight, a.angle))
        .collect();
    parts.join(";")
}

/// Runs every check on `cfg.samples` members at one β.
pub fn sweep_cell(beta: BetaParam, cfg: &SweepConfig) -> Result<CellSummary> {
    cfg.validate()?;
    let problems = if beta.is_one() {
        None
    } else {
        Some((
            RadiusProblem::bohr(beta, cfg.m, cfg.p, cfg.functional.clone())?,
            RadiusProblem::rogosinski(beta, cfg.rogosinski_n, cfg.m, cfg.p, cfg.functional.clone())?,
        ))
    };
    let mut bohr_root = None;
    let mut rogosinski_root = None;
    let mut ctx = CellContext {
        beta,
        cfg,
        bohr: None,
        rogosinski: None,
    };
    if let Some((bohr, rog)) = &problems {
        let at = |root: &RootResult| {
            let at = root.root - cfg.offset;
            if at > 0.0 {
                Ok(at)
            } else {
                Err(Error::invalid("offset", "exceeds the radius"))
            }
        };
        let eq = bohr.equation(cfg.eval)?;
        let root = eq.solve(cfg.radius_tol)?;
        ctx.bohr = Some((eq, at(&root)?));
        bohr_root = Some(root);
        let eq = rog.equation(cfg.eval)?;
        let root = eq.solve(cfg.radius_tol)?;
        ctx.rogosinski = Some((eq, at(&root)?));
        rogosinski_root = Some(root);
    }

    let ids: Vec<InequalityId> = InequalityId::ALL
        .iter()
        .copied()
        .filter(|id| problems.is_some() || !matches!(id, InequalityId::BohrSchwarz | InequalityId::BohrRogosinski))
        .collect();
    let mut stats: Vec<InequalityStat> = ids
        .iter()
        .map(|&id| InequalityStat {
            id,
            checks: 0,
            violations: 0,
            max_violation: f64::NEG_INFINITY,
            witness: String::new(),
        })
        .collect();
    let mut worst: Vec<Option<HerglotzMeasure>> = vec![None; ids.len()];

    for i in 0..cfg.samples {
        let seed = sample_seed(cfg.seed, beta, i);
        let mu = sample_measure(1 + i % cfg.max_atoms, seed)?;
        let member = ctx.member(&mu)?;
        for report in ctx.reports(&member)? {
            let k = ids.iter().position(|&id| id == report.id).expect("report id in cell");
            let stat = &mut stats[k];
            stat.checks += 1;
            if !report.pass {
                stat.violations += 1;
            }
            if report.violation() > stat.max_violation {
                stat.max_violation = report.violation();
                stat.witness = format!("seed={seed} {}", report.witness);
                worst[k] = Some(mu.clone());
            }
        }
    }

    if cfg.refine_rounds > 0 {
        for (stat, mu) in stats.iter_mut().zip(&worst) {
            let Some(mu) = mu else { continue };
            let (refined, value) = ctx.refine(stat.id, mu, stat.max_violation)?;
            if value > stat.max_violation {
                stat.max_violation = value;
                stat.witness = format!("refined {}", describe(&refined));
                if value > cfg.check.slack {
                    stat.violations += 1;
                }
            }
        }
    }

    Ok(CellSummary {
        beta: beta.value(),
        bohr_root,
        rogosinski_root,
        stats,
    })
}

/// [`sweep_cell`] over the grid, in grid order. An empty grid gives an empty
/// summary.
pub fn falsification_sweep(beta_grid: &[BetaParam], cfg: &SweepConfig) -> Result<SweepSummary> {
    Ok(SweepSummary {
        cells: beta_grid.iter().map(|&b| sweep_cell(b, cfg)).collect::<Result<_>>()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SweepConfig {
        SweepConfig {
            samples: 40,
            ..SweepConfig::default()
        }
    }

    #[test]
    fn empty_grid_gives_empty_summary() {
        let s = falsification_sweep(&[], &small()).unwrap();
        assert!(s.is_empty());
        assert!(s.all_pass());
    }

    #[test]
    fn small_sweep_passes_and_is_deterministic() {
        let grid = [BetaParam::new(0.0).unwrap(), BetaParam::new(0.6).unwrap()];
        let a = falsification_sweep(&grid, &small()).unwrap();
        assert!(a.all_pass(), "{a:?}");
        assert_eq!(a, falsification_sweep(&grid, &small()).unwrap());
        assert_eq!(a.cells[0].stats.len(), InequalityId::ALL.len());
    }

    #[test]
    fn beta_one_skips_radius_checks() {
        let s = sweep_cell(BetaParam::ONE, &small()).unwrap();
        assert!(s.bohr_root.is_none());
        assert!(s.stat(InequalityId::BohrSchwarz).is_none());
        assert!(s.stat(InequalityId::Coefficient).unwrap().checks > 0);
    }

    #[test]
    fn refinement_does_not_break_bounds() {
        let cfg = SweepConfig {
            samples: 10,
            refine_rounds: 4,
            ..SweepConfig::default()
        };
        let s = sweep_cell(BetaParam::new(0.25).unwrap(), &cfg).unwrap();
        assert!(s.all_pass(), "{s:?}");
    }
}
