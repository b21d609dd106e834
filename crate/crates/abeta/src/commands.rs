use std::path::PathBuf;

use abeta_core::bounds::{fekete_szego_bound, inverse_log_diff_bounds, log_diff_bounds};
use abeta_core::radii::{AreaPolynomial, RadiusProblem, Variant};
use abeta_core::roots::RootResult;
use abeta_core::verify::{sweep_cell, CellSummary, SweepConfig};
use abeta_core::{BetaParam, ExtremalEvalConfig};
use serde::Serialize;

use crate::args::{
    Cli, Command, FsBoundArgs, Format, LogBoundsArgs, OutputArgs, ProblemArgs, RadiusArgs, RogosinskiArgs,
    SweepArgs, VariantChoice, VerifyArgs,
};
use crate::output::{csv_document, fmt_num, json_document, nums, Num};
use crate::{parallel_map, CliError};

/// Header of the radius CSV emitted by `radius`, `rogosinski` and `sweep`.
pub const RADIUS_HEADER: [&str; 8] = ["beta", "m", "p", "N", "variant", "root", "residual", "iterations"];

/// A rendered document and where it goes.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub document: String,
    pub out: Option<PathBuf>,
    /// Some verification report failed.
    pub failed: bool,
    pub violations: usize,
}

impl Outcome {
    fn new(document: String, output: &OutputArgs) -> Self {
        Self {
            document,
            out: output.out.clone(),
            failed: false,
            violations: 0,
        }
    }
}

pub fn run(cli: &Cli, threads: usize) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Radius(a) => radius(a),
        Command::Rogosinski(a) => rogosinski(a),
        Command::FsBound(a) => fs_bound(a),
        Command::LogBounds(a) => log_bounds(a),
        Command::Verify(a) => verify(a, threads),
        Command::Sweep(a) => sweep(a, threads),
    }
}

fn beta_below_one(value: f64) -> Result<BetaParam, CliError> {
    let beta = BetaParam::new(value).map_err(CliError::from_core)?;
    if beta.is_one() {
        return Err(CliError::new(Some("--beta"), "radii need beta < 1 (f̃(-1) diverges at beta = 1)"));
    }
    Ok(beta)
}

fn beta(value: f64) -> Result<BetaParam, CliError> {
    BetaParam::new(value).map_err(CliError::from_core)
}

fn functional(problem: &ProblemArgs) -> Result<AreaPolynomial, CliError> {
    AreaPolynomial::new(problem.poly.0.clone()).map_err(|e| CliError::new(Some("--poly"), e.to_string()))
}

fn build_problem(
    variant: Variant,
    beta: BetaParam,
    n: u32,
    args: &ProblemArgs,
) -> Result<RadiusProblem, CliError> {
    let f = functional(args)?;
    match variant {
        Variant::BohrSchwarz => RadiusProblem::bohr(beta, args.m, args.p, f),
        Variant::BohrRogosinski => RadiusProblem::rogosinski(beta, n, args.m, args.p, f),
    }
    .map_err(CliError::from_core)
}

fn solve(problem: &RadiusProblem, tol: f64) -> Result<RootResult, CliError> {
    problem
        .equation(ExtremalEvalConfig::default())
        .and_then(|eq| eq.solve(tol))
        .map_err(CliError::from_core)
}

#[derive(Serialize)]
struct RadiusDoc<'a> {
    command: &'a str,
    variant: &'a str,
    beta: Num,
    m: u32,
    p: Num,
    #[serde(rename = "N")]
    n: u32,
    poly: Vec<Num>,
    tol: Num,
    root: Num,
    residual: Num,
    bracket: [Num; 2],
    iterations: usize,
}

fn radius_row(problem: &RadiusProblem, root: &RootResult) -> Vec<String> {
    vec![
        fmt_num(problem.beta().value()),
        problem.m().to_string(),
        fmt_num(problem.p()),
        problem.n().to_string(),
        problem.variant().as_str().to_owned(),
        fmt_num(root.root),
        fmt_num(root.residual),
        root.iterations.to_string(),
    ]
}

fn single_radius(
    command: &str,
    variant: Variant,
    beta_value: f64,
    n: u32,
    problem_args: &ProblemArgs,
    tol: f64,
    output: &OutputArgs,
) -> Result<Outcome, CliError> {
    let problem = build_problem(variant, beta_below_one(beta_value)?, n, problem_args)?;
    let root = solve(&problem, tol)?;
    let document = match output.format.unwrap_or(Format::Json) {
        Format::Csv => csv_document(&RADIUS_HEADER, &[radius_row(&problem, &root)])?,
        Format::Json => json_document(&RadiusDoc {
            command,
            variant: variant.as_str(),
            beta: Num(problem.beta().value()),
            m: problem.m(),
            p: Num(problem.p()),
            n: problem.n(),
            poly: nums(problem.functional().lambdas()),
            tol: Num(tol),
            root: Num(root.root),
            residual: Num(root.residual),
            bracket: [Num(root.bracket.0), Num(root.bracket.1)],
            iterations: root.iterations,
        })?,
    };
    Ok(Outcome::new(document, output))
}

fn radius(a: &RadiusArgs) -> Result<Outcome, CliError> {
    single_radius("radius", Variant::BohrSchwarz, a.beta, 1, &a.problem, a.tol, &a.output)
}

fn rogosinski(a: &RogosinskiArgs) -> Result<Outcome, CliError> {
    single_radius("rogosinski", Variant::BohrRogosinski, a.beta, a.n, &a.problem, a.tol, &a.output)
}

#[derive(Serialize)]
struct Rows<'a, T> {
    command: &'a str,
    rows: Vec<T>,
}

#[derive(Serialize)]
struct FsRow {
    beta: Num,
    mu: Num,
    bound: Num,
}

fn fs_bound(a: &FsBoundArgs) -> Result<Outcome, CliError> {
    let mus = match (&a.mu, &a.mu_grid) {
        (Some(mu), _) => vec![*mu],
        (None, Some(grid)) => grid.0.clone(),
        (None, None) => return Err(CliError::new(Some("--mu"), "one of --mu or --mu-grid is required")),
    };
    if let Some(mu) = mus.iter().find(|m| !m.is_finite()) {
        return Err(CliError::new(Some("--mu"), format!("must be finite, got {mu}")));
    }
    let mut rows = Vec::new();
    for b in a.betas.values() {
        let beta = beta(b)?;
        for &mu in &mus {
            rows.push(FsRow {
                beta: Num(b),
                mu: Num(mu),
                bound: Num(fekete_szego_bound(mu, beta)),
            });
        }
    }
    let document = match a.output.format.unwrap_or(Format::Csv) {
        Format::Csv => csv_document(
            &["beta", "mu", "bound"],
            &rows
                .iter()
                .map(|r| vec![fmt_num(r.beta.0), fmt_num(r.mu.0), fmt_num(r.bound.0)])
                .collect::<Vec<_>>(),
        )?,
        Format::Json => json_document(&Rows {
            command: "fs-bound",
            rows,
        })?,
    };
    Ok(Outcome::new(document, &a.output))
}

#[derive(Serialize)]
struct LogRow {
    beta: Num,
    gamma_lower: Num,
    gamma_upper: Num,
    inverse_lower: Num,
    inverse_upper: Num,
}

fn log_bounds(a: &LogBoundsArgs) -> Result<Outcome, CliError> {
    let rows = a
        .betas
        .values()
        .into_iter()
        .map(|b| {
            let beta = beta(b)?;
            let (gl, gu) = log_diff_bounds(beta);
            let (il, iu) = inverse_log_diff_bounds(beta);
            Ok(LogRow {
                beta: Num(b),
                gamma_lower: Num(gl),
                gamma_upper: Num(gu),
                inverse_lower: Num(il),
                inverse_upper: Num(iu),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let document = match a.output.format.unwrap_or(Format::Csv) {
        Format::Csv => csv_document(
            &["beta", "gamma_lower", "gamma_upper", "inverse_lower", "inverse_upper"],
            &rows
                .iter()
                .map(|r| {
                    [r.beta, r.gamma_lower, r.gamma_upper, r.inverse_lower, r.inverse_upper]
                        .iter()
                        .map(|x| fmt_num(x.0))
                        .collect()
                })
                .collect::<Vec<_>>(),
        )?,
        Format::Json => json_document(&Rows {
            command: "log-bounds",
            rows,
        })?,
    };
    Ok(Outcome::new(document, &a.output))
}

#[derive(Serialize)]
struct StatDoc<'a> {
    id: &'a str,
    checks: usize,
    violations: usize,
    max_violation: Num,
    witness: &'a str,
}

#[derive(Serialize)]
struct CellDoc<'a> {
    beta: Num,
    bohr_radius: Option<Num>,
    rogosinski_radius: Option<Num>,
    inequalities: Vec<StatDoc<'a>>,
}

#[derive(Serialize)]
struct VerifyDoc<'a> {
    command: &'a str,
    samples: usize,
    atoms: u64,
    seed: u64,
    order: u64,
    slack: Num,
    pass: bool,
    violations: usize,
    cells: Vec<CellDoc<'a>>,
}

fn verify(a: &VerifyArgs, threads: usize) -> Result<Outcome, CliError> {
    let cfg = SweepConfig {
        samples: a.samples,
        max_atoms: a.atoms as usize,
        seed: a.seed,
        order: a.order as usize,
        n_max: a.n_max as usize,
        mu_grid: a.mu_grid.0.clone(),
        m: a.problem.m,
        p: a.problem.p,
        rogosinski_n: a.n,
        functional: functional(&a.problem)?,
        offset: a.offset,
        refine_rounds: a.refine,
        ..SweepConfig::default()
    };
    let mut cfg = cfg;
    cfg.check.slack = a.slack;
    if cfg.n_max > cfg.order + 1 {
        return Err(CliError::new(Some("--n-max"), "must not exceed --order + 1"));
    }
    let betas = a.betas.values().into_iter().map(beta).collect::<Result<Vec<_>, _>>()?;
    let cells = parallel_map(&betas, threads, |&b| sweep_cell(b, &cfg))
        .into_iter()
        .collect::<Result<Vec<CellSummary>, _>>()
        .map_err(CliError::from_core)?;
    let violations: usize = cells.iter().flat_map(|c| &c.stats).map(|s| s.violations).sum();

    let document = match a.output.format.unwrap_or(Format::Json) {
        Format::Csv => {
            let mut rows = Vec::new();
            for c in &cells {
                for s in &c.stats {
                    rows.push(vec![
                        fmt_num(c.beta),
                        s.id.as_str().to_owned(),
                        s.checks.to_string(),
                        s.violations.to_string(),
                        fmt_num(s.max_violation),
                        s.witness.clone(),
                    ]);
                }
            }
            csv_document(&["beta", "inequality", "checks", "violations", "max_violation", "witness"], &rows)?
        }
        Format::Json => json_document(&VerifyDoc {
            command: "verify",
            samples: a.samples,
            atoms: a.atoms,
            seed: a.seed,
            order: a.order,
            slack: Num(a.slack),
            pass: violations == 0,
            violations,
            cells: cells
                .iter()
                .map(|c| CellDoc {
                    beta: Num(c.beta),
                    bohr_radius: c.bohr_root.as_ref().map(|r| Num(r.root)),
                    rogosinski_radius: c.rogosinski_root.as_ref().map(|r| Num(r.root)),
                    inequalities: c
                        .stats
                        .iter()
                        .map(|s| StatDoc {
                            id: s.id.as_str(),
                            checks: s.checks,
                            violations: s.violations,
                            max_violation: Num(s.max_violation),
                            witness: &s.witness,
                        })
                        .collect(),
                })
                .collect(),
        })?,
    };
    Ok(Outcome {
        failed: violations > 0,
        violations,
        ..Outcome::new(document, &a.output)
    })
}

#[derive(Serialize)]
struct SweepRow<'a> {
    beta: Num,
    m: u32,
    p: Num,
    #[serde(rename = "N")]
    n: u32,
    variant: &'a str,
    root: Num,
    residual: Num,
    iterations: usize,
}

fn sweep(a: &SweepArgs, threads: usize) -> Result<Outcome, CliError> {
    let variants: &[Variant] = match a.variant {
        VariantChoice::Bohr => &[Variant::BohrSchwarz],
        VariantChoice::Rogosinski => &[Variant::BohrRogosinski],
        VariantChoice::Both => &[Variant::BohrSchwarz, Variant::BohrRogosinski],
    };
    let mut problems = Vec::new();
    for b in a.betas.values() {
        let beta = beta_below_one(b)?;
        for &v in variants {
            problems.push(build_problem(v, beta, a.n, &a.problem)?);
        }
    }
    let roots = parallel_map(&problems, threads, |p| solve(p, a.tol))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let document = match a.output.format.unwrap_or(Format::Csv) {
        Format::Csv => csv_document(
            &RADIUS_HEADER,
            &problems.iter().zip(&roots).map(|(p, r)| radius_row(p, r)).collect::<Vec<_>>(),
        )?,
        Format::Json => json_document(&Rows {
            command: "sweep",
            rows: problems
                .iter()
                .zip(&roots)
                .map(|(p, r)| SweepRow {
                    beta: Num(p.beta().value()),
                    m: p.m(),
                    p: Num(p.p()),
                    n: p.n(),
                    variant: p.variant().as_str(),
                    root: Num(r.root),
                    residual: Num(r.residual),
                    iterations: r.iterations,
                })
                .collect(),
        })?,
    };
    Ok(Outcome::new(document, &a.output))
}
