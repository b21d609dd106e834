use abeta_core::radii::{AreaPolynomial, RadiusProblem};
use abeta_core::verify::{
    check_bohr, check_coefficient_bounds, check_fs_and_log_bounds, CheckConfig, ClassMember, HerglotzMeasure,
    InequalityId, RationalCaratheodory, DEFAULT_SLACK,
};
use abeta_core::{BetaParam, ExtremalEvalConfig};

fn beta(b: f64) -> BetaParam {
    BetaParam::new(b).unwrap()
}

#[test]
fn extremal_attains_radii() {
    let cfg = ExtremalEvalConfig::default();
    let check = CheckConfig::default();
    for b in [0.0, 0.3, 0.6] {
        let f = ClassMember::extremal(beta(b), 64).unwrap();
        for problem in [
            RadiusProblem::bohr(beta(b), 1, 1.0, AreaPolynomial::zero()).unwrap(),
            RadiusProblem::bohr(beta(b), 2, 2.0, AreaPolynomial::new(vec![0.5]).unwrap()).unwrap(),
            RadiusProblem::rogosinski(beta(b), 2, 1, 1.0, AreaPolynomial::zero()).unwrap(),
            RadiusProblem::rogosinski(beta(b), 3, 2, 1.0, AreaPolynomial::new(vec![0.0, 0.25]).unwrap()).unwrap(),
        ] {
            let eq = problem.equation(cfg).unwrap();
            let root = eq.solve(1e-12).unwrap().root;
            let at = check_bohr(&f, &eq, root, &check).unwrap();
            assert!(at.margin.abs() < 1e-6, "{at:?}");
            assert!(!check_bohr(&f, &eq, root + 1e-3, &check).unwrap().pass);
            assert!(check_bohr(&f, &eq, root - 1e-3, &check).unwrap().margin > 0.0);
        }
    }
}

#[test]
fn beta_mismatch_is_rejected() {
    let f = ClassMember::extremal(beta(0.2), 64).unwrap();
    let problem = RadiusProblem::bohr(beta(0.3), 1, 1.0, AreaPolynomial::zero()).unwrap();
    let eq = problem.equation(ExtremalEvalConfig::default()).unwrap();
    assert!(check_bohr(&f, &eq, 0.2, &CheckConfig::default()).is_err());
}

#[test]
fn point_mass_attains_coefficient_bounds() {
    let f = ClassMember::extremal(beta(0.45), 64).unwrap();
    for r in check_coefficient_bounds(&f, 20, DEFAULT_SLACK).unwrap() {
        assert!(r.margin.abs() < 1e-15);
    }
}

#[test]
fn two_atom_preset_attains_upper_bounds() {
    for b in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let f = ClassMember::from_measure(&HerglotzMeasure::two_atom_symmetric(), beta(b), 8).unwrap();
        let reports = check_fs_and_log_bounds(&f, &[1.0], DEFAULT_SLACK);
        let fs = &reports[0];
        assert!((fs.lhs - 2.0 / (3.0 - 2.0 * b)).abs() < 1e-12);
        assert!(fs.margin.abs() < 1e-9);
        let upper = reports.iter().find(|r| r.id == InequalityId::LogDiffUpper).unwrap();
        assert!(upper.margin.abs() < 1e-9);
    }
}

#[test]
fn rational_extremals_attain_lower_bounds() {
    for b in [0.0, 0.5, 0.8, 1.0] {
        let beta = beta(b);
        let cases = [
            (RationalCaratheodory::log_lower_extremal(beta), InequalityId::LogDiffLower),
            (RationalCaratheodory::inverse_log_lower_extremal(beta), InequalityId::InverseLogDiffLower),
        ];
        for (rational, id) in cases {
            assert!(rational.min_real_part(0.99, 3600) > 0.0);
            let f = ClassMember::from_caratheodory(rational.series(16).unwrap(), beta).unwrap();
            let reports = check_fs_and_log_bounds(&f, &[], DEFAULT_SLACK);
            let r = reports.iter().find(|r| r.id == id).unwrap();
            assert!(r.margin.abs() < 1e-9, "beta={b} {r:?}");
        }
    }
}
