//! Deterministic checklist replaying the worked examples and
//! counterexamples end to end. Each case is independent; exact cases run
//! in rational mode, numeric cases declare their own tolerance.

use crate::algebra::{sedenion_alpha_beta, solve_left, Algebra, Element};
use crate::eigen::{
    invert_h_matrix, lmr_member, spectrum_oracle, triangular_spectrum, verify_eigenpair,
    zero_in_spectrum, Matrix2,
};
use crate::error::Result;
use crate::identities::{identity_report, seeded_rng};
use crate::poly::{CdPoly, ScalarPoly};
use crate::roots::{
    all_roots, classify_sphere, critical_point_cubic, factorize, hull_distance, SphereKind,
};
use crate::scalar::{Scalar, ScalarMode};
use num_complex::Complex64;
use serde_json::{json, Value};

const NUMERIC_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct CaseResult {
    pub id: &'static str,
    pub section: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct ReproReport {
    pub seed: u64,
    pub cases: Vec<CaseResult>,
}

impl ReproReport {
    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "seed": self.seed,
            "all_pass": self.all_pass(),
            "cases": self.cases.iter().map(|c| json!({
                "id": c.id,
                "section": c.section,
                "pass": c.pass,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

pub const CASE_IDS: &[&str] = &["R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "R10"];

pub fn run_case(id: &str, seed: u64) -> Result<CaseResult> {
    match id {
        "R1" => case_r1(),
        "R2" => case_r2(seed),
        "R3" => case_r3(),
        "R4" => case_r4(seed),
        "R5" => case_r5(),
        "R6" => case_r6(),
        "R7" => case_r7(),
        "R8" => case_r8(),
        "R9" => case_r9(),
        "R10" => case_r10(seed),
        other => Err(crate::error::CdError::Invalid(format!(
            "unknown case id {other:?}"
        ))),
    }
}

pub fn run_all(seed: u64) -> Result<ReproReport> {
    let cases = CASE_IDS
        .iter()
        .map(|id| run_case(id, seed))
        .collect::<Result<Vec<_>>>()?;
    Ok(ReproReport { seed, cases })
}

fn outcome(
    id: &'static str,
    section: &'static str,
    checks: Vec<(bool, String)>,
) -> Result<CaseResult> {
    let pass = checks.iter().all(|(ok, _)| *ok);
    let detail = if pass {
        format!("{} checks", checks.len())
    } else {
        checks
            .iter()
            .filter(|(ok, _)| !ok)
            .map(|(_, msg)| msg.as_str())
            .collect::<Vec<_>>()
            .join("; ")
    };
    Ok(CaseResult {
        id,
        section,
        pass,
        detail,
    })
}

/// Sedenion zero divisors and the norm-multiplicativity failure.
fn case_r1() -> Result<CaseResult> {
    let s = Algebra::sedenions();
    let (alpha, beta) = sedenion_alpha_beta(&s)?;
    let two = Scalar::from_i64(2, ScalarMode::Rational);
    let checks = vec![
        (alpha.mul(&beta).is_zero(), "alpha*beta != 0".into()),
        (beta.mul(&alpha).is_zero(), "beta*alpha != 0".into()),
        (alpha.norm() == two, "N(alpha) != 2".into()),
        (beta.norm() == two, "N(beta) != 2".into()),
        (
            alpha.mul(&beta).norm().is_zero(),
            "N(alpha*beta) != 0".into(),
        ),
    ];
    outcome("R1", "the opening zero-divisor example", checks)
}

/// Linear / monic-quadratic factor iff root, on seeded octonion instances.
fn case_r2(seed: u64) -> Result<CaseResult> {
    let o = Algebra::octonions();
    let mut rng = seeded_rng(seed);
    let mut checks = Vec::new();
    for k in 0..20 {
        let lambda = o.random_small(&mut rng);
        let a = o.random_small(&mut rng);
        // linear with a forced root: a x - a lambda
        if !a.is_zero() {
            let f = CdPoly::new(o.clone(), vec![a.mul(&lambda).neg(), a.clone()]);
            let (_, r) = f.right_divide_linear(&lambda)?;
            checks.push((
                f.eval(&lambda)?.is_zero() && r.is_zero(),
                format!("linear instance {k}: root/factor mismatch"),
            ));
        }
        // monic quadratic with a forced root: (x + lambda + a)(x - lambda)
        let left = CdPoly::new(o.clone(), vec![lambda.add(&a), o.one()]);
        let f = left.mul_poly(&CdPoly::x_minus(&lambda));
        let (_, r) = f.right_divide_linear(&lambda)?;
        checks.push((
            f.eval(&lambda)?.is_zero() && r.is_zero(),
            format!("quadratic instance {k}: root/factor mismatch"),
        ));
        // converse: a forced right factor yields a root
        let g = CdPoly::new(
            o.clone(),
            vec![o.random_small(&mut rng), o.random_small(&mut rng), o.one()],
        );
        let h = g.mul_poly(&CdPoly::x_minus(&lambda));
        checks.push((
            h.eval(&lambda)?.is_zero(),
            format!("converse instance {k}: right factor without root"),
        ));
    }
    outcome("R2", "factor-root equivalence for linear and monic quadratics", checks)
}

/// Root without right factor, and right factor without root, over the sedenions.
fn case_r3() -> Result<CaseResult> {
    let s = Algebra::sedenions();
    let (alpha, beta) = sedenion_alpha_beta(&s)?;
    let half = Scalar::from_ratio(1, 2, ScalarMode::Rational);
    let f1 = CdPoly::new(
        s.clone(),
        vec![beta.clone(), s.zero(), beta.scale(&half)],
    );
    let (_, r1) = f1.right_divide_linear(&alpha)?;
    let left = CdPoly::new(s.clone(), vec![beta.clone(), beta.clone()]);
    let f2 = left.mul_poly(&CdPoly::x_minus(&alpha));
    let minus_two_beta = beta.scale(&Scalar::from_i64(-2, ScalarMode::Rational));
    let (_, r2) = f2.right_divide_linear(&alpha)?;
    let checks = vec![
        (f1.eval(&alpha)?.is_zero(), "alpha not a root of (1/2)b x^2 + b".into()),
        (r1 == beta, "remainder of the rootful polynomial is not beta".into()),
        (
            f2 == CdPoly::new(s.clone(), vec![s.zero(), beta.clone(), beta.clone()]),
            "(b x + b)(x - alpha) != b x^2 + b x".into(),
        ),
        (f2.eval(&alpha)? == minus_two_beta, "f2(alpha) != -2 beta".into()),
        (r2.is_zero(), "x - alpha is not a right factor of f2".into()),
    ];
    outcome("R3", "the two factor-root counterexamples", checks)
}

/// Octonion root existence and full linear factorization, seeded.
fn case_r4(seed: u64) -> Result<CaseResult> {
    let o = Algebra::octonions_f64(NUMERIC_TOL);
    let mut rng = seeded_rng(seed.wrapping_add(1));
    let mut checks = Vec::new();
    for k in 0..10 {
        let deg = 2 + (k % 2);
        let mut coeffs: Vec<Element> = (0..deg).map(|_| o.random_small(&mut rng)).collect();
        coeffs.push(o.one());
        let f = CdPoly::new(o.clone(), coeffs);
        let classes = all_roots(&f)?;
        checks.push((
            classes.iter().any(|c| c.is_root()),
            format!("instance {k}: no root found"),
        ));
        let fac = factorize(&f)?;
        checks.push((
            fac.reconstruct().approx_eq(&f, 1e-6),
            format!("instance {k}: factorization reconstruction failed"),
        ));
    }
    outcome("R4", "octonion algebraic closure at desk scale", checks)
}

/// The rootless linear sedenion polynomial alpha x - beta.
fn case_r5() -> Result<CaseResult> {
    let s = Algebra::sedenions();
    let (alpha, beta) = sedenion_alpha_beta(&s)?;
    let f = CdPoly::new(s.clone(), vec![beta.neg(), alpha.clone()]);
    let companion = f.companion()?;
    let expect = ScalarPoly::from_ints(ScalarMode::Rational, &[2, 0, 2]);
    // the bilinear-form identity chain: 2 = <beta,beta> = <alpha x, beta>
    // = -<x, alpha beta> = 0 for any purported solution x
    let mut rng = seeded_rng(5);
    let mut chain_ok = true;
    for _ in 0..20 {
        let x = s.random_small(&mut rng);
        let lhs = alpha.mul(&x).bilinear(&beta);
        let rhs = -&x.bilinear(&alpha.mul(&beta));
        if lhs != rhs || !rhs.is_zero() {
            chain_ok = false;
        }
    }
    let checks = vec![
        (
            solve_left(&alpha, &beta)?.is_none(),
            "alpha x = beta unexpectedly solvable".into(),
        ),
        (companion == expect, "C_{alpha x - beta} != 2x^2 + 2".into()),
        (chain_ok, "bilinear identity chain broken".into()),
    ];
    outcome("R5", "rootlessness of alpha x - beta", checks)
}

/// Companion-root correspondence fails in both directions over the sedenions.
fn case_r6() -> Result<CaseResult> {
    let s = Algebra::sedenions();
    let (alpha, beta) = sedenion_alpha_beta(&s)?;
    // f = alpha x: beta is a root, but C_f = 2x^2 only vanishes at 0,
    // so no root of C_f is quadratically equivalent to beta
    let f = CdPoly::new(s.clone(), vec![s.zero(), alpha.clone()]);
    let cf = f.companion()?;
    let two = Scalar::from_i64(2, ScalarMode::Rational);
    // g = alpha x - beta: no roots, yet C_g = 2x^2 + 2 has the whole
    // trace-0 norm-1 sphere
    let g = CdPoly::new(s.clone(), vec![beta.neg(), alpha.clone()]);
    let cg = g.companion()?;
    let e1 = s.basis(1)?;
    let checks = vec![
        (f.eval(&beta)?.is_zero(), "beta not a root of alpha x".into()),
        (
            cf == ScalarPoly::from_ints(ScalarMode::Rational, &[0, 0, 2]),
            "C_{alpha x} != 2x^2".into(),
        ),
        (
            beta.trace().is_zero() && beta.norm() == two,
            "beta does not sit on the (0,2) sphere".into(),
        ),
        // every root of 2x^2 has trace 0 and norm 0, unlike beta
        (
            cg == ScalarPoly::from_ints(ScalarMode::Rational, &[2, 0, 2]),
            "C_{alpha x - beta} != 2x^2 + 2".into(),
        ),
        // e1 lies on the (0,1) root sphere of C_g but g has no roots at all
        (
            e1.trace().is_zero()
                && e1.norm() == Scalar::one(ScalarMode::Rational)
                && !g.eval(&e1)?.is_zero()
                && solve_left(&alpha, &beta)?.is_none(),
            "C_g root sphere unexpectedly carries a root of g".into(),
        ),
    ];
    outcome("R6", "companion correspondence failure in dimension 16", checks)
}

/// The isolated/spherical dichotomy fails: +-beta are quadratically
/// equivalent roots of alpha x, but the equivalent alpha is not a root.
fn case_r7() -> Result<CaseResult> {
    let s = Algebra::sedenions();
    let (alpha, beta) = sedenion_alpha_beta(&s)?;
    let f = CdPoly::new(s.clone(), vec![s.zero(), alpha.clone()]);
    let checks = vec![
        (f.eval(&beta)?.is_zero(), "beta not a root".into()),
        (f.eval(&beta.neg())?.is_zero(), "-beta not a root".into()),
        (!f.eval(&alpha)?.is_zero(), "alpha unexpectedly a root".into()),
        (
            alpha.trace() == beta.trace() && alpha.norm() == beta.norm(),
            "alpha and beta not quadratically equivalent".into(),
        ),
    ];
    outcome("R7", "neither isolated nor spherical in dimension 16", checks)
}

/// The quaternion cubic with three isolated roots whose derivative has
/// spherical roots outside the root hull.
fn case_r8() -> Result<CaseResult> {
    let h = Algebra::quaternions_f64(NUMERIC_TOL);
    let f = critical_point_cubic(&h)?;
    let classes = all_roots(&f)?;
    let isolated: Vec<Element> = classes
        .iter()
        .filter_map(|c| match &c.kind {
            SphereKind::Isolated(l) => Some(l.clone()),
            _ => None,
        })
        .collect();
    let spherical = classes.iter().any(|c| matches!(c.kind, SphereKind::Spherical));
    let complex_ok = isolated
        .iter()
        .all(|l| l.coord(2).abs_f64() <= 1e-8 && l.coord(3).abs_f64() <= 1e-8);
    let max_resid = isolated
        .iter()
        .map(|l| f.eval(l).unwrap().max_abs())
        .fold(0.0_f64, f64::max);
    let fp_class = classify_sphere(&f.derivative(), &Scalar::F(0.0), &Scalar::F(1.0))?;
    let pts: Vec<Complex64> = isolated
        .iter()
        .map(|l| Complex64::new(l.coord(0).to_f64(), l.coord(1).to_f64()))
        .collect();
    // the hull of the (all-complex) roots lies in the complex plane; the
    // spherical critical point j sits at unit distance orthogonal to it
    let dist = if pts.is_empty() {
        0.0
    } else {
        let planar = hull_distance(&pts, Complex64::new(0.0, 0.0));
        (1.0 + planar * planar).sqrt()
    };
    let checks = vec![
        (
            isolated.len() == 3 && !spherical,
            format!("expected 3 isolated roots, got {}", isolated.len()),
        ),
        (complex_ok, "roots have non-complex coordinates".into()),
        (
            matches!(fp_class.kind, SphereKind::Spherical),
            "f' not spherical on (0,1)".into(),
        ),
        (
            dist > 0.0,
            "spherical critical point inside the root hull".into(),
        ),
        (
            max_resid <= 1e-6,
            format!("root residual {max_resid:.2e} too large"),
        ),
    ];
    outcome("R8", "critical points escape the root hull", checks)
}

/// The 2x2 matrix that is invertible over the quaternions yet a zero
/// divisor over the octonions.
fn case_r9() -> Result<CaseResult> {
    let mut checks = Vec::new();
    // quaternion side: exact inverse
    let h = Algebra::quaternions();
    let bh = Matrix2::new(
        h.basis(1)?,
        h.one(),
        h.basis(1)?.mul(&h.basis(2)?),
        h.basis(2)?,
    )?;
    let inv = invert_h_matrix(&bh)?;
    let minus_half = Scalar::from_ratio(-1, 2, ScalarMode::Rational);
    let expect = Matrix2::new(
        h.basis(1)?.scale(&minus_half),
        h.basis(3)?.scale(&minus_half),
        h.one().neg().scale(&minus_half),
        h.basis(2)?.scale(&minus_half),
    )?;
    checks.push((inv == expect, "B^{-1} != -(1/2)[[i, ij], [-1, j]]".into()));

    // octonion side
    let o = Algebra::octonions();
    let b = Matrix2::new(
        o.basis(1)?,
        o.one(),
        o.basis(1)?.mul(&o.basis(2)?),
        o.basis(2)?,
    )?;
    let (member, witness) = zero_in_spectrum(&b)?;
    let witness_parallel_ell = witness.as_ref().is_some_and(|t| {
        !t.coord(4).is_zero() && t.coords().iter().enumerate().all(|(k, c)| k == 4 || c.is_zero())
    });
    checks.push((member, "0 not detected in the spectrum".into()));
    checks.push((
        witness_parallel_ell,
        "kernel witness not parallel to l".into(),
    ));
    let ell = o.basis(4)?;
    let w = (ell.neg(), o.basis(1)?.mul(&ell));
    checks.push((
        verify_eigenpair(&b, &o.zero(), &w)?,
        "B w != 0 for w = (-l, il)".into(),
    ));
    let w_shifted = (o.one().neg(), o.basis(1)?);
    checks.push((
        !verify_eigenpair(&b, &o.zero(), &w_shifted)?,
        "w l^{-1} unexpectedly an eigenvector".into(),
    ));
    checks.push((
        spectrum_oracle(&b, &o.zero()),
        "real-representation oracle misses 0".into(),
    ));

    // factor matrices
    let left = Matrix2::new(o.basis(1)?, o.zero(), o.zero(), o.basis(3)?)?;
    let right = Matrix2::new(o.one(), o.basis(1)?.neg(), o.one(), o.basis(1)?)?;
    checks.push((left.matmul(&right) == b, "factorization does not multiply back".into()));
    let spectrum: Vec<Element> = triangular_spectrum(&left)?
        .into_iter()
        .map(|p| p.lambda)
        .collect();
    checks.push((
        spectrum.contains(&o.basis(1)?) && spectrum.contains(&o.basis(3)?),
        "left factor spectrum != {i, ij}".into(),
    ));
    checks.push((
        !zero_in_spectrum(&right)?.0,
        "right factor unexpectedly has 0 in its spectrum".into(),
    ));

    // LMR membership at the xi = 0 endpoint: -i in LMR(x^2 + (i-j)x - ij)
    let f = b.associated_quadratic();
    checks.push((
        lmr_member(&f, &o.basis(1)?.neg())?.0,
        "-i not a member of LMR(f)".into(),
    ));
    outcome("R9", "invertible yet a zero divisor", checks)
}

/// Identity suite on the octonions and sedenions.
fn case_r10(seed: u64) -> Result<CaseResult> {
    let o_report = identity_report(&Algebra::octonions(), 200, seed)?;
    let s_report = identity_report(&Algebra::sedenions(), 200, seed)?;
    let norm = s_report.result("norm_multiplicative").unwrap();
    let alt = s_report.result("left_alternative").unwrap();
    let checks = vec![
        (o_report.all_passed(), "octonion identity failure".into()),
        (
            !norm.passed() && norm.witness.is_some(),
            "sedenion norm multiplicativity did not fail".into(),
        ),
        (
            !alt.passed() && alt.witness.is_some(),
            "sedenion alternativity did not fail".into(),
        ),
        (
            s_report.result("power_associativity").unwrap().passed(),
            "sedenion power-associativity failed".into(),
        ),
    ];
    outcome("R10", "identity suite on octonions and sedenions", checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_cases_pass() {
        let report = run_all(42).unwrap();
        for case in &report.cases {
            assert!(case.pass, "{} failed: {}", case.id, case.detail);
        }
        assert!(report.all_pass());
    }

    #[test]
    fn report_is_deterministic() {
        let a = run_all(7).unwrap().to_json();
        let b = run_all(7).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn unknown_case_rejected() {
        assert!(run_case("R99", 1).is_err());
    }
}
