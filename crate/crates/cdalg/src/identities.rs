//! Randomized identity verification: Moufang laws, alternativity,
//! flexibility, power-associativity, norm multiplicativity, and the
//! bilinear-form identities, with concrete witnesses on failure.

use crate::algebra::{sedenion_alpha_beta, Algebra, Element};
use crate::error::Result;
use crate::scalar::ScalarMode;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone)]
pub struct IdentityResult {
    pub name: &'static str,
    pub trials: usize,
    pub failures: usize,
    /// First failing triple, rendered as element literals.
    pub witness: Option<String>,
}

impl IdentityResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub dim: usize,
    pub results: Vec<IdentityResult>,
}

impl IdentityReport {
    pub fn result(&self, name: &str) -> Option<&IdentityResult> {
        self.results.iter().find(|r| r.name == name)
    }

    pub fn all_passed(&self) -> bool {
        self.results.iter().all(IdentityResult::passed)
    }
}

type Check = fn(&Element, &Element, &Element) -> bool;

fn eq(a: &Element, b: &Element) -> bool {
    match a.algebra().mode() {
        ScalarMode::Rational => a == b,
        ScalarMode::F64 => a.approx_eq(b, a.algebra().tol()),
    }
}

fn moufang1(x: &Element, y: &Element, z: &Element) -> bool {
    // (xy)(zx) = (x(yz))x
    eq(&x.mul(y).mul(&z.mul(x)), &x.mul(&y.mul(z)).mul(x))
}

fn moufang2(x: &Element, y: &Element, z: &Element) -> bool {
    // (zxz)y = z(x(zy)), with zxz read as (zx)z
    eq(&z.mul(x).mul(z).mul(y), &z.mul(&x.mul(&z.mul(y))))
}

fn moufang3(x: &Element, y: &Element, z: &Element) -> bool {
    // ((xy)z)y = x((yz)y)
    eq(&x.mul(y).mul(z).mul(y), &x.mul(&y.mul(z).mul(y)))
}

fn left_alt(x: &Element, y: &Element, _z: &Element) -> bool {
    eq(&x.mul(&x.mul(y)), &x.mul(x).mul(y))
}

fn right_alt(x: &Element, y: &Element, _z: &Element) -> bool {
    eq(&y.mul(x).mul(x), &y.mul(&x.mul(x)))
}

fn flexibility(x: &Element, y: &Element, _z: &Element) -> bool {
    eq(&x.mul(&y.mul(x)), &x.mul(y).mul(x))
}

fn power_assoc(x: &Element, _y: &Element, _z: &Element) -> bool {
    eq(&x.pow(2).mul(&x.pow(3)), &x.pow(5)) && eq(&x.pow(2).mul(&x.pow(2)), &x.pow(4))
}

fn inverse_moufang(x: &Element, y: &Element, z: &Element) -> bool {
    // x((x^{-1}y)z) = (y(zx))x^{-1}, nonzero-norm x only
    let Ok(xi) = x.inverse() else {
        return true;
    };
    eq(&x.mul(&xi.mul(y).mul(z)), &y.mul(&z.mul(x)).mul(&xi))
}

fn norm_mult(x: &Element, y: &Element, _z: &Element) -> bool {
    let lhs = x.mul(y).norm();
    let rhs = &x.norm() * &y.norm();
    scalar_eq(x, &lhs, &rhs)
}

fn scalar_eq(ctx: &Element, a: &crate::scalar::Scalar, b: &crate::scalar::Scalar) -> bool {
    match ctx.algebra().mode() {
        ScalarMode::Rational => a == b,
        ScalarMode::F64 => {
            let scale = 1.0 + a.abs_f64().max(b.abs_f64());
            (a.to_f64() - b.to_f64()).abs() <= ctx.algebra().tol() * scale
        }
    }
}

fn bilinear_right(a: &Element, b: &Element, c: &Element) -> bool {
    // <a, bc> = <a conj(c), b>
    scalar_eq(a, &a.bilinear(&b.mul(c)), &a.mul(&c.conj()).bilinear(b))
}

fn bilinear_left(a: &Element, b: &Element, c: &Element) -> bool {
    // <a, bc> = <conj(b) a, c>
    scalar_eq(a, &a.bilinear(&b.mul(c)), &b.conj().mul(a).bilinear(c))
}

fn bilinear_diag(a: &Element, _b: &Element, _c: &Element) -> bool {
    scalar_eq(a, &a.bilinear(a), &a.norm())
}

const CHECKS: &[(&str, Check)] = &[
    ("moufang_1", moufang1),
    ("moufang_2", moufang2),
    ("moufang_3", moufang3),
    ("left_alternative", left_alt),
    ("right_alternative", right_alt),
    ("flexibility", flexibility),
    ("power_associativity", power_assoc),
    ("inverse_moufang", inverse_moufang),
    ("norm_multiplicative", norm_mult),
    ("bilinear_right_shift", bilinear_right),
    ("bilinear_left_shift", bilinear_left),
    ("bilinear_diagonal", bilinear_diag),
];

/// Run every identity on `trials` seeded random triples with small integer
/// coordinates. In dimension >= 16 the canonical zero-divisor pair is
/// prepended, so the known norm-multiplicativity failure always carries
/// its witness.
pub fn identity_report(algebra: &Algebra, trials: usize, seed: u64) -> Result<IdentityReport> {
    let mut rng = seeded_rng(seed);
    let mut triples: Vec<(Element, Element, Element)> = Vec::with_capacity(trials + 1);
    if algebra.dim() >= 16 && algebra.is_negative_one_tower() {
        let (alpha, beta) = sedenion_alpha_beta(algebra)?;
        let e1 = algebra.basis(1)?;
        triples.push((alpha, beta, e1));
    }
    for _ in 0..trials {
        triples.push((
            algebra.random_small(&mut rng),
            algebra.random_small(&mut rng),
            algebra.random_small(&mut rng),
        ));
    }

    let results = CHECKS
        .iter()
        .map(|&(name, check)| {
            let mut failures = 0;
            let mut witness = None;
            for (x, y, z) in &triples {
                if !check(x, y, z) {
                    failures += 1;
                    if witness.is_none() {
                        witness = Some(format!("x={x}; y={y}; z={z}"));
                    }
                }
            }
            IdentityResult {
                name,
                trials: triples.len(),
                failures,
                witness,
            }
        })
        .collect();

    Ok(IdentityReport {
        dim: algebra.dim(),
        results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octonions_satisfy_everything() {
        let report = identity_report(&Algebra::octonions(), 60, 42).unwrap();
        assert!(report.all_passed(), "failures: {:?}", report.results);
    }

    #[test]
    fn sedenions_break_the_right_things() {
        let report = identity_report(&Algebra::sedenions(), 60, 42).unwrap();
        assert!(!report.result("norm_multiplicative").unwrap().passed());
        assert!(!report.result("left_alternative").unwrap().passed());
        assert!(report.result("power_associativity").unwrap().passed());
        assert!(report.result("flexibility").unwrap().passed());
        assert!(report.result("bilinear_right_shift").unwrap().passed());
        assert!(report.result("bilinear_left_shift").unwrap().passed());
        // the canonical pair is the first recorded witness
        let w = report
            .result("norm_multiplicative")
            .unwrap()
            .witness
            .as_deref()
            .unwrap();
        assert!(w.starts_with("x=e1+e10; y=e7+e12"), "witness was {w}");
    }

    #[test]
    fn quaternions_are_associative_enough() {
        let report = identity_report(&Algebra::quaternions(), 40, 1).unwrap();
        assert!(report.all_passed());
    }
}
