//! One-sided polynomials over a Cayley-Dickson algebra. The indeterminate is
//! central; substitution puts powers of the argument to the right of the
//! coefficients: f(t) = c_n(t^n) + ... + c_1 t + c_0.

use crate::algebra::{Algebra, Element};
use crate::error::{CdError, Result};
use crate::scalar::{Scalar, ScalarMode};
use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq)]
pub struct CdPoly {
    algebra: Algebra,
    /// Coefficient of x^k at index k; trailing zeros trimmed.
    coeffs: Vec<Element>,
}

impl CdPoly {
    pub fn new(algebra: Algebra, mut coeffs: Vec<Element>) -> CdPoly {
        while coeffs.last().is_some_and(Element::is_zero) {
            coeffs.pop();
        }
        CdPoly { algebra, coeffs }
    }

    pub fn zero(algebra: Algebra) -> CdPoly {
        CdPoly {
            algebra,
            coeffs: Vec::new(),
        }
    }

    /// x - lambda.
    pub fn x_minus(lambda: &Element) -> CdPoly {
        let a = lambda.algebra().clone();
        CdPoly::new(a.clone(), vec![lambda.neg(), a.one()])
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Element {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.algebra.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(Element::max_abs).fold(0.0, f64::max)
    }

    pub fn eval(&self, lambda: &Element) -> Result<Element> {
        lambda
            .check_same_algebra(&self.algebra.zero())
            .map_err(|_| CdError::AlgebraMismatch)?;
        let mut acc = self.algebra.zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            acc = acc.add(&c.mul(&lambda.pow(k as u32)));
        }
        Ok(acc)
    }

    pub fn add(&self, other: &CdPoly) -> CdPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).add(&other.coeff(k))).collect();
        CdPoly::new(self.algebra.clone(), coeffs)
    }

    pub fn sub(&self, other: &CdPoly) -> CdPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).sub(&other.coeff(k))).collect();
        CdPoly::new(self.algebra.clone(), coeffs)
    }

    /// Coefficient convolution with the left factor's coefficients on the
    /// left of each product. Degree additivity may fail when zero divisors
    /// annihilate leading terms; trimming recomputes the degree.
    pub fn mul_poly(&self, other: &CdPoly) -> CdPoly {
        if self.is_zero() || other.is_zero() {
            return CdPoly::zero(self.algebra.clone());
        }
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut coeffs = vec![self.algebra.zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        CdPoly::new(self.algebra.clone(), coeffs)
    }

    /// c * f(x): left-multiply every coefficient by c.
    pub fn left_scale(&self, c: &Element) -> CdPoly {
        let coeffs = self.coeffs.iter().map(|a| c.mul(a)).collect();
        CdPoly::new(self.algebra.clone(), coeffs)
    }

    pub fn scalar_scale(&self, s: &Scalar) -> CdPoly {
        let coeffs = self.coeffs.iter().map(|a| a.scale(s)).collect();
        CdPoly::new(self.algebra.clone(), coeffs)
    }

    pub fn conj_poly(&self) -> CdPoly {
        let coeffs = self.coeffs.iter().map(Element::conj).collect();
        CdPoly::new(self.algebra.clone(), coeffs)
    }

    /// C_f = f * conj(f), certified to have base-field coefficients.
    pub fn companion(&self) -> Result<ScalarPoly> {
        if self.is_zero() {
            return Err(CdError::DegreeTooSmall(0));
        }
        let prod = self.mul_poly(&self.conj_poly());
        let tol = self.algebra.tol() * (1.0 + self.max_abs() * self.max_abs());
        let mut out = Vec::with_capacity(prod.coeffs.len());
        for c in &prod.coeffs {
            let nonscalar_ok = match self.algebra.mode() {
                ScalarMode::Rational => c.coords()[1..].iter().all(Scalar::is_zero),
                ScalarMode::F64 => c.coords()[1..]
                    .iter()
                    .all(|v| v.abs_f64() <= tol),
            };
            if !nonscalar_ok {
                return Err(CdError::NonScalarCompanion);
            }
            out.push(c.coord(0).clone());
        }
        Ok(ScalarPoly::new(self.algebra.mode(), out))
    }

    /// Synthetic division by x - lambda from the right:
    /// f = g * (x - lambda) + r with r constant. The remainder need not
    /// equal f(lambda) when zero divisors are present.
    pub fn right_divide_linear(&self, lambda: &Element) -> Result<(CdPoly, Element)> {
        let n = self.degree().ok_or(CdError::DegreeTooSmall(1))?;
        if n < 1 {
            return Err(CdError::DegreeTooSmall(1));
        }
        let mut g = vec![self.algebra.zero(); n];
        g[n - 1] = self.coeff(n);
        for i in (1..n).rev() {
            g[i - 1] = self.coeff(i).add(&g[i].mul(lambda));
        }
        let r = self.coeff(0).add(&g[0].mul(lambda));
        Ok((CdPoly::new(self.algebra.clone(), g), r))
    }

    /// Long division by the central quadratic x^2 - t x + n:
    /// f = q * (x^2 - t x + n) + a x + b. For any root of the quadratic,
    /// f(lambda) = a lambda + b by power-associativity.
    pub fn divide_central_quadratic(&self, t: &Scalar, n: &Scalar) -> (CdPoly, Element, Element) {
        let deg = self.coeffs.len();
        if deg <= 2 {
            return (
                CdPoly::zero(self.algebra.clone()),
                self.coeff(1),
                self.coeff(0),
            );
        }
        let mut rem: Vec<Element> = (0..deg).map(|k| self.coeff(k)).collect();
        let mut q = vec![self.algebra.zero(); deg - 2];
        for i in (2..deg).rev() {
            let c = rem[i].clone();
            q[i - 2] = q[i - 2].add(&c);
            rem[i - 1] = rem[i - 1].add(&c.scale(t));
            rem[i - 2] = rem[i - 2].sub(&c.scale(n));
        }
        (
            CdPoly::new(self.algebra.clone(), q),
            rem[1].clone(),
            rem[0].clone(),
        )
    }

    /// Formal derivative.
    pub fn derivative(&self) -> CdPoly {
        if self.coeffs.len() <= 1 {
            return CdPoly::zero(self.algebra.clone());
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&Scalar::from_i64(k as i64, self.algebra.mode())))
            .collect();
        CdPoly::new(self.algebra.clone(), coeffs)
    }

    pub fn approx_eq(&self, other: &CdPoly, tol: f64) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        let scale = 1.0 + self.max_abs().max(other.max_abs());
        (0..n).all(|k| self.coeff(k).sub(&other.coeff(k)).approx_zero(tol, scale))
    }
}

/// Polynomial with base-field coefficients (companion polynomials).
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarPoly {
    mode: ScalarMode,
    coeffs: Vec<Scalar>,
}

impl ScalarPoly {
    pub fn new(mode: ScalarMode, mut coeffs: Vec<Scalar>) -> ScalarPoly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        ScalarPoly { mode, coeffs }
    }

    pub fn from_ints(mode: ScalarMode, coeffs: &[i64]) -> ScalarPoly {
        ScalarPoly::new(
            mode,
            coeffs.iter().map(|&c| Scalar::from_i64(c, mode)).collect(),
        )
    }

    pub fn mode(&self) -> ScalarMode {
        self.mode
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn to_complex_coeffs(&self) -> Vec<Complex64> {
        self.coeffs
            .iter()
            .map(|c| Complex64::new(c.to_f64(), 0.0))
            .collect()
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + Complex64::new(c.to_f64(), 0.0);
        }
        acc
    }

    /// Lift into an algebra: coefficients become scalar elements.
    pub fn lift(&self, algebra: &Algebra) -> CdPoly {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| algebra.scalar_elem(c.clone()))
            .collect();
        CdPoly::new(algebra.clone(), coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::sedenion_alpha_beta;
    use crate::identities::seeded_rng;
    use crate::scalar::ScalarMode;

    fn half(mode: ScalarMode) -> Scalar {
        Scalar::from_ratio(1, 2, mode)
    }

    /// f = (1/2) beta x^2 + beta over the sedenions.
    fn half_beta_poly() -> (CdPoly, Element, Element) {
        let s = Algebra::sedenions();
        let (alpha, beta) = sedenion_alpha_beta(&s).unwrap();
        let f = CdPoly::new(
            s.clone(),
            vec![beta.clone(), s.zero(), beta.scale(&half(ScalarMode::Rational))],
        );
        (f, alpha, beta)
    }

    #[test]
    fn root_without_right_factor() {
        let (f, alpha, beta) = half_beta_poly();
        assert!(f.eval(&alpha).unwrap().is_zero());
        let (g, r) = f.right_divide_linear(&alpha).unwrap();
        assert_eq!(r, beta, "remainder is beta, not zero");
        // reconstruction still holds
        let back = g.mul_poly(&CdPoly::x_minus(&alpha)).add(&CdPoly::new(
            f.algebra().clone(),
            vec![r],
        ));
        assert_eq!(back, f);
        // and the quotient is (1/2) beta x
        assert_eq!(g.coeff(1), beta.scale(&half(ScalarMode::Rational)));
        assert!(g.coeff(0).is_zero());
    }

    #[test]
    fn right_factor_without_root() {
        let s = Algebra::sedenions();
        let (alpha, beta) = sedenion_alpha_beta(&s).unwrap();
        // (beta x + beta)(x - alpha) = beta x^2 + beta x
        let left = CdPoly::new(s.clone(), vec![beta.clone(), beta.clone()]);
        let f = left.mul_poly(&CdPoly::x_minus(&alpha));
        let expect = CdPoly::new(s.clone(), vec![s.zero(), beta.clone(), beta.clone()]);
        assert_eq!(f, expect);
        let minus_two_beta = beta.scale(&Scalar::from_i64(-2, ScalarMode::Rational));
        assert_eq!(f.eval(&alpha).unwrap(), minus_two_beta);
        let (_, r) = f.right_divide_linear(&alpha).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn monic_quadratic_identity() {
        // (x + lambda + a)(x - lambda) = x^2 + a x - lambda^2 - a lambda
        let o = Algebra::octonions();
        let mut rng = seeded_rng(11);
        for _ in 0..10 {
            let a = o.random_small(&mut rng);
            let lambda = o.random_small(&mut rng);
            let left = CdPoly::new(o.clone(), vec![lambda.add(&a), o.one()]);
            let f = left.mul_poly(&CdPoly::x_minus(&lambda));
            let expect = CdPoly::new(
                o.clone(),
                vec![
                    lambda.pow(2).neg().sub(&a.mul(&lambda)),
                    a.clone(),
                    o.one(),
                ],
            );
            assert_eq!(f, expect);
            assert!(f.eval(&lambda).unwrap().is_zero());
        }
    }

    #[test]
    fn companion_examples() {
        let s = Algebra::sedenions();
        let (alpha, beta) = sedenion_alpha_beta(&s).unwrap();
        // C_{alpha x} = 2 x^2
        let f = CdPoly::new(s.clone(), vec![s.zero(), alpha.clone()]);
        assert_eq!(
            f.companion().unwrap(),
            ScalarPoly::from_ints(ScalarMode::Rational, &[0, 0, 2])
        );
        assert!(f.eval(&beta).unwrap().is_zero(), "beta is a root of alpha x");
        // C_{alpha x - beta} = 2 x^2 + 2
        let g = CdPoly::new(s.clone(), vec![beta.neg(), alpha.clone()]);
        assert_eq!(
            g.companion().unwrap(),
            ScalarPoly::from_ints(ScalarMode::Rational, &[2, 0, 2])
        );
        // C_{x - e1} = x^2 + 1 over the quaternions
        let h = Algebra::quaternions();
        let p = CdPoly::x_minus(&h.basis(1).unwrap());
        assert_eq!(
            p.companion().unwrap(),
            ScalarPoly::from_ints(ScalarMode::Rational, &[1, 0, 1])
        );
    }

    #[test]
    fn companion_is_scalar_for_random_sedenion_polys() {
        let s = Algebra::sedenions();
        let mut rng = seeded_rng(12);
        for _ in 0..20 {
            let coeffs = (0..4).map(|_| s.random_small(&mut rng)).collect();
            let f = CdPoly::new(s.clone(), coeffs);
            if f.is_zero() {
                continue;
            }
            f.companion().expect("companion must be scalar");
        }
    }

    #[test]
    fn divide_central_quadratic_examples() {
        let h = Algebra::quaternions();
        // x^2 + 1 mod x^2 + 1 -> q = 1, remainder 0
        let f = ScalarPoly::from_ints(ScalarMode::Rational, &[1, 0, 1]).lift(&h);
        let zero = Scalar::zero(ScalarMode::Rational);
        let one = Scalar::one(ScalarMode::Rational);
        let (q, a, b) = f.divide_central_quadratic(&zero, &one);
        assert_eq!(q, CdPoly::new(h.clone(), vec![h.one()]));
        assert!(a.is_zero() && b.is_zero());
        // x^2 - (e1+e2) x + e3 mod x^2 + 1 -> a = -(e1+e2), b = e3 - 1
        let e1 = h.basis(1).unwrap();
        let e2 = h.basis(2).unwrap();
        let e3 = h.basis(3).unwrap();
        let f2 = CdPoly::new(
            h.clone(),
            vec![e3.clone(), e1.add(&e2).neg(), h.one()],
        );
        let (_, a2, b2) = f2.divide_central_quadratic(&zero, &one);
        assert_eq!(a2, e1.add(&e2).neg());
        assert_eq!(b2, e3.sub(&h.one()));
    }

    #[test]
    fn divide_central_quadratic_reconstruction() {
        let o = Algebra::octonions();
        let mut rng = seeded_rng(13);
        for _ in 0..100 {
            let coeffs = (0..5).map(|_| o.random_small(&mut rng)).collect();
            let f = CdPoly::new(o.clone(), coeffs);
            let t = Scalar::from_i64(rand::Rng::gen_range(&mut rng, -3..=3), ScalarMode::Rational);
            let n = Scalar::from_i64(rand::Rng::gen_range(&mut rng, -3..=3), ScalarMode::Rational);
            let (q, a, b) = f.divide_central_quadratic(&t, &n);
            let quad = CdPoly::new(
                o.clone(),
                vec![o.scalar_elem(n.clone()), o.scalar_elem(-&t), o.one()],
            );
            let back = q
                .mul_poly(&quad)
                .add(&CdPoly::new(o.clone(), vec![b, a]));
            assert_eq!(back, f);
        }
    }

    #[test]
    fn derivative_rules() {
        let h = Algebra::quaternions();
        // f = (1/3) x^3 + x + e1 -> f' = x^2 + 1
        let third = Scalar::from_ratio(1, 3, ScalarMode::Rational);
        let f = CdPoly::new(
            h.clone(),
            vec![
                h.basis(1).unwrap(),
                h.one(),
                h.zero(),
                h.scalar_elem(third),
            ],
        );
        let fp = f.derivative();
        assert_eq!(
            fp,
            ScalarPoly::from_ints(ScalarMode::Rational, &[1, 0, 1]).lift(&h)
        );
        // constants die
        assert!(CdPoly::new(h.clone(), vec![h.one()]).derivative().is_zero());
        // linearity
        let mut rng = seeded_rng(14);
        let g = CdPoly::new(h.clone(), (0..4).map(|_| h.random_small(&mut rng)).collect());
        let k = CdPoly::new(h.clone(), (0..3).map(|_| h.random_small(&mut rng)).collect());
        assert_eq!(g.add(&k).derivative(), g.derivative().add(&k.derivative()));
    }

    #[test]
    fn eval_linearity_and_linear_root() {
        let o = Algebra::octonions();
        let mut rng = seeded_rng(15);
        let lambda = o.random_small(&mut rng);
        assert!(CdPoly::x_minus(&lambda).eval(&lambda).unwrap().is_zero());
        let f = CdPoly::new(o.clone(), (0..3).map(|_| o.random_small(&mut rng)).collect());
        let g = CdPoly::new(o.clone(), (0..4).map(|_| o.random_small(&mut rng)).collect());
        assert_eq!(
            f.add(&g).eval(&lambda).unwrap(),
            f.eval(&lambda).unwrap().add(&g.eval(&lambda).unwrap())
        );
    }

    #[test]
    fn left_scale_by_identity() {
        let s = Algebra::sedenions();
        let mut rng = seeded_rng(16);
        let f = CdPoly::new(s.clone(), (0..3).map(|_| s.random_small(&mut rng)).collect());
        assert_eq!(f.left_scale(&s.one()), f);
    }

    #[test]
    fn right_division_reconstruction_everywhere() {
        for alg in [Algebra::quaternions(), Algebra::octonions(), Algebra::sedenions()] {
            let mut rng = seeded_rng(17);
            for _ in 0..20 {
                let f = CdPoly::new(
                    alg.clone(),
                    (0..4).map(|_| alg.random_small(&mut rng)).collect(),
                );
                if f.degree().is_none_or(|d| d < 1) {
                    continue;
                }
                let lambda = alg.random_small(&mut rng);
                let (g, r) = f.right_divide_linear(&lambda).unwrap();
                let back = g
                    .mul_poly(&CdPoly::x_minus(&lambda))
                    .add(&CdPoly::new(alg.clone(), vec![r]));
                assert_eq!(back, f);
            }
        }
    }

    #[test]
    fn root_iff_right_factor_in_dim_le_8() {
        for alg in [Algebra::quaternions(), Algebra::octonions()] {
            let mut rng = seeded_rng(18);
            for _ in 0..30 {
                let f = CdPoly::new(
                    alg.clone(),
                    (0..4).map(|_| alg.random_small(&mut rng)).collect(),
                );
                if f.degree().is_none_or(|d| d < 1) {
                    continue;
                }
                let lambda = alg.random_small(&mut rng);
                let is_root = f.eval(&lambda).unwrap().is_zero();
                let (_, r) = f.right_divide_linear(&lambda).unwrap();
                assert_eq!(is_root, r.is_zero());
                // force a right factor and confirm the root
                let g = f.mul_poly(&CdPoly::x_minus(&lambda));
                assert!(g.eval(&lambda).unwrap().is_zero());
            }
        }
    }
}
