//! Cayley-Dickson algebras of arbitrary doubling depth.
//!
//! An algebra is described by its doubling parameters `gamma_1..gamma_m`;
//! elements are coordinate vectors over the standard doubled basis
//! `e_0..e_{2^m - 1}`, where at each doubling step the upper half of the
//! index range is the lower half times the new generator:
//! `e_{k + 2^{m-1}} = e_k * l`.

use crate::error::{CdError, Result};
use crate::linalg::Mat;
use crate::scalar::{Scalar, ScalarMode};
use rand::Rng;
use std::fmt;
use std::sync::Arc;

#[derive(Debug)]
struct AlgebraInner {
    gammas: Vec<Scalar>,
    mode: ScalarMode,
    tol: f64,
}

/// Descriptor of a Cayley-Dickson algebra; cheap to clone and share.
#[derive(Debug, Clone)]
pub struct Algebra(Arc<AlgebraInner>);

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.gammas == other.0.gammas
                && self.0.mode == other.0.mode
                && self.0.tol == other.0.tol)
    }
}

pub const DEFAULT_TOL: f64 = 1e-9;

impl Algebra {
    pub fn new(gammas: Vec<Scalar>, mode: ScalarMode, tol: f64) -> Result<Algebra> {
        if gammas.iter().any(Scalar::is_zero) {
            return Err(CdError::ZeroGamma);
        }
        if tol.is_nan() || tol < 0.0 {
            return Err(CdError::NegativeTolerance);
        }
        if gammas.iter().any(|g| g.mode() != mode) {
            return Err(CdError::AlgebraMismatch);
        }
        let a = Algebra(Arc::new(AlgebraInner { gammas, mode, tol }));
        a.verify_basis_convention()?;
        Ok(a)
    }

    pub fn rational(gammas: &[i64]) -> Algebra {
        let gs = gammas
            .iter()
            .map(|&g| Scalar::from_i64(g, ScalarMode::Rational))
            .collect();
        Algebra::new(gs, ScalarMode::Rational, 0.0).expect("nonzero gammas")
    }

    pub fn real(gammas: &[f64], tol: f64) -> Result<Algebra> {
        let gs = gammas.iter().map(|&g| Scalar::F(g)).collect();
        Algebra::new(gs, ScalarMode::F64, tol)
    }

    /// Hamilton's quaternions over the rationals.
    pub fn quaternions() -> Algebra {
        Algebra::rational(&[-1, -1])
    }

    /// The octonions over the rationals.
    pub fn octonions() -> Algebra {
        Algebra::rational(&[-1, -1, -1])
    }

    /// The sedenions over the rationals.
    pub fn sedenions() -> Algebra {
        Algebra::rational(&[-1, -1, -1, -1])
    }

    pub fn quaternions_f64(tol: f64) -> Algebra {
        Algebra::real(&[-1.0, -1.0], tol).unwrap()
    }

    pub fn octonions_f64(tol: f64) -> Algebra {
        Algebra::real(&[-1.0, -1.0, -1.0], tol).unwrap()
    }

    pub fn depth(&self) -> usize {
        self.0.gammas.len()
    }

    pub fn dim(&self) -> usize {
        1 << self.depth()
    }

    pub fn gammas(&self) -> &[Scalar] {
        &self.0.gammas
    }

    pub fn mode(&self) -> ScalarMode {
        self.0.mode
    }

    pub fn tol(&self) -> f64 {
        self.0.tol
    }

    pub fn is_negative_one_tower(&self) -> bool {
        self.0.gammas.iter().all(|g| match g {
            Scalar::Q(q) => *q == num_rational::BigRational::from_integer((-1).into()),
            Scalar::F(f) => *f == -1.0,
        })
    }

    pub fn zero(&self) -> Element {
        Element {
            algebra: self.clone(),
            coords: vec![Scalar::zero(self.mode()); self.dim()],
        }
    }

    pub fn one(&self) -> Element {
        self.basis(0).unwrap()
    }

    pub fn basis(&self, k: usize) -> Result<Element> {
        if k >= self.dim() {
            return Err(CdError::IndexOutOfRange(k, self.dim()));
        }
        let mut e = self.zero();
        e.coords[k] = Scalar::one(self.mode());
        Ok(e)
    }

    pub fn scalar_elem(&self, s: Scalar) -> Element {
        let mut e = self.zero();
        e.coords[0] = s;
        e
    }

    pub fn from_coords(&self, coords: Vec<Scalar>) -> Result<Element> {
        if coords.len() != self.dim() {
            return Err(CdError::Invalid(format!(
                "expected {} coordinates, got {}",
                self.dim(),
                coords.len()
            )));
        }
        if coords.iter().any(|c| c.mode() != self.mode()) {
            return Err(CdError::AlgebraMismatch);
        }
        Ok(Element {
            algebra: self.clone(),
            coords,
        })
    }

    pub fn from_ints(&self, coords: &[i64]) -> Result<Element> {
        self.from_coords(
            coords
                .iter()
                .map(|&c| Scalar::from_i64(c, self.mode()))
                .collect(),
        )
    }

    /// Seeded element with integer coordinates uniform in [-3, 3].
    pub fn random_small<R: Rng>(&self, rng: &mut R) -> Element {
        let coords = (0..self.dim())
            .map(|_| Scalar::from_i64(rng.gen_range(-3..=3), self.mode()))
            .collect();
        Element {
            algebra: self.clone(),
            coords,
        }
    }

    /// The basis indexing is pinned by the sedenion zero-divisor pair
    /// (e1+e10)(e7+e12) = 0; any drift of the doubling convention breaks it.
    fn verify_basis_convention(&self) -> Result<()> {
        if self.dim() < 16 || !self.is_negative_one_tower() {
            return Ok(());
        }
        let alpha = (&self.basis(1)?) + (&self.basis(10)?);
        let beta = (&self.basis(7)?) + (&self.basis(12)?);
        let prod = alpha.mul(&beta);
        let scale = 1.0;
        if !prod.approx_zero(self.tol().max(1e-12), scale) {
            return Err(CdError::Invalid(
                "basis convention drift: (e1+e10)(e7+e12) != 0 in the sedenion tower".into(),
            ));
        }
        Ok(())
    }
}

/// Coordinate vector relative to the standard doubled basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Element {
    algebra: Algebra,
    coords: Vec<Scalar>,
}

fn conj_rec(x: &[Scalar]) -> Vec<Scalar> {
    if x.len() == 1 {
        return vec![x[0].clone()];
    }
    let h = x.len() / 2;
    let mut out = conj_rec(&x[..h]);
    out.extend(x[h..].iter().map(|c| -c));
    out
}

fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Doubling product (q+rl)(s+tl) = qs + g*conj(t)r + (tq + r*conj(s))l,
/// where g is the gamma of the top-level doubling.
fn mul_rec(gammas: &[Scalar], x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    if x.len() == 1 {
        return vec![&x[0] * &y[0]];
    }
    let h = x.len() / 2;
    let gamma = &gammas[gammas.len() - 1];
    let lower = &gammas[..gammas.len() - 1];
    let (q, r) = x.split_at(h);
    let (s, t) = y.split_at(h);
    let qs = mul_rec(lower, q, s);
    let tbar_r = mul_rec(lower, &conj_rec(t), r);
    let tq = mul_rec(lower, t, q);
    let r_sbar = mul_rec(lower, r, &conj_rec(s));
    let mut out: Vec<Scalar> = qs
        .iter()
        .zip(&tbar_r)
        .map(|(a, b)| a + &(gamma * b))
        .collect();
    out.extend(add_vec(&tq, &r_sbar));
    out
}

/// N(q+rl) = N(q) - gamma*N(r), bottoming out at squaring.
fn norm_rec(gammas: &[Scalar], x: &[Scalar]) -> Scalar {
    if x.len() == 1 {
        return &x[0] * &x[0];
    }
    let h = x.len() / 2;
    let gamma = &gammas[gammas.len() - 1];
    let lower = &gammas[..gammas.len() - 1];
    let nq = norm_rec(lower, &x[..h]);
    let nr = norm_rec(lower, &x[h..]);
    &nq - &(gamma * &nr)
}

impl Element {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn coord(&self, k: usize) -> &Scalar {
        &self.coords[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// Largest coordinate magnitude, as f64; tolerance scale factor.
    pub fn max_abs(&self) -> f64 {
        self.coords.iter().map(Scalar::abs_f64).fold(0.0, f64::max)
    }

    /// Exact zero in rational mode; all coordinates within `tol * scale` in float mode.
    pub fn approx_zero(&self, tol: f64, scale: f64) -> bool {
        match self.algebra.mode() {
            ScalarMode::Rational => self.is_zero(),
            ScalarMode::F64 => self.max_abs() <= tol * scale.max(1.0),
        }
    }

    pub fn approx_eq(&self, other: &Element, tol: f64) -> bool {
        let scale = 1.0 + self.max_abs().max(other.max_abs());
        self.sub(other).approx_zero(tol, scale)
    }

    pub fn check_same_algebra(&self, other: &Element) -> Result<()> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(CdError::AlgebraMismatch)
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        self.checked_add(other).expect("algebra mismatch")
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element> {
        self.check_same_algebra(other)?;
        Ok(Element {
            algebra: self.algebra.clone(),
            coords: add_vec(&self.coords, &other.coords),
        })
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        Element {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    pub fn mul(&self, other: &Element) -> Element {
        self.checked_mul(other).expect("algebra mismatch")
    }

    pub fn checked_mul(&self, other: &Element) -> Result<Element> {
        self.check_same_algebra(other)?;
        Ok(Element {
            algebra: self.algebra.clone(),
            coords: mul_rec(self.algebra.gammas(), &self.coords, &other.coords),
        })
    }

    pub fn conj(&self) -> Element {
        Element {
            algebra: self.algebra.clone(),
            coords: conj_rec(&self.coords),
        }
    }

    pub fn trace(&self) -> Scalar {
        let two = Scalar::from_i64(2, self.algebra.mode());
        &self.coords[0] * &two
    }

    pub fn norm(&self) -> Scalar {
        norm_rec(self.algebra.gammas(), &self.coords)
    }

    /// Polarization of the norm form: (N(x+y) - N(x) - N(y)) / 2.
    pub fn bilinear(&self, other: &Element) -> Scalar {
        let nxy = self.add(other).norm();
        let half = Scalar::from_ratio(1, 2, self.algebra.mode());
        &(&(&nxy - &self.norm()) - &other.norm()) * &half
    }

    /// conj(x) / N(x). Two-sided inverse whenever the algebra is alternative
    /// (dim <= 8); in higher dimensions only x * inv(x) = inv(x) * x = 1 via
    /// the quadratic relation is guaranteed.
    pub fn inverse(&self) -> Result<Element> {
        let n = self.norm();
        let invertible = match self.algebra.mode() {
            ScalarMode::Rational => !n.is_zero(),
            ScalarMode::F64 => n.abs_f64() > self.algebra.tol(),
        };
        if !invertible {
            return Err(CdError::IsotropicNorm);
        }
        Ok(self.conj().scale(&n.recip()?))
    }

    pub fn pow(&self, k: u32) -> Element {
        let mut acc = self.algebra.one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Matrix of x -> a*x acting on coordinates.
    pub fn left_mul_op(&self) -> Mat {
        let dim = self.algebra.dim();
        let cols: Vec<Vec<Scalar>> = (0..dim)
            .map(|k| {
                let ek = self.algebra.basis(k).unwrap();
                self.mul(&ek).coords
            })
            .collect();
        Mat::from_columns(&cols, self.algebra.mode())
    }

    /// Matrix of x -> x*a acting on coordinates.
    pub fn right_mul_op(&self) -> Mat {
        let dim = self.algebra.dim();
        let cols: Vec<Vec<Scalar>> = (0..dim)
            .map(|k| {
                let ek = self.algebra.basis(k).unwrap();
                ek.mul(self).coords
            })
            .collect();
        Mat::from_columns(&cols, self.algebra.mode())
    }

    /// True iff left multiplication by x is singular. Rejects x = 0.
    pub fn is_zero_divisor(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(CdError::ZeroElement);
        }
        Ok(self.left_mul_op().is_singular(self.algebra.tol()))
    }
}

/// Solve a*x = b as a linear system over the base field; `None` when
/// inconsistent (which happens exactly when a is a zero divisor missing b).
pub fn solve_left(a: &Element, b: &Element) -> Result<Option<Element>> {
    a.check_same_algebra(b)?;
    if a.is_zero() {
        return Err(CdError::ZeroElement);
    }
    let op = a.left_mul_op();
    match op.solve(b.coords(), a.algebra().tol()) {
        Some(x) => Ok(Some(a.algebra().from_coords(x)?)),
        None => Ok(None),
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::parse::element_to_string(self))
    }
}

impl std::ops::Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        Element::add(self, rhs)
    }
}

impl std::ops::Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        Element::sub(self, rhs)
    }
}

impl std::ops::Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        Element::mul(self, rhs)
    }
}

impl std::ops::Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element::neg(self)
    }
}

/// The canonical sedenion zero-divisor pair alpha = e1+e10, beta = e7+e12.
pub fn sedenion_alpha_beta(a: &Algebra) -> Result<(Element, Element)> {
    let alpha = a.basis(1)?.add(&a.basis(10)?);
    let beta = a.basis(7)?.add(&a.basis(12)?);
    Ok((alpha, beta))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_doubling_is_base_field() {
        let a = Algebra::rational(&[]);
        assert_eq!(a.dim(), 1);
        let two = a.scalar_elem(Scalar::from_i64(2, ScalarMode::Rational));
        let four = two.mul(&two);
        assert_eq!(four.coord(0), &Scalar::from_i64(4, ScalarMode::Rational));
    }

    #[test]
    fn zero_gamma_rejected() {
        assert!(Algebra::new(
            vec![Scalar::from_i64(0, ScalarMode::Rational)],
            ScalarMode::Rational,
            0.0
        )
        .is_err());
    }

    #[test]
    fn quaternion_table() {
        let h = Algebra::quaternions();
        let e1 = h.basis(1).unwrap();
        let e2 = h.basis(2).unwrap();
        let e3 = h.basis(3).unwrap();
        // i*j = k, j*i = -k, i^2 = -1
        assert_eq!(e1.mul(&e2), e3);
        assert_eq!(e2.mul(&e1), e3.neg());
        assert_eq!(e1.mul(&e1), h.one().neg());
    }

    #[test]
    fn identity_is_two_sided() {
        let o = Algebra::octonions();
        let mut rng = crate::identities::seeded_rng(7);
        for _ in 0..10 {
            let x = o.random_small(&mut rng);
            assert_eq!(o.one().mul(&x), x);
            assert_eq!(x.mul(&o.one()), x);
        }
    }

    #[test]
    fn sedenion_zero_divisors() {
        let s = Algebra::sedenions();
        let (alpha, beta) = sedenion_alpha_beta(&s).unwrap();
        assert!(alpha.mul(&beta).is_zero());
        assert!(beta.mul(&alpha).is_zero());
        assert_eq!(alpha.norm(), Scalar::from_i64(2, ScalarMode::Rational));
        assert_eq!(beta.norm(), Scalar::from_i64(2, ScalarMode::Rational));
        assert!(alpha.is_zero_divisor().unwrap());
        assert!(!s.basis(1).unwrap().is_zero_divisor().unwrap());
    }

    #[test]
    fn conj_and_quadratic_relation() {
        let s = Algebra::sedenions();
        let mut rng = crate::identities::seeded_rng(3);
        for _ in 0..10 {
            let x = s.random_small(&mut rng);
            assert_eq!(x.conj().conj(), x);
            let lhs = x
                .mul(&x)
                .sub(&x.scale(&x.trace()))
                .add(&s.scalar_elem(x.norm()));
            assert!(lhs.is_zero(), "quadratic relation failed for {x}");
        }
    }

    #[test]
    fn conj_antihomomorphism() {
        let s = Algebra::sedenions();
        let mut rng = crate::identities::seeded_rng(4);
        for _ in 0..10 {
            let x = s.random_small(&mut rng);
            let y = s.random_small(&mut rng);
            assert_eq!(x.mul(&y).conj(), y.conj().mul(&x.conj()));
        }
    }

    #[test]
    fn inverse_in_octonions() {
        let o = Algebra::octonions();
        let e1 = o.basis(1).unwrap();
        assert_eq!(e1.inverse().unwrap(), e1.neg());
        let two = o.scalar_elem(Scalar::from_i64(2, ScalarMode::Rational));
        assert_eq!(
            two.inverse().unwrap(),
            o.scalar_elem(Scalar::from_ratio(1, 2, ScalarMode::Rational))
        );
        let e2 = o.basis(2).unwrap();
        let mut rng = crate::identities::seeded_rng(5);
        for _ in 0..10 {
            let x = o.random_small(&mut rng);
            // alternativity: e2^{-1}(e2 x) = x
            assert_eq!(e2.inverse().unwrap().mul(&e2.mul(&x)), x);
        }
        assert!(o.zero().inverse().is_err());
    }

    #[test]
    fn trace_norm_scalars() {
        let s = Algebra::sedenions();
        let three = s.scalar_elem(Scalar::from_i64(3, ScalarMode::Rational));
        assert_eq!(three.trace(), Scalar::from_i64(6, ScalarMode::Rational));
        assert_eq!(three.norm(), Scalar::from_i64(9, ScalarMode::Rational));
        let e1 = s.basis(1).unwrap();
        assert!(e1.trace().is_zero());
        assert_eq!(e1.norm(), Scalar::from_i64(1, ScalarMode::Rational));
    }

    #[test]
    fn pow_power_associativity() {
        let s = Algebra::sedenions();
        let (alpha, _) = sedenion_alpha_beta(&s).unwrap();
        let minus_two = s.scalar_elem(Scalar::from_i64(-2, ScalarMode::Rational));
        assert_eq!(alpha.pow(2), minus_two);
        let mut rng = crate::identities::seeded_rng(6);
        for _ in 0..5 {
            let x = s.random_small(&mut rng);
            assert_eq!(x.pow(2).mul(&x.pow(3)), x.pow(5));
            assert_eq!(x.pow(0), s.one());
            assert_eq!(x.pow(1), x);
        }
    }

    #[test]
    fn bilinear_identities() {
        let s = Algebra::sedenions();
        let (alpha, beta) = sedenion_alpha_beta(&s).unwrap();
        assert_eq!(beta.bilinear(&beta), Scalar::from_i64(2, ScalarMode::Rational));
        let e1 = s.basis(1).unwrap();
        let e2 = s.basis(2).unwrap();
        assert!(e1.bilinear(&e2).is_zero());
        let mut rng = crate::identities::seeded_rng(8);
        for _ in 0..10 {
            let x = s.random_small(&mut rng);
            // <alpha x, beta> = <x, conj(alpha) beta> = -<x, alpha beta> since Tr(alpha)=0
            let lhs = alpha.mul(&x).bilinear(&beta);
            let rhs = -&x.bilinear(&alpha.mul(&beta));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn left_ops_and_solve() {
        let s = Algebra::sedenions();
        let (alpha, beta) = sedenion_alpha_beta(&s).unwrap();
        assert!(solve_left(&alpha, &beta).unwrap().is_none());
        let b = s.basis(9).unwrap();
        assert_eq!(solve_left(&s.one(), &b).unwrap().unwrap(), b);

        let h = Algebra::quaternions();
        let e1 = h.basis(1).unwrap();
        let e2 = h.basis(2).unwrap();
        let x = solve_left(&e1, &e2).unwrap().unwrap();
        assert_eq!(x, h.basis(3).unwrap().neg());
        assert!(solve_left(&h.zero(), &e2).is_err());
    }

    #[test]
    fn left_op_matches_product_and_identity_matrix() {
        let o = Algebra::octonions();
        assert_eq!(o.one().left_mul_op(), Mat::identity(8, ScalarMode::Rational));
        let mut rng = crate::identities::seeded_rng(9);
        for _ in 0..5 {
            let a = o.random_small(&mut rng);
            let x = o.random_small(&mut rng);
            assert_eq!(a.left_mul_op().apply(x.coords()), a.mul(&x).coords().to_vec());
            assert_eq!(a.right_mul_op().apply(x.coords()), x.mul(&a).coords().to_vec());
            if !a.is_zero() {
                assert!(!a.is_zero_divisor().unwrap());
            }
        }
    }
}
