//! Left eigenvalues of 2x2 matrices over octonion (and associative)
//! division algebras: triangular spectra, eigenpair generation from the
//! associated quadratic b x^2 + (a-d) x - c, the LMR membership oracle,
//! the zero-in-spectrum criterion, and the real-representation spectrum
//! oracle every other operation is checked against.

use crate::algebra::{Algebra, Element};
use crate::error::{CdError, Result};
use crate::linalg::Mat;
use crate::poly::CdPoly;
use crate::roots::{all_roots, sphere_points, SphereKind};
use crate::scalar::Scalar;

/// Row-major 2x2 matrix [[a, b], [c, d]] over one algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix2 {
    pub a: Element,
    pub b: Element,
    pub c: Element,
    pub d: Element,
}

impl Matrix2 {
    pub fn new(a: Element, b: Element, c: Element, d: Element) -> Result<Matrix2> {
        a.check_same_algebra(&b)?;
        a.check_same_algebra(&c)?;
        a.check_same_algebra(&d)?;
        Ok(Matrix2 { a, b, c, d })
    }

    pub fn algebra(&self) -> &Algebra {
        self.a.algebra()
    }

    pub fn identity(algebra: &Algebra) -> Matrix2 {
        Matrix2 {
            a: algebra.one(),
            b: algebra.zero(),
            c: algebra.zero(),
            d: algebra.one(),
        }
    }

    pub fn apply(&self, v: &(Element, Element)) -> (Element, Element) {
        (
            self.a.mul(&v.0).add(&self.b.mul(&v.1)),
            self.c.mul(&v.0).add(&self.d.mul(&v.1)),
        )
    }

    pub fn matmul(&self, other: &Matrix2) -> Matrix2 {
        Matrix2 {
            a: self.a.mul(&other.a).add(&self.b.mul(&other.c)),
            b: self.a.mul(&other.b).add(&self.b.mul(&other.d)),
            c: self.c.mul(&other.a).add(&self.d.mul(&other.c)),
            d: self.c.mul(&other.b).add(&self.d.mul(&other.d)),
        }
    }

    /// Left-multiply the whole matrix by e.
    pub fn left_scale(&self, e: &Element) -> Matrix2 {
        Matrix2 {
            a: e.mul(&self.a),
            b: e.mul(&self.b),
            c: e.mul(&self.c),
            d: e.mul(&self.d),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.a
            .max_abs()
            .max(self.b.max_abs())
            .max(self.c.max_abs())
            .max(self.d.max_abs())
    }

    /// The associated quadratic f(x) = b x^2 + (a-d) x - c.
    pub fn associated_quadratic(&self) -> CdPoly {
        CdPoly::new(
            self.algebra().clone(),
            vec![self.c.neg(), self.a.sub(&self.d), self.b.clone()],
        )
    }
}

#[derive(Debug, Clone)]
pub struct EigenPair {
    pub lambda: Element,
    pub v: (Element, Element),
}

/// True iff B v = lambda v within tolerance (exact zero in rational mode).
/// Rejects the zero vector.
pub fn verify_eigenpair(b: &Matrix2, lambda: &Element, v: &(Element, Element)) -> Result<bool> {
    if v.0.is_zero() && v.1.is_zero() {
        return Err(CdError::ZeroElement);
    }
    let (r0, r1) = b.apply(v);
    let d0 = r0.sub(&lambda.mul(&v.0));
    let d1 = r1.sub(&lambda.mul(&v.1));
    let scale = 1.0 + b.max_abs() * (1.0 + v.0.max_abs().max(v.1.max_abs())) * (1.0 + lambda.max_abs());
    let tol = b.algebra().tol();
    Ok(d0.approx_zero(tol, scale) && d1.approx_zero(tol, scale))
}

/// Diagonal spectrum of a triangular matrix, each eigenvalue certified
/// with an explicit eigenvector.
pub fn triangular_spectrum(b: &Matrix2) -> Result<Vec<EigenPair>> {
    let algebra = b.algebra().clone();
    let lower = b.b.is_zero();
    let upper = b.c.is_zero();
    if !lower && !upper {
        return Err(CdError::NotTriangular);
    }
    let one = algebra.one();
    let zero = algebra.zero();
    let mut pairs = Vec::new();
    if lower {
        // [[a,0],[c,d]]: for a, v = (1, v2) with (a-d) v2 = c; for d, v = (0,1)
        let diff = b.a.sub(&b.d);
        let v2 = if diff.is_zero() {
            if b.c.is_zero() {
                Some(zero.clone())
            } else {
                None // a = d and c != 0: only e2 certifies the (single) eigenvalue
            }
        } else {
            crate::algebra::solve_left(&diff, &b.c)?
        };
        if let Some(v2) = v2 {
            pairs.push(EigenPair {
                lambda: b.a.clone(),
                v: (one.clone(), v2),
            });
        }
        pairs.push(EigenPair {
            lambda: b.d.clone(),
            v: (zero.clone(), one.clone()),
        });
    } else {
        // [[a,b],[0,d]]: for d, v = (v1, 1) with (d-a) v1 = b; for a, v = (1,0)
        pairs.push(EigenPair {
            lambda: b.a.clone(),
            v: (one.clone(), zero.clone()),
        });
        let diff = b.d.sub(&b.a);
        let v1 = if diff.is_zero() {
            if b.b.is_zero() {
                Some(zero.clone())
            } else {
                None
            }
        } else {
            crate::algebra::solve_left(&diff, &b.b)?
        };
        if let Some(v1) = v1 {
            pairs.push(EigenPair {
                lambda: b.d.clone(),
                v: (v1, one.clone()),
            });
        }
    }
    Ok(pairs)
}

/// (e lambda, v e) is an eigenpair of e B whenever (lambda, v) is one of B.
pub fn shift_eigenpair(e: &Element, pair: &EigenPair) -> Result<EigenPair> {
    if e.is_zero() {
        return Err(CdError::ZeroElement);
    }
    Ok(EigenPair {
        lambda: e.mul(&pair.lambda),
        v: (pair.v.0.mul(e), pair.v.1.mul(e)),
    })
}

const SPHERE_SAMPLES_PER_CLASS: usize = 4;

/// Eigenpairs with first coordinate t: roots s of t^{-1} f give
/// lambda = a + t((t^{-1} b) s) and v = (1, s) * t.
pub fn eig_from_t(b: &Matrix2, t: &Element) -> Result<Vec<EigenPair>> {
    if t.is_zero() {
        return Err(CdError::ZeroElement);
    }
    if b.b.is_zero() {
        return Err(CdError::BadCorner("nonzero"));
    }
    let t_inv = t.inverse()?;
    let f = b.associated_quadratic();
    let g = f.left_scale(&t_inv);
    let classes = all_roots(&g)?;
    let mut s_values = Vec::new();
    for class in &classes {
        match &class.kind {
            SphereKind::Isolated(s) => s_values.push(s.clone()),
            SphereKind::Spherical => s_values.extend(sphere_points(
                b.algebra(),
                class.t.to_f64(),
                class.n.to_f64(),
                SPHERE_SAMPLES_PER_CLASS,
            )),
            SphereKind::NoRoot => {}
        }
    }
    let mut pairs = Vec::new();
    for s in s_values {
        let lambda = b.a.add(&t.mul(&t_inv.mul(&b.b).mul(&s)));
        let v = (t.clone(), s.mul(t));
        if verify_eigenpair(b, &lambda, &v)? {
            pairs.push(EigenPair { lambda, v });
        }
    }
    Ok(pairs)
}

/// One guaranteed eigenpair: the t = 1 route when b != 0, the triangular
/// route otherwise.
pub fn eig_exists(b: &Matrix2) -> Result<EigenPair> {
    if b.b.is_zero() {
        let pairs = triangular_spectrum(b)?;
        return pairs.into_iter().next().ok_or(CdError::RootNotFound);
    }
    let one = b.algebra().one();
    let pairs = eig_from_t(b, &one)?;
    pairs.into_iter().next().ok_or(CdError::RootNotFound)
}

/// Membership of s in LMR(f) = union of R(c f) over c != 0, for quadratic
/// f over an octonion division algebra. The map
/// u -> (u c2) s^2 + (u c1) s + u c0 is linear in u; s is a member iff its
/// matrix R_{s^2} R_{c2} + R_s R_{c1} + R_{c0} is singular, and a kernel
/// vector is the witness.
pub fn lmr_member(f: &CdPoly, s: &Element) -> Result<(bool, Option<Element>)> {
    let algebra = f.algebra().clone();
    if algebra.dim() != 8 {
        return Err(CdError::DimensionTooLarge(algebra.dim()));
    }
    if f.degree() != Some(2) {
        return Err(CdError::NotQuadratic);
    }
    let s2 = s.pow(2);
    let m = s2
        .right_mul_op()
        .matmul(&f.coeff(2).right_mul_op())
        .add(&s.right_mul_op().matmul(&f.coeff(1).right_mul_op()))
        .add(&f.coeff(0).right_mul_op());
    let tol = algebra.tol();
    if !m.is_singular(tol) {
        return Ok((false, None));
    }
    let witness = m
        .nullspace(tol)
        .into_iter()
        .next()
        .map(|coords| algebra.from_coords(coords))
        .transpose()?;
    Ok((true, witness))
}

/// Spectrum description for a matrix whose b entry is a nonzero base-field
/// scalar: an exact membership test plus a seeded t-sweep sampler.
pub struct LmrSpectrum {
    matrix: Matrix2,
    f: CdPoly,
    b_inv: Scalar,
}

pub fn spectrum_from_lmr(b: &Matrix2) -> Result<LmrSpectrum> {
    let nonscalar = b.b.coords()[1..].iter().any(|c| !c.is_zero());
    if nonscalar || b.b.is_zero() {
        return Err(CdError::BadCorner("a nonzero base-field scalar"));
    }
    Ok(LmrSpectrum {
        matrix: b.clone(),
        f: b.associated_quadratic(),
        b_inv: b.b.coord(0).recip()?,
    })
}

impl LmrSpectrum {
    /// lambda is in the spectrum iff b^{-1}(lambda - a) is in LMR(f).
    pub fn contains(&self, lambda: &Element) -> Result<bool> {
        let s = lambda.sub(&self.matrix.a).scale(&self.b_inv);
        Ok(lmr_member(&self.f, &s)?.0)
    }

    /// Sweep t over deterministic unit octonions and aggregate the
    /// eigenvalues of eig_from_t, deduplicated within 10 * tol.
    pub fn sample(&self, samples: usize, seed: u64) -> Result<Vec<Element>> {
        let algebra = self.matrix.algebra();
        let tol = algebra.tol() * 10.0;
        let mut out: Vec<Element> = Vec::new();
        for t in unit_elements(algebra, samples, seed) {
            for pair in eig_from_t(&self.matrix, &t)? {
                if !out.iter().any(|l| l.approx_eq(&pair.lambda, tol)) {
                    out.push(pair.lambda);
                }
            }
        }
        Ok(out)
    }
}

/// Deterministic unit elements from a Kronecker (additive irrational)
/// low-discrepancy sequence; `seed` offsets the start index.
pub fn unit_elements(algebra: &Algebra, count: usize, seed: u64) -> Vec<Element> {
    let dim = algebra.dim();
    let alphas: Vec<f64> = [2.0_f64, 3.0, 5.0, 7.0, 11.0, 13.0, 17.0, 19.0, 23.0, 29.0, 31.0, 37.0, 41.0, 43.0, 47.0, 53.0]
        .iter()
        .take(dim)
        .map(|p| p.sqrt().fract())
        .collect();
    let mut out = Vec::with_capacity(count);
    let offset = seed as f64;
    let mut k = 1.0;
    while out.len() < count {
        let mut coords: Vec<f64> = alphas
            .iter()
            .map(|a| 2.0 * ((k + offset) * a).fract() - 1.0)
            .collect();
        let norm: f64 = coords.iter().map(|c| c * c).sum::<f64>().sqrt();
        k += 1.0;
        if norm < 1e-3 {
            continue;
        }
        for c in coords.iter_mut() {
            *c /= norm;
        }
        out.push(
            algebra
                .from_coords(coords.into_iter().map(Scalar::F).collect())
                .unwrap(),
        );
    }
    out
}

/// Zero-in-spectrum criterion. When d = 0 this is just c = 0; otherwise
/// 0 is in the spectrum iff t -> d^{-1}(c t) - b^{-1}(a t) is singular,
/// and a kernel vector is the witness t.
pub fn zero_in_spectrum(b: &Matrix2) -> Result<(bool, Option<Element>)> {
    if b.b.is_zero() {
        return Err(CdError::BadCorner("nonzero"));
    }
    let algebra = b.algebra().clone();
    if b.d.is_zero() {
        let member = b.c.is_zero();
        let witness = member.then(|| algebra.one());
        return Ok((member, witness));
    }
    let m = b
        .d
        .inverse()?
        .left_mul_op()
        .matmul(&b.c.left_mul_op())
        .sub(&b.b.inverse()?.left_mul_op().matmul(&b.a.left_mul_op()));
    let tol = algebra.tol();
    if !m.is_singular(tol) {
        return Ok((false, None));
    }
    let witness = m
        .nullspace(tol)
        .into_iter()
        .next()
        .map(|coords| algebra.from_coords(coords))
        .transpose()?;
    Ok((true, witness))
}

/// Spectrum entry for an associative (quaternion) 2x2 matrix.
#[derive(Debug, Clone)]
pub enum AssocEigClass {
    Single(Element),
    /// lambda = a + b s over the whole sphere of s values; a few sampled
    /// representatives are included.
    Sphere {
        t: Scalar,
        n: Scalar,
        samples: Vec<Element>,
    },
}

impl AssocEigClass {
    pub fn representatives(&self) -> Vec<Element> {
        match self {
            AssocEigClass::Single(l) => vec![l.clone()],
            AssocEigClass::Sphere { samples, .. } => samples.clone(),
        }
    }
}

/// Left eigenvalues of a 2x2 matrix over an associative division algebra:
/// lambda = a + b s over the roots s of the associated quadratic, or
/// {a, d} when b = 0.
pub fn assoc_eig2x2(b: &Matrix2) -> Result<Vec<AssocEigClass>> {
    let algebra = b.algebra().clone();
    if algebra.dim() > 4 {
        return Err(CdError::DimensionTooLarge(algebra.dim()));
    }
    if b.b.is_zero() {
        return Ok(vec![
            AssocEigClass::Single(b.a.clone()),
            AssocEigClass::Single(b.d.clone()),
        ]);
    }
    let f = b.associated_quadratic();
    let classes = all_roots(&f)?;
    let mut out = Vec::new();
    for class in &classes {
        match &class.kind {
            SphereKind::Isolated(s) => {
                out.push(AssocEigClass::Single(b.a.add(&b.b.mul(s))));
            }
            SphereKind::Spherical => {
                let samples = sphere_points(
                    &algebra,
                    class.t.to_f64(),
                    class.n.to_f64(),
                    SPHERE_SAMPLES_PER_CLASS,
                )
                .into_iter()
                .map(|s| b.a.add(&b.b.mul(&s)))
                .collect();
                out.push(AssocEigClass::Sphere {
                    t: class.t.clone(),
                    n: class.n.clone(),
                    samples,
                });
            }
            SphereKind::NoRoot => {}
        }
    }
    Ok(out)
}

/// Ground-truth oracle: lambda is a left eigenvalue iff the block matrix
/// [[L_{a-lambda}, L_b], [L_c, L_{d-lambda}]] of the real representation
/// is singular.
pub fn spectrum_oracle(b: &Matrix2, lambda: &Element) -> bool {
    let algebra = b.algebra();
    let dim = algebra.dim();
    let blocks = [
        b.a.sub(lambda).left_mul_op(),
        b.b.left_mul_op(),
        b.c.left_mul_op(),
        b.d.sub(lambda).left_mul_op(),
    ];
    let mut m = Mat::zeros(2 * dim, 2 * dim, algebra.mode());
    for (bi, block) in blocks.iter().enumerate() {
        let (ro, co) = (dim * (bi / 2), dim * (bi % 2));
        for i in 0..dim {
            for j in 0..dim {
                m.set(ro + i, co + j, block.get(i, j).clone());
            }
        }
    }
    m.is_singular(algebra.tol())
}

/// Gaussian elimination over an associative division subalgebra. The
/// computed inverse is verified on both sides; failure of that check means
/// the entries do not associate.
pub fn invert_h_matrix(b: &Matrix2) -> Result<Matrix2> {
    let algebra = b.algebra().clone();
    let inv = if !b.a.is_zero() {
        let a_inv = b.a.inverse().map_err(|_| CdError::SingularMatrix)?;
        // Schur complement d - c a^{-1} b
        let s = b.d.sub(&b.c.mul(&a_inv.mul(&b.b)));
        if s.is_zero() {
            return Err(CdError::SingularMatrix);
        }
        let s_inv = s.inverse().map_err(|_| CdError::SingularMatrix)?;
        let ab = a_inv.mul(&b.b);
        let ca = b.c.mul(&a_inv);
        Matrix2 {
            a: a_inv.add(&ab.mul(&s_inv.mul(&ca))),
            b: ab.mul(&s_inv).neg(),
            c: s_inv.mul(&ca).neg(),
            d: s_inv,
        }
    } else {
        // [[0, b], [c, d]] is invertible iff b and c are
        if b.b.is_zero() || b.c.is_zero() {
            return Err(CdError::SingularMatrix);
        }
        let b_inv = b.b.inverse().map_err(|_| CdError::SingularMatrix)?;
        let c_inv = b.c.inverse().map_err(|_| CdError::SingularMatrix)?;
        Matrix2 {
            a: c_inv.mul(&b.d.mul(&b_inv)).neg(),
            b: c_inv.clone(),
            c: b_inv,
            d: algebra.zero(),
        }
    };
    let id = Matrix2::identity(&algebra);
    let tol = algebra.tol();
    let close = |m: &Matrix2, n: &Matrix2| {
        m.a.approx_eq(&n.a, tol) && m.b.approx_eq(&n.b, tol) && m.c.approx_eq(&n.c, tol) && m.d.approx_eq(&n.d, tol)
    };
    if !close(&b.matmul(&inv), &id) || !close(&inv.matmul(b), &id) {
        return Err(CdError::NotAssociative);
    }
    Ok(inv)
}
