//! Root finding over quaternion/octonion division algebras through the
//! companion polynomial: Durand-Kerner iteration for the scalar roots,
//! sphere classification (isolated / spherical / none), full linear
//! factorization, and the convex-hull distance used by the critical-point
//! counterexample.

use crate::algebra::{Algebra, Element};
use crate::error::{CdError, Result};
use crate::poly::{CdPoly, ScalarPoly};
use crate::scalar::{Scalar, ScalarMode};
use num_complex::Complex64;

pub const MAX_ITERATIONS: usize = 500;

#[derive(Debug, Clone)]
pub enum SphereKind {
    /// Single verified root on its quadratic-equivalence sphere.
    Isolated(Element),
    /// The whole sphere consists of roots.
    Spherical,
    /// The companion sphere carries no root of f.
    NoRoot,
}

#[derive(Debug, Clone)]
pub struct SphereClass {
    pub t: Scalar,
    pub n: Scalar,
    pub kind: SphereKind,
}

impl SphereClass {
    pub fn is_root(&self) -> bool {
        !matches!(self.kind, SphereKind::NoRoot)
    }
}

#[derive(Debug, Clone)]
pub struct Factorization {
    pub leading: Element,
    /// lambda_n .. lambda_1; the nested product is
    /// ((...(c (x - lambda_n)) ... )(x - lambda_2))(x - lambda_1).
    pub lambdas: Vec<Element>,
}

impl Factorization {
    pub fn reconstruct(&self) -> CdPoly {
        let a = self.leading.algebra().clone();
        let mut acc = CdPoly::new(a, vec![self.leading.clone()]);
        for lambda in &self.lambdas {
            acc = acc.mul_poly(&CdPoly::x_minus(lambda));
        }
        acc
    }
}

/// Roots of a real-coefficient polynomial, split into conjugate-pair
/// spheres (trace, norm) and real roots.
#[derive(Debug, Clone)]
pub struct CompanionRoots {
    pub spheres: Vec<(f64, f64)>,
    pub real_roots: Vec<f64>,
}

/// Durand-Kerner simultaneous iteration with deterministic initial points
/// (0.4 + 0.9i)^k. Converges when the largest step drops below `tol`.
pub fn durand_kerner(coeffs: &[Complex64], tol: f64, max_iter: usize) -> Result<Vec<Complex64>> {
    let deg = coeffs.len().checked_sub(1).ok_or(CdError::DegreeTooSmall(1))?;
    if deg < 1 {
        return Err(CdError::DegreeTooSmall(1));
    }
    let lead = coeffs[deg];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |z: Complex64| {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    let base = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (1..=deg).map(|k| base.powu(k as u32)).collect();
    for _ in 0..max_iter {
        let mut max_step = 0.0_f64;
        for i in 0..deg {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if j != i {
                    denom *= z[i] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                // coincident iterates; nudge
                denom = Complex64::new(f64::EPSILON, 0.0);
            }
            let step = eval(z[i]) / denom;
            z[i] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step <= tol {
            return Ok(z);
        }
    }
    Err(CdError::NoConvergence(max_iter))
}

/// All complex roots of a scalar polynomial, grouped into conjugate-pair
/// spheres `(t, n) = (2 Re z, |z|^2)` with real roots reported separately.
pub fn real_roots_complex(p: &ScalarPoly, tol: f64) -> Result<CompanionRoots> {
    let deg = p.degree().ok_or(CdError::DegreeTooSmall(1))?;
    if deg < 1 {
        return Err(CdError::DegreeTooSmall(1));
    }
    let coeffs = p.to_complex_coeffs();
    let roots = durand_kerner(&coeffs, tol, MAX_ITERATIONS)?;
    // residual check against the stated bound
    let scale: f64 = coeffs.iter().map(|c| c.norm()).fold(1.0, f64::max);
    for &z in &roots {
        let r = p.eval_complex(z).norm();
        let local = scale * (1.0 + z.norm()).powi(deg as i32);
        if r > tol.max(1e-12) * local * 100.0 {
            return Err(CdError::NoConvergence(MAX_ITERATIONS));
        }
    }
    let cluster = tol.max(1e-15).sqrt();
    let zscale: f64 = roots.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let mut spheres: Vec<(f64, f64)> = Vec::new();
    let mut real_roots: Vec<f64> = Vec::new();
    for &z in &roots {
        if z.im.abs() <= cluster * zscale {
            if !real_roots.iter().any(|&r| (r - z.re).abs() <= cluster * zscale) {
                real_roots.push(z.re);
            }
        } else if z.im > 0.0 {
            let (t, n) = (2.0 * z.re, z.norm_sqr());
            let dup = spheres
                .iter()
                .any(|&(t0, n0)| (t0 - t).abs() <= cluster * (1.0 + zscale * 2.0) && (n0 - n).abs() <= cluster * (1.0 + zscale * zscale));
            if !dup {
                spheres.push((t, n));
            }
        }
    }
    real_roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    spheres.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(CompanionRoots {
        spheres,
        real_roots,
    })
}

fn require_division_algebra(a: &Algebra) -> Result<()> {
    if a.dim() > 8 {
        return Err(CdError::DimensionTooLarge(a.dim()));
    }
    Ok(())
}

/// Deterministic points on the sphere {x : Tr(x) = t, N(x) = n}. The first
/// points lie along the basis directions of the pure-imaginary subspace,
/// then along fixed two-axis diagonals.
pub fn sphere_points(algebra: &Algebra, t: f64, n: f64, count: usize) -> Vec<Element> {
    let dim = algebra.dim();
    let re = t / 2.0;
    let r2 = n - re * re;
    if r2 < 0.0 {
        return Vec::new();
    }
    let r = r2.sqrt();
    let mut dirs: Vec<Vec<f64>> = Vec::new();
    for k in 1..dim {
        let mut d = vec![0.0; dim];
        d[k] = 1.0;
        dirs.push(d);
        let mut dn = vec![0.0; dim];
        dn[k] = -1.0;
        dirs.push(dn);
    }
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    for k in 1..dim {
        for j in (k + 1)..dim {
            let mut d = vec![0.0; dim];
            d[k] = inv_sqrt2;
            d[j] = inv_sqrt2;
            dirs.push(d);
            let mut dm = vec![0.0; dim];
            dm[k] = inv_sqrt2;
            dm[j] = -inv_sqrt2;
            dirs.push(dm);
        }
    }
    dirs.truncate(count);
    dirs.into_iter()
        .map(|d| {
            let mut coords = vec![Scalar::F(0.0); dim];
            coords[0] = Scalar::F(re);
            for (k, v) in d.iter().enumerate().skip(1) {
                coords[k] = Scalar::F(r * v);
            }
            algebra.from_coords(coords).unwrap()
        })
        .collect()
}

/// Classify the quadratic-equivalence sphere (t, n) against f: the remainder
/// a x + b of f modulo x^2 - t x + n decides everything. If a and b vanish
/// the whole sphere consists of roots; if a is invertible the only candidate
/// is lambda = -a^{-1} b, verified by evaluation and by trace/norm match.
pub fn classify_sphere(f: &CdPoly, t: &Scalar, n: &Scalar) -> Result<SphereClass> {
    let algebra = f.algebra();
    require_division_algebra(algebra)?;
    let (_, a, b) = f.divide_central_quadratic(t, n);
    let tol = algebra.tol();
    let scale = 1.0 + f.max_abs();
    // the same x100 slack as the evaluation checks below: (t, n) carry the
    // root-finder's error, which the remainder inherits
    let zero_tol = match algebra.mode() {
        ScalarMode::Rational => 0.0,
        ScalarMode::F64 => tol.max(1e-12) * 100.0,
    };
    let spherical_or_none = |a: &Element, b: &Element| SphereClass {
        t: t.clone(),
        n: n.clone(),
        kind: if b.approx_zero(zero_tol, scale) && a.approx_zero(zero_tol, scale) {
            SphereKind::Spherical
        } else {
            SphereKind::NoRoot
        },
    };
    if a.approx_zero(zero_tol, scale) {
        return Ok(spherical_or_none(&a, &b));
    }
    let a_inv = match a.inverse() {
        Ok(v) => v,
        // borderline-tiny a in float mode: no isolated candidate either way
        Err(CdError::IsotropicNorm) if algebra.mode() == ScalarMode::F64 => {
            return Ok(spherical_or_none(&a, &b));
        }
        Err(e) => return Err(e),
    };
    let candidate = a_inv.mul(&b).neg();
    let eval_scale = 1.0 + f.max_abs() * (1.0 + candidate.max_abs()).powi(f.degree().unwrap_or(0) as i32 + 1);
    let value = f.eval(&candidate)?;
    let residual_ok = match algebra.mode() {
        ScalarMode::Rational => value.is_zero(),
        ScalarMode::F64 => value.max_abs() <= tol.max(1e-12) * eval_scale * 100.0,
    };
    let tn_ok = match algebra.mode() {
        ScalarMode::Rational => &candidate.trace() == t && &candidate.norm() == n,
        ScalarMode::F64 => {
            let s = 1.0 + t.abs_f64().max(n.abs_f64()) + candidate.max_abs().powi(2);
            (candidate.trace().to_f64() - t.to_f64()).abs() <= tol.max(1e-12) * s * 100.0
                && (candidate.norm().to_f64() - n.to_f64()).abs() <= tol.max(1e-12) * s * 100.0
        }
    };
    let kind = if residual_ok && tn_ok {
        SphereKind::Isolated(candidate)
    } else {
        SphereKind::NoRoot
    };
    Ok(SphereClass {
        t: t.clone(),
        n: n.clone(),
        kind,
    })
}

/// All root spheres of f over a quaternion/octonion division algebra in
/// float mode: companion roots, then per-sphere classification. Real roots
/// of the companion are tested by direct evaluation.
pub fn all_roots(f: &CdPoly) -> Result<Vec<SphereClass>> {
    let algebra = f.algebra();
    require_division_algebra(algebra)?;
    if algebra.mode() != ScalarMode::F64 {
        return Err(CdError::FloatModeRequired);
    }
    if f.degree().is_none_or(|d| d < 1) {
        return Err(CdError::DegreeTooSmall(1));
    }
    let companion = f.companion()?;
    let tol = algebra.tol();
    let found = real_roots_complex(&companion, tol)?;
    let mut classes = Vec::new();
    for &(t, n) in &found.spheres {
        classes.push(classify_sphere(f, &Scalar::F(t), &Scalar::F(n))?);
    }
    for &r in &found.real_roots {
        let lambda = algebra.scalar_elem(Scalar::F(r));
        let value = f.eval(&lambda)?;
        let scale = 1.0 + f.max_abs() * (1.0 + r.abs()).powi(f.degree().unwrap() as i32);
        let kind = if value.max_abs() <= tol.max(1e-12) * scale * 100.0 {
            SphereKind::Isolated(lambda)
        } else {
            SphereKind::NoRoot
        };
        classes.push(SphereClass {
            t: Scalar::F(2.0 * r),
            n: Scalar::F(r * r),
            kind,
        });
    }
    Ok(classes)
}

fn pick_root(classes: &[SphereClass], algebra: &Algebra) -> Option<Element> {
    for c in classes {
        if let SphereKind::Isolated(lambda) = &c.kind {
            return Some(lambda.clone());
        }
    }
    for c in classes {
        if let SphereKind::Spherical = c.kind {
            let pts = sphere_points(algebra, c.t.to_f64(), c.n.to_f64(), 1);
            if let Some(p) = pts.into_iter().next() {
                return Some(p);
            }
        }
    }
    None
}

/// Full linear factorization: repeatedly find a root of the current
/// quotient and strip it with right division.
pub fn factorize(f: &CdPoly) -> Result<Factorization> {
    let algebra = f.algebra().clone();
    require_division_algebra(&algebra)?;
    if algebra.mode() != ScalarMode::F64 {
        return Err(CdError::FloatModeRequired);
    }
    let deg = f.degree().ok_or(CdError::DegreeTooSmall(1))?;
    let lead = f.coeff(deg);
    if lead.norm().abs_f64() <= algebra.tol() {
        return Err(CdError::IsotropicNorm);
    }
    let mut g = f.clone();
    let mut stripped: Vec<Element> = Vec::new();
    while g.degree().is_some_and(|d| d >= 1) {
        let classes = all_roots(&g)?;
        let lambda = pick_root(&classes, &algebra).ok_or(CdError::RootNotFound)?;
        let (q, r) = g.right_divide_linear(&lambda)?;
        let scale = 1.0 + g.max_abs() * (1.0 + lambda.max_abs()).powi(g.degree().unwrap() as i32);
        if !r.approx_zero(algebra.tol().max(1e-12) * 1e3, scale) {
            return Err(CdError::RootNotFound);
        }
        stripped.push(lambda);
        g = q;
    }
    let leading = g.coeff(0);
    stripped.reverse();
    Ok(Factorization {
        leading,
        lambdas: stripped,
    })
}

/// Euclidean distance from z to the convex hull of the given points
/// (0 when inside or on the boundary).
pub fn hull_distance(points: &[Complex64], z: Complex64) -> f64 {
    assert!(!points.is_empty(), "hull of an empty point set");
    let hull = convex_hull(points);
    match hull.len() {
        1 => (z - hull[0]).norm(),
        2 => segment_distance(hull[0], hull[1], z),
        _ => {
            // inside test: z on the same side of every edge
            let mut inside = true;
            for i in 0..hull.len() {
                let a = hull[i];
                let b = hull[(i + 1) % hull.len()];
                if cross(b - a, z - a) < 0.0 {
                    inside = false;
                    break;
                }
            }
            if inside {
                return 0.0;
            }
            (0..hull.len())
                .map(|i| segment_distance(hull[i], hull[(i + 1) % hull.len()], z))
                .fold(f64::INFINITY, f64::min)
        }
    }
}

fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

fn segment_distance(a: Complex64, b: Complex64, z: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (z - a).norm();
    }
    let t = ((z - a).re * ab.re + (z - a).im * ab.im) / len2;
    let t = t.clamp(0.0, 1.0);
    (z - (a + ab * t)).norm()
}

/// Andrew monotone chain; returns the hull in counter-clockwise order.
fn convex_hull(points: &[Complex64]) -> Vec<Complex64> {
    let mut pts: Vec<Complex64> = points.to_vec();
    pts.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
    pts.dedup_by(|a, b| (*a - *b).norm() == 0.0);
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Complex64> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 1] - lower[lower.len() - 2], p - lower[lower.len() - 1]) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Complex64> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 1] - upper[upper.len() - 2], p - upper[upper.len() - 1]) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        // collinear input
        return vec![pts[0], pts[pts.len() - 1]];
    }
    lower
}

/// The quaternion cubic f = (1/3) x^3 + x + e1 from the critical-point
/// counterexample, over the given (float, dim-4) algebra.
pub fn critical_point_cubic(h: &Algebra) -> Result<CdPoly> {
    let third = match h.mode() {
        ScalarMode::Rational => Scalar::from_ratio(1, 3, ScalarMode::Rational),
        ScalarMode::F64 => Scalar::F(1.0 / 3.0),
    };
    Ok(CdPoly::new(
        h.clone(),
        vec![h.basis(1)?, h.one(), h.zero(), h.scalar_elem(third)],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::seeded_rng;

    const TOL: f64 = 1e-9;

    fn hf() -> Algebra {
        Algebra::quaternions_f64(TOL)
    }

    fn of() -> Algebra {
        Algebra::octonions_f64(TOL)
    }

    #[test]
    fn durand_kerner_quartic() {
        // (x^2+1)(x^2-2x+5): roots +-i, 1+-2i
        let p = ScalarPoly::from_ints(ScalarMode::F64, &[5, -2, 6, -2, 1]);
        let found = real_roots_complex(&p, TOL).unwrap();
        assert!(found.real_roots.is_empty());
        assert_eq!(found.spheres.len(), 2);
        let (t0, n0) = found.spheres[0];
        let (t1, n1) = found.spheres[1];
        assert!((t0 - 0.0).abs() < 1e-7 && (n0 - 1.0).abs() < 1e-7);
        assert!((t1 - 2.0).abs() < 1e-7 && (n1 - 5.0).abs() < 1e-7);
    }

    #[test]
    fn companion_sphere_of_2x2_plus_2() {
        let p = ScalarPoly::from_ints(ScalarMode::F64, &[2, 0, 2]);
        let found = real_roots_complex(&p, TOL).unwrap();
        assert_eq!(found.spheres, vec![(0.0, 1.0)]);
    }

    #[test]
    fn classify_spherical_and_isolated() {
        let h = hf();
        let zero = Scalar::F(0.0);
        let one = Scalar::F(1.0);
        // x^2 + 1 is spherical on (0, 1)
        let f = ScalarPoly::from_ints(ScalarMode::F64, &[1, 0, 1]).lift(&h);
        assert!(matches!(
            classify_sphere(&f, &zero, &one).unwrap().kind,
            SphereKind::Spherical
        ));
        // x^2 - (e1+e2) x + e3 is isolated on (0, 1)
        let e1 = h.basis(1).unwrap();
        let e2 = h.basis(2).unwrap();
        let e3 = h.basis(3).unwrap();
        let g = CdPoly::new(h.clone(), vec![e3.clone(), e1.add(&e2).neg(), h.one()]);
        let class = classify_sphere(&g, &zero, &one).unwrap();
        let SphereKind::Isolated(lambda) = &class.kind else {
            panic!("expected isolated, got {:?}", class.kind);
        };
        let scale = 1.0 + g.max_abs();
        assert!(g.eval(lambda).unwrap().approx_zero(1e-8, scale));
        // x - e1 has the isolated root e1 on the sphere of its companion
        let p = CdPoly::x_minus(&h.basis(1).unwrap());
        let class = classify_sphere(&p, &zero, &one).unwrap();
        let SphereKind::Isolated(lambda) = &class.kind else {
            panic!("expected isolated root e1");
        };
        assert!(lambda.approx_eq(&h.basis(1).unwrap(), 1e-8));
        // dimension 16 is refused
        let s = crate::algebra::Algebra::sedenions();
        let fs = ScalarPoly::from_ints(ScalarMode::Rational, &[1, 0, 1]).lift(&s);
        let zq = Scalar::zero(ScalarMode::Rational);
        let oq = Scalar::one(ScalarMode::Rational);
        assert!(matches!(
            classify_sphere(&fs, &zq, &oq),
            Err(CdError::DimensionTooLarge(16))
        ));
    }

    #[test]
    fn cubic_critical_point_example() {
        let h = hf();
        let f = critical_point_cubic(&h).unwrap();
        let classes = all_roots(&f).unwrap();
        let isolated: Vec<&Element> = classes
            .iter()
            .filter_map(|c| match &c.kind {
                SphereKind::Isolated(l) => Some(l),
                _ => None,
            })
            .collect();
        assert_eq!(isolated.len(), 3);
        for l in &isolated {
            assert!(l.coord(2).abs_f64() <= 1e-8);
            assert!(l.coord(3).abs_f64() <= 1e-8);
        }
        assert!(!classes.iter().any(|c| matches!(c.kind, SphereKind::Spherical)));
        // f' = x^2 + 1 is spherical
        let fp = f.derivative();
        let class = classify_sphere(&fp, &Scalar::F(0.0), &Scalar::F(1.0)).unwrap();
        assert!(matches!(class.kind, SphereKind::Spherical));
        // all roots are complex, so their hull is a triangle inside the
        // complex plane; the spherical critical point j is orthogonal to
        // that plane, at distance sqrt(1 + d^2) from the hull where d is
        // the planar distance from j's projection (the origin)
        let pts: Vec<Complex64> = isolated
            .iter()
            .map(|l| Complex64::new(l.coord(0).to_f64(), l.coord(1).to_f64()))
            .collect();
        let planar = hull_distance(&pts, Complex64::new(0.0, 0.0));
        let dist_j = (1.0 + planar * planar).sqrt();
        assert!(dist_j >= 1.0);
    }

    #[test]
    fn roots_of_expanded_product() {
        let h = hf();
        let e1 = h.basis(1).unwrap();
        let e2 = h.basis(2).unwrap();
        // (x - e1)(x - e2): e2 is a root, e1 is not
        let f = CdPoly::x_minus(&e1).mul_poly(&CdPoly::x_minus(&e2));
        let scale = 1.0 + f.max_abs();
        assert!(f.eval(&e2).unwrap().approx_zero(1e-9, scale));
        assert!(!f.eval(&e1).unwrap().approx_zero(1e-6, scale));
        let classes = all_roots(&f).unwrap();
        let found_e2 = classes.iter().any(|c| match &c.kind {
            SphereKind::Isolated(l) => l.approx_eq(&e2, 1e-6),
            _ => false,
        });
        assert!(found_e2, "classes: {classes:?}");
    }

    #[test]
    fn spherical_class_over_octonions() {
        let o = of();
        let f = ScalarPoly::from_ints(ScalarMode::F64, &[1, 0, 1]).lift(&o);
        let classes = all_roots(&f).unwrap();
        assert_eq!(classes.len(), 1);
        assert!(matches!(classes[0].kind, SphereKind::Spherical));
        // every sampled sphere point is a root
        for p in sphere_points(&o, 0.0, 1.0, 20) {
            let scale = 1.0 + f.max_abs();
            assert!(f.eval(&p).unwrap().approx_zero(1e-9, scale));
        }
    }

    #[test]
    fn factorize_recovers_linear_and_quadratic() {
        let o = of();
        let mut rng = seeded_rng(21);
        for _ in 0..10 {
            let lambda = o.random_small(&mut rng);
            let a = o.random_small(&mut rng);
            // (x + lambda + a)(x - lambda)
            let left = CdPoly::new(o.clone(), vec![lambda.add(&a), o.one()]);
            let f = left.mul_poly(&CdPoly::x_minus(&lambda));
            let fac = factorize(&f).unwrap();
            assert_eq!(fac.lambdas.len(), 2);
            let back = fac.reconstruct();
            assert!(back.approx_eq(&f, 1e-6), "f = {:?}", f.coeffs());
        }
        // c (x - lambda)
        let c = o.from_ints(&[2, -1, 0, 1, 0, 0, 3, 0]).unwrap();
        let lambda = o.from_ints(&[1, 1, 0, 0, 0, 2, 0, 0]).unwrap();
        let f = CdPoly::x_minus(&lambda).left_scale(&c);
        let fac = factorize(&f).unwrap();
        assert_eq!(fac.lambdas.len(), 1);
        assert!(fac.leading.approx_eq(&c, 1e-6));
        assert!(fac.lambdas[0].approx_eq(&lambda, 1e-6));
    }

    #[test]
    fn factorize_random_monic_cubics() {
        let o = of();
        let mut rng = seeded_rng(22);
        for _ in 0..10 {
            let mut coeffs: Vec<Element> = (0..3).map(|_| o.random_small(&mut rng)).collect();
            coeffs.push(o.one());
            let f = CdPoly::new(o.clone(), coeffs);
            let fac = factorize(&f).unwrap();
            assert!(fac.reconstruct().approx_eq(&f, 1e-6));
        }
    }

    #[test]
    fn hull_distance_basics() {
        let z = Complex64::new(3.0, 4.0);
        assert!((hull_distance(&[Complex64::new(0.0, 0.0)], z) - 5.0).abs() < 1e-12);
        let square = [
            Complex64::new(1.0, 0.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, -1.0),
        ];
        assert_eq!(hull_distance(&square, Complex64::new(0.0, 0.0)), 0.0);
        assert!(hull_distance(&square, Complex64::new(2.0, 0.0)) > 0.9);
    }

    #[test]
    fn random_roots_verified() {
        let o = of();
        let mut rng = seeded_rng(23);
        for _ in 0..20 {
            let deg = rand::Rng::gen_range(&mut rng, 2..=4usize);
            let mut coeffs: Vec<Element> = (0..deg).map(|_| o.random_small(&mut rng)).collect();
            let mut lead = o.random_small(&mut rng);
            while lead.is_zero() {
                lead = o.random_small(&mut rng);
            }
            coeffs.push(lead);
            let f = CdPoly::new(o.clone(), coeffs);
            let classes = all_roots(&f).unwrap();
            assert!(classes.iter().any(SphereClass::is_root), "no root found");
            for c in &classes {
                if let SphereKind::Isolated(l) = &c.kind {
                    let scale = 1.0 + f.max_abs() * (1.0 + l.max_abs()).powi(deg as i32);
                    assert!(
                        f.eval(l).unwrap().max_abs() <= 1e-6 * scale,
                        "root residual too large"
                    );
                }
            }
        }
    }
}
