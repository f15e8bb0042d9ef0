//! Dense scalar matrices: the real/rational representation of multiplication
//! operators, with exact rank machinery (rational mode) and SVD-backed
//! singularity tests (float mode).

use crate::error::{CdError, Result};
use crate::scalar::{Scalar, ScalarMode};
use nalgebra::DMatrix;
use num_rational::BigRational;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    mode: ScalarMode,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize, mode: ScalarMode) -> Self {
        Mat {
            rows,
            cols,
            mode,
            data: vec![Scalar::zero(mode); rows * cols],
        }
    }

    pub fn identity(n: usize, mode: ScalarMode) -> Self {
        let mut m = Mat::zeros(n, n, mode);
        for i in 0..n {
            m.set(i, i, Scalar::one(mode));
        }
        m
    }

    pub fn from_columns(cols: &[Vec<Scalar>], mode: ScalarMode) -> Self {
        let rows = cols.first().map_or(0, |c| c.len());
        let mut m = Mat::zeros(rows, cols.len(), mode);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mode(&self) -> ScalarMode {
        self.mode
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Mat::zeros(self.rows, other.cols, self.mode);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Scalar::zero(self.mode);
                for k in 0..self.cols {
                    acc = &acc + &(self.get(i, k) * other.get(k, j));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = &*a + b;
        }
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = &*a - b;
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero(self.mode);
                for (j, vj) in v.iter().enumerate() {
                    acc = &acc + &(self.get(i, j) * vj);
                }
                acc
            })
            .collect()
    }

    fn to_rational(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| match self.get(i, j) {
                        Scalar::Q(q) => q.clone(),
                        Scalar::F(_) => unreachable!("rational path on float matrix"),
                    })
                    .collect()
            })
            .collect()
    }

    fn to_f64(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).to_f64())
    }

    pub fn singular_values(&self) -> Vec<f64> {
        let svd = self.to_f64().svd(false, false);
        let mut s: Vec<f64> = svd.singular_values.iter().copied().collect();
        s.sort_by(|a, b| b.partial_cmp(a).unwrap());
        s
    }

    /// Rank; in float mode singular values below `tol * sigma_max` count as zero.
    pub fn rank(&self, tol: f64) -> usize {
        match self.mode {
            ScalarMode::Rational => {
                let (rank, _, _) = rref(self.to_rational());
                rank
            }
            ScalarMode::F64 => {
                let s = self.singular_values();
                let smax = s.first().copied().unwrap_or(0.0);
                if smax == 0.0 {
                    return 0;
                }
                s.iter().filter(|&&v| v > tol * smax).count()
            }
        }
    }

    pub fn is_singular(&self, tol: f64) -> bool {
        assert_eq!(self.rows, self.cols, "singularity test needs a square matrix");
        self.rank(tol) < self.rows
    }

    /// Basis of the (numerical) nullspace as coordinate vectors.
    pub fn nullspace(&self, tol: f64) -> Vec<Vec<Scalar>> {
        match self.mode {
            ScalarMode::Rational => {
                let (_, reduced, pivots) = rref(self.to_rational());
                let pivot_of_col: Vec<Option<usize>> = {
                    let mut v = vec![None; self.cols];
                    for (r, &c) in pivots.iter().enumerate() {
                        v[c] = Some(r);
                    }
                    v
                };
                let mut basis = Vec::new();
                for free in 0..self.cols {
                    if pivot_of_col[free].is_some() {
                        continue;
                    }
                    let mut vec_ = vec![BigRational::zero(); self.cols];
                    vec_[free] = BigRational::from_integer(1.into());
                    for (r, &pc) in pivots.iter().enumerate() {
                        vec_[pc] = -reduced[r][free].clone();
                    }
                    basis.push(vec_.into_iter().map(Scalar::Q).collect());
                }
                basis
            }
            ScalarMode::F64 => {
                let svd = self.to_f64().svd(false, true);
                let vt = svd.v_t.expect("svd v_t");
                let s = &svd.singular_values;
                let smax = s.iter().cloned().fold(0.0_f64, f64::max);
                let mut basis = Vec::new();
                for k in 0..vt.nrows() {
                    let sk = if k < s.len() { s[k] } else { 0.0 };
                    if smax == 0.0 || sk <= tol * smax {
                        basis.push(vt.row(k).iter().map(|&v| Scalar::F(v)).collect());
                    }
                }
                basis
            }
        }
    }

    /// Solve `self * x = b`. Returns `None` when the system is inconsistent
    /// (exact rank comparison in rational mode, residual check in float mode).
    pub fn solve(&self, b: &[Scalar], tol: f64) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len());
        match self.mode {
            ScalarMode::Rational => {
                let mut aug = self.to_rational();
                for (i, row) in aug.iter_mut().enumerate() {
                    match &b[i] {
                        Scalar::Q(q) => row.push(q.clone()),
                        Scalar::F(_) => unreachable!(),
                    }
                }
                let (_, reduced, pivots) = rref(aug);
                // pivot in the augmented column means inconsistency
                if pivots.contains(&self.cols) {
                    return None;
                }
                let mut x = vec![BigRational::zero(); self.cols];
                for (r, &c) in pivots.iter().enumerate() {
                    x[c] = reduced[r][self.cols].clone();
                }
                Some(x.into_iter().map(Scalar::Q).collect())
            }
            ScalarMode::F64 => {
                let a = self.to_f64();
                let bv = nalgebra::DVector::from_fn(b.len(), |i, _| b[i].to_f64());
                let svd = a.clone().svd(true, true);
                let eps = if tol > 0.0 { tol } else { 1e-12 };
                let x = svd.solve(&bv, eps * svd.singular_values.max()).ok()?;
                let resid = (&a * &x - &bv).amax();
                let scale = 1.0 + bv.amax() + a.amax() * (1.0 + x.amax());
                if resid > tol.max(1e-12) * scale {
                    return None;
                }
                Some(x.iter().map(|&v| Scalar::F(v)).collect())
            }
        }
    }
}

/// Reduced row echelon form; returns (rank, reduced rows, pivot column per pivot row).
fn rref(mut m: Vec<Vec<BigRational>>) -> (usize, Vec<Vec<BigRational>>, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (mij, rj) in m[i].iter_mut().zip(&pivot_row) {
                    *mij = &*mij - &(rj * &factor);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (r, m, pivots)
}

pub fn check_same_mode(a: ScalarMode, b: ScalarMode) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(CdError::AlgebraMismatch)
    }
}
