//! Dense exact linear algebra over ℚ(i), plus a small interval-matrix
//! counterpart for numeric-mode candidates.

use crate::arith::{ComplexBox, GaussianRational};
use crate::{Error, Result};

/// Row-major dense matrix over ℚ(i).
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<GaussianRational>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = GaussianRational;
    fn index(&self, (i, j): (usize, usize)) -> &GaussianRational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussianRational {
        &mut self.data[i * self.cols + j]
    }
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![GaussianRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = GaussianRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn row(&self, i: usize) -> &[GaussianRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.data
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "matrix product size mismatch");
        Mat::from_fn(self.rows, o.cols, |i, j| {
            let mut acc = GaussianRational::zero();
            for k in 0..self.cols {
                if !self[(i, k)].is_zero() && !o[(k, j)].is_zero() {
                    acc += &(&self[(i, k)] * &o[(k, j)]);
                }
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = GaussianRational::zero();
                for k in 0..self.cols {
                    if !self[(i, k)].is_zero() && !v[k].is_zero() {
                        acc += &(&self[(i, k)] * &v[k]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, c: &GaussianRational) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * c)
    }

    pub fn add(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &o[(i, j)])
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &o[(i, j)])
    }

    pub fn neg(&self) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| -&self[(i, j)])
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            for j in 0..self.cols {
                let tmp = self[(p, j)].clone();
                self[(p, j)] = self[(r, j)].clone();
                self[(r, j)] = tmp;
            }
            let inv = self[(r, c)].inv().unwrap();
            for j in c..self.cols {
                self[(r, j)] = &self[(r, j)] * &inv;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        let sub = &self[(r, j)] * &f;
                        self[(i, j)] = &self[(i, j)] - &sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Canonical (RREF) basis of the right kernel, one row per basis vector.
    pub fn kernel_basis(&self) -> Mat {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Mat::zero(free.len(), self.cols);
        for (bi, &fc) in free.iter().enumerate() {
            basis[(bi, fc)] = GaussianRational::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                basis[(bi, pc)] = -&m[(ri, fc)];
            }
        }
        // already echelon up to column permutation; normalize to unique RREF
        basis.rref();
        basis
    }

    pub fn det(&self) -> GaussianRational {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = GaussianRational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return GaussianRational::zero();
            };
            if p != c {
                for j in 0..n {
                    let tmp = m[(p, j)].clone();
                    m[(p, j)] = m[(c, j)].clone();
                    m[(c, j)] = tmp;
                }
                det = -det;
            }
            det = &det * &m[(c, c)];
            let inv = m[(c, c)].inv().unwrap();
            for i in c + 1..n {
                if !m[(i, c)].is_zero() {
                    let f = &m[(i, c)] * &inv;
                    for j in c..n {
                        let sub = &m[(c, j)] * &f;
                        m[(i, j)] = &m[(i, j)] - &sub;
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = GaussianRational::one();
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| aug[(i, n + j)].clone()))
    }

    /// Solve A x = b. Returns a particular solution and a canonical kernel
    /// basis; None if the system is inconsistent.
    pub fn solve_full(&self, b: &[GaussianRational]) -> Option<(Vec<GaussianRational>, Mat)> {
        assert_eq!(self.rows, b.len());
        let mut aug = Mat::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![GaussianRational::zero(); self.cols];
        for (ri, &pc) in pivots.iter().enumerate() {
            x[pc] = aug[(ri, self.cols)].clone();
        }
        Some((x, self.kernel_basis()))
    }

    /// First nonzero entry in row-major order scaled to 1; the canonical
    /// representative of the projective class.
    pub fn canonical_projective(&self) -> Result<Mat> {
        let Some(first) = self.data.iter().find(|x| !x.is_zero()) else {
            return Err(Error::InvalidInput("zero matrix has no projective class".into()));
        };
        let inv = first.inv().unwrap();
        Ok(self.scale(&inv))
    }

    /// If o == c * self for a nonzero scalar c, return c.
    pub fn proportionality(&self, o: &Mat) -> Option<GaussianRational> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return None;
        }
        let mut ratio: Option<GaussianRational> = None;
        for (a, b) in self.data.iter().zip(o.data.iter()) {
            match (a.is_zero(), b.is_zero()) {
                (true, true) => continue,
                (true, false) | (false, true) => return None,
                (false, false) => {
                    let r = b / a;
                    match &ratio {
                        None => ratio = Some(r),
                        Some(prev) if *prev == r => {}
                        _ => return None,
                    }
                }
            }
        }
        ratio
    }

    pub fn projectively_equal(&self, o: &Mat) -> bool {
        self.proportionality(o).is_some()
    }

    /// True when every entry is real (zero imaginary part).
    pub fn is_real(&self) -> bool {
        self.data.iter().all(|x| x.is_real())
    }
}

/// Matrix of complex boxes for interval linear algebra.
#[derive(Clone, Debug)]
pub struct BoxMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<ComplexBox>,
}

impl std::ops::Index<(usize, usize)> for BoxMat {
    type Output = ComplexBox;
    fn index(&self, (i, j): (usize, usize)) -> &ComplexBox {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for BoxMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut ComplexBox {
        &mut self.data[i * self.cols + j]
    }
}

impl BoxMat {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> ComplexBox) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        BoxMat { rows, cols, data }
    }

    pub fn from_exact(m: &Mat, precision: u32) -> Self {
        BoxMat::from_fn(m.rows, m.cols, |i, j| ComplexBox::exact(&m[(i, j)], precision))
    }

    pub fn mul(&self, o: &BoxMat) -> BoxMat {
        assert_eq!(self.cols, o.rows);
        let prec = self.data.iter().map(|b| b.precision).min().unwrap_or(128);
        BoxMat::from_fn(self.rows, o.cols, |i, j| {
            let mut acc = ComplexBox::exact(&GaussianRational::zero(), prec);
            for k in 0..self.cols {
                acc = acc.add(&self[(i, k)].mul(&o[(k, j)]));
            }
            acc
        })
    }

    pub fn mid(&self) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| self[(i, j)].mid())
    }

    /// Scale by the reciprocal of the entry of largest midpoint norm, giving
    /// a representative comparable across boxes of one projective class.
    pub fn canonical_projective(&self) -> Option<BoxMat> {
        let mut best: Option<(usize, crate::arith::Rational)> = None;
        for (k, b) in self.data.iter().enumerate() {
            let n = b.mid().norm();
            if best.as_ref().map_or(true, |(_, bn)| n > *bn) {
                best = Some((k, n));
            }
        }
        let (k, _) = best?;
        let inv = self.data[k].recip()?;
        Some(BoxMat::from_fn(self.rows, self.cols, |i, j| self[(i, j)].mul(&inv)))
    }

    pub fn overlaps(&self, o: &BoxMat) -> bool {
        (self.rows, self.cols) == (o.rows, o.cols)
            && self.data.iter().zip(o.data.iter()).all(|(a, b)| a.overlaps(b))
    }

    pub fn entries(&self) -> &[ComplexBox] {
        &self.data
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn gi(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(rat(re, 1), rat(im, 1))
    }

    #[test]
    fn rref_kernel_roundtrip() {
        // rank-2 3x4 matrix, kernel of dimension 2
        let m = Mat::from_rows(vec![
            vec![gi(1, 0), gi(2, 0), gi(3, 0), gi(4, 0)],
            vec![gi(2, 0), gi(4, 0), gi(6, 0), gi(8, 0)],
            vec![gi(0, 1), gi(0, 0), gi(1, 0), gi(0, 0)],
        ]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.rows, 2);
        for bi in 0..k.rows {
            let v: Vec<GaussianRational> = k.row(bi).to_vec();
            assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn inverse_and_det() {
        let m = Mat::from_rows(vec![
            vec![gi(1, 1), gi(2, 0)],
            vec![gi(0, 3), gi(1, -1)],
        ]);
        let d = m.det();
        assert!(!d.is_zero());
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(2));
        let singular = Mat::from_rows(vec![
            vec![gi(1, 0), gi(2, 0)],
            vec![gi(2, 0), gi(4, 0)],
        ]);
        assert!(singular.det().is_zero());
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn solve_and_proportionality() {
        let m = Mat::from_rows(vec![
            vec![gi(1, 0), gi(1, 0)],
            vec![gi(1, 0), gi(-1, 0)],
        ]);
        let (x, null) = m.solve_full(&[gi(3, 0), gi(1, 0)]).unwrap();
        assert_eq!(x, vec![gi(2, 0), gi(1, 0)]);
        assert_eq!(null.rows, 0);
        let a = Mat::from_rows(vec![vec![gi(1, 0), gi(2, 0)]]);
        let b = Mat::from_rows(vec![vec![gi(0, 3), gi(0, 6)]]);
        assert_eq!(a.proportionality(&b), Some(gi(0, 3)));
        assert!(a.projectively_equal(&b));
    }
}
