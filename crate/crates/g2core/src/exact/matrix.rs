use std::fmt;

use num_traits::{One, Zero};

use super::poly::Poly;
use super::subspace::LinearSubspace;
use super::Rational;
use crate::error::{AlgebraError, Result};

/// Commutative ring of matrix entries.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(r: &Rational) -> Self;
}

impl Ring for Rational {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Ring for Poly {
    fn zero_elem() -> Self {
        Poly::zero()
    }
    fn one_elem() -> Self {
        Poly::one()
    }
    fn is_zero_elem(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        Poly::constant(r.clone())
    }
}

/// Dense row-major matrix over an exact ring.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type QMatrix = Matrix<Rational>;
pub type PolyMatrix = Matrix<Poly>;

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero_elem(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one_elem());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::Shape("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero_elem)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    fn check_same_shape(&self, o: &Self) -> Result<()> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(AlgebraError::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check_same_shape(o)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.check_same_shape(o)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(AlgebraError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero_elem() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero_elem() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    /// Sum of two same-shape matrices. Panics on a shape mismatch, which is a
    /// programming error for the fixed-size operators in this crate.
    pub fn add(&self, o: &Self) -> Self {
        self.try_add(o).expect("matrix shape mismatch")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.try_sub(o).expect("matrix shape mismatch")
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.try_mul(o).expect("matrix shape mismatch")
    }

    pub fn neg(&self) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(Ring::neg).collect() }
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero_elem();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero_elem() && !x.is_zero_elem() {
                        acc = acc.add(&a.mul(x));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> T {
        let mut acc = T::zero_elem();
        for i in 0..self.rows.min(self.cols) {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Returns `Some(c)` if the matrix equals `c * Id`.
    pub fn scalar_value(&self) -> Option<T> {
        if !self.is_square() {
            return None;
        }
        let c = if self.rows == 0 { T::zero_elem() } else { self.get(0, 0).clone() };
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.get(i, j);
                let ok = if i == j { *e == c } else { e.is_zero_elem() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// Stacks matrices vertically; all must have the same column count.
    pub fn vstack(blocks: &[Self]) -> Result<Self> {
        let cols = blocks.first().map_or(0, |m| m.cols);
        if blocks.iter().any(|m| m.cols != cols) {
            return Err(AlgebraError::Shape("vstack column mismatch".into()));
        }
        Ok(Matrix {
            rows: blocks.iter().map(|m| m.rows).sum(),
            cols,
            data: blocks.iter().flat_map(|m| m.data.iter().cloned()).collect(),
        })
    }
}

impl<T: Ring> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl PolyMatrix {
    /// Converts to a rational matrix, failing if any entry depends on a parameter.
    pub fn to_rational(&self) -> Result<QMatrix> {
        let mut data = Vec::with_capacity(self.data.len());
        for e in &self.data {
            data.push(e.as_constant().ok_or_else(|| AlgebraError::Parameterized(e.to_string()))?);
        }
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn substitute(&self, b: &std::collections::BTreeMap<super::Param, Poly>) -> PolyMatrix {
        self.map(|p| p.substitute(b))
    }
}

impl QMatrix {
    pub fn to_poly(&self) -> PolyMatrix {
        self.map(|r| Poly::constant(r.clone()))
    }

    pub fn from_ints(rows: &[&[i64]]) -> QMatrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| super::int(x)).collect()).collect())
            .expect("ragged integer rows")
    }

    /// Reduced row echelon form and pivot columns. The result is canonical.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            m.swap_rows(p, r);
            let inv = Rational::one() / m.get(r, c).clone();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space `{x : A x = 0}` as a canonical subspace.
    pub fn kernel(&self) -> LinearSubspace {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f).clone();
            }
            basis.push(v);
        }
        LinearSubspace::from_spanning(self.cols, basis)
    }

    /// Column span as a canonical subspace.
    pub fn image(&self) -> LinearSubspace {
        LinearSubspace::from_spanning(self.rows, (0..self.cols).map(|j| self.column(j)).collect())
    }

    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(AlgebraError::Shape("determinant of a non-square matrix".into()));
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else { return Ok(Rational::zero()) };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det *= &piv;
            for i in c + 1..n {
                let f = m.get(i, c) / &piv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m.get(i, j) - &f * m.get(c, j);
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = QMatrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(QMatrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// Solves `A x = b` where `b` has polynomial entries.
    ///
    /// Row operations only involve rational pivots, so the transformed
    /// right-hand side stays polynomial. Rows of `A` that reduce to zero give
    /// consistency conditions on the parameters in `b`.
    pub fn solve_affine(&self, rhs: &[Poly]) -> Result<AffineSolution> {
        if rhs.len() != self.rows {
            return Err(AlgebraError::Shape("right-hand side length".into()));
        }
        let mut m = self.clone();
        let mut b: Vec<Poly> = rhs.to_vec();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            m.swap_rows(p, r);
            b.swap(p, r);
            let inv = Rational::one() / m.get(r, c).clone();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            b[r] = b[r].scale(&inv);
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
                b[i] = &b[i] - &b[r].scale(&f);
            }
            pivots.push(c);
            r += 1;
        }
        let mut residuals: Vec<Poly> = b[r..].iter().filter(|p| !p.is_zero()).map(Poly::primitive).collect();
        residuals.sort_by(|x, y| x.to_string().cmp(&y.to_string()));
        residuals.dedup();
        let free = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
        Ok(AffineSolution { reduced: m, pivots, free, rhs: b[..r].to_vec(), residuals })
    }
}

/// Solution of `A x = b` in reduced form: for each pivot row `k`,
/// `x[pivots[k]] = rhs[k] - sum_f reduced[k][f] * x[f]` over free columns `f`.
#[derive(Debug, Clone)]
pub struct AffineSolution {
    pub reduced: QMatrix,
    pub pivots: Vec<usize>,
    pub free: Vec<usize>,
    pub rhs: Vec<Poly>,
    /// Nonzero consistency conditions (normalized, deduplicated).
    pub residuals: Vec<Poly>,
}

impl AffineSolution {
    pub fn is_consistent(&self) -> bool {
        self.residuals.is_empty()
    }

    /// Expression for each unknown, with free unknowns given by `free_values`.
    pub fn values(&self, free_values: &dyn Fn(usize) -> Poly) -> Vec<Poly> {
        let n = self.reduced.cols();
        let mut out = vec![Poly::zero(); n];
        for &f in &self.free {
            out[f] = free_values(f);
        }
        for (k, &p) in self.pivots.iter().enumerate() {
            let mut v = self.rhs[k].clone();
            for &f in &self.free {
                let c = self.reduced.get(k, f);
                if !c.is_zero() {
                    v = &v - &out[f].scale(c);
                }
            }
            out[p] = v;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, parse_poly, rat};

    #[test]
    fn rref_kernel_inverse() {
        let m = QMatrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        let v = &k.basis()[0];
        assert!(m.apply(v).iter().all(|x| x.is_zero()));
        let inv_src = QMatrix::from_ints(&[&[2, 1], &[1, 1]]);
        let inv = inv_src.inverse().unwrap();
        assert_eq!(inv_src.mul(&inv), QMatrix::identity(2));
        assert_eq!(inv_src.determinant().unwrap(), int(1));
        assert!(m.inverse().is_none());
        assert_eq!(m.determinant().unwrap(), int(0));
    }

    #[test]
    fn affine_solve_with_residual() {
        // x + y = a, x - y = b, 2x = c  =>  consistency c - a - b = 0.
        let m = QMatrix::from_ints(&[&[1, 1], &[1, -1], &[2, 0]]);
        let rhs: Vec<Poly> = ["a", "b", "c"].iter().map(|s| parse_poly(s).unwrap()).collect();
        let sol = m.solve_affine(&rhs).unwrap();
        assert_eq!(sol.residuals, vec![parse_poly("a + b - c").unwrap()]);
        let vals = sol.values(&|_| Poly::zero());
        assert_eq!(vals[0], parse_poly("a/2 + b/2").unwrap());
        assert_eq!(vals[1].scale(&rat(2, 1)), parse_poly("a - b").unwrap());
    }

    #[test]
    fn scalar_detection() {
        let p = parse_poly("3*a^2").unwrap();
        let m = PolyMatrix::identity(3).scale(&p);
        assert_eq!(m.scalar_value(), Some(p));
        let mut n = m.clone();
        n.set(0, 1, Poly::one());
        assert_eq!(n.scalar_value(), None);
        assert!(n.to_rational().is_err());
    }
}
