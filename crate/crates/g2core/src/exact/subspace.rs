use num_traits::Zero;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::matrix::QMatrix;
use super::poly::fmt_rational;
use super::Rational;

/// Subspace of `Q^n` stored as a reduced row echelon basis.
///
/// Two subspaces are equal exactly when their stored bases are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearSubspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl LinearSubspace {
    pub fn zero(ambient: usize) -> Self {
        LinearSubspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_spanning(
            ambient,
            (0..ambient)
                .map(|i| {
                    let mut v = vec![Rational::zero(); ambient];
                    v[i] = super::int(1);
                    v
                })
                .collect(),
        )
    }

    pub fn from_spanning(ambient: usize, vectors: Vec<Vec<Rational>>) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        assert!(vectors.iter().all(|v| v.len() == ambient), "vector length mismatch");
        let m = QMatrix::from_rows(vectors).expect("consistent rows");
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        LinearSubspace { ambient, basis, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![Rational::zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in rebuilt.iter_mut().zip(b) {
                *x += c * y;
            }
        }
        (rebuilt == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient && self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &LinearSubspace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &LinearSubspace) -> LinearSubspace {
        let mut v = self.basis.clone();
        v.extend(other.basis.iter().cloned());
        Self::from_spanning(self.ambient, v)
    }

    /// Orthogonal complement for the standard inner product.
    pub fn orthogonal_complement(&self) -> LinearSubspace {
        if self.basis.is_empty() {
            return Self::full(self.ambient);
        }
        QMatrix::from_rows(self.basis.clone()).expect("rows").kernel()
    }

    pub fn intersect(&self, other: &LinearSubspace) -> LinearSubspace {
        self.orthogonal_complement().sum(&other.orthogonal_complement()).orthogonal_complement()
    }

    /// Matrix whose columns are the basis vectors.
    pub fn basis_matrix(&self) -> QMatrix {
        QMatrix::from_fn(self.ambient, self.dim(), |i, j| self.basis[j][i].clone())
    }
}

impl Serialize for LinearSubspace {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let basis: Vec<Vec<String>> =
            self.basis.iter().map(|v| v.iter().map(fmt_rational).collect()).collect();
        let mut st = s.serialize_struct("LinearSubspace", 3)?;
        st.serialize_field("ambient", &self.ambient)?;
        st.serialize_field("dim", &self.dim())?;
        st.serialize_field("basis", &basis)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn canonical_and_lattice_ops() {
        let a = LinearSubspace::from_spanning(3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = LinearSubspace::from_spanning(3, vec![v(&[1, 2, 1]), v(&[1, 0, -1])]);
        assert_eq!(a, b);
        let c = LinearSubspace::from_spanning(3, vec![v(&[1, 0, 0]), v(&[0, 0, 1])]);
        let i = a.intersect(&c);
        assert_eq!(i, LinearSubspace::from_spanning(3, vec![v(&[1, 0, -1])]));
        assert_eq!(a.sum(&c).dim(), 3);
        assert_eq!(a.orthogonal_complement(), LinearSubspace::from_spanning(3, vec![v(&[1, -1, 1])]));
        assert_eq!(a.coordinates(&v(&[2, 3, 1])), Some(v(&[2, 3])));
        assert!(!a.contains(&v(&[1, 0, 0])));
    }
}
