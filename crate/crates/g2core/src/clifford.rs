//! The real Clifford algebra Cl(7) acting on Delta = R^8.
//!
//! The generators are fixed combinations of the skew matrices E_ij of so(8).
//! Both signs of E_ij satisfy the Clifford relations; the sign used here is
//! the one for which T = 2(e127 + e347 + e567) acts on psi1 with eigenvalue
//! -6, and with it phi acts on psi1 with eigenvalue -7.

use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::error::{AlgebraError, Result};
use crate::exact::{int, PolyMatrix, Poly, QMatrix, Rational};
use crate::exterior::{basis_blades, Blade, KForm};

/// E_ij carries this value at (i, j) and its negative at (j, i).
pub const E_SIGN: i64 = -1;

/// Signed E_ij terms making up e1..e7.
const GAMMA_TERMS: [[(usize, usize, i64); 4]; 7] = [
    [(1, 8, 1), (2, 7, 1), (3, 6, -1), (4, 5, -1)],
    [(1, 7, -1), (2, 8, 1), (3, 5, 1), (4, 6, -1)],
    [(1, 6, -1), (2, 5, 1), (3, 8, -1), (4, 7, 1)],
    [(1, 5, -1), (2, 6, -1), (3, 7, -1), (4, 8, -1)],
    [(1, 3, -1), (2, 4, -1), (5, 7, 1), (6, 8, 1)],
    [(1, 4, 1), (2, 3, -1), (5, 8, -1), (6, 7, 1)],
    [(1, 2, 1), (3, 4, -1), (5, 6, -1), (7, 8, 1)],
];

fn gamma_table() -> &'static [QMatrix; 7] {
    static TABLE: OnceLock<[QMatrix; 7]> = OnceLock::new();
    TABLE.get_or_init(|| {
        std::array::from_fn(|k| {
            let mut m = QMatrix::zeros(8, 8);
            for &(i, j, c) in &GAMMA_TERMS[k] {
                m.set(i - 1, j - 1, int(c * E_SIGN));
                m.set(j - 1, i - 1, int(-c * E_SIGN));
            }
            m
        })
    })
}

/// Rational matrix of e_i.
pub fn gamma_matrix(i: usize) -> Result<&'static QMatrix> {
    if !(1..=7).contains(&i) {
        return Err(AlgebraError::IndexOutOfRange { index: i });
    }
    Ok(&gamma_table()[i - 1])
}

/// Clifford product of the generators of a blade in increasing order.
pub fn blade_matrix(b: Blade) -> &'static QMatrix {
    static TABLE: OnceLock<Vec<QMatrix>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        (0u8..128)
            .map(|mask| {
                let mut m = QMatrix::identity(8);
                for i in Blade::from_mask(mask).indices() {
                    m = m.mul(&gamma_table()[i - 1]);
                }
                m
            })
            .collect()
    });
    &table[b.mask() as usize]
}

/// An 8x8 operator on spinors with polynomial entries.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinOperator(PolyMatrix);

impl SpinOperator {
    pub fn from_matrix(m: PolyMatrix) -> Result<Self> {
        if m.rows() != 8 || m.cols() != 8 {
            return Err(AlgebraError::Shape(format!("spin operator must be 8x8, got {}x{}", m.rows(), m.cols())));
        }
        Ok(SpinOperator(m))
    }

    pub fn identity() -> Self {
        SpinOperator(PolyMatrix::identity(8))
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.0
    }

    pub fn to_rational(&self) -> Result<QMatrix> {
        self.0.to_rational()
    }

    pub fn compose(&self, other: &SpinOperator) -> SpinOperator {
        SpinOperator(self.0.mul(&other.0))
    }

    pub fn add(&self, other: &SpinOperator) -> SpinOperator {
        SpinOperator(self.0.add(&other.0))
    }

    pub fn square(&self) -> SpinOperator {
        self.compose(self)
    }

    pub fn apply(&self, v: &Spinor) -> Vec<Poly> {
        let pv: Vec<Poly> = v.0.iter().map(|c| Poly::constant(c.clone())).collect();
        self.0.apply(&pv)
    }

    /// `Some(lambda)` when the operator is lambda times the identity.
    pub fn scalar_value(&self) -> Option<Poly> {
        self.0.scalar_value()
    }
}

impl fmt::Display for SpinOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A spinor with rational coordinates in the basis psi1..psi8.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Spinor(pub Vec<Rational>);

impl Spinor {
    /// Basis spinor psi_k (1-based).
    pub fn psi(k: usize) -> Result<Spinor> {
        if !(1..=8).contains(&k) {
            return Err(AlgebraError::IndexOutOfRange { index: k });
        }
        let mut v = vec![Rational::zero(); 8];
        v[k - 1] = int(1);
        Ok(Spinor(v))
    }

    pub fn from_vec(v: Vec<Rational>) -> Result<Spinor> {
        if v.len() != 8 {
            return Err(AlgebraError::Shape(format!("spinor needs 8 coordinates, got {}", v.len())));
        }
        Ok(Spinor(v))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }
}

/// The operator of e_i.
pub fn gamma(i: usize) -> Result<SpinOperator> {
    Ok(SpinOperator(gamma_matrix(i)?.to_poly()))
}

/// Linear extension of e_{i1..ik} -> gamma_{i1} ... gamma_{ik}.
pub fn clifford_action(form: &KForm) -> SpinOperator {
    let mut out = PolyMatrix::zeros(8, 8);
    for (b, c) in form.terms() {
        let m = blade_matrix(*b);
        for i in 0..8 {
            for j in 0..8 {
                let e = m.get(i, j);
                if !e.is_zero() {
                    let v = out.get(i, j) + &c.scale(e);
                    out.set(i, j, v);
                }
            }
        }
    }
    SpinOperator(out)
}

/// Clifford action of a form with rational coefficients.
pub fn clifford_action_rational(form: &KForm) -> Result<QMatrix> {
    clifford_action(form).to_rational()
}

/// `Some(lambda)` iff `op v = lambda v` exactly.
pub fn eigenvalue_on(op: &SpinOperator, v: &Spinor) -> Result<Option<Poly>> {
    let Some(k) = v.0.iter().position(|c| !c.is_zero()) else {
        return Err(AlgebraError::Shape("zero spinor has no eigenvalue".into()));
    };
    let image = op.apply(v);
    let lambda = image[k].scale(&(Rational::from_integer(1.into()) / v.0[k].clone()));
    let ok = image.iter().zip(&v.0).all(|(w, c)| *w == lambda.scale(c));
    Ok(ok.then_some(lambda))
}

/// Clifford monomial matrices for every blade of a grade, in basis order.
pub fn grade_matrices(k: usize) -> Vec<&'static QMatrix> {
    basis_blades(k).iter().map(|b| blade_matrix(*b)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::{parse_form, phi};

    fn lam(form: &str, k: usize) -> Option<Poly> {
        eigenvalue_on(&clifford_action(&parse_form(form).unwrap()), &Spinor::psi(k).unwrap()).unwrap()
    }

    #[test]
    fn clifford_relations() {
        let id = QMatrix::identity(8);
        for i in 1..=7 {
            for j in 1..=7 {
                let a = gamma_matrix(i).unwrap();
                let b = gamma_matrix(j).unwrap();
                let anti = a.mul(b).add(&b.mul(a));
                let expect = if i == j { id.scale(&int(-2)) } else { QMatrix::zeros(8, 8) };
                assert_eq!(anti, expect, "({i},{j})");
            }
        }
        assert!(gamma(0).is_err() && gamma(8).is_err());
    }

    #[test]
    fn both_signs_satisfy_relations() {
        // The generator sign is a genuine convention: negating every E_ij
        // negates every gamma_i, which preserves the relations.
        for i in 1..=7 {
            let g = gamma_matrix(i).unwrap().neg();
            assert_eq!(g.mul(&g), QMatrix::identity(8).scale(&int(-1)));
        }
    }

    #[test]
    fn e7_on_psi1() {
        let v = gamma(7).unwrap().apply(&Spinor::psi(1).unwrap());
        let nonzero: Vec<usize> = (0..8).filter(|&k| !v[k].is_zero()).collect();
        assert_eq!(nonzero, vec![1]);
        let c = v[1].as_constant().unwrap();
        assert!(c == int(1) || c == int(-1));
    }

    #[test]
    fn calibration_eigenvalues() {
        assert_eq!(lam("2*e127 + 2*e347 + 2*e567", 1), Some(Poly::int(-6)));
        assert_eq!(lam("2*e127 + 2*e347 + 2*e567", 2), Some(Poly::int(-6)));
        assert_eq!(lam("e135 - e146 - e236 - e245", 1), Some(Poly::int(-4)));
        assert_eq!(lam("e135 - e146 - e236 - e245", 2), Some(Poly::int(4)));
        let op = clifford_action(&phi());
        assert_eq!(eigenvalue_on(&op, &Spinor::psi(1).unwrap()).unwrap(), Some(Poly::int(-7)));
        assert_eq!(eigenvalue_on(&op, &Spinor::psi(2).unwrap()).unwrap(), Some(Poly::int(1)));
        assert_eq!(lam("e12", 1), None);
        assert!(eigenvalue_on(&op, &Spinor(vec![Rational::zero(); 8])).is_err());
    }

    #[test]
    fn volume_element_is_identity() {
        assert_eq!(*blade_matrix(Blade::FULL), QMatrix::identity(8));
    }

    #[test]
    fn three_forms_act_symmetrically() {
        for m in grade_matrices(3) {
            assert_eq!(m.transpose(), *m);
        }
        for m in grade_matrices(2) {
            assert_eq!(m.transpose(), m.neg());
        }
    }

    #[test]
    fn omega_violating_first_equation() {
        let op = clifford_action(&parse_form("e12 + e34 + e56").unwrap());
        let v = op.apply(&Spinor::psi(1).unwrap());
        assert!(v.iter().any(|c| !c.is_zero()));
        for k in 1..=8 {
            assert!(op.apply(&Spinor::psi(k).unwrap()).iter().any(|c| !c.is_zero()));
        }
        assert!(clifford_action(&KForm::zero(2)).matrix().is_zero());
    }
}
