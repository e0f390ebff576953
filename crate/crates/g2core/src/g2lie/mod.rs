//! so(7) realized on 2-forms, the subalgebra g2 fixing phi, and the catalog
//! of non-abelian subalgebras of g2.

mod catalog;
mod so3_ir;

use std::fmt;

use num_traits::Zero;

use crate::clifford::{clifford_action_rational, Spinor};
use crate::error::{AlgebraError, Result};
use crate::exact::{int, rat, LinearSubspace, Poly, QMatrix, Rational};
use crate::exterior::{basis_blades, Blade, KForm};

pub use catalog::{catalog, generator, NamedGenerator, SubalgebraName};
pub use so3_ir::{so3_ir_construct, So3IrConstruction};

/// An element of so(7), stored as a 2-form with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement(KForm);

impl AlgebraElement {
    pub fn new(form: KForm) -> Result<Self> {
        if form.grade() != 2 {
            return Err(AlgebraError::GradeMismatch { expected: 2, found: form.grade() });
        }
        if !form.is_rational() {
            return Err(AlgebraError::Parameterized(form.to_string()));
        }
        Ok(AlgebraElement(form))
    }

    pub fn parse(src: &str) -> Result<Self> {
        Self::new(src.parse()?)
    }

    pub fn from_coords(coords: &[Rational]) -> Self {
        AlgebraElement(KForm::from_coords(2, coords))
    }

    pub fn form(&self) -> &KForm {
        &self.0
    }

    /// Coordinates over the 21 increasing pairs.
    pub fn coords(&self) -> Vec<Rational> {
        self.0.to_coords().expect("rational by construction")
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, o: &AlgebraElement) -> AlgebraElement {
        AlgebraElement(self.0.add(&o.0).expect("grade 2"))
    }

    pub fn scale(&self, c: &Rational) -> AlgebraElement {
        AlgebraElement(self.0.scale_rat(c))
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The skew endomorphism of R^7 induced by a 2-form: e_i -> w_ij e_j, that is
/// X -> X _| w. It equals one half of the Clifford commutator [w, X].
pub fn vector_action(w: &AlgebraElement) -> QMatrix {
    let mut m = QMatrix::zeros(7, 7);
    for (b, c) in w.0.terms() {
        let idx = b.indices();
        let (i, j) = (idx[0] - 1, idx[1] - 1);
        let c = c.as_constant().expect("rational");
        m.set(j, i, c.clone());
        m.set(i, j, -c);
    }
    m
}

/// Inverse of `vector_action` on skew matrices.
pub fn from_vector_action(m: &QMatrix) -> Result<AlgebraElement> {
    if m.rows() != 7 || m.cols() != 7 {
        return Err(AlgebraError::Shape("expected a 7x7 matrix".into()));
    }
    if m.transpose() != m.neg() {
        return Err(AlgebraError::Shape("matrix is not skew".into()));
    }
    let coords: Vec<Rational> = basis_blades(2)
        .iter()
        .map(|b| {
            let idx = b.indices();
            m.get(idx[1] - 1, idx[0] - 1).clone()
        })
        .collect();
    Ok(AlgebraElement::from_coords(&coords))
}

/// Lie bracket of so(7): the commutator of the vector actions.
pub fn bracket(x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    let vx = vector_action(x);
    let vy = vector_action(y);
    from_vector_action(&vx.commutator(&vy)).expect("commutator of skew matrices is skew")
}

/// Action on spinors compatible with the bracket: one half of the Clifford
/// action of the 2-form.
pub fn spin_action(w: &AlgebraElement) -> QMatrix {
    clifford_action_rational(&w.0).expect("rational").scale(&rat(1, 2))
}

/// Extension of an endomorphism of R^7 to forms as a derivation.
pub fn derivation_action(m: &QMatrix, alpha: &KForm) -> KForm {
    let mut out = KForm::zero(alpha.grade());
    for (b, c) in alpha.terms() {
        let idx = b.indices();
        for (pos, &i) in idx.iter().enumerate() {
            for k in 1..=7 {
                let entry = m.get(k - 1, i - 1);
                if entry.is_zero() {
                    continue;
                }
                let mut new_idx = idx.clone();
                new_idx[pos] = k;
                if let Some((sign, nb)) = Blade::from_indices(&new_idx).expect("valid indices") {
                    out.add_blade(nb, c.scale(&(entry * int(sign))));
                }
            }
        }
    }
    out
}

/// Induced action of a 2-form on forms of any degree.
pub fn form_action(w: &AlgebraElement, alpha: &KForm) -> KForm {
    derivation_action(&vector_action(w), alpha)
}

/// The seven linear equations cutting g2 out of so(7) = Lambda^2, as a 7x21
/// matrix over the increasing-pair coordinates.
pub fn g2_equations() -> QMatrix {
    const EQS: [[(&str, i64); 3]; 7] = [
        [("12", 1), ("34", 1), ("56", 1)],
        [("13", -1), ("24", 1), ("67", -1)],
        [("14", -1), ("23", -1), ("57", -1)],
        [("16", -1), ("25", -1), ("37", 1)],
        [("15", 1), ("26", -1), ("47", -1)],
        [("17", 1), ("36", 1), ("45", 1)],
        [("27", 1), ("35", 1), ("46", -1)],
    ];
    let mut m = QMatrix::zeros(7, 21);
    for (r, eq) in EQS.iter().enumerate() {
        let f = KForm::from_int_terms(eq);
        for (col, c) in f.to_coords().expect("rational").into_iter().enumerate() {
            if !c.is_zero() {
                m.set(r, col, c);
            }
        }
    }
    m
}

/// g2 as a 14-dimensional subspace of the 21 pair coordinates.
pub fn g2_basis() -> &'static LinearSubspace {
    static SPACE: std::sync::OnceLock<LinearSubspace> = std::sync::OnceLock::new();
    SPACE.get_or_init(|| g2_equations().kernel())
}

pub fn g2_elements() -> Vec<AlgebraElement> {
    g2_basis().basis().iter().map(|v| AlgebraElement::from_coords(v)).collect()
}

pub fn is_in_g2(w: &AlgebraElement) -> bool {
    g2_basis().contains(&w.coords())
}

/// A Lie subalgebra of g2 given by linearly independent generators.
#[derive(Debug, Clone, PartialEq)]
pub struct Subalgebra {
    name: String,
    generators: Vec<AlgebraElement>,
}

impl Subalgebra {
    /// Validates membership in g2, linear independence and closure.
    pub fn new(name: &str, generators: Vec<AlgebraElement>) -> Result<Self> {
        for g in &generators {
            if !is_in_g2(g) {
                return Err(AlgebraError::NotInG2(g.to_string()));
            }
        }
        let span = LinearSubspace::from_spanning(21, generators.iter().map(AlgebraElement::coords).collect());
        if span.dim() != generators.len() {
            return Err(AlgebraError::Dependent);
        }
        for (i, x) in generators.iter().enumerate() {
            for y in &generators[i + 1..] {
                let b = bracket(x, y);
                if !span.contains(&b.coords()) {
                    return Err(AlgebraError::NotClosed(format!("[{x}, {y}] = {b}")));
                }
            }
        }
        Ok(Subalgebra { name: name.to_string(), generators })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[AlgebraElement] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn span(&self) -> LinearSubspace {
        LinearSubspace::from_spanning(21, self.generators.iter().map(AlgebraElement::coords).collect())
    }

    /// Coordinates of an element of the subalgebra in the generator basis.
    pub fn generator_coords(&self, w: &AlgebraElement) -> Option<Vec<Rational>> {
        let cols: Vec<Vec<Rational>> = self.generators.iter().map(AlgebraElement::coords).collect();
        let a = QMatrix::from_fn(21, cols.len(), |i, j| cols[j][i].clone());
        let rhs: Vec<Poly> = w.coords().into_iter().map(Poly::constant).collect();
        let sol = a.solve_affine(&rhs).ok()?;
        if !sol.is_consistent() {
            return None;
        }
        Some(
            sol.values(&|_| Poly::zero())
                .into_iter()
                .map(|p| p.as_constant().expect("rational system"))
                .collect(),
        )
    }

    /// `c[i][j][k]` with `[g_i, g_j] = sum_k c[i][j][k] g_k`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<Rational>>> {
        self.generators
            .iter()
            .map(|x| {
                self.generators
                    .iter()
                    .map(|y| self.generator_coords(&bracket(x, y)).expect("closed by construction"))
                    .collect()
            })
            .collect()
    }

    pub fn vector_actions(&self) -> Vec<QMatrix> {
        self.generators.iter().map(vector_action).collect()
    }

    /// Joint kernel of the vector actions (the fixed vectors in R^7).
    pub fn fixed_vectors(&self) -> LinearSubspace {
        let blocks = self.vector_actions();
        if blocks.is_empty() {
            return LinearSubspace::full(7);
        }
        QMatrix::vstack(&blocks).expect("7 columns").kernel()
    }

    /// Dimension of the commutant of the vector representation.
    pub fn commutant_dim(&self) -> usize {
        commutant(&self.vector_actions()).dim()
    }

    /// Whether `subspace` of R^7 is invariant under all vector actions.
    pub fn preserves(&self, subspace: &LinearSubspace) -> bool {
        self.vector_actions()
            .iter()
            .all(|m| subspace.basis().iter().all(|v| subspace.contains(&m.apply(v))))
    }
}

/// Matrices commuting with every matrix in `mats` (as a subspace of n*n
/// row-major coordinates).
pub fn commutant(mats: &[QMatrix]) -> LinearSubspace {
    let n = mats.first().map_or(0, QMatrix::rows);
    let mut rows = Vec::new();
    for m in mats {
        // (X M - M X)_{ij} = sum_k X_ik M_kj - M_ik X_kj.
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![Rational::zero(); n * n];
                for k in 0..n {
                    row[i * n + k] += m.get(k, j);
                    row[k * n + j] -= m.get(i, k);
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return LinearSubspace::full(n * n);
    }
    QMatrix::from_rows(rows).expect("uniform rows").kernel()
}

/// Elements w of g2 with [w, h] inside h (or [w, h] = 0 when `centralize`).
fn stabilizing_subspace(h: &Subalgebra, centralize: bool) -> LinearSubspace {
    let g2 = g2_elements();
    let complement = if centralize { LinearSubspace::full(21) } else { h.span().orthogonal_complement() };
    let mut rows = Vec::new();
    for x in h.generators() {
        let images: Vec<Vec<Rational>> = g2.iter().map(|w| bracket(w, x).coords()).collect();
        for c in complement.basis() {
            let row = images
                .iter()
                .map(|img| img.iter().zip(c).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
                .collect();
            rows.push(row);
        }
    }
    let kernel = if rows.is_empty() {
        LinearSubspace::full(g2.len())
    } else {
        QMatrix::from_rows(rows).expect("rows").kernel()
    };
    let vecs = kernel
        .basis()
        .iter()
        .map(|t| {
            let mut v = vec![Rational::zero(); 21];
            for (coef, w) in t.iter().zip(&g2) {
                for (acc, x) in v.iter_mut().zip(w.coords()) {
                    *acc += coef * x;
                }
            }
            v
        })
        .collect();
    LinearSubspace::from_spanning(21, vecs)
}

/// Normalizer of h in g2, in the 21 pair coordinates.
pub fn normalizer_in_g2(h: &Subalgebra) -> LinearSubspace {
    stabilizing_subspace(h, false)
}

/// Centralizer of h in g2, in the 21 pair coordinates.
pub fn centralizer_in_g2(h: &Subalgebra) -> LinearSubspace {
    stabilizing_subspace(h, true)
}

/// Joint kernel of the spinor actions of h.
pub fn spinor_kernel(gens: &[AlgebraElement]) -> LinearSubspace {
    if gens.is_empty() {
        return LinearSubspace::full(8);
    }
    let blocks: Vec<QMatrix> = gens.iter().map(spin_action).collect();
    QMatrix::vstack(&blocks).expect("8 columns").kernel()
}

/// Whether a 2-form kills a given spinor under the Clifford action.
pub fn annihilates(w: &AlgebraElement, psi: &Spinor) -> bool {
    spin_action(w).apply(psi.coords()).iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::clifford_action;
    use crate::exterior::phi;

    fn el(s: &str) -> AlgebraElement {
        AlgebraElement::parse(s).unwrap()
    }

    #[test]
    fn vector_action_of_e12() {
        let m = vector_action(&el("e12"));
        assert_eq!(m.get(1, 0), &int(1));
        assert_eq!(m.get(0, 1), &int(-1));
        assert_eq!(from_vector_action(&m).unwrap(), el("e12"));
    }

    #[test]
    fn vector_action_is_half_clifford_commutator() {
        for w in g2_elements().iter().chain([el("e12"), el("e35 - 2*e47")].iter()) {
            let cw = clifford_action(w.form());
            for i in 1..=7 {
                let ci = clifford_action(&KForm::vector(i).unwrap());
                let comm = cw.compose(&ci).matrix().sub(ci.compose(&cw).matrix()).scale(&Poly::constant(rat(1, 2)));
                let image = w.form().contract(i).unwrap();
                // [w, e_i]/2 = e_i _| w as a vector in Cl(7).
                let expect = clifford_action(&image);
                assert_eq!(&comm, expect.matrix(), "{w} on e{i}");
                let col = vector_action(w).column(i - 1);
                assert_eq!(KForm::from_coords(1, &col), image);
            }
        }
    }

    #[test]
    fn g2_dimension_and_psi1() {
        assert_eq!(g2_basis().dim(), 14);
        let psi1 = Spinor::psi(1).unwrap();
        for w in g2_elements() {
            assert!(annihilates(&w, &psi1));
            assert!(form_action(&w, &phi()).is_zero());
        }
        assert!(is_in_g2(&el("e13 + e24")));
        assert!(!is_in_g2(&el("e13")));
    }

    #[test]
    fn g2_acts_without_fixed_vectors() {
        let g2 = Subalgebra::new("g2", g2_elements()).unwrap();
        assert_eq!(g2.fixed_vectors().dim(), 0);
        assert_eq!(g2.commutant_dim(), 1);
    }

    #[test]
    fn homomorphisms() {
        let els = g2_elements();
        for x in &els {
            for y in &els {
                let b = bracket(x, y);
                assert_eq!(vector_action(&b), vector_action(x).commutator(&vector_action(y)));
                assert_eq!(spin_action(&b), spin_action(x).commutator(&spin_action(y)));
            }
        }
    }

    #[test]
    fn form_action_reduces_to_vector_action() {
        let w = el("e12");
        let img = form_action(&w, &KForm::vector(1).unwrap());
        assert_eq!(img.to_coords().unwrap(), vector_action(&w).column(0));
    }

    #[test]
    fn subalgebra_validation() {
        assert!(matches!(Subalgebra::new("x", vec![el("e13")]), Err(AlgebraError::NotInG2(_))));
        let p1 = el("e13 + e24");
        assert!(matches!(Subalgebra::new("x", vec![p1.clone(), p1.clone()]), Err(AlgebraError::Dependent)));
        let p2 = el("e14 - e23");
        assert!(matches!(Subalgebra::new("x", vec![p1, p2]), Err(AlgebraError::NotClosed(_))));
    }
}
