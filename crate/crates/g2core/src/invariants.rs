//! Invariant spinors, invariant 3-forms and equivariant maps of a
//! subalgebra of g2, all computed as exact kernels.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::exact::{LinearSubspace, QMatrix, Rational};
use crate::exterior::{basis_blades, lambda3_7_generators, lambda3_27_subspace, parse_form, phi, KForm};
use crate::g2lie::{derivation_action, spin_action, spinor_kernel, vector_action, Subalgebra, SubalgebraName};

/// Joint kernel of the spinor actions, i.e. the invariant spinors.
pub fn invariant_spinors(h: &Subalgebra) -> LinearSubspace {
    spinor_kernel(h.generators())
}

/// Matrix of the derivation induced by a 7x7 matrix on k-forms, in the
/// increasing-tuple basis.
pub fn form_action_matrix(m: &QMatrix, k: usize) -> QMatrix {
    let blades = basis_blades(k);
    let n = blades.len();
    let mut out = QMatrix::zeros(n, n);
    for j in 0..n {
        let image = derivation_action(m, &KForm::from_coords(k, &unit(n, j)));
        for (i, c) in image.to_coords().expect("rational").into_iter().enumerate() {
            if !c.is_zero() {
                out.set(i, j, c);
            }
        }
    }
    out
}

fn unit(n: usize, j: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[j] = Rational::from_integer(1.into());
    v
}

/// Invariant k-forms of h, as a subspace of the monomial coordinates.
pub fn invariant_forms(h: &Subalgebra, k: usize) -> LinearSubspace {
    let blocks: Vec<QMatrix> = h.vector_actions().iter().map(|m| form_action_matrix(m, k)).collect();
    let n = basis_blades(k).len();
    if blocks.is_empty() {
        return LinearSubspace::full(n);
    }
    QMatrix::vstack(&blocks).expect("square blocks").kernel()
}

/// Invariant 3-forms of h lying in the 27-dimensional summand, in the 35
/// monomial coordinates.
pub fn invariant_forms27(h: &Subalgebra) -> LinearSubspace {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for m in h.vector_actions() {
        let a = form_action_matrix(&m, 3);
        rows.extend((0..a.rows()).map(|i| a.row(i).to_vec()));
    }
    // Orthogonality to phi and to the seven generators of the 7-dim summand.
    rows.push(phi().to_coords().expect("rational"));
    rows.extend(lambda3_7_generators().iter().map(|g| g.to_coords().expect("rational")));
    let space = QMatrix::from_rows(rows).expect("35 columns").kernel();
    debug_assert!(space.is_subspace_of(lambda3_27_subspace()));
    space
}

/// Basis vectors of a subspace of k-form coordinates, as forms.
pub fn forms_of(space: &LinearSubspace, k: usize) -> Vec<KForm> {
    space.basis().iter().map(|v| KForm::from_coords(k, v)).collect()
}

/// The explicitly printed generators of the invariant 27-dimensional part,
/// where a closed form is known. Empty when none is printed (su2) or the
/// space is trivial (so3_ir).
pub fn printed_forms27(name: SubalgebraName) -> Vec<KForm> {
    let src: &[&str] = match name {
        SubalgebraName::Su3 => &["4*e127 - 3*e135 + 3*e146 + 3*e236 + 3*e245 + 4*e347 + 4*e567"],
        SubalgebraName::U2 => &[
            "2*e127 - e135 + e146 + e236 + e245 + 2*e347",
            "-e135 + e146 + e236 + e245 + 4*e567",
        ],
        SubalgebraName::Suc2 | SubalgebraName::R1Suc2 | SubalgebraName::Su2Suc2 => {
            &["e127 + e135 - e146 - e236 - e245 + e347 - 6*e567"]
        }
        SubalgebraName::So3 => &[
            "-2*e123 + e136 - e145 + e235 + e246 + 2*e356",
            "-2*e124 - e135 - e146 + e236 - e245 + 2*e456",
            "4*e127 - 3*e135 + 3*e146 + 3*e236 + 3*e245 + 4*e347 + 4*e567",
        ],
        SubalgebraName::Su2 | SubalgebraName::So3Ir => &[],
    };
    src.iter().map(|s| parse_form(s).expect("static form")).collect()
}

/// Span of a list of rational 3-forms in the 35 monomial coordinates.
pub fn span_of_forms(forms: &[KForm]) -> LinearSubspace {
    let n = forms.first().map_or(35, |f| basis_blades(f.grade()).len());
    LinearSubspace::from_spanning(n, forms.iter().map(|f| f.to_coords().expect("rational form")).collect())
}

/// Representation spaces on which a subalgebra acts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Module {
    Trivial,
    Vector,
    Spinor,
    /// k-forms on R^7.
    Forms(usize),
    /// The subalgebra itself under the adjoint action, in generator coordinates.
    Adjoint,
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Module::Trivial => f.write_str("R"),
            Module::Vector => f.write_str("R^7"),
            Module::Spinor => f.write_str("Delta"),
            Module::Forms(k) => write!(f, "Lambda^{k}"),
            Module::Adjoint => f.write_str("adjoint"),
        }
    }
}

/// Dimension and per-generator action matrices of a module.
pub fn module_matrices(h: &Subalgebra, module: Module) -> (usize, Vec<QMatrix>) {
    match module {
        Module::Trivial => (1, h.generators().iter().map(|_| QMatrix::zeros(1, 1)).collect()),
        Module::Vector => (7, h.vector_actions()),
        Module::Spinor => (8, h.generators().iter().map(spin_action).collect()),
        Module::Forms(k) => (
            basis_blades(k).len(),
            h.generators().iter().map(|g| form_action_matrix(&vector_action(g), k)).collect(),
        ),
        Module::Adjoint => {
            let c = h.structure_constants();
            let n = h.dim();
            (n, (0..n).map(|i| QMatrix::from_fn(n, n, |k, j| c[i][j][k].clone())).collect())
        }
    }
}

/// Equivariant linear maps `source -> target`, as a subspace of the
/// row-major coordinates of (target x source) matrices.
pub fn equivariant_maps(h: &Subalgebra, source: Module, target: Module) -> LinearSubspace {
    let (ds, src) = module_matrices(h, source);
    let (dt, tgt) = module_matrices(h, target);
    let mut rows = Vec::new();
    for (ms, mt) in src.iter().zip(&tgt) {
        for a in 0..dt {
            for b in 0..ds {
                let mut row = vec![Rational::zero(); dt * ds];
                for k in 0..dt {
                    let e = mt.get(a, k);
                    if !e.is_zero() {
                        row[k * ds + b] += e;
                    }
                }
                for k in 0..ds {
                    let e = ms.get(k, b);
                    if !e.is_zero() {
                        row[a * ds + k] -= e;
                    }
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return LinearSubspace::full(dt * ds);
    }
    QMatrix::from_rows(rows).expect("uniform rows").kernel()
}

pub fn equivariant_map_dim(h: &Subalgebra, source: Module, target: Module) -> usize {
    equivariant_maps(h, source, target).dim()
}

/// Summary of the invariant data of one subalgebra.
#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub name: String,
    pub spinors: LinearSubspace,
    pub forms27: LinearSubspace,
    /// Echelon generators of the invariant 27-dimensional part, as text.
    pub generators: Vec<String>,
    /// Whether the printed generators span the computed space (None when no
    /// generators are printed).
    pub printed_span_matches: Option<bool>,
}

pub fn invariant_report(name: SubalgebraName, h: &Subalgebra) -> InvariantReport {
    let spinors = invariant_spinors(h);
    let forms27 = invariant_forms27(h);
    let printed = printed_forms27(name);
    let printed_span_matches = (!printed.is_empty()).then(|| span_of_forms(&printed) == forms27);
    InvariantReport {
        name: name.to_string(),
        generators: forms_of(&forms27, 3).iter().map(ToString::to_string).collect(),
        spinors,
        forms27,
        printed_span_matches,
    }
}

/// Whether every generator of `small` lies in the span of `big`.
pub fn is_subalgebra_of(small: &Subalgebra, big: &Subalgebra) -> bool {
    let span = big.span();
    small.generators().iter().all(|g| span.contains(&g.coords()))
}

/// Coordinate blocks of R^7 along which the subalgebra is expected to split.
pub fn coordinate_blocks(name: SubalgebraName) -> Vec<Vec<usize>> {
    match name {
        SubalgebraName::Su3 => vec![vec![1, 2, 3, 4, 5, 6], vec![7]],
        SubalgebraName::U2 => vec![vec![1, 2, 3, 4], vec![5, 6], vec![7]],
        SubalgebraName::Su2 => vec![vec![1, 2, 3, 4], vec![5], vec![6], vec![7]],
        SubalgebraName::Suc2 | SubalgebraName::R1Suc2 | SubalgebraName::Su2Suc2 => {
            vec![vec![1, 2, 3, 4], vec![5, 6, 7]]
        }
        SubalgebraName::So3 => vec![vec![1, 2, 3, 4, 5, 6], vec![7]],
        SubalgebraName::So3Ir => vec![vec![1, 2, 3, 4, 5, 6, 7]],
    }
}

/// Span of the given standard basis vectors (1-based) in R^7.
pub fn coordinate_subspace(block: &[usize]) -> LinearSubspace {
    LinearSubspace::from_spanning(7, block.iter().map(|&i| unit(7, i - 1)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g2lie::catalog;

    const SPINOR_DIMS: [usize; 8] = [2, 2, 4, 1, 1, 1, 2, 1];
    const FORMS27_DIMS: [usize; 8] = [1, 2, 6, 1, 1, 1, 3, 0];

    #[test]
    fn dimension_tables() {
        for (i, n) in SubalgebraName::ALL.iter().enumerate() {
            let h = catalog(*n);
            assert_eq!(invariant_spinors(h).dim(), SPINOR_DIMS[i], "{n} spinors");
            assert_eq!(invariant_forms27(h).dim(), FORMS27_DIMS[i], "{n} forms");
        }
    }

    #[test]
    fn su2_fixes_first_four_spinors() {
        let expected = LinearSubspace::from_spanning(8, (0..4).map(|j| unit(8, j)).collect());
        assert_eq!(invariant_spinors(catalog(SubalgebraName::Su2)), expected);
    }

    #[test]
    fn printed_generators_span() {
        for n in SubalgebraName::ALL {
            let r = invariant_report(n, catalog(n));
            match n {
                SubalgebraName::Su2 | SubalgebraName::So3Ir => assert_eq!(r.printed_span_matches, None),
                _ => assert_eq!(r.printed_span_matches, Some(true), "{n}"),
            }
        }
    }

    #[test]
    fn form_action_matrix_matches_derivation() {
        let h = catalog(SubalgebraName::So3);
        let m = &h.vector_actions()[1];
        let a = form_action_matrix(m, 3);
        let f = parse_form("e123 - 2*e456 + e247").unwrap();
        let direct = derivation_action(m, &f).to_coords().unwrap();
        assert_eq!(a.apply(&f.to_coords().unwrap()), direct);
    }

    #[test]
    fn phi_is_invariant_everywhere() {
        let p = phi().to_coords().unwrap();
        for n in SubalgebraName::ALL {
            assert!(invariant_forms(catalog(n), 3).contains(&p));
        }
    }

    #[test]
    fn equivariant_counts() {
        let so3ir = catalog(SubalgebraName::So3Ir);
        assert_eq!(equivariant_map_dim(so3ir, Module::Forms(2), Module::Adjoint), 1);
        assert_eq!(equivariant_map_dim(so3ir, Module::Trivial, Module::Trivial), 1);
        let r1 = catalog(SubalgebraName::R1Suc2);
        assert_eq!(equivariant_map_dim(r1, Module::Forms(2), Module::Adjoint), 3);
        assert_eq!(equivariant_map_dim(catalog(SubalgebraName::So3), Module::Forms(2), Module::Adjoint), 5);
        // Schur: the vector module of so_ir(3) is irreducible of real type.
        assert_eq!(equivariant_map_dim(so3ir, Module::Vector, Module::Vector), 1);
        // R^7 = 2R^3 + R and Delta = 2R^3 + 2R under so(3): 4 + 2 maps.
        assert_eq!(equivariant_map_dim(catalog(SubalgebraName::So3), Module::Vector, Module::Spinor), 6);
    }

    #[test]
    fn monotone_chains() {
        use SubalgebraName::*;
        for chain in [[Su2, U2, Su3], [Suc2, R1Suc2, Su2Suc2]] {
            for w in chain.windows(2) {
                let (small, big) = (catalog(w[0]), catalog(w[1]));
                assert!(is_subalgebra_of(small, big));
                assert!(invariant_spinors(big).is_subspace_of(&invariant_spinors(small)));
                assert!(invariant_forms27(big).is_subspace_of(&invariant_forms27(small)));
            }
        }
    }

    #[test]
    fn stated_vector_splittings() {
        let commutants = [3, 5, 13, 5, 3, 2, 5, 1];
        let fixed = [1, 1, 3, 0, 0, 0, 1, 0];
        for (i, n) in SubalgebraName::ALL.iter().enumerate() {
            let h = catalog(*n);
            for block in coordinate_blocks(*n) {
                assert!(h.preserves(&coordinate_subspace(&block)), "{n} {block:?}");
            }
            assert_eq!(h.commutant_dim(), commutants[i], "{n}");
            assert_eq!(h.fixed_vectors().dim(), fixed[i], "{n}");
        }
    }
}
