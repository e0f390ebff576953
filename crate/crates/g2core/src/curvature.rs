//! Invariant curvature operators R: Lambda^2 -> h and the condition that
//! T^2 + R be a scalar in the Clifford algebra.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::clifford::clifford_action;
use crate::error::{AlgebraError, Result};
use crate::exact::{int, rat, AffineSolution, LinearSubspace, Param, Poly, PolyMatrix, QMatrix, Rational};
use crate::exterior::{basis_blades, parse_form, phi, KForm};
use crate::g2lie::{catalog, generator, AlgebraElement, NamedGenerator, Subalgebra, SubalgebraName};
use crate::invariants::{equivariant_maps, form_action_matrix, Module};
use crate::torsion::so3_t_abc;

/// One summand `coeff * (A (x) B)`: the map w -> coeff <A, w> B.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureTerm {
    pub a: KForm,
    pub b: AlgebraElement,
    pub coeff: Poly,
}

/// A curvature operator Lambda^2 -> h given as a sum of tensor products.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureAnsatz {
    pub name: String,
    pub params: Vec<Param>,
    pub terms: Vec<CurvatureTerm>,
}

impl fmt::Display for CurvatureAnsatz {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})*[{}]x[{}]", t.coeff, t.a, t.b)?;
        }
        Ok(())
    }
}

impl CurvatureAnsatz {
    pub fn new(name: &str, params: Vec<Param>, terms: Vec<CurvatureTerm>) -> Self {
        CurvatureAnsatz { name: name.into(), params, terms }
    }

    /// 21x21 matrix of the operator on Lambda^2 (target embedded in Lambda^2):
    /// entry (row w', column w) is <R(e_w), e_w'>.
    pub fn operator_matrix(&self) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(21, 21);
        for t in &self.terms {
            let a = t.a.poly_coords();
            let b = t.b.coords();
            for (i, bi) in b.iter().enumerate() {
                if bi.is_zero() {
                    continue;
                }
                for (j, aj) in a.iter().enumerate() {
                    if aj.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) + &(aj * &t.coeff).scale(bi);
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    /// Image of a 2-form.
    pub fn apply(&self, w: &KForm) -> KForm {
        let m = self.operator_matrix();
        KForm::from_poly_coords(2, &m.apply(&w.poly_coords()))
    }

    /// Realization in the Clifford algebra: sum coeff cl(A) cl(B).
    pub fn clifford_element(&self) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(8, 8);
        for t in &self.terms {
            let prod = clifford_action(&t.a).compose(&clifford_action(t.b.form()));
            out = out.add(&prod.matrix().scale(&t.coeff));
        }
        out
    }

    pub fn substitute(&self, b: &BTreeMap<Param, Poly>) -> CurvatureAnsatz {
        let terms = self
            .terms
            .iter()
            .map(|t| CurvatureTerm { a: t.a.clone(), b: t.b.clone(), coeff: t.coeff.substitute(b) })
            .filter(|t| !t.coeff.is_zero())
            .collect();
        let params = self.params.iter().copied().filter(|p| !b.contains_key(p)).collect();
        CurvatureAnsatz { name: self.name.clone(), params, terms }
    }

    /// The operator matrix at a unit vector in parameter space.
    fn basis_operator(&self, k: usize) -> QMatrix {
        let b: BTreeMap<Param, Poly> =
            self.params.iter().enumerate().map(|(i, p)| (*p, Poly::int((i == k) as i64))).collect();
        self.operator_matrix().substitute(&b).to_rational().expect("all parameters bound")
    }

    /// Whether the operator commutes with the action of every generator of h
    /// on Lambda^2, identically in the parameters.
    pub fn is_equivariant(&self, h: &Subalgebra) -> bool {
        let m = self.operator_matrix();
        h.vector_actions().iter().all(|g| {
            let rho = form_action_matrix(g, 2).to_poly();
            rho.mul(&m) == m.mul(&rho)
        })
    }

    /// Whether every B lies in h.
    pub fn lands_in(&self, h: &Subalgebra) -> bool {
        let span = h.span();
        self.terms.iter().all(|t| span.contains(&t.b.coords()))
    }

    /// The maps of the ansatz at each unit parameter vector, written in the
    /// layout of `equivariant_maps(h, Lambda^2, adjoint)`.
    pub fn as_equivariant_coords(&self, h: &Subalgebra) -> Result<Vec<Vec<Rational>>> {
        let gens: Vec<Vec<Rational>> = h.generators().iter().map(AlgebraElement::coords).collect();
        let g = QMatrix::from_fn(21, gens.len(), |i, j| gens[j][i].clone());
        (0..self.params.len())
            .map(|k| {
                let op = self.basis_operator(k);
                let mut out = Vec::with_capacity(gens.len() * 21);
                let mut cols = Vec::new();
                for w in 0..21 {
                    let rhs: Vec<Poly> = op.column(w).into_iter().map(Poly::constant).collect();
                    let sol = g.solve_affine(&rhs)?;
                    if !sol.is_consistent() {
                        return Err(AlgebraError::NotInvariant(format!("{} does not land in {}", self.name, h.name())));
                    }
                    cols.push(sol.values(&|_| Poly::zero()));
                }
                for row in 0..gens.len() {
                    for col in &cols {
                        out.push(col[row].as_constant().expect("rational"));
                    }
                }
                Ok(out)
            })
            .collect()
    }

    /// Linear conditions for pair symmetry <R(X^Y), U^V> = <R(U^V), X^Y>.
    pub fn pair_symmetry_conditions(&self) -> Vec<Poly> {
        let m = self.operator_matrix();
        let mut out = Vec::new();
        for i in 0..21 {
            for j in i + 1..21 {
                let d = m.get(i, j) - m.get(j, i);
                if !d.is_zero() {
                    out.push(d.primitive());
                }
            }
        }
        out.sort_by_key(|p| p.to_string());
        out.dedup();
        out
    }
}

/// Solves homogeneous linear conditions in `params`, eliminating the later
/// parameters in favor of the earlier ones.
pub fn eliminate_linear(params: &[Param], conditions: &[Poly]) -> Result<BTreeMap<Param, Poly>> {
    let rev: Vec<Param> = params.iter().rev().copied().collect();
    let mut rows = Vec::new();
    for c in conditions {
        let (coeffs, rest) = c
            .split_affine(&rev)
            .ok_or_else(|| AlgebraError::Shape(format!("{c} is not linear")))?;
        if !rest.is_zero() || coeffs.iter().any(|x| !x.is_constant()) {
            return Err(AlgebraError::Shape(format!("{c} is not homogeneous linear")));
        }
        rows.push(coeffs.into_iter().map(|x| x.as_constant().expect("constant")).collect());
    }
    let mut out = BTreeMap::new();
    if rows.is_empty() {
        return Ok(out);
    }
    let (r, pivots) = QMatrix::from_rows(rows)?.rref();
    for (k, &p) in pivots.iter().enumerate() {
        let mut v = Poly::zero();
        for (j, q) in rev.iter().enumerate() {
            if j != p && !pivots.contains(&j) && !r.get(k, j).is_zero() {
                v = &v - &Poly::var(*q).scale(r.get(k, j));
            }
        }
        out.insert(rev[p], v);
    }
    Ok(out)
}

/// Imposes pair symmetry; returns the reduced ansatz and the bindings used.
pub fn impose_pair_symmetry(ansatz: &CurvatureAnsatz) -> Result<(CurvatureAnsatz, BTreeMap<Param, Poly>)> {
    let bindings = eliminate_linear(&ansatz.params, &ansatz.pair_symmetry_conditions())?;
    Ok((ansatz.substitute(&bindings), bindings))
}

/// The equivariant maps Lambda^2 -> h as a subspace (see `equivariant_maps`).
pub fn invariant_curvature_space(h: &Subalgebra) -> LinearSubspace {
    equivariant_maps(h, Module::Forms(2), Module::Adjoint)
}

/// An ansatz with one fresh parameter per basis map of the equivariant space.
pub fn general_ansatz(h: &Subalgebra) -> Result<CurvatureAnsatz> {
    let space = invariant_curvature_space(h);
    let params: Vec<Param> = curvature_params().into_iter().take(space.dim()).collect();
    if params.len() < space.dim() {
        return Err(AlgebraError::Shape("not enough curvature parameters".into()));
    }
    let blades = basis_blades(2);
    let mut terms = Vec::new();
    for (v, p) in space.basis().iter().zip(&params) {
        for (k, g) in h.generators().iter().enumerate() {
            for (w, blade) in blades.iter().enumerate() {
                let c = &v[k * 21 + w];
                if !c.is_zero() {
                    terms.push(CurvatureTerm {
                        a: KForm::monomial(&blade.indices(), Poly::one())?,
                        b: g.clone(),
                        coeff: Poly::var(*p).scale(c),
                    });
                }
            }
        }
    }
    Ok(CurvatureAnsatz::new(h.name(), params, terms))
}

fn curvature_params() -> Vec<Param> {
    use Param::*;
    vec![X, Y, Z, U, V, P, Q, R]
}

/// `coeff * sum_ij (G^-1)_ij g_i (x) g_j`: the orthogonal projection onto h,
/// G being the Gram matrix of the generators.
pub fn projection_ansatz(h: &Subalgebra, coeff: Poly) -> Result<CurvatureAnsatz> {
    let gens = h.generators();
    let n = gens.len();
    let gram = QMatrix::from_fn(n, n, |i, j| {
        gens[i].form().inner(gens[j].form()).expect("grade 2").as_constant().expect("rational")
    });
    let inv = gram.inverse().ok_or_else(|| AlgebraError::Construction("degenerate Gram matrix".into()))?;
    let mut terms = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = inv.get(i, j);
            if !c.is_zero() {
                terms.push(CurvatureTerm { a: gens[i].form().clone(), b: gens[j].clone(), coeff: coeff.scale(c) });
            }
        }
    }
    Ok(CurvatureAnsatz::new(h.name(), coeff.params().into_iter().collect(), terms))
}

fn term(a: &str, b: NamedGenerator, coeff: Poly) -> CurvatureTerm {
    CurvatureTerm { a: parse_form(a).expect("static form"), b: generator(b), coeff }
}

fn sum_of_squares(gs: &[NamedGenerator], coeff: &Poly) -> Vec<CurvatureTerm> {
    gs.iter().map(|g| term(g.notation(), *g, coeff.clone())).collect()
}

/// The explicitly printed ansatz for each algebra where one is given.
pub fn printed_ansatz(name: SubalgebraName) -> Option<CurvatureAnsatz> {
    use NamedGenerator::*;
    use Param::*;
    let v = Poly::var;
    let terms = match name {
        SubalgebraName::So3 => {
            let (x, y, z, u, w) = (v(X), v(Y), v(Z), v(U), v(V));
            let two = |p: &Poly| p.scale(&int(2));
            vec![
                term("e12 - e56", S1, &x - &y),
                term("e16 + e25", S1, &x + &y),
                term("e26 - e15", S1, two(&z)),
                term("e37", S1, two(&u)),
                term("e47", S1, two(&w)),
                term("e13 + e35", S2, x.clone()),
                term("e14 + e23 + e36 + e45", S2, z.clone()),
                term("e17 + e57", S2, w.clone()),
                term("e24 + e46", S2, -&y),
                term("e27 + e67", S2, -&u),
                term("e13 - e24 - e35 + e46", S3, z),
                term("e45 - e14", S3, y),
                term("e57 - e17", S3, u),
                term("e36 - e23", S3, x),
                term("e67 - e27", S3, w),
            ]
        }
        SubalgebraName::Suc2 => sum_of_squares(&[Q1, Q2, Q3], &v(P)),
        SubalgebraName::R1Suc2 => {
            let (p, q) = (v(P), v(Q));
            vec![
                term("e34", Q3, p.clone()),
                term("e14", Q1, -&p),
                term("e23", Q1, -&p),
                term("e13", Q2, -&p),
                term("e24", Q2, p.clone()),
                term("e12", Q3, p),
                term("e56", Q3, q.clone()),
                term("e57", Q1, -&q),
                term("e67", Q2, -&q),
                term("e13 + e24", P1, v(R)),
            ]
        }
        SubalgebraName::Su2Suc2 => {
            let mut t = sum_of_squares(&[Q1, Q2, Q3], &v(P));
            t.extend(sum_of_squares(&[P1, P2, P3], &v(R)));
            t
        }
        _ => return None,
    };
    let params = match name {
        SubalgebraName::So3 => vec![X, Y, Z, U, V],
        SubalgebraName::Suc2 => vec![P],
        SubalgebraName::R1Suc2 => vec![P, Q, R],
        _ => vec![P, R],
    };
    Some(CurvatureAnsatz::new(name.as_str(), params, terms))
}

/// The torsion family paired with each printed curvature ansatz.
pub fn bianchi_torsion(name: SubalgebraName) -> Option<(KForm, Vec<Param>)> {
    let v = Poly::var;
    match name {
        SubalgebraName::So3 => Some((so3_t_abc().add(&phi().scale(&v(Param::D))).expect("grade 3"), vec![Param::A, Param::B, Param::C, Param::D])),
        SubalgebraName::Suc2 | SubalgebraName::R1Suc2 | SubalgebraName::Su2Suc2 => Some((
            phi().scale(&v(Param::A)).add(&parse_form("e567").expect("static").scale(&v(Param::B))).expect("grade 3"),
            vec![Param::A, Param::B],
        )),
        _ => None,
    }
}

/// The scalar condition on cl(T)^2 + R.
#[derive(Debug, Clone, PartialEq)]
pub struct BianchiSystem {
    /// Off-diagonal entries and diagonal differences; all must vanish.
    pub constraints: Vec<Poly>,
    /// The (0,0) entry, equal to the scalar on the solution locus.
    pub lambda: Poly,
}

pub fn bianchi_scalar_condition(t: &KForm, r: &CurvatureAnsatz) -> BianchiSystem {
    let m = clifford_action(t).square().matrix().add(&r.clifford_element());
    let d0 = m.get(0, 0).clone();
    let mut constraints = Vec::new();
    for i in 0..8 {
        for j in 0..8 {
            let e = if i == j { m.get(i, i) - &d0 } else { m.get(i, j).clone() };
            if !e.is_zero() {
                constraints.push(e.primitive());
            }
        }
    }
    constraints.sort_by_key(|p| p.to_string());
    constraints.dedup();
    BianchiSystem { constraints, lambda: d0 }
}

/// Exact solution for the curvature parameters, which enter linearly.
#[derive(Debug, Clone)]
pub struct BianchiSolution {
    /// Curvature parameter -> expression in the torsion parameters (and in
    /// any curvature parameter left free).
    pub bindings: BTreeMap<Param, Poly>,
    /// Conditions on the torsion parameters alone.
    pub residuals: Vec<Poly>,
    pub lambda: Poly,
}

pub fn solve_bianchi(t: &KForm, r: &CurvatureAnsatz) -> Result<BianchiSolution> {
    let sys = bianchi_scalar_condition(t, r);
    let vars = &r.params;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for c in &sys.constraints {
        let (coeffs, rest) = c
            .split_affine(vars)
            .ok_or_else(|| AlgebraError::Shape(format!("{c} is not affine in the curvature parameters")))?;
        if coeffs.iter().any(|x| !x.is_constant()) {
            return Err(AlgebraError::Shape(format!("{c} mixes torsion and curvature parameters")));
        }
        rows.push(coeffs.into_iter().map(|x| x.as_constant().expect("constant")).collect());
        rhs.push(-rest);
    }
    let sol: AffineSolution = if rows.is_empty() {
        QMatrix::zeros(0, vars.len()).solve_affine(&[])?
    } else {
        QMatrix::from_rows(rows)?.solve_affine(&rhs)?
    };
    let vals = sol.values(&|f| Poly::var(vars[f]));
    let bindings: BTreeMap<Param, Poly> =
        sol.pivots.iter().map(|&p| (vars[p], vals[p].clone())).collect();
    let lambda = sys.lambda.substitute(&bindings);
    Ok(BianchiSolution { bindings, residuals: sol.residuals, lambda })
}

/// A named solution branch: simultaneous bindings of torsion and curvature
/// parameters.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Branch {
    pub label: String,
    #[serde(serialize_with = "ser_bindings")]
    pub bindings: BTreeMap<Param, Poly>,
}

fn ser_bindings<S: serde::Serializer>(b: &BTreeMap<Param, Poly>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(b.iter().map(|(k, v)| (k.name(), v.to_string())))
}

impl Branch {
    pub fn new(label: &str, bindings: &[(Param, &str)]) -> Self {
        Branch {
            label: label.into(),
            bindings: bindings.iter().map(|(p, s)| (*p, s.parse().expect("static polynomial"))).collect(),
        }
    }
}

/// Outcome of substituting a branch into the scalar condition.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchCheck {
    pub label: String,
    pub holds: bool,
    /// Remaining nonzero constraints after substitution.
    pub failures: Vec<Poly>,
    pub lambda: Poly,
}

pub fn check_branch(t: &KForm, r: &CurvatureAnsatz, branch: &Branch) -> BranchCheck {
    let tb = t.substitute(&branch.bindings);
    let rb = r.substitute(&branch.bindings);
    let sys = bianchi_scalar_condition(&tb, &rb);
    BranchCheck { label: branch.label.clone(), holds: sys.constraints.is_empty(), failures: sys.constraints, lambda: sys.lambda }
}

/// The printed solution branches (after pair symmetry).
pub fn printed_branches(name: SubalgebraName) -> Vec<Branch> {
    use Param::*;
    match name {
        SubalgebraName::So3 => vec![
            Branch::new("d = -4c branch", &[(D, "-4*c"), (X, "a^2 + b^2 - 49*c^2")]),
            Branch::new("d = 3c branch", &[(A, "0"), (B, "0"), (D, "3*c"), (X, "-49/2*c^2")]),
        ],
        SubalgebraName::Suc2 => vec![
            Branch::new("a = 0 branch", &[(A, "0"), (P, "0")]),
            Branch::new("5a + b = 0 branch", &[(B, "-5*a"), (P, "a^2")]),
        ],
        SubalgebraName::R1Suc2 => vec![Branch::new("printed branch", &[(P, "-1/2*a*(3*a + b)"), (R, "3/2*a*(5*a + b)")])],
        SubalgebraName::Su2Suc2 => vec![Branch::new("printed branch", &[(R, "-1/2*a*(5*a + b)"), (P, "-1/2*a*(3*a + b)")])],
        _ => Vec::new(),
    }
}

/// The ansatz entering the scalar condition: printed, then pair-symmetrized.
pub fn symmetric_ansatz(name: SubalgebraName) -> Result<Option<CurvatureAnsatz>> {
    match printed_ansatz(name) {
        Some(a) => Ok(Some(impose_pair_symmetry(&a)?.0)),
        None => Ok(None),
    }
}

/// Data of the Stiefel-type branch at a given c.
#[derive(Debug, Clone, PartialEq)]
pub struct StiefelCheck {
    pub torsion_simplifies: bool,
    pub curvature_matches: bool,
    pub scalar_condition_holds: bool,
    pub lambda: Poly,
}

/// At a = b = 0, d = 3c: T = 7c (e12 + e34 + e56) ^ e7 and
/// R = -49/2 c^2 (2 S1 (x) S1 + S2 (x) S2 + S3 (x) S3).
pub fn stiefel_curvature_check() -> Result<StiefelCheck> {
    use Param::*;
    let (t, _) = bianchi_torsion(SubalgebraName::So3).expect("so3 torsion");
    let branch = &printed_branches(SubalgebraName::So3)[1];
    let tb = t.substitute(&branch.bindings);
    let c = Poly::var(C);
    let expect_t = parse_form("e127 + e347 + e567")?.scale(&c.scale(&int(7)));
    let r = symmetric_ansatz(SubalgebraName::So3)?.expect("so3 ansatz");
    let rb = r.substitute(&branch.bindings);
    let coeff = c.pow(2).scale(&rat(-49, 2));
    let expect_r = CurvatureAnsatz::new(
        "so3",
        vec![],
        vec![
            term(NamedGenerator::S1.notation(), NamedGenerator::S1, coeff.scale(&int(2))),
            term(NamedGenerator::S2.notation(), NamedGenerator::S2, coeff.clone()),
            term(NamedGenerator::S3.notation(), NamedGenerator::S3, coeff),
        ],
    );
    let check = check_branch(&t, &r, branch);
    Ok(StiefelCheck {
        torsion_simplifies: tb == expect_t,
        curvature_matches: rb.operator_matrix() == expect_r.operator_matrix(),
        scalar_condition_holds: check.holds,
        lambda: check.lambda,
    })
}

/// Random torsion points off every printed branch: how many were sampled
/// and how many nevertheless admit a curvature solution.
pub fn refute_off_branch(name: SubalgebraName, samples: usize, seed: u64) -> Result<(usize, usize)> {
    use rand::{Rng, SeedableRng};
    let (t, tparams) = bianchi_torsion(name).ok_or_else(|| AlgebraError::UnknownName(name.to_string()))?;
    let r = symmetric_ansatz(name)?.ok_or_else(|| AlgebraError::UnknownName(name.to_string()))?;
    let sol = solve_bianchi(&t, &r)?;
    let branches = printed_branches(name);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let (mut taken, mut admitted, mut attempts) = (0, 0, 0);
    while taken < samples && attempts < 20 * samples {
        attempts += 1;
        let point: BTreeMap<Param, Rational> =
            tparams.iter().map(|p| (*p, rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)))).collect();
        let on_branch = branches.iter().any(|b| {
            b.bindings.iter().filter(|(p, _)| tparams.contains(p)).all(|(p, v)| v.eval_full(&point).as_ref() == point.get(p))
        });
        if on_branch {
            continue;
        }
        taken += 1;
        if sol.residuals.iter().all(|q| q.eval(&point).is_zero()) {
            admitted += 1;
        }
    }
    Ok((taken, admitted))
}

/// The catalog algebra together with its printed ansatz, for convenience.
pub fn ansatz_for(name: SubalgebraName) -> Option<(&'static Subalgebra, CurvatureAnsatz)> {
    printed_ansatz(name).map(|a| (catalog(name), a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn equivariant_dimensions() {
        let dims: Vec<usize> = SubalgebraName::ALL.iter().map(|n| invariant_curvature_space(catalog(*n)).dim()).collect();
        // su3, u2, su2 are recorded here as computed values.
        assert_eq!(&dims[3..], &[2, 3, 3, 5, 1]);
    }

    #[test]
    fn printed_ansatz_spans_and_is_equivariant() {
        for n in [SubalgebraName::So3, SubalgebraName::Suc2, SubalgebraName::R1Suc2, SubalgebraName::Su2Suc2] {
            let (h, a) = ansatz_for(n).unwrap();
            assert!(a.lands_in(h), "{n}");
            assert!(a.is_equivariant(h), "{n}");
            let printed = LinearSubspace::from_spanning(h.dim() * 21, a.as_equivariant_coords(h).unwrap());
            let space = invariant_curvature_space(h);
            assert!(printed.is_subspace_of(&space), "{n}");
            assert_eq!(printed.dim(), a.params.len(), "{n}");
            if matches!(n, SubalgebraName::So3 | SubalgebraName::R1Suc2) {
                assert_eq!(printed, space, "{n}");
            }
        }
    }

    #[test]
    fn pair_symmetry_so3() {
        let a = printed_ansatz(SubalgebraName::So3).unwrap();
        let (red, b) = impose_pair_symmetry(&a).unwrap();
        assert_eq!(b.get(&Param::U), Some(&Poly::zero()));
        assert_eq!(b.get(&Param::V), Some(&Poly::zero()));
        assert_eq!(b.get(&Param::Z), Some(&Poly::zero()));
        assert_eq!(b.get(&Param::Y), Some(&p("-x")));
        let proj = projection_ansatz(catalog(SubalgebraName::So3), p("4*x")).unwrap();
        assert_eq!(red.operator_matrix(), proj.operator_matrix());
        // Idempotent on symmetric input.
        let (again, b2) = impose_pair_symmetry(&red).unwrap();
        assert!(b2.is_empty());
        assert_eq!(again, red);
    }

    #[test]
    fn pair_symmetry_r1_suc2() {
        let (red, b) = impose_pair_symmetry(&printed_ansatz(SubalgebraName::R1Suc2).unwrap()).unwrap();
        assert_eq!(b.get(&Param::Q), Some(&p("-2*p")));
        let h = catalog(SubalgebraName::Suc2);
        let mut want = projection_ansatz(h, p("6*p")).unwrap();
        want.terms.push(term("e13 + e24", NamedGenerator::P1, p("r")));
        assert_eq!(red.operator_matrix(), want.operator_matrix());
    }

    #[test]
    fn suc2_branches() {
        let (t, _) = bianchi_torsion(SubalgebraName::Suc2).unwrap();
        let r = symmetric_ansatz(SubalgebraName::Suc2).unwrap().unwrap();
        for b in printed_branches(SubalgebraName::Suc2) {
            assert!(check_branch(&t, &r, &b).holds, "{}", b.label);
        }
        let sol = solve_bianchi(&t, &r).unwrap();
        // One pivot row gives p = -a(3a + b)/2, which is a^2 on b = -5a.
        let on_branch = sol.bindings[&Param::P].substitute(&[(Param::B, p("-5*a"))].into_iter().collect());
        assert_eq!(on_branch, p("a^2"));
        // Residual locus a (5a + b) = 0, up to normalization.
        assert!(!sol.residuals.is_empty());
        for res in &sol.residuals {
            assert!(res.substitute(&[(Param::B, p("-5*a"))].into_iter().collect()).is_zero());
            assert!(res.substitute(&[(Param::A, p("0"))].into_iter().collect()).is_zero());
        }
    }

    #[test]
    fn so3_branches() {
        let (t, _) = bianchi_torsion(SubalgebraName::So3).unwrap();
        let r = symmetric_ansatz(SubalgebraName::So3).unwrap().unwrap();
        for b in printed_branches(SubalgebraName::So3) {
            assert!(check_branch(&t, &r, &b).holds, "{}", b.label);
        }
        let s = stiefel_curvature_check().unwrap();
        assert!(s.torsion_simplifies && s.curvature_matches && s.scalar_condition_holds);
    }

    #[test]
    fn su2_suc2_branch_and_r1_sign() {
        let (t, _) = bianchi_torsion(SubalgebraName::Su2Suc2).unwrap();
        let r = symmetric_ansatz(SubalgebraName::Su2Suc2).unwrap().unwrap();
        assert!(check_branch(&t, &r, &printed_branches(SubalgebraName::Su2Suc2)[0]).holds);
        let sol = solve_bianchi(&t, &r).unwrap();
        assert!(sol.residuals.is_empty());
        assert_eq!(sol.bindings[&Param::R], p("-5/2*a^2 - 1/2*a*b"));

        let r1 = symmetric_ansatz(SubalgebraName::R1Suc2).unwrap().unwrap();
        let sol = solve_bianchi(&t, &r1).unwrap();
        assert!(sol.residuals.is_empty());
        assert_eq!(sol.bindings[&Param::P], p("-3/2*a^2 - 1/2*a*b"));
        assert_eq!(sol.bindings[&Param::R], p("-15/2*a^2 - 3/2*a*b"));
        assert!(!check_branch(&t, &r1, &printed_branches(SubalgebraName::R1Suc2)[0]).holds);
    }

    #[test]
    fn off_branch_points_have_no_solution() {
        for n in [SubalgebraName::So3, SubalgebraName::Suc2] {
            let (taken, admitted) = refute_off_branch(n, 100, 17).unwrap();
            assert_eq!((taken, admitted), (100, 0), "{n}");
        }
    }

    #[test]
    fn homogeneity() {
        // T -> tT, R -> t^2 R keeps the d = -4c branch.
        let (t, _) = bianchi_torsion(SubalgebraName::So3).unwrap();
        let r = symmetric_ansatz(SubalgebraName::So3).unwrap().unwrap();
        let scale: BTreeMap<Param, Poly> =
            [(Param::A, p("s*a")), (Param::B, p("s*b")), (Param::C, p("s*c")), (Param::D, p("-4*s*c")), (Param::X, p("s^2*(a^2 + b^2 - 49*c^2)"))]
                .into_iter()
                .collect();
        let sys = bianchi_scalar_condition(&t.substitute(&scale), &r.substitute(&scale));
        assert!(sys.constraints.is_empty());
    }

    #[test]
    fn so3_ir_single_operator() {
        let h = catalog(SubalgebraName::So3Ir);
        let proj = projection_ansatz(h, Poly::one()).unwrap();
        assert!(proj.is_equivariant(h));
        assert!(proj.pair_symmetry_conditions().is_empty());
        assert_eq!(invariant_curvature_space(h).dim(), 1);
    }
}
