//! The Lie algebra h + R^7 of a naturally reductive space, built from a
//! holonomy algebra, a torsion form and a curvature operator, and its
//! structure theory (derived algebra, radical, center, Killing form).

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::curvature::{bianchi_torsion, printed_branches, symmetric_ansatz, Branch, CurvatureAnsatz};
use crate::error::{AlgebraError, Result};
use crate::exact::{int, rat, rational_to_string, LinearSubspace, Param, Poly, QMatrix, Rational};
use crate::exterior::{basis_blades, KForm};
use crate::g2lie::{bracket, catalog, vector_action, AlgebraElement, Subalgebra, SubalgebraName};

/// `h + R^7` with basis (generators of h, e1..e7) and structure constants
/// `[b_i, b_j] = sum_k c[i][j][k] b_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitiveAlgebra {
    pub labels: Vec<String>,
    pub holonomy_dim: usize,
    pub constants: Vec<Vec<Vec<Rational>>>,
}

/// Brackets on h + R^7:
/// `[A, B]` in h, `[A, Y] = A.Y`, `[X, Y] = -R(X ^ Y) - T(X, Y)` with
/// `T(X, Y) = Y _| X _| T`. Everything must be rational.
pub fn assemble(h: &Subalgebra, t: &KForm, r: &CurvatureAnsatz) -> Result<TransitiveAlgebra> {
    if !t.is_rational() {
        return Err(AlgebraError::Parameterized(t.to_string()));
    }
    let op = r
        .operator_matrix()
        .to_rational()
        .map_err(|_| AlgebraError::Parameterized(format!("curvature {r}")))?;
    let m = h.dim();
    let n = m + 7;
    let mut c = vec![vec![vec![Rational::zero(); n]; n]; n];
    let gens = h.generators();
    let h_coords = |w: &AlgebraElement| {
        h.generator_coords(w).ok_or_else(|| AlgebraError::NotInvariant(format!("{w} is not in {}", h.name())))
    };
    for i in 0..m {
        for j in 0..m {
            for (k, v) in h_coords(&bracket(&gens[i], &gens[j]))?.into_iter().enumerate() {
                c[i][j][k] = v;
            }
        }
        let act = vector_action(&gens[i]);
        for y in 0..7 {
            for k in 0..7 {
                let v = act.get(k, y).clone();
                c[m + y][i][m + k] = -v.clone();
                c[i][m + y][m + k] = v;
            }
        }
    }
    let blades = basis_blades(2);
    for x in 1..=7 {
        let tx = t.contract(x)?;
        for y in 1..=7 {
            if x == y {
                continue;
            }
            let txy = tx.contract(y)?;
            for k in 1..=7 {
                let e = txy.coeff(basis_blades(1)[k - 1]).as_constant().expect("rational torsion");
                c[m + x - 1][m + y - 1][m + k - 1] = -e;
            }
            // R(e_x ^ e_y) with sign from ordering the pair.
            let (lo, hi, sign) = if x < y { (x, y, int(1)) } else { (y, x, int(-1)) };
            let col = blades.iter().position(|b| b.indices() == [lo, hi]).expect("2-blade");
            let image: Vec<Rational> = (0..21).map(|w| op.get(w, col) * &sign).collect();
            let rw = AlgebraElement::from_coords(&image);
            for (k, v) in h_coords(&rw)?.into_iter().enumerate() {
                c[m + x - 1][m + y - 1][k] = -v;
            }
        }
    }
    let mut labels: Vec<String> = gens.iter().map(ToString::to_string).collect();
    labels.extend((1..=7).map(|i| format!("e{i}")));
    Ok(TransitiveAlgebra { labels, holonomy_dim: m, constants: c })
}

/// `assemble` followed by a Jacobi check; a violation is an error naming the
/// first failing basis triple.
pub fn build(h: &Subalgebra, t: &KForm, r: &CurvatureAnsatz) -> Result<TransitiveAlgebra> {
    let g = assemble(h, t, r)?;
    let bad = g.jacobi_violations();
    if let Some(&(i, j, k)) = bad.first() {
        return Err(AlgebraError::Jacobi { count: bad.len(), i, j, k });
    }
    Ok(g)
}

impl TransitiveAlgebra {
    pub fn dim(&self) -> usize {
        self.constants.len()
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let f = xi * yj;
                for (o, c) in out.iter_mut().zip(&self.constants[i][j]) {
                    if !c.is_zero() {
                        *o += &f * c;
                    }
                }
            }
        }
        out
    }

    fn unit(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.constants[i][j].iter().zip(&self.constants[j][i]).all(|(a, b)| (a + b).is_zero())))
    }

    /// Basis triples i < j < k on which the Jacobi identity fails.
    pub fn jacobi_violations(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let bij = &self.constants[i][j];
                for k in j + 1..n {
                    let (ei, ej, ek) = (self.unit(i), self.unit(j), self.unit(k));
                    let a = self.bracket(bij, &ek);
                    let b = self.bracket(&self.constants[j][k], &ei);
                    let c = self.bracket(&self.constants[k][i], &ej);
                    if a.iter().zip(&b).zip(&c).any(|((x, y), z)| !(x + y + z).is_zero()) {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    /// Matrix of ad(x): column j is [x, b_j].
    pub fn ad(&self, x: &[Rational]) -> QMatrix {
        let n = self.dim();
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| self.bracket(x, &self.unit(j))).collect();
        QMatrix::from_fn(n, n, |r, c| cols[c][r].clone())
    }

    /// Killing form `tr(ad b_i ad b_j)`.
    pub fn killing_form(&self) -> QMatrix {
        let n = self.dim();
        let ads: Vec<QMatrix> = (0..n).map(|i| self.ad(&self.unit(i))).collect();
        QMatrix::from_fn(n, n, |i, j| ads[i].mul(&ads[j]).trace())
    }

    /// Span of all brackets of elements of `a` with elements of `b`.
    pub fn bracket_span(&self, a: &LinearSubspace, b: &LinearSubspace) -> LinearSubspace {
        let mut v = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                v.push(self.bracket(x, y));
            }
        }
        LinearSubspace::from_spanning(self.dim(), v)
    }

    pub fn derived_algebra(&self) -> LinearSubspace {
        let full = LinearSubspace::full(self.dim());
        self.bracket_span(&full, &full)
    }

    /// The solvable radical, as the Killing-orthogonal of the derived algebra.
    pub fn radical(&self) -> LinearSubspace {
        let k = self.killing_form();
        let d = self.derived_algebra();
        if d.dim() == 0 {
            return LinearSubspace::full(self.dim());
        }
        let rows: Vec<Vec<Rational>> = d.basis().iter().map(|v| k.apply(v)).collect();
        QMatrix::from_rows(rows).expect("rows").kernel()
    }

    /// Elements commuting with everything.
    pub fn center(&self) -> LinearSubspace {
        let n = self.dim();
        let mut rows = Vec::new();
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.constants[i][j][k].clone()).collect());
            }
        }
        QMatrix::from_rows(rows).expect("rows").kernel()
    }

    pub fn is_ideal(&self, s: &LinearSubspace) -> bool {
        self.bracket_span(&LinearSubspace::full(self.dim()), s).is_subspace_of(s)
    }

    /// Dimensions of `s, [s,s], [s,[s,s]], ...` until it stabilizes.
    pub fn lower_central_series(&self, s: &LinearSubspace) -> Vec<usize> {
        let mut dims = vec![s.dim()];
        let mut cur = s.clone();
        loop {
            let next = self.bracket_span(s, &cur);
            if next.dim() == cur.dim() {
                return dims;
            }
            dims.push(next.dim());
            cur = next;
        }
    }

    /// Structure constants of `g / s` on a complement spanned by unit vectors.
    pub fn quotient(&self, s: &LinearSubspace) -> Result<TransitiveAlgebra> {
        if !self.is_ideal(s) {
            return Err(AlgebraError::NotClosed("quotient by a non-ideal".into()));
        }
        let n = self.dim();
        let mut span = s.clone();
        let mut reps = Vec::new();
        for i in 0..n {
            let u = self.unit(i);
            if !span.contains(&u) {
                span = span.sum(&LinearSubspace::from_spanning(n, vec![u]));
                reps.push(i);
            }
        }
        let q = reps.len();
        let mut cols: Vec<Vec<Rational>> = reps.iter().map(|&i| self.unit(i)).collect();
        cols.extend(s.basis().iter().cloned());
        let basis = QMatrix::from_fn(n, cols.len(), |r, c| cols[c][r].clone());
        let mut c = vec![vec![vec![Rational::zero(); q]; q]; q];
        for a in 0..q {
            for b in 0..q {
                let v = &self.constants[reps[a]][reps[b]];
                let rhs: Vec<Poly> = v.iter().cloned().map(Poly::constant).collect();
                let sol = basis.solve_affine(&rhs)?;
                let x = sol.values(&|_| Poly::zero());
                for k in 0..q {
                    c[a][b][k] = x[k].as_constant().expect("rational");
                }
            }
        }
        Ok(TransitiveAlgebra { labels: reps.iter().map(|&i| self.labels[i].clone()).collect(), holonomy_dim: 0, constants: c })
    }

    /// Nonzero structure constants as `(label_i, label_j, {label_k: value})`
    /// for i < j.
    pub fn structure_table(&self) -> Vec<BracketEntry> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let value: BTreeMap<String, String> = self.constants[i][j]
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(k, v)| (self.labels[k].clone(), rational_to_string(v)))
                    .collect();
                if !value.is_empty() {
                    out.push(BracketEntry { left: self.labels[i].clone(), right: self.labels[j].clone(), value });
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    pub value: BTreeMap<String, String>,
}

impl Serialize for TransitiveAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("TransitiveAlgebra", 3)?;
        st.serialize_field("basis", &self.labels)?;
        st.serialize_field("dimension", &self.dim())?;
        st.serialize_field("brackets", &self.structure_table())?;
        st.end()
    }
}

/// Whether a symmetric matrix is negative definite, by the signs of its
/// leading principal minors.
pub fn is_negative_definite(m: &QMatrix) -> bool {
    (1..=m.rows()).all(|k| {
        let sub = QMatrix::from_fn(k, k, |i, j| m.get(i, j).clone());
        let det = sub.determinant().expect("square");
        if k % 2 == 0 {
            det.is_positive()
        } else {
            det.is_negative()
        }
    })
}

/// Structural invariants of a transitive algebra.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StructureReport {
    pub dim: usize,
    pub derived_dim: usize,
    pub perfect: bool,
    pub killing_rank: usize,
    pub killing_negative_definite: bool,
    pub radical: LinearSubspace,
    pub radical_is_ideal: bool,
    /// Dimensions of the lower central series of the radical.
    pub radical_lower_central: Vec<usize>,
    pub radical_nilpotent: bool,
    pub radical_derived: LinearSubspace,
    pub radical_derived_abelian: bool,
    pub quotient_dim: usize,
    pub quotient_killing_negative_definite: bool,
    pub center_dim: usize,
}

pub fn structural_analysis(g: &TransitiveAlgebra) -> Result<StructureReport> {
    let k = g.killing_form();
    let d = g.derived_algebra();
    let r = g.radical();
    let lcs = g.lower_central_series(&r);
    let rr = g.bracket_span(&r, &r);
    let quotient = g.quotient(&r)?;
    Ok(StructureReport {
        dim: g.dim(),
        derived_dim: d.dim(),
        perfect: d.dim() == g.dim(),
        killing_rank: k.rank(),
        killing_negative_definite: is_negative_definite(&k),
        radical_is_ideal: g.is_ideal(&r),
        radical_nilpotent: *lcs.last().expect("nonempty") == 0,
        radical_lower_central: lcs,
        radical_derived_abelian: g.bracket_span(&rr, &rr).dim() == 0,
        radical_derived: rr,
        radical: r,
        quotient_dim: quotient.dim(),
        quotient_killing_negative_definite: quotient.dim() > 0 && is_negative_definite(&quotient.killing_form()),
        center_dim: g.center().dim(),
    })
}

/// The adjoint representation is faithful exactly when the center is zero.
pub fn adjoint_faithful_check(g: &TransitiveAlgebra) -> (bool, usize) {
    let c = g.center().dim();
    (c == 0, c)
}

fn rational_point(b: &BTreeMap<Param, Poly>) -> Result<BTreeMap<Param, Poly>> {
    b.iter()
        .map(|(p, v)| {
            v.as_constant()
                .map(|c| (*p, Poly::constant(c)))
                .ok_or_else(|| AlgebraError::Parameterized(format!("{p} = {v}")))
        })
        .collect()
}

/// Torsion and curvature of a printed family at a point given by all free
/// parameters.
pub fn data_at(name: SubalgebraName, point: &BTreeMap<Param, Poly>) -> Result<(KForm, CurvatureAnsatz)> {
    let (t, _) = bianchi_torsion(name).ok_or_else(|| AlgebraError::UnknownName(name.to_string()))?;
    let r = symmetric_ansatz(name)?.ok_or_else(|| AlgebraError::UnknownName(name.to_string()))?;
    let point = rational_point(point)?;
    Ok((t.substitute(&point), r.substitute(&point)))
}

/// A branch point: the torsion parameters given, bound parameters taken from
/// the branch.
pub fn branch_point(branch: &Branch, free: &[(Param, Rational)]) -> BTreeMap<Param, Poly> {
    let mut point: BTreeMap<Param, Poly> = free.iter().map(|(p, v)| (*p, Poly::constant(v.clone()))).collect();
    for (p, v) in &branch.bindings {
        point.insert(*p, v.substitute(&point));
    }
    point
}

pub fn algebra_at(name: SubalgebraName, point: &BTreeMap<Param, Poly>) -> Result<TransitiveAlgebra> {
    let (t, r) = data_at(name, point)?;
    assemble(catalog(name), &t, &r)
}

/// The algebra at a = 1, b = -5, p = 1 for su_c(2).
pub fn suc2_special_algebra() -> Result<TransitiveAlgebra> {
    let point = [(Param::A, Poly::int(1)), (Param::B, Poly::int(-5)), (Param::P, Poly::int(1))].into();
    let (t, r) = data_at(SubalgebraName::Suc2, &point)?;
    build(catalog(SubalgebraName::Suc2), &t, &r)
}

/// The algebra on the so(3) branch a = b = 0, c = 1, d = 3, x = -49/2.
pub fn stiefel_algebra() -> Result<TransitiveAlgebra> {
    let point = [
        (Param::A, Poly::zero()),
        (Param::B, Poly::zero()),
        (Param::C, Poly::int(1)),
        (Param::D, Poly::int(3)),
        (Param::X, Poly::constant(rat(-49, 2))),
    ]
    .into();
    let (t, r) = data_at(SubalgebraName::So3, &point)?;
    build(catalog(SubalgebraName::So3), &t, &r)
}

/// span{e1..e4, e5 - Q2, e6 + Q1, e7 + Q3} in the basis (Q1, Q2, Q3, e1..e7).
pub fn expected_suc2_radical() -> LinearSubspace {
    let mut vecs = Vec::new();
    let v = |entries: &[(usize, i64)]| {
        let mut x = vec![Rational::zero(); 10];
        for &(i, c) in entries {
            x[i] = int(c);
        }
        x
    };
    for i in 0..4 {
        vecs.push(v(&[(3 + i, 1)]));
    }
    vecs.push(v(&[(7, 1), (1, -1)]));
    vecs.push(v(&[(8, 1), (0, 1)]));
    vecs.push(v(&[(9, 1), (2, 1)]));
    LinearSubspace::from_spanning(10, vecs)
}

/// span{e5 - Q2, e6 + Q1, e7 + Q3}.
pub fn expected_suc2_radical_derived() -> LinearSubspace {
    let b = expected_suc2_radical();
    LinearSubspace::from_spanning(10, b.basis().iter().filter(|v| v[3..7].iter().all(Zero::is_zero)).cloned().collect())
}

/// Jacobi outcome at one parameter point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JacobiSample {
    pub algebra: String,
    pub point: BTreeMap<String, String>,
    pub violations: usize,
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let v = rat(rng.gen_range(-9..=9), rng.gen_range(1..=4));
        if !v.is_zero() {
            return v;
        }
    }
}

fn sample(name: SubalgebraName, point: &BTreeMap<Param, Poly>) -> Result<JacobiSample> {
    let g = algebra_at(name, point)?;
    Ok(JacobiSample {
        algebra: name.to_string(),
        point: point.iter().map(|(p, v)| (p.name().to_string(), v.to_string())).collect(),
        violations: g.jacobi_violations().len(),
    })
}

/// Jacobi at random points of each given branch.
pub fn branch_jacobi_samples(name: SubalgebraName, branches: &[Branch], per_branch: usize, seed: u64) -> Result<Vec<JacobiSample>> {
    let (_, tparams) = bianchi_torsion(name).ok_or_else(|| AlgebraError::UnknownName(name.to_string()))?;
    let r = symmetric_ansatz(name)?.expect("ansatz exists");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for b in branches {
        for _ in 0..per_branch {
            let free: Vec<(Param, Rational)> = tparams
                .iter()
                .chain(r.params.iter())
                .filter(|p| !b.bindings.contains_key(p))
                .map(|p| (*p, random_rational(&mut rng)))
                .collect();
            out.push(sample(name, &branch_point(b, &free))?);
        }
    }
    Ok(out)
}

/// Jacobi at random torsion and curvature parameters, skipping points that
/// happen to lie on a printed branch.
pub fn off_branch_jacobi_samples(name: SubalgebraName, count: usize, seed: u64) -> Result<Vec<JacobiSample>> {
    let (_, tparams) = bianchi_torsion(name).ok_or_else(|| AlgebraError::UnknownName(name.to_string()))?;
    let r = symmetric_ansatz(name)?.expect("ansatz exists");
    let branches = printed_branches(name);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let point: BTreeMap<Param, Poly> = tparams
            .iter()
            .chain(r.params.iter())
            .map(|p| (*p, Poly::constant(random_rational(&mut rng))))
            .collect();
        let on = branches.iter().any(|b| b.bindings.iter().all(|(p, v)| v.substitute(&point) == point[p]));
        if !on {
            out.push(sample(name, &point)?);
        }
    }
    Ok(out)
}

/// The trivial control: h = 0, T = 0, R = 0, an abelian R^7.
pub fn abelian_control() -> Result<TransitiveAlgebra> {
    let h = Subalgebra::new("zero", Vec::new())?;
    build(&h, &KForm::zero(3), &CurvatureAnsatz::new("zero", vec![], vec![]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stiefel_algebra_is_compact_semisimple() {
        let g = stiefel_algebra().unwrap();
        assert_eq!(g.dim(), 10);
        assert!(g.is_antisymmetric());
        let s = structural_analysis(&g).unwrap();
        assert!(s.perfect);
        assert_eq!(s.radical.dim(), 0);
        assert_eq!(s.killing_rank, 10);
        assert!(s.killing_negative_definite);
        assert_eq!(s.center_dim, 0);
    }

    #[test]
    fn suc2_special_structure() {
        let g = suc2_special_algebra().unwrap();
        let s = structural_analysis(&g).unwrap();
        assert!(s.perfect);
        assert_eq!(s.radical, expected_suc2_radical());
        assert!(s.radical_nilpotent);
        assert_eq!(s.radical_derived, expected_suc2_radical_derived());
        assert!(s.radical_derived_abelian);
        assert_eq!(s.quotient_dim, 3);
        assert!(s.quotient_killing_negative_definite);
        assert_eq!(adjoint_faithful_check(&g), (true, 0));
    }

    #[test]
    fn off_branch_point_breaks_jacobi() {
        let point = [(Param::A, Poly::int(1)), (Param::B, Poly::zero()), (Param::P, Poly::zero())].into();
        let (t, r) = data_at(SubalgebraName::Suc2, &point).unwrap();
        assert!(matches!(build(catalog(SubalgebraName::Suc2), &t, &r), Err(AlgebraError::Jacobi { .. })));
    }

    #[test]
    fn branches_satisfy_jacobi() {
        for name in [SubalgebraName::So3, SubalgebraName::Suc2, SubalgebraName::Su2Suc2] {
            for s in branch_jacobi_samples(name, &printed_branches(name), 2, 7).unwrap() {
                assert_eq!(s.violations, 0, "{s:?}");
            }
        }
    }

    #[test]
    fn r1_suc2_sign() {
        let name = SubalgebraName::R1Suc2;
        let printed = branch_jacobi_samples(name, &printed_branches(name), 3, 11).unwrap();
        assert!(printed.iter().any(|s| s.violations > 0));
        let corrected = Branch::new("computed", &[(Param::P, "-1/2*a*(3*a + b)"), (Param::R, "-3/2*a*(5*a + b)")]);
        for s in branch_jacobi_samples(name, &[corrected], 3, 11).unwrap() {
            assert_eq!(s.violations, 0, "{s:?}");
        }
    }

    #[test]
    fn off_branch_controls_fail() {
        for name in [SubalgebraName::So3, SubalgebraName::Suc2] {
            let s = off_branch_jacobi_samples(name, 5, 3).unwrap();
            assert!(s.iter().all(|x| x.violations > 0), "{s:?}");
        }
    }

    #[test]
    fn abelian_control_has_full_center() {
        let g = abelian_control().unwrap();
        assert_eq!(adjoint_faithful_check(&g), (false, 7));
        let s = structural_analysis(&g).unwrap();
        assert_eq!(s.derived_dim, 0);
        assert_eq!(s.radical.dim(), 7);
    }

    #[test]
    fn structure_table_serializes() {
        let g = stiefel_algebra().unwrap();
        let js = serde_json::to_value(&g).unwrap();
        assert_eq!(js["dimension"], 10);
        assert_eq!(js["basis"].as_array().unwrap().len(), 10);
    }
}
