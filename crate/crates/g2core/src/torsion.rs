//! Admissible torsion forms: elements of L1 + (L27)_h whose Clifford square
//! is a scalar on the h-invariant spinors.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::clifford::{clifford_action, clifford_action_rational, eigenvalue_on, Spinor};
use crate::error::{AlgebraError, Result};
use crate::exact::{int, rat, LinearSubspace, Param, Poly, QMatrix, Rational};
use crate::exterior::{lambda3_split, parse_form, phi, KForm};
use crate::g2lie::{catalog, Subalgebra, SubalgebraName};
use crate::invariants::{forms_of, invariant_forms27, invariant_spinors};

/// A linear family of 3-forms together with the polynomial conditions under
/// which its Clifford square is scalar on the invariant spinors.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TorsionFamily {
    pub name: String,
    #[serde(serialize_with = "ser_params")]
    pub params: Vec<Param>,
    #[serde(serialize_with = "ser_display")]
    pub form: KForm,
    #[serde(serialize_with = "ser_polys")]
    pub constraints: Vec<Poly>,
}

fn ser_params<S: serde::Serializer>(p: &[Param], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(p.iter().map(|x| x.name()))
}

fn ser_display<S: serde::Serializer, T: std::fmt::Display>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn ser_polys<S: serde::Serializer>(p: &[Poly], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(p.iter().map(ToString::to_string))
}

impl TorsionFamily {
    /// Builds a family over the invariant spinors of `h`.
    pub fn new(name: &str, params: Vec<Param>, form: KForm, h: &Subalgebra) -> Result<Self> {
        let constraints = scalar_constraints(&form, &invariant_spinors(h))?;
        Ok(TorsionFamily { name: name.to_string(), params, form, constraints })
    }

    /// The form at a rational parameter point.
    pub fn at(&self, point: &[Rational]) -> KForm {
        self.form.eval(&bind(&self.params, point))
    }

    /// Whether every constraint vanishes at the point.
    pub fn admits(&self, point: &[Rational]) -> bool {
        let b = bind(&self.params, point);
        self.constraints.iter().all(|c| c.eval(&b).is_zero())
    }

    /// The forms multiplying each parameter.
    pub fn directions(&self) -> Vec<KForm> {
        let (parts, rest) = self.form.split_affine(&self.params).expect("linear family");
        debug_assert!(rest.is_zero());
        parts
    }
}

fn bind(params: &[Param], point: &[Rational]) -> BTreeMap<Param, Rational> {
    params.iter().copied().zip(point.iter().cloned()).collect()
}

/// Matrix of `op` restricted to an invariant subspace, in the echelon basis
/// of the subspace. Also returns the entries of the part leaving the subspace.
fn restrict(op: &crate::exact::PolyMatrix, space: &LinearSubspace) -> (Vec<Vec<Poly>>, Vec<Poly>) {
    let basis = space.basis();
    let mut block = vec![vec![Poly::zero(); basis.len()]; basis.len()];
    let mut leak = Vec::new();
    for (j, v) in basis.iter().enumerate() {
        let pv: Vec<Poly> = v.iter().cloned().map(Poly::constant).collect();
        let w = op.apply(&pv);
        let coords: Vec<Poly> = space.pivots().iter().map(|&p| w[p].clone()).collect();
        let mut residual = w;
        for (c, u) in coords.iter().zip(basis) {
            for (r, x) in residual.iter_mut().zip(u) {
                if !x.is_zero() {
                    *r = &*r - &c.scale(x);
                }
            }
        }
        leak.extend(residual.into_iter().filter(|r| !r.is_zero()));
        for (i, c) in coords.into_iter().enumerate() {
            block[i][j] = c;
        }
    }
    (block, leak)
}

fn normalize(polys: impl IntoIterator<Item = Poly>) -> Vec<Poly> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for p in polys {
        let p = p.primitive();
        if !p.is_zero() && seen.insert(p.to_string()) {
            out.push(p);
        }
    }
    out
}

/// Conditions for `cl(T)^2` to act as a scalar on `spinors`.
pub fn scalar_constraints(t: &KForm, spinors: &LinearSubspace) -> Result<Vec<Poly>> {
    if t.grade() != 3 {
        return Err(AlgebraError::GradeMismatch { expected: 3, found: t.grade() });
    }
    let sq = clifford_action(t).square();
    let (block, leak) = restrict(sq.matrix(), spinors);
    if !leak.is_empty() {
        return Err(AlgebraError::NotInvariant(format!("{t} does not preserve the invariant spinors")));
    }
    let n = block.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(block[i][j].clone());
            } else if i > 0 {
                out.push(&block[i][i] - &block[0][0]);
            }
        }
    }
    Ok(normalize(out))
}

/// The general element `a phi + sum_k p_k B_k` of L1 + (L27)_h with fresh
/// parameters (B_k the echelon basis of the invariant forms) and its
/// scalar-square constraints.
pub fn scalar_action_constraints(h: &Subalgebra) -> Result<TorsionFamily> {
    let basis = forms_of(&invariant_forms27(h), 3);
    if basis.len() + 1 > Param::ALL.len() {
        return Err(AlgebraError::Shape("too many invariant forms for the parameter list".into()));
    }
    let params: Vec<Param> = Param::ALL[..basis.len() + 1].to_vec();
    let mut form = phi().scale(&Poly::var(params[0]));
    for (b, p) in basis.iter().zip(&params[1..]) {
        form = form.add(&b.scale(&Poly::var(*p)))?;
    }
    TorsionFamily::new(h.name(), params, form, h)
}

/// Coordinates of a rational 3-form in the general family of `h`
/// (phi coefficient first), if it lies in L1 + (L27)_h.
pub fn family_coordinates(h: &Subalgebra, t: &KForm) -> Option<Vec<Rational>> {
    let split = lambda3_split(t).ok()?;
    if !split.part7.is_zero() {
        return None;
    }
    let c1 = t.inner(&phi()).ok()?.as_constant()? / int(7);
    let space = invariant_forms27(h);
    let coords = space.coordinates(&split.part27.to_coords().ok()?)?;
    Some(std::iter::once(c1).chain(coords).collect())
}

/// A linear component of an admissible set, as a subspace of parameter space.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Component {
    pub label: String,
    pub space: LinearSubspace,
}

impl Component {
    /// Component cut out by homogeneous linear conditions in `params`.
    pub fn from_conditions(label: &str, params: &[Param], conditions: &[Poly]) -> Result<Self> {
        let n = params.len();
        if conditions.is_empty() {
            return Ok(Component { label: label.into(), space: LinearSubspace::full(n) });
        }
        let mut rows = Vec::new();
        for c in conditions {
            let (coeffs, rest) = c
                .split_affine(params)
                .ok_or_else(|| AlgebraError::Shape(format!("condition {c} is not linear")))?;
            if !rest.is_zero() || coeffs.iter().any(|x| !x.is_constant()) {
                return Err(AlgebraError::Shape(format!("condition {c} is not homogeneous linear")));
            }
            rows.push(coeffs.iter().map(|x| x.as_constant().expect("constant")).collect());
        }
        Ok(Component { label: label.into(), space: QMatrix::from_rows(rows)?.kernel() })
    }

    /// Component spanned by the given parameter vectors.
    pub fn from_vectors(label: &str, n: usize, vectors: Vec<Vec<Rational>>) -> Self {
        Component { label: label.into(), space: LinearSubspace::from_spanning(n, vectors) }
    }
}

/// The outcome of checking a union-of-components description.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UnionReport {
    /// Per component: every constraint vanishes identically on it.
    pub components_admissible: Vec<bool>,
    pub on_component_samples: usize,
    pub on_component_failures: usize,
    pub off_component_samples: usize,
    /// Off-component samples that nevertheless satisfy all constraints.
    pub off_component_admitted: usize,
}

impl UnionReport {
    pub fn passed(&self) -> bool {
        self.components_admissible.iter().all(|b| *b) && self.on_component_failures == 0 && self.off_component_admitted == 0
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-12..=12), rng.gen_range(1..=5))
}

fn random_in(space: &LinearSubspace, rng: &mut ChaCha8Rng) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); space.ambient()];
    for b in space.basis() {
        let c = random_rational(rng);
        for (x, y) in v.iter_mut().zip(b) {
            *x += &c * y;
        }
    }
    v
}

/// Substitutes each component's generic point into the constraints, then
/// samples random points on and off the components.
pub fn verify_union_decomposition(family: &TorsionFamily, components: &[Component], samples: usize, seed: u64) -> UnionReport {
    let n = family.params.len();
    let components_admissible = components
        .iter()
        .map(|c| {
            // Generic point: fresh symbols along the component basis.
            let symbols: Vec<Param> = Param::ALL.iter().rev().take(c.space.dim()).copied().collect();
            let mut bind = BTreeMap::new();
            for (k, p) in family.params.iter().enumerate() {
                let mut v = Poly::zero();
                for (b, s) in c.space.basis().iter().zip(&symbols) {
                    v = &v + &Poly::var(*s).scale(&b[k]);
                }
                bind.insert(*p, v);
            }
            family.constraints.iter().all(|q| q.substitute(&bind).is_zero())
        })
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut on_failures = 0;
    let mut on_samples = 0;
    if !components.is_empty() {
        for k in 0..samples {
            let c = &components[k % components.len()];
            let p = random_in(&c.space, &mut rng);
            on_samples += 1;
            if !family.admits(&p) {
                on_failures += 1;
            }
        }
    }
    let mut off_samples = 0;
    let mut off_admitted = 0;
    let mut attempts = 0;
    let full_cover = components.iter().any(|c| c.space.dim() == n);
    while !full_cover && off_samples < samples && attempts < 20 * samples {
        attempts += 1;
        let p: Vec<Rational> = (0..n).map(|_| random_rational(&mut rng)).collect();
        if components.iter().any(|c| c.space.contains(&p)) {
            continue;
        }
        off_samples += 1;
        if family.admits(&p) {
            off_admitted += 1;
        }
    }
    UnionReport {
        components_admissible,
        on_component_samples: on_samples,
        on_component_failures: on_failures,
        off_component_samples: off_samples,
        off_component_admitted: off_admitted,
    }
}

/// Printed torsion families with their stated components.
pub fn printed_family(name: SubalgebraName) -> Result<(TorsionFamily, Vec<Component>)> {
    use Param::*;
    let h = catalog(name);
    let v = |p: Param| Poly::var(p);
    let f = |s: &str| parse_form(s).expect("static form");
    let su3_gen = f("4*e127 - 3*e135 + 3*e146 + 3*e236 + 3*e245 + 4*e347 + 4*e567");
    match name {
        SubalgebraName::Su3 => {
            let params = vec![A, B];
            let form = su3_gen.scale(&v(A)).add(&phi().scale(&v(B)))?;
            let fam = TorsionFamily::new(name.as_str(), params.clone(), form, h)?;
            let comps = vec![
                Component::from_conditions("e127+e347+e567 line (b = 3a)", &params, &[&v(B) - &v(A).scale(&int(3))])?,
                Component::from_conditions("-e135+e146+e236+e245 line (b = -4a)", &params, &[&v(B) + &v(A).scale(&int(4))])?,
            ];
            Ok((fam, comps))
        }
        SubalgebraName::U2 => {
            let params = vec![A, B, C];
            let form = u2_t_ab().add(&phi().scale(&v(C)))?;
            let fam = TorsionFamily::new(name.as_str(), params.clone(), form, h)?;
            let s = &v(A) + &v(B);
            let comps = vec![
                Component::from_conditions("plane a + b = c", &params, &[&s - &v(C)])?,
                Component::from_conditions("plane 4(a + b) = -3c", &params, &[&s.scale(&int(4)) + &v(C).scale(&int(3))])?,
            ];
            Ok((fam, comps))
        }
        SubalgebraName::Su2 => {
            let fam = scalar_action_constraints(h)?;
            let n = fam.params.len();
            let comps = su2_lines()
                .iter()
                .enumerate()
                .map(|(i, t)| {
                    let coords = family_coordinates(h, t).expect("printed line lies in the family");
                    Component::from_vectors(&format!("line {}: {t}", i + 1), n, vec![coords])
                })
                .collect();
            Ok((fam, comps))
        }
        SubalgebraName::Suc2 | SubalgebraName::R1Suc2 | SubalgebraName::Su2Suc2 => {
            let params = vec![A, B];
            let form = phi().scale(&v(A)).add(&f("e567").scale(&v(B)))?;
            let fam = TorsionFamily::new(name.as_str(), params.clone(), form, h)?;
            Ok((fam, vec![Component::from_conditions("full plane", &params, &[])?]))
        }
        SubalgebraName::So3 => {
            let params = vec![A, B, C, D];
            let form = so3_t_abc().add(&phi().scale(&v(D)))?;
            let fam = TorsionFamily::new(name.as_str(), params.clone(), form, h)?;
            let comps = vec![
                Component::from_conditions("hyperplane d = 3c", &params, &[&v(D) - &v(C).scale(&int(3))])?,
                Component::from_conditions("hyperplane d = -4c", &params, &[&v(D) + &v(C).scale(&int(4))])?,
            ];
            Ok((fam, comps))
        }
        SubalgebraName::So3Ir => {
            let params = vec![A];
            let fam = TorsionFamily::new(name.as_str(), params.clone(), phi().scale(&v(A)), h)?;
            Ok((fam, vec![Component::from_conditions("line of phi", &params, &[])?]))
        }
    }
}

/// T_{a,b} = (a+b)(-e135+e146+e236+e245) + 2a(e347+e127) + 4b e567.
pub fn u2_t_ab() -> KForm {
    "-(a+b)*e135 + (a+b)*e146 + (a+b)*e236 + (a+b)*e245 + 2*a*e347 + 2*a*e127 + 4*b*e567"
        .parse()
        .expect("static form")
}

/// The so(3) family T_{a,b,c} without its phi part.
pub fn so3_t_abc() -> KForm {
    let blocks = [
        (Param::A, "-2*e123 + e136 - e145 + e235 + e246 + 2*e356"),
        (Param::B, "-2*e124 - e135 - e146 + e236 - e245 + 2*e456"),
        (Param::C, "4*e127 - 3*e135 + 3*e146 + 3*e236 + 3*e245 + 4*e347 + 4*e567"),
    ];
    let mut out = KForm::zero(3);
    for (p, s) in blocks {
        out = out.add(&parse_form(s).expect("static").scale(&Poly::var(p))).expect("grade 3");
    }
    out
}

/// The eight printed generators of the su(2) torsion lines.
pub fn su2_lines() -> Vec<KForm> {
    [
        "e127 - e135 + e146 + e236 + e245 + e347 - 2*e567",
        "e127 + e135 - e146 - e236 - e245 + e347 - 2*e567",
        "e127 + e135 + e146 + e236 - e245 + e347 + 2*e567",
        "e127 - e135 - e146 - e236 + e245 + e347 + 2*e567",
        "e135 - e245",
        "e146 + e236",
        "e127 + e347",
        "e567",
    ]
    .iter()
    .map(|s| parse_form(s).expect("static form"))
    .collect()
}

/// Eigenvalues of a torsion form on the canonical invariant spinors.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenvalueProfile {
    #[serde(serialize_with = "ser_display")]
    pub torsion: KForm,
    /// (spinor coordinates, eigenvalue), one entry per echelon basis spinor.
    pub eigenpairs: Vec<(Vec<String>, String)>,
    #[serde(skip)]
    pub values: Vec<Poly>,
}

/// Requires the Clifford square to be scalar on the invariant spinors and
/// every echelon basis spinor to be an eigenspinor.
pub fn eigenvalue_profile(t: &KForm, h: &Subalgebra) -> Result<EigenvalueProfile> {
    let spinors = invariant_spinors(h);
    let cons = scalar_constraints(t, &spinors)?;
    if !cons.is_empty() {
        return Err(AlgebraError::NotScalar(format!("{t}: {} conditions fail", cons.len())));
    }
    let op = clifford_action(t);
    let mut eigenpairs = Vec::new();
    let mut values = Vec::new();
    for v in spinors.basis() {
        let lambda = eigenvalue_on(&op, &Spinor::from_vec(v.clone())?)?
            .ok_or_else(|| AlgebraError::NotScalar(format!("{t}: basis spinor is not an eigenspinor")))?;
        eigenpairs.push((v.iter().map(crate::exact::rational_to_string).collect(), lambda.to_string()));
        values.push(lambda);
    }
    Ok(EigenvalueProfile { torsion: t.clone(), eigenpairs, values })
}

/// Tor_h intersected with L27. On L27 the square must vanish on psi1, so the
/// scalar is zero and (cl(T) being symmetric) T kills every invariant spinor;
/// the intersection is therefore the linear space computed here.
pub fn w3_intersection(h: &Subalgebra) -> LinearSubspace {
    let forms = invariant_forms27(h);
    let spinors = invariant_spinors(h);
    if forms.dim() == 0 {
        return forms;
    }
    let mats: Vec<QMatrix> = forms_of(&forms, 3)
        .iter()
        .map(|f| clifford_action_rational(f).expect("rational"))
        .collect();
    // Unknowns: coefficients along the invariant basis.
    let mut rows = Vec::new();
    for v in spinors.basis() {
        let images: Vec<Vec<Rational>> = mats.iter().map(|m| m.apply(v)).collect();
        for i in 0..8 {
            rows.push(images.iter().map(|img| img[i].clone()).collect::<Vec<_>>());
        }
    }
    let kernel = QMatrix::from_rows(rows).expect("rows").kernel();
    let vecs = kernel
        .basis()
        .iter()
        .map(|t| {
            let mut v = vec![Rational::zero(); 35];
            for (c, b) in t.iter().zip(forms.basis()) {
                for (x, y) in v.iter_mut().zip(b) {
                    *x += c * y;
                }
            }
            v
        })
        .collect();
    LinearSubspace::from_spanning(35, vecs)
}

/// Whether, inside L1 + L27, the forms killing psi1 are exactly L27: every
/// basis form of L27 kills psi1 while phi does not.
pub fn psi1_characterizes_l27() -> bool {
    let psi1 = Spinor::psi(1).expect("index");
    let kills = |f: &KForm| clifford_action_rational(f).expect("rational").apply(psi1.coords()).iter().all(Zero::is_zero);
    let l27 = crate::exterior::lambda3_27_subspace();
    l27.basis().iter().all(|v| kills(&KForm::from_coords(3, v))) && !kills(&phi())
}

/// Eigenvalues of phi on psi1 and psi2.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NearlyParallelReport {
    pub lambda1: String,
    pub lambda2: String,
    pub distinct: bool,
}

pub fn nearly_parallel_checks() -> Result<NearlyParallelReport> {
    let op = clifford_action(&phi());
    let l1 = eigenvalue_on(&op, &Spinor::psi(1)?)?.ok_or(AlgebraError::NotScalar("phi on psi1".into()))?;
    let l2 = eigenvalue_on(&op, &Spinor::psi(2)?)?.ok_or(AlgebraError::NotScalar("phi on psi2".into()))?;
    Ok(NearlyParallelReport { distinct: l1 != l2, lambda1: l1.to_string(), lambda2: l2.to_string() })
}

/// Whether every multiple of phi is admissible for h.
pub fn phi_line_admissible(h: &Subalgebra) -> bool {
    scalar_constraints(&phi(), &invariant_spinors(h)).map(|c| c.is_empty()).unwrap_or(false)
}

/// Dimension of the general family (1 + dim (L27)_h).
pub fn family_dimension(h: &Subalgebra) -> usize {
    1 + invariant_forms27(h).dim()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> KForm {
        parse_form(s).unwrap()
    }

    #[test]
    fn su3_family_and_lines() {
        let (fam, comps) = printed_family(SubalgebraName::Su3).unwrap();
        let rep = verify_union_decomposition(&fam, &comps, 120, 7);
        assert!(rep.passed(), "{rep:?}");
        assert!(rep.off_component_samples >= 100);
        // The two lines are the stated forms.
        let l1 = fam.at(&[int(1), int(3)]);
        assert_eq!(l1, f("7*e127 + 7*e347 + 7*e567"));
        let l2 = fam.at(&[int(1), int(-4)]);
        assert_eq!(l2, f("-7*e135 + 7*e146 + 7*e236 + 7*e245"));
        assert!(!fam.admits(&[int(2), int(-1)]));
    }

    #[test]
    fn u2_planes() {
        let (fam, comps) = printed_family(SubalgebraName::U2).unwrap();
        let rep = verify_union_decomposition(&fam, &comps, 120, 11);
        assert!(rep.passed(), "{rep:?}");
        // The planes meet in a line inside L27 (c = 0, a + b = 0).
        let meet = comps[0].space.intersect(&comps[1].space);
        assert_eq!(meet.dim(), 1);
        assert!(meet.basis()[0][2].is_zero());
    }

    #[test]
    fn so3_hyperplanes() {
        let (fam, comps) = printed_family(SubalgebraName::So3).unwrap();
        let rep = verify_union_decomposition(&fam, &comps, 120, 3);
        assert!(rep.passed(), "{rep:?}");
        let w3 = w3_intersection(catalog(SubalgebraName::So3));
        let ab = crate::invariants::span_of_forms(&[fam.at(&[int(1), int(0), int(0), int(0)]), fam.at(&[int(0), int(1), int(0), int(0)])]);
        assert_eq!(w3, ab);
    }

    #[test]
    fn general_family_matches_printed_for_suc2_type() {
        for n in [SubalgebraName::Suc2, SubalgebraName::R1Suc2, SubalgebraName::Su2Suc2, SubalgebraName::So3Ir] {
            let fam = scalar_action_constraints(catalog(n)).unwrap();
            assert!(fam.constraints.is_empty(), "{n}");
        }
    }

    #[test]
    fn su2_lines_are_eigen() {
        let h = catalog(SubalgebraName::Su2);
        let (fam, comps) = printed_family(SubalgebraName::Su2).unwrap();
        assert_eq!(fam.params.len(), 7);
        let rep = verify_union_decomposition(&fam, &comps, 120, 5);
        assert!(rep.components_admissible.iter().all(|b| *b));
        assert_eq!(rep.off_component_admitted, 0);
        for t in su2_lines() {
            let prof = eigenvalue_profile(&t, h).unwrap();
            assert_eq!(prof.values.len(), 4);
        }
    }

    #[test]
    fn w3_trivial_cases() {
        for n in [SubalgebraName::Su3, SubalgebraName::Su2, SubalgebraName::So3Ir] {
            assert_eq!(w3_intersection(catalog(n)).dim(), 0, "{n}");
        }
        // The two u(2) planes meet inside L27 along a line.
        assert_eq!(w3_intersection(catalog(SubalgebraName::U2)).dim(), 1);
        for n in [SubalgebraName::Suc2, SubalgebraName::R1Suc2, SubalgebraName::Su2Suc2] {
            assert_eq!(w3_intersection(catalog(n)).dim(), 1);
        }
        assert!(psi1_characterizes_l27());
    }

    #[test]
    fn eigenvalues() {
        let su3 = catalog(SubalgebraName::Su3);
        let p = eigenvalue_profile(&f("2*e127 + 2*e347 + 2*e567"), su3).unwrap();
        assert_eq!(p.values, vec![Poly::int(-6), Poly::int(-6)]);
        let p = eigenvalue_profile(&f("e135 - e146 - e236 - e245"), su3).unwrap();
        assert_eq!(p.values, vec![Poly::int(-4), Poly::int(4)]);
        assert!(eigenvalue_profile(&phi(), su3).is_err());
        let np = nearly_parallel_checks().unwrap();
        assert_eq!((np.lambda1.as_str(), np.lambda2.as_str(), np.distinct), ("-7", "1", true));
    }

    #[test]
    fn u2_branch_eigenvalues() {
        let u2 = catalog(SubalgebraName::U2);
        let (fam, _) = printed_family(SubalgebraName::U2).unwrap();
        let c = Poly::var(Param::C);
        // Plane a + b = c.
        let mut b1 = BTreeMap::new();
        b1.insert(Param::B, &c - &Poly::var(Param::A));
        let t1 = fam.form.substitute(&b1);
        assert_eq!(eigenvalue_profile(&t1, u2).unwrap().values, vec![c.scale(&int(-7)), c.scale(&int(-7))]);
        // Plane 4(a + b) = -3c.
        let mut b2 = BTreeMap::new();
        b2.insert(Param::B, &c.scale(&rat(-3, 4)) - &Poly::var(Param::A));
        let t2 = fam.form.substitute(&b2);
        assert_eq!(eigenvalue_profile(&t2, u2).unwrap().values, vec![c.scale(&int(-7)), c.scale(&int(7))]);
    }

    #[test]
    fn phi_line_only_without_second_spinor() {
        for n in SubalgebraName::ALL {
            let h = catalog(n);
            let expect = invariant_spinors(h).dim() == 1;
            assert_eq!(phi_line_admissible(h), expect, "{n}");
        }
    }
}
