//! Ricci tensors and scalar curvatures computed from a parallel torsion form
//! and an invariant spinor, plus the block and spinor identities that follow.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::clifford::{clifford_action, gamma_matrix, Spinor};
use crate::error::{AlgebraError, Result};
use crate::exact::{int, rat, Param, Poly, PolyMatrix, QMatrix};
use crate::exterior::{parse_form, phi, sigma_dt, KForm};
use crate::torsion::u2_t_ab;

/// Ricci data of a torsion form, with optional per-block eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub struct RicciData {
    pub ric_characteristic: PolyMatrix,
    pub ric_riemannian: PolyMatrix,
    pub scal_characteristic: Poly,
    pub scal_riemannian: Poly,
    pub blocks: Vec<BlockValue>,
}

/// A block of coordinate indices (1-based) on which both Ricci tensors are
/// multiples of the identity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BlockValue {
    pub indices: Vec<usize>,
    #[serde(serialize_with = "ser_display")]
    pub characteristic: Poly,
    #[serde(serialize_with = "ser_display")]
    pub riemannian: Poly,
}

fn ser_display<S: serde::Serializer, T: std::fmt::Display>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn matrix_strings(m: &PolyMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect()).collect()
}

impl Serialize for RicciData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RicciData", 5)?;
        st.serialize_field("ric_characteristic", &matrix_strings(&self.ric_characteristic))?;
        st.serialize_field("ric_riemannian", &matrix_strings(&self.ric_riemannian))?;
        st.serialize_field("scal_characteristic", &self.scal_characteristic.to_string())?;
        st.serialize_field("scal_riemannian", &self.scal_riemannian.to_string())?;
        st.serialize_field("blocks", &self.blocks)?;
        st.end()
    }
}

/// The 8x7 matrix whose column i is 2 e_i . psi.
fn clifford_frame(psi: &Spinor) -> QMatrix {
    let cols: Vec<Vec<_>> = (1..=7).map(|i| gamma_matrix(i).expect("index").apply(psi.coords())).collect();
    QMatrix::from_fn(8, 7, |r, c| &cols[c][r] * int(2))
}

/// Solves `2 Ric(e_j) . psi = (e_j _| dT) . psi` row by row, with
/// `dT = sum_i (e_i _| T) ^ (e_i _| T)`.
pub fn ricci_characteristic(t: &KForm, psi: &Spinor) -> Result<PolyMatrix> {
    if psi.is_zero() {
        return Err(AlgebraError::Shape("the spinor must be nonzero".into()));
    }
    let frame = clifford_frame(psi);
    // v . v . psi = -|v|^2 psi, so v -> v . psi is injective.
    if frame.rank() != 7 {
        return Err(AlgebraError::Construction("Clifford multiplication is not injective on this spinor".into()));
    }
    let dt = sigma_dt(t)?;
    let mut out = PolyMatrix::zeros(7, 7);
    for j in 1..=7 {
        let rhs = clifford_action(&dt.contract(j)?).apply(psi);
        let sol = frame.solve_affine(&rhs)?;
        if !sol.is_consistent() {
            let shown: Vec<String> = sol.residuals.iter().map(ToString::to_string).collect();
            return Err(AlgebraError::Inconsistent(format!("row {j} of Ric for {t}: {}", shown.join(", "))));
        }
        for (k, v) in sol.values(&|_| Poly::zero()).into_iter().enumerate() {
            out.set(j - 1, k, v);
        }
    }
    Ok(out)
}

/// Gram matrix of the contractions: entry (i, j) is <e_i _| T, e_j _| T>.
pub fn contraction_gram(t: &KForm) -> Result<PolyMatrix> {
    let c: Vec<KForm> = (1..=7).map(|i| t.contract(i)).collect::<Result<_>>()?;
    let mut m = PolyMatrix::zeros(7, 7);
    for i in 0..7 {
        for j in 0..7 {
            m.set(i, j, c[i].inner(&c[j])?);
        }
    }
    Ok(m)
}

/// `Ric^g = Ric^nabla + 1/2 <X _| T, Y _| T>`.
pub fn ricci_riemannian(t: &KForm, ric_char: &PolyMatrix) -> Result<PolyMatrix> {
    let half = Poly::constant(rat(1, 2));
    Ok(ric_char.add(&contraction_gram(t)?.scale(&half)))
}

/// Scal^g from an eigenvalue of T on an invariant spinor:
/// `T^2 psi = 1/4 (2 Scal + |T|^2) psi`.
pub fn scalar_from_eigen(t: &KForm, lambda: &Poly) -> Poly {
    (&lambda.pow(2).scale(&int(4)) - &t.norm_sq()).scale(&rat(1, 2))
}

/// Isotropic value of `m` on a block, or `None` if `m` is not a multiple of
/// the identity there or couples the block to its complement.
pub fn block_value(m: &PolyMatrix, block: &[usize]) -> Option<Poly> {
    let first = *block.first()?;
    let value = m.get(first - 1, first - 1).clone();
    for i in 1..=7 {
        for j in 1..=7 {
            let inside = block.contains(&i) && block.contains(&j);
            let touches = block.contains(&i) || block.contains(&j);
            let entry = m.get(i - 1, j - 1);
            let ok = match (inside, touches) {
                (true, _) if i == j => *entry == value,
                (_, true) => entry.is_zero(),
                _ => true,
            };
            if !ok {
                return None;
            }
        }
    }
    Some(value)
}

/// Full Ricci data; every block in `blocks` must be isotropic for both
/// tensors.
pub fn ricci_data(t: &KForm, psi: &Spinor, blocks: &[Vec<usize>]) -> Result<RicciData> {
    let ric_characteristic = ricci_characteristic(t, psi)?;
    let ric_riemannian = ricci_riemannian(t, &ric_characteristic)?;
    let mut values = Vec::new();
    for b in blocks {
        let (Some(characteristic), Some(riemannian)) = (block_value(&ric_characteristic, b), block_value(&ric_riemannian, b))
        else {
            return Err(AlgebraError::NotScalar(format!("Ricci tensor on block {b:?} for {t}")));
        };
        values.push(BlockValue { indices: b.clone(), characteristic, riemannian });
    }
    Ok(RicciData {
        scal_characteristic: ric_characteristic.trace(),
        scal_riemannian: ric_riemannian.trace(),
        ric_characteristic,
        ric_riemannian,
        blocks: values,
    })
}

/// `Some(mu)` with `(e_i _| T) . psi = mu e_i . psi`, if such a scalar exists.
pub fn contraction_factor(t: &KForm, psi: &Spinor, i: usize) -> Result<Option<Poly>> {
    let lhs = clifford_action(&t.contract(i)?).apply(psi);
    let rhs = gamma_matrix(i)?.apply(psi.coords());
    let k = rhs.iter().position(|c| !c.is_zero()).expect("e_i psi is nonzero");
    let mu = lhs[k].scale(&(rat(1, 1) / rhs[k].clone()));
    let ok = lhs.iter().zip(&rhs).all(|(l, r)| *l == mu.scale(r));
    Ok(ok.then_some(mu))
}

/// Per-direction factors `mu_i`; since the characteristic connection kills
/// psi, `nabla^g_{e_i} psi = -mu_i/4 e_i . psi`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpinorFieldReport {
    #[serde(serialize_with = "ser_display")]
    pub torsion: KForm,
    /// Factor for e_1..e_7; `None` where (e_i _| T) psi is not proportional
    /// to e_i psi.
    pub factors: Vec<Option<String>>,
    /// Whether the factor is constant on each block of the split.
    pub constant_on_blocks: bool,
}

pub fn spinor_field_identities(t: &KForm, psi: &Spinor, split: &[Vec<usize>]) -> Result<SpinorFieldReport> {
    let factors: Vec<Option<Poly>> = (1..=7).map(|i| contraction_factor(t, psi, i)).collect::<Result<_>>()?;
    let constant_on_blocks = split.iter().all(|b| {
        let vals: Vec<_> = b.iter().map(|&i| &factors[i - 1]).collect();
        vals.iter().all(|v| v.is_some() && *v == vals[0])
    });
    Ok(SpinorFieldReport {
        torsion: t.clone(),
        factors: factors.iter().map(|f| f.as_ref().map(ToString::to_string)).collect(),
        constant_on_blocks,
    })
}

/// T(e_i, e_j, e_k).
fn torsion_entry(t: &KForm, i: usize, j: usize, k: usize) -> Result<Poly> {
    let s = t.contract(i)?.contract(j)?.contract(k)?;
    Ok(s.coeff(crate::exterior::Blade::from_mask(0)))
}

/// Ricci of a totally geodesic fibre in direction `v`: Ric^g(V,V) minus the
/// horizontal sectional terms 1/4 |T(X, V, .)|^2.
pub fn fibre_ricci(t: &KForm, ric_g: &PolyMatrix, v: usize, horizontal: &[usize]) -> Result<Poly> {
    let mut out = ric_g.get(v - 1, v - 1).clone();
    for &x in horizontal {
        let n = t.contract(x)?.contract(v)?.norm_sq();
        out = &out - &n.scale(&rat(1, 4));
    }
    Ok(out)
}

/// Ricci of the base in a horizontal direction `x`: Ric^g(X,X) plus
/// 1/2 sum over horizontal e_i and vertical v of T(X, e_i, v)^2.
pub fn base_ricci(t: &KForm, ric_g: &PolyMatrix, x: usize, horizontal: &[usize], vertical: &[usize]) -> Result<Poly> {
    let mut out = ric_g.get(x - 1, x - 1).clone();
    for &i in horizontal {
        for &v in vertical {
            let e = torsion_entry(t, x, i, v)?;
            out = &out + &e.pow(2).scale(&rat(1, 2));
        }
    }
    Ok(out)
}

/// A named polynomial identity with its two sides.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub label: String,
    pub computed: String,
    pub expected: String,
    pub holds: bool,
}

impl IdentityCheck {
    pub fn new(label: &str, computed: &Poly, expected: &Poly) -> Self {
        IdentityCheck { label: label.into(), computed: computed.to_string(), expected: expected.to_string(), holds: computed == expected }
    }
}

fn p(s: &str) -> Poly {
    s.parse().expect("static polynomial")
}

/// `T_{a,b} + c phi` restricted to the plane `a + b = c`.
pub fn u2_plane_one() -> KForm {
    let b: BTreeMap<Param, Poly> = [(Param::B, p("c - a"))].into();
    u2_t_ab().add(&phi().scale(&Poly::var(Param::C))).expect("grade 3").substitute(&b)
}

/// `T_{a,b} + c phi` restricted to the plane `4(a + b) = -3c`.
pub fn u2_plane_two() -> KForm {
    let b: BTreeMap<Param, Poly> = [(Param::B, p("-3/4*c - a"))].into();
    u2_t_ab().add(&phi().scale(&Poly::var(Param::C))).expect("grade 3").substitute(&b)
}

/// `a phi + b e567`.
pub fn phi_plus_vertical() -> KForm {
    phi().scale(&Poly::var(Param::A)).add(&parse_form("b*e567").expect("static")).expect("grade 3")
}

/// `7c (e12 + e34 + e56) ^ e7`.
pub fn stiefel_torsion() -> KForm {
    parse_form("7*c*e127 + 7*c*e347 + 7*c*e567").expect("static")
}

pub const SPLIT_4_2_1: [&[usize]; 3] = [&[1, 2, 3, 4], &[5, 6], &[7]];
pub const SPLIT_4_3: [&[usize]; 2] = [&[1, 2, 3, 4], &[5, 6, 7]];
pub const SPLIT_6_1: [&[usize]; 2] = [&[1, 2, 3, 4, 5, 6], &[7]];

pub fn blocks(split: &[&[usize]]) -> Vec<Vec<usize>> {
    split.iter().map(|b| b.to_vec()).collect()
}

/// Polynomial identities that follow from the Ricci pipeline: traces,
/// fibration values, the inversion of the base scalar curvatures and the
/// rational parametrization of `5a^2 + ab = 4`.
pub fn derived_scalar_identities() -> Result<Vec<IdentityCheck>> {
    let psi1 = Spinor::psi(1)?;
    let mut out = Vec::new();

    let plane = ricci_data(&u2_plane_one(), &psi1, &blocks(&SPLIT_4_2_1))?;
    out.push(IdentityCheck::new("plane a+b=c: Scal of the characteristic connection", &plane.scal_characteristic, &p("-48*a^2 + 64*a*c + 44*c^2")));

    let st = ricci_data(&stiefel_torsion(), &psi1, &blocks(&SPLIT_6_1))?;
    out.push(IdentityCheck::new("Stiefel branch: Ric^g on e1..e6", &st.blocks[0].riemannian, &p("245/2*c^2")));
    out.push(IdentityCheck::new("Stiefel branch: Ric^g on e7", &st.blocks[1].riemannian, &p("147/2*c^2")));

    let t9 = phi_plus_vertical();
    let r9 = ricci_data(&t9, &psi1, &blocks(&SPLIT_4_3))?;
    out.push(IdentityCheck::new("a phi + b e567: trace of Ric^nabla", &r9.scal_characteristic, &p("84*a^2 + 24*a*b")));
    let e2 = &r9.blocks[1].riemannian;
    out.push(IdentityCheck::new("a phi + b e567: E2 block of Ric^g", e2, &p("13*a^2 + 4*a*b + 1/2*(a + b)^2")));
    let horizontal = [1, 2, 3, 4];
    let vertical = [5, 6, 7];
    let fibre = fibre_ricci(&t9, &r9.ric_riemannian, 7, &horizontal)?;
    out.push(IdentityCheck::new("fibre Ricci equals 12a^2 + 4ab + (a+b)^2/2", &fibre, &p("12*a^2 + 4*a*b + 1/2*(a + b)^2")));
    out.push(IdentityCheck::new("fibre Ricci equals (5a+b)^2/2", &fibre, &p("1/2*(5*a + b)^2")));
    out.push(IdentityCheck::new("fibre sectional curvature k = Ric/2", &fibre.scale(&rat(1, 2)), &p("1/4*(5*a + b)^2")));
    let base = base_ricci(&t9, &r9.ric_riemannian, 1, &horizontal, &vertical)?;
    out.push(IdentityCheck::new("base Einstein constant", &base, &p("3*a*(5*a + b)")));

    // Base of the e7 fibration over the plane a+b=c, blocks {1..4} and {5,6}.
    let t5 = u2_plane_one();
    let h5 = [1, 2, 3, 4, 5, 6];
    let base1 = base_ricci(&t5, &plane.ric_riemannian, 1, &h5, &[7])?;
    let base2 = base_ricci(&t5, &plane.ric_riemannian, 5, &h5, &[7])?;
    out.push(IdentityCheck::new("plane a+b=c: base Ricci on E1", &base1, &p("7*c*(2*a + c)")));
    out.push(IdentityCheck::new("plane a+b=c: base Ricci on E2", &base2, &p("7*c*(5*c - 4*a)")));
    let s1 = base1.scale(&int(4));
    let s2 = base2.scale(&int(2));
    let s = &s1 + &s2;
    out.push(IdentityCheck::new("S1 = 28c(2a+c)", &s1, &p("28*c*(2*a + c)")));
    out.push(IdentityCheck::new("S2 = 14c(5c-4a)", &s2, &p("14*c*(5*c - 4*a)")));
    out.push(IdentityCheck::new("S = 98c^2", &s, &p("98*c^2")));
    // a = (5 S1 - 2 S2) / (28 sqrt(2S)) and c = sqrt(S) / (7 sqrt 2), squared.
    let num = &s1.scale(&int(5)) - &s2.scale(&int(2));
    out.push(IdentityCheck::new("inversion for a, squared", &num.pow(2), &(&s.scale(&int(2 * 28 * 28)) * &p("a^2"))));
    out.push(IdentityCheck::new("inversion for a, sign: 5 S1 - 2 S2 = 392 a c", &num, &p("392*a*c")));
    out.push(IdentityCheck::new("inversion for c, squared", &s, &p("98*c^2")));

    // a = 2s, b = 2/s - 10s; clear the denominator s.
    let two_s: BTreeMap<Param, Poly> = [(Param::A, p("2*s"))].into();
    let curve = p("5*a^2 + a*b").substitute(&two_s);
    let cleared = curve.substitute_fraction(Param::B, &p("2 - 10*s^2"), &p("s"));
    let den = p("s").pow(curve.degree_in(Param::B));
    out.push(IdentityCheck::new("5a^2 + ab = 4 along a = 2s, b = 2/s - 10s", &cleared, &den.scale(&int(4))));
    Ok(out)
}

/// One eigenvalue cross-check: the scalar curvature from the Ricci trace
/// against `(4 lambda^2 - |T|^2) / 2`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenScalarCheck {
    pub label: String,
    pub lambda: String,
    pub scal_from_ricci: String,
    pub scal_from_eigen: String,
    pub holds: bool,
}

/// Torsion forms with a known eigenvalue on a spinor: (label, T, spinor, lambda).
pub fn eigen_cases() -> Vec<(&'static str, KForm, usize, Poly)> {
    let f = |s: &str| parse_form(s).expect("static");
    vec![
        ("2F^e7 on psi1", f("2*e127 + 2*e347 + 2*e567"), 1, Poly::int(-6)),
        ("2F^e7 on psi2", f("2*e127 + 2*e347 + 2*e567"), 2, Poly::int(-6)),
        ("Sigma on psi1", f("e135 - e146 - e236 - e245"), 1, Poly::int(-4)),
        ("Sigma on psi2", f("e135 - e146 - e236 - e245"), 2, Poly::int(4)),
        ("plane a+b=c on psi1", u2_plane_one(), 1, p("-7*c")),
        ("plane a+b=c on psi2", u2_plane_one(), 2, p("-7*c")),
        ("plane 4(a+b)=-3c on psi1", u2_plane_two(), 1, p("-7*c")),
        ("plane 4(a+b)=-3c on psi2", u2_plane_two(), 2, p("7*c")),
        ("phi on psi1", phi(), 1, Poly::int(-7)),
    ]
}

pub fn eigen_scalar_consistency() -> Result<Vec<EigenScalarCheck>> {
    eigen_cases()
        .into_iter()
        .map(|(label, t, k, lambda)| {
            let psi = Spinor::psi(k)?;
            let ric = ricci_riemannian(&t, &ricci_characteristic(&t, &psi)?)?;
            let from_ricci = ric.trace();
            let from_eigen = scalar_from_eigen(&t, &lambda);
            let eigen_ok = crate::clifford::eigenvalue_on(&clifford_action(&t), &psi)?.as_ref() == Some(&lambda);
            Ok(EigenScalarCheck {
                label: label.into(),
                lambda: lambda.to_string(),
                holds: eigen_ok && from_ricci == from_eigen,
                scal_from_ricci: from_ricci.to_string(),
                scal_from_eigen: from_eigen.to_string(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;

    fn psi(k: usize) -> Spinor {
        Spinor::psi(k).unwrap()
    }

    fn f(s: &str) -> KForm {
        parse_form(s).unwrap()
    }

    fn diag(m: &PolyMatrix) -> Vec<Poly> {
        (0..7).map(|i| m.get(i, i).clone()).collect()
    }

    #[test]
    fn sasakian_calibration_case() {
        let t = f("2*e127 + 2*e347 + 2*e567");
        let ric = ricci_riemannian(&t, &ricci_characteristic(&t, &psi(1)).unwrap()).unwrap();
        let mut expected = vec![Poly::int(10); 6];
        expected.push(Poly::int(6));
        assert_eq!(diag(&ric), expected);
        assert_eq!(block_value(&ric, &[1, 2, 3, 4, 5, 6]), Some(Poly::int(10)));
    }

    #[test]
    fn zero_torsion_gives_zero_ricci() {
        let r = ricci_characteristic(&KForm::zero(3), &psi(1)).unwrap();
        assert!(r.is_zero());
        assert_eq!(scalar_from_eigen(&KForm::zero(3), &Poly::zero()), Poly::zero());
    }

    #[test]
    fn sigma_case() {
        let t = f("e135 - e146 - e236 - e245");
        let d = ricci_data(&t, &psi(1), &blocks(&SPLIT_6_1)).unwrap();
        assert_eq!(d.blocks[0].riemannian, Poly::int(5));
        assert_eq!(d.blocks[1].riemannian, Poly::int(0));
        assert_eq!(d.scal_riemannian, Poly::int(30));
        assert_eq!(scalar_from_eigen(&t, &Poly::int(4)), Poly::int(30));
        assert_eq!(scalar_from_eigen(&t, &Poly::int(-4)), Poly::int(30));
    }

    #[test]
    fn plane_one_blocks() {
        let d = ricci_data(&u2_plane_one(), &psi(1), &blocks(&SPLIT_4_2_1)).unwrap();
        let nab: Vec<String> = d.blocks.iter().map(|b| b.characteristic.to_string()).collect();
        let rg: Vec<Poly> = d.blocks.iter().map(|b| b.riemannian.clone()).collect();
        assert_eq!(d.blocks[0].characteristic, p("-4*a^2 + 10*a*c + 6*c^2"), "{nab:?}");
        assert_eq!(d.blocks[1].characteristic, p("-16*a^2 + 12*a*c + 10*c^2"));
        assert!(d.blocks[2].characteristic.is_zero());
        assert_eq!(rg, vec![p("-2*a^2 + 12*a*c + 13/2*c^2"), p("-8*a^2 - 8*a*c + 45/2*c^2"), p("12*a^2 - 16*a*c + 27/2*c^2")]);
        assert_eq!(d.scal_riemannian, p("-12*a^2 + 16*a*c + 169/2*c^2"));
        assert_eq!(u2_plane_one().norm_sq(), p("24*a^2 - 32*a*c + 27*c^2"));
    }

    #[test]
    fn plane_two_scalar() {
        let t = u2_plane_two();
        let expect = p("-12*a^2 - 12*a*c + 711/8*c^2");
        for k in [1, 2] {
            let ric = ricci_riemannian(&t, &ricci_characteristic(&t, &psi(k)).unwrap()).unwrap();
            assert_eq!(ric.trace(), expect);
        }
        assert_eq!(scalar_from_eigen(&t, &p("7*c")), expect);
        let sigma_form = f("e135 - e146 - e236 - e245").scale(&p("7/4*c"));
        let rest = f("e127 + e347 - 2*e567").scale(&p("2*a + c"));
        assert_eq!(t, sigma_form.add(&rest).unwrap());
    }

    #[test]
    fn su2_first_line_blocks() {
        let t = crate::torsion::su2_lines()[0].clone();
        let d = ricci_data(&t, &psi(1), &blocks(&SPLIT_4_3)).unwrap();
        assert_eq!((d.blocks[0].characteristic.clone(), d.blocks[1].characteristic.clone()), (Poly::int(3), Poly::int(0)));
        assert_eq!(d.blocks[0].riemannian, Poly::constant(rat(9, 2)));
        assert_eq!(d.blocks[1].riemannian, Poly::int(3));
    }

    #[test]
    fn stiefel_values() {
        let d = ricci_data(&stiefel_torsion(), &psi(1), &blocks(&SPLIT_6_1)).unwrap();
        assert_eq!(d.blocks[0].riemannian, p("5/2*49*c^2"));
        assert_eq!(d.blocks[1].riemannian, p("3/2*49*c^2"));
    }

    #[test]
    fn phi_vertical_blocks() {
        let d = ricci_data(&phi_plus_vertical(), &psi(1), &blocks(&SPLIT_4_3)).unwrap();
        assert_eq!(d.blocks[0].characteristic, p("12*a^2 + 3*a*b"));
        assert_eq!(d.blocks[1].characteristic, p("12*a^2 + 4*a*b"));
        assert_eq!(d.blocks[0].riemannian, p("27/2*a^2 + 3*a*b"));
        assert_eq!(d.blocks[1].riemannian, p("13*a^2 + 4*a*b + 1/2*(a + b)^2"));
    }

    #[test]
    fn spinor_identities() {
        let r = spinor_field_identities(&phi_plus_vertical(), &psi(1), &blocks(&SPLIT_4_3)).unwrap();
        assert!(r.constant_on_blocks);
        assert_eq!(r.factors[0].as_deref(), Some("3*a"));
        assert_eq!(contraction_factor(&phi_plus_vertical(), &psi(1), 7).unwrap(), Some(p("3*a + b")));
        // (X _| T) psi1 = 2 X psi1 + 4 g(X, e7) e7 psi1.
        let t = f("2*e127 + 2*e347 + 2*e567");
        for i in 1..=7 {
            let want = if i == 7 { 6 } else { 2 };
            assert_eq!(contraction_factor(&t, &psi(1), i).unwrap(), Some(Poly::int(want)));
        }
    }

    #[test]
    fn rejects_zero_spinor() {
        assert!(ricci_characteristic(&phi(), &Spinor(vec![Rational::zero(); 8])).is_err());
    }

    #[test]
    fn non_parallel_form_is_inconsistent() {
        // For e123 + e145 the spinor equation for Ric has no solution.
        assert!(matches!(ricci_characteristic(&f("e123 + e145"), &psi(1)), Err(AlgebraError::Inconsistent(_))));
    }

    #[test]
    fn derived_identities_hold() {
        for c in derived_scalar_identities().unwrap() {
            assert!(c.holds, "{c:?}");
        }
    }

    #[test]
    fn eigen_scalar_cross_check() {
        for c in eigen_scalar_consistency().unwrap() {
            assert!(c.holds, "{c:?}");
        }
    }

    #[test]
    fn ricci_is_symmetric_and_quadratic() {
        let t = u2_plane_one();
        let r = ricci_characteristic(&t, &psi(1)).unwrap();
        assert_eq!(r, r.transpose());
        let scaled = t.scale(&Poly::int(3));
        assert_eq!(ricci_characteristic(&scaled, &psi(1)).unwrap(), r.scale(&Poly::int(9)));
    }
}
