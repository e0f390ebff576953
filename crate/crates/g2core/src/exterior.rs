//! Exterior algebra of R^7 with the standard orthonormal basis e1..e7.
//!
//! Forms are stored over strictly increasing index tuples (bitmask blades).
//! Monomials are orthonormal, and e1^...^e7 is the positive volume form.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};
use crate::exact::{int, parse_poly, LinearSubspace, Param, Poly, Rational};

/// A basis monomial e_{i1...ik}, stored as a bitmask (bit i-1 for e_i).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Blade(u8);

impl Blade {
    pub const FULL: Blade = Blade(0x7f);

    pub fn from_mask(mask: u8) -> Self {
        Blade(mask & 0x7f)
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Increasing 1-based indices.
    pub fn indices(self) -> Vec<usize> {
        (1..=7).filter(|i| self.0 & (1 << (i - 1)) != 0).collect()
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=7).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    /// Sorts an index list into a blade. Returns the permutation sign, or
    /// `None` if an index repeats.
    pub fn from_indices(indices: &[usize]) -> Result<Option<(i64, Blade)>> {
        let mut mask = 0u8;
        let mut sign = 1i64;
        for (k, &i) in indices.iter().enumerate() {
            if !(1..=7).contains(&i) {
                return Err(AlgebraError::IndexOutOfRange { index: i });
            }
            if mask & (1 << (i - 1)) != 0 {
                return Ok(None);
            }
            mask |= 1 << (i - 1);
            let inversions = indices[..k].iter().filter(|&&j| j > i).count();
            if inversions % 2 == 1 {
                sign = -sign;
            }
        }
        Ok(Some((sign, Blade(mask))))
    }

    pub fn complement(self) -> Blade {
        Blade(!self.0 & 0x7f)
    }

    /// Sign of e_I ^ e_J, or 0 if the blades overlap.
    pub fn wedge_sign(self, other: Blade) -> i64 {
        if self.0 & other.0 != 0 {
            return 0;
        }
        let mut swaps = 0;
        for j in other.indices() {
            swaps += self.indices().iter().filter(|&&i| i > j).count();
        }
        if swaps % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Sign of e_i _| e_I (0 if i is not in I).
    pub fn contract_sign(self, i: usize) -> i64 {
        if !self.contains(i) {
            return 0;
        }
        let before = (1..i).filter(|&j| self.contains(j)).count();
        if before % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn remove(self, i: usize) -> Blade {
        Blade(self.0 & !(1 << (i - 1)))
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade().cmp(&other.grade()).then_with(|| self.indices().cmp(&other.indices()))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        f.write_str("e")?;
        for i in self.indices() {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

/// All blades of grade `k` in increasing lexicographic order.
pub fn basis_blades(k: usize) -> &'static [Blade] {
    static TABLE: OnceLock<Vec<Vec<Blade>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        (0..=7)
            .map(|g| {
                let mut v: Vec<Blade> = (0u8..128).map(Blade).filter(|b| b.grade() == g).collect();
                v.sort();
                v
            })
            .collect()
    });
    table.get(k).map_or(&[], Vec::as_slice)
}

/// Position of a blade within `basis_blades(blade.grade())`.
pub fn blade_position(b: Blade) -> usize {
    basis_blades(b.grade()).binary_search(&b).expect("blade present in its grade")
}

/// Homogeneous form of fixed grade with polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KForm {
    grade: usize,
    coeffs: BTreeMap<Blade, Poly>,
}

impl KForm {
    pub fn zero(grade: usize) -> Self {
        KForm { grade, coeffs: BTreeMap::new() }
    }

    pub fn scalar(c: Poly) -> Self {
        let mut f = KForm::zero(0);
        f.add_blade(Blade(0), c);
        f
    }

    /// Basis vector e_i.
    pub fn vector(i: usize) -> Result<Self> {
        KForm::monomial(&[i], Poly::one())
    }

    /// `coeff * e_{indices}`; indices need not be sorted.
    pub fn monomial(indices: &[usize], coeff: Poly) -> Result<Self> {
        let mut f = KForm::zero(indices.len());
        if let Some((sign, b)) = Blade::from_indices(indices)? {
            f.add_blade(b, coeff.scale(&int(sign)));
        }
        Ok(f)
    }

    /// Builds a form from `(index string, integer coefficient)` pairs, e.g.
    /// `[("127", 1), ("135", -1)]`. Panics on malformed input; meant for
    /// compile-time constants.
    pub fn from_int_terms(terms: &[(&str, i64)]) -> Self {
        let grade = terms.first().map_or(0, |(s, _)| s.len());
        let mut f = KForm::zero(grade);
        for (s, c) in terms {
            let idx: Vec<usize> = s.chars().map(|ch| ch.to_digit(10).expect("digit") as usize).collect();
            let m = KForm::monomial(&idx, Poly::int(*c)).expect("valid indices");
            f = f.add(&m).expect("uniform grade");
        }
        f
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Poly)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, b: Blade) -> Poly {
        self.coeffs.get(&b).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_blade(&mut self, b: Blade, c: Poly) {
        debug_assert_eq!(b.grade(), self.grade);
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(b).or_insert_with(Poly::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.coeffs.remove(&b);
        }
    }

    fn check_grade(&self, other: &KForm) -> Result<()> {
        if self.grade != other.grade {
            return Err(AlgebraError::GradeMismatch { expected: self.grade, found: other.grade });
        }
        Ok(())
    }

    pub fn add(&self, other: &KForm) -> Result<KForm> {
        self.check_grade(other)?;
        let mut out = self.clone();
        for (b, c) in &other.coeffs {
            out.add_blade(*b, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &KForm) -> Result<KForm> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> KForm {
        self.scale_rat(&int(-1))
    }

    pub fn scale(&self, c: &Poly) -> KForm {
        let mut out = KForm::zero(self.grade);
        for (b, v) in &self.coeffs {
            out.add_blade(*b, v * c);
        }
        out
    }

    pub fn scale_rat(&self, c: &Rational) -> KForm {
        let mut out = KForm::zero(self.grade);
        for (b, v) in &self.coeffs {
            out.add_blade(*b, v.scale(c));
        }
        out
    }

    /// Sum of `coeff_i * form_i`; all forms must share the grade `grade`.
    pub fn linear_combination(grade: usize, parts: &[(Poly, &KForm)]) -> Result<KForm> {
        let mut out = KForm::zero(grade);
        for (c, f) in parts {
            out = out.add(&f.scale(c))?;
        }
        Ok(out)
    }

    pub fn wedge(&self, other: &KForm) -> KForm {
        let grade = self.grade + other.grade;
        let mut out = KForm::zero(grade);
        if grade > 7 {
            return out;
        }
        for (b1, c1) in &self.coeffs {
            for (b2, c2) in &other.coeffs {
                let s = b1.wedge_sign(*b2);
                if s != 0 {
                    out.add_blade(Blade(b1.0 | b2.0), (c1 * c2).scale(&int(s)));
                }
            }
        }
        out
    }

    /// Interior product e_i _| self.
    pub fn contract(&self, i: usize) -> Result<KForm> {
        if !(1..=7).contains(&i) {
            return Err(AlgebraError::IndexOutOfRange { index: i });
        }
        let mut out = KForm::zero(self.grade.saturating_sub(1));
        if self.grade == 0 {
            return Ok(out);
        }
        for (b, c) in &self.coeffs {
            let s = b.contract_sign(i);
            if s != 0 {
                out.add_blade(b.remove(i), c.scale(&int(s)));
            }
        }
        Ok(out)
    }

    /// Interior product with a general vector (grade-1 form).
    pub fn contract_vector(&self, v: &KForm) -> Result<KForm> {
        if v.grade != 1 {
            return Err(AlgebraError::GradeMismatch { expected: 1, found: v.grade });
        }
        let mut out = KForm::zero(self.grade.saturating_sub(1));
        for (b, c) in &v.coeffs {
            let i = b.indices()[0];
            out = out.add(&self.contract(i)?.scale(c))?;
        }
        Ok(out)
    }

    /// Hodge star, defined by alpha ^ *beta = <alpha, beta> vol.
    pub fn hodge_star(&self) -> KForm {
        let mut out = KForm::zero(7 - self.grade);
        for (b, c) in &self.coeffs {
            let comp = b.complement();
            out.add_blade(comp, c.scale(&int(b.wedge_sign(comp))));
        }
        out
    }

    /// Inner product with orthonormal increasing-index monomials.
    pub fn inner(&self, other: &KForm) -> Result<Poly> {
        self.check_grade(other)?;
        let mut acc = Poly::zero();
        for (b, c) in &self.coeffs {
            if let Some(d) = other.coeffs.get(b) {
                acc = &acc + &(c * d);
            }
        }
        Ok(acc)
    }

    pub fn norm_sq(&self) -> Poly {
        self.inner(self).expect("same grade")
    }

    pub fn substitute(&self, b: &BTreeMap<Param, Poly>) -> KForm {
        let mut out = KForm::zero(self.grade);
        for (bl, c) in &self.coeffs {
            out.add_blade(*bl, c.substitute(b));
        }
        out
    }

    pub fn eval(&self, values: &BTreeMap<Param, Rational>) -> KForm {
        let b = values.iter().map(|(p, v)| (*p, Poly::constant(v.clone()))).collect();
        self.substitute(&b)
    }

    pub fn params(&self) -> std::collections::BTreeSet<Param> {
        self.coeffs.values().flat_map(Poly::params).collect()
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.values().all(Poly::is_constant)
    }

    /// Coordinates over `basis_blades(grade)`; requires rational coefficients.
    pub fn to_coords(&self) -> Result<Vec<Rational>> {
        basis_blades(self.grade)
            .iter()
            .map(|b| {
                let c = self.coeff(*b);
                c.as_constant().ok_or_else(|| AlgebraError::Parameterized(c.to_string()))
            })
            .collect()
    }

    pub fn poly_coords(&self) -> Vec<Poly> {
        basis_blades(self.grade).iter().map(|b| self.coeff(*b)).collect()
    }

    pub fn from_coords(grade: usize, coords: &[Rational]) -> KForm {
        let mut out = KForm::zero(grade);
        for (b, c) in basis_blades(grade).iter().zip(coords) {
            out.add_blade(*b, Poly::constant(c.clone()));
        }
        out
    }

    pub fn from_poly_coords(grade: usize, coords: &[Poly]) -> KForm {
        let mut out = KForm::zero(grade);
        for (b, c) in basis_blades(grade).iter().zip(coords) {
            out.add_blade(*b, c.clone());
        }
        out
    }

    /// Splits a form that is affine in `vars` into per-variable forms and a
    /// remainder: `self = sum_i vars[i] * parts[i] + rest`.
    pub fn split_affine(&self, vars: &[Param]) -> Option<(Vec<KForm>, KForm)> {
        let mut parts = vec![KForm::zero(self.grade); vars.len()];
        let mut rest = KForm::zero(self.grade);
        for (b, c) in &self.coeffs {
            let (cs, r) = c.split_affine(vars)?;
            for (p, ci) in parts.iter_mut().zip(cs) {
                p.add_blade(*b, ci);
            }
            rest.add_blade(*b, r);
        }
        Some((parts, rest))
    }
}

fn needs_parens(p: &Poly) -> bool {
    p.num_terms() > 1
}

impl fmt::Display for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (b, c)) in self.coeffs.iter().enumerate() {
            let (neg, body) = match c.as_constant() {
                Some(r) => (r.is_negative(), Poly::constant(r.abs())),
                None if !needs_parens(c) && c.leading_coefficient().is_some_and(|l| l.is_negative()) => {
                    (true, -c)
                }
                None => (false, c.clone()),
            };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if b.0 == 0 {
                if needs_parens(&body) {
                    write!(f, "({body})")?;
                } else {
                    write!(f, "{body}")?;
                }
            } else if body.as_constant().is_some_and(|r| r.is_one()) {
                write!(f, "{b}")?;
            } else if needs_parens(&body) {
                write!(f, "({body})*{b}")?;
            } else {
                write!(f, "{body}*{b}")?;
            }
        }
        Ok(())
    }
}

/// Splits `src` at top-level `+`/`-` signs, keeping each sign with its term.
fn split_signed_terms(src: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut neg = false;
    let mut prev_significant: Option<char> = None;
    for ch in src.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        let is_binary_sign = (ch == '+' || ch == '-')
            && depth == 0
            && !matches!(prev_significant, Some('*') | Some('/') | Some('^') | Some('(') | None);
        if is_binary_sign || ((ch == '+' || ch == '-') && depth == 0 && prev_significant.is_none()) {
            if !cur.trim().is_empty() {
                out.push((neg, cur.trim().to_string()));
            }
            cur.clear();
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
        if !ch.is_whitespace() {
            prev_significant = Some(ch);
        }
    }
    if !cur.trim().is_empty() {
        out.push((neg, cur.trim().to_string()));
    }
    out
}

/// Parses the textual form notation, e.g. `4*e127 - 3*e135` or
/// `(a + b)*e127 - 7/4*c*e135`.
pub fn parse_form(src: &str) -> Result<KForm> {
    let err = |reason: &str| AlgebraError::Parse { input: src.to_string(), reason: reason.to_string() };
    let trimmed = src.trim();
    if trimmed.is_empty() {
        return Err(err("empty form"));
    }
    if trimmed == "0" {
        return Err(err("grade of the zero form is ambiguous"));
    }
    let mut result: Option<KForm> = None;
    for (neg, term) in split_signed_terms(trimmed) {
        let mut depth = 0i32;
        let mut split_at = None;
        for (pos, ch) in term.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '*' if depth == 0 => split_at = Some(pos),
                _ => {}
            }
        }
        let (coeff_src, blade_src) = match split_at {
            Some(pos) => (Some(term[..pos].trim()), term[pos + 1..].trim()),
            None => (None, term.as_str()),
        };
        let digits = blade_src.strip_prefix('e').ok_or_else(|| err(&format!("expected e<digits> in `{term}`")))?;
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(err(&format!("bad blade `{blade_src}`")));
        }
        let idx: Vec<usize> = digits.chars().map(|c| c.to_digit(10).unwrap() as usize).collect();
        let mut coeff = match coeff_src {
            Some(c) => parse_poly(c)?,
            None => Poly::one(),
        };
        if neg {
            coeff = -coeff;
        }
        let m = KForm::monomial(&idx, coeff)?;
        result = Some(match result {
            None => m,
            Some(acc) => acc.add(&m).map_err(|_| err("mixed grades"))?,
        });
    }
    result.ok_or_else(|| err("no terms"))
}

impl FromStr for KForm {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        parse_form(s)
    }
}

/// The fundamental 3-form e127 + e135 - e146 - e236 - e245 + e347 + e567.
pub fn phi() -> KForm {
    KForm::from_int_terms(&[
        ("127", 1),
        ("135", 1),
        ("146", -1),
        ("236", -1),
        ("245", -1),
        ("347", 1),
        ("567", 1),
    ])
}

pub fn star_phi() -> KForm {
    phi().hodge_star()
}

pub fn volume() -> KForm {
    KForm::from_int_terms(&[("1234567", 1)])
}

/// Sum over i of (e_i _| T) ^ (e_i _| T).
pub fn sigma_dt(t: &KForm) -> Result<KForm> {
    if t.grade != 3 {
        return Err(AlgebraError::GradeMismatch { expected: 3, found: t.grade });
    }
    let mut out = KForm::zero(4);
    for i in 1..=7 {
        let c = t.contract(i)?;
        out = out.add(&c.wedge(&c))?;
    }
    Ok(out)
}

/// The three components of a 3-form under Lambda^3 = L1 + L7 + L27.
#[derive(Debug, Clone, PartialEq)]
pub struct Lambda3Split {
    pub part1: KForm,
    pub part7: KForm,
    pub part27: KForm,
}

/// The spanning forms e_i _| *phi of the 7-dimensional summand.
pub fn lambda3_7_generators() -> Vec<KForm> {
    let s = star_phi();
    (1..=7).map(|i| s.contract(i).expect("valid index")).collect()
}

/// Orthogonal projection onto the three summands. Works coefficient-wise,
/// so parameterized forms split linearly.
pub fn lambda3_split(alpha: &KForm) -> Result<Lambda3Split> {
    if alpha.grade != 3 {
        return Err(AlgebraError::GradeMismatch { expected: 3, found: alpha.grade });
    }
    let p = phi();
    let part1 = p.scale(&alpha.inner(&p)?.scale(&Rational::new(1.into(), 7.into())));
    // The generators e_i _| *phi are mutually orthogonal with norm^2 = 4.
    let mut part7 = KForm::zero(3);
    for g in lambda3_7_generators() {
        part7 = part7.add(&g.scale(&alpha.inner(&g)?.scale(&Rational::new(1.into(), 4.into()))))?;
    }
    let part27 = alpha.sub(&part1)?.sub(&part7)?;
    Ok(Lambda3Split { part1, part7, part27 })
}

/// The 27-dimensional summand as a subspace of the 35 monomial coordinates.
pub fn lambda3_27_subspace() -> &'static LinearSubspace {
    static SPACE: OnceLock<LinearSubspace> = OnceLock::new();
    SPACE.get_or_init(|| {
        let mut rows = vec![phi().to_coords().expect("rational")];
        rows.extend(lambda3_7_generators().iter().map(|g| g.to_coords().expect("rational")));
        LinearSubspace::from_spanning(35, rows).orthogonal_complement()
    })
}

/// Returns the unique rational `c` with `alpha = c * beta`, if any.
pub fn proportionality(alpha: &KForm, beta: &KForm) -> Option<Poly> {
    if alpha.grade != beta.grade || beta.is_zero() {
        return None;
    }
    let (b0, c0) = beta.coeffs.iter().next()?;
    let k = c0.as_constant()?;
    if k.is_zero() {
        return None;
    }
    let ratio = alpha.coeff(*b0).scale(&(Rational::one() / k));
    (beta.scale(&ratio) == *alpha).then_some(ratio)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> KForm {
        parse_form(s).unwrap()
    }

    #[test]
    fn wedge_basics() {
        assert_eq!(f("e1").wedge(&f("e2")), f("e12"));
        assert_eq!(f("e2").wedge(&f("e1")), f("-e12"));
        assert_eq!(f("e12 + e34 + e56").wedge(&f("e7")), f("e127 + e347 + e567"));
        let odd = f("e135 - 2*e246");
        assert!(odd.wedge(&odd).is_zero());
        let over = f("e1234").wedge(&f("e1567"));
        assert!(over.is_zero() && over.grade() == 8);
    }

    #[test]
    fn contraction_and_star() {
        assert_eq!(f("e123").contract(1).unwrap(), f("e23"));
        assert_eq!(f("e123").contract(2).unwrap(), f("-e13"));
        let t = f("7*c*e127 + 7*c*e347 + 7*c*e567");
        assert_eq!(t.contract(7).unwrap(), f("7*c*e12 + 7*c*e34 + 7*c*e56"));
        assert_eq!(volume().hodge_star(), KForm::scalar(Poly::one()));
        for b in basis_blades(3) {
            let m = KForm::monomial(&b.indices(), Poly::one()).unwrap();
            assert_eq!(m.hodge_star().hodge_star(), m);
            assert_eq!(m.wedge(&m.hodge_star()), volume());
        }
    }

    #[test]
    fn star_phi_golden() {
        assert_eq!(
            star_phi(),
            f("e1234 + e1256 + e1367 + e1457 + e2357 - e2467 + e3456")
        );
    }

    #[test]
    fn split_dimensions_and_examples() {
        assert_eq!(lambda3_27_subspace().dim(), 27);
        let gens = lambda3_7_generators();
        for (i, g) in gens.iter().enumerate() {
            for (j, h) in gens.iter().enumerate() {
                let expect = if i == j { Poly::int(4) } else { Poly::zero() };
                assert_eq!(g.inner(h).unwrap(), expect);
            }
            assert!(g.inner(&phi()).unwrap().is_zero());
        }
        let s = lambda3_split(&phi()).unwrap();
        assert_eq!((s.part1, s.part7.is_zero(), s.part27.is_zero()), (phi(), true, true));
        let su3 = f("4*e127 - 3*e135 + 3*e146 + 3*e236 + 3*e245 + 4*e347 + 4*e567");
        let s = lambda3_split(&su3).unwrap();
        assert!(s.part1.is_zero() && s.part7.is_zero());
        assert_eq!(s.part27, su3);
        // phi - 7 e567 is orthogonal to phi and to L7: it lies entirely in L27.
        let t = phi().sub(&f("7*e567")).unwrap();
        let s = lambda3_split(&t).unwrap();
        assert!(s.part1.is_zero() && s.part7.is_zero());
        assert_eq!(s.part27, t);
    }

    #[test]
    fn norms() {
        assert_eq!(phi().norm_sq(), Poly::int(7));
        assert_eq!(f("e135 - e146 - e236 - e245").norm_sq(), Poly::int(4));
        assert_eq!(f("2*e127 + 2*e347 + 2*e567").norm_sq(), Poly::int(12));
    }

    #[test]
    fn sigma_of_phi_is_multiple_of_star_phi() {
        assert!(sigma_dt(&KForm::zero(3)).unwrap().is_zero());
        let a = Poly::var(Param::A);
        let d = sigma_dt(&phi().scale(&a)).unwrap();
        let ratio = proportionality(&d, &star_phi()).unwrap();
        assert_eq!(ratio, (&a * &a).scale(&int(6)));
    }

    #[test]
    fn notation_round_trip() {
        for src in [
            "4*e127 - 3*e135",
            "(a + b)*e127 - 7/4*c*e135 + e567",
            "-e12 + 2*e34",
            "(2*a + c)*e127 + (-4*a + 5*c)*e567",
        ] {
            let parsed = f(src);
            assert_eq!(f(&parsed.to_string()), parsed, "{src}");
        }
        assert_eq!(f("e21"), f("-e12"));
        assert_eq!(f("-2*a*e135").to_string(), "-2*a*e135");
        assert!(parse_form("e11").unwrap().is_zero());
        assert!(parse_form("e18").is_err());
        assert!(parse_form("e12 + e3").is_err());
        assert!(parse_form("3*x12").is_err());
    }
}
