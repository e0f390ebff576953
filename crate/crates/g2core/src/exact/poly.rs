use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::param::{Param, NPARAMS};
use super::{int, Rational};

/// Exponent vector over the fixed parameter list.
///
/// Ordered graded-lexicographically with the *largest* monomial first, so
/// iterating a `BTreeMap<Monomial, _>` yields terms in display order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u8; NPARAMS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NPARAMS])
    }

    pub fn var(p: Param) -> Self {
        let mut e = [0; NPARAMS];
        e[p.index()] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn exponent(&self, p: Param) -> u8 {
        self.0[p.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0.iter()) {
            *x += *y;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in Param::ALL {
            let e = self.exponent(p);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(int(n))
    }

    pub fn var(p: Param) -> Self {
        let mut q = Poly::zero();
        q.add_term(Monomial::var(p), Rational::one());
        q
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c * m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if the polynomial has no parameter dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, p: Param) -> u32 {
        self.terms.keys().map(|m| m.exponent(p) as u32).max().unwrap_or(0)
    }

    pub fn params(&self) -> BTreeSet<Param> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            for p in Param::ALL {
                if m.exponent(p) > 0 {
                    out.insert(p);
                }
            }
        }
        out
    }

    /// Coefficient of the leading (graded-lex largest) term.
    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.values().next()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self, p: Param) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(p);
            if e == 0 {
                continue;
            }
            let mut m2 = *m;
            m2.0[p.index()] -= 1;
            out.add_term(m2, c * int(e as i64));
        }
        out
    }

    /// Simultaneous substitution of polynomials for parameters.
    pub fn substitute(&self, bindings: &BTreeMap<Param, Poly>) -> Poly {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut out = Poly::zero();
        let mut powers: BTreeMap<(Param, u8), Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut kept = *m;
            let mut term = Poly::one();
            for (p, val) in bindings {
                let e = m.exponent(*p);
                if e == 0 {
                    continue;
                }
                kept.0[p.index()] = 0;
                let pw = powers.entry((*p, e)).or_insert_with(|| val.pow(e as u32));
                term = &term * &*pw;
            }
            let mut head = Poly::zero();
            head.add_term(kept, c.clone());
            out = &out + &(&head * &term);
        }
        out
    }

    /// Substitutes `p = num / den` and clears the denominator by multiplying
    /// with `den^deg_p(self)`.
    pub fn substitute_fraction(&self, p: Param, num: &Poly, den: &Poly) -> Poly {
        let d = self.degree_in(p);
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(p) as u32;
            let mut kept = *m;
            kept.0[p.index()] = 0;
            let mut head = Poly::zero();
            head.add_term(kept, c.clone());
            out = &out + &(&(&head * &num.pow(e)) * &den.pow(d - e));
        }
        out
    }

    /// Evaluates at rational values; unbound parameters remain symbolic.
    pub fn eval(&self, values: &BTreeMap<Param, Rational>) -> Poly {
        let b: BTreeMap<Param, Poly> = values.iter().map(|(p, v)| (*p, Poly::constant(v.clone()))).collect();
        self.substitute(&b)
    }

    /// Evaluates at rational values, returning `None` if a parameter is unbound.
    pub fn eval_full(&self, values: &BTreeMap<Param, Rational>) -> Option<Rational> {
        self.eval(values).as_constant()
    }

    /// Splits `self = sum_i c_i * vars[i] + rest`, where no `c_i` or `rest`
    /// involves `vars`. Returns `None` if `self` is not affine in `vars`.
    pub fn split_affine(&self, vars: &[Param]) -> Option<(Vec<Poly>, Poly)> {
        let mut coeffs = vec![Poly::zero(); vars.len()];
        let mut rest = Poly::zero();
        for (m, c) in &self.terms {
            let hits: Vec<usize> = (0..vars.len()).filter(|&i| m.exponent(vars[i]) > 0).collect();
            match hits.as_slice() {
                [] => rest.add_term(*m, c.clone()),
                [i] if m.exponent(vars[*i]) == 1 => {
                    let mut m2 = *m;
                    m2.0[vars[*i].index()] = 0;
                    coeffs[*i].add_term(m2, c.clone());
                }
                _ => return None,
            }
        }
        Some((coeffs, rest))
    }

    /// Divides out the content so the leading coefficient is positive and
    /// all coefficients are coprime integers.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        use num_integer::Integer;
        let mut num_gcd = num_bigint::BigInt::zero();
        let mut den_lcm = num_bigint::BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut factor = Rational::new(den_lcm, num_gcd);
        if self.leading_coefficient().unwrap().is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl From<Param> for Poly {
    fn from(p: Param) -> Self {
        Poly::var(p)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

pub(crate) fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(&fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&abs))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn a() -> Poly {
        Poly::var(Param::A)
    }
    fn b() -> Poly {
        Poly::var(Param::B)
    }

    #[test]
    fn arithmetic_and_display() {
        let p = &(&a() + &b()) * &(&a() - &b());
        assert_eq!(p.to_string(), "a^2 - b^2");
        let q = &p.scale(&rat(-3, 2)) + &Poly::int(5);
        assert_eq!(q.to_string(), "-3/2*a^2 + 3/2*b^2 + 5");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn substitution_and_fractions() {
        // 5a^2 + ab - 4 with a = 2s, b = (2 - 10 s^2)/s vanishes after clearing.
        let s = Poly::var(Param::S);
        let p = &(&(&a() * &a()).scale(&int(5)) + &(&a() * &b())) - &Poly::int(4);
        let mut bind = BTreeMap::new();
        bind.insert(Param::A, s.scale(&int(2)));
        let p1 = p.substitute(&bind);
        let num = &Poly::int(2) - &(&s * &s).scale(&int(10));
        let cleared = p1.substitute_fraction(Param::B, &num, &s);
        assert!(cleared.is_zero());
    }

    #[test]
    fn affine_split() {
        let x = Poly::var(Param::X);
        let p = &(&x * &a()) + &(&a() * &a());
        let (c, rest) = p.split_affine(&[Param::X]).unwrap();
        assert_eq!(c[0], a());
        assert_eq!(rest, &a() * &a());
        assert!((&x * &x).split_affine(&[Param::X]).is_none());
    }

    #[test]
    fn derivative_and_primitive() {
        let p = (&a() * &a()).scale(&rat(3, 4));
        assert_eq!(p.derivative(Param::A), a().scale(&rat(3, 2)));
        assert_eq!(p.scale(&int(-1)).primitive(), &a() * &a());
    }
}
