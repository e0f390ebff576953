//! Exact arithmetic: rationals, polynomials in a fixed parameter list,
//! matrices over either, and canonical linear subspaces.

mod matrix;
mod param;
mod parse;
mod poly;
mod subspace;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use matrix::{AffineSolution, Matrix, PolyMatrix, QMatrix, Ring};
pub use param::{Param, NPARAMS};
pub use parse::parse_poly;
pub use poly::{Monomial, Poly};
pub use subspace::LinearSubspace;

pub(crate) use poly::fmt_rational;

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rational_to_string(r: &Rational) -> String {
    fmt_rational(r)
}

/// Exact square root when `r` is the square of a rational.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Rational::zero());
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

/// Squarefree integer `k` with `r = k * q^2` for some rational `q`.
/// Trial division; intended for small inputs.
pub fn squarefree_class(r: &Rational) -> BigInt {
    assert!(!r.is_zero(), "zero has no squarefree class");
    let mut n = (r.numer() * r.denom()).abs();
    let mut out = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0u32;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &p;
        }
        p += 1;
    }
    out *= n;
    if r.is_negative() {
        -out
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_and_squarefree() {
        assert_eq!(rational_sqrt(&rat(49, 4)), Some(rat(7, 2)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(-1, 1)), None);
        assert_eq!(squarefree_class(&rat(125, 18432)), BigInt::from(10));
        assert_eq!(squarefree_class(&rat(-12, 1)), BigInt::from(-3));
    }
}
