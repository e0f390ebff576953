//! Randomized algebraic laws for the exact substrate.

use std::collections::BTreeMap;

use g2core::clifford::{clifford_action, Spinor};
use g2core::exact::{rat, Param, Poly, QMatrix, Rational};
use g2core::exterior::{basis_blades, lambda3_split, phi, KForm};
use g2core::g2lie::{bracket, g2_elements, is_in_g2};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn poly() -> impl Strategy<Value = Poly> {
    let vars = [Param::A, Param::B, Param::C];
    prop::collection::vec((rational(), 0u32..=2, 0usize..3), 0..5).prop_map(move |terms| {
        terms.into_iter().fold(Poly::zero(), |acc, (c, e, v)| &acc + &Poly::var(vars[v]).pow(e).scale(&c))
    })
}

fn form(grade: usize) -> impl Strategy<Value = KForm> {
    let n = basis_blades(grade).len();
    prop::collection::vec(rational(), n).prop_map(move |c| KForm::from_coords(grade, &c))
}

fn sparse_form(grade: usize) -> impl Strategy<Value = KForm> {
    let n = basis_blades(grade).len();
    prop::collection::vec((0..n, rational()), 1..4).prop_map(move |entries| {
        let mut c = vec![Rational::from_integer(0.into()); n];
        for (i, v) in entries {
            c[i] = v;
        }
        KForm::from_coords(grade, &c)
    })
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| QMatrix::from_fn(rows, cols, |i, j| rat(v[i * cols + j], 1)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn substitution_is_a_ring_map(p in poly(), q in poly(), s in poly()) {
        let b: BTreeMap<Param, Poly> = [(Param::A, s)].into_iter().collect();
        prop_assert_eq!((&p * &q).substitute(&b), &p.substitute(&b) * &q.substitute(&b));
        prop_assert_eq!((&p + &q).substitute(&b), &p.substitute(&b) + &q.substitute(&b));
    }

    #[test]
    fn parse_display_round_trip(p in poly()) {
        let back: Poly = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn wedge_is_graded_commutative(a in sparse_form(2), b in sparse_form(3), c in sparse_form(1)) {
        prop_assert_eq!(a.wedge(&b), b.wedge(&a));
        prop_assert_eq!(b.wedge(&c), c.wedge(&b).neg());
        prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
    }

    #[test]
    fn contraction_is_an_antiderivation(a in sparse_form(2), b in sparse_form(3), i in 1usize..=7) {
        let lhs = a.wedge(&b).contract(i).unwrap();
        let rhs = a.contract(i).unwrap().wedge(&b).add(&a.wedge(&b.contract(i).unwrap())).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(b.contract(i).unwrap().contract(i).unwrap().is_zero());
    }

    #[test]
    fn hodge_star_is_an_isometric_involution(a in form(3)) {
        prop_assert_eq!(a.hodge_star().hodge_star(), a.clone());
        prop_assert_eq!(a.hodge_star().norm_sq(), a.norm_sq());
    }

    #[test]
    fn lambda3_split_sums_back(a in form(3)) {
        let s = lambda3_split(&a).unwrap();
        let sum = s.part1.add(&s.part7).unwrap().add(&s.part27).unwrap();
        prop_assert_eq!(sum, a);
        prop_assert!(s.part1.inner(&s.part27).unwrap().is_zero());
        prop_assert!(s.part7.inner(&s.part27).unwrap().is_zero());
        prop_assert!(s.part1.inner(&s.part7).unwrap().is_zero());
    }

    #[test]
    fn split_is_idempotent(a in form(3)) {
        let s = lambda3_split(&a).unwrap();
        let again = lambda3_split(&s.part27).unwrap();
        prop_assert!(again.part1.is_zero() && again.part7.is_zero());
        prop_assert_eq!(again.part27, s.part27);
    }

    #[test]
    fn clifford_action_is_linear(a in form(3), b in form(3), c in rational()) {
        let lhs = clifford_action(&a.add(&b.scale_rat(&c)).unwrap());
        let rhs = clifford_action(&a).add(&clifford_action(&b.scale_rat(&c)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn g2_is_closed_under_bracket(x in 0usize..14, y in 0usize..14) {
        let e = g2_elements();
        prop_assert!(is_in_g2(&bracket(&e[x], &e[y])));
        prop_assert!(bracket(&e[x], &e[y]).add(&bracket(&e[y], &e[x])).is_zero());
    }

    #[test]
    fn rank_nullity(m in matrix(5, 7)) {
        prop_assert_eq!(m.rank() + m.kernel().dim(), 7);
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }
}

#[test]
fn phi_acts_on_psi1_with_minus_seven() {
    let psi1 = Spinor::psi(1).unwrap();
    let lambda = g2core::clifford::eigenvalue_on(&clifford_action(&phi()), &psi1).unwrap();
    assert_eq!(lambda.map(|l| l.to_string()), Some("-7".to_string()));
}
