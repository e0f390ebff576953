//! Randomized and exhaustive property checks of the algebraic substrate,
//! reported as counts so they can run inside the claim registry.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::clifford::{gamma_matrix, Spinor};
use crate::exact::{int, rat, LinearSubspace, Poly, QMatrix, Rational};
use crate::exterior::{basis_blades, lambda3_27_subspace, lambda3_7_generators, lambda3_split, phi, KForm};
use crate::g2lie::{annihilates, bracket, catalog, is_in_g2, spin_action, vector_action, SubalgebraName};

/// Number of instances checked and the ones that failed (first few kept).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyReport {
    pub property: String,
    pub checked: usize,
    pub failed: usize,
    pub examples: Vec<String>,
}

impl PropertyReport {
    fn new(property: &str) -> Self {
        PropertyReport { property: property.into(), checked: 0, failed: 0, examples: Vec::new() }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.examples.len() < 5 {
                self.examples.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }
}

/// `e_i e_j + e_j e_i = -2 delta_ij` for all 49 ordered pairs.
pub fn clifford_relations() -> PropertyReport {
    let mut r = PropertyReport::new("Clifford relations");
    let id = QMatrix::identity(8);
    for i in 1..=7 {
        for j in 1..=7 {
            let a = gamma_matrix(i).expect("index");
            let b = gamma_matrix(j).expect("index");
            let expect = if i == j { id.scale(&int(-2)) } else { QMatrix::zeros(8, 8) };
            r.record(a.mul(b).add(&b.mul(a)) == expect, || format!("({i},{j})"));
        }
    }
    r
}

fn random_monomial(rng: &mut ChaCha8Rng, grade: usize) -> KForm {
    let blades = basis_blades(grade);
    let b = blades[rng.gen_range(0..blades.len())];
    let c = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
    KForm::monomial(&b.indices(), Poly::int(c)).expect("valid blade")
}

/// `e_i _| (a ^ b) = (e_i _| a) ^ b + (-1)^p a ^ (e_i _| b)` on random
/// monomials of degrees p, q with p + q <= 7.
pub fn antiderivation(samples: usize, seed: u64) -> PropertyReport {
    let mut r = PropertyReport::new("contraction is an anti-derivation of the wedge product");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let p = rng.gen_range(1..=4);
        let q = rng.gen_range(1..=7 - p);
        let a = random_monomial(&mut rng, p);
        let b = random_monomial(&mut rng, q);
        let i = rng.gen_range(1..=7);
        let lhs = a.wedge(&b).contract(i).expect("index");
        let sign = if p % 2 == 0 { Poly::one() } else { Poly::int(-1) };
        let rhs = a
            .contract(i)
            .expect("index")
            .wedge(&b)
            .add(&a.wedge(&b.contract(i).expect("index")).scale(&sign))
            .expect("grades agree");
        r.record(lhs == rhs, || format!("e{i} _| ({a}) ^ ({b})"));
    }
    r
}

/// Random rational 3-forms split into L1 + L7 + L27: the parts sum back,
/// lie in their summands and are mutually orthogonal.
pub fn split_reconstruction(samples: usize, seed: u64) -> PropertyReport {
    let mut r = PropertyReport::new("Lambda^3 split reconstructs the form");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l1 = LinearSubspace::from_spanning(35, vec![phi().to_coords().expect("rational")]);
    let l7 = LinearSubspace::from_spanning(35, lambda3_7_generators().iter().map(|g| g.to_coords().expect("rational")).collect());
    let l27 = lambda3_27_subspace();
    for _ in 0..samples {
        let coords: Vec<Rational> = (0..35).map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=3))).collect();
        let alpha = KForm::from_coords(3, &coords);
        let s = lambda3_split(&alpha).expect("3-form");
        let sum = s.part1.add(&s.part7).and_then(|x| x.add(&s.part27)).expect("grade 3");
        let c = |f: &KForm| f.to_coords().expect("rational");
        let orth = [(&s.part1, &s.part7), (&s.part1, &s.part27), (&s.part7, &s.part27)]
            .iter()
            .all(|(x, y)| x.inner(y).expect("grade 3").is_zero());
        let ok = sum == alpha && l1.contains(&c(&s.part1)) && l7.contains(&c(&s.part7)) && l27.contains(&c(&s.part27)) && orth;
        r.record(ok, || alpha.to_string());
    }
    r
}

/// For every pair of generators of every catalog algebra: the spin and vector
/// actions are homomorphisms, Clifford multiplication is equivariant, and the
/// generators lie in g2 and fix psi1.
pub fn representation_compatibility() -> PropertyReport {
    let mut r = PropertyReport::new("spin and vector actions are compatible");
    let psi1 = Spinor::psi(1).expect("index");
    for name in SubalgebraName::ALL {
        let gens = catalog(name).generators();
        for w in gens {
            r.record(is_in_g2(w) && annihilates(w, &psi1), || format!("{name}: {w} not in g2"));
            let sw = spin_action(w);
            let vw = vector_action(w);
            for i in 1..=7 {
                let g = gamma_matrix(i).expect("index");
                let lhs = sw.commutator(g);
                let image = vw.column(i - 1);
                let mut rhs = QMatrix::zeros(8, 8);
                for (k, c) in image.iter().enumerate() {
                    if !c.is_zero() {
                        rhs = rhs.add(&gamma_matrix(k + 1).expect("index").scale(c));
                    }
                }
                r.record(lhs == rhs, || format!("{name}: [{w}, e{i}]"));
            }
            for h in gens {
                let b = bracket(w, h);
                r.record(spin_action(&b) == sw.commutator(&spin_action(h)), || format!("{name}: spin [{w}, {h}]"));
                r.record(vector_action(&b) == vw.commutator(&vector_action(h)), || format!("{name}: vector [{w}, {h}]"));
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass() {
        assert_eq!(clifford_relations().checked, 49);
        assert!(clifford_relations().passed());
        let a = antiderivation(1000, 1);
        assert!(a.passed(), "{a:?}");
        assert_eq!(a.checked, 1000);
        assert!(split_reconstruction(100, 2).passed());
        let rc = representation_compatibility();
        assert!(rc.passed(), "{rc:?}");
    }

    #[test]
    fn detects_a_broken_identity() {
        let mut r = PropertyReport::new("control");
        r.record(false, || "x".into());
        assert!(!r.passed());
        assert_eq!(r.examples, vec!["x".to_string()]);
    }
}
