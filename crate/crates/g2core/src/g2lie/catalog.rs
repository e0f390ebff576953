use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{g2_elements, spin_action, so3_ir_construct, AlgebraElement, Subalgebra};
use crate::clifford::Spinor;
use crate::error::{AlgebraError, Result};
use crate::exact::{LinearSubspace, QMatrix, Rational};

/// The eight non-abelian subalgebras of g2 in the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SubalgebraName {
    Su3,
    U2,
    Su2,
    Suc2,
    R1Suc2,
    Su2Suc2,
    So3,
    So3Ir,
}

impl SubalgebraName {
    pub const ALL: [SubalgebraName; 8] = [
        SubalgebraName::Su3,
        SubalgebraName::U2,
        SubalgebraName::Su2,
        SubalgebraName::Suc2,
        SubalgebraName::R1Suc2,
        SubalgebraName::Su2Suc2,
        SubalgebraName::So3,
        SubalgebraName::So3Ir,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SubalgebraName::Su3 => "su3",
            SubalgebraName::U2 => "u2",
            SubalgebraName::Su2 => "su2",
            SubalgebraName::Suc2 => "suc2",
            SubalgebraName::R1Suc2 => "r1_suc2",
            SubalgebraName::Su2Suc2 => "su2_suc2",
            SubalgebraName::So3 => "so3",
            SubalgebraName::So3Ir => "so3_ir",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for SubalgebraName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SubalgebraName {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        SubalgebraName::ALL
            .iter()
            .copied()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| AlgebraError::UnknownName(s.to_string()))
    }
}

/// Named 2-forms used as generators throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGenerator {
    P1,
    P2,
    P3,
    Q1,
    Q2,
    Q3,
    S1,
    S2,
    S3,
}

impl NamedGenerator {
    pub fn notation(self) -> &'static str {
        match self {
            NamedGenerator::P1 => "e13 + e24",
            NamedGenerator::P2 => "e14 - e23",
            NamedGenerator::P3 => "e12 - e34",
            NamedGenerator::Q1 => "-e14 - e23 + 2*e57",
            NamedGenerator::Q2 => "-e13 + e24 + 2*e67",
            NamedGenerator::Q3 => "e12 + e34 - 2*e56",
            NamedGenerator::S1 => "e12 - e56",
            NamedGenerator::S2 => "e13 + e24 + e35 + e46",
            NamedGenerator::S3 => "e14 - e23 + e36 - e45",
        }
    }
}

pub fn generator(g: NamedGenerator) -> AlgebraElement {
    AlgebraElement::parse(g.notation()).expect("static generator notation")
}

fn named(gs: &[NamedGenerator]) -> Vec<AlgebraElement> {
    gs.iter().map(|g| generator(*g)).collect()
}

/// su(3): the elements of g2 that also annihilate psi2.
fn su3_generators() -> Vec<AlgebraElement> {
    let g2 = g2_elements();
    let psi2 = Spinor::psi(2).expect("valid index");
    // Column k of the system is the image of the k-th g2 basis element.
    let images: Vec<Vec<Rational>> = g2.iter().map(|w| spin_action(w).apply(psi2.coords())).collect();
    let a = QMatrix::from_fn(8, g2.len(), |i, j| images[j][i].clone());
    let kernel = a.kernel();
    let vecs: Vec<Vec<Rational>> = kernel
        .basis()
        .iter()
        .map(|t| {
            let mut v = vec![Rational::from_integer(0.into()); 21];
            for (c, w) in t.iter().zip(&g2) {
                for (acc, x) in v.iter_mut().zip(w.coords()) {
                    *acc += c * x;
                }
            }
            v
        })
        .collect();
    LinearSubspace::from_spanning(21, vecs)
        .basis()
        .iter()
        .map(|v| AlgebraElement::from_coords(v))
        .collect()
}

fn build(name: SubalgebraName) -> Result<Subalgebra> {
    use NamedGenerator::*;
    let gens = match name {
        SubalgebraName::Su3 => su3_generators(),
        SubalgebraName::U2 => named(&[P1, P2, P3, Q3]),
        SubalgebraName::Su2 => named(&[P1, P2, P3]),
        SubalgebraName::Suc2 => named(&[Q1, Q2, Q3]),
        SubalgebraName::R1Suc2 => named(&[P1, Q1, Q2, Q3]),
        SubalgebraName::Su2Suc2 => named(&[P1, P2, P3, Q1, Q2, Q3]),
        SubalgebraName::So3 => named(&[S1, S2, S3]),
        SubalgebraName::So3Ir => return Ok(so3_ir_construct()?.subalgebra),
    };
    Subalgebra::new(name.as_str(), gens)
}

/// The catalog subalgebra with the given name (built once, then cached).
pub fn catalog(name: SubalgebraName) -> &'static Subalgebra {
    static CACHE: [OnceLock<Subalgebra>; 8] = [const { OnceLock::new() }; 8];
    CACHE[name.index()].get_or_init(|| {
        build(name).unwrap_or_else(|e| panic!("catalog entry {name} failed to build: {e}"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g2lie::{annihilates, bracket, centralizer_in_g2, normalizer_in_g2};

    #[test]
    fn names_round_trip() {
        for n in SubalgebraName::ALL {
            assert_eq!(n.as_str().parse::<SubalgebraName>().unwrap(), n);
        }
        assert!("g2".parse::<SubalgebraName>().is_err());
    }

    #[test]
    fn dimensions() {
        let dims: Vec<usize> = SubalgebraName::ALL.iter().map(|n| catalog(*n).dim()).collect();
        assert_eq!(dims, vec![8, 4, 3, 3, 4, 6, 3, 3]);
    }

    #[test]
    fn so3_and_su3_fix_two_spinors() {
        for n in [SubalgebraName::So3, SubalgebraName::Su3] {
            for g in catalog(n).generators() {
                assert!(annihilates(g, &Spinor::psi(1).unwrap()));
                assert!(annihilates(g, &Spinor::psi(2).unwrap()));
            }
        }
    }

    #[test]
    fn suc2_bracket() {
        let q = named(&[NamedGenerator::Q1, NamedGenerator::Q2, NamedGenerator::Q3]);
        let b = bracket(&q[0], &q[1]);
        assert_eq!(b, q[2].scale(&crate::exact::int(-2)));
    }

    #[test]
    fn su2_normalizer_and_centralizer() {
        let su2 = catalog(SubalgebraName::Su2);
        let cent = centralizer_in_g2(su2);
        assert_eq!(cent, catalog(SubalgebraName::Suc2).span());
        let norm = normalizer_in_g2(su2);
        assert_eq!(norm, catalog(SubalgebraName::Su2Suc2).span());
        let su3 = catalog(SubalgebraName::Su3);
        assert!(su3.span().is_subspace_of(&normalizer_in_g2(su3)));
    }
}
