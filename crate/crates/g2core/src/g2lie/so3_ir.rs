//! Rational construction of the irreducible so(3) inside g2.
//!
//! so(3) acts irreducibly on the 7-dimensional space of harmonic cubics in
//! three variables. The action preserves a metric G and a trivector t, both
//! unique up to scale and both found as kernels. After rescaling, G and t
//! define an octonionic cross product with rational structure constants; a
//! rational orthonormal frame adapted to it (found by a bounded search for
//! rational unit vectors) carries the three rotation generators into the
//! standard frame, where they become rational elements of g2.

use num_traits::{One, Zero};

use super::{derivation_action, from_vector_action, Subalgebra};
use crate::error::{AlgebraError, Result};
use crate::exact::{int, rational_sqrt, squarefree_class, LinearSubspace, Param, Poly, QMatrix, Rational};
use crate::exterior::{basis_blades, phi, KForm};

/// Output of the construction, kept for inspection and tests.
#[derive(Debug, Clone)]
pub struct So3IrConstruction {
    pub subalgebra: Subalgebra,
    /// Columns are the adapted frame f1..f7 in harmonic-cubic coordinates.
    pub frame: QMatrix,
    /// The metric is `metric_scale * G`.
    pub metric_scale: Rational,
    /// The cross product is `cross_scale * t(Gx, Gy, .)`.
    pub cross_scale: Rational,
}

const VARS: [Param; 3] = [Param::X, Param::Y, Param::Z];

fn monomials(deg: u32) -> Vec<Poly> {
    let mut out = Vec::new();
    for i in (0..=deg).rev() {
        for j in (0..=deg - i).rev() {
            let k = deg - i - j;
            out.push(
                &(&Poly::var(Param::X).pow(i) * &Poly::var(Param::Y).pow(j)) * &Poly::var(Param::Z).pow(k),
            );
        }
    }
    out
}

fn coords_in(p: &Poly, monos: &[Poly]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); monos.len()];
    for (m, c) in p.terms() {
        let pos = monos
            .iter()
            .position(|q| q.terms().next().map(|(qm, _)| qm) == Some(m))
            .expect("monomial of expected degree");
        out[pos] = c.clone();
    }
    out
}

fn laplacian(p: &Poly) -> Poly {
    VARS.iter().fold(Poly::zero(), |acc, v| &acc + &p.derivative(*v).derivative(*v))
}

/// The rotation generators y dz - z dy, z dx - x dz, x dy - y dx.
fn rotation(k: usize, p: &Poly) -> Poly {
    let (a, b) = match k {
        0 => (Param::Y, Param::Z),
        1 => (Param::Z, Param::X),
        _ => (Param::X, Param::Y),
    };
    &(&Poly::var(a) * &p.derivative(b)) - &(&Poly::var(b) * &p.derivative(a))
}

fn dot(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter().zip(y).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
}

struct Geometry {
    gram: QMatrix,
    trivector: KForm,
    scale: Rational,
    cross_scale: Rational,
}

impl Geometry {
    fn ip(&self, x: &[Rational], y: &[Rational]) -> Rational {
        dot(x, &self.gram.apply(y)).clone() * &self.scale
    }

    fn raw_cross(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let gx = KForm::from_coords(1, &self.gram.apply(x));
        let gy = KForm::from_coords(1, &self.gram.apply(y));
        let w = self
            .trivector
            .contract_vector(&gx)
            .and_then(|f| f.contract_vector(&gy))
            .expect("grade-1 contractions");
        w.to_coords().expect("rational")
    }

    fn cross(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.raw_cross(x, y).into_iter().map(|c| c * &self.cross_scale).collect()
    }

    /// Up to `limit` rational unit vectors orthogonal to `cons`, searching
    /// small integer combinations of a basis of the orthogonal complement in
    /// order of increasing coefficient size.
    fn unit_candidates(&self, cons: &[Vec<Rational>], max_coeff: i64, limit: usize) -> Vec<Vec<Rational>> {
        let mut found = Vec::new();
        let basis: Vec<Vec<Rational>> = if cons.is_empty() {
            LinearSubspace::full(7).basis().to_vec()
        } else {
            let rows: Vec<Vec<Rational>> =
                cons.iter().map(|c| self.gram.apply(c).into_iter().map(|x| x * &self.scale).collect()).collect();
            QMatrix::from_rows(rows).expect("uniform rows").kernel().basis().to_vec()
        };
        let n = basis.len();
        let width = (2 * max_coeff + 1) as usize;
        let total = width.pow(n as u32);
        let mut tuples: Vec<Vec<i64>> = (0..total)
            .map(|mut code| {
                let mut t = vec![0i64; n];
                for slot in t.iter_mut().rev() {
                    *slot = (code % width) as i64 - max_coeff;
                    code /= width;
                }
                t
            })
            .filter(|t| t.iter().any(|&c| c != 0))
            .collect();
        tuples.sort_by_key(|t| t.iter().map(|c| c.abs()).sum::<i64>());
        for t in tuples {
            let mut v = vec![Rational::zero(); 7];
            for (c, b) in t.iter().zip(&basis) {
                if *c != 0 {
                    for (acc, x) in v.iter_mut().zip(b) {
                        *acc += int(*c) * x;
                    }
                }
            }
            let norm = self.ip(&v, &v);
            if let Some(r) = rational_sqrt(&norm) {
                found.push(v.into_iter().map(|x| x / &r).collect());
                if found.len() == limit {
                    break;
                }
            }
        }
        found
    }

    /// Orthonormal x1, x2, x3 with x3 orthogonal to x1 x x2. A 4-dimensional
    /// rational complement need not represent 1, so earlier choices are
    /// revisited when the last search fails.
    fn adapted_triple(&self) -> Option<[Vec<Rational>; 3]> {
        for x1 in self.unit_candidates(&[], 2, 4) {
            for x2 in self.unit_candidates(&[x1.clone()], 3, 6) {
                let x12 = self.cross(&x1, &x2);
                if let Some(x3) = self.unit_candidates(&[x1.clone(), x2.clone(), x12], 5, 1).pop() {
                    return Some([x1, x2, x3]);
                }
            }
        }
        None
    }
}

fn construction_error(msg: &str) -> AlgebraError {
    AlgebraError::Construction(format!("so_ir(3): {msg}"))
}

/// Builds the irreducible so(3) subalgebra of g2 with rational generators.
pub fn so3_ir_construct() -> Result<So3IrConstruction> {
    let cubics = monomials(3);
    let linears = monomials(1);
    let lap_cols: Vec<Vec<Rational>> = cubics.iter().map(|m| coords_in(&laplacian(m), &linears)).collect();
    let lap = QMatrix::from_fn(3, 10, |i, j| lap_cols[j][i].clone());
    let harmonic = lap.kernel();
    if harmonic.dim() != 7 {
        return Err(construction_error("harmonic cubics are not 7-dimensional"));
    }
    let basis_polys: Vec<Poly> = harmonic
        .basis()
        .iter()
        .map(|v| v.iter().zip(&cubics).fold(Poly::zero(), |acc, (c, m)| &acc + &m.scale(c)))
        .collect();
    let gens: Vec<QMatrix> = (0..3)
        .map(|k| {
            let cols: Vec<Vec<Rational>> = basis_polys
                .iter()
                .map(|h| {
                    harmonic
                        .coordinates(&coords_in(&rotation(k, h), &cubics))
                        .expect("rotations preserve harmonic cubics")
                })
                .collect();
            QMatrix::from_fn(7, 7, |i, j| cols[j][i].clone())
        })
        .collect();

    // Invariant symmetric form: L^T G + G L = 0.
    let sym_index = |a: usize, b: usize| {
        let (i, j) = if a <= b { (a, b) } else { (b, a) };
        i * 7 - i * (i + 1) / 2 + j
    };
    let mut rows = Vec::new();
    for l in &gens {
        for a in 0..7 {
            for b in 0..7 {
                let mut row = vec![Rational::zero(); 28];
                for c in 0..7 {
                    row[sym_index(c, b)] += l.get(c, a);
                    row[sym_index(a, c)] += l.get(c, b);
                }
                rows.push(row);
            }
        }
    }
    let gker = QMatrix::from_rows(rows)?.kernel();
    if gker.dim() != 1 {
        return Err(construction_error("invariant metric is not unique"));
    }
    let gv = &gker.basis()[0];
    let mut gram = QMatrix::from_fn(7, 7, |a, b| gv[sym_index(a, b)].clone());
    if gram.get(0, 0) < &Rational::zero() {
        gram = gram.neg();
    }

    // Invariant trivector.
    let blades = basis_blades(3);
    let mut cols_t: Vec<Vec<Rational>> = Vec::new();
    for b in blades {
        let e = KForm::monomial(&b.indices(), Poly::one())?;
        let mut col = Vec::new();
        for l in &gens {
            col.extend(derivation_action(l, &e).to_coords()?);
        }
        cols_t.push(col);
    }
    let tmat = QMatrix::from_fn(cols_t[0].len(), 35, |i, j| cols_t[j][i].clone());
    let tker = tmat.kernel();
    if tker.dim() != 1 {
        return Err(construction_error("invariant trivector is not unique"));
    }
    let trivector = KForm::from_coords(3, &tker.basis()[0]);

    let mut geo = Geometry { gram, trivector, scale: Rational::one(), cross_scale: Rational::one() };
    let e = |i: usize| -> Vec<Rational> { (0..7).map(|k| if k == i { int(1) } else { int(0) }).collect() };
    let ratio_for = |geo: &Geometry, x: &[Rational], y: &[Rational]| -> Option<Rational> {
        let den = geo.ip(x, x) * geo.ip(y, y) - geo.ip(x, y) * geo.ip(x, y);
        if den.is_zero() {
            return None;
        }
        let w = geo.raw_cross(x, y);
        Some(geo.ip(&w, &w) / den)
    };
    let rho = ratio_for(&geo, &e(0), &e(1)).ok_or_else(|| construction_error("degenerate test pair"))?;
    for (i, j) in [(0, 3), (2, 5), (4, 6)] {
        if ratio_for(&geo, &e(i), &e(j)) != Some(rho.clone()) {
            return Err(construction_error("cross-product ratio is not constant"));
        }
    }
    let nu = Rational::from_integer(squarefree_class(&rho));
    let kappa = rational_sqrt(&(&nu / &rho)).ok_or_else(|| construction_error("no rational cross scale"))?;
    geo.scale = nu.clone();

    let target = phi();
    for sign in [1i64, -1] {
        geo.cross_scale = &kappa * int(sign);
        let [x1, x2, x3] = geo.adapted_triple().ok_or_else(|| construction_error("no rational adapted frame"))?;
        let f7 = geo.cross(&x1, &x2);
        let f5 = geo.cross(&x1, &x3);
        let f6: Vec<Rational> = geo.cross(&x2, &x3).into_iter().map(|c| -c).collect();
        let f4: Vec<Rational> = geo.cross(&x3, &f7).into_iter().map(|c| -c).collect();
        let frame_cols = [x1, x2, x3, f4, f5, f6, f7];
        let frame = QMatrix::from_fn(7, 7, |i, j| frame_cols[j][i].clone());
        let orthonormal = (0..7).all(|i| (0..7).all(|j| geo.ip(&frame_cols[i], &frame_cols[j]) == int((i == j) as i64)));
        if !orthonormal {
            continue;
        }
        let matches_phi = blades.iter().all(|b| {
            let idx = b.indices();
            let (a, bb, c) = (&frame_cols[idx[0] - 1], &frame_cols[idx[1] - 1], &frame_cols[idx[2] - 1]);
            let value = geo.ip(&geo.cross(a, bb), c);
            Poly::constant(value) == target.coeff(*b)
        });
        if !matches_phi {
            continue;
        }
        let inv = frame.inverse().ok_or_else(|| construction_error("singular frame"))?;
        let elements = gens
            .iter()
            .map(|l| from_vector_action(&inv.mul(l).mul(&frame)))
            .collect::<Result<Vec<_>>>()?;
        let subalgebra = Subalgebra::new("so3_ir", elements)?;
        return Ok(So3IrConstruction { subalgebra, frame, metric_scale: nu, cross_scale: geo.cross_scale });
    }
    Err(construction_error("no adapted frame reproduces phi"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::Spinor;
    use crate::g2lie::{bracket, spinor_kernel};

    #[test]
    fn construction_passes_checks() {
        let c = so3_ir_construct().unwrap();
        let h = &c.subalgebra;
        assert_eq!(h.dim(), 3);
        assert_eq!(h.commutant_dim(), 1);
        let spin = spinor_kernel(h.generators());
        assert_eq!(spin, LinearSubspace::from_spanning(8, vec![Spinor::psi(1).unwrap().0]));
        // so(3) relations up to normalization: [g1, g2] is a multiple of g3.
        let g = h.generators();
        let b = bracket(&g[0], &g[1]);
        assert!(LinearSubspace::from_spanning(21, vec![g[2].coords()]).contains(&b.coords()));
        assert!(!b.is_zero());
    }
}
