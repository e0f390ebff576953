//! Claim registry: every checked statement as an executable claim, run in
//! parallel and exported as JSON, CSV or text.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::clifford::{clifford_action, eigenvalue_on, gamma, Spinor};
use crate::curvature::{
    bianchi_torsion, check_branch, impose_pair_symmetry, invariant_curvature_space, printed_ansatz, printed_branches,
    projection_ansatz, refute_off_branch, solve_bianchi, stiefel_curvature_check, symmetric_ansatz, ansatz_for,
};
use crate::error::{AlgebraError, Result};
use crate::exact::{int, LinearSubspace, Param, Poly};
use crate::exterior::{lambda3_27_subspace, lambda3_split, parse_form, phi, KForm};
use crate::g2lie::{
    annihilates, bracket, catalog, centralizer_in_g2, g2_elements, g2_equations, generator, normalizer_in_g2, NamedGenerator,
    SubalgebraName,
};
use crate::geometry::{
    blocks, contraction_factor, derived_scalar_identities, eigen_scalar_consistency, phi_plus_vertical, ricci_characteristic,
    ricci_data, ricci_riemannian, scalar_from_eigen, spinor_field_identities, stiefel_torsion, u2_plane_one, u2_plane_two,
    SPLIT_4_2_1, SPLIT_4_3, SPLIT_6_1,
};
use crate::invariants::{equivariant_map_dim, invariant_forms27, invariant_report, invariant_spinors, Module};
use crate::properties;
use crate::reductive::{
    abelian_control, adjoint_faithful_check, branch_jacobi_samples, expected_suc2_radical, expected_suc2_radical_derived,
    off_branch_jacobi_samples, stiefel_algebra, structural_analysis, suc2_special_algebra,
};
use crate::torsion::{
    eigenvalue_profile, nearly_parallel_checks, phi_line_admissible, printed_family, psi1_characterizes_l27, su2_lines,
    verify_union_decomposition, w3_intersection,
};

/// Outcome category of a claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Refuted,
    OutOfScope,
    GoldenRecorded,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::OutOfScope => "out-of-scope",
            Status::GoldenRecorded => "golden-recorded",
        }
    }
}

/// Where the expected value comes from: a published statement, an
/// immediate consequence of definitions, or a value computed once by an
/// independent route and frozen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Published,
    Trivial,
    Derived,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Published => "published",
            Provenance::Trivial => "trivial",
            Provenance::Derived => "derived",
        }
    }
}

/// Computed and expected values of one check.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub computed: Value,
    pub expected: Value,
    pub ok: bool,
}

impl Outcome {
    pub fn compare<T: Serialize + PartialEq>(computed: T, expected: T) -> Self {
        let ok = computed == expected;
        Outcome { computed: json!(computed), expected: json!(expected), ok }
    }

    pub fn flagged(computed: Value, expected: Value, ok: bool) -> Self {
        Outcome { computed, expected, ok }
    }
}

pub type Check = fn() -> Result<Outcome>;

/// A registry entry. `check` is `None` for out-of-scope annotations.
#[derive(Debug, Clone, Copy)]
pub struct Claim {
    pub id: &'static str,
    pub anchor: &'static str,
    pub provenance: Provenance,
    pub check: Option<Check>,
}

/// One row of the report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub computed: Value,
    pub expected: Value,
    pub provenance: Provenance,
    pub millis: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub claims: Vec<ClaimRecord>,
}

/// Counts per status plus claims whose check raised an error.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub verified: usize,
    pub golden_recorded: usize,
    pub refuted: usize,
    pub out_of_scope: usize,
    pub errors: usize,
}

impl Report {
    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for c in &self.claims {
            match c.status {
                Status::Verified => s.verified += 1,
                Status::GoldenRecorded => s.golden_recorded += 1,
                Status::Refuted => s.refuted += 1,
                Status::OutOfScope => s.out_of_scope += 1,
            }
            if c.computed.get("error").is_some() {
                s.errors += 1;
            }
        }
        s
    }

    pub fn refuted(&self) -> Vec<&ClaimRecord> {
        self.claims.iter().filter(|c| c.status == Status::Refuted).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// CSV with columns id, anchor, status, computed, expected, provenance,
    /// millis; computed and expected are embedded JSON.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| AlgebraError::Construction(format!("csv: {e}"));
        w.write_record(["id", "anchor", "status", "computed", "expected", "provenance", "millis"]).map_err(io)?;
        for c in &self.claims {
            w.write_record([
                c.id.as_str(),
                c.anchor.as_str(),
                c.status.as_str(),
                &c.computed.to_string(),
                &c.expected.to_string(),
                c.provenance.as_str(),
                &c.millis.to_string(),
            ])
            .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| AlgebraError::Construction(format!("csv: {e}")))?;
        Ok(String::from_utf8(bytes).expect("utf8"))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            let _ = writeln!(out, "{:<16} {:<44} {}", c.status.as_str(), c.id, c.anchor);
            if c.status == Status::Refuted {
                let _ = writeln!(out, "{:16}   computed: {}", "", c.computed);
                let _ = writeln!(out, "{:16}   expected: {}", "", c.expected);
            }
        }
        let s = self.summary();
        let _ = writeln!(
            out,
            "\n{} verified, {} golden-recorded, {} refuted, {} out-of-scope ({} with errors)",
            s.verified, s.golden_recorded, s.refuted, s.out_of_scope, s.errors
        );
        out
    }
}

fn run_one(c: &Claim) -> ClaimRecord {
    let start = Instant::now();
    let (status, computed, expected) = match c.check {
        None => (Status::OutOfScope, Value::Null, Value::Null),
        Some(f) => match f() {
            Ok(o) if o.ok && c.provenance == Provenance::Derived => (Status::GoldenRecorded, o.computed, o.expected),
            Ok(o) if o.ok => (Status::Verified, o.computed, o.expected),
            Ok(o) => (Status::Refuted, o.computed, o.expected),
            Err(e) => (Status::Refuted, json!({ "error": e.to_string() }), Value::Null),
        },
    };
    ClaimRecord {
        id: c.id.into(),
        anchor: c.anchor.into(),
        status,
        computed,
        expected,
        provenance: c.provenance,
        millis: start.elapsed().as_millis() as u64,
    }
}

/// Runs the given claims on a pool of `jobs` workers (0 = rayon default);
/// the report is sorted by id.
pub fn run_claims(claims: &[Claim], jobs: usize) -> Result<Report> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| AlgebraError::Construction(format!("thread pool: {e}")))?;
    let mut records: Vec<ClaimRecord> = pool.install(|| claims.par_iter().map(run_one).collect());
    records.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(Report { claims: records })
}

/// Runs every registered claim whose id starts with `filter`.
pub fn run_all(filter: Option<&str>, jobs: usize) -> Result<Report> {
    let selected: Vec<Claim> = registry().into_iter().filter(|c| filter.map_or(true, |p| c.id.starts_with(p))).collect();
    run_claims(&selected, jobs)
}

fn p(s: &str) -> Poly {
    s.parse().expect("static polynomial")
}

fn f(s: &str) -> KForm {
    parse_form(s).expect("static form")
}

fn strs(v: &[Poly]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn dims_by_algebra(g: impl Fn(SubalgebraName) -> usize) -> BTreeMap<&'static str, usize> {
    SubalgebraName::ALL.iter().map(|n| (n.as_str(), g(*n))).collect()
}

fn ordered<T: Clone>(m: &BTreeMap<&'static str, T>) -> Vec<T> {
    SubalgebraName::ALL.iter().map(|n| m[n.as_str()].clone()).collect()
}

fn psi(k: usize) -> Spinor {
    Spinor::psi(k).expect("index")
}

// ---- algebra ----

fn alg_clifford_calibration() -> Result<Outcome> {
    let t = f("2*e127 + 2*e347 + 2*e567");
    let l = eigenvalue_on(&clifford_action(&t), &psi(1))?.map(|x| x.to_string());
    Ok(Outcome::compare(l, Some("-6".to_string())))
}

fn alg_g2_dimension() -> Result<Outcome> {
    let rank = g2_equations().rank();
    let elems = g2_elements();
    let all_kill = elems.iter().all(|w| annihilates(w, &psi(1)));
    Ok(Outcome::compare(json!({"equations_rank": rank, "dim": elems.len(), "all_annihilate_psi1": all_kill}), json!({"equations_rank": 7, "dim": 14, "all_annihilate_psi1": true})))
}

fn alg_catalog_dimensions() -> Result<Outcome> {
    let d = dims_by_algebra(|n| catalog(n).dim());
    Ok(Outcome::compare(ordered(&d), vec![8, 4, 3, 3, 4, 6, 3, 3]))
}

fn alg_suc2_bracket() -> Result<Outcome> {
    let b = bracket(&generator(NamedGenerator::Q1), &generator(NamedGenerator::Q2));
    Ok(Outcome::compare(b.to_string(), generator(NamedGenerator::Q3).scale(&int(-2)).to_string()))
}

fn alg_su2_normalizer() -> Result<Outcome> {
    let su2 = catalog(SubalgebraName::Su2);
    let n = normalizer_in_g2(su2);
    let c = centralizer_in_g2(su2);
    let ok_n = n == catalog(SubalgebraName::Su2Suc2).span();
    let ok_c = c == catalog(SubalgebraName::Suc2).span();
    Ok(Outcome::flagged(
        json!({"normalizer_dim": n.dim(), "centralizer_dim": c.dim(), "normalizer_is_su2_suc2": ok_n, "centralizer_is_suc2": ok_c}),
        json!({"normalizer_dim": 6, "centralizer_dim": 3, "normalizer_is_su2_suc2": true, "centralizer_is_suc2": true}),
        ok_n && ok_c && n.dim() == 6 && c.dim() == 3,
    ))
}

fn alg_split_dimensions() -> Result<Outcome> {
    Ok(Outcome::compare((1usize, 7usize, lambda3_27_subspace().dim()), (1, 7, 27)))
}

fn alg_phi_minus_7e567() -> Result<Outcome> {
    let s = lambda3_split(&phi().sub(&f("7*e567"))?)?;
    Ok(Outcome::compare((s.part1.is_zero(), s.part7.is_zero()), (true, true)))
}

fn alg_phi_eigenvalues() -> Result<Outcome> {
    let np = nearly_parallel_checks()?;
    Ok(Outcome::compare((np.lambda1, np.lambda2, np.distinct), ("-7".to_string(), "1".to_string(), true)))
}

// ---- invariants ----

fn inv_spinor_dims() -> Result<Outcome> {
    Ok(Outcome::compare(ordered(&dims_by_algebra(|n| invariant_spinors(catalog(n)).dim())), vec![2, 2, 4, 1, 1, 1, 2, 1]))
}

fn inv_forms27_dims() -> Result<Outcome> {
    Ok(Outcome::compare(ordered(&dims_by_algebra(|n| invariant_forms27(catalog(n)).dim())), vec![1, 2, 6, 1, 1, 1, 3, 0]))
}

fn printed_span(name: SubalgebraName) -> Result<Outcome> {
    let r = invariant_report(name, catalog(name));
    Ok(Outcome::flagged(json!({"span_matches": r.printed_span_matches, "computed_generators": r.generators}), json!({"span_matches": true}), r.printed_span_matches == Some(true)))
}

fn inv_span_su3() -> Result<Outcome> {
    printed_span(SubalgebraName::Su3)
}
fn inv_span_u2() -> Result<Outcome> {
    printed_span(SubalgebraName::U2)
}
fn inv_span_suc2() -> Result<Outcome> {
    printed_span(SubalgebraName::Suc2)
}
fn inv_span_r1_suc2() -> Result<Outcome> {
    printed_span(SubalgebraName::R1Suc2)
}
fn inv_span_su2_suc2() -> Result<Outcome> {
    printed_span(SubalgebraName::Su2Suc2)
}
fn inv_span_so3() -> Result<Outcome> {
    printed_span(SubalgebraName::So3)
}

fn inv_commutants() -> Result<Outcome> {
    let c = ordered(&dims_by_algebra(|n| catalog(n).commutant_dim()));
    let fx = ordered(&dims_by_algebra(|n| catalog(n).fixed_vectors().dim()));
    Ok(Outcome::compare((c, fx), (vec![3, 5, 13, 5, 3, 2, 5, 1], vec![1, 1, 3, 0, 0, 0, 1, 0])))
}

fn inv_so3_vector_to_spinor() -> Result<Outcome> {
    Ok(Outcome::compare(equivariant_map_dim(catalog(SubalgebraName::So3), Module::Vector, Module::Spinor), 6))
}

fn inv_so3ir_curvature_unique() -> Result<Outcome> {
    let h = catalog(SubalgebraName::So3Ir);
    let dim = equivariant_map_dim(h, Module::Forms(2), Module::Adjoint);
    let space = invariant_curvature_space(h).dim();
    let sym = projection_ansatz(h, Poly::one())?.pair_symmetry_conditions().is_empty();
    Ok(Outcome::compare((dim, space, sym), (1, 1, true)))
}

// ---- torsion ----

fn union_claim(name: SubalgebraName, seed: u64) -> Result<Outcome> {
    let (fam, comps) = printed_family(name)?;
    let rep = verify_union_decomposition(&fam, &comps, 120, seed);
    let labels: Vec<&str> = comps.iter().map(|c| c.label.as_str()).collect();
    let full = comps.iter().any(|c| c.space.dim() == fam.params.len());
    let enough = full || rep.off_component_samples >= 100;
    Ok(Outcome::flagged(
        json!({"family": fam, "components": labels, "report": rep}),
        json!({"components_admissible": true, "off_component_admitted": 0, "min_off_component_samples": if full { 0 } else { 100 }}),
        rep.passed() && enough,
    ))
}

fn tor_su3() -> Result<Outcome> {
    union_claim(SubalgebraName::Su3, 7)
}
fn tor_u2() -> Result<Outcome> {
    union_claim(SubalgebraName::U2, 11)
}
fn tor_su2() -> Result<Outcome> {
    union_claim(SubalgebraName::Su2, 5)
}
fn tor_suc2() -> Result<Outcome> {
    union_claim(SubalgebraName::Suc2, 13)
}
fn tor_r1_suc2() -> Result<Outcome> {
    union_claim(SubalgebraName::R1Suc2, 17)
}
fn tor_su2_suc2() -> Result<Outcome> {
    union_claim(SubalgebraName::Su2Suc2, 19)
}
fn tor_so3() -> Result<Outcome> {
    union_claim(SubalgebraName::So3, 3)
}
fn tor_so3_ir() -> Result<Outcome> {
    union_claim(SubalgebraName::So3Ir, 23)
}

fn tor_su2_eigenspinors() -> Result<Outcome> {
    let h = catalog(SubalgebraName::Su2);
    let counts: Vec<usize> = su2_lines().iter().map(|t| eigenvalue_profile(t, h).map(|e| e.values.len())).collect::<Result<_>>()?;
    Ok(Outcome::compare(counts, vec![4; 8]))
}

fn tor_w3() -> Result<Outcome> {
    let d = ordered(&dims_by_algebra(|n| w3_intersection(catalog(n)).dim()));
    let (fam, _) = printed_family(SubalgebraName::So3)?;
    let ab = crate::invariants::span_of_forms(&[fam.at(&[int(1), int(0), int(0), int(0)]), fam.at(&[int(0), int(1), int(0), int(0)])]);
    let so3 = w3_intersection(catalog(SubalgebraName::So3)) == ab;
    Ok(Outcome::compare(json!({"dims": d, "so3_is_T_ab0": so3}), json!({"dims": [0, 1, 0, 1, 1, 1, 2, 0], "so3_is_T_ab0": true})))
}

fn tor_psi1_l27() -> Result<Outcome> {
    Ok(Outcome::compare(psi1_characterizes_l27(), true))
}

fn tor_phi_line() -> Result<Outcome> {
    let got: Vec<bool> = SubalgebraName::ALL.iter().map(|n| phi_line_admissible(catalog(*n))).collect();
    let want: Vec<bool> = SubalgebraName::ALL.iter().map(|n| invariant_spinors(catalog(*n)).dim() == 1).collect();
    Ok(Outcome::compare(got, want))
}

// ---- eigenvalues ----

fn eig(t: KForm, name: SubalgebraName, expected: &[&str]) -> Result<Outcome> {
    let prof = eigenvalue_profile(&t, catalog(name))?;
    Ok(Outcome::compare(strs(&prof.values), expected.iter().map(|s| p(s).to_string()).collect()))
}

fn eig_sasakian() -> Result<Outcome> {
    eig(f("2*e127 + 2*e347 + 2*e567"), SubalgebraName::Su3, &["-6", "-6"])
}
fn eig_sigma() -> Result<Outcome> {
    eig(f("e135 - e146 - e236 - e245"), SubalgebraName::Su3, &["-4", "4"])
}
fn eig_u2_plane_one() -> Result<Outcome> {
    eig(u2_plane_one(), SubalgebraName::U2, &["-7*c", "-7*c"])
}
fn eig_u2_plane_two() -> Result<Outcome> {
    eig(u2_plane_two(), SubalgebraName::U2, &["-7*c", "7*c"])
}

fn eig_scalar_consistency() -> Result<Outcome> {
    let checks = eigen_scalar_consistency()?;
    let ok = checks.iter().all(|c| c.holds);
    Ok(Outcome::flagged(json!(checks), json!("(4 lambda^2 - |T|^2)/2 = trace Ric^g for every case"), ok))
}

// ---- Ricci ----

fn ric_sasakian() -> Result<Outcome> {
    let t = f("2*e127 + 2*e347 + 2*e567");
    let r = ricci_riemannian(&t, &ricci_characteristic(&t, &psi(1))?)?;
    let d: Vec<String> = (0..7).map(|i| r.get(i, i).to_string()).collect();
    let off = (0..7).all(|i| (0..7).all(|j| i == j || r.get(i, j).is_zero()));
    Ok(Outcome::compare((d, off), (vec!["10", "10", "10", "10", "10", "10", "6"].into_iter().map(String::from).collect(), true)))
}

fn ric_sigma() -> Result<Outcome> {
    let t = f("e135 - e146 - e236 - e245");
    let d = ricci_data(&t, &psi(1), &blocks(&SPLIT_6_1))?;
    let via_eigen = scalar_from_eigen(&t, &Poly::int(4));
    Ok(Outcome::compare((d.scal_riemannian.to_string(), via_eigen.to_string()), ("30".into(), "30".into())))
}

fn block_strings(t: &KForm, split: &[&[usize]]) -> Result<(Vec<String>, Vec<String>, String, String)> {
    let d = ricci_data(t, &psi(1), &blocks(split))?;
    Ok((
        d.blocks.iter().map(|b| b.characteristic.to_string()).collect(),
        d.blocks.iter().map(|b| b.riemannian.to_string()).collect(),
        d.scal_characteristic.to_string(),
        d.scal_riemannian.to_string(),
    ))
}

fn sv(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| p(s).to_string()).collect()
}

fn ric_u2_plane_one() -> Result<Outcome> {
    let (n, g, _, _) = block_strings(&u2_plane_one(), &SPLIT_4_2_1)?;
    Ok(Outcome::compare(
        (n, g),
        (
            sv(&["-4*a^2 + 10*a*c + 6*c^2", "-16*a^2 + 12*a*c + 10*c^2", "0"]),
            sv(&["-2*a^2 + 12*a*c + 13/2*c^2", "-8*a^2 - 8*a*c + 45/2*c^2", "12*a^2 - 16*a*c + 27/2*c^2"]),
        ),
    ))
}

fn ric_u2_plane_one_scal_char() -> Result<Outcome> {
    let (_, _, s, _) = block_strings(&u2_plane_one(), &SPLIT_4_2_1)?;
    Ok(Outcome::compare(s, p("-48*a^2 + 64*a*c + 44*c^2").to_string()))
}

fn ric_u2_plane_two_scal() -> Result<Outcome> {
    let t = u2_plane_two();
    let trace = ricci_riemannian(&t, &ricci_characteristic(&t, &psi(1))?)?.trace();
    let eigen = scalar_from_eigen(&t, &p("7*c"));
    let want = p("-12*a^2 - 12*a*c + 711/8*c^2").to_string();
    Ok(Outcome::compare((trace.to_string(), eigen.to_string()), (want.clone(), want)))
}

fn ric_su2_blocks() -> Result<Outcome> {
    let (n, g, _, _) = block_strings(&su2_lines()[0], &SPLIT_4_3)?;
    Ok(Outcome::compare((n, g), (sv(&["3", "0"]), sv(&["9/2", "3"]))))
}

fn ric_stiefel() -> Result<Outcome> {
    let (_, g, _, _) = block_strings(&stiefel_torsion(), &SPLIT_6_1)?;
    Ok(Outcome::compare(g, sv(&["5/2*49*c^2", "3/2*49*c^2"])))
}

fn ric_phi_vertical() -> Result<Outcome> {
    let (n, g, _, _) = block_strings(&phi_plus_vertical(), &SPLIT_4_3)?;
    Ok(Outcome::compare(
        (n, g),
        (sv(&["12*a^2 + 3*a*b", "12*a^2 + 4*a*b"]), sv(&["27/2*a^2 + 3*a*b", "13*a^2 + 4*a*b + 1/2*(a + b)^2"])),
    ))
}

fn identity_claim(labels: &[&str]) -> Result<Outcome> {
    let all = derived_scalar_identities()?;
    let picked: Vec<_> = all.into_iter().filter(|c| labels.iter().any(|l| c.label.starts_with(l))).collect();
    if picked.len() != labels.len() {
        return Err(AlgebraError::UnknownName(format!("identity labels {labels:?}")));
    }
    let ok = picked.iter().all(|c| c.holds);
    let expected: Vec<&String> = picked.iter().map(|c| &c.expected).collect();
    Ok(Outcome::flagged(json!(picked), json!(expected), ok))
}

fn ric_phi_vertical_trace() -> Result<Outcome> {
    identity_claim(&["a phi + b e567: trace"])
}
fn ric_fibre() -> Result<Outcome> {
    identity_claim(&["fibre Ricci equals 12a^2", "fibre Ricci equals (5a+b)", "fibre sectional"])
}
fn ric_base_einstein() -> Result<Outcome> {
    identity_claim(&["base Einstein"])
}
fn ric_inversion() -> Result<Outcome> {
    identity_claim(&[
        "plane a+b=c: base Ricci on E1",
        "plane a+b=c: base Ricci on E2",
        "S1 =",
        "S2 =",
        "S =",
        "inversion for a, squared",
        "inversion for a, sign",
        "inversion for c",
    ])
}
fn ric_curve() -> Result<Outcome> {
    identity_claim(&["5a^2 + ab = 4"])
}

fn ric_spinor_identities() -> Result<Outcome> {
    let r = spinor_field_identities(&phi_plus_vertical(), &psi(1), &blocks(&SPLIT_4_3))?;
    let want: Vec<Option<String>> = (1..=7).map(|i| Some(if i <= 4 { p("3*a") } else { p("3*a + b") }.to_string())).collect();
    Ok(Outcome::compare((r.factors, r.constant_on_blocks), (want, true)))
}

fn ric_quasi_killing() -> Result<Outcome> {
    let t = f("2*e127 + 2*e347 + 2*e567");
    let got: Vec<Option<String>> = (1..=7).map(|i| contraction_factor(&t, &psi(1), i).map(|o| o.map(|x| x.to_string()))).collect::<Result<_>>()?;
    let want: Vec<Option<String>> = (1..=7).map(|i| Some(if i == 7 { "6" } else { "2" }.to_string())).collect();
    Ok(Outcome::compare(got, want))
}

// ---- Bianchi ----

fn bia_so3_ansatz() -> Result<Outcome> {
    let (h, a) = ansatz_for(SubalgebraName::So3).expect("so3 ansatz");
    let printed = LinearSubspace::from_spanning(h.dim() * 21, a.as_equivariant_coords(h)?);
    let space = invariant_curvature_space(h);
    Ok(Outcome::compare((a.is_equivariant(h), printed == space, space.dim()), (true, true, 5)))
}

fn bia_so3_pair_symmetry() -> Result<Outcome> {
    let (_, b) = impose_pair_symmetry(&printed_ansatz(SubalgebraName::So3).expect("so3"))?;
    let got: BTreeMap<String, String> = b.iter().map(|(k, v)| (k.name().to_string(), v.to_string())).collect();
    let want: BTreeMap<String, String> = [("u", "0"), ("v", "0"), ("z", "0"), ("y", "-x")].iter().map(|(k, v)| (k.to_string(), p(v).to_string())).collect();
    Ok(Outcome::compare(got, want))
}

fn branch_claim(name: SubalgebraName, idx: usize) -> Result<Outcome> {
    let (t, _) = bianchi_torsion(name).ok_or_else(|| AlgebraError::UnknownName(name.to_string()))?;
    let r = symmetric_ansatz(name)?.expect("ansatz");
    let b = &printed_branches(name)[idx];
    let c = check_branch(&t, &r, b);
    Ok(Outcome::flagged(
        json!({"branch": b, "remaining_constraints": strs(&c.failures), "lambda": c.lambda.to_string()}),
        json!({"branch": b, "remaining_constraints": []}),
        c.holds,
    ))
}

fn bia_so3_branch_d_minus_4c() -> Result<Outcome> {
    branch_claim(SubalgebraName::So3, 0)
}
fn bia_so3_branch_d_3c() -> Result<Outcome> {
    branch_claim(SubalgebraName::So3, 1)
}
fn bia_suc2_branch_a0() -> Result<Outcome> {
    branch_claim(SubalgebraName::Suc2, 0)
}
fn bia_suc2_branch_5a_b() -> Result<Outcome> {
    branch_claim(SubalgebraName::Suc2, 1)
}
fn bia_r1_suc2_branch() -> Result<Outcome> {
    branch_claim(SubalgebraName::R1Suc2, 0)
}
fn bia_su2_suc2_branch() -> Result<Outcome> {
    branch_claim(SubalgebraName::Su2Suc2, 0)
}

fn bia_r1_suc2_pair_symmetry() -> Result<Outcome> {
    let (_, b) = impose_pair_symmetry(&printed_ansatz(SubalgebraName::R1Suc2).expect("ansatz"))?;
    Ok(Outcome::compare(b.get(&Param::Q).map(ToString::to_string), Some(p("-2*p").to_string())))
}

fn bia_r1_suc2_solution() -> Result<Outcome> {
    let (t, _) = bianchi_torsion(SubalgebraName::R1Suc2).expect("torsion");
    let r = symmetric_ansatz(SubalgebraName::R1Suc2)?.expect("ansatz");
    let sol = solve_bianchi(&t, &r)?;
    let got = (sol.bindings.get(&Param::P).map(ToString::to_string), sol.bindings.get(&Param::R).map(ToString::to_string), sol.residuals.len());
    Ok(Outcome::compare(got, (Some(p("-1/2*a*(3*a + b)").to_string()), Some(p("-3/2*a*(5*a + b)").to_string()), 0)))
}

fn bia_stiefel() -> Result<Outcome> {
    let s = stiefel_curvature_check()?;
    Ok(Outcome::compare(
        (s.torsion_simplifies, s.curvature_matches, s.scalar_condition_holds),
        (true, true, true),
    ))
}

fn bia_off_branch() -> Result<Outcome> {
    let so3 = refute_off_branch(SubalgebraName::So3, 100, 17)?;
    let suc2 = refute_off_branch(SubalgebraName::Suc2, 100, 17)?;
    Ok(Outcome::compare(vec![so3, suc2], vec![(100, 0), (100, 0)]))
}

// ---- reductive ----

fn red_stiefel() -> Result<Outcome> {
    let g = stiefel_algebra()?;
    let s = structural_analysis(&g)?;
    Ok(Outcome::compare(
        json!({"dim": s.dim, "jacobi_violations": g.jacobi_violations().len(), "killing_rank": s.killing_rank, "negative_definite": s.killing_negative_definite, "radical_dim": s.radical.dim(), "center_dim": s.center_dim}),
        json!({"dim": 10, "jacobi_violations": 0, "killing_rank": 10, "negative_definite": true, "radical_dim": 0, "center_dim": 0}),
    ))
}

fn red_suc2_structure() -> Result<Outcome> {
    let g = suc2_special_algebra()?;
    let s = structural_analysis(&g)?;
    let (faithful, _) = adjoint_faithful_check(&g);
    Ok(Outcome::compare(
        json!({
            "dim": s.dim, "jacobi_violations": g.jacobi_violations().len(), "perfect": s.perfect,
            "radical_dim": s.radical.dim(), "radical_matches": s.radical == expected_suc2_radical(),
            "radical_nilpotent": s.radical_nilpotent, "radical_derived_dim": s.radical_derived.dim(),
            "radical_derived_matches": s.radical_derived == expected_suc2_radical_derived(),
            "radical_derived_abelian": s.radical_derived_abelian, "quotient_dim": s.quotient_dim,
            "quotient_compact": s.quotient_killing_negative_definite, "adjoint_faithful": faithful,
        }),
        json!({
            "dim": 10, "jacobi_violations": 0, "perfect": true, "radical_dim": 7, "radical_matches": true,
            "radical_nilpotent": true, "radical_derived_dim": 3, "radical_derived_matches": true,
            "radical_derived_abelian": true, "quotient_dim": 3, "quotient_compact": true, "adjoint_faithful": true,
        }),
    ))
}

fn red_branch_jacobi() -> Result<Outcome> {
    let mut total = 0;
    let mut bad = Vec::new();
    for name in [SubalgebraName::So3, SubalgebraName::Suc2, SubalgebraName::Su2Suc2] {
        for s in branch_jacobi_samples(name, &printed_branches(name), 3, 29)? {
            total += 1;
            if s.violations > 0 {
                bad.push(s);
            }
        }
    }
    Ok(Outcome::flagged(json!({"samples": total, "violating": bad}), json!({"violating": []}), bad.is_empty()))
}

fn red_r1_suc2_jacobi() -> Result<Outcome> {
    let name = SubalgebraName::R1Suc2;
    let printed = branch_jacobi_samples(name, &printed_branches(name), 3, 31)?;
    let computed = crate::curvature::Branch::new("computed", &[(Param::P, "-1/2*a*(3*a + b)"), (Param::R, "-3/2*a*(5*a + b)")]);
    let corrected = branch_jacobi_samples(name, &[computed], 3, 31)?;
    let printed_ok = printed.iter().all(|s| s.violations == 0);
    let corrected_ok = corrected.iter().all(|s| s.violations == 0);
    Ok(Outcome::flagged(
        json!({"printed_branch_samples": printed, "computed_branch_samples": corrected}),
        json!({"printed_branch_violations": 0}),
        printed_ok && corrected_ok,
    ))
}

fn red_off_branch_jacobi() -> Result<Outcome> {
    let mut samples = off_branch_jacobi_samples(SubalgebraName::So3, 6, 37)?;
    samples.extend(off_branch_jacobi_samples(SubalgebraName::Suc2, 6, 41)?);
    let failing = samples.iter().filter(|s| s.violations > 0).count();
    Ok(Outcome::compare((samples.len(), failing), (12, 12)))
}

fn red_abelian_control() -> Result<Outcome> {
    let g = abelian_control()?;
    Ok(Outcome::compare(adjoint_faithful_check(&g), (false, 7)))
}

// ---- properties ----

fn property(r: properties::PropertyReport, min: usize) -> Result<Outcome> {
    let ok = r.passed() && r.checked >= min;
    Ok(Outcome::flagged(json!(r), json!({"failed": 0, "min_checked": min}), ok))
}

fn prop_clifford() -> Result<Outcome> {
    property(properties::clifford_relations(), 49)
}
fn prop_antiderivation() -> Result<Outcome> {
    property(properties::antiderivation(1000, 101), 1000)
}
fn prop_split() -> Result<Outcome> {
    property(properties::split_reconstruction(100, 103), 100)
}
fn prop_representation() -> Result<Outcome> {
    property(properties::representation_compatibility(), 1)
}

fn prop_gamma_squares() -> Result<Outcome> {
    let ok = (1..=7).all(|i| gamma(i).map(|g| g.square().scalar_value() == Some(Poly::int(-1))).unwrap_or(false));
    Ok(Outcome::compare(ok, true))
}

const fn claim(id: &'static str, anchor: &'static str, provenance: Provenance, check: Check) -> Claim {
    Claim { id, anchor, provenance, check: Some(check) }
}

const fn oos(id: &'static str, anchor: &'static str) -> Claim {
    Claim { id, anchor, provenance: Provenance::Published, check: None }
}

/// Every claim known to the verifier.
pub fn registry() -> Vec<Claim> {
    use Provenance::*;
    vec![
        claim("alg-catalog-dimensions", "dimensions of the eight catalog subalgebras", Published, alg_catalog_dimensions),
        claim("alg-clifford-calibration", "2F^e7 acts on psi1 with eigenvalue -6 (fixes the generator sign)", Published, alg_clifford_calibration),
        claim("alg-g2-dimension", "seven linear equations cut out a 14-dimensional g2 annihilating psi1", Published, alg_g2_dimension),
        claim("alg-lambda3-split", "Lambda^3 splits as 1 + 7 + 27", Published, alg_split_dimensions),
        claim("alg-phi-eigenvalues", "phi acts on psi1 and psi2 with distinct eigenvalues", Published, alg_phi_eigenvalues),
        claim("alg-phi-minus-7e567", "phi - 7 e567 lies in Lambda^3_27", Derived, alg_phi_minus_7e567),
        claim("alg-su2-normalizer", "normalizer and centralizer of su(2) in g2", Derived, alg_su2_normalizer),
        claim("alg-suc2-bracket", "[Q1, Q2] = -2 Q3", Derived, alg_suc2_bracket),
        claim("bia-r1suc2-branch", "R^1 + su_c(2): p = -a(3a+b)/2, r = 3a(5a+b)/2 solves the Bianchi condition", Published, bia_r1_suc2_branch),
        claim("bia-r1suc2-pair-symmetry", "R^1 + su_c(2): pair symmetry forces q = -2p", Published, bia_r1_suc2_pair_symmetry),
        claim("bia-r1suc2-solution", "R^1 + su_c(2): exact solution of the Bianchi condition", Derived, bia_r1_suc2_solution),
        claim("bia-so3-ansatz", "so(3): the five-parameter ansatz spans the invariant curvature operators", Published, bia_so3_ansatz),
        claim("bia-so3-branch-d-3c", "so(3): a = b = 0, d = 3c, 2x = -49c^2 solves the Bianchi condition", Published, bia_so3_branch_d_3c),
        claim("bia-so3-branch-d-minus-4c", "so(3): d = -4c, x = a^2 + b^2 - 49c^2 solves the Bianchi condition", Published, bia_so3_branch_d_minus_4c),
        claim("bia-so3-off-branch", "off the printed branches the Bianchi condition has no solution", Derived, bia_off_branch),
        claim("bia-so3-pair-symmetry", "so(3): pair symmetry forces u = v = z = 0, y = -x", Published, bia_so3_pair_symmetry),
        claim("bia-so3-stiefel", "so(3), d = 3c branch: torsion 7c F^e7 and curvature -49c^2/2 (2 S1S1 + S2S2 + S3S3)", Published, bia_stiefel),
        claim("bia-su2suc2-branch", "su(2) + su_c(2): r = -a(5a+b)/2, p = -a(3a+b)/2", Published, bia_su2_suc2_branch),
        claim("bia-suc2-branch-a0", "su_c(2): a = 0, p = 0 solves the Bianchi condition", Published, bia_suc2_branch_a0),
        claim("bia-suc2-branch-5a-b", "su_c(2): b = -5a, p = a^2 solves the Bianchi condition", Published, bia_suc2_branch_5a_b),
        claim("eig-scalar-consistency", "(2 Scal + |T|^2)/4 = lambda^2 against the Ricci trace", Trivial, eig_scalar_consistency),
        claim("eig-sasakian", "2F^e7 acts with -6 on psi1 and psi2", Published, eig_sasakian),
        claim("eig-sigma", "Sigma acts with -4 on psi1 and +4 on psi2", Published, eig_sigma),
        claim("eig-u2-plane-a-b-c", "u(2), plane a + b = c: eigenvalues -7c, -7c", Published, eig_u2_plane_one),
        claim("eig-u2-plane-4ab-3c", "u(2), plane 4(a + b) = -3c: eigenvalues -7c, +7c", Published, eig_u2_plane_two),
        claim("inv-commutants", "commutant and fixed-vector dimensions on R^7", Derived, inv_commutants),
        claim("inv-forms27-dims", "invariant Lambda^3_27 dimensions", Published, inv_forms27_dims),
        claim("inv-so3-vector-spinor", "so(3)-equivariant maps R^7 -> Delta", Derived, inv_so3_vector_to_spinor),
        claim("inv-so3ir-curvature", "so_ir(3): a unique invariant curvature operator (Schur)", Published, inv_so3ir_curvature_unique),
        claim("inv-span-r1-suc2", "printed generators span (Lambda^3_27) for R^1 + su_c(2)", Published, inv_span_r1_suc2),
        claim("inv-span-so3", "printed T_{a,b,c} blocks span (Lambda^3_27) for so(3)", Published, inv_span_so3),
        claim("inv-span-su2-suc2", "printed generator spans (Lambda^3_27) for su(2) + su_c(2)", Published, inv_span_su2_suc2),
        claim("inv-span-su3", "printed generator spans (Lambda^3_27) for su(3)", Published, inv_span_su3),
        claim("inv-span-suc2", "printed generator spans (Lambda^3_27) for su_c(2)", Published, inv_span_suc2),
        claim("inv-span-u2", "printed T_{a,b} spans (Lambda^3_27) for u(2)", Published, inv_span_u2),
        claim("inv-spinor-dims", "invariant spinor dimensions", Published, inv_spinor_dims),
        claim("prop-antiderivation", "contraction is an anti-derivation of the wedge product", Trivial, prop_antiderivation),
        claim("prop-clifford-relations", "e_i e_j + e_j e_i = -2 delta_ij", Trivial, prop_clifford),
        claim("prop-gamma-squares", "each generator squares to -1", Trivial, prop_gamma_squares),
        claim("prop-representation", "spin and vector actions are compatible homomorphisms", Trivial, prop_representation),
        claim("prop-split-reconstruction", "Lambda^3 split reconstructs random forms", Trivial, prop_split),
        claim("red-abelian-control", "h = 0, T = 0, R = 0 gives an abelian algebra with full center", Trivial, red_abelian_control),
        claim("red-branch-jacobi", "Jacobi holds at random points of the Bianchi branches", Published, red_branch_jacobi),
        claim("red-off-branch-jacobi", "Jacobi fails at random off-branch points", Derived, red_off_branch_jacobi),
        claim("red-r1suc2-jacobi", "Jacobi at points of the printed R^1 + su_c(2) branch", Published, red_r1_suc2_jacobi),
        claim("red-stiefel", "d = 3c branch algebra: 10-dimensional with negative definite Killing form", Published, red_stiefel),
        claim("red-suc2-structure", "su_c(2), a = 1, b = -5: perfect, 7-dimensional nilpotent radical, abelian [r,r], faithful adjoint", Published, red_suc2_structure),
        claim("ric-base-einstein", "a phi + b e567: the base of the fibration is Einstein with constant 3a(5a+b)", Published, ric_base_einstein),
        claim("ric-curve", "5a^2 + ab = 4 along a = 2s, b = 2/s - 10s", Published, ric_curve),
        claim("ric-fibre", "a phi + b e567: fibre Ricci (5a+b)^2/2 and curvature (5a+b)^2/4", Published, ric_fibre),
        claim("ric-inversion", "plane a + b = c: base scalar curvatures and their inversion", Published, ric_inversion),
        claim("ric-phi-vertical", "a phi + b e567: Ric^nabla and Ric^g blocks", Published, ric_phi_vertical),
        claim("ric-phi-vertical-trace", "a phi + b e567: Scal^nabla = 84a^2 + 24ab", Derived, ric_phi_vertical_trace),
        claim("ric-quasi-killing", "2F^e7: (X _| T) psi1 = 2 X psi1 + 4 g(X, e7) e7 psi1", Published, ric_quasi_killing),
        claim("ric-sasakian", "2F^e7: Ric^g = 10 g - 4 e7 (x) e7", Published, ric_sasakian),
        claim("ric-sigma", "Sigma: Scal^g = 30", Published, ric_sigma),
        claim("ric-spinor-identities", "a phi + b e567: (X _| T) psi1 = 3a X psi1 on E1 and (3a+b) on E2", Published, ric_spinor_identities),
        claim("ric-stiefel", "d = 3c branch: Ric^g = 5/2 49c^2 on e1..e6 and 3/2 49c^2 on e7", Published, ric_stiefel),
        claim("ric-su2-blocks", "su(2) line: Ric^nabla = 3 + 0, Ric^g = 9/2 + 3", Published, ric_su2_blocks),
        claim("ric-u2-plane-a-b-c", "plane a + b = c: Ric^nabla and Ric^g blocks", Published, ric_u2_plane_one),
        claim("ric-u2-plane-a-b-c-scal", "plane a + b = c: Scal^nabla = -48a^2 + 64ac + 44c^2", Published, ric_u2_plane_one_scal_char),
        claim("ric-u2-plane-4ab-3c-scal", "plane 4(a + b) = -3c: Scal^g = -12a^2 - 12ac + 711/8 c^2", Published, ric_u2_plane_two_scal),
        claim("tor-phi-line", "the line of phi is admissible exactly when the invariant spinor is unique", Derived, tor_phi_line),
        claim("tor-psi1-l27", "inside Lambda^3_1 + Lambda^3_27, T psi1 = 0 exactly on Lambda^3_27", Published, tor_psi1_l27),
        claim("tor-r1-suc2", "R^1 + su_c(2): every a phi + b e567 is admissible", Published, tor_r1_suc2),
        claim("tor-so3", "so(3): two hyperplanes d = 3c and d = -4c", Published, tor_so3),
        claim("tor-so3-ir", "so_ir(3): only multiples of phi", Published, tor_so3_ir),
        claim("tor-su2", "su(2): union of eight lines", Published, tor_su2),
        claim("tor-su2-eigenspinors", "su(2): psi1..psi4 are eigenspinors on each line", Published, tor_su2_eigenspinors),
        claim("tor-su2-suc2", "su(2) + su_c(2): every a phi + b e567 is admissible", Published, tor_su2_suc2),
        claim("tor-su3", "su(3): two lines", Published, tor_su3),
        claim("tor-suc2", "su_c(2): every a phi + b e567 is admissible", Published, tor_suc2),
        claim("tor-u2", "u(2): planes a + b = c and 4(a + b) = -3c", Published, tor_u2),
        claim("tor-w3", "admissible torsion inside Lambda^3_27 per algebra", Published, tor_w3),
        oos("oos-casimir-laplacian", "Casimir operator and the spinor Laplacian of the torsion"),
        oos("oos-characteristic-connection", "existence of the characteristic connection on a manifold"),
        oos("oos-chern-classes", "Chern classes of the line bundles over the base"),
        oos("oos-completeness", "completeness and regularity of the fibrations"),
        oos("oos-flat-bundle", "the flat bundle G_k associated with the closed e7 orbits"),
        oos("oos-lemma-differentials", "exterior differentials of e7, Omega_1, Sigma and *Sigma"),
        oos("oos-lie-derivatives", "Lie derivatives along e7"),
        oos("oos-n11", "identification of the su_c(2) example with N(1,1)"),
        oos("oos-oneill", "O'Neill submersion formulas as such"),
        oos("oos-squashed-sphere", "identification of the 3-Sasakian example with the squashed sphere"),
        oos("oos-structure-theorems", "Sasakian, nearly Kaehler, K3 and fibration structure theorems"),
    ]
}

/// Generators, invariants and commutant data of one catalog algebra.
pub fn show_subalgebra(name: SubalgebraName) -> Result<Value> {
    let h = catalog(name);
    let inv = invariant_report(name, h);
    Ok(json!({
        "name": name.as_str(),
        "dim": h.dim(),
        "generators": h.generators().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "invariant_spinors": inv.spinors,
        "invariant_forms27": inv.generators,
        "printed_span_matches": inv.printed_span_matches,
        "fixed_vectors": h.fixed_vectors(),
        "commutant_dim": h.commutant_dim(),
        "normalizer_dim": normalizer_in_g2(h).dim(),
    }))
}

/// The admissible torsion family of one algebra with its constraints and
/// printed components.
pub fn show_torsion(name: SubalgebraName) -> Result<Value> {
    let (fam, comps) = printed_family(name)?;
    let profile = eigenvalue_profile(&fam.form, catalog(name)).ok().map(|e| strs(&e.values));
    Ok(json!({
        "name": name.as_str(),
        "family": fam,
        "components": comps,
        "eigenvalues_on_family": profile,
        "w3_dim": w3_intersection(catalog(name)).dim(),
    }))
}

/// Curvature ansatz, Bianchi solution and printed branches of one algebra.
pub fn show_bianchi(name: SubalgebraName) -> Result<Value> {
    let (t, tparams) =
        bianchi_torsion(name).ok_or_else(|| AlgebraError::UnknownName(format!("no curvature ansatz for {name}")))?;
    let r = symmetric_ansatz(name)?.ok_or_else(|| AlgebraError::UnknownName(format!("no curvature ansatz for {name}")))?;
    let sol = solve_bianchi(&t, &r)?;
    let branches: Vec<Value> = printed_branches(name)
        .iter()
        .map(|b| {
            let c = check_branch(&t, &r, b);
            json!({"branch": b, "holds": c.holds, "remaining": strs(&c.failures), "lambda": c.lambda.to_string()})
        })
        .collect();
    Ok(json!({
        "name": name.as_str(),
        "torsion": t.to_string(),
        "torsion_params": tparams.iter().map(|p| p.name()).collect::<Vec<_>>(),
        "curvature": r.to_string(),
        "solution": sol.bindings.iter().map(|(k, v)| (k.name().to_string(), v.to_string())).collect::<BTreeMap<_, _>>(),
        "residuals": strs(&sol.residuals),
        "lambda": sol.lambda.to_string(),
        "branches": branches,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_unique_and_prefixed() {
        let r = registry();
        let mut ids: Vec<&str> = r.iter().map(|c| c.id).collect();
        ids.sort();
        let n = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), n);
        let prefixes = ["alg-", "inv-", "tor-", "eig-", "ric-", "bia-", "red-", "prop-", "oos-"];
        assert!(r.iter().all(|c| prefixes.iter().any(|p| c.id.starts_with(p))));
        assert!(r.iter().all(|c| (c.check.is_none()) == c.id.starts_with("oos-")));
    }

    #[test]
    fn filter_selects_prefix() {
        let rep = run_all(Some("eig-"), 2).unwrap();
        assert_eq!(rep.claims.len(), 5);
        assert!(rep.claims.iter().all(|c| c.id.starts_with("eig-")));
        assert!(rep.claims.iter().all(|c| c.status == Status::Verified || c.status == Status::GoldenRecorded));
        let mut sorted = rep.claims.clone();
        sorted.sort_by(|a, b| a.id.cmp(&b.id));
        assert_eq!(sorted, rep.claims);
    }

    #[test]
    fn corrupted_expectation_is_refuted() {
        fn wrong() -> Result<Outcome> {
            Ok(Outcome::compare(ordered(&dims_by_algebra(|n| catalog(n).dim())), vec![8, 4, 3, 3, 4, 6, 3, 4]))
        }
        fn broken() -> Result<Outcome> {
            Err(AlgebraError::Construction("boom".into()))
        }
        let claims = [
            claim("x-wrong", "corrupted table", Provenance::Published, wrong),
            claim("x-error", "raises", Provenance::Published, broken),
        ];
        let rep = run_claims(&claims, 1).unwrap();
        assert_eq!(rep.refuted().len(), 2);
        assert_eq!(rep.summary().errors, 1);
        assert!(rep.to_text().contains("expected"));
    }

    #[test]
    fn show_commands() {
        for n in SubalgebraName::ALL {
            assert_eq!(show_subalgebra(n).unwrap()["dim"], json!(catalog(n).dim()));
            assert!(show_torsion(n).is_ok(), "{n}");
        }
        let b = show_bianchi(SubalgebraName::So3).unwrap();
        assert_eq!(b["branches"].as_array().unwrap().len(), 2);
        assert!(show_bianchi(SubalgebraName::Su3).is_err());
    }

    #[test]
    fn exports_round_trip() {
        let rep = run_all(Some("oos-"), 1).unwrap();
        let back: Report = serde_json::from_str(&rep.to_json()).unwrap();
        assert_eq!(back, rep);
        let csv = rep.to_csv().unwrap();
        let mut rdr = csv::Reader::from_reader(csv.as_bytes());
        assert_eq!(rdr.records().count(), rep.claims.len());
        assert!(rep.claims.iter().all(|c| c.status == Status::OutOfScope));
        let anchors: Vec<&str> = registry().iter().filter(|c| c.id.starts_with("oos-")).map(|c| c.anchor).collect();
        assert!(rep.claims.iter().all(|c| anchors.contains(&c.anchor.as_str())));
    }
}
