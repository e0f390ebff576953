//! End-to-end acceptance run: twelve criteria, one PASS/FAIL line each.
//! Every criterion is exact (rational arithmetic, zero tolerance).

use std::time::Instant;

use g2core::exact::Poly;
use g2core::g2lie::{catalog, g2_elements, SubalgebraName};
use g2core::report::{registry, run_claims, ClaimRecord, Status};

struct Criterion {
    number: usize,
    summary: &'static str,
    claims: &'static [&'static str],
    extra: Option<fn() -> Result<(), String>>,
}

fn g2_direct() -> Result<(), String> {
    let n = g2_elements().len();
    (n == 14).then_some(()).ok_or(format!("g2 has dimension {n}"))
}

fn catalog_direct() -> Result<(), String> {
    let dims: Vec<usize> = SubalgebraName::ALL.iter().map(|n| catalog(*n).dim()).collect();
    (dims == [8, 4, 3, 3, 4, 6, 3, 3]).then_some(()).ok_or(format!("catalog dimensions {dims:?}"))
}

fn curve_direct() -> Result<(), String> {
    // 5a^2 + ab with a = 2s, s*b = 2 - 10s^2; multiplied through by s.
    let s: Poly = "s".parse().unwrap();
    let a = &s * &Poly::int(2);
    let sb: Poly = "2 - 10*s^2".parse().unwrap();
    let lhs = &(&(&a * &a) * &s) * &Poly::int(5) + &a * &sb;
    let rhs = &s * &Poly::int(4);
    (lhs == rhs).then_some(()).ok_or(format!("s(5a^2 + ab) = {lhs}"))
}

const CRITERIA: &[Criterion] = &[
    Criterion { number: 1, summary: "g2 is 14-dimensional and annihilates psi1", claims: &["alg-g2-dimension"], extra: Some(g2_direct) },
    Criterion {
        number: 2,
        summary: "invariant spinor and Lambda^3_27 dimension tables",
        claims: &["inv-spinor-dims", "inv-forms27-dims", "alg-catalog-dimensions"],
        extra: Some(catalog_direct),
    },
    Criterion {
        number: 3,
        summary: "printed invariant generators span the computed spaces",
        claims: &["inv-span-su3", "inv-span-u2", "inv-span-suc2", "inv-span-r1-suc2", "inv-span-su2-suc2", "inv-span-so3"],
        extra: None,
    },
    Criterion {
        number: 4,
        summary: "admissible torsion sets, with randomized refutation off the loci",
        claims: &[
            "tor-su3", "tor-u2", "tor-su2", "tor-su2-eigenspinors", "tor-suc2", "tor-r1-suc2", "tor-su2-suc2", "tor-so3", "tor-w3",
            "tor-so3-ir",
        ],
        extra: None,
    },
    Criterion {
        number: 5,
        summary: "torsion eigenvalues on the invariant spinors",
        claims: &["eig-sasakian", "eig-sigma", "eig-u2-plane-a-b-c", "eig-u2-plane-4ab-3c", "alg-phi-eigenvalues"],
        extra: None,
    },
    Criterion { number: 6, summary: "scalar curvature identities", claims: &["ric-sigma", "ric-u2-plane-4ab-3c-scal"], extra: None },
    Criterion {
        number: 7,
        summary: "Ricci tensors of the characteristic and Levi-Civita connections",
        claims: &["ric-sasakian", "ric-u2-plane-a-b-c", "ric-su2-blocks", "ric-stiefel", "ric-phi-vertical"],
        extra: None,
    },
    Criterion {
        number: 8,
        summary: "Bianchi solution families as printed",
        claims: &[
            "bia-so3-pair-symmetry", "bia-so3-branch-d-minus-4c", "bia-so3-branch-d-3c", "bia-suc2-branch-a0", "bia-suc2-branch-5a-b",
            "bia-r1suc2-pair-symmetry", "bia-r1suc2-branch", "bia-su2suc2-branch",
        ],
        extra: None,
    },
    Criterion { number: 9, summary: "5a^2 + ab = 4 along the curve", claims: &["ric-curve"], extra: Some(curve_direct) },
    Criterion {
        number: 10,
        summary: "reductive algebras: Jacobi on branches and controls, structure",
        claims: &["red-branch-jacobi", "red-r1suc2-jacobi", "red-off-branch-jacobi", "red-suc2-structure", "red-stiefel"],
        extra: None,
    },
    Criterion {
        number: 11,
        summary: "property suites",
        claims: &["prop-clifford-relations", "prop-antiderivation", "prop-split-reconstruction", "prop-representation"],
        extra: None,
    },
    Criterion { number: 12, summary: "(2 Scal + |T|^2)/4 = lambda^2 for every eigenvalue case", claims: &["eig-scalar-consistency"], extra: None },
];

fn holds(r: &ClaimRecord) -> bool {
    matches!(r.status, Status::Verified | Status::GoldenRecorded)
}

#[test]
fn acceptance() {
    let start = Instant::now();
    let wanted: Vec<_> = registry().into_iter().filter(|c| CRITERIA.iter().any(|k| k.claims.contains(&c.id))).collect();
    let report = run_claims(&wanted, 0).expect("thread pool");
    let registry_secs = start.elapsed().as_secs_f64();

    let mut failed = Vec::new();
    for k in CRITERIA {
        let mut problems = Vec::new();
        for id in k.claims {
            match report.claims.iter().find(|r| r.id == *id) {
                None => problems.push(format!("{id}: not registered")),
                Some(r) if !holds(r) => problems.push(format!("{id}: {} (computed {})", r.status.as_str(), r.computed)),
                Some(_) => {}
            }
        }
        if let Some(f) = k.extra {
            if let Err(e) = f() {
                problems.push(e);
            }
        }
        let verdict = if problems.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {verdict} [tolerance: exact, 0] {} ({} claims)", k.number, k.summary, k.claims.len());
        for p in &problems {
            println!("    {p}");
        }
        if !problems.is_empty() {
            failed.push(k.number);
        }
    }
    println!("registry subset ran in {registry_secs:.2}s");
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}

#[test]
fn full_registry_under_a_minute() {
    let start = Instant::now();
    let report = g2core::report::run_all(None, 0).unwrap();
    let secs = start.elapsed().as_secs_f64();
    println!("full registry: {} claims in {secs:.2}s", report.claims.len());
    assert_eq!(report.summary().errors, 0);
    assert!(secs < 60.0);
}
