use std::process::Command;

fn g2verify(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_g2verify")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn verified_subset_exits_zero() {
    let (code, out, _) = g2verify(&["verify", "--filter", "eig-", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let claims = v["claims"].as_array().unwrap();
    assert_eq!(claims.len(), 5);
    for c in claims {
        for key in ["id", "anchor", "status", "computed", "expected", "provenance", "millis"] {
            assert!(c.get(key).is_some(), "missing {key}");
        }
    }
    let ids: Vec<&str> = claims.iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn refutation_exits_one() {
    let (code, out, _) = g2verify(&["verify", "--filter", "bia-r1suc2", "--format", "text", "--jobs", "2"]);
    assert_eq!(code, 1);
    assert!(out.contains("refuted"));
}

#[test]
fn csv_has_header_and_rows() {
    let dir = std::env::temp_dir().join(format!("g2verify-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("oos.csv");
    let (code, out, _) = g2verify(&["verify", "--filter", "oos-", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    let mut lines = body.lines();
    assert_eq!(lines.next(), Some("id,anchor,status,computed,expected,provenance,millis"));
    assert_eq!(lines.count(), 11);
    assert!(body.contains("out-of-scope"));
}

#[test]
fn output_is_stable_apart_from_timings() {
    let strip = |s: String| -> String { s.lines().filter(|l| !l.contains("\"millis\"")).collect::<Vec<_>>().join("\n") };
    let (_, a, _) = g2verify(&["verify", "--filter", "ric-", "--format", "json", "--jobs", "1"]);
    let (_, b, _) = g2verify(&["verify", "--filter", "ric-", "--format", "json", "--jobs", "4"]);
    assert_eq!(strip(a), strip(b));
}

#[test]
fn show_commands() {
    let (code, out, _) = g2verify(&["show-subalgebra", "su2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dim"], 3);
    let (code, out, _) = g2verify(&["show-torsion", "so3"]);
    assert_eq!(code, 0);
    assert!(out.contains("components"));
    let (code, out, _) = g2verify(&["show-bianchi", "suc2"]);
    assert_eq!(code, 0);
    assert!(out.contains("branches"));
}

#[test]
fn bad_input_is_an_internal_error() {
    let (code, _, err) = g2verify(&["show-bianchi", "su3"]);
    assert_eq!(code, 2);
    assert!(err.contains("error"));
    let (code, _, _) = g2verify(&["show-subalgebra", "e8"]);
    assert_ne!(code, 0);
}
