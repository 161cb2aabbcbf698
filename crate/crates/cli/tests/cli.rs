use std::path::Path;
use std::process::{Command, Output};

use qexpmap::ncrewrite::poly_from_json;
use qexpmap::qgroup_a::apq_presentation;
use qexpmap::qscalar::RadScalar;
use serde_json::Value;

fn qexpmap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qexpmap")).args(args).env_remove("QEXPMAP_GUARD").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn ok(args: &[&str]) -> String {
    let o = qexpmap(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn code(args: &[&str]) -> i32 {
    qexpmap(args).status.code().unwrap()
}

#[test]
fn normal_order_examples() {
    assert_eq!(ok(&["normal-order", "--algebra", "A", "d*a"]), "a*d - (q - p^-1)*b*c");
    assert_eq!(ok(&["normal-order", "--algebra", "A", "a*d - q*b*c - (a*d - p*c*b)"]), "0");
    assert_eq!(ok(&["normal-order", "--algebra", "U", "e*f"]), "f*e + (k^2 - k^-2)/(q - q^-1)");
    assert_eq!(ok(&["normal-order", "b*D"]), "p*q^-1*D*b");
}

#[test]
fn numeric_parameters() {
    assert_eq!(ok(&["--p", "2", "--q", "2", "normal-order", "a*d - d*a"]), "1.5*b*c");
    assert_eq!(ok(&["--p", "1/3", "--q", "5/2", "normal-order", "a*d - q*b*c - (a*d - p*c*b)"]), "0");
    let s = ok(&["--q", "2", "normal-order", "--algebra", "U", "e*f - f*e"]);
    assert_eq!(s, "0.6666666666666666*k^2 - 0.6666666666666666*k^-2");
    assert_eq!(code(&["--p", "2", "--q", "3", "normal-order", "--algebra", "U", "e"]), 2);
    assert_eq!(code(&["--p", "2", "normal-order", "a"]), 2);
    assert_eq!(code(&["--p", "x/y", "--q", "1", "normal-order", "a"]), 2);
    assert_eq!(code(&["--q", "1", "normal-order", "a"]), 2);
}

#[test]
fn usage_and_guard_errors() {
    assert_eq!(code(&["normal-order", "a*("]), 2);
    assert_eq!(code(&["normal-order", "x"]), 2);
    assert_eq!(code(&["tmatrix", "--j", "-1"]), 2);
    assert_eq!(code(&["tmatrix", "--j", "1/3"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    let o = Command::new(env!("CARGO_BIN_EXE_qexpmap"))
        .args(["normal-order", "(a + b + c + d)^4"])
        .env("QEXPMAP_GUARD", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(code(&["--guard", "3", "normal-order", "(d + c)^3*(b + a)^3"]), 3);
}

#[test]
fn defining_t_matrix() {
    assert_eq!(ok(&["tmatrix", "--j", "1/2", "--z", "1/2"]), "[[a, b],\n [c, d]]");
}

#[test]
fn spin_one_latex_matches_the_printed_layout() {
    let got = ok(&["tmatrix", "--j", "1", "--z", "1/2", "--format", "latex"]);
    let printed = r"{\cal D}^{-1/2} \left(
\begin{array}{ccc}
a^2 &
[2]^{\frac{1}{2}}Q^{-\frac{1}{2}}ab &
\lambda^{-1}b^2 \\
  &   &  \\
{} [2]^{\frac{1}{2}}Q^{-\frac{1}{2}}ac &
ad+Q^{-1}\lambda^{-1}bc &
[2]^{\frac{1}{2}}Q^{-\frac{1}{2}}\lambda^{-1}bd \\
  &   &  \\
\lambda c^2 &
[2]^{\frac{1}{2}}Q^{-\frac{1}{2}}\lambda cd &
d^2
\end{array} \right)";
    // spacer rows and `{}` are layout only
    let norm = |s: &str| s.replace("  &   &  \\\\", "").replace("{} ", "").split_whitespace().collect::<String>();
    assert_eq!(norm(&got), norm(printed));
}

#[test]
fn json_output_round_trips() {
    let pres = apq_presentation();
    for (j, z) in [("1/2", "1/2"), ("1", "1/2"), ("3/2", "1/2")] {
        let text = ok(&["tmatrix", "--j", j, "--z", z, "--format", "json"]);
        let doc: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["kind"], "T");
        assert_eq!(doc["params"]["z"], z);
        for row in doc["rows"].as_array().unwrap() {
            for e in row.as_array().unwrap() {
                let p = poly_from_json::<RadScalar, _>(e, &pres).unwrap();
                let back = qexpmap::ncrewrite::poly_to_json(&p, &pres).unwrap();
                assert_eq!(&back, e);
            }
        }
    }
    let text = ok(&["normal-order", "d*a", "--format", "json"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    let p = poly_from_json::<RadScalar, _>(&v, &pres).unwrap();
    assert_eq!(qexpmap::ncrewrite::poly_to_json(&p, &pres).unwrap(), v);
}

#[test]
fn l_and_r_matrices() {
    let l = ok(&["lmatrix", "--sign", "+", "--j", "1/2"]);
    assert_eq!(l, "[[k^-1, 0],\n [-(q^3/2 - q^-1/2)*e, k]]");
    let l1 = ok(&["lmatrix", "--sign", "-", "--j", "1", "--norm", "rational"]);
    assert!(l1.starts_with("[[k^2, "), "{l1}");
    let r = ok(&["rmatrix", "--j1", "1/2", "--z1", "1/2", "--j2", "1/2", "--z2", "1/2"]);
    assert_eq!(
        r,
        "[[Q^-1/2, 0, 0, 0],\n [0, Q^1/2*lambda^-1, -(Q^3/2 - Q^-1/2), 0],\n [0, 0, Q^1/2*lambda, 0],\n [0, 0, 0, Q^-1/2]]"
    );
    let j: Value = serde_json::from_str(&ok(&["rmatrix", "--j1", "1/2", "--j2", "1", "--format", "json"])).unwrap();
    assert_eq!(j["R"].as_array().unwrap().len(), 6);
}

#[test]
fn rep_json() {
    let v: Value = serde_json::from_str(&ok(&["rep", "--j", "1", "--z", "-1/2", "--format", "json"])).unwrap();
    assert_eq!(v["j"], "1");
    assert_eq!(v["z"], "-1/2");
    assert_eq!(v["norm"], "symmetric");
    for key in ["Jplus", "Jminus", "J0", "Z"] {
        assert_eq!(v[key].as_array().unwrap().len(), 3, "{key}");
    }
    let text = ok(&["rep", "--j", "1/2", "--norm", "rational"]);
    assert!(text.starts_with("Jplus =\n[[0, 1],"), "{text}");
}

#[test]
fn verify_examples() {
    let s = ok(&["verify", "--suite", "comodule", "--j", "1", "--z", "1/2"]);
    assert!(s.ends_with("2 of 2 checks passed"), "{s}");
    ok(&["verify", "--suite", "confluence", "--max-len", "3"]);
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let s = ok(&["verify", "--suite", "quasitriangular", "--format", "json", "--out", out.to_str().unwrap()]);
    let printed: Value = serde_json::from_str(&s).unwrap();
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(printed, written);
    assert_eq!(written["pass"], true);
    let first = &written["reports"][0];
    for key in ["check", "params", "pass", "residuals"] {
        assert!(first.get(key).is_some(), "{key}");
    }
    assert_eq!(code(&["verify", "--suite", "nope"]), 2);
    assert_eq!(code(&["--q", "2", "verify", "--suite", "qdet"]), 2);
}

#[test]
fn verify_all_is_sorted_and_passes() {
    let v: Value =
        serde_json::from_str(&ok(&["verify", "--suite", "all", "--max-j", "1", "--format", "json"])).unwrap();
    let checks: Vec<String> =
        v["reports"].as_array().unwrap().iter().map(|r| r["check"].as_str().unwrap().to_string()).collect();
    let mut sorted = checks.clone();
    sorted.sort();
    assert_eq!(checks, sorted);
    assert!(checks.contains(&"specialize".to_string()));
    assert!(checks.contains(&"printed-l".to_string()));
}

fn golden(action: &str, path: &Path) -> Output {
    qexpmap(&["golden", action, path.to_str().unwrap()])
}

#[test]
fn golden_record_compare_tamper_missing() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("printed.json");
    assert_eq!(golden("record", &path).status.code(), Some(0));
    assert_eq!(golden("compare", &path).status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let tampered = text.replacen("\"qhalf\": -1", "\"qhalf\": 1", 1);
    assert_ne!(tampered, text);
    std::fs::write(&path, tampered).unwrap();
    let o = golden("compare", &path);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("recorded"), "{err}");
    assert_eq!(golden("compare", &dir.path().join("absent.json")).status.code(), Some(2));
}

#[test]
fn committed_golden_file_is_current() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/printed.json");
    let o = golden("compare", &path);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}
