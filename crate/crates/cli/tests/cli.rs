use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn rrs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rrs")).args(args).env_remove("RRS_SIZE_CAP").output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    serde_json::from_str(text.lines().last().unwrap()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("rrs-cli-{}-{name}", std::process::id()));
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn props_on_p3() {
    let p3 = fixture("P3.json");
    let out = rrs(&["props", p3.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["tool"], "rrs");
    let st = v["statements"].as_object().unwrap();
    assert_eq!(st["antisym.i"]["status"], "not-applicable");
    assert_eq!(st["antisym.ii"]["status"], "not-applicable");
    assert!(st.values().all(|s| s["status"] != "fails"));
}

#[test]
fn single_statement() {
    let p3 = fixture("P3.json");
    let out = rrs(&["props", p3.to_str().unwrap(), "--statement", "galois.residuated-pair"]);
    assert_eq!(out.status.code(), Some(0));
    let st = json(&out)["statements"].as_object().unwrap().clone();
    assert_eq!(st.len(), 1);
    assert_eq!(st["galois.residuated-pair"]["status"], "holds");
}

#[test]
fn validate_exit_codes() {
    let p3 = fixture("P3.json");
    let p3 = p3.to_str().unwrap();
    assert_eq!(rrs(&["validate", p3, "--class", "preordered-rrs"]).status.code(), Some(0));
    let out = rrs(&["validate", p3, "--class", "antisym-rrs"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["holds"], false);
    assert_eq!(rrs(&["validate", "/no/such/model.json"]).status.code(), Some(2));
}

#[test]
fn bad_input_exits_2() {
    let bad = temp_file("bad.json", "{not json");
    assert_eq!(rrs(&["props", bad.to_str().unwrap()]).status.code(), Some(2));
    let p3 = fixture("P3.json");
    assert_eq!(rrs(&["props", p3.to_str().unwrap(), "--statement", "no.such"]).status.code(), Some(2));
    assert_eq!(rrs(&["enumerate", "--class", "nonsense", "--size", "2"]).status.code(), Some(2));
    assert_eq!(rrs(&["enumerate", "--class", "rrs", "--size", "9"]).status.code(), Some(2));
}

#[test]
fn directoid_then_quotient() {
    let p3 = fixture("P3.json");
    let out = rrs(&["directoids", p3.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["count"], 1);
    let d = temp_file("d.json", &v["directoids"][0].to_string());
    let out = rrs(&["quotient", d.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["pocrim"], true);
    assert_eq!(v["quotient"]["model"]["size"], 2);

    let out = rrs(&["induce", d.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["rel"], serde_json::json!([1, 1, 1, 1, 1, 1, 0, 0, 1]));
}

#[test]
fn search_finds_non_commutative_join() {
    let out = rrs(&[
        "search",
        "--class",
        "residuated-quasi-directoid",
        "--negate",
        "(x|y)|x = x|y",
        "--max-size",
        "3",
        "--exact",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let c = &json(&out)["counterexample"];
    assert_eq!(c["size"], 3);
    assert_eq!(c["witness"].as_array().unwrap().len(), 2);
}

#[test]
fn search_without_counterexample() {
    let out = rrs(&["search", "--class", "rrs", "--negate", "x*y = y*x", "--max-size", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["counterexample"].is_null());
}

#[test]
fn enumerate_summary() {
    for (class, labeled, count) in [("rrs", false, 35), ("rrs", true, 70), ("antisym-rrs", false, 3)] {
        let mut args = vec!["enumerate", "--class", class, "--size", "2"];
        if labeled {
            args.push("--labeled");
        }
        let out = rrs(&args);
        assert_eq!(out.status.code(), Some(0));
        let text = String::from_utf8(out.stdout).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), count + 1);
        let summary: Value = serde_json::from_str(lines[count]).unwrap();
        assert_eq!(summary["count"], count);
    }
}

#[test]
fn output_is_byte_stable() {
    let args = ["enumerate", "--class", "preordered-rrs", "--size", "3", "--jobs", "3"];
    let strip = |o: Output| {
        let t = String::from_utf8(o.stdout).unwrap();
        let mut lines: Vec<String> = t.lines().map(str::to_string).collect();
        lines.pop();
        lines
    };
    let a = strip(rrs(&args));
    let b = strip(rrs(&["enumerate", "--class", "preordered-rrs", "--size", "3", "--jobs", "1"]));
    assert_eq!(a.len(), 88884);
    assert_eq!(a, b);

    let p3 = fixture("P3.json");
    assert_eq!(rrs(&["props", p3.to_str().unwrap()]).stdout, rrs(&["props", p3.to_str().unwrap()]).stdout);
}

#[test]
fn galois_on_a_relation() {
    let r = temp_file("r.json", r#"{"size":2,"rel":[1,1,0,1]}"#);
    let out = rrs(&["galois", r.to_str().unwrap(), "--star", "0", "--dagger", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["polarity"], true);
    assert_eq!(v["star"], serde_json::json!([0, 1]));
}
