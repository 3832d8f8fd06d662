use std::process::{Command, Output};

use ncsf_core::serial::SerializedElement;
use ncsf_core::SymElement;
use serde_json::{json, Value};

fn ncsf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncsf"))
        .args(args)
        .env_remove("NCSF_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_of(args: &[&str]) -> Value {
    let out = ncsf(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_str(&stdout(&out)).unwrap()
}

fn terms(value: &Value) -> Vec<(Vec<u64>, String)> {
    value["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            let index = t["index"]
                .as_array()
                .unwrap()
                .iter()
                .map(|v| v.as_u64().unwrap())
                .collect();
            (index, t["coeff"].as_str().unwrap().to_string())
        })
        .collect()
}

fn class_values(value: &Value) -> Vec<(Vec<u64>, String)> {
    value["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            let class = t["class"]
                .as_array()
                .unwrap()
                .iter()
                .map(|v| v.as_u64().unwrap())
                .collect();
            (class, t["value"].as_str().unwrap().to_string())
        })
        .collect()
}

#[test]
fn expand_examples() {
    let qs = json_of(&[
        "expand", "--space", "qsym", "--from", "QS", "--to", "F", "--index", "1,3",
    ]);
    assert_eq!(qs["space"], "qsym");
    assert_eq!(qs["basis"], "F");
    assert_eq!(qs["degree"], 4);
    assert_eq!(
        terms(&qs),
        vec![(vec![1, 3], "1".into()), (vec![2, 2], "1".into())]
    );

    let r = json_of(&[
        "expand", "--space", "nsym", "--from", "R", "--to", "H", "--index", "4",
    ]);
    assert_eq!(terms(&r), vec![(vec![4], "1".into())]);

    let s = json_of(&[
        "expand", "--space", "sym", "--from", "S", "--to", "H", "--index", "2,1",
    ]);
    let mut got = terms(&s);
    got.sort();
    assert_eq!(got, vec![(vec![2, 1], "1".into()), (vec![3], "-1".into())]);
}

#[test]
fn expand_output_round_trips() {
    let out = ncsf(&[
        "expand", "--space", "sym", "--from", "P", "--to", "S", "--index", "2,2",
    ]);
    let text = stdout(&out);
    let parsed = SerializedElement::from_json(&text).unwrap();
    let element: SymElement = parsed.to_element().unwrap();
    let again = SerializedElement::from_element(&element, parsed.degree).to_json();
    assert_eq!(format!("{again}\n"), text);
}

#[test]
fn empty_index() {
    let e = json_of(&[
        "expand", "--space", "nsym", "--from", "S", "--to", "R", "--index", "0",
    ]);
    assert_eq!(e["degree"], 0);
    assert_eq!(terms(&e), vec![(vec![], "1".into())]);
}

#[test]
fn expand_rejects_bad_input() {
    for args in [
        [
            "expand", "--space", "qsym", "--from", "XX", "--to", "F", "--index", "1,3",
        ],
        [
            "expand", "--space", "qsym", "--from", "QS", "--to", "F", "--index", "1,,3",
        ],
        [
            "expand", "--space", "sym", "--from", "S", "--to", "H", "--index", "1,2",
        ],
        [
            "expand", "--space", "nsym", "--from", "R", "--to", "H", "--index", "a",
        ],
    ] {
        let out = ncsf(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn matrix_examples() {
    let m = json_of(&[
        "matrix", "--space", "qsym", "--from", "YQS", "--to", "F", "-n", "3",
    ]);
    let rows = m["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row.as_array().unwrap().iter().enumerate() {
            assert_eq!(v, if i == j { "1" } else { "0" });
        }
    }

    let f = json_of(&[
        "matrix", "--space", "qsym", "--from", "F", "--to", "M", "-n", "2",
    ]);
    assert_eq!(f["indices"], json!([[2], [1, 1]]));
    assert_eq!(f["rows"], json!([["1", "0"], ["1", "1"]]));

    let one = json_of(&[
        "matrix", "--space", "sym", "--from", "E", "--to", "S", "-n", "1",
    ]);
    assert_eq!(one["rows"], json!([["1"]]));
}

#[test]
fn matrix_csv() {
    let out = ncsf(&[
        "matrix", "--space", "qsym", "--from", "F", "--to", "M", "-n", "2", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "M\\F,2,1.1\n2,1,0\n1.1,1,1\n");

    let out = ncsf(&[
        "matrix", "--space", "nsym", "--from", "R", "--to", "H", "-n", "3", "--format", "csv",
    ]);
    let header = stdout(&out).lines().next().unwrap().to_string();
    assert_eq!(header, "H\\R,3,1.2,2.1,1.1.1");
}

#[test]
fn matrix_degree_bound() {
    let out = ncsf(&[
        "matrix", "--space", "qsym", "--from", "F", "--to", "M", "-n", "40",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tableaux_counts() {
    for (kind, shape, count) in [
        ("syct", "3,1", "2"),
        ("syct", "1,3", "1"),
        ("syt", "2,1", "2"),
    ] {
        let out = ncsf(&["tableaux", kind, "--shape", shape, "--count"]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out).trim(), count);
    }
}

#[test]
fn tableaux_list() {
    let list = json_of(&["tableaux", "syct", "--shape", "3,1", "--list"]);
    assert_eq!(
        list,
        json!([
            {"rows": [[1, 2, 3], [4]], "descent": [3, 1]},
            {"rows": [[1, 2, 4], [3]], "descent": [2, 2]},
        ])
    );
    let syt = json_of(&["tableaux", "syt", "--shape", "2,1", "--list"]);
    assert_eq!(syt.as_array().unwrap().len(), 2);
}

#[test]
fn tableaux_rejects_bad_shapes() {
    for shape in ["3,x", "1,-2"] {
        let out = ncsf(&["tableaux", "syct", "--shape", shape, "--count"]);
        assert_eq!(out.status.code(), Some(2), "{shape}");
    }
    let out = ncsf(&["tableaux", "syt", "--shape", "1,2", "--count"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ncsf(&["tableaux", "syt", "--shape", "2,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn characters() {
    let young = json_of(&["char", "--young", "2,1"]);
    assert_eq!(young["space"], "class-function");
    assert_eq!(
        class_values(&young),
        vec![
            (vec![3], "0".into()),
            (vec![2, 1], "1".into()),
            (vec![1, 1, 1], "3".into())
        ]
    );

    let trivial = json_of(&["char", "--irreducible", "3"]);
    assert!(class_values(&trivial).iter().all(|(_, v)| v == "1"));

    let standard = json_of(&["char", "--irreducible", "2,1"]);
    assert_eq!(
        class_values(&standard),
        vec![
            (vec![3], "-1".into()),
            (vec![2, 1], "0".into()),
            (vec![1, 1, 1], "2".into())
        ]
    );

    assert_eq!(
        ncsf(&["char", "--irreducible", "1,2"]).status.code(),
        Some(2)
    );
    assert_eq!(ncsf(&["char"]).status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let out = ncsf(&["verify", "main-theorem", "-n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("8/8 pass"));

    let out = ncsf(&["verify", "duality", "-n", "1"]);
    assert_eq!(out.status.code(), Some(0));

    let out = ncsf(&["verify", "all", "-n", "5"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert_eq!(stdout(&out).lines().count(), 4);
}

#[test]
fn verify_json_report() {
    let report = json_of(&["verify", "square", "-n", "2", "--json"]);
    let report = &report.as_array().unwrap()[0];
    assert_eq!(report["suite"], "square");
    assert_eq!(report["n"], 2);
    assert_eq!(report["checks"].as_array().unwrap().len(), 2);
    assert!(report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
}

#[test]
fn verify_degree_bound() {
    assert_eq!(
        ncsf(&["verify", "solomon", "-n", "9"]).status.code(),
        Some(2)
    );
    let out = Command::new(env!("CARGO_BIN_EXE_ncsf"))
        .args(["verify", "main-theorem", "-n", "3"])
        .env("NCSF_MAX_N", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bound 2"));
}

#[test]
fn usage_errors() {
    assert_eq!(ncsf(&[]).status.code(), Some(2));
    assert_eq!(ncsf(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ncsf(&["--help"]).status.code(), Some(0));
}
