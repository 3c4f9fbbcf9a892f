//! End-to-end runs of the `hahnlat` binary.

use std::process::{Command, Output};

fn hahnlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hahnlat")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const EX: [&str; 4] = ["--ell", "6,4,4", "--N", "7"];

fn with_ex<'a>(head: &[&'a str]) -> Vec<&'a str> {
    let mut v = head.to_vec();
    v.extend_from_slice(&EX);
    v
}

#[test]
fn domain_sets_of_the_example() {
    for set in ["V", "H"] {
        let o = hahnlat(&with_ex(&["domain", "--set", set]));
        assert!(o.status.success());
        assert_eq!(stdout(&o).lines().count(), 23);
    }
    let v = stdout(&hahnlat(&with_ex(&["domain", "--set", "V"])));
    let zeros = stdout(&hahnlat(&with_ex(&["domain", "--set", "zeros", "--nu", "0,5"])));
    let z: Vec<&str> = zeros.lines().collect();
    assert!(v.lines().all(|row| z.contains(&row)));
}

#[test]
fn eval_outputs() {
    let o = hahnlat(&["eval", "--d", "1", "--ell", "6,8", "--N", "12", "--n", "3"]);
    assert!(o.status.success());
    let poly: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(poly["nvars"], 1);
    assert_eq!(poly["terms"][0]["exp"][0], 3);
    assert_eq!(poly["terms"][0]["num"], "-1");
    assert_eq!(poly["terms"][0]["den"], "120");

    let o = hahnlat(&with_ex(&["eval", "--nu", "0,0"]));
    assert_eq!(stdout(&o).trim(), r#"{"nvars":2,"terms":[{"exp":[0,0],"num":"1","den":"1"}]}"#);

    let o = hahnlat(&with_ex(&["eval", "--nu", "3,3", "--values"]));
    let rows: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(rows.len(), 23);
    assert!(rows.iter().all(|r| r.ends_with(",0")));
}

#[test]
fn verify_reports_and_exit_codes() {
    let o = hahnlat(&with_ex(&["verify", "ortho", "--d", "2", "--no-timing"]));
    assert_eq!(o.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["command"], "verify ortho");
    assert_eq!(r["elapsed_ms"], 0);
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));

    let o = hahnlat(&["verify", "conjecture", "--n", "3", "--ell1", "4", "--ell2", "4", "--no-timing"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("factor (y-2x) found, remainder irreducible"));

    let o = hahnlat(&["verify", "cardinality", "--grid", "d2-small", "--no-timing"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("|H|=|V|"));

    assert_eq!(hahnlat(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(hahnlat(&["eval", "--ell", "6,4,4", "--N", "3", "--nu", "0,0"]).status.code(), Some(2));
    assert_eq!(hahnlat(&["eval", "--d", "3", "--ell", "6,4,4", "--N", "7", "--nu", "1,0"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = with_ex(&["verify", "vanishing", "--no-timing"]);
    assert_eq!(hahnlat(&args).stdout, hahnlat(&args).stdout);
    let k = with_ex(&["kernel", "--n", "2"]);
    let a = hahnlat(&k);
    assert!(a.status.success());
    assert_eq!(stdout(&a).lines().count(), 23);
    assert_eq!(a.stdout, hahnlat(&k).stdout);
}
