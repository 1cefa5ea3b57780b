use std::process::{Command, Output};

fn gcflab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gcflab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = gcflab(args);
    assert!(
        out.status.success(),
        "{args:?} exited with {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("UTF-8 stdout")
}

fn fails(args: &[&str], code: i32) -> String {
    let out = gcflab(args);
    assert_eq!(out.status.code(), Some(code), "{args:?}");
    String::from_utf8(out.stderr).expect("UTF-8 stderr")
}

fn rows(csv: &str) -> Vec<Vec<String>> {
    let mut r = csv::Reader::from_reader(csv.as_bytes());
    r.records()
        .map(|rec| rec.unwrap().iter().map(str::to_string).collect())
        .collect()
}

#[test]
fn convergents_period_doubling() {
    let out = ok(&[
        "convergents",
        "--rule",
        "a->ab;b->aa",
        "--assign",
        "a=1,b=3",
        "--depth",
        "6",
    ]);
    assert!(out.starts_with("n,p,q,value\n"));
    let last = rows(&out).pop().unwrap();
    assert_eq!(last[..3], ["6", "119", "99"]);
    assert_eq!(last[3], "1.20202020202020202020202020202");
}

#[test]
fn convergents_depth_zero() {
    let r = rows(&ok(&["convergents", "--depth", "0"]));
    assert_eq!(
        r,
        vec![vec!["0", "1", "1", "1.00000000000000000000000000000"]]
    );
}

#[test]
fn convergents_all_ones_are_fibonacci() {
    let out = ok(&["convergents", "--assign", "a=1,b=1", "--depth", "5"]);
    let q: Vec<String> = rows(&out).into_iter().map(|r| r[2].clone()).collect();
    assert_eq!(q, ["1", "1", "2", "3", "5", "8"]);
}

#[test]
fn convergents_json_lines() {
    let out = ok(&["convergents", "--depth", "2", "--format", "json"]);
    let first = out.lines().next().unwrap();
    assert_eq!(
        first,
        r#"{"n":0,"p":1,"q":1,"value":1.00000000000000000000000000000}"#
    );
    assert_eq!(out.lines().count(), 3);
}

#[test]
fn diagnose_rejects_depth_one() {
    let err = fails(&["diagnose", "--depth", "1"], 2);
    assert!(err.contains("--depth"), "{err}");
}

#[test]
fn diagnose_all_ones_columns() {
    let out = ok(&["diagnose", "--assign", "a=1,b=1", "--depth", "30"]);
    for r in rows(&out) {
        assert_eq!(r[3], "1", "d");
        assert_eq!(r[4], "1", "P");
    }
}

#[test]
fn diagnose_margin_eventually_holds() {
    let out = ok(&["diagnose", "--depth", "200"]);
    let r = rows(&out);
    assert_eq!(r.len(), 200);
    let margin = |row: &Vec<String>| -> f64 {
        let (num, den) = row[9].split_once('/').unwrap_or((&row[9], "1"));
        num.parse::<f64>().unwrap() / den.parse::<f64>().unwrap()
    };
    let n0 = r
        .iter()
        .rposition(|row| margin(row) <= 1.0)
        .map_or(0, |i| i + 1);
    assert!(n0 < 20, "margin fails as late as row {n0}");
}

#[test]
fn raney_table_det_three() {
    let out = ok(&["raney", "table", "--det", "3"]);
    let r = rows(&out);
    assert_eq!(r.len(), 10);
    assert!(r.contains(&vec![
        "1,0,0,3".into(),
        "L".into(),
        "L^3".into(),
        "1,0,0,3".into()
    ]));
}

#[test]
fn raney_table_dot_and_json() {
    let dot = ok(&["raney", "table", "--det", "3", "--format", "dot"]);
    assert!(dot.starts_with("digraph transducer {"));
    assert_eq!(dot.matches("->").count(), 10);
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["raney", "table", "--det", "3", "--format", "json"])).unwrap();
    assert_eq!(json["edges"].as_array().unwrap().len(), 10);
}

#[test]
fn raney_run_worked_example() {
    let out = ok(&[
        "raney", "run", "--det", "3", "--state", "1,0,0,3", "--input", "RLLR",
    ]);
    let last = rows(&out).pop().unwrap();
    assert_eq!(last[3], "LLRRRR");
    assert_eq!(last[4], "3,0,0,1");
    let json: serde_json::Value = serde_json::from_str(&ok(&[
        "raney", "run", "--det", "3", "--state", "1,0,0,3", "--input", "RLLR", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(json["output"], "LLRRRR");
    assert_eq!(json["final"], "3,0,0,1");
}

#[test]
fn raney_run_rejects_wrong_determinant() {
    let err = fails(
        &[
            "raney", "run", "--det", "2", "--state", "1,0,0,3", "--input", "R",
        ],
        2,
    );
    assert!(err.contains("--state"), "{err}");
}

#[test]
fn raney_states_det_two() {
    assert_eq!(rows(&ok(&["raney", "states", "--det", "2"])).len(), 2);
}

#[test]
fn rcf_small_generations() {
    let r = rows(&ok(&["rcf", "--foldings", "3"]));
    assert_eq!(r, vec![vec!["transducer", "1 4 1 17 1 1 1 1 2", "3"]]);
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["rcf", "--foldings", "2", "--format", "json"])).unwrap();
    assert_eq!(json["confirmed"], serde_json::json!([1, 4, 1]));
    assert_eq!(json["next_lower_bound"], 10);
}

#[test]
fn rcf_crosscheck_agrees() {
    let out = ok(&[
        "rcf",
        "--foldings",
        "12",
        "--crosscheck",
        "--depth",
        "4096",
        "--format",
        "json",
    ]);
    let json: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(json["discrepancy"], false);
    assert_eq!(json["bounds_consistent"], true);
    assert!(json["agreed"].as_u64().unwrap() >= 40);
}

#[test]
fn stammer_period_doubling() {
    let r = rows(&ok(&["stammer", "--length", "4096", "--exponent", "4/3"]));
    assert_eq!(r[0], ["bound", "4", "4/3"]);
    let lengths: Vec<usize> = r[1..].iter().map(|h| h[1].parse().unwrap()).collect();
    assert!(lengths.len() >= 5);
    assert!(lengths.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn stammer_rejections() {
    assert!(fails(&["stammer", "--exponent", "1"], 2).contains("--exponent"));
    assert!(fails(&["stammer", "--exponent", "x"], 2).contains("--exponent"));
    let err = fails(&["stammer", "--rule", "a->ab;b->ab", "--seed", "b"], 2);
    assert!(err.contains("--seed"), "{err}");
}

#[test]
fn quadratic_period_two() {
    let r = rows(&ok(&[
        "quadratic",
        "--rule",
        "a->ab;b->aa",
        "--assign",
        "a=1,b=3",
        "--period",
        "2",
    ]));
    assert_eq!(r[0][..4], ["2", "3", "-1", "-3"]);
    assert!(r[0][4].starts_with("1.180460421"));
}

#[test]
fn parse_errors_name_the_field() {
    assert!(fails(&["convergents", "--rule", "a-ab"], 2).contains("--rule"));
    assert!(fails(&["convergents", "--assign", "a=1"], 2).contains("--assign"));
    assert!(fails(&["convergents", "--assign", "a=0,b=1"], 2).contains("--assign"));
    assert!(fails(&["convergents", "--seed", "b"], 2).contains("--seed"));
    assert!(fails(&["convergents", "--depth", "many"], 2).contains("--depth"));
    assert!(fails(&["rcf", "--foldings", "2", "--format", "dot"], 2).contains("--format"));
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let args = ["diagnose", "--depth", "40", "--format", "json"];
    assert_eq!(gcflab(&args).stdout, gcflab(&args).stdout);
    let path = std::env::temp_dir().join(format!("gcflab-cli-{}.csv", std::process::id()));
    let stdout = ok(&[
        "convergents",
        "--depth",
        "8",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written, ok(&["convergents", "--depth", "8"]));
}
