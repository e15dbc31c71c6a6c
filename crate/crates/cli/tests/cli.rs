use std::path::PathBuf;
use std::process::Command;

use serde_json::{json, Value};

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_orbitclass"))
        .args(args)
        .env_remove("ORBITCLASS_CAP_STEPS")
        .output()
        .expect("binary runs");
    let doc = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    });
    (out.status.code().expect("exit code"), doc)
}

fn temp_json(name: &str, v: &Value) -> PathBuf {
    let path =
        std::env::temp_dir().join(format!("orbitclass-cli-{}-{name}.json", std::process::id()));
    std::fs::write(&path, v.to_string()).unwrap();
    path
}

fn multiplicity_table(doc: &Value) -> Vec<(Vec<u64>, String)> {
    let mut rows: Vec<_> = doc
        .as_array()
        .unwrap()
        .iter()
        .map(|m| {
            let lambda = m["lambda"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap())
                .collect();
            (lambda, m["multiplicity"].as_str().unwrap().to_string())
        })
        .collect();
    rows.sort();
    rows
}

#[test]
fn kclass_of_uniform_2_4() {
    let (code, doc) = run(&["kclass", "--uniform", "2", "4"]);
    assert_eq!(code, 0);
    assert_eq!(
        doc["terms"],
        json!([
            {"lambda": [], "t": [0, 0, 0, 0], "coeff": "1"},
            {"lambda": [2, 2], "t": [1, 1, 1, 1], "coeff": "-1"}
        ])
    );
    assert_eq!(doc["text"], "1 * s() + -1 * s(2,2) t1 t2 t3 t4");
}

#[test]
fn rank_and_columns_shorthand_matches_uniform() {
    let (_, a) = run(&["kclass", "--uniform", "2", "5"]);
    let (_, b) = run(&["kclass", "--r", "2", "--n", "5"]);
    assert_eq!(a, b);
}

#[test]
fn tensor_character_of_uniform_2_4() {
    let (code, doc) = run(&["tensor", "--uniform", "2", "4", "--beta", "1,1,1,1"]);
    assert_eq!(code, 0);
    let expected = vec![
        (vec![2, 2], "1".to_string()),
        (vec![3, 1], "3".to_string()),
        (vec![4], "1".to_string()),
    ];
    assert_eq!(multiplicity_table(&doc["character"]), expected);
    assert_eq!(doc["dimension"], "15");
    assert_eq!(doc["oracle"]["agrees"], true);
}

#[test]
fn member_accepts_a_degeneration() {
    let v = temp_json(
        "v",
        &json!({"rows": 3, "cols": 5, "entries": [
            ["1","0","0","1","1"], ["0","1","0","1","1"], ["0","0","1","0","1"]]}),
    );
    let w = temp_json(
        "w",
        &json!({"rows": 3, "cols": 5, "entries": [
            ["1","0","0","1","1"], ["0","1","0","1","2"], ["0","0","0","0","0"]]}),
    );
    let (code, doc) = run(&[
        "member",
        "--v",
        v.to_str().unwrap(),
        "--w",
        w.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(doc, json!({"member": true}));
    let (_, back) = run(&[
        "member",
        "--v",
        w.to_str().unwrap(),
        "--w",
        v.to_str().unwrap(),
    ]);
    assert_eq!(back, json!({"member": false}));
}

#[test]
fn json_job_matches_flags() {
    let job = temp_json(
        "job",
        &json!({"subcommand": "cohom", "input": {"uniform": [2, 4]}}),
    );
    let (code, from_file) = run(&["--json-job", job.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (_, from_flags) = run(&["cohom", "--uniform", "2", "4"]);
    assert_eq!(from_file, from_flags);
    assert_eq!(from_file["gkm"], true);
}

#[test]
fn json_job_rejects_unknown_fields() {
    let job = temp_json(
        "bad",
        &json!({"subcommand": "kclass", "input": {"uniform": [2, 4]}, "extra": 1}),
    );
    let (code, doc) = run(&["--json-job", job.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(doc["code"], "json");
}

#[test]
fn matroid_report_for_a_file_input() {
    let m = temp_json("m", &json!({"n": 3, "rank": 2, "bases": [[1, 2], [1, 3]]}));
    let (code, doc) = run(&[
        "matroid",
        "--matroid",
        m.to_str().unwrap(),
        "--flag",
        "1/1,2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(doc["parallel_classes"], json!([[1], [2, 3]]));
    assert_eq!(doc["dual"]["rank"], 1);
}

#[test]
fn hooks_agree_with_the_engine() {
    let (code, doc) = run(&["hooks", "--mu", "3,1", "--k", "2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["engine_agrees"], true);
    assert_eq!(doc["generating_identity"]["holds"], true);
}

#[test]
fn usage_errors_exit_one_with_json() {
    let (code, doc) = run(&["kclass"]);
    assert_eq!(code, 1);
    assert_eq!(doc["code"], "usage");
    let (code, doc) = run(&["kclass", "--uniform", "2"]);
    assert_eq!(code, 1);
    assert_eq!(doc["code"], "usage");
    let (code, doc) = run(&["kclass", "--uniform", "2", "4", "--mu", "2,2"]);
    assert_eq!(code, 1);
    assert_eq!(doc["code"], "usage");
}

#[test]
fn resource_cap_exits_two() {
    let (code, doc) = run(&["ideal", "--uniform", "2", "5", "--cap-steps", "1"]);
    assert_eq!(code, 2);
    assert_eq!(doc["code"], "resource_limit");
}

#[test]
fn verify_fast_passes_every_criterion() {
    let (code, doc) = run(&["verify", "--level", "fast"]);
    assert_eq!(code, 0);
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["criteria"].as_array().unwrap().len(), 12);
}
