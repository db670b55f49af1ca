use std::process::Command;

fn dolbeault(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dolbeault")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json(s: &str) -> serde_json::Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn kostant_a2_borel() {
    let (code, out, _) = dolbeault(&["kostant", "--type", "A2", "--levi", "", "--lambda", "0,0"]);
    assert_eq!(code, 0);
    let r = json(&out);
    assert_eq!(r["status"], "pass");
    assert_eq!(r["checks"][0]["certificate"]["betti"], serde_json::json!([1, 2, 2, 1]));
}

#[test]
fn hodge_sl2_degree_two() {
    let (code, out, _) = dolbeault(&["hodge", "--type", "A1", "--levi", "", "--degree", "2"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["checks"][0]["certificate"]["z"], "1/2 H1 H1 + H1");
}

#[test]
fn roots_a1() {
    let (code, out, _) = dolbeault(&["roots", "--type", "A1"]);
    assert_eq!(code, 0);
    let roots = &json(&out)["checks"][0]["certificate"]["root_system"]["positive_roots"];
    assert_eq!(roots.as_array().unwrap().len(), 1);
}

#[test]
fn invalid_input_exits_two() {
    assert_eq!(dolbeault(&["kostant", "--type", "A2", "--lambda", "1,-1"]).0, 2);
    assert_eq!(dolbeault(&["kostant", "--type", "Q9", "--lambda", "0"]).0, 2);
    assert_eq!(dolbeault(&["irrep", "--type", "A2"]).0, 2);
    assert_eq!(dolbeault(&["roots", "--type", "A2", "--levi", "0"]).0, 2);
    assert_eq!(dolbeault(&[]).0, 2);
}

#[test]
fn config_file_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    std::fs::write(&cfg, r#"{"command":"translate","lie_type":"A1","theta":[0],"nu":[1],"lambda":[1]}"#).unwrap();
    let cache = dir.path().join("cache");
    let args = ["--config", cfg.to_str().unwrap(), "--cache-dir", cache.to_str().unwrap()];
    let (code, first, _) = dolbeault(&["translate", args[0], args[1], args[2], args[3]]);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_dir(&cache).unwrap().count(), 1);
    let (_, second, _) = dolbeault(&["translate", args[0], args[1], args[2], args[3]]);
    assert_eq!(first, second);
    let (_, text, _) = dolbeault(&["translate", args[0], args[1], "--format", "text"]);
    assert!(text.starts_with("translation"));
}

#[test]
fn wall_crossing_translation_is_not_applicable() {
    let (code, out, _) = dolbeault(&["translate", "--type", "A1", "--theta", "-1", "--nu", "1", "--lambda", "0"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["checks"][0]["status"], "not-applicable");
}
