use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_enriqueslab"))
}

#[test]
fn plane_suite_reports_json() {
    let out = bin().args(["--suite", "plane", "--seed", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "enriqueslab/v1");
    assert_eq!(v["suite"], "plane");
    assert_eq!(v["failed"], 0);
    assert_eq!(v["checks"].as_array().unwrap().len(), 2);
}

#[test]
fn usage_errors_exit_2() {
    for args in [&["--suite", "nope"][..], &["--config-index", "168"], &["--bogus"]] {
        let out = bin().args(args).output().unwrap();
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn exports_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let st = bin().args(["--export", "gamma-dot", "--out"]).arg(&dot).status().unwrap();
    assert!(st.success());
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph") && text.contains("\"(123,456)\""));

    let js = dir.path().join("l.json");
    let st = bin().args(["--export", "lattice-json", "--config-index", "5", "--out"]).arg(&js).status().unwrap();
    assert!(st.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&js).unwrap()).unwrap();
    assert_eq!(v["gram10"].as_array().unwrap().len(), 10);
    assert_eq!(v["classes"].as_array().unwrap().len(), 40);

    let out = bin().args(["--export", "gamma-json", "--out", "/nonexistent/x.json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent/x.json"));
}
