use adu::geometry::RankedPoset;
use std::process::{Command, Output};

fn adu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adu")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn verify_algebra_exit_codes() {
    let ok = adu(&["verify-algebra", "--s", "-2", "--t", "-1", "--phi", "const:-1", "--triples", "10", "--samples", "4"]);
    assert_eq!(code(&ok), 0, "{}", String::from_utf8_lossy(&ok.stderr));
    let json: serde_json::Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert!(json.is_object());
    assert_eq!(code(&adu(&["verify-algebra", "--s", "1", "--t", "1"])), 2);
    // lambda^1 is outside the support allowed for (0, 1)
    assert_eq!(code(&adu(&["verify-algebra", "--s", "0", "--t", "1", "--phi", "1:1"])), 2);
    assert_eq!(code(&adu(&["no-such-command"])), 2);
}

#[test]
fn phi_map_inverse_recovers_input() {
    let fwd = adu(&["phi-map", "--s", "0", "--t", "1", "--psi", "2:1; -1:q"]);
    assert_eq!(code(&fwd), 0);
    let fwd: serde_json::Value = serde_json::from_slice(&fwd.stdout).unwrap();
    let image = serde_json::to_string(&fwd["output"]).unwrap();
    let back = adu(&["phi-map", "--s", "0", "--t", "1", "--psi", &image, "--inverse"]);
    assert_eq!(code(&back), 0, "{}", String::from_utf8_lossy(&back.stderr));
    let back: serde_json::Value = serde_json::from_slice(&back.stdout).unwrap();
    assert_eq!(back["output"], fwd["input"]);
}

#[test]
fn export_is_deterministic_and_roundtrips() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let o = adu(&["export", "--family", "attenuated", "--b", "2", "--N", "2", "--M", "2", "--out", path.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
    }
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let p = RankedPoset::from_json(std::str::from_utf8(&ta).unwrap()).unwrap();
    assert_eq!(p.fiber_sizes(), vec![1, 12, 16]);
    assert_eq!(p.to_json().trim_end(), std::str::from_utf8(&ta).unwrap().trim_end());
}

#[test]
fn polar_top_graph_export() {
    let o = adu(&["build-poset", "--family", "polar_top", "--b", "2", "--N", "2", "--eps", "0", "--graph"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let g: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(g["base_vertex"], 0);
    assert!(!g["edges"].as_array().unwrap().is_empty());
}

#[test]
fn size_guard_and_gate() {
    let o = Command::new(env!("CARGO_BIN_EXE_adu"))
        .args(["build-poset", "--family", "alt", "--b", "2", "--N", "4"])
        .env("ADU_SIZE_GUARD", "10")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    assert_eq!(code(&adu(&["verify-module", "--family", "hem", "--b", "3", "--N", "3"])), 4);
}

#[test]
fn verify_module_negative_control_fails() {
    let ok = adu(&["verify-module", "--family", "attenuated", "--b", "2", "--N", "2", "--M", "1"]);
    assert_eq!(code(&ok), 0);
    let wrong = adu(&["verify-module", "--family", "attenuated", "--b", "2", "--N", "2", "--M", "1", "--row", "quad"]);
    assert_eq!(code(&wrong), 1);
}

#[test]
fn table_check_passes() {
    assert_eq!(code(&adu(&["table-check"])), 0);
}
